// Copyright 2026 The cvtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvtele/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "cvtele/fock.h"
#include "cvtele/ideal.h"
#include "cvtele/noisy.h"
#include "cvtele/oracle.h"
#include "cvtele/sweep.h"

namespace cvtele {
namespace {

constexpr double kOracleTol = 1e-10;
constexpr double kIdentityTol = 1e-12;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

CheckResult upper_bound_check(std::string name, double deviation, double tol, std::string detail = {}) {
    return {std::move(name), deviation, tol, deviation <= tol, std::move(detail)};
}

double max_abs_diff(const FockVector &a, const FockVector &b) {
    double worst = 0.0;
    for (std::size_t m = 0; m < std::max(a.size(), b.size()); ++m) worst = std::max(worst, std::abs(a[m] - b[m]));
    return worst;
}

TransferProfile closed_form_qutrit(int arms, const VerifyOptions &options) {
    return options.unweighted_transfer ? transfer_profile_qutrit_unweighted(arms) : transfer_profile_qutrit(arms);
}

CheckResult check_kraus_completeness(const VerifyOptions &options) {
    double worst = 0.0;
    for (NoiseKind kind : kAllNoiseKinds) {
        for (int i = 0; i <= 20; ++i) {
            const KrausSet k = options.kraus(kind, i / 20.0);
            worst = std::max(worst, cvtele::max_abs_diff(k.completeness(), CMatrix::identity(3)));
        }
    }
    return upper_bound_check("kraus_completeness", worst, kIdentityTol, "sum K^dag K vs identity, p in [0,1] step 0.05");
}

CheckResult check_transfer_invariants() {
    double worst = 0.0;
    bool bounded = true;
    for (int n = 1; n <= 20; ++n) {
        const TransferProfile q = transfer_profile_qutrit(n);
        worst = std::max({worst, std::abs(q[0] - 1.0), std::abs(q[1] - 1.0), std::abs(q[2] - 1.0)});
        bounded = bounded && q.max_photons() == static_cast<std::size_t>(2 * n) && q[2 * n + 1] == 0.0;
        for (double a : q.weights) bounded = bounded && a > 0.0 && a <= 1.0 + 1e-12;
        const TransferProfile b = transfer_profile_qubit(n);
        worst = std::max({worst, std::abs(b[0] - 1.0), std::abs(b[1] - 1.0)});
    }
    CheckResult r = upper_bound_check("transfer_invariants", worst, kIdentityTol, "A_0 = A_1 = A_2 = 1, 0 < A_m <= 1, N = 1..20");
    r.passed = r.passed && bounded;
    return r;
}

CheckResult check_transfer_vs_oracle(const std::vector<TransferComparison> &table, const VerifyOptions &options) {
    double worst = 0.0;
    for (const auto &row : table) {
        const double closed = options.unweighted_transfer ? row.unweighted : row.weighted;
        worst = std::max(worst, std::abs(closed - row.oracle));
    }
    return upper_bound_check("transfer_weights_vs_oracle", worst, kOracleTol, "closed-form A_m vs Fock-state probes, N = 1..3");
}

CheckResult check_unweighted_discrepancy(const std::vector<TransferComparison> &table) {
    const auto it = std::find_if(table.begin(), table.end(), [](const auto &r) { return r.arms == 1 && r.photons == 2; });
    CheckResult r{"unweighted_sum_discrepancy", 0.0, 0.5, false, {}};
    if (it == table.end()) return r;
    const double unweighted_dev = std::abs(it->unweighted - it->oracle);
    const double weighted_dev = std::abs(it->weighted - it->oracle);
    r.max_deviation = unweighted_dev;
    r.passed = unweighted_dev > 0.5 && weighted_dev < kOracleTol;
    r.detail = "N=1 m=2: unweighted deviation " + sci(unweighted_dev) + " (ratio " + sci(it->unweighted / it->oracle) +
               "), weighted deviation " + sci(weighted_dev) + "; pass requires unweighted > 0.5 and weighted < 1e-10";
    return r;
}

CheckResult check_ideal_oracle(const VerifyOptions &options) {
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const TransferProfile profile = closed_form_qutrit(n, options);
        std::vector<FockVector> inputs;
        for (double a : {0.5, 1.0, 1.5}) inputs.push_back(coherent(a, 8));
        inputs.push_back(cat(1.0, 8));
        for (const auto &in : inputs) {
            const auto exact = oracle::simulate_ideal_exact(in, n, 2);
            const auto closed = teleport_pure(in, profile);
            worst = std::max({worst, max_abs_diff(exact.amplitudes, closed.amplitudes),
                              std::abs(exact.success_probability - closed.success_probability)});
        }
    }
    return upper_bound_check("ideal_oracle_qutrit", worst, kOracleTol, "coherent 0.5/1.0/1.5 and cat 1.0, N = 1..3");
}

CheckResult check_ideal_oracle_qubit() {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
        for (double a : {0.5, 1.0, 1.5}) {
            const FockVector in = coherent(a, 8);
            const auto exact = oracle::simulate_ideal_exact(in, n, 1);
            const auto closed = teleport_pure(in, transfer_profile_qubit(n));
            worst = std::max(worst, max_abs_diff(exact.amplitudes, closed.amplitudes));
        }
    }
    return upper_bound_check("ideal_oracle_qubit", worst, kOracleTol, "qubit arms, coherent 0.5/1.0/1.5, N = 1..4");
}

CheckResult check_splitter_completion() {
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n) {
        const std::vector<Complex> uniform(n, Complex{1.0 / std::sqrt(static_cast<double>(n))});
        const CMatrix householder = oracle::householder_completion(uniform);
        const FockVector in = coherent(1.0, 8);
        const auto dft = oracle::simulate_ideal_exact(in, n, 2);
        const auto alt = oracle::simulate_ideal_exact(in, n, 2, householder);
        worst = std::max(worst, max_abs_diff(dft.amplitudes, alt.amplitudes));
    }
    return upper_bound_check("splitter_completion_invariance", worst, kIdentityTol, "DFT vs Householder completion, N = 2..4");
}

CheckResult check_noisy_oracle(const VerifyOptions &options) {
    double worst = 0.0;
    auto compare = [&](double alpha, int n, NoiseKind kind, double p) {
        const KrausSet k = options.kraus(kind, p);
        const CMatrix exact = oracle::simulate_noisy_exact(alpha, n, k);
        const OutputDensity closed = recombine(arm_output(arm_input(alpha, n), k), n);
        const double ps_exact = exact.trace().real();
        const FockVector target = coherent(alpha, 2 * n);
        const double f_exact = expectation(exact, target) / ps_exact;
        const Metrics m = noisy_metrics(alpha, n, k);
        worst = std::max({worst, cvtele::max_abs_diff(exact, closed.density), std::abs(ps_exact - m.success_probability),
                          std::abs(f_exact - m.fidelity)});
    };
    for (NoiseKind kind : kAllNoiseKinds) {
        for (int n : {1, 2}) {
            for (double p : {0.05, 0.2}) {
                for (double a : {0.5, 1.0}) compare(a, n, kind, p);
            }
        }
        for (double p : {0.0, 0.05, 0.2}) compare(1.5, 3, kind, p);
    }
    return upper_bound_check("noisy_oracle", worst, kOracleTol, "D_pq, Ps, F vs brute force; N = 1, 2 grid plus N = 3 at alpha 1.5");
}

CheckResult check_noiseless_limit(const VerifyOptions &options) {
    double worst = 0.0;
    for (int n : {1, 2, 3, 5}) {
        const TransferProfile profile = closed_form_qutrit(n, options);
        for (int i = 1; i <= 8; ++i) {
            const double a = 0.25 * i;
            const auto ideal = teleport_pure(coherent(a, default_cutoff(a, 2 * n)), profile);
            for (NoiseKind kind : kAllNoiseKinds) {
                const Metrics m = noisy_metrics(a, n, options.kraus(kind, 0.0));
                worst = std::max({worst, std::abs(m.fidelity - ideal.fidelity),
                                  std::abs(m.success_probability - ideal.success_probability)});
            }
        }
    }
    return upper_bound_check("noiseless_limit", worst, kIdentityTol, "p = 0 noisy pipeline vs ideal closed form");
}

CheckResult check_negativity(const VerifyOptions &options) {
    auto en = [&](NoiseKind kind, double p) { return log_negativity(effective_resource(options.kraus(kind, p))); };
    double worst = 0.0;
    bool ordered = true;
    for (NoiseKind kind : kAllNoiseKinds) worst = std::max(worst, std::abs(en(kind, 0.0) - std::log2(3.0)));
    double prev[3] = {INFINITY, INFINITY, INFINITY};
    for (int i = 0; i <= 40; ++i) {
        const double p = 0.005 * i;
        const double bit = en(NoiseKind::kBitFlip, p);
        const double phase = en(NoiseKind::kPhaseFlip, p);
        const double depol = en(NoiseKind::kDepolarizing, p);
        worst = std::max(worst, std::abs(bit - depol));
        ordered = ordered && phase >= std::max(bit, depol) - 1e-9;
        const double cur[3] = {bit, phase, depol};
        for (int k = 0; k < 3; ++k) {
            ordered = ordered && cur[k] <= prev[k] + 1e-9;
            prev[k] = cur[k];
        }
    }
    CheckResult r = upper_bound_check("log_negativity", worst, 1e-9,
                                      "E_N(0) = log2 3, bit flip == depolarizing, phase flip highest, non-increasing on [0, 0.2]");
    r.passed = r.passed && ordered;
    return r;
}

CheckResult check_resource_physics(const VerifyOptions &options) {
    double worst = 0.0;
    for (NoiseKind kind : kAllNoiseKinds) {
        for (int i = 0; i <= 10; ++i) {
            const CMatrix rho = effective_resource(options.kraus(kind, i / 10.0));
            worst = std::max({worst, hermiticity_defect(rho), std::abs(rho.trace() - 1.0)});
            worst = std::max(worst, -std::min(0.0, hermitian_eigenvalues(rho).front()));
        }
    }
    return upper_bound_check("resource_state_physics", worst, 1e-10, "Hermitian, unit trace, PSD for p in {0, 0.1, ..., 1}");
}

CheckResult check_output_physics(const VerifyOptions &options) {
    double worst = 0.0;
    for (NoiseKind kind : kAllNoiseKinds) {
        for (int n : {1, 2, 3, 5}) {
            for (double p : {0.0, 0.1, 0.3, 0.5}) {
                for (double a : {0.2, 0.5, 1.0, 1.5, 2.5}) {
                    const OutputDensity d = recombine(arm_output(arm_input(a, n), options.kraus(kind, p)), n);
                    const CMatrix rho = d.normalized();
                    worst = std::max({worst, hermiticity_defect(rho), -std::min(0.0, hermitian_eigenvalues(rho).front())});
                }
            }
        }
    }
    return upper_bound_check("output_density_physics", worst, 1e-9, "D/Ps Hermitian and PSD over noisy grid");
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

const CheckResult *VerifyReport::find(const std::string &name) const {
    const auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult &c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

std::vector<TransferComparison> compare_transfer_weights(int max_arms) {
    std::vector<TransferComparison> table;
    for (int n = 1; n <= max_arms; ++n) {
        const TransferProfile weighted = transfer_profile_qutrit(n);
        const TransferProfile unweighted = transfer_profile_qutrit_unweighted(n);
        for (int m = 0; m <= 2 * n; ++m) {
            std::vector<Complex> probe(2 * n + 1);
            probe[m] = 1.0;
            const auto exact = oracle::simulate_ideal_exact(FockVector(probe), n, 2);
            table.push_back({n, m, exact.amplitudes[m].real(), weighted[m], unweighted[m]});
        }
    }
    return table;
}

VerifyReport run_verify(std::ostream &out, const VerifyOptions &options) {
    VerifyReport report;
    report.transfer_table = compare_transfer_weights(3);

    out << "transfer weights A_m: brute-force interferometer vs closed forms\n";
    out << "  N  m   oracle          weighted        |dev|        unweighted      |dev|\n";
    for (const auto &row : report.transfer_table) {
        char line[160];
        std::snprintf(line, sizeof line, "  %d  %d   %-14.12g  %-14.12g  %.3e   %-14.12g  %.3e\n", row.arms, row.photons,
                      row.oracle, row.weighted, std::abs(row.weighted - row.oracle), row.unweighted,
                      std::abs(row.unweighted - row.oracle));
        out << line;
    }
    if (options.unweighted_transfer) out << "closed form under test: unweighted transfer sum\n";
    out << '\n';

    auto &checks = report.checks;
    checks.push_back(check_kraus_completeness(options));
    checks.push_back(check_transfer_invariants());
    checks.push_back(check_transfer_vs_oracle(report.transfer_table, options));
    checks.push_back(check_unweighted_discrepancy(report.transfer_table));
    checks.push_back(check_ideal_oracle(options));
    checks.push_back(check_ideal_oracle_qubit());
    checks.push_back(check_splitter_completion());
    checks.push_back(check_noisy_oracle(options));
    checks.push_back(check_noiseless_limit(options));
    checks.push_back(check_negativity(options));
    checks.push_back(check_resource_physics(options));
    checks.push_back(check_output_physics(options));

    std::size_t passed = 0;
    for (const auto &c : checks) {
        passed += c.passed ? 1 : 0;
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  max_dev=" << sci(c.max_deviation)
            << "  tol=" << sci(c.tolerance) << "  " << c.detail << '\n';
    }
    out << "verify: " << passed << "/" << checks.size() << " checks passed\n";
    return report;
}

}  // namespace cvtele
