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

#include "cvtele/oracle.h"

#include <cmath>
#include <random>

#include "cvtele/ideal.h"
#include "cvtele/noisy.h"
#include "gtest/gtest.h"
#include "test_oracles.h"

using namespace cvtele;
using namespace cvtele::oracle;

namespace {

double max_abs_diff(const FockVector &a, const FockVector &b) {
    double worst = 0.0;
    for (std::size_t m = 0; m < std::max(a.size(), b.size()); ++m) worst = std::max(worst, std::abs(a[m] - b[m]));
    return worst;
}

MultimodeState random_state(std::mt19937 &rng, int modes, int photons) {
    std::normal_distribution<double> g;
    MultimodeState s(modes, photons);
    ref::for_each_tuple(modes, photons, [&](const std::vector<int> &t) {
        if (total_photons(t) <= photons) s.add(t, Complex(g(rng), g(rng)));
    });
    return s;
}

}  // namespace

TEST(oracle, splitter_matrix) {
    EXPECT_EQ(splitter_matrix(1), (CMatrix{{1.0}}));
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_LE(cvtele::max_abs_diff(splitter_matrix(2), CMatrix{{h, h}, {h, -h}}), 1e-15);
    for (int n = 1; n <= 6; ++n) {
        const CMatrix u = splitter_matrix(n);
        EXPECT_LE(cvtele::max_abs_diff(u * u.adjoint(), CMatrix::identity(n)), 1e-13);
        for (int k = 0; k < n; ++k) EXPECT_NEAR(std::abs(u(0, k) - 1.0 / std::sqrt(n)), 0.0, 1e-15);
    }
}

TEST(oracle, householder_completion) {
    std::mt19937 rng(8);
    for (int n = 1; n <= 5; ++n) {
        CMatrix col = ref::random_matrix(rng, n, 1);
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += std::norm(col(i, 0));
        std::vector<Complex> v(n);
        for (int i = 0; i < n; ++i) v[i] = col(i, 0) / std::sqrt(norm);
        const CMatrix h = householder_completion(v);
        EXPECT_LE(cvtele::max_abs_diff(h * h.adjoint(), CMatrix::identity(n)), 1e-13);
        for (int i = 0; i < n; ++i) EXPECT_NEAR(std::abs(h(i, 0) - v[i]), 0.0, 1e-14);
    }
    EXPECT_THROW(householder_completion({1.0, 1.0}), std::invalid_argument);
}

TEST(oracle, splitter_on_simple_states) {
    MultimodeState vac(2, 2);
    vac.add({0, 0}, 1.0);
    const MultimodeState vac_out = apply_splitter(vac, splitter_matrix(2));
    EXPECT_EQ(vac_out.amplitudes().size(), 1u);
    EXPECT_NEAR(std::abs(vac_out.amplitude({0, 0}) - 1.0), 0.0, 1e-15);

    MultimodeState one(2, 2);
    one.add({1, 0}, 1.0);
    const MultimodeState out = apply_splitter(one, splitter_matrix(2));
    EXPECT_NEAR(out.amplitude({1, 0}).real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(out.amplitude({0, 1}).real(), 1.0 / std::sqrt(2.0), 1e-15);

    // Hong-Ou-Mandel: |11> -> (|20> - |02>)/sqrt(2).
    MultimodeState pair(2, 2);
    pair.add({1, 1}, 1.0);
    const MultimodeState hom = apply_splitter(pair, splitter_matrix(2));
    EXPECT_NEAR(std::abs(hom.amplitude({1, 1})), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(hom.amplitude({2, 0})), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::abs(hom.amplitude({0, 2})), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(oracle, splitter_preserves_photons_and_norm) {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 5; ++trial) {
        const MultimodeState s = random_state(rng, 3, 4);
        const MultimodeState out = apply_splitter(s, splitter_matrix(3));
        EXPECT_NEAR(out.norm_squared(), s.norm_squared(), 1e-12 * s.norm_squared());
        // Per-photon-number sector norms are conserved too.
        for (int m = 0; m <= 4; ++m) {
            double before = 0.0;
            double after = 0.0;
            for (const auto &[occ, a] : s.amplitudes()) before += total_photons(occ) == m ? std::norm(a) : 0.0;
            for (const auto &[occ, a] : out.amplitudes()) after += total_photons(occ) == m ? std::norm(a) : 0.0;
            EXPECT_NEAR(before, after, 1e-12 * s.norm_squared());
        }
        const MultimodeState back = apply_splitter(out, splitter_matrix(3).adjoint());
        for (const auto &[occ, a] : s.amplitudes()) EXPECT_NEAR(std::abs(back.amplitude(occ) - a), 0.0, 1e-12);
    }
}

TEST(oracle, photon_cap_is_enforced) {
    MultimodeState s(2, 3);
    EXPECT_THROW(s.add({2, 2}, 1.0), std::length_error);
    EXPECT_THROW(s.add({1}, 1.0), std::invalid_argument);
    std::vector<Complex> big(10);
    big[9] = 1.0;
    EXPECT_THROW(simulate_ideal_exact(FockVector(big), 2, 2), std::length_error);
    EXPECT_THROW(simulate_ideal_exact(coherent(1.0, 4), 5, 2), std::length_error);
    EXPECT_THROW(simulate_noisy_exact(1.0, 4, kraus_set(NoiseKind::kBitFlip, 0.1)), std::length_error);
}

TEST(oracle, projections_only_remove_weight) {
    const FockVector in = coherent(1.3, 8);
    MultimodeState s(3, 8);
    for (int m = 0; m <= 6; ++m) s.add({m, 0, 0}, in[m]);
    const double before = s.norm_squared();
    s = apply_splitter(s, splitter_matrix(3));
    const MultimodeState truncated = truncate_per_mode(s, 2);
    EXPECT_LE(truncated.norm_squared(), s.norm_squared() + 1e-14);
    const MultimodeState back = apply_splitter(truncated, splitter_matrix(3).adjoint());
    const FockVector port = project_onto_first_mode(back, 6);
    EXPECT_LE(port.norm_squared(), back.norm_squared() + 1e-14);
    EXPECT_LE(back.norm_squared(), before + 1e-14);
}

TEST(oracle, single_arm_is_truncation) {
    const auto r = simulate_ideal_exact(coherent(1.0, 6), 1, 2);
    EXPECT_NEAR(r.success_probability, 2.5 * std::exp(-1.0), 1e-10);
}

TEST(oracle, ideal_matches_weighted_closed_form) {
    for (int n : {2, 3}) {
        for (double a : {0.5, 1.0, 1.5}) {
            const auto r = simulate_ideal_exact(coherent(a, 8), n, 2);
            for (int m = 0; m <= 2 * n; ++m) {
                const Complex weighted = ref::direct_output_coeff(a, n, m, 0.5);
                const Complex unweighted = ref::direct_output_coeff(a, n, m, 1.0);
                EXPECT_NEAR(std::abs(r.amplitudes[m] - weighted), 0.0, 1e-10);
                if (m >= 2) {
                    // The unweighted sum overshoots by Σ_k 1 / Σ_k 2^{-k} > 1.
                    EXPECT_GT(std::abs(unweighted), std::abs(r.amplitudes[m]) * (1.0 + 1e-3));
                }
            }
        }
    }
}

TEST(oracle, generic_state_consistency) {
    const FockVector in = cat(1.0, 8);
    const auto exact = simulate_ideal_exact(in, 3, 2);
    const auto closed = teleport_pure(in, transfer_profile_qutrit(3));
    EXPECT_NEAR(exact.success_probability, closed.success_probability, 1e-10);
    const double f_exact = std::norm(inner(in, exact.amplitudes)) / exact.success_probability;
    EXPECT_NEAR(f_exact, closed.fidelity, 1e-10);
    EXPECT_LE(max_abs_diff(exact.amplitudes, closed.amplitudes), 1e-10);
}

TEST(oracle, qubit_arms) {
    for (int n = 1; n <= 4; ++n) {
        const FockVector in = squeezed_vacuum(0.4, 8);
        const auto exact = simulate_ideal_exact(in, n, 1);
        EXPECT_LE(max_abs_diff(exact.amplitudes, teleport_pure(in, transfer_profile_qubit(n)).amplitudes), 1e-12);
    }
}

TEST(oracle, output_independent_of_splitter_completion) {
    for (int n = 2; n <= 4; ++n) {
        const std::vector<Complex> first(n, Complex{1.0 / std::sqrt(static_cast<double>(n))});
        const auto dft = simulate_ideal_exact(coherent(Complex(0.8, 0.3), 8), n, 2);
        const auto hh = simulate_ideal_exact(coherent(Complex(0.8, 0.3), 8), n, 2, householder_completion(first));
        EXPECT_LE(max_abs_diff(dft.amplitudes, hh.amplitudes), 1e-12);
    }
    const KrausSet k = kraus_set(NoiseKind::kDepolarizing, 0.3);
    const std::vector<Complex> first(3, Complex{1.0 / std::sqrt(3.0)});
    EXPECT_LE(cvtele::max_abs_diff(simulate_noisy_exact(0.9, 3, k), simulate_noisy_exact(0.9, 3, k, householder_completion(first))),
              1e-12);
}

TEST(oracle, noisy_noiseless_is_rank_one) {
    for (int n = 1; n <= 3; ++n) {
        const double a = 0.7;
        const CMatrix d = simulate_noisy_exact(a, n, kraus_set(NoiseKind::kBitFlip, 0.0));
        const auto pure = simulate_ideal_exact(coherent(a, 8), n, 2);
        EXPECT_LE(cvtele::max_abs_diff(d, CMatrix::outer(pure.amplitudes.coeffs(), pure.amplitudes.coeffs())), 1e-12);
    }
}

TEST(oracle, noisy_hand_value) {
    const CMatrix d = simulate_noisy_exact(0.0, 2, kraus_set(NoiseKind::kBitFlip, 0.1));
    EXPECT_NEAR(d(0, 0).real(), 0.81, 1e-12);
    EXPECT_NEAR(d(1, 1).real(), 0.045, 1e-12);
}

TEST(oracle, noisy_matches_closed_form_grid) {
    for (NoiseKind kind : kAllNoiseKinds) {
        for (int n = 1; n <= 3; ++n) {
            for (double p : {0.0, 0.05, 0.2}) {
                for (double a : {0.5, 1.0, 1.5}) {
                    const KrausSet k = kraus_set(kind, p);
                    const CMatrix exact = simulate_noisy_exact(a, n, k);
                    const OutputDensity closed = recombine(arm_output(arm_input(a, n), k), n);
                    EXPECT_LE(cvtele::max_abs_diff(exact, closed.density), 1e-10)
                        << to_string(kind) << " N=" << n << " p=" << p << " alpha=" << a;
                }
            }
        }
    }
}

TEST(oracle, density_stays_hermitian) {
    MultimodeState s(2, 4);
    s.add({1, 0}, Complex(0.6, 0.1));
    s.add({0, 2}, Complex(-0.2, 0.7));
    MultimodeDensity rho = MultimodeDensity::from_pure(s);
    rho = apply_local_channel(rho, 1, kraus_set(NoiseKind::kDepolarizing, 0.6));
    rho = apply_splitter(rho, splitter_matrix(2));
    EXPECT_LE(rho.hermiticity_defect(), 1e-12);
    EXPECT_NEAR(std::abs(rho.trace() - s.norm_squared()), 0.0, 1e-12);
}
