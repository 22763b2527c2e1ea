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

#include "cvtele/sweep.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <tuple>

#include "cvtele/fock.h"
#include "cvtele/ideal.h"
#include "cvtele/noisy.h"

namespace cvtele {
namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double to_double(const std::string &s, std::string_view what) {
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw UsageError("invalid number '" + s + "' for " + std::string(what));
    }
    return v;
}

int to_int(const std::string &s, std::string_view what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError("invalid integer '" + s + "' for " + std::string(what));
    }
    return v;
}

std::vector<int> to_int_list(const std::string &s, std::string_view what) {
    std::vector<int> out;
    for (const auto &item : split(s, ',')) out.push_back(to_int(item, what));
    return out;
}

// "a,b,c" or "start:stop:step".
std::vector<double> to_p_list(const std::string &s) {
    if (s.find(':') != std::string::npos) {
        const auto parts = split(s, ':');
        if (parts.size() != 3) throw UsageError("p range must be start:stop:step");
        const double start = to_double(parts[0], "p");
        const double stop = to_double(parts[1], "p");
        const double step = to_double(parts[2], "p");
        if (!(step > 0.0) || stop < start) throw UsageError("p range needs step > 0 and start <= stop");
        const auto count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
        std::vector<double> out;
        for (int i = 0; i < count; ++i) out.push_back(quantize(start + i * step));
        return out;
    }
    std::vector<double> out;
    for (const auto &item : split(s, ',')) out.push_back(quantize(to_double(item, "p")));
    return out;
}

std::vector<double> p_range(double start, double stop, double step) {
    const auto count = static_cast<int>(std::lround((stop - start) / step)) + 1;
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(quantize(start + i * step));
    return out;
}

int max_photons(int channel_dim, int arms) { return channel_dim == 3 ? 2 * arms : arms; }

TransferProfile profile_for(int channel_dim, int arms) {
    return channel_dim == 3 ? transfer_profile_qutrit(arms) : transfer_profile_qubit(arms);
}

Metrics ideal_metrics(InputState state, int channel_dim, int arms, double param) {
    const TransferProfile profile = profile_for(channel_dim, arms);
    const auto window = static_cast<std::size_t>(max_photons(channel_dim, arms));
    switch (state) {
        case InputState::kCoherent: {
            const auto r = teleport_pure(coherent(param, default_cutoff(std::abs(param), window)), profile);
            return {r.success_probability, r.fidelity};
        }
        case InputState::kCat: {
            const auto r = teleport_pure(cat(param, default_cutoff(std::abs(param), window)), profile);
            return {r.success_probability, r.fidelity};
        }
        case InputState::kSqueezed: {
            // Amplitudes above the window never reach the output.
            const auto r = teleport_pure(squeezed_vacuum(param, window), profile);
            return {r.success_probability, r.fidelity};
        }
        case InputState::kTmsv:
            return teleport_tmsv(param, profile);
    }
    throw std::logic_error("unhandled input state");
}

// Evaluates fn(i) for i in [0, count) on `jobs` threads. Each index writes only
// its own slot, so the result does not depend on scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> &fn) {
    std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs) : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto &t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<SweepRecord> evaluate_all(const SweepSpec &spec, std::vector<SweepRecord> points) {
    parallel_for(points.size(), spec.jobs, [&](std::size_t i) { points[i] = evaluate_point(spec, points[i]); });
    return points;
}

int noise_rank(const std::string &name) {
    if (name == "none") return -1;
    return static_cast<int>(parse_noise_kind(name));
}

}  // namespace

std::string_view to_string(SweepMode mode) {
    switch (mode) {
        case SweepMode::kIdeal:
            return "ideal";
        case SweepMode::kNoisy:
            return "noisy";
        case SweepMode::kNegativity:
            return "negativity";
        case SweepMode::kVerify:
            return "verify";
    }
    return "?";
}

std::string_view to_string(InputState state) {
    switch (state) {
        case InputState::kCoherent:
            return "coherent";
        case InputState::kCat:
            return "cat";
        case InputState::kSqueezed:
            return "squeezed";
        case InputState::kTmsv:
            return "tmsv";
    }
    return "?";
}

SweepMode parse_sweep_mode(std::string_view name) {
    for (auto m : {SweepMode::kIdeal, SweepMode::kNoisy, SweepMode::kNegativity, SweepMode::kVerify}) {
        if (to_string(m) == name) return m;
    }
    throw UsageError("unknown mode '" + std::string(name) + "' (expected ideal, noisy, negativity or verify)");
}

InputState parse_input_state(std::string_view name) {
    for (auto s : {InputState::kCoherent, InputState::kCat, InputState::kSqueezed, InputState::kTmsv}) {
        if (to_string(s) == name) return s;
    }
    throw UsageError("unknown state '" + std::string(name) + "' (expected coherent, cat, squeezed or tmsv)");
}

std::vector<double> ParamGrid::points() const {
    std::vector<double> out;
    if (steps == 1) {
        out.push_back(quantize(min));
        return out;
    }
    for (int i = 0; i < steps; ++i) out.push_back(quantize(min + (max - min) * i / (steps - 1)));
    return out;
}

SweepSpec default_spec(SweepMode mode, InputState state) {
    SweepSpec spec;
    spec.mode = mode;
    spec.state = state;
    const bool squeezing = state == InputState::kSqueezed || state == InputState::kTmsv;
    spec.param = squeezing ? ParamGrid{0.0, 0.9, 46} : ParamGrid{0.0, 3.0, 61};
    switch (mode) {
        case SweepMode::kIdeal:
            spec.channel_dims = {2, 3};
            spec.arms = {3, 10};
            break;
        case SweepMode::kNoisy:
            spec.channel_dims = {3};
            spec.arms = {3};
            spec.noise_kinds.assign(kAllNoiseKinds.begin(), kAllNoiseKinds.end());
            spec.p_noise = p_range(0.0, 0.5, 0.01);
            break;
        case SweepMode::kNegativity:
            spec.channel_dims = {3};
            spec.arms = {1};
            spec.noise_kinds.assign(kAllNoiseKinds.begin(), kAllNoiseKinds.end());
            spec.p_noise = p_range(0.0, 0.2, 0.005);
            break;
        case SweepMode::kVerify:
            break;
    }
    return spec;
}

SweepSpec make_spec(const std::map<std::string, std::string> &settings) {
    auto get = [&](const std::string &key) -> const std::string * {
        const auto it = settings.find(key);
        return it == settings.end() ? nullptr : &it->second;
    };
    static const std::vector<std::string> known = {"mode",      "state", "dim",  "n",   "noise", "p",
                                                   "param-min", "param-max", "steps", "jobs"};
    for (const auto &[key, value] : settings) {
        if (std::find(known.begin(), known.end(), key) == known.end()) throw UsageError("unknown setting '" + key + "'");
    }

    const SweepMode mode = get("mode") ? parse_sweep_mode(*get("mode")) : SweepMode::kIdeal;
    const InputState state = get("state") ? parse_input_state(*get("state")) : InputState::kCoherent;
    SweepSpec spec = default_spec(mode, state);

    if (const auto *v = get("dim")) spec.channel_dims = to_int_list(*v, "dim");
    if (const auto *v = get("n")) spec.arms = to_int_list(*v, "n");
    if (const auto *v = get("noise")) {
        spec.noise_kinds.clear();
        for (const auto &name : split(*v, ',')) {
            try {
                spec.noise_kinds.push_back(parse_noise_kind(name));
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        }
    }
    if (const auto *v = get("p")) spec.p_noise = to_p_list(*v);
    if (const auto *v = get("param-min")) spec.param.min = to_double(*v, "param-min");
    if (const auto *v = get("param-max")) spec.param.max = to_double(*v, "param-max");
    if (const auto *v = get("steps")) spec.param.steps = to_int(*v, "steps");
    if (get("param-min") && !get("param-max") && !get("steps")) {
        // A lone --param-min means a single grid point.
        spec.param.max = spec.param.min;
        spec.param.steps = 1;
    }
    if (const auto *v = get("jobs")) spec.jobs = to_int(*v, "jobs");
    validate(spec);
    return spec;
}

std::map<std::string, std::string> parse_config(std::string_view text) {
    std::map<std::string, std::string> out;
    int line_no = 0;
    for (const auto &raw : split(text, '\n')) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

void validate(const SweepSpec &spec) {
    if (spec.mode == SweepMode::kVerify) return;
    if (spec.param.steps < 1) throw UsageError("steps must be >= 1");
    if (spec.param.min > spec.param.max) throw UsageError("param-min must not exceed param-max");
    if (spec.jobs < 0) throw UsageError("jobs must be >= 0");
    for (int n : spec.arms) {
        if (n < 1 || n > kMaxArms) throw UsageError("N must lie in [1, 64]");
    }
    for (int d : spec.channel_dims) {
        if (d != 2 && d != 3) throw UsageError("channel dimension must be 2 or 3");
    }
    for (double p : spec.p_noise) {
        if (!(p >= 0.0 && p <= 1.0)) throw UsageError("noise probabilities must lie in [0, 1]");
    }
    if (spec.mode == SweepMode::kIdeal) {
        if (spec.arms.empty() || spec.channel_dims.empty()) throw UsageError("ideal sweep needs N and dim values");
        if ((spec.state == InputState::kSqueezed || spec.state == InputState::kTmsv) &&
            !(std::abs(spec.param.min) < 1.0 && std::abs(spec.param.max) < 1.0)) {
            throw UsageError("squeezing parameters must satisfy |param| < 1");
        }
    }
    if (spec.mode == SweepMode::kNoisy) {
        if (spec.state != InputState::kCoherent) {
            throw UsageError("unsupported combination: noise is modeled for coherent inputs only, not '" +
                             std::string(to_string(spec.state)) + "'");
        }
        if (std::any_of(spec.channel_dims.begin(), spec.channel_dims.end(), [](int d) { return d != 3; })) {
            throw UsageError("unsupported combination: noise is modeled for qutrit (dim 3) teleporters only");
        }
        if (spec.arms.empty() || spec.noise_kinds.empty() || spec.p_noise.empty()) {
            throw UsageError("noisy sweep needs N, noise and p values");
        }
    }
    if (spec.mode == SweepMode::kNegativity && (spec.noise_kinds.empty() || spec.p_noise.empty())) {
        throw UsageError("negativity sweep needs noise and p values");
    }
}

SweepRecord evaluate_point(const SweepSpec &spec, const SweepRecord &point) {
    SweepRecord r = point;
    switch (spec.mode) {
        case SweepMode::kIdeal: {
            const Metrics m = ideal_metrics(spec.state, point.channel_dim, point.arms, point.param);
            r.fidelity = m.fidelity;
            r.success_prob = m.success_probability;
            break;
        }
        case SweepMode::kNoisy: {
            const Metrics m = noisy_metrics(point.param, point.arms, parse_noise_kind(point.noise_kind), point.p_noise);
            r.fidelity = m.fidelity;
            r.success_prob = m.success_probability;
            break;
        }
        case SweepMode::kNegativity:
            r.fidelity = log_negativity(parse_noise_kind(point.noise_kind), point.p_noise);
            r.success_prob = 0.0;
            break;
        case SweepMode::kVerify:
            throw UsageError("verify mode does not evaluate sweep points");
    }
    return r;
}

std::vector<SweepRecord> run_ideal(const SweepSpec &spec) {
    if (spec.mode != SweepMode::kIdeal) throw UsageError("run_ideal needs mode=ideal");
    validate(spec);
    std::vector<int> dims = spec.channel_dims;
    std::vector<int> arms = spec.arms;
    std::sort(dims.begin(), dims.end());
    std::sort(arms.begin(), arms.end());
    std::vector<SweepRecord> points;
    for (int d : dims) {
        for (int n : arms) {
            for (double x : spec.param.points()) points.push_back({x, n, d, "none", 0.0, 0.0, 0.0});
        }
    }
    return evaluate_all(spec, std::move(points));
}

std::vector<SweepRecord> run_noisy(const SweepSpec &spec) {
    if (spec.mode != SweepMode::kNoisy) throw UsageError("run_noisy needs mode=noisy");
    validate(spec);
    std::vector<SweepRecord> points;
    for (NoiseKind kind : spec.noise_kinds) {
        for (int n : spec.arms) {
            for (double p : spec.p_noise) {
                for (double x : spec.param.points()) points.push_back({x, n, 3, std::string(to_string(kind)), p, 0.0, 0.0});
            }
        }
    }
    std::stable_sort(points.begin(), points.end(), [](const SweepRecord &a, const SweepRecord &b) {
        return std::tuple(noise_rank(a.noise_kind), a.arms, a.p_noise, a.param) <
               std::tuple(noise_rank(b.noise_kind), b.arms, b.p_noise, b.param);
    });
    return evaluate_all(spec, std::move(points));
}

std::vector<SweepRecord> run_negativity(const SweepSpec &spec) {
    if (spec.mode != SweepMode::kNegativity) throw UsageError("run_negativity needs mode=negativity");
    validate(spec);
    std::vector<SweepRecord> points;
    std::vector<NoiseKind> kinds = spec.noise_kinds;
    std::sort(kinds.begin(), kinds.end());
    std::vector<double> ps = spec.p_noise;
    std::sort(ps.begin(), ps.end());
    for (NoiseKind kind : kinds) {
        for (double p : ps) points.push_back({p, 1, 3, std::string(to_string(kind)), p, 0.0, 0.0});
    }
    return evaluate_all(spec, std::move(points));
}

std::vector<SweepRecord> run_sweep(const SweepSpec &spec) {
    switch (spec.mode) {
        case SweepMode::kIdeal:
            return run_ideal(spec);
        case SweepMode::kNoisy:
            return run_noisy(spec);
        case SweepMode::kNegativity:
            return run_negativity(spec);
        case SweepMode::kVerify:
            break;
    }
    throw UsageError("run_sweep: verify is not a sweep");
}

std::string format_number(double value) {
    if (value == 0.0) return "0";  // folds -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

double quantize(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

std::string format_csv(const std::vector<SweepRecord> &records) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto &r : records) {
        out += format_number(r.param) + ',' + std::to_string(r.arms) + ',' + std::to_string(r.channel_dim) + ',' +
               r.noise_kind + ',' + format_number(r.p_noise) + ',' + format_number(r.fidelity) + ',' +
               format_number(r.success_prob) + '\n';
    }
    return out;
}

std::vector<SweepRecord> parse_csv(std::string_view text) {
    const auto lines = split(text, '\n');
    if (lines.empty() || lines[0] != kCsvHeader) throw std::runtime_error("parse_csv: missing or unexpected header");
    std::vector<SweepRecord> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto f = split(lines[i], ',');
        if (f.size() != 7) throw std::runtime_error("parse_csv: line " + std::to_string(i + 1) + " has wrong field count");
        try {
            out.push_back({to_double(f[0], "param"), to_int(f[1], "N"), to_int(f[2], "channel_dim"), f[3],
                           to_double(f[4], "p_noise"), to_double(f[5], "fidelity"), to_double(f[6], "success_prob")});
        } catch (const UsageError &e) {
            throw std::runtime_error("parse_csv: line " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace cvtele
