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

#ifndef CVTELE_SWEEP_H
#define CVTELE_SWEEP_H

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cvtele/noise.h"

namespace cvtele {

/// Invalid sweep configuration (bad flag value, unsupported combination).
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class SweepMode { kIdeal, kNoisy, kNegativity, kVerify };
enum class InputState { kCoherent, kCat, kSqueezed, kTmsv };

std::string_view to_string(SweepMode mode);
std::string_view to_string(InputState state);
SweepMode parse_sweep_mode(std::string_view name);
InputState parse_input_state(std::string_view name);

/// `steps` evenly spaced points from min to max (just min when steps == 1).
struct ParamGrid {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    std::vector<double> points() const;
};

struct SweepSpec {
    SweepMode mode = SweepMode::kIdeal;
    InputState state = InputState::kCoherent;
    std::vector<int> channel_dims;
    std::vector<int> arms;
    ParamGrid param;
    std::vector<NoiseKind> noise_kinds;
    std::vector<double> p_noise;
    /// Worker threads for grid evaluation; 0 picks the hardware concurrency.
    int jobs = 0;
};

struct SweepRecord {
    double param = 0.0;
    int arms = 0;
    int channel_dim = 0;
    std::string noise_kind = "none";
    double p_noise = 0.0;
    double fidelity = 0.0;
    double success_prob = 0.0;

    bool operator==(const SweepRecord &) const = default;
};

/// Spec for a mode/state pair with the default grids:
///   α in [0, 3] step 0.05; ξ, λ in [0, 0.9] step 0.02;
///   noisy p in [0, 0.5] step 0.01; negativity p in [0, 0.2] step 0.005.
SweepSpec default_spec(SweepMode mode, InputState state = InputState::kCoherent);

/// Builds a spec from `key=value` settings. Keys: mode, state, dim, n, noise,
/// p, param-min, param-max, steps, jobs. Lists are comma separated; p also
/// accepts `start:stop:step`. Throws UsageError.
SweepSpec make_spec(const std::map<std::string, std::string> &settings);

/// Parses `key=value` lines; blank lines and lines starting with '#' are skipped.
std::map<std::string, std::string> parse_config(std::string_view text);

/// Throws UsageError for invalid grids or unsupported mode/state combinations.
void validate(const SweepSpec &spec);

std::vector<SweepRecord> run_ideal(const SweepSpec &spec);
std::vector<SweepRecord> run_noisy(const SweepSpec &spec);
/// Fidelity column carries E_N, success_prob is 0.
std::vector<SweepRecord> run_negativity(const SweepSpec &spec);
/// Dispatches on spec.mode (not kVerify).
std::vector<SweepRecord> run_sweep(const SweepSpec &spec);

/// Recomputes the metrics of a record's grid point under `spec`'s mode and state.
SweepRecord evaluate_point(const SweepSpec &spec, const SweepRecord &point);

/// Rounds to the 12 significant digits used in CSV output.
double quantize(double value);
std::string format_number(double value);

inline constexpr std::string_view kCsvHeader = "param,N,channel_dim,noise_kind,p_noise,fidelity,success_prob";

std::string format_csv(const std::vector<SweepRecord> &records);
/// Throws std::runtime_error on a malformed document.
std::vector<SweepRecord> parse_csv(std::string_view text);

}  // namespace cvtele

#endif  // CVTELE_SWEEP_H
