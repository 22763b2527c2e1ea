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

// cvtele: parameter sweeps (CSV) and the verification suite.
//
//   cvtele --mode ideal --state coherent --dim 2,3 --n 3,10
//   cvtele --mode noisy --noise bit_flip --n 3 --p 0,0.1,0.3
//   cvtele --mode negativity --p 0:0.2:0.005
//   cvtele --mode verify
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cvtele/ideal.h"
#include "cvtele/sweep.h"
#include "cvtele/verify.h"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cvtele::UsageError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Continuous-variable teleportation through parallel qutrit teleporters"};
    app.option_defaults()->always_capture_default(false);

    // Flags that map onto sweep settings; anything left unset falls back to the
    // config file and then to the built-in grids.
    const std::vector<std::pair<std::string, std::string>> setting_flags = {
        {"mode", "ideal | noisy | negativity | verify"},
        {"state", "coherent | cat | squeezed | tmsv"},
        {"dim", "channel dimensions, comma separated (2, 3)"},
        {"n", "teleporter arm counts, comma separated"},
        {"noise", "bit_flip | phase_flip | depolarizing, comma separated"},
        {"p", "noise probabilities: list a,b,c or range start:stop:step"},
        {"param-min", "first value of the alpha / xi / lambda grid"},
        {"param-max", "last value of the alpha / xi / lambda grid"},
        {"steps", "number of grid points"},
        {"jobs", "worker threads (0 = hardware concurrency)"},
    };
    std::map<std::string, std::string> flag_values;
    for (const auto &[name, help] : setting_flags) {
        app.add_option("--" + name, flag_values[name], help);
    }
    std::string out_path;
    std::string config_path;
    bool unweighted = false;
    app.add_option("--out", out_path, "write CSV here instead of standard output");
    app.add_option("--config", config_path, "key=value settings file; flags take precedence");
    app.add_flag("--unweighted-transfer,--printed-eq8", unweighted,
                 "verify only: test the transfer sum without the 2^-k weight (expected to fail)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::map<std::string, std::string> settings;
        if (!config_path.empty()) settings = cvtele::parse_config(read_file(config_path));
        for (const auto &[name, help] : setting_flags) {
            if (app.count("--" + name) > 0) settings[name] = flag_values[name];
        }

        const cvtele::SweepSpec spec = cvtele::make_spec(settings);
        if (spec.mode == cvtele::SweepMode::kVerify) {
            cvtele::VerifyOptions options;
            options.unweighted_transfer = unweighted;
            return cvtele::run_verify(std::cout, options).passed() ? 0 : kExitVerifyFailed;
        }
        if (unweighted) throw cvtele::UsageError("--unweighted-transfer only applies to --mode verify");

        const std::string csv = cvtele::format_csv(cvtele::run_sweep(spec));
        if (out_path.empty()) {
            std::cout << csv;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw cvtele::UsageError("cannot open output file '" + out_path + "'");
            out << csv;
        }
        return 0;
    } catch (const cvtele::UsageError &e) {
        std::cerr << "cvtele: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "cvtele: error: " << e.what() << '\n';
        return kExitUsage;
    }
}
