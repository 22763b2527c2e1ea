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

#ifndef CVTELE_VERIFY_H
#define CVTELE_VERIFY_H

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cvtele/noise.h"

namespace cvtele {

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

/// One row of the transfer-weight comparison: brute-force interferometer vs
/// the weighted closed form vs the same sum without the 2^{-k} weight.
struct TransferComparison {
    int arms = 0;
    int photons = 0;
    double oracle = 0.0;
    double weighted = 0.0;
    double unweighted = 0.0;
};

struct VerifyOptions {
    /// Use the unweighted transfer sum as the closed form under test. The
    /// oracle-equivalence checks are then expected to fail.
    bool unweighted_transfer = false;
    /// Kraus source for every noise check; tests swap in corrupted sets.
    std::function<KrausSet(NoiseKind, double)> kraus = kraus_set;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<TransferComparison> transfer_table;

    bool passed() const;
    const CheckResult *find(const std::string &name) const;
};

/// A_m measured by sending |m> through the brute-force interferometer.
std::vector<TransferComparison> compare_transfer_weights(int max_arms);

/// Runs the invariant and oracle-equivalence suite and writes a report.
VerifyReport run_verify(std::ostream &out, const VerifyOptions &options = {});

}  // namespace cvtele

#endif  // CVTELE_VERIFY_H
