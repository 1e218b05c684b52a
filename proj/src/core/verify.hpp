// Copyright 2026 The ghzpurify Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ghzpurify {

struct VerifyOptions {
    std::vector<int> ns{3, 4};
    bool exact = false;
    /// Perturbs one closed-form weight so the suite must fail.
    bool inject_fault = false;
    std::vector<double> grid{0.1, 0.3, 0.5, 0.7, 0.9};
    int asymmetric = 20;
    std::uint64_t seed = 0x67687a70ULL;
    double tolerance = 1e-12;
    bool phase = true;
    bool links = true;
};

struct VerifyRow {
    int n;
    std::string tag;  // class bits, extract-<class bits>, link, phase-identity, phase-residual
    double max_abs_deviation;
    int cases;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool passed = true;
    double tolerance = 0;
};

/// Oracle against closed forms over symmetric grid pairs and fixed-seed
/// asymmetric weight vectors. In exact mode the tolerance is 0.
VerifyReport run_verify(const VerifyOptions &opts);

/// n,class,max_abs_deviation rows (deviation at 6 significant digits).
std::string verify_csv(const VerifyReport &report);

/// Integer weight vectors in 1..1000 drawn from mt19937_64 (raw engine
/// output, so the sequence is identical on every platform).
std::vector<std::vector<std::uint64_t>> asymmetric_vectors(int n, int count, std::uint64_t seed);

}  // namespace ghzpurify
