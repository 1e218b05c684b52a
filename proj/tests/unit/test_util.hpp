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
#include <random>
#include <string>
#include <vector>

#include "ensemble.hpp"
#include "error.hpp"
#include "scalar.hpp"

namespace ghzpurify::testing {

inline Rational Q(long p, long q = 1) {
    return Rational(p) / Rational(q);
}

inline Rational Q(const std::string &text) {
    return parse_rational(text);
}

/// Random normalized ensemble with integer weights in 1..1000 (exact in
/// both scalar modes).
template <Scalar T>
Ensemble<T> random_ensemble(int n, std::mt19937_64 &rng, bool allow_zero = false) {
    std::vector<T> w(pattern_count(n));
    T sum(0);
    for (auto &x : w) {
        long v = static_cast<long>(rng() % 1000) + (allow_zero ? 0 : 1);
        x = T(v);
        sum += x;
    }
    if (sum == T(0)) {
        w[0] = T(1);
        sum = T(1);
    }
    for (auto &x : w) {
        x /= sum;
    }
    return make_ensemble<T>(n, std::move(w));
}

#define EXPECT_THROW_CODE(stmt, expected_code)                                 \
    do {                                                                       \
        try {                                                                  \
            stmt;                                                              \
            ADD_FAILURE() << "no exception from " #stmt;                       \
        } catch (const ::ghzpurify::Error &e_) {                               \
            EXPECT_EQ(e_.code(), expected_code) << e_.what();                  \
        }                                                                      \
    } while (0)

}  // namespace ghzpurify::testing
