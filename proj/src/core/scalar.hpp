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

#include <boost/multiprecision/gmp.hpp>
#include <concepts>
#include <string>
#include <string_view>

namespace ghzpurify {

using Rational = boost::multiprecision::mpq_rational;

/// Arithmetic types every kernel is instantiated for: fast floating point for
/// sweeps, exact rationals for boundary predicates and oracle equivalence.
template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

inline double to_double(double x) {
    return x;
}
inline double to_double(const Rational &x) {
    return x.convert_to<double>();
}

/// Parses "0.8", "-1.25e-3", "3/7" or "2" into an exact rational.
Rational parse_rational(std::string_view text);

/// Exact rational of the shortest decimal that round-trips to `x`, so that a
/// literal such as 0.8 read as a double becomes 4/5 rather than its binary
/// approximation.
Rational rational_from_double(double x);

/// "p/q", or "p" for integers.
std::string to_string(const Rational &x);

template <Scalar T>
T scalar_from_double(double x) {
    if constexpr (std::same_as<T, double>) {
        return x;
    } else {
        return rational_from_double(x);
    }
}

template <Scalar T>
T scalar_abs(const T &x) {
    return x < T(0) ? T(-x) : x;
}

}  // namespace ghzpurify
