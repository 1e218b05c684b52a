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

#include "error.hpp"
#include "pattern.hpp"
#include "scalar.hpp"

namespace ghzpurify {

/// Two-weight model after the global Hadamard: p0 on |Psi+>, 1 - p0 on |Psi->.
template <Scalar T>
struct PhaseEnsemble {
    int n = 0;
    T p0;

    T p1() const {
        return T(1) - p0;
    }
};

template <Scalar T>
struct PhaseOutcome {
    T probability;
    PhaseEnsemble<T> ensemble;
};

template <Scalar T>
PhaseEnsemble<T> make_phase_ensemble(int n, const T &p0) {
    check_arity(n);
    if (!(p0 >= T(0) && p0 <= T(1))) {
        fail(ErrorCode::invalid_argument, "p0 must lie in [0, 1]");
    }
    return {n, p0};
}

namespace detail {

template <Scalar T>
PhaseOutcome<T> phase_branch(int n, const T &keep, const T &flip) {
    T p = keep + flip;
    if (p == T(0)) {
        fail(ErrorCode::degenerate_branch, "branch has zero probability");
    }
    return {p, {n, T(keep / p)}};
}

template <Scalar T>
void check_pair(const PhaseEnsemble<T> &a, const PhaseEnsemble<T> &b) {
    make_phase_ensemble(a.n, a.p0);
    make_phase_ensemble(b.n, b.p0);
    if (a.n != b.n) {
        fail(ErrorCode::invalid_arity, "ensembles have different photon counts");
    }
}

}  // namespace detail

/// Even number of odd parity outcomes.
template <Scalar T>
PhaseOutcome<T> phase_identity(const PhaseEnsemble<T> &r1, const PhaseEnsemble<T> &r2) {
    detail::check_pair(r1, r2);
    return detail::phase_branch(r1.n, T(r1.p0 * r2.p0), T(r1.p1() * r2.p1()));
}

/// Odd number of odd parity outcomes.
template <Scalar T>
PhaseOutcome<T> phase_residual(const PhaseEnsemble<T> &r1, const PhaseEnsemble<T> &r2) {
    detail::check_pair(r1, r2);
    return detail::phase_branch(r1.n, T(r1.p0 * r2.p1()), T(r1.p1() * r2.p0));
}

template <Scalar T>
PhaseOutcome<T> phase_second_round(const PhaseEnsemble<T> &r) {
    return phase_identity(r, r);
}

/// 1P0/(1-1P0) > 2P0^2/(1-2P0)^2, cross-multiplied; inputs are reordered so
/// the first is the larger. 1P0 = 1 is excluded since nothing exceeds it.
template <Scalar T>
bool phase_residual_improves(const T &p1_in, const T &p2_in) {
    T p1 = p1_in > p2_in ? p1_in : p2_in;
    T p2 = p1_in > p2_in ? p2_in : p1_in;
    return p1 < T(1) && p1 * (T(1) - p2) * (T(1) - p2) > p2 * p2 * (T(1) - p1);
}

/// Direct evaluation of the residual route: P''' > 1P0, with 1P0 the larger.
template <Scalar T>
bool phase_residual_improves_direct(int n, const T &p1_in, const T &p2_in) {
    T p1 = p1_in > p2_in ? p1_in : p2_in;
    T p2 = p1_in > p2_in ? p2_in : p1_in;
    PhaseEnsemble<T> a{n, p1}, b{n, p2};
    if (p1 * (T(1) - p2) + (T(1) - p1) * p2 == T(0)) {
        return false;
    }
    auto r = phase_residual(a, b);
    return phase_second_round(r.ensemble).ensemble.p0 > p1;
}

}  // namespace ghzpurify
