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

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "pattern.hpp"
#include "scalar.hpp"

namespace ghzpurify {

/// GHZ-diagonal ensemble: one weight per canonical error pattern.
///
/// `parties` names the physical parties the photons belong to (sorted,
/// distinct). Fresh ensembles use 0..n-1; extracted subsystems keep the
/// labels of the parties they came from, which is what entanglement links
/// use to find the shared party.
template <Scalar T>
struct Ensemble {
    int n = 0;
    std::vector<T> weights;
    std::vector<int> parties;

    const T &fidelity() const {
        return weights[0];
    }
    T total() const {
        return std::accumulate(weights.begin(), weights.end(), T(0));
    }
};

template <Scalar T>
struct PurifyOutcome {
    T probability;
    Ensemble<T> ensemble;
};

inline std::vector<int> default_parties(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// Checks shape and sign. Does not require unit sum.
template <Scalar T>
void check_shape(const Ensemble<T> &rho) {
    check_arity(rho.n);
    if (rho.weights.size() != pattern_count(rho.n)) {
        fail(ErrorCode::invalid_argument, "expected " + std::to_string(pattern_count(rho.n)) + " weights, got " +
                                              std::to_string(rho.weights.size()));
    }
    if (rho.parties.size() != static_cast<std::size_t>(rho.n) ||
        !std::is_sorted(rho.parties.begin(), rho.parties.end()) ||
        std::adjacent_find(rho.parties.begin(), rho.parties.end()) != rho.parties.end()) {
        fail(ErrorCode::invalid_argument, "party labels must be n sorted distinct integers");
    }
    for (const T &w : rho.weights) {
        if (!(w >= T(0))) {
            fail(ErrorCode::invalid_argument, "weights must be non-negative");
        }
    }
}

template <Scalar T>
Ensemble<T> make_ensemble(int n, std::vector<T> weights) {
    Ensemble<T> rho{n, std::move(weights), default_parties(n)};
    check_shape(rho);
    return rho;
}

/// Off-zero weights all equal (1 - f0) / (2^(n-1) - 1).
template <Scalar T>
Ensemble<T> symmetric_ensemble(int n, const T &f0) {
    check_arity(n);
    if (!(f0 >= T(0) && f0 <= T(1))) {
        fail(ErrorCode::invalid_argument, "fidelity must lie in [0, 1]");
    }
    auto m = pattern_count(n);
    std::vector<T> w(m, T((T(1) - f0) / T(static_cast<long>(m - 1))));
    w[0] = f0;
    return make_ensemble<T>(n, std::move(w));
}

/// Divides by the weight sum. Throws degenerate_branch on a zero sum.
template <Scalar T>
Ensemble<T> normalized(Ensemble<T> rho) {
    T s = rho.total();
    if (s == T(0)) {
        fail(ErrorCode::degenerate_branch, "branch has zero probability");
    }
    for (T &w : rho.weights) {
        w /= s;
    }
    return rho;
}

/// Throws validation if |sum - 1| > tol (tol = 0 demands exact unit sum).
template <Scalar T>
void check_normalized(const Ensemble<T> &rho, double tol) {
    check_shape(rho);
    T dev = scalar_abs(T(rho.total() - T(1)));
    if (dev > scalar_from_double<T>(tol)) {
        fail(ErrorCode::validation, "weights sum to " + std::to_string(to_double(rho.total())) + ", not 1");
    }
}

template <Scalar T>
void check_same_n(const Ensemble<T> &a, const Ensemble<T> &b) {
    if (a.n != b.n) {
        fail(ErrorCode::invalid_arity, "ensembles have different photon counts");
    }
}

/// Local bit flips on the parties in `flips`: weight at m moves to
/// canonicalize(m ^ flips).
template <Scalar T>
Ensemble<T> relabel(const Ensemble<T> &rho, Pattern flips) {
    check_shape(rho);
    if (flips > full_mask(rho.n)) {
        fail(ErrorCode::invalid_arity, "flip mask has more bits than parties");
    }
    Ensemble<T> out = rho;
    for (Pattern m = 0; m < rho.weights.size(); ++m) {
        out.weights[canonicalize(rho.n, m ^ flips)] = rho.weights[m];
    }
    return out;
}

template <Scalar T>
struct Relabeled {
    Ensemble<T> ensemble;
    Pattern mask;
};

/// Moves the largest weight to pattern 0; ties go to the smallest index.
template <Scalar T>
Relabeled<T> argmax_to_zero(const Ensemble<T> &rho) {
    check_shape(rho);
    Pattern best = 0;
    for (Pattern m = 1; m < rho.weights.size(); ++m) {
        if (rho.weights[m] > rho.weights[best]) {
            best = m;
        }
    }
    return {relabel(rho, best), best};
}

template <Scalar T>
Ensemble<double> to_double(const Ensemble<T> &rho) {
    Ensemble<double> out{rho.n, {}, rho.parties};
    for (const T &w : rho.weights) {
        out.weights.push_back(to_double(w));
    }
    return out;
}

}  // namespace ghzpurify
