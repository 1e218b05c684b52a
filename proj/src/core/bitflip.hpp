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

#include <optional>
#include <utility>

#include "ensemble.hpp"

namespace ghzpurify {

/// Unnormalized post-selection weights of one parity class. Entry m holds
/// sum of 1F_e * 2F_f over pairs with canonicalize(e ^ f) = cls and
/// canonical e = m; class 0 is the identity combination.
template <Scalar T>
Ensemble<T> class_weights(const Ensemble<T> &rho1, const Ensemble<T> &rho2, Pattern cls) {
    check_shape(rho1);
    check_shape(rho2);
    check_same_n(rho1, rho2);
    int n = rho1.n;
    if (cls != canonicalize(n, cls)) {
        fail(ErrorCode::invalid_argument, "class pattern must be canonical");
    }
    Ensemble<T> out{n, std::vector<T>(rho1.weights.size(), T(0)), rho1.parties};
    for (Pattern e = 0; e < rho1.weights.size(); ++e) {
        out.weights[e] = rho1.weights[e] * rho2.weights[canonicalize(n, e ^ cls)];
    }
    return out;
}

template <Scalar T>
PurifyOutcome<T> outcome_from_weights(const Ensemble<T> &unnormalized) {
    T p = unnormalized.total();
    return {p, normalized(unnormalized)};
}

/// Identity-combination (all-even / all-odd) success branch.
template <Scalar T>
PurifyOutcome<T> purify_identity(const Ensemble<T> &rho1, const Ensemble<T> &rho2) {
    return outcome_from_weights(class_weights(rho1, rho2, 0));
}

/// Residual ensemble of a cross-combination class, before any relabeling.
template <Scalar T>
PurifyOutcome<T> cross_residual(const Ensemble<T> &rho1, const Ensemble<T> &rho2, Pattern cls) {
    if (cls == 0) {
        fail(ErrorCode::contract_violation, "class 0 is the identity combination; use purify_identity");
    }
    return outcome_from_weights(class_weights(rho1, rho2, cls));
}

template <Scalar T>
PurifyOutcome<T> second_round(const Ensemble<T> &rhoA, const Ensemble<T> &rhoB) {
    return purify_identity(rhoA, rhoB);
}

template <Scalar T>
std::pair<const Ensemble<T> &, const Ensemble<T> &> ordered_by_fidelity(const Ensemble<T> &a, const Ensemble<T> &b) {
    if (b.fidelity() > a.fidelity()) {
        return {b, a};
    }
    return {a, b};
}

template <Scalar T>
bool identity_improves(const Ensemble<T> &rho1, const Ensemble<T> &rho2) {
    auto [a, b] = ordered_by_fidelity(rho1, rho2);
    Ensemble<T> w = class_weights(a, b, 0);
    T p = w.total();
    if (p == T(0)) {
        return false;
    }
    return w.weights[0] / p > a.fidelity();
}

/// Lower bound on 2F_0 above which identity purification raises 1F_0, with
/// the last off-zero weight of rho2 eliminated through normalization:
///   [sum_{m=1}^{M-2} a_m b_m + a_{M-1} (1 - sum_{m=1}^{M-2} b_m)]
///     / (2 - 2 a_0 - sum_{m=1}^{M-2} a_m).
/// Empty when 1F_0 = 1 (nothing can exceed it).
template <Scalar T>
std::optional<T> identity_threshold(const Ensemble<T> &rho1, const Ensemble<T> &rho2) {
    check_same_n(rho1, rho2);
    const auto &a = rho1.weights;
    const auto &b = rho2.weights;
    std::size_t last = a.size() - 1;
    T num(0), sum_b(0), sum_a(0);
    for (std::size_t m = 1; m < last; ++m) {
        num += a[m] * b[m];
        sum_b += b[m];
        sum_a += a[m];
    }
    num += a[last] * (T(1) - sum_b);
    T den = T(2) - T(2) * a[0] - sum_a;
    if (den <= T(0) || a[0] == T(0)) {
        return std::nullopt;
    }
    return T(num / den);
}

template <Scalar T>
bool identity_improves_by_threshold(const Ensemble<T> &rho1, const Ensemble<T> &rho2) {
    auto [a, b] = ordered_by_fidelity(rho1, rho2);
    auto t = identity_threshold(a, b);
    return t.has_value() && b.fidelity() > *t;
}

template <Scalar T>
struct ResidualRound {
    Pattern cls = 0;
    Pattern mask = 0;
    T class_probability;
    Ensemble<T> relabeled;
    PurifyOutcome<T> second;
};

/// Cross residual of `cls`, moved to its argmax, then purified against a
/// copy of itself. Empty when the class branch has zero probability.
template <Scalar T>
std::optional<ResidualRound<T>> residual_round(const Ensemble<T> &rho1, const Ensemble<T> &rho2, Pattern cls) {
    Ensemble<T> w = class_weights(rho1, rho2, cls);
    if (cls == 0) {
        fail(ErrorCode::contract_violation, "class 0 is the identity combination");
    }
    T p = w.total();
    if (p == T(0)) {
        return std::nullopt;
    }
    auto r = argmax_to_zero(normalized(w));
    auto second = second_round(r.ensemble, r.ensemble);
    return ResidualRound<T>{cls, r.mask, p, r.ensemble, second};
}

/// Best post-second-round fidelity over the cross classes.
template <Scalar T>
std::optional<ResidualRound<T>> best_residual_round(const Ensemble<T> &rho1, const Ensemble<T> &rho2) {
    std::optional<ResidualRound<T>> best;
    for (Pattern c = 1; c < rho1.weights.size(); ++c) {
        auto r = residual_round(rho1, rho2, c);
        if (r && (!best || r->second.ensemble.fidelity() > best->second.ensemble.fidelity())) {
            best = std::move(r);
        }
    }
    return best;
}

template <Scalar T>
bool residual_improves(const Ensemble<T> &rho1, const Ensemble<T> &rho2) {
    auto [a, b] = ordered_by_fidelity(rho1, rho2);
    auto best = best_residual_round(a, b);
    return best.has_value() && best->second.ensemble.fidelity() > a.fidelity();
}

template <Scalar T>
struct Choice {
    int index;
    T value;
};

/// Largest of the three candidate F''_0 values for symmetric inputs
/// (index 1: 1F_0 2F_c, 2: 1F_c 2F_0, 3: 1F_c 2F_c'). Lower index wins ties.
/// With both inputs pure no cross branch exists and (1, f1) is returned.
template <Scalar T>
Choice<T> three_choices(int n, const T &f1, const T &f2) {
    check_arity(n);
    if (!(f1 >= T(0) && f1 <= T(1) && f2 >= T(0) && f2 <= T(1))) {
        fail(ErrorCode::invalid_argument, "fidelities must lie in [0, 1]");
    }
    T M(static_cast<long>(pattern_count(n)));
    T den = f1 + f2 - M * f1 * f2 + M - T(2);
    if (den == T(0)) {
        return {1, f1};
    }
    T c1 = (M - T(1)) * f1 * (T(1) - f2) / den;
    T c2 = (M - T(1)) * f2 * (T(1) - f1) / den;
    T c3 = (T(1) - f1) * (T(1) - f2) / den;
    Choice<T> best{1, c1};
    if (c2 > best.value) {
        best = {2, c2};
    }
    if (c3 > best.value) {
        best = {3, c3};
    }
    return best;
}

}  // namespace ghzpurify
