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
#include <string>
#include <vector>

#include "link.hpp"

namespace ghzpurify {

// Closed forms for two symmetric three-photon ensembles with leading weights
// f1 and f2. Every quantity here is also reachable by composing the branch
// operations; see the composed reports below.
namespace symmetric3 {

template <Scalar T>
T yield_identity(const T &f1, const T &f2) {
    return (T(1) - f1 - f2 + T(4) * f1 * f2) / T(3);
}

template <Scalar T>
T p_cross(const T &f1, const T &f2) {
    return (T(2) + f1 + f2 - T(4) * f1 * f2) / T(3);
}

/// Empty at the two corners where the identity branch vanishes.
template <Scalar T>
std::optional<T> f_prime(const T &f1, const T &f2) {
    T den = T(1) - f1 - f2 + T(4) * f1 * f2;
    if (den == T(0)) {
        return std::nullopt;
    }
    return T(T(3) * f1 * f2 / den);
}

// Recycled fidelities below fall back to f1 when no cross combination
// occurs (both inputs pure).

template <Scalar T>
T f_b(const T &f1, const T &f2) {
    if (p_cross(f1, f2) == T(0)) {
        return f1;
    }
    return T(3) * (f1 + f2 - T(2) * f1 * f2) / (f1 + f2 - T(4) * f1 * f2 + T(2));
}

template <Scalar T>
T f_t(const T &f1, const T &f2) {
    T b = f_b(f1, f2);
    return b * b;
}

template <Scalar T>
T f_double_prime(const T &f1, const T &f2) {
    return three_choices(3, f1, f2).value;
}

/// Second-round fidelity: (max of u, v, w)^2 / (u^2 + v^2 + 2 w^2) with
/// u = 3 f1 (1-f2), v = 3 f2 (1-f1), w = (1-f1)(1-f2).
template <Scalar T>
T f_triple(const T &f1, const T &f2) {
    if (p_cross(f1, f2) == T(0)) {
        return f1;
    }
    T u = T(3) * f1 * (T(1) - f2);
    T v = T(3) * f2 * (T(1) - f1);
    T w = (T(1) - f1) * (T(1) - f2);
    T top = u;
    if (v > top) {
        top = v;
    }
    if (w > top) {
        top = w;
    }
    return top * top / (u * u + v * v + T(2) * w * w);
}

template <Scalar T>
T yield_link(const T &f1, const T &f2) {
    return p_cross(f1, f2) / T(2);
}

template <Scalar T>
T yield_p1(const T &f1, const T &f2) {
    return (T(2) - (f1 + f2) / T(2) + T(2) * f1 * f2) / T(3);
}

// F' * Y_i = f1 f2 holds everywhere, which keeps the averages defined at
// the corners where F' is not.

template <Scalar T>
T fidelity_p1(const T &f1, const T &f2) {
    return (f1 * f2 + f_t(f1, f2) * yield_link(f1, f2)) / yield_p1(f1, f2);
}

/// Probability of one cross class (all three are equal).
template <Scalar T>
T yield_class(const T &f1, const T &f2) {
    return (f1 * (T(1) - f2) + f2 * (T(1) - f1)) / T(3) + T(2) * (T(1) - f1) * (T(1) - f2) / T(9);
}

/// Sum of squared unnormalized class weights.
template <Scalar T>
T p_prime_class(const T &f1, const T &f2) {
    T a = f1 * (T(1) - f2) / T(3);
    T b = f2 * (T(1) - f1) / T(3);
    T c = (T(1) - f1) * (T(1) - f2) / T(9);
    return a * a + b * b + T(2) * c * c;
}

template <Scalar T>
T yield_p1prime(const T &f1, const T &f2) {
    return yield_identity(f1, f2) + T(3) / T(2) * yield_class(f1, f2) * p_prime_class(f1, f2);
}

template <Scalar T>
T fidelity_p1prime(const T &f1, const T &f2) {
    T recycled = T(3) / T(2) * yield_class(f1, f2) * p_prime_class(f1, f2);
    return (f1 * f2 + f_triple(f1, f2) * recycled) / yield_p1prime(f1, f2);
}

}  // namespace symmetric3

template <Scalar T>
struct ReportComponent {
    std::string label;
    T probability;
    std::optional<T> fidelity;  // empty on zero-probability branches
};

template <Scalar T>
struct SchemeReport {
    std::string scheme;
    T yield;
    T average_fidelity;
    std::vector<ReportComponent<T>> components;
};

namespace detail {

template <Scalar T>
void finish_report(SchemeReport<T> &r) {
    r.yield = T(0);
    T acc(0);
    for (const auto &c : r.components) {
        r.yield += c.probability;
        if (c.fidelity) {
            acc += c.probability * *c.fidelity;
        }
    }
    r.average_fidelity = acc / r.yield;
}

template <Scalar T>
void order_inputs(T &f1, T &f2) {
    if (f2 > f1) {
        std::swap(f1, f2);
    }
}

template <Scalar T>
std::optional<T> branch_fidelity(const Ensemble<T> &unnormalized) {
    T p = unnormalized.total();
    if (p == T(0)) {
        return std::nullopt;
    }
    return T(unnormalized.weights[0] / p);
}

}  // namespace detail

/// Identity branch plus recycled cross combinations via the link (half of
/// the cross probability comes back as three-photon systems).
template <Scalar T>
SchemeReport<T> p1_report(T f1, T f2) {
    detail::order_inputs(f1, f2);
    auto r1 = symmetric_ensemble(3, f1);
    auto r2 = symmetric_ensemble(3, f2);
    auto id = class_weights(r1, r2, 0);
    T cross(0);
    for (Pattern c = 1; c < 4; ++c) {
        cross += class_weights(r1, r2, c).total();
    }
    auto linked = link_three_party(r1, r2);
    SchemeReport<T> r{"P1", T(0), T(0), {}};
    r.components.push_back({"identity", id.total(), detail::branch_fidelity(id)});
    r.components.push_back({"link", T(cross / T(2)), linked ? std::optional<T>(linked->fidelity()) : std::optional<T>(f1)});
    detail::finish_report(r);
    return r;
}

/// Identity branch plus each cross class purified once more against a copy
/// of itself. Class k contributes Y_k * P'_k / 2 with P'_k the sum of its
/// squared unnormalized weights; cross residuals of that second round are
/// not counted.
template <Scalar T>
SchemeReport<T> p1prime_report(T f1, T f2) {
    detail::order_inputs(f1, f2);
    auto r1 = symmetric_ensemble(3, f1);
    auto r2 = symmetric_ensemble(3, f2);
    auto id = class_weights(r1, r2, 0);
    SchemeReport<T> r{"P1'", T(0), T(0), {}};
    r.components.push_back({"identity", id.total(), detail::branch_fidelity(id)});
    for (Pattern c = 1; c < 4; ++c) {
        auto round = residual_round(r1, r2, c);
        std::string label = class_label(3, c);
        if (!round) {
            r.components.push_back({label, T(0), std::nullopt});
            continue;
        }
        T y = round->class_probability;
        T p_prime = round->second.probability * y * y;
        r.components.push_back({label, T(y * p_prime / T(2)), round->second.ensemble.fidelity()});
    }
    detail::finish_report(r);
    return r;
}

template <Scalar T>
struct Tradeoff {
    T f_triple;  // residual route after R rounds
    T f_t;       // link route after R-2 rounds of two-photon purification
};

/// Both recycled fidelities at equal resource use (2^(R-1) pairs), R in 2..6.
template <Scalar T>
Tradeoff<T> multiround_tradeoff(T f1, T f2, int rounds) {
    if (rounds < 2 || rounds > 6) {
        fail(ErrorCode::invalid_argument, "rounds must lie in 2..6, got " + std::to_string(rounds));
    }
    detail::order_inputs(f1, f2);
    auto r1 = symmetric_ensemble(3, f1);
    auto r2 = symmetric_ensemble(3, f2);
    auto linked = link_three_party(r1, r2);
    if (!linked) {
        return {f1, f1};
    }
    std::optional<T> best;
    for (Pattern c = 1; c < 4; ++c) {
        if (class_weights(r1, r2, c).total() == T(0)) {
            continue;
        }
        auto ens = argmax_to_zero(cross_residual(r1, r2, c).ensemble).ensemble;
        for (int k = 0; k < rounds - 1; ++k) {
            ens = second_round(ens, ens).ensemble;
        }
        if (!best || ens.fidelity() > *best) {
            best = ens.fidelity();
        }
    }
    auto ab = extract_subsystem(r1, r2, 1, {0, 1}).ensemble;
    auto ac = extract_subsystem(r1, r2, 2, {0, 2}).ensemble;
    for (int k = 0; k < rounds - 2; ++k) {
        ab = purify_identity(ab, ab).ensemble;
        ac = purify_identity(ac, ac).ensemble;
    }
    return {*best, entanglement_link(ab, ac).ensemble.fidelity()};
}

enum class Preferred { p1, p1prime, tie };

inline const char *preferred_name(Preferred p) {
    switch (p) {
        case Preferred::p1:
            return "P1";
        case Preferred::p1prime:
            return "P1'";
        case Preferred::tie:
            return "tie";
    }
    return "?";
}

/// `tie_tolerance` applies to double arithmetic only; rationals compare exactly.
template <Scalar T>
Preferred compare_schemes(const T &f1, const T &f2, int rounds, double tie_tolerance = 1e-12) {
    auto t = multiround_tradeoff(f1, f2, rounds);
    T diff = t.f_triple - t.f_t;
    T tol = std::same_as<T, double> ? T(tie_tolerance) : T(0);
    if (scalar_abs(diff) <= tol) {
        return Preferred::tie;
    }
    return diff > T(0) ? Preferred::p1prime : Preferred::p1;
}

enum class RegionPredicate {
    eq7,
    fig3,
    fig4_fprime,
    fig4_ft,
    fig5_choice,
    fig6_fdprime,
    fig6_ftprime,
    fig7,
    fig8,
    fig9,
    fig10,
    fig11,
    fig12,
};

/// Throws invalid_argument on unknown ids.
RegionPredicate parse_predicate(const std::string &id);
const char *predicate_id(RegionPredicate p);

/// Signed margin for region predicates (positive inside), the plotted value
/// for value maps. Empty where undefined. `rounds` only matters for fig10.
template <Scalar T>
std::optional<T> region_value(RegionPredicate p, const T &f1, const T &f2, int rounds = 2) {
    using namespace symmetric3;
    switch (p) {
        case RegionPredicate::eq7: {
            auto fp = f_prime(f1, f2);
            return fp ? std::optional<T>(*fp - f1) : std::nullopt;
        }
        case RegionPredicate::fig3:
            return f_t(f1, f2) - f1;
        case RegionPredicate::fig4_fprime:
            return f_prime(f1, f2);
        case RegionPredicate::fig4_ft:
            return f_t(f1, f2);
        case RegionPredicate::fig5_choice:
            return T(three_choices(3, f1, f2).index);
        case RegionPredicate::fig6_fdprime:
            return f_double_prime(f1, f2);
        case RegionPredicate::fig6_ftprime:
            return f_triple(f1, f2);
        case RegionPredicate::fig7:
            return f_triple(f1, f2) - f1;
        case RegionPredicate::fig8:
            return f_triple(f1, f2) - f_t(f1, f2);
        case RegionPredicate::fig9: {
            T a = f_t(f1, f2);
            T b = f_triple(f1, f2);
            return (a > b ? a : b) - f1;
        }
        case RegionPredicate::fig10: {
            auto t = multiround_tradeoff(f1, f2, rounds);
            return t.f_triple - t.f_t;
        }
        case RegionPredicate::fig11:
            return fidelity_p1(f1, f2);
        case RegionPredicate::fig12:
            return fidelity_p1prime(f1, f2);
    }
    return std::nullopt;
}

struct GridAxis {
    double min = 0;
    double max = 1;
    int steps = 2;

    double at(int i) const;
};

/// CSV with header f1,f2,value; rows f1-major. Values at 6 significant
/// digits, "nan" where undefined.
std::string region_sweep_csv(RegionPredicate p, const GridAxis &f1_axis, const GridAxis &f2_axis, int rounds = 2);

void check_axis(const GridAxis &axis);

}  // namespace ghzpurify
