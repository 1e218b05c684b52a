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

#include <set>
#include <utility>

#include "bitflip.hpp"

namespace ghzpurify {

/// Extracted subsystem: ensemble over the kept parties (labels carried in
/// ensemble.parties) and the probability of the class it came from.
template <Scalar T>
using SubsystemExtract = PurifyOutcome<T>;

inline std::pair<int, int> nprime_range(int n) {
    if (n < 3) {
        fail(ErrorCode::invalid_arity, "subsystem extraction needs at least 3 parties");
    }
    check_arity(n);
    return {(n + 1) / 2, n - 1};
}

/// `keep` holds local party positions 0..n-1.
template <Scalar T>
SubsystemExtract<T> extract_subsystem(const Ensemble<T> &rho1, const Ensemble<T> &rho2, Pattern cls,
                                      std::vector<int> keep) {
    int n = rho1.n;
    if (cls == 0) {
        fail(ErrorCode::contract_violation, "extraction needs a cross-combination class");
    }
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        fail(ErrorCode::invalid_subset, "duplicate party in keep set");
    }
    if (keep.size() < 2) {
        fail(ErrorCode::invalid_subset, "keep set of fewer than 2 parties carries no entanglement");
    }
    Ensemble<T> w = class_weights(rho1, rho2, cls);
    Pattern on_keep = restrict_pattern(n, canonicalize(n, cls), keep);
    if (on_keep != 0 && on_keep != full_mask(static_cast<int>(keep.size()))) {
        fail(ErrorCode::invalid_subset, "keep set straddles even and odd parties of the class");
    }
    int k = static_cast<int>(keep.size());
    Ensemble<T> out{k, std::vector<T>(pattern_count(k), T(0)), {}};
    for (int party : keep) {
        out.parties.push_back(rho1.parties[static_cast<std::size_t>(party)]);
    }
    for (Pattern e = 0; e < w.weights.size(); ++e) {
        out.weights[canonicalize(k, restrict_pattern(n, e, keep))] += w.weights[e];
    }
    return outcome_from_weights(out);
}

/// Maximal even or odd party set of the class, whichever extract has the
/// larger leading weight (even set on ties).
template <Scalar T>
std::vector<int> default_keep(const Ensemble<T> &rho1, const Ensemble<T> &rho2, Pattern cls) {
    int n = rho1.n;
    std::vector<int> even = even_parties(n, canonicalize(n, cls));
    std::vector<int> odd = odd_parties(n, canonicalize(n, cls));
    bool even_ok = even.size() >= 2;
    bool odd_ok = odd.size() >= 2;
    if (!even_ok && !odd_ok) {
        fail(ErrorCode::invalid_subset, "class has no parity set of 2 or more parties");
    }
    if (!odd_ok) {
        return even;
    }
    if (!even_ok) {
        return odd;
    }
    auto fe = extract_subsystem(rho1, rho2, cls, even).ensemble.fidelity();
    auto fo = extract_subsystem(rho1, rho2, cls, odd).ensemble.fidelity();
    return fo > fe ? odd : even;
}

/// Joins two ensembles sharing exactly one party into one over the union of
/// their parties. Both parity outcomes of the link are folded together, so
/// the operation is deterministic.
template <Scalar T>
PurifyOutcome<T> entanglement_link(const Ensemble<T> &a, const Ensemble<T> &b) {
    check_shape(a);
    check_shape(b);
    std::vector<int> shared;
    std::set_intersection(a.parties.begin(), a.parties.end(), b.parties.begin(), b.parties.end(),
                          std::back_inserter(shared));
    if (shared.size() != 1) {
        fail(ErrorCode::topology, "linked systems must share exactly one party, found " + std::to_string(shared.size()));
    }
    std::vector<int> uni;
    std::set_union(a.parties.begin(), a.parties.end(), b.parties.begin(), b.parties.end(), std::back_inserter(uni));
    int n = static_cast<int>(uni.size());
    check_arity(n);
    auto positions = [&](const std::vector<int> &sub) {
        std::vector<int> pos;
        for (int p : sub) {
            pos.push_back(static_cast<int>(std::lower_bound(uni.begin(), uni.end(), p) - uni.begin()));
        }
        return pos;
    };
    std::vector<int> pos_a = positions(a.parties);
    std::vector<int> pos_b = positions(b.parties);
    Ensemble<T> out{n, std::vector<T>(pattern_count(n), T(0)), uni};
    for (Pattern g = 0; g < out.weights.size(); ++g) {
        Pattern ga = canonicalize(a.n, restrict_pattern(n, g, pos_a));
        Pattern gb = canonicalize(b.n, restrict_pattern(n, g, pos_b));
        out.weights[g] = a.weights[ga] * b.weights[gb];
    }
    return outcome_from_weights(out);
}

/// Three-party route of the link scheme: extract {A,B} from class 001 and
/// {A,C} from class 010, then link them at A. Empty when the cross branch
/// has zero probability.
template <Scalar T>
std::optional<Ensemble<T>> link_three_party(const Ensemble<T> &rho1, const Ensemble<T> &rho2) {
    if (rho1.n != 3 || rho2.n != 3) {
        fail(ErrorCode::invalid_arity, "the three-party link route needs n = 3");
    }
    if (class_weights(rho1, rho2, 1).total() == T(0) || class_weights(rho1, rho2, 2).total() == T(0)) {
        return std::nullopt;
    }
    auto ab = extract_subsystem(rho1, rho2, 1, {0, 1});
    auto ac = extract_subsystem(rho1, rho2, 2, {0, 2});
    return entanglement_link(ab.ensemble, ac.ensemble).ensemble;
}

template <Scalar T>
bool link_improves(const T &f1, const T &f2) {
    T hi = f1 > f2 ? f1 : f2;
    T lo = f1 > f2 ? f2 : f1;
    auto t = link_three_party(symmetric_ensemble(3, hi), symmetric_ensemble(3, lo));
    return t.has_value() && t->fidelity() > hi;
}

}  // namespace ghzpurify
