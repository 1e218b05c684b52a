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

#include <map>
#include <numeric>
#include <vector>

#include "../ensemble.hpp"
#include "circuit.hpp"

// Circuit-level reference for the purification steps. Every mixture is
// expanded into its pure GHZ components, each component is pushed through
// the actual measurement circuit, and the surviving system is read back in
// the GHZ basis. Nothing here consults the closed-form kernels.

namespace ghzpurify::oracle {

inline constexpr int kMaxOracleParties = 5;

template <Scalar T>
struct GhzWeights {
    std::vector<T> plus;   // |Phi_m^+> weight per canonical m
    std::vector<T> minus;  // |Phi_m^-> weight per canonical m
};

template <Scalar T>
GhzWeights<T> ghz_decompose(const PureState &s) {
    int n = s.nq;
    std::size_t half = std::size_t{1} << (n - 1);
    std::size_t full = (std::size_t{1} << n) - 1;
    GhzWeights<T> out{std::vector<T>(half, T(0)), std::vector<T>(half, T(0))};
    T two_scale = T(2) * T(s.scale);
    for (std::size_t m = 0; m < half; ++m) {
        Amp a = s.amps[m];
        Amp b = s.amps[m ^ full];
        out.plus[m] = T((a + b) * (a + b)) / two_scale;
        out.minus[m] = T((a - b) * (a - b)) / two_scale;
    }
    return out;
}

/// (|p> + |~p>) for each listed raw pattern, concatenated system by system.
inline PureState product_of_ghz(const std::vector<std::pair<int, Pattern>> &systems) {
    int nq = 0;
    std::vector<std::size_t> idx{0};
    for (auto [n, p] : systems) {
        std::size_t full = (std::size_t{1} << n) - 1;
        std::vector<std::size_t> next;
        for (std::size_t i : idx) {
            next.push_back((i << n) | p);
            next.push_back((i << n) | (p ^ full));
        }
        idx = std::move(next);
        nq += n;
    }
    return uniform_state(nq, idx);
}

template <Scalar T>
struct BitflipOracle {
    /// Unnormalized post-selected weights per canonical parity class.
    std::vector<Ensemble<T>> classes;
    /// Total weight that ended in |Phi^-> states (zero when folds are right).
    T sign_mass;
};

namespace detail {

inline void check_oracle_size(int n) {
    check_arity(n);
    if (n > kMaxOracleParties) {
        fail(ErrorCode::size_cap, "oracle supports at most 5 parties per system");
    }
}

inline std::vector<int> range(int lo, int hi) {
    std::vector<int> r(static_cast<std::size_t>(hi - lo));
    std::iota(r.begin(), r.end(), lo);
    return r;
}

/// Runs the two-copy bit-flip circuit on every pure component pair and
/// hands each surviving system-1 state to `visit(cls, weight, state)`.
template <Scalar T, class Visit>
void for_each_bitflip_leaf(const Ensemble<T> &rho1, const Ensemble<T> &rho2, Visit visit) {
    check_shape(rho1);
    check_shape(rho2);
    if (rho1.n != rho2.n) {
        fail(ErrorCode::invalid_arity, "ensembles have different photon counts");
    }
    int n = rho1.n;
    check_oracle_size(n);
    Circuit checks;
    for (int k = 0; k < n; ++k) {
        checks.push_back(parity_check(k, n + k));
    }
    std::vector<int> sys2 = range(n, 2 * n);
    Circuit identity_path;
    Circuit cross_path;
    for (int q : sys2) {
        identity_path.push_back(hadamard(q));
    }
    for (int q : sys2) {
        identity_path.push_back(measure_z(q));
        cross_path.push_back(measure_x(q));
    }
    identity_path.push_back(pauli_z(0, sys2));
    cross_path.push_back(pauli_z(0, sys2));
    for (int q : sys2) {
        cross_path.push_back(hadamard(q));
    }
    std::size_t m_count = rho1.weights.size();
    for (Pattern e = 0; e < m_count; ++e) {
        for (Pattern f = 0; f < m_count; ++f) {
            T w = rho1.weights[e] * rho2.weights[f];
            if (w == T(0)) {
                continue;
            }
            auto after_checks = run_branches<T>(product_of_ghz({{n, e}, {n, f}}), checks);
            for (auto &b : after_checks) {
                Pattern raw = 0;
                for (int k = 0; k < n; ++k) {
                    raw = (raw << 1) | static_cast<Pattern>(b.outcomes[static_cast<std::size_t>(k)]);
                }
                Pattern cls = canonicalize(n, raw);
                std::vector<Branch<T>> start{b};
                for (auto &leaf : run_branches(std::move(start), cls == 0 ? identity_path : cross_path)) {
                    visit(cls, T(w * leaf.probability), discard_qubits(leaf.state, sys2));
                }
            }
        }
    }
}

}  // namespace detail

/// Surviving system-1 state of one measurement record, with the absolute
/// weight (component weight times branch probability) it carries.
template <Scalar T>
struct BitflipLeaf {
    Pattern cls;
    T weight;
    PureState state;
};

template <Scalar T>
struct BitflipLeaves {
    int n;
    std::vector<int> parties;
    std::vector<BitflipLeaf<T>> leaves;
};

template <Scalar T>
BitflipLeaves<T> bitflip_leaves(const Ensemble<T> &rho1, const Ensemble<T> &rho2) {
    BitflipLeaves<T> out{rho1.n, rho1.parties, {}};
    detail::for_each_bitflip_leaf(rho1, rho2, [&](Pattern cls, const T &w, const PureState &s) {
        out.leaves.push_back({cls, w, s});
    });
    return out;
}

template <Scalar T>
BitflipOracle<T> oracle_bitflip(const BitflipLeaves<T> &tree) {
    int n = tree.n;
    BitflipOracle<T> out{{}, T(0)};
    for (std::size_t c = 0; c < pattern_count(n); ++c) {
        out.classes.push_back(Ensemble<T>{n, std::vector<T>(pattern_count(n), T(0)), tree.parties});
    }
    for (const auto &leaf : tree.leaves) {
        auto dec = ghz_decompose<T>(leaf.state);
        for (std::size_t m = 0; m < dec.plus.size(); ++m) {
            out.classes[leaf.cls].weights[m] += leaf.weight * dec.plus[m];
            out.sign_mass += leaf.weight * dec.minus[m];
        }
    }
    return out;
}

template <Scalar T>
BitflipOracle<T> oracle_bitflip(const Ensemble<T> &rho1, const Ensemble<T> &rho2) {
    return oracle_bitflip(bitflip_leaves(rho1, rho2));
}

/// Cross-combination branch followed by X measurements on the parties not
/// in `keep` (sorted local positions) and a sign fold on the first kept
/// photon. Returns unnormalized weights over the kept parties.
template <Scalar T>
Ensemble<T> oracle_extract(const BitflipLeaves<T> &tree, Pattern cls, const std::vector<int> &keep,
                           T *sign_mass = nullptr) {
    int n = tree.n;
    int k = static_cast<int>(keep.size());
    check_arity(k);
    std::vector<int> drop;
    for (int q = 0; q < n; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            drop.push_back(q);
        }
    }
    Circuit reduce;
    std::vector<int> outcome_idx;
    for (int q : drop) {
        outcome_idx.push_back(static_cast<int>(reduce.size()));
        reduce.push_back(measure_x(q));
    }
    if (!drop.empty()) {
        reduce.push_back(pauli_z(keep.at(0), outcome_idx));
    }
    for (int q : drop) {
        reduce.push_back(hadamard(q));
    }
    Ensemble<T> out{k, std::vector<T>(pattern_count(k), T(0)), {}};
    for (int q : keep) {
        out.parties.push_back(tree.parties.at(static_cast<std::size_t>(q)));
    }
    T minus(0);
    for (const auto &source : tree.leaves) {
        if (source.cls != cls) {
            continue;
        }
        for (auto &leaf : run_branches<T>(source.state, reduce)) {
            auto dec = ghz_decompose<T>(discard_qubits(leaf.state, drop));
            for (std::size_t m = 0; m < dec.plus.size(); ++m) {
                out.weights[m] += source.weight * leaf.probability * dec.plus[m];
                minus += source.weight * leaf.probability * dec.minus[m];
            }
        }
    }
    if (sign_mass) {
        *sign_mass = minus;
    }
    return out;
}

template <Scalar T>
Ensemble<T> oracle_extract(const Ensemble<T> &rho1, const Ensemble<T> &rho2, Pattern cls, const std::vector<int> &keep,
                           T *sign_mass = nullptr) {
    return oracle_extract(bitflip_leaves(rho1, rho2), cls, keep, sign_mass);
}

/// Parity check between the two copies of the shared party; on odd parity
/// every photon of system B is flipped. The B copy of the shared party is
/// then measured in the X basis and a minus outcome is folded by a phase
/// flip on the A copy. Returns weights over the sorted union of parties.
template <Scalar T>
Ensemble<T> oracle_link(const Ensemble<T> &a, const Ensemble<T> &b, T *sign_mass = nullptr) {
    check_shape(a);
    check_shape(b);
    std::vector<int> shared;
    std::set_intersection(a.parties.begin(), a.parties.end(), b.parties.begin(), b.parties.end(),
                          std::back_inserter(shared));
    if (shared.size() != 1) {
        fail(ErrorCode::topology, "linked systems must share exactly one party");
    }
    if (a.n + b.n > 2 * kMaxOracleParties) {
        fail(ErrorCode::size_cap, "oracle link supports at most 10 photons in total");
    }
    auto local = [](const Ensemble<T> &r, int party) {
        return static_cast<int>(std::find(r.parties.begin(), r.parties.end(), party) - r.parties.begin());
    };
    int sa = local(a, shared[0]);
    int sb = a.n + local(b, shared[0]);
    Circuit link{parity_check(sa, sb)};
    for (int q = a.n; q < a.n + b.n; ++q) {
        link.push_back(pauli_x(q, {0}));
    }
    link.push_back(measure_x(sb));
    link.push_back(pauli_z(sa, {1}));
    link.push_back(hadamard(sb));

    // Surviving qubits in order: all of A, then B without the shared copy.
    std::vector<int> labels = a.parties;
    for (int p : b.parties) {
        if (p != shared[0]) {
            labels.push_back(p);
        }
    }
    std::vector<int> uni = labels;
    std::sort(uni.begin(), uni.end());
    std::vector<int> order;
    for (int p : uni) {
        order.push_back(static_cast<int>(std::find(labels.begin(), labels.end(), p) - labels.begin()));
    }
    int n = static_cast<int>(uni.size());
    Ensemble<T> out{n, std::vector<T>(pattern_count(n), T(0)), uni};
    T minus(0);
    for (Pattern ea = 0; ea < a.weights.size(); ++ea) {
        for (Pattern eb = 0; eb < b.weights.size(); ++eb) {
            T w = a.weights[ea] * b.weights[eb];
            if (w == T(0)) {
                continue;
            }
            for (auto &leaf : run_branches<T>(product_of_ghz({{a.n, ea}, {b.n, eb}}), link)) {
                auto joined = permute_qubits(discard_qubits(leaf.state, {sb}), order);
                auto dec = ghz_decompose<T>(joined);
                for (std::size_t m = 0; m < dec.plus.size(); ++m) {
                    out.weights[m] += w * leaf.probability * dec.plus[m];
                    minus += w * leaf.probability * dec.minus[m];
                }
            }
        }
    }
    if (sign_mass) {
        *sign_mass = minus;
    }
    return out;
}

template <Scalar T>
struct PhaseRecord {
    bool identity;
    std::vector<int> outcomes;
    T plus;   // unnormalized weight on |Phi_0^+> (|Psi+> before the final Hadamards)
    T minus;  // unnormalized weight on |Phi_0^->
};

template <Scalar T>
struct PhaseOracle {
    T identity_plus{0}, identity_minus{0};
    T residual_plus{0}, residual_minus{0};
    /// Weight left outside span{|Phi_0^+>, |Phi_0^->}; zero when folds are right.
    T stray_mass{0};
    std::vector<PhaseRecord<T>> records;
};

/// Phase-flip circuit on two copies of p0|Phi_0^+> + (1-p0)|Phi_0^->:
/// Hadamards on every photon, parity checks between copies, bit-flip folds
/// on copy 2 where the parity was odd, X measurements of copy 2 with
/// phase-flip folds on copy 1, and Hadamards back on copy 1. An even count
/// of odd parities is the identity branch.
template <Scalar T>
PhaseOracle<T> oracle_phase(int n, const T &p1, const T &p2) {
    check_arity(n);
    if (n > 6) {
        fail(ErrorCode::size_cap, "phase oracle supports at most 6 parties");
    }
    std::vector<int> sys2 = detail::range(n, 2 * n);
    Circuit c;
    for (int q = 0; q < 2 * n; ++q) {
        c.push_back(hadamard(q));
    }
    for (int k = 0; k < n; ++k) {
        c.push_back(parity_check(k, n + k));
    }
    for (int k = 0; k < n; ++k) {
        c.push_back(pauli_x(n + k, {k}));
    }
    for (int k = 0; k < n; ++k) {
        c.push_back(measure_x(n + k));
    }
    for (int k = 0; k < n; ++k) {
        c.push_back(pauli_z(k, {n + k}));
    }
    for (int q : sys2) {
        c.push_back(hadamard(q));
    }
    std::size_t full = (std::size_t{1} << n) - 1;
    std::map<std::vector<int>, PhaseRecord<T>> by_record;
    PhaseOracle<T> out;
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            T w = (s1 ? T(T(1) - p1) : p1) * (s2 ? T(T(1) - p2) : p2);
            if (w == T(0)) {
                continue;
            }
            PureState s = product_of_ghz({{n, 0}, {n, 0}});
            if (s1) {
                for (std::size_t i = 0; i < s.amps.size(); ++i) {
                    if ((i >> n) == full) {
                        s.amps[i] = -s.amps[i];
                    }
                }
            }
            if (s2) {
                for (std::size_t i = 0; i < s.amps.size(); ++i) {
                    if ((i & full) == full) {
                        s.amps[i] = -s.amps[i];
                    }
                }
            }
            for (auto &leaf : run_branches<T>(s, c)) {
                PureState sys1 = discard_qubits(leaf.state, sys2);
                for (int q = 0; q < n; ++q) {
                    apply_hadamard(sys1, q);
                }
                auto dec = ghz_decompose<T>(sys1);
                T lw = w * leaf.probability;
                T plus = lw * dec.plus[0];
                T minus = lw * dec.minus[0];
                out.stray_mass += lw - plus - minus;
                int odd = 0;
                for (int k = 0; k < n; ++k) {
                    odd += leaf.outcomes[static_cast<std::size_t>(k)];
                }
                bool identity = odd % 2 == 0;
                (identity ? out.identity_plus : out.residual_plus) += plus;
                (identity ? out.identity_minus : out.residual_minus) += minus;
                auto [it, inserted] = by_record.try_emplace(leaf.outcomes, PhaseRecord<T>{identity, leaf.outcomes, T(0), T(0)});
                it->second.plus += plus;
                it->second.minus += minus;
            }
        }
    }
    for (auto &[key, rec] : by_record) {
        out.records.push_back(rec);
    }
    return out;
}

}  // namespace ghzpurify::oracle
