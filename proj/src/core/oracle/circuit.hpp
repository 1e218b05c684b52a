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

#include <utility>
#include <vector>

#include "../scalar.hpp"
#include "pure_state.hpp"

namespace ghzpurify::oracle {

enum class GateKind {
    hadamard,
    pauli_x,
    pauli_z,
    parity_check,
    measure_z,
    measure_x,
};

// Measurements append one outcome (0 or 1) to the branch record; for
// parity_check 1 means odd, for measure_x 1 means the minus eigenstate.
// A non-empty `condition` makes a gate fire only when the XOR of the listed
// record entries is 1.
struct Gate {
    GateKind kind;
    int q = 0;
    int q2 = -1;
    std::vector<int> condition;
};

using Circuit = std::vector<Gate>;

inline Gate hadamard(int q) {
    return {GateKind::hadamard, q, -1, {}};
}
inline Gate pauli_x(int q, std::vector<int> condition = {}) {
    return {GateKind::pauli_x, q, -1, std::move(condition)};
}
inline Gate pauli_z(int q, std::vector<int> condition = {}) {
    return {GateKind::pauli_z, q, -1, std::move(condition)};
}
inline Gate parity_check(int a, int b) {
    return {GateKind::parity_check, a, b, {}};
}
inline Gate measure_z(int q) {
    return {GateKind::measure_z, q, -1, {}};
}
inline Gate measure_x(int q) {
    return {GateKind::measure_x, q, -1, {}};
}

template <Scalar T>
struct Branch {
    std::vector<int> outcomes;
    T probability;
    PureState state;
};

namespace detail {

inline bool condition_holds(const Gate &g, const std::vector<int> &outcomes) {
    if (g.condition.empty()) {
        return true;
    }
    int x = 0;
    for (int idx : g.condition) {
        if (idx < 0 || idx >= static_cast<int>(outcomes.size())) {
            fail(ErrorCode::invalid_argument, "condition refers to a missing outcome");
        }
        x ^= outcomes[static_cast<std::size_t>(idx)];
    }
    return x == 1;
}

template <Scalar T>
void measure(std::vector<Branch<T>> &next, const Branch<T> &b, const Gate &g) {
    for (int outcome = 0; outcome < 2; ++outcome) {
        Branch<T> c = b;
        bool x_basis = g.kind == GateKind::measure_x;
        if (x_basis) {
            apply_hadamard(c.state, g.q);
        }
        Amp before = c.state.scale;
        if (g.kind == GateKind::parity_check) {
            check_qubit(c.state, g.q2);
            std::size_t ba = c.state.bit(g.q), bb = c.state.bit(g.q2);
            project(c.state, [&](std::size_t i) {
                return (((i & ba) != 0) != ((i & bb) != 0)) == (outcome == 1);
            });
        } else {
            std::size_t bq = c.state.bit(g.q);
            project(c.state, [&](std::size_t i) {
                return ((i & bq) != 0) == (outcome == 1);
            });
        }
        if (c.state.scale == 0) {
            continue;
        }
        c.probability *= T(c.state.scale) / T(before);
        if (x_basis) {
            apply_hadamard(c.state, g.q);
        }
        c.outcomes.push_back(outcome);
        next.push_back(std::move(c));
    }
}

}  // namespace detail

/// Exhaustive outcome tree. Zero-probability branches are pruned.
template <Scalar T>
std::vector<Branch<T>> run_branches(std::vector<Branch<T>> branches, const Circuit &circuit) {
    for (const Gate &g : circuit) {
        std::vector<Branch<T>> next;
        for (Branch<T> &b : branches) {
            switch (g.kind) {
                case GateKind::hadamard:
                    apply_hadamard(b.state, g.q);
                    next.push_back(std::move(b));
                    break;
                case GateKind::pauli_x:
                case GateKind::pauli_z:
                    if (detail::condition_holds(g, b.outcomes)) {
                        if (g.kind == GateKind::pauli_x) {
                            apply_pauli_x(b.state, g.q);
                        } else {
                            apply_pauli_z(b.state, g.q);
                        }
                    }
                    next.push_back(std::move(b));
                    break;
                default:
                    check_qubit(b.state, g.q);
                    detail::measure(next, b, g);
                    break;
            }
        }
        branches = std::move(next);
    }
    return branches;
}

template <Scalar T>
std::vector<Branch<T>> run_branches(const PureState &state, const Circuit &circuit) {
    std::vector<Branch<T>> start;
    start.push_back(Branch<T>{{}, T(1), state});
    return run_branches(std::move(start), circuit);
}

}  // namespace ghzpurify::oracle
