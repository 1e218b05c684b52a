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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "../error.hpp"

namespace ghzpurify::oracle {

// State vector with real, unnormalized integer amplitudes. The physical
// state is amps / sqrt(scale) and scale always equals the squared norm of
// amps. Every gate used by the circuits (unscaled Hadamard, X, Z,
// computational-basis projections) maps integer vectors to integer vectors,
// so the oracle is exact without rational amplitudes.
//
// Qubit q is bit (nq - 1 - q) of the basis index.
using Amp = std::int64_t;

struct PureState {
    int nq = 0;
    std::vector<Amp> amps;
    Amp scale = 1;

    std::size_t bit(int q) const {
        return std::size_t{1} << (nq - 1 - q);
    }
};

Amp norm_sq(const std::vector<Amp> &amps);

PureState basis_state(int nq, std::size_t index);

/// Unit coefficient on every listed basis index (repeats add up).
PureState uniform_state(int nq, const std::vector<std::size_t> &indices);

void check_qubit(const PureState &s, int q);

/// Unscaled: amplitudes map to (x + y, x - y) and scale doubles.
void apply_hadamard(PureState &s, int q);
void apply_pauli_x(PureState &s, int q);
void apply_pauli_z(PureState &s, int q);

/// Zeroes the basis states with `keep(i)` false and resets scale to the new
/// squared norm. The outcome probability is new scale / old scale.
template <class Pred>
void project(PureState &s, Pred keep) {
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if (!keep(i)) {
            s.amps[i] = 0;
        }
    }
    s.scale = norm_sq(s.amps);
}

/// Drops qubits that sit in a computational basis state. Throws if any of
/// them is still in superposition.
PureState discard_qubits(const PureState &s, const std::vector<int> &qubits);

/// New qubit k is old qubit order[k].
PureState permute_qubits(const PureState &s, const std::vector<int> &order);

}  // namespace ghzpurify::oracle
