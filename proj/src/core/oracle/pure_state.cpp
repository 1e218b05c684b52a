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

#include "pure_state.hpp"

#include <limits>
#include <utility>

namespace ghzpurify::oracle {

Amp norm_sq(const std::vector<Amp> &amps) {
    Amp s = 0;
    for (Amp a : amps) {
        s += a * a;
    }
    return s;
}

PureState basis_state(int nq, std::size_t index) {
    if (nq < 1 || nq > 20) {
        fail(ErrorCode::size_cap, "oracle supports 1..20 qubits");
    }
    PureState s{nq, std::vector<Amp>(std::size_t{1} << nq, 0), 1};
    if (index >= s.amps.size()) {
        fail(ErrorCode::invalid_argument, "basis index out of range");
    }
    s.amps[index] = 1;
    return s;
}

PureState uniform_state(int nq, const std::vector<std::size_t> &indices) {
    PureState s = basis_state(nq, indices.at(0));
    s.amps[indices[0]] = 0;
    for (std::size_t i : indices) {
        s.amps.at(i) += 1;
    }
    s.scale = norm_sq(s.amps);
    return s;
}

void check_qubit(const PureState &s, int q) {
    if (q < 0 || q >= s.nq) {
        fail(ErrorCode::invalid_argument, "qubit " + std::to_string(q) + " out of range");
    }
}

void apply_hadamard(PureState &s, int q) {
    check_qubit(s, q);
    if (s.scale > std::numeric_limits<Amp>::max() / 4) {
        fail(ErrorCode::size_cap, "oracle amplitude range exhausted");
    }
    std::size_t b = s.bit(q);
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if (!(i & b)) {
            Amp x = s.amps[i];
            Amp y = s.amps[i | b];
            s.amps[i] = x + y;
            s.amps[i | b] = x - y;
        }
    }
    s.scale *= 2;
}

void apply_pauli_x(PureState &s, int q) {
    check_qubit(s, q);
    std::size_t b = s.bit(q);
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if (!(i & b)) {
            std::swap(s.amps[i], s.amps[i | b]);
        }
    }
}

void apply_pauli_z(PureState &s, int q) {
    check_qubit(s, q);
    std::size_t b = s.bit(q);
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if (i & b) {
            s.amps[i] = -s.amps[i];
        }
    }
}

PureState discard_qubits(const PureState &s, const std::vector<int> &qubits) {
    std::size_t mask = 0;
    for (int q : qubits) {
        check_qubit(s, q);
        mask |= s.bit(q);
    }
    bool found = false;
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if (s.amps[i] != 0) {
            if (!found) {
                fixed = i & mask;
                found = true;
            } else if ((i & mask) != fixed) {
                fail(ErrorCode::internal, "discarded qubits are not in a basis state");
            }
        }
    }
    int out_nq = s.nq - static_cast<int>(qubits.size());
    PureState out{out_nq, std::vector<Amp>(std::size_t{1} << out_nq, 0), s.scale};
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if ((i & mask) != fixed) {
            continue;
        }
        std::size_t j = 0;
        for (int q = 0; q < s.nq; ++q) {
            if (mask & s.bit(q)) {
                continue;
            }
            j = (j << 1) | ((i & s.bit(q)) ? 1 : 0);
        }
        out.amps[j] = s.amps[i];
    }
    return out;
}

PureState permute_qubits(const PureState &s, const std::vector<int> &order) {
    if (static_cast<int>(order.size()) != s.nq) {
        fail(ErrorCode::internal, "permutation size mismatch");
    }
    PureState out{s.nq, std::vector<Amp>(s.amps.size(), 0), s.scale};
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        std::size_t j = 0;
        for (int k = 0; k < s.nq; ++k) {
            j = (j << 1) | ((i & s.bit(order[static_cast<std::size_t>(k)])) ? 1 : 0);
        }
        out.amps[j] = s.amps[i];
    }
    return out;
}

}  // namespace ghzpurify::oracle
