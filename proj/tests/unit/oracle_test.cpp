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

#include "oracle/oracle.hpp"

#include <random>

#include <gtest/gtest.h>

#include "bitflip.hpp"
#include "link.hpp"
#include "phaseflip.hpp"
#include "test_util.hpp"

using namespace ghzpurify;
using namespace ghzpurify::oracle;
using ghzpurify::testing::Q;
using ghzpurify::testing::random_ensemble;

namespace {

Circuit parity_checks(int n) {
    Circuit c;
    for (int k = 0; k < n; ++k) {
        c.push_back(parity_check(k, n + k));
    }
    return c;
}

}  // namespace

TEST(pure_state, gates_keep_integer_norm) {
    auto s = basis_state(2, 0);
    apply_hadamard(s, 0);
    EXPECT_EQ(s.scale, 2);
    EXPECT_EQ(norm_sq(s.amps), s.scale);
    apply_pauli_z(s, 0);
    apply_pauli_x(s, 1);
    EXPECT_EQ(norm_sq(s.amps), s.scale);
    EXPECT_EQ(s.amps, (std::vector<Amp>{0, 1, 0, -1}));
    EXPECT_THROW_CODE(apply_hadamard(s, 2), ErrorCode::invalid_argument);
}

TEST(pure_state, discard_and_permute) {
    auto s = uniform_state(3, {0b100, 0b011});
    auto p = permute_qubits(s, {2, 0, 1});
    EXPECT_EQ(p.amps[0b010], 1);
    EXPECT_EQ(p.amps[0b101], 1);
    auto d = discard_qubits(basis_state(3, 0b101), {1});
    EXPECT_EQ(d.nq, 2);
    EXPECT_EQ(d.amps[0b11], 1);
}

TEST(run_branches, identity_pair_splits_evenly) {
    auto branches = run_branches<Rational>(product_of_ghz({{3, 0}, {3, 0}}), parity_checks(3));
    ASSERT_EQ(branches.size(), 2u);
    EXPECT_EQ(branches[0].outcomes, (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(branches[1].outcomes, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(branches[0].probability, Q(1, 2));
    EXPECT_EQ(branches[1].probability, Q(1, 2));
}

TEST(run_branches, cross_pair_lands_in_class) {
    auto branches = run_branches<Rational>(product_of_ghz({{3, 0}, {3, 0b010}}), parity_checks(3));
    ASSERT_EQ(branches.size(), 2u);
    EXPECT_EQ(branches[0].outcomes, (std::vector<int>{0, 1, 0}));
    EXPECT_EQ(branches[1].outcomes, (std::vector<int>{1, 0, 1}));
    EXPECT_EQ(branches[0].probability, Q(1, 2));
}

TEST(run_branches, measure_x_on_plus) {
    auto s = basis_state(1, 0);
    apply_hadamard(s, 0);
    auto branches = run_branches<Rational>(s, {measure_x(0)});
    ASSERT_EQ(branches.size(), 1u);
    EXPECT_EQ(branches[0].outcomes, (std::vector<int>{0}));
    EXPECT_EQ(branches[0].probability, Q(1));
}

TEST(run_branches, probabilities_partition) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = basis_state(4, rng() % 16);
        Circuit c;
        for (int g = 0; g < 10; ++g) {
            int q = static_cast<int>(rng() % 4);
            switch (rng() % 4) {
                case 0:
                    c.push_back(hadamard(q));
                    break;
                case 1:
                    c.push_back(measure_x(q));
                    break;
                case 2:
                    c.push_back(measure_z(q));
                    break;
                default:
                    c.push_back(parity_check(q, (q + 1) % 4));
                    break;
            }
        }
        Rational total(0);
        for (const auto &b : run_branches<Rational>(s, c)) {
            EXPECT_GT(b.probability, Q(0));
            EXPECT_EQ(norm_sq(b.state.amps), b.state.scale);
            total += b.probability;
        }
        EXPECT_EQ(total, Q(1));
    }
}

TEST(run_branches, bad_condition_index) {
    EXPECT_THROW_CODE(run_branches<double>(basis_state(1, 0), {pauli_x(0, {3})}), ErrorCode::invalid_argument);
}

TEST(oracle, bitflip_symmetric_worked_example) {
    auto a = symmetric_ensemble(3, Q("0.8"));
    auto b = symmetric_ensemble(3, Q("0.6"));
    auto o = oracle_bitflip(a, b);
    EXPECT_EQ(o.sign_mass, Q(0));
    EXPECT_EQ(normalized(o.classes[0]).fidelity(), Q(18, 19));
    EXPECT_EQ(o.classes[0b010].weights, class_weights(a, b, 0b010).weights);
    Rational total(0);
    for (const auto &c : o.classes) {
        total += c.total();
    }
    EXPECT_EQ(total, Q(1));
}

TEST(oracle, bitflip_matches_closed_form_random) {
    std::mt19937_64 rng(32);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            auto a = random_ensemble<Rational>(n, rng);
            auto b = random_ensemble<Rational>(n, rng);
            auto tree = bitflip_leaves(a, b);
            auto o = oracle_bitflip(tree);
            EXPECT_EQ(o.sign_mass, Q(0));
            for (Pattern c = 0; c < pattern_count(n); ++c) {
                EXPECT_EQ(o.classes[c].weights, class_weights(a, b, c).weights) << n << " " << c;
                if (c == 0 || n < 3) {
                    continue;
                }
                auto keep = default_keep(a, b, c);
                Rational minus(1);
                auto ex = oracle_extract(tree, c, keep, &minus);
                EXPECT_EQ(minus, Q(0));
                auto closed = extract_subsystem(a, b, c, keep);
                EXPECT_EQ(normalized(ex).weights, closed.ensemble.weights);
                EXPECT_EQ(ex.total(), closed.probability);
                EXPECT_EQ(ex.parties, closed.ensemble.parties);
            }
        }
    }
}

TEST(oracle, size_cap) {
    auto a = symmetric_ensemble(6, 0.7);
    EXPECT_THROW_CODE(oracle_bitflip(a, a), ErrorCode::size_cap);
    EXPECT_THROW_CODE(oracle_phase(7, 0.8, 0.6), ErrorCode::size_cap);
}

TEST(oracle, link_bell_pairs) {
    auto ab = make_ensemble<Rational>(2, {Q("0.9"), Q("0.1")});
    auto ac = ab;
    ac.parties = {0, 2};
    Rational minus(1);
    auto t = oracle_link(ab, ac, &minus);
    EXPECT_EQ(minus, Q(0));
    EXPECT_EQ(t.weights, (std::vector<Rational>{Q("0.81"), Q("0.09"), Q("0.09"), Q("0.01")}));
    EXPECT_EQ(t.weights, entanglement_link(ab, ac).ensemble.weights);

    auto pure = make_ensemble<Rational>(2, {Q(1), Q(0)});
    auto pure2 = pure;
    pure2.parties = {1, 2};
    EXPECT_EQ(oracle_link(pure, pure2).fidelity(), Q(1));
}

TEST(oracle, link_mixed_sizes_random) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_ensemble<Rational>(3, rng);
        auto b = random_ensemble<Rational>(2, rng);
        b.parties = {1, 3};
        Rational minus(1);
        auto t = oracle_link(a, b, &minus);
        EXPECT_EQ(minus, Q(0));
        auto closed = entanglement_link(a, b).ensemble;
        EXPECT_EQ(t.weights, closed.weights);
        EXPECT_EQ(t.parties, closed.parties);
    }
}

TEST(oracle, link_even_and_odd_branches_agree) {
    // Two (0.9, 0.1) Bell pairs AB and A'C, joined at A.
    Rational f0 = Q("0.9");
    Circuit c{parity_check(0, 2), pauli_x(2, {0}), pauli_x(3, {0}), measure_x(2), pauli_z(0, {1}), hadamard(2)};
    std::vector<std::vector<Rational>> per_parity(2, std::vector<Rational>(4, Q(0)));
    for (Pattern e = 0; e < 2; ++e) {
        for (Pattern f = 0; f < 2; ++f) {
            Rational w = (e ? 1 - f0 : f0) * (f ? 1 - f0 : f0);
            for (auto &leaf : run_branches<Rational>(product_of_ghz({{2, e}, {2, f}}), c)) {
                auto dec = ghz_decompose<Rational>(discard_qubits(leaf.state, {2}));
                for (std::size_t m = 0; m < 4; ++m) {
                    per_parity[static_cast<std::size_t>(leaf.outcomes[0])][m] += w * leaf.probability * dec.plus[m];
                }
            }
        }
    }
    auto norm = [](std::vector<Rational> v) {
        Rational s(0);
        for (auto &x : v) {
            s += x;
        }
        for (auto &x : v) {
            x /= s;
        }
        return v;
    };
    EXPECT_EQ(norm(per_parity[0]), norm(per_parity[1]));
}

TEST(oracle, phase_worked_example) {
    auto o = oracle_phase(3, Q("0.8"), Q("0.6"));
    EXPECT_EQ(o.stray_mass, Q(0));
    Rational bi = o.identity_plus + o.identity_minus;
    Rational bc = o.residual_plus + o.residual_minus;
    EXPECT_EQ(o.identity_plus / bi, Q(6, 7));
    EXPECT_EQ(o.residual_plus / bc, Q(8, 11));
    EXPECT_EQ(bi, Q(14, 25));
    EXPECT_EQ(bc, Q(11, 25));
    for (const auto &rec : o.records) {
        Rational r = rec.plus / (rec.plus + rec.minus);
        EXPECT_EQ(r, rec.identity ? Q(6, 7) : Q(8, 11));
    }
}

TEST(oracle, phase_pure_inputs) {
    auto o = oracle_phase(3, Q(1), Q(1));
    EXPECT_EQ(o.identity_minus, Q(0));
    EXPECT_EQ(o.identity_plus, Q(1));
    EXPECT_EQ(o.residual_plus + o.residual_minus, Q(0));
}

TEST(oracle, phase_matches_closed_form_for_all_n) {
    for (int n = 2; n <= 5; ++n) {
        for (const auto &[p1, p2] : {std::pair{Q("0.8"), Q("0.6")}, {Q("0.55"), Q("0.9")}, {Q("0.3"), Q("0.7")}}) {
            auto o = oracle_phase(n, p1, p2);
            auto id = phase_identity(make_phase_ensemble(n, p1), make_phase_ensemble(n, p2));
            auto res = phase_residual(make_phase_ensemble(n, p1), make_phase_ensemble(n, p2));
            EXPECT_EQ(o.identity_plus + o.identity_minus, id.probability);
            EXPECT_EQ(o.identity_plus / id.probability, id.ensemble.p0);
            EXPECT_EQ(o.residual_plus / res.probability, res.ensemble.p0);
            EXPECT_EQ(o.stray_mass, Q(0));
        }
    }
}
