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

#include "bitflip.hpp"

#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace ghzpurify;
using ghzpurify::testing::Q;
using ghzpurify::testing::random_ensemble;

namespace {

Ensemble<Rational> sym(int n, const char *f0) {
    return symmetric_ensemble(n, Q(f0));
}

}  // namespace

TEST(bitflip, purify_identity_symmetric_three) {
    auto o = purify_identity(sym(3, "0.8"), sym(3, "0.6"));
    EXPECT_EQ(o.ensemble.fidelity(), Q(18, 19));
    EXPECT_EQ(o.probability, Q(38, 75));
    EXPECT_EQ(o.ensemble.total(), Q(1));
    EXPECT_NEAR(to_double(o.ensemble.fidelity()), 0.947368, 5e-7);
}

TEST(bitflip, purify_identity_pure_inputs) {
    auto o = purify_identity(sym(3, "1"), sym(3, "1"));
    EXPECT_EQ(o.ensemble.fidelity(), Q(1));
    EXPECT_EQ(o.probability, Q(1));
}

TEST(bitflip, purify_identity_symmetric_four) {
    auto o = purify_identity(sym(4, "0.5"), sym(4, "0.5"));
    EXPECT_EQ(o.ensemble.fidelity(), Q(7, 8));
}

TEST(bitflip, purify_identity_degenerate) {
    auto a = make_ensemble<Rational>(3, {Q(1), Q(0), Q(0), Q(0)});
    auto b = make_ensemble<Rational>(3, {Q(0), Q(1), Q(0), Q(0)});
    EXPECT_THROW_CODE(purify_identity(a, b), ErrorCode::degenerate_branch);
    EXPECT_THROW_CODE(purify_identity(sym(3, "0.5"), sym(4, "0.5")), ErrorCode::invalid_arity);
}

TEST(bitflip, purify_identity_is_symmetric) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto a = random_ensemble<Rational>(n, rng);
        auto b = random_ensemble<Rational>(n, rng);
        auto x = purify_identity(a, b);
        auto y = purify_identity(b, a);
        EXPECT_EQ(x.probability, y.probability);
        EXPECT_EQ(x.ensemble.weights, y.ensemble.weights);
    }
}

TEST(bitflip, uniform_is_fixed_point) {
    for (int n = 2; n <= 6; ++n) {
        auto u = symmetric_ensemble(n, Q(1, 1L << (n - 1)));
        auto o = purify_identity(u, u);
        EXPECT_EQ(o.ensemble.weights, u.weights) << n;
    }
}

TEST(bitflip, identity_improves_examples) {
    EXPECT_TRUE(identity_improves(sym(3, "0.8"), sym(3, "0.26")));
    EXPECT_FALSE(identity_improves(sym(3, "0.8"), sym(3, "0.25")));
    EXPECT_EQ(purify_identity(sym(3, "0.8"), sym(3, "0.25")).ensemble.fidelity(), Q(4, 5));
    EXPECT_FALSE(identity_improves(sym(4, "0.8"), sym(4, "0.125")));
    // Inputs are reordered so the higher fidelity plays 1F.
    EXPECT_TRUE(identity_improves(sym(3, "0.26"), sym(3, "0.8")));
}

TEST(bitflip, identity_threshold_boundaries_exact) {
    for (int n = 3; n <= 5; ++n) {
        Rational bound = Q(1, 1L << (n - 1));
        for (const char *f1 : {"0.8", "0.5", "0.95"}) {
            auto hi = symmetric_ensemble(n, Q(f1));
            EXPECT_FALSE(identity_improves(hi, symmetric_ensemble(n, bound))) << n;
            EXPECT_TRUE(identity_improves(hi, symmetric_ensemble(n, bound + Q(1, 1000000)))) << n;
            EXPECT_FALSE(identity_improves(hi, symmetric_ensemble(n, bound - Q(1, 1000000)))) << n;
        }
    }
}

TEST(bitflip, identity_improves_agrees_with_threshold_form) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto a = random_ensemble<Rational>(n, rng);
        auto b = random_ensemble<Rational>(n, rng);
        EXPECT_EQ(identity_improves(a, b), identity_improves_by_threshold(a, b));
    }
}

TEST(bitflip, cross_residual_class_weights_three) {
    auto a = make_ensemble<Rational>(3, {Q(1, 2), Q(1, 4), Q(1, 8), Q(1, 8)});
    auto b = make_ensemble<Rational>(3, {Q(2, 5), Q(1, 5), Q(1, 10), Q(3, 10)});
    auto raw = class_weights(a, b, 0b010);
    EXPECT_EQ(raw.weights[0], a.weights[0] * b.weights[2]);
    EXPECT_EQ(raw.weights[2], a.weights[2] * b.weights[0]);
    EXPECT_EQ(raw.weights[1], a.weights[1] * b.weights[3]);
    EXPECT_EQ(raw.weights[3], a.weights[3] * b.weights[1]);
    auto o = cross_residual(a, b, 0b010);
    EXPECT_EQ(o.probability, raw.total());
    EXPECT_EQ(o.ensemble.fidelity(), raw.weights[0] / raw.total());
}

TEST(bitflip, cross_residual_symmetric_values) {
    auto o = cross_residual(sym(3, "0.8"), sym(3, "0.6"), 0b010);
    EXPECT_EQ(o.probability, Q(148, 900));
    auto r = argmax_to_zero(o.ensemble);
    EXPECT_EQ(r.mask, 0u);
    EXPECT_EQ(r.ensemble.fidelity(), Q(24, 37));

    auto e = argmax_to_zero(cross_residual(sym(3, "0.7"), sym(3, "0.7"), 0b010).ensemble).ensemble;
    EXPECT_EQ(e.fidelity(), Q(7, 16));
}

TEST(bitflip, cross_residual_rejects_identity_class) {
    EXPECT_THROW_CODE(cross_residual(sym(3, "0.8"), sym(3, "0.6"), 0), ErrorCode::contract_violation);
}

TEST(bitflip, second_round_worked_example) {
    auto r = residual_round(sym(3, "0.8"), sym(3, "0.6"), 0b010);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->second.ensemble.fidelity(), Q(576, 665));
    EXPECT_NEAR(to_double(r->second.ensemble.fidelity()), 0.866, 5e-4);
    // Unnormalized second-round coefficient q * Y^2.
    Rational p_prime = r->second.probability * r->class_probability * r->class_probability;
    EXPECT_NEAR(to_double(p_prime), 0.013136, 5e-7);
    EXPECT_EQ(second_round(sym(3, "1"), sym(3, "1")).ensemble.fidelity(), Q(1));
}

TEST(bitflip, residual_improves_examples) {
    EXPECT_TRUE(residual_improves(sym(3, "0.8"), sym(3, "0.6")));
    EXPECT_FALSE(residual_improves(sym(3, "0.7"), sym(3, "0.7")));
    EXPECT_FALSE(residual_improves(sym(3, "1"), sym(3, "1")));
}

TEST(bitflip, three_choices_examples) {
    auto c = three_choices(3, Q("0.8"), Q("0.6"));
    EXPECT_EQ(c.index, 1);
    EXPECT_EQ(c.value, Q(24, 37));
    EXPECT_EQ(three_choices(3, Q("0.6"), Q("0.6")).index, 1);
    auto d = three_choices(4, Q("0.9"), Q("0.5"));
    EXPECT_EQ(d.index, 1);
    EXPECT_EQ(d.value, Q(63, 76));
    EXPECT_EQ(three_choices(3, Q(1), Q(1)).value, Q(1));
    EXPECT_THROW_CODE(three_choices(3, 1.2, 0.5), ErrorCode::invalid_argument);
}

TEST(bitflip, three_choices_matches_branches) {
    // Choice 1 for f1 > f2 > 1/2^(N-1); the value equals the relabeled residual.
    for (int n = 3; n <= 5; ++n) {
        for (const char *f1 : {"0.9", "0.7"}) {
            for (const char *f2 : {"0.6", "0.5"}) {
                auto c = three_choices(n, Q(f1), Q(f2));
                EXPECT_EQ(c.index, 1);
                auto raw = cross_residual(sym(n, f1), sym(n, f2), 1).ensemble;
                EXPECT_EQ(argmax_to_zero(raw).ensemble.fidelity(), c.value) << n << f1 << f2;
            }
        }
    }
}

TEST(bitflip, branch_completeness_and_conservation) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto a = random_ensemble<Rational>(n, rng, true);
        auto b = random_ensemble<Rational>(n, rng, true);
        Rational total(0), avg(0);
        for (Pattern c = 0; c < pattern_count(n); ++c) {
            auto raw = class_weights(a, b, c);
            total += raw.total();
            avg += raw.weights[0];
        }
        EXPECT_EQ(total, Q(1));
        EXPECT_EQ(avg, a.fidelity());
    }
}

TEST(bitflip, double_mode_matches_exact) {
    auto d = purify_identity(symmetric_ensemble(3, 0.8), symmetric_ensemble(3, 0.6));
    EXPECT_NEAR(d.ensemble.fidelity(), 18.0 / 19.0, 1e-15);
    EXPECT_NEAR(d.probability, 38.0 / 75.0, 1e-15);
}
