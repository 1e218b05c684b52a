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

#include "pattern.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "ensemble.hpp"
#include "test_util.hpp"

using namespace ghzpurify;
using ghzpurify::testing::Q;

TEST(pattern, canonicalize_examples) {
    EXPECT_EQ(canonicalize(3, 0b100), 0b011u);
    EXPECT_EQ(canonicalize(3, 0b000), 0b000u);
    EXPECT_EQ(canonicalize(4, 0b1010), 0b0101u);
}

TEST(pattern, canonicalize_errors) {
    EXPECT_THROW_CODE(canonicalize(1, 0), ErrorCode::invalid_arity);
    EXPECT_THROW_CODE(canonicalize(13, 0), ErrorCode::size_cap);
    EXPECT_THROW_CODE(canonicalize(3, 0b1000), ErrorCode::invalid_argument);
}

TEST(pattern, canonicalize_idempotent_and_complement_invariant) {
    for (int n = 2; n <= 8; ++n) {
        for (Pattern x = 0; x <= full_mask(n); ++x) {
            Pattern c = canonicalize(n, x);
            EXPECT_EQ(canonicalize(n, c), c);
            EXPECT_EQ(canonicalize(n, x ^ full_mask(n)), c);
            EXPECT_LT(c, pattern_count(n));
        }
    }
}

TEST(pattern, parity_class_examples) {
    EXPECT_EQ(parity_class(3, 0b000, 0b010), 0b010u);
    EXPECT_EQ(parity_label(3, 0b010), "eoe");
    EXPECT_EQ(class_label(3, 0b010), "eoe/oeo");
    EXPECT_EQ(parity_class(4, 0b0000, 0b0011), 0b0011u);
    EXPECT_EQ(class_label(4, 0b0011), "eeoo/ooee");
}

TEST(pattern, parity_class_properties) {
    for (int n = 2; n <= 5; ++n) {
        for (Pattern e = 0; e < pattern_count(n); ++e) {
            EXPECT_EQ(parity_class(n, e, e), 0u);
            for (Pattern f = 0; f < pattern_count(n); ++f) {
                EXPECT_EQ(parity_class(n, e, f), parity_class(n, f, e));
            }
        }
    }
}

TEST(pattern, single_flip_indices) {
    EXPECT_EQ(single_flip_index(3, 0), 3u);
    EXPECT_EQ(single_flip_index(3, 1), 2u);
    EXPECT_EQ(single_flip_index(3, 2), 1u);
    EXPECT_EQ(single_flip_index(4, 3), 1u);
    EXPECT_THROW_CODE(single_flip_index(3, 3), ErrorCode::invalid_argument);
}

TEST(pattern, string_round_trip) {
    EXPECT_EQ(pattern_to_string(4, 0b0101), "0101");
    EXPECT_EQ(pattern_from_string("0101"), 0b0101u);
    EXPECT_THROW_CODE(pattern_from_string("01x"), ErrorCode::parse);
    EXPECT_EQ(even_parties(4, 0b0011), (std::vector<int>{0, 1}));
    EXPECT_EQ(odd_parties(4, 0b0011), (std::vector<int>{2, 3}));
}

TEST(ensemble, symmetric_shape) {
    auto e = symmetric_ensemble(3, Q(4, 5));
    ASSERT_EQ(e.weights.size(), 4u);
    EXPECT_EQ(e.weights[0], Q(4, 5));
    EXPECT_EQ(e.weights[3], Q(1, 15));
    EXPECT_EQ(e.total(), Q(1));
    EXPECT_THROW_CODE(symmetric_ensemble(3, 1.5), ErrorCode::invalid_argument);
    EXPECT_THROW_CODE(symmetric_ensemble(13, 0.5), ErrorCode::size_cap);
}

TEST(ensemble, make_rejects_bad_shapes) {
    EXPECT_THROW_CODE(make_ensemble<double>(3, {0.5, 0.5}), ErrorCode::invalid_argument);
    EXPECT_THROW_CODE(make_ensemble<double>(2, {1.5, -0.5}), ErrorCode::invalid_argument);
    EXPECT_THROW_CODE(check_normalized(make_ensemble<double>(2, {0.5, 0.4}), 1e-9), ErrorCode::validation);
    EXPECT_THROW_CODE(normalized(make_ensemble<double>(2, {0.0, 0.0})), ErrorCode::degenerate_branch);
}

TEST(ensemble, relabel_examples) {
    auto e = make_ensemble<Rational>(3, {Q(1, 10), Q(0), Q(9, 10), Q(0)});
    auto r = relabel(e, 0b010);
    EXPECT_EQ(r.weights, (std::vector<Rational>{Q(9, 10), Q(0), Q(1, 10), Q(0)}));
    EXPECT_EQ(relabel(e, 0).weights, e.weights);

    // {000:a, 001:d, 010:b, 011:c} under flips 011 -> {000:c, 011:a, 010:d, 001:b}.
    Rational a = Q(1, 2), b = Q(1, 4), c = Q(1, 8), d = Q(1, 8) ;
    auto g = make_ensemble<Rational>(3, {a, d, b, c});
    auto h = relabel(g, 0b011);
    EXPECT_EQ(h.weights[0b000], c);
    EXPECT_EQ(h.weights[0b011], a);
    EXPECT_EQ(h.weights[0b010], d);
    EXPECT_EQ(h.weights[0b001], b);
    EXPECT_THROW_CODE(relabel(g, 0b1000), ErrorCode::invalid_arity);
}

TEST(ensemble, relabel_preserves_multiset) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto e = ghzpurify::testing::random_ensemble<Rational>(n, rng);
        Pattern flips = static_cast<Pattern>(rng() % (full_mask(n) + 1));
        auto r = relabel(e, flips);
        auto a = e.weights, b = r.weights;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
        EXPECT_EQ(r.total(), Q(1));
        auto m1 = argmax_to_zero(e).ensemble.fidelity();
        auto m2 = argmax_to_zero(r).ensemble.fidelity();
        EXPECT_EQ(m1, m2);
    }
}

TEST(ensemble, argmax_to_zero_examples) {
    auto e = make_ensemble<Rational>(3, {Q(1, 5), Q(0), Q(4, 5), Q(0)});
    auto r = argmax_to_zero(e);
    EXPECT_EQ(r.mask, 0b010u);
    EXPECT_EQ(r.ensemble.weights[0], Q(4, 5));
    EXPECT_EQ(r.ensemble.weights[0b010], Q(1, 5));

    auto already = symmetric_ensemble(3, Q(1, 2));
    EXPECT_EQ(argmax_to_zero(already).mask, 0u);

    // Ties go to the smallest index.
    auto tie = make_ensemble<Rational>(3, {Q(1, 10), Q(3, 10), Q(3, 10), Q(3, 10)});
    EXPECT_EQ(argmax_to_zero(tie).mask, 1u);
}
