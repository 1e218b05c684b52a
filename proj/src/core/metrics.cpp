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

#include "metrics.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <utility>

namespace ghzpurify {

namespace {

constexpr std::array<std::pair<RegionPredicate, const char *>, 13> kPredicates{{
    {RegionPredicate::eq7, "eq7"},
    {RegionPredicate::fig3, "fig3"},
    {RegionPredicate::fig4_fprime, "fig4-fprime"},
    {RegionPredicate::fig4_ft, "fig4-ft"},
    {RegionPredicate::fig5_choice, "fig5-choice"},
    {RegionPredicate::fig6_fdprime, "fig6-fdprime"},
    {RegionPredicate::fig6_ftprime, "fig6-ftprime"},
    {RegionPredicate::fig7, "fig7"},
    {RegionPredicate::fig8, "fig8"},
    {RegionPredicate::fig9, "fig9"},
    {RegionPredicate::fig10, "fig10"},
    {RegionPredicate::fig11, "fig11"},
    {RegionPredicate::fig12, "fig12"},
}};

}  // namespace

RegionPredicate parse_predicate(const std::string &id) {
    for (auto [p, name] : kPredicates) {
        if (id == name) {
            return p;
        }
    }
    fail(ErrorCode::invalid_argument, "unknown predicate '" + id + "'");
}

const char *predicate_id(RegionPredicate p) {
    for (auto [q, name] : kPredicates) {
        if (q == p) {
            return name;
        }
    }
    return "?";
}

double GridAxis::at(int i) const {
    if (i == steps - 1) {
        return max;
    }
    return min + (max - min) * i / (steps - 1);
}

void check_axis(const GridAxis &axis) {
    if (axis.steps < 2) {
        fail(ErrorCode::validation, "grid needs at least 2 points per axis");
    }
    if (!(axis.min >= 0 && axis.max <= 1 && axis.min <= axis.max)) {
        fail(ErrorCode::validation, "grid bounds must satisfy 0 <= min <= max <= 1");
    }
}

std::string region_sweep_csv(RegionPredicate p, const GridAxis &f1_axis, const GridAxis &f2_axis, int rounds) {
    check_axis(f1_axis);
    check_axis(f2_axis);
    if (p == RegionPredicate::fig10 && (rounds < 2 || rounds > 6)) {
        fail(ErrorCode::invalid_argument, "rounds must lie in 2..6");
    }
    std::string out = "f1,f2,value\n";
    char buf[96];
    for (int i = 0; i < f1_axis.steps; ++i) {
        double f1 = f1_axis.at(i);
        for (int j = 0; j < f2_axis.steps; ++j) {
            double f2 = f2_axis.at(j);
            auto v = region_value(p, f1, f2, rounds);
            if (v && std::isfinite(*v)) {
                std::snprintf(buf, sizeof(buf), "%.6g,%.6g,%.6g\n", f1, f2, *v);
            } else {
                std::snprintf(buf, sizeof(buf), "%.6g,%.6g,nan\n", f1, f2);
            }
            out += buf;
        }
    }
    return out;
}

}  // namespace ghzpurify
