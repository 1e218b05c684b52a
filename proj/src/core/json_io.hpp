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

#include <string>

#include "ensemble.hpp"
#include "metrics.hpp"
#include "phaseflip.hpp"
#include "planner.hpp"

namespace ghzpurify {

// Ensemble documents:
//   {"n": 3, "weights": {"000": 0.8, "001": 0.1, ...}}
//   {"n": 3, "f0": 0.8, "symmetric": true}
// Keys are canonical bitstrings (leading 0); absent keys read as 0. A weight
// may also be a string holding a decimal or "p/q". Sums within 1e-9 of 1 are
// accepted and renormalized; anything further off is a validation error.
template <Scalar T>
Ensemble<T> ensemble_from_json(const std::string &text);

/// {"n": 2, "p0": 0.8}
template <Scalar T>
PhaseEnsemble<T> phase_from_json(const std::string &text);

std::string ensemble_to_json(const Ensemble<double> &rho);
std::string ensemble_to_json(const Ensemble<Rational> &rho);

std::string plan_to_json(const Plan &plan);

std::string report_to_json(const SchemeReport<double> &r);

inline constexpr double kNormalizationTolerance = 1e-9;

}  // namespace ghzpurify
