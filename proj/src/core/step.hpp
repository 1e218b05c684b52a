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
#include "phaseflip.hpp"

namespace ghzpurify {

/// Scheme ids accepted by step_json.
bool is_phase_scheme(const std::string &scheme);
void check_scheme(const std::string &scheme);

/// Branch table of one step as JSON. Numbers are JSON numbers for double
/// and "p/q" strings for Rational.
template <Scalar T>
std::string step_json(const std::string &scheme, const Ensemble<T> &rho1, const Ensemble<T> &rho2);

template <Scalar T>
std::string phase_step_json(const std::string &scheme, const PhaseEnsemble<T> &p1, const PhaseEnsemble<T> &p2);

}  // namespace ghzpurify
