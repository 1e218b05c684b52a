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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ensemble.hpp"
#include "phaseflip.hpp"

namespace ghzpurify {

// Sequence planner over purification rounds.
//
// A plan is a chain of actions. The first acts on the two declared input
// ensembles; every later one acts on two copies of the previous output.
// An action spanning r rounds takes the pair count from 2^(R-1) to
// 2^(R+r-1), where R counts the rounds so far.
//
// Yield factors per action, for the first node (later nodes halve them,
// since their inputs must be paired up first):
//   identity, phase_identity     branch probability p
//   link                         cross probability / 2 (two cross
//                                results are linked into one system)
//   residual_second_round        sum over classes of Y_c q_c / 2
//   phase_residual_round         b q / 2
// with q the probability of the second-round identity branch.

enum class Action {
    identity,
    link,
    residual_second_round,
    phase_identity,
    phase_residual_round,
};

enum class Track { bitflip, phase };
enum class Objective { fidelity_first, yield_first };

/// `recycle` plans only what happens to cross combinations: the first
/// action must be link or residual_second_round (phase_residual_round on
/// the phase track) and the empty plan is not allowed.
enum class Scope { all, recycle };

const char *action_name(Action a);
const char *track_name(Track t);
const char *objective_name(Objective o);
const char *scope_name(Scope s);
Action parse_action(const std::string &s);
Track parse_track(const std::string &s);
Objective parse_objective(const std::string &s);
Scope parse_scope(const std::string &s);

int action_rounds(Action a);
std::vector<Action> track_actions(Track t);

struct PlanNode {
    Action action;
    std::string input_fingerprint;
    int rounds;
    int cost;  // input pairs added by this node
    double probability;
    double fidelity;
    double yield_factor;
};

struct Plan {
    Track track = Track::bitflip;
    bool feasible = false;
    double target = 0;
    int max_rounds = 0;
    Objective objective = Objective::fidelity_first;
    Scope scope = Scope::all;
    std::vector<PlanNode> nodes;
    double final_fidelity = 0;
    double total_yield = 0;
    int total_pairs = 0;
    /// Highest fidelity any allowed sequence reaches (informational).
    double best_reachable_fidelity = 0;
};

struct PlanRequest {
    Track track = Track::bitflip;
    Ensemble<double> rho1, rho2;
    PhaseEnsemble<double> phase1{2, 1.0}, phase2{2, 1.0};
    double target = 0;
    int max_rounds = 2;
    Objective objective = Objective::fidelity_first;
    Scope scope = Scope::all;
};

/// One action applied to a state pair.
struct StepResult {
    double probability;   // branch (or pooled cross) probability
    double base_factor;   // yield factor when used as the first node
    Ensemble<double> ensemble;      // bitflip track
    PhaseEnsemble<double> phase{2, 1.0};  // phase track
};

/// Empty when the action has nothing to act on (zero-probability branch,
/// wrong track, link on n != 3).
std::optional<StepResult> apply_action(Action a, const Ensemble<double> &rho1, const Ensemble<double> &rho2);
std::optional<StepResult> apply_phase_action(Action a, const PhaseEnsemble<double> &p1,
                                             const PhaseEnsemble<double> &p2);

/// 16 hex digits of FNV-1a over the photon count and weight bytes.
std::string fingerprint(const Ensemble<double> &a, const Ensemble<double> &b);
std::string fingerprint(const PhaseEnsemble<double> &a, const PhaseEnsemble<double> &b);

/// Ordering used to pick the plan: feasible first, then fewer rounds, then
/// fidelity/yield in objective order (1e-12 counts as equal), then fewer
/// nodes, then action order. Returns true when `a` ranks before `b`.
bool plan_ranks_before(const Plan &a, const Plan &b);

/// Exhaustive search. An infeasible request returns feasible = false and no
/// nodes; it never substitutes a best effort.
Plan search_plan(const PlanRequest &req);

/// Re-executes the node chain from the declared inputs.
Plan replay_plan(const PlanRequest &req, const std::vector<Action> &actions);

void check_request(const PlanRequest &req);

}  // namespace ghzpurify
