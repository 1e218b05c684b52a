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

#include "planner.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <utility>

#include "link.hpp"

namespace ghzpurify {

namespace {

constexpr double kEps = 1e-12;

template <class E>
struct Names {
    E value;
    const char *name;
};

constexpr std::array<Names<Action>, 5> kActions{{
    {Action::identity, "identity"},
    {Action::link, "link"},
    {Action::residual_second_round, "residual_second_round"},
    {Action::phase_identity, "phase_identity"},
    {Action::phase_residual_round, "phase_residual_round"},
}};
constexpr std::array<Names<Track>, 2> kTracks{{{Track::bitflip, "bitflip"}, {Track::phase, "phase"}}};
constexpr std::array<Names<Objective>, 2> kObjectives{
    {{Objective::fidelity_first, "fidelity-first"}, {Objective::yield_first, "yield-first"}}};
constexpr std::array<Names<Scope>, 2> kScopes{{{Scope::all, "all"}, {Scope::recycle, "recycle"}}};

template <class E, std::size_t K>
const char *name_of(const std::array<Names<E>, K> &table, E v) {
    for (const auto &e : table) {
        if (e.value == v) {
            return e.name;
        }
    }
    return "?";
}

template <class E, std::size_t K>
E parse_of(const std::array<Names<E>, K> &table, const std::string &s, const char *what) {
    for (const auto &e : table) {
        if (s == e.name) {
            return e.value;
        }
    }
    fail(ErrorCode::invalid_argument, std::string("unknown ") + what + " '" + s + "'");
}

struct Fnv {
    std::uint64_t h = 1469598103934665603ULL;

    void bytes(const void *p, std::size_t len) {
        const auto *c = static_cast<const unsigned char *>(p);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= c[i];
            h *= 1099511628211ULL;
        }
    }
    void value(double x) {
        if (x == 0) {
            x = 0;  // fold -0
        }
        bytes(&x, sizeof x);
    }
    void value(int x) {
        bytes(&x, sizeof x);
    }
    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
};

Ensemble<double> mixture(const std::vector<std::pair<double, Ensemble<double>>> &parts) {
    Ensemble<double> out = parts.at(0).second;
    std::fill(out.weights.begin(), out.weights.end(), 0.0);
    for (const auto &[w, e] : parts) {
        for (std::size_t m = 0; m < out.weights.size(); ++m) {
            out.weights[m] += w * e.weights[m];
        }
    }
    return normalized(out);
}

bool is_first_allowed(Track track, Scope scope, Action a) {
    if (scope == Scope::all) {
        return true;
    }
    if (track == Track::bitflip) {
        return a == Action::link || a == Action::residual_second_round;
    }
    return a == Action::phase_residual_round;
}

bool close(double a, double b) {
    return std::fabs(a - b) <= kEps;
}

int total_rounds(const Plan &p) {
    int r = 0;
    for (const auto &n : p.nodes) {
        r += n.rounds;
    }
    return r;
}

int pairs_after(int rounds) {
    return rounds == 0 ? 0 : 1 << (rounds - 1);
}

}  // namespace

const char *action_name(Action a) {
    return name_of(kActions, a);
}
const char *track_name(Track t) {
    return name_of(kTracks, t);
}
const char *objective_name(Objective o) {
    return name_of(kObjectives, o);
}
const char *scope_name(Scope s) {
    return name_of(kScopes, s);
}
Action parse_action(const std::string &s) {
    return parse_of(kActions, s, "action");
}
Track parse_track(const std::string &s) {
    return parse_of(kTracks, s, "track");
}
Objective parse_objective(const std::string &s) {
    return parse_of(kObjectives, s, "objective");
}
Scope parse_scope(const std::string &s) {
    return parse_of(kScopes, s, "scope");
}

int action_rounds(Action a) {
    switch (a) {
        case Action::identity:
        case Action::phase_identity:
            return 1;
        default:
            return 2;
    }
}

std::vector<Action> track_actions(Track t) {
    if (t == Track::bitflip) {
        return {Action::identity, Action::link, Action::residual_second_round};
    }
    return {Action::phase_identity, Action::phase_residual_round};
}

std::string fingerprint(const Ensemble<double> &a, const Ensemble<double> &b) {
    Fnv f;
    for (const auto *e : {&a, &b}) {
        f.value(e->n);
        for (int p : e->parties) {
            f.value(p);
        }
        for (double w : e->weights) {
            f.value(w);
        }
    }
    return f.hex();
}

std::string fingerprint(const PhaseEnsemble<double> &a, const PhaseEnsemble<double> &b) {
    Fnv f;
    f.value(-1);
    for (const auto *e : {&a, &b}) {
        f.value(e->n);
        f.value(e->p0);
    }
    return f.hex();
}

std::optional<StepResult> apply_action(Action a, const Ensemble<double> &rho1, const Ensemble<double> &rho2) {
    check_same_n(rho1, rho2);
    switch (a) {
        case Action::identity: {
            auto w = class_weights(rho1, rho2, 0);
            double p = w.total();
            if (p == 0) {
                return std::nullopt;
            }
            return StepResult{p, p, normalized(w)};
        }
        case Action::link: {
            if (rho1.n != 3) {
                return std::nullopt;
            }
            std::vector<std::pair<double, Ensemble<double>>> parts;
            double cross = 0;
            for (Pattern c = 1; c < 4; ++c) {
                cross += class_weights(rho1, rho2, c).total();
            }
            for (Pattern c1 = 1; c1 < 4; ++c1) {
                for (Pattern c2 = c1 + 1; c2 < 4; ++c2) {
                    double y1 = class_weights(rho1, rho2, c1).total();
                    double y2 = class_weights(rho1, rho2, c2).total();
                    if (y1 * y2 == 0) {
                        continue;
                    }
                    auto e1 = extract_subsystem(rho1, rho2, c1, default_keep(rho1, rho2, c1)).ensemble;
                    auto e2 = extract_subsystem(rho1, rho2, c2, default_keep(rho1, rho2, c2)).ensemble;
                    auto linked = entanglement_link(e1, e2).ensemble;
                    linked.parties = rho1.parties;
                    parts.emplace_back(y1 * y2, std::move(linked));
                }
            }
            if (parts.empty()) {
                return std::nullopt;
            }
            return StepResult{cross, cross / 2, mixture(parts)};
        }
        case Action::residual_second_round: {
            std::vector<std::pair<double, Ensemble<double>>> parts;
            double total = 0;
            for (Pattern c = 1; c < rho1.weights.size(); ++c) {
                auto r = residual_round(rho1, rho2, c);
                if (!r) {
                    continue;
                }
                double w = r->class_probability * r->second.probability;
                total += w;
                parts.emplace_back(w, r->second.ensemble);
            }
            if (parts.empty()) {
                return std::nullopt;
            }
            return StepResult{total, total / 2, mixture(parts)};
        }
        default:
            return std::nullopt;
    }
}

std::optional<StepResult> apply_phase_action(Action a, const PhaseEnsemble<double> &p1,
                                             const PhaseEnsemble<double> &p2) {
    switch (a) {
        case Action::phase_identity: {
            double p = p1.p0 * p2.p0 + p1.p1() * p2.p1();
            if (p == 0) {
                return std::nullopt;
            }
            auto o = phase_identity(p1, p2);
            StepResult r{o.probability, o.probability, {}, o.ensemble};
            return r;
        }
        case Action::phase_residual_round: {
            double b = p1.p0 * p2.p1() + p1.p1() * p2.p0;
            if (b == 0) {
                return std::nullopt;
            }
            auto res = phase_residual(p1, p2);
            auto second = phase_second_round(res.ensemble);
            StepResult r{res.probability * second.probability, res.probability * second.probability / 2, {},
                         second.ensemble};
            return r;
        }
        default:
            return std::nullopt;
    }
}

bool plan_ranks_before(const Plan &a, const Plan &b) {
    if (a.feasible != b.feasible) {
        return a.feasible;
    }
    int ra = total_rounds(a), rb = total_rounds(b);
    if (ra != rb) {
        return ra < rb;
    }
    std::array<std::pair<double, double>, 2> keys{{{a.final_fidelity, b.final_fidelity}, {a.total_yield, b.total_yield}}};
    if (a.objective == Objective::yield_first) {
        std::swap(keys[0], keys[1]);
    }
    for (auto [x, y] : keys) {
        if (!close(x, y)) {
            return x > y;
        }
    }
    if (a.nodes.size() != b.nodes.size()) {
        return a.nodes.size() < b.nodes.size();
    }
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        if (a.nodes[i].action != b.nodes[i].action) {
            return a.nodes[i].action < b.nodes[i].action;
        }
    }
    return false;
}

void check_request(const PlanRequest &req) {
    if (req.max_rounds < 0 || req.max_rounds > 6) {
        fail(ErrorCode::invalid_argument, "max_rounds must lie in 0..6");
    }
    if (!(req.target >= 0 && req.target <= 1)) {
        fail(ErrorCode::invalid_argument, "target must lie in [0, 1]");
    }
    if (req.track == Track::bitflip) {
        check_normalized(req.rho1, 1e-9);
        check_normalized(req.rho2, 1e-9);
        check_same_n(req.rho1, req.rho2);
    } else {
        make_phase_ensemble(req.phase1.n, req.phase1.p0);
        make_phase_ensemble(req.phase2.n, req.phase2.p0);
        if (req.phase1.n != req.phase2.n) {
            fail(ErrorCode::invalid_arity, "ensembles have different photon counts");
        }
    }
}

namespace {

// State carried between nodes: the two ensembles the next action acts on.
struct State {
    Ensemble<double> a, b;
    PhaseEnsemble<double> pa{2, 1.0}, pb{2, 1.0};
};

class Searcher {
   public:
    explicit Searcher(const PlanRequest &req) : req_(req) {
    }

    Plan run() {
        Plan empty = base_plan();
        State s0{req_.rho1, req_.rho2, req_.phase1, req_.phase2};
        empty.final_fidelity = initial_fidelity();
        empty.total_yield = 1;
        empty.feasible = empty.final_fidelity >= req_.target;
        if (req_.scope == Scope::all) {
            consider(empty);
        }
        dfs(s0, empty, 0);
        Plan out = best_ ? *best_ : base_plan();
        if (!out.feasible) {
            out = base_plan();
            out.feasible = false;
        }
        out.best_reachable_fidelity = best_reachable_;
        return out;
    }

   private:
    double initial_fidelity() const {
        if (req_.track == Track::bitflip) {
            return std::max(req_.rho1.fidelity(), req_.rho2.fidelity());
        }
        return std::max(req_.phase1.p0, req_.phase2.p0);
    }

    Plan base_plan() const {
        Plan p;
        p.track = req_.track;
        p.target = req_.target;
        p.max_rounds = req_.max_rounds;
        p.objective = req_.objective;
        p.scope = req_.scope;
        return p;
    }

    const std::optional<StepResult> &step(const State &s, Action a, std::string &fp) {
        fp = req_.track == Track::bitflip ? fingerprint(s.a, s.b) : fingerprint(s.pa, s.pb);
        auto key = std::make_pair(fp, a);
        auto it = memo_.find(key);
        if (it == memo_.end()) {
            auto r = req_.track == Track::bitflip ? apply_action(a, s.a, s.b) : apply_phase_action(a, s.pa, s.pb);
            it = memo_.emplace(key, std::move(r)).first;
        }
        return it->second;
    }

    void consider(const Plan &p) {
        if (p.final_fidelity > best_reachable_) {
            best_reachable_ = p.final_fidelity;
        }
        if (!best_ || plan_ranks_before(p, *best_)) {
            best_ = p;
        }
    }

    void dfs(const State &s, const Plan &prefix, int rounds) {
        for (Action a : track_actions(req_.track)) {
            int r = action_rounds(a);
            if (rounds + r > req_.max_rounds) {
                continue;
            }
            if (prefix.nodes.empty() && !is_first_allowed(req_.track, req_.scope, a)) {
                continue;
            }
            std::string fp;
            const auto &res = step(s, a, fp);
            if (!res) {
                continue;
            }
            PlanNode node{a,
                          fp,
                          r,
                          pairs_after(rounds + r) - pairs_after(rounds),
                          res->probability,
                          req_.track == Track::bitflip ? res->ensemble.fidelity() : res->phase.p0,
                          prefix.nodes.empty() ? res->base_factor : res->base_factor / 2};
            Plan next = prefix;
            next.nodes.push_back(node);
            next.final_fidelity = node.fidelity;
            next.total_yield = prefix.total_yield * node.yield_factor;
            next.total_pairs = pairs_after(rounds + r);
            next.feasible = next.final_fidelity >= req_.target;
            consider(next);
            State ns{res->ensemble, res->ensemble, res->phase, res->phase};
            dfs(ns, next, rounds + r);
        }
    }

    const PlanRequest &req_;
    std::map<std::pair<std::string, Action>, std::optional<StepResult>> memo_;
    std::optional<Plan> best_;
    double best_reachable_ = 0;
};

}  // namespace

Plan search_plan(const PlanRequest &req) {
    check_request(req);
    return Searcher(req).run();
}

Plan replay_plan(const PlanRequest &req, const std::vector<Action> &actions) {
    check_request(req);
    Plan p;
    p.track = req.track;
    p.target = req.target;
    p.max_rounds = req.max_rounds;
    p.objective = req.objective;
    p.scope = req.scope;
    p.total_yield = 1;
    Ensemble<double> a = req.rho1, b = req.rho2;
    PhaseEnsemble<double> pa = req.phase1, pb = req.phase2;
    p.final_fidelity = req.track == Track::bitflip ? std::max(a.fidelity(), b.fidelity()) : std::max(pa.p0, pb.p0);
    int rounds = 0;
    for (Action act : actions) {
        auto r = req.track == Track::bitflip ? apply_action(act, a, b) : apply_phase_action(act, pa, pb);
        if (!r) {
            fail(ErrorCode::contract_violation, std::string("action ") + action_name(act) + " is not applicable");
        }
        int k = action_rounds(act);
        PlanNode node{act,
                      req.track == Track::bitflip ? fingerprint(a, b) : fingerprint(pa, pb),
                      k,
                      pairs_after(rounds + k) - pairs_after(rounds),
                      r->probability,
                      req.track == Track::bitflip ? r->ensemble.fidelity() : r->phase.p0,
                      p.nodes.empty() ? r->base_factor : r->base_factor / 2};
        rounds += k;
        p.nodes.push_back(node);
        p.final_fidelity = node.fidelity;
        p.total_yield *= node.yield_factor;
        a = b = r->ensemble;
        pa = pb = r->phase;
    }
    p.total_pairs = pairs_after(rounds);
    p.feasible = p.final_fidelity >= req.target;
    return p;
}

}  // namespace ghzpurify
