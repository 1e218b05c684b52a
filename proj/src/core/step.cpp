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

#include "step.hpp"

#include <array>

#include "json.hpp"
#include "link.hpp"

namespace ghzpurify {

namespace {

using nlohmann::json;

constexpr std::array<const char *, 4> kBitflipSchemes{"p1-identity", "p1-branches", "p1prime", "p1-link"};
constexpr std::array<const char *, 3> kPhaseSchemes{"p2-identity", "p2-residual", "p2-second"};

json num(double x) {
    return x;
}
json num(const Rational &x) {
    return to_string(x);
}

template <Scalar T>
json weights_json(const Ensemble<T> &rho) {
    json w = json::object();
    for (Pattern m = 0; m < rho.weights.size(); ++m) {
        w[pattern_to_string(rho.n, m)] = num(rho.weights[m]);
    }
    return w;
}

std::string party_names(const std::vector<int> &parties) {
    std::string s;
    for (int p : parties) {
        s += p < 26 ? static_cast<char>('A' + p) : '?';
    }
    return s;
}

template <Scalar T>
json branch_json(int n, Pattern c, const Ensemble<T> &raw) {
    T p = raw.total();
    json b{{"class", pattern_to_string(n, c)}, {"label", class_label(n, c)}, {"probability", num(p)}};
    if (p == T(0)) {
        b["fidelity"] = nullptr;
        b["weights"] = nullptr;
    } else {
        auto e = normalized(raw);
        b["fidelity"] = num(e.fidelity());
        b["weights"] = weights_json(e);
    }
    return b;
}

template <Scalar T>
json phase_json(const PhaseOutcome<T> &o) {
    return {{"probability", num(o.probability)}, {"p0", num(o.ensemble.p0)}};
}

}  // namespace

bool is_phase_scheme(const std::string &scheme) {
    for (const char *s : kPhaseSchemes) {
        if (scheme == s) {
            return true;
        }
    }
    return false;
}

void check_scheme(const std::string &scheme) {
    if (is_phase_scheme(scheme)) {
        return;
    }
    for (const char *s : kBitflipSchemes) {
        if (scheme == s) {
            return;
        }
    }
    fail(ErrorCode::invalid_argument, "unknown scheme '" + scheme + "'");
}

template <Scalar T>
std::string step_json(const std::string &scheme, const Ensemble<T> &rho1, const Ensemble<T> &rho2) {
    check_scheme(scheme);
    if (is_phase_scheme(scheme)) {
        fail(ErrorCode::invalid_argument, "scheme '" + scheme + "' takes phase ensembles");
    }
    check_same_n(rho1, rho2);
    int n = rho1.n;
    json doc{{"scheme", scheme}, {"exact", std::same_as<T, Rational>}, {"n", n}};
    if (scheme == "p1-identity") {
        auto o = purify_identity(rho1, rho2);
        doc["branches"] = json::array({branch_json(n, 0, class_weights(rho1, rho2, 0))});
        doc["improves"] = identity_improves(rho1, rho2);
    } else if (scheme == "p1-branches") {
        json rows = json::array();
        T total(0), average(0);
        for (Pattern c = 0; c < pattern_count(n); ++c) {
            auto raw = class_weights(rho1, rho2, c);
            total += raw.total();
            average += raw.weights[0];
            rows.push_back(branch_json(n, c, raw));
        }
        doc["branches"] = rows;
        doc["total_probability"] = num(total);
        doc["average_fidelity"] = num(average);
    } else if (scheme == "p1prime") {
        json rows = json::array();
        std::optional<T> best;
        for (Pattern c = 1; c < pattern_count(n); ++c) {
            json row{{"class", pattern_to_string(n, c)}, {"label", class_label(n, c)}};
            auto r = residual_round(rho1, rho2, c);
            if (!r) {
                row["probability"] = num(T(0));
                row["fidelity"] = nullptr;
            } else {
                row["probability"] = num(r->class_probability);
                row["mask"] = pattern_to_string(n, r->mask);
                row["relabeled_fidelity"] = num(r->relabeled.fidelity());
                row["second_probability"] = num(r->second.probability);
                row["fidelity"] = num(r->second.ensemble.fidelity());
                row["weights"] = weights_json(r->second.ensemble);
                if (!best || r->second.ensemble.fidelity() > *best) {
                    best = r->second.ensemble.fidelity();
                }
            }
            rows.push_back(row);
        }
        doc["branches"] = rows;
        doc["best_fidelity"] = best ? num(*best) : json(nullptr);
        doc["improves"] = residual_improves(rho1, rho2);
    } else {
        if (n != 3) {
            fail(ErrorCode::invalid_arity, "p1-link is defined for three-party ensembles");
        }
        json extracts = json::array();
        std::vector<Ensemble<T>> parts;
        for (auto [c, keep] : {std::pair<Pattern, std::vector<int>>{1, {0, 1}}, {2, {0, 2}}}) {
            if (class_weights(rho1, rho2, c).total() == T(0)) {
                fail(ErrorCode::degenerate_branch, "no cross combinations to link");
            }
            auto ex = extract_subsystem(rho1, rho2, c, keep);
            extracts.push_back({{"class", pattern_to_string(n, c)},
                                {"parties", party_names(ex.ensemble.parties)},
                                {"probability", num(ex.probability)},
                                {"fidelity", num(ex.ensemble.fidelity())},
                                {"weights", weights_json(ex.ensemble)}});
            parts.push_back(ex.ensemble);
        }
        auto linked = entanglement_link(parts[0], parts[1]).ensemble;
        doc["extracts"] = extracts;
        doc["link"] = {{"parties", party_names(linked.parties)},
                       {"fidelity", num(linked.fidelity())},
                       {"weights", weights_json(linked)}};
    }
    return doc.dump(2);
}

template <Scalar T>
std::string phase_step_json(const std::string &scheme, const PhaseEnsemble<T> &p1, const PhaseEnsemble<T> &p2) {
    check_scheme(scheme);
    if (!is_phase_scheme(scheme)) {
        fail(ErrorCode::invalid_argument, "scheme '" + scheme + "' takes GHZ-diagonal ensembles");
    }
    json doc{{"scheme", scheme}, {"exact", std::same_as<T, Rational>}, {"n", p1.n}};
    if (scheme == "p2-identity") {
        doc["identity"] = phase_json(phase_identity(p1, p2));
    } else if (scheme == "p2-residual") {
        doc["residual"] = phase_json(phase_residual(p1, p2));
    } else {
        auto r = phase_residual(p1, p2);
        doc["residual"] = phase_json(r);
        doc["second"] = phase_json(phase_second_round(r.ensemble));
        doc["improves"] = phase_residual_improves(p1.p0, p2.p0);
    }
    return doc.dump(2);
}

template std::string step_json<double>(const std::string &, const Ensemble<double> &, const Ensemble<double> &);
template std::string step_json<Rational>(const std::string &, const Ensemble<Rational> &, const Ensemble<Rational> &);
template std::string phase_step_json<double>(const std::string &, const PhaseEnsemble<double> &,
                                             const PhaseEnsemble<double> &);
template std::string phase_step_json<Rational>(const std::string &, const PhaseEnsemble<Rational> &,
                                               const PhaseEnsemble<Rational> &);

}  // namespace ghzpurify
