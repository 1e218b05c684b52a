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

#include "json_io.hpp"

#include <algorithm>

#include "json.hpp"

namespace ghzpurify {

namespace {

using nlohmann::json;

json parse_document(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        std::size_t byte = std::min<std::size_t>(e.byte, text.size());
        std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte > 0 ? byte - 1 : 0), '\n'));
        fail(ErrorCode::parse, "line " + std::to_string(line) + ": " + e.what());
    }
}

template <Scalar T>
T number(const json &v, const std::string &what) {
    if (v.is_string()) {
        Rational r = parse_rational(v.get<std::string>());
        if constexpr (std::same_as<T, double>) {
            return to_double(r);
        } else {
            return r;
        }
    }
    if (!v.is_number()) {
        fail(ErrorCode::parse, what + " must be a number");
    }
    return scalar_from_double<T>(v.get<double>());
}

int photon_count(const json &doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
        fail(ErrorCode::parse, "document needs an integer field \"n\"");
    }
    int n = doc["n"].get<int>();
    check_arity(n);
    return n;
}

template <Scalar T>
Ensemble<T> accept_weights(Ensemble<T> rho) {
    for (const T &w : rho.weights) {
        if (w < T(0)) {
            fail(ErrorCode::validation, "weights must be non-negative");
        }
    }
    check_normalized(rho, kNormalizationTolerance);
    return normalized(std::move(rho));
}

template <class Fmt>
json weights_object(int n, std::size_t count, Fmt fmt) {
    json w = json::object();
    for (Pattern m = 0; m < count; ++m) {
        w[pattern_to_string(n, m)] = fmt(m);
    }
    return w;
}

}  // namespace

template <Scalar T>
Ensemble<T> ensemble_from_json(const std::string &text) {
    json doc = parse_document(text);
    int n = photon_count(doc);
    if (doc.value("symmetric", false)) {
        if (!doc.contains("f0")) {
            fail(ErrorCode::parse, "symmetric shorthand needs \"f0\"");
        }
        T f0 = number<T>(doc["f0"], "f0");
        if (!(f0 >= T(0) && f0 <= T(1))) {
            fail(ErrorCode::validation, "f0 must lie in [0, 1]");
        }
        return symmetric_ensemble(n, f0);
    }
    if (!doc.contains("weights") || !doc["weights"].is_object()) {
        fail(ErrorCode::parse, "document needs a \"weights\" object");
    }
    Ensemble<T> rho{n, std::vector<T>(pattern_count(n), T(0)), default_parties(n)};
    for (const auto &[key, value] : doc["weights"].items()) {
        if (key.size() != static_cast<std::size_t>(n)) {
            fail(ErrorCode::parse, "pattern '" + key + "' does not have " + std::to_string(n) + " bits");
        }
        Pattern p = pattern_from_string(key);
        if (p != canonicalize(n, p)) {
            fail(ErrorCode::parse, "pattern '" + key + "' is not canonical (leading bit must be 0)");
        }
        rho.weights[p] = number<T>(value, "weight of " + key);
    }
    return accept_weights(std::move(rho));
}

template <Scalar T>
PhaseEnsemble<T> phase_from_json(const std::string &text) {
    json doc = parse_document(text);
    int n = photon_count(doc);
    if (!doc.contains("p0")) {
        fail(ErrorCode::parse, "document needs \"p0\"");
    }
    T p0 = number<T>(doc["p0"], "p0");
    if (!(p0 >= T(0) && p0 <= T(1))) {
        fail(ErrorCode::validation, "p0 must lie in [0, 1]");
    }
    return {n, p0};
}

template Ensemble<double> ensemble_from_json<double>(const std::string &);
template Ensemble<Rational> ensemble_from_json<Rational>(const std::string &);
template PhaseEnsemble<double> phase_from_json<double>(const std::string &);
template PhaseEnsemble<Rational> phase_from_json<Rational>(const std::string &);

std::string ensemble_to_json(const Ensemble<double> &rho) {
    json doc;
    doc["n"] = rho.n;
    doc["parties"] = rho.parties;
    doc["weights"] = weights_object(rho.n, rho.weights.size(), [&](Pattern m) { return rho.weights[m]; });
    return doc.dump();
}

std::string ensemble_to_json(const Ensemble<Rational> &rho) {
    json doc;
    doc["n"] = rho.n;
    doc["parties"] = rho.parties;
    doc["weights"] = weights_object(rho.n, rho.weights.size(), [&](Pattern m) { return to_string(rho.weights[m]); });
    return doc.dump();
}

std::string plan_to_json(const Plan &plan) {
    json doc;
    doc["track"] = track_name(plan.track);
    doc["feasible"] = plan.feasible;
    doc["target"] = plan.target;
    doc["max_rounds"] = plan.max_rounds;
    doc["objective"] = objective_name(plan.objective);
    doc["scope"] = scope_name(plan.scope);
    json nodes = json::array();
    for (const auto &node : plan.nodes) {
        nodes.push_back({
            {"action", action_name(node.action)},
            {"input_fingerprint", node.input_fingerprint},
            {"rounds", node.rounds},
            {"cost", node.cost},
            {"probability", node.probability},
            {"fidelity", node.fidelity},
            {"yield_factor", node.yield_factor},
        });
    }
    doc["actions"] = nodes;
    doc["final_fidelity"] = plan.final_fidelity;
    doc["total_yield"] = plan.total_yield;
    doc["total_pairs"] = plan.total_pairs;
    doc["best_reachable_fidelity"] = plan.best_reachable_fidelity;
    return doc.dump(2);
}

std::string report_to_json(const SchemeReport<double> &r) {
    json doc;
    doc["scheme"] = r.scheme;
    doc["yield"] = r.yield;
    doc["average_fidelity"] = r.average_fidelity;
    json comps = json::array();
    for (const auto &c : r.components) {
        json j{{"label", c.label}, {"probability", c.probability}};
        j["fidelity"] = c.fidelity ? json(*c.fidelity) : json(nullptr);
        comps.push_back(j);
    }
    doc["components"] = comps;
    return doc.dump(2);
}

}  // namespace ghzpurify
