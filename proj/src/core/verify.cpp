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

#include "verify.hpp"

#include <cstdio>
#include <map>
#include <random>
#include <utility>

#include "link.hpp"
#include "oracle/oracle.hpp"
#include "phaseflip.hpp"

namespace ghzpurify {

namespace {

template <Scalar T>
using Pair = std::pair<Ensemble<T>, Ensemble<T>>;

class Accumulator {
   public:
    template <Scalar T>
    void add(int n, const std::string &tag, const T &deviation) {
        auto &slot = rows_[{n, tag}];
        slot.first = std::max(slot.first, to_double(scalar_abs(deviation)));
        slot.second += 1;
    }

    std::vector<VerifyRow> rows() const {
        std::vector<VerifyRow> out;
        for (const auto &[key, v] : rows_) {
            out.push_back({key.first, key.second, v.first, v.second});
        }
        return out;
    }

   private:
    std::map<std::pair<int, std::string>, std::pair<double, int>> rows_;
};

/// Largest |a - b| over probability and normalized weights.
template <Scalar T>
T outcome_deviation(const T &p_closed, const Ensemble<T> &closed_normalized, const Ensemble<T> &oracle_unnormalized) {
    T p_oracle = oracle_unnormalized.total();
    T dev = scalar_abs(T(p_closed - p_oracle));
    if (p_oracle == T(0) || p_closed == T(0)) {
        return dev;
    }
    for (std::size_t m = 0; m < closed_normalized.weights.size(); ++m) {
        T d = scalar_abs(T(closed_normalized.weights[m] - oracle_unnormalized.weights[m] / p_oracle));
        if (d > dev) {
            dev = d;
        }
    }
    return dev;
}

template <Scalar T>
std::vector<Pair<T>> input_pairs(int n, const VerifyOptions &opts) {
    std::vector<Pair<T>> out;
    for (double a : opts.grid) {
        for (double b : opts.grid) {
            out.emplace_back(symmetric_ensemble(n, scalar_from_double<T>(a)), symmetric_ensemble(n, scalar_from_double<T>(b)));
        }
    }
    auto vecs = asymmetric_vectors(n, opts.asymmetric, opts.seed);
    auto to_ens = [&](const std::vector<std::uint64_t> &v) {
        std::vector<T> w;
        for (auto x : v) {
            w.push_back(T(static_cast<long>(x)));
        }
        return normalized(make_ensemble<T>(n, std::move(w)));
    };
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        out.emplace_back(to_ens(vecs[i]), to_ens(vecs[(i + 1) % vecs.size()]));
    }
    return out;
}

template <Scalar T>
void check_bitflip(int n, const Pair<T> &in, const VerifyOptions &opts, Accumulator &acc) {
    const auto &[r1, r2] = in;
    auto tree = oracle::bitflip_leaves(r1, r2);
    auto orc = oracle::oracle_bitflip(tree);
    std::vector<SubsystemExtract<T>> extracts;
    for (Pattern c = 0; c < pattern_count(n); ++c) {
        std::string tag = pattern_to_string(n, c);
        Ensemble<T> raw = class_weights(r1, r2, c);
        T p = raw.total();
        PurifyOutcome<T> closed{p, raw};
        if (p != T(0)) {
            closed = c == 0 ? purify_identity(r1, r2) : cross_residual(r1, r2, c);
        }
        if (opts.inject_fault && c == 0) {
            closed.ensemble.weights[0] *= T(1) + T(1) / T(1000000);
        }
        acc.add(n, tag, T(outcome_deviation(closed.probability, closed.ensemble, orc.classes[c]) + orc.sign_mass));
        if (c == 0 || p == T(0)) {
            continue;
        }
        for (const auto &keep : {even_parties(n, c), odd_parties(n, c)}) {
            if (keep.size() < 2) {
                continue;
            }
            auto ex = extract_subsystem(r1, r2, c, keep);
            T minus(0);
            auto ox = oracle::oracle_extract(tree, c, keep, &minus);
            acc.add(n, "extract-" + tag, T(outcome_deviation(ex.probability, ex.ensemble, ox) + minus));
            extracts.push_back(ex);
        }
    }
    if (!opts.links) {
        return;
    }
    // Every pair of extracts from one input that shares exactly one party.
    for (std::size_t i = 0; i < extracts.size(); ++i) {
        for (std::size_t j = i + 1; j < extracts.size(); ++j) {
            const auto &a = extracts[i].ensemble;
            const auto &b = extracts[j].ensemble;
            std::vector<int> shared;
            std::set_intersection(a.parties.begin(), a.parties.end(), b.parties.begin(), b.parties.end(),
                                  std::back_inserter(shared));
            if (shared.size() != 1) {
                continue;
            }
            auto closed = entanglement_link(a, b);
            T minus(0);
            auto ol = oracle::oracle_link(a, b, &minus);
            acc.add(n, "link", T(outcome_deviation(closed.probability, closed.ensemble, ol) + minus));
        }
    }
}

template <Scalar T>
void check_phase(int n, const VerifyOptions &opts, Accumulator &acc) {
    for (double a : opts.grid) {
        for (double b : opts.grid) {
            T p1 = scalar_from_double<T>(a);
            T p2 = scalar_from_double<T>(b);
            auto orc = oracle::oracle_phase(n, p1, p2);
            auto id = phase_identity(PhaseEnsemble<T>{n, p1}, PhaseEnsemble<T>{n, p2});
            auto res = phase_residual(PhaseEnsemble<T>{n, p1}, PhaseEnsemble<T>{n, p2});
            T id_p = orc.identity_plus + orc.identity_minus;
            T res_p = orc.residual_plus + orc.residual_minus;
            T d_id = scalar_abs(T(id.probability - id_p)) + scalar_abs(T(id.ensemble.p0 - orc.identity_plus / id_p));
            T d_res = scalar_abs(T(res.probability - res_p)) + scalar_abs(T(res.ensemble.p0 - orc.residual_plus / res_p));
            acc.add(n, "phase-identity", T(d_id + orc.stray_mass));
            acc.add(n, "phase-residual", T(d_res + orc.stray_mass));
        }
    }
}

template <Scalar T>
VerifyReport run_typed(const VerifyOptions &opts) {
    Accumulator acc;
    for (int n : opts.ns) {
        if (n > oracle::kMaxOracleParties) {
            fail(ErrorCode::size_cap, "verification supports n <= 5");
        }
        check_arity(n);
        for (const auto &in : input_pairs<T>(n, opts)) {
            check_bitflip(n, in, opts, acc);
        }
        if (opts.phase) {
            check_phase<T>(n, opts, acc);
        }
    }
    VerifyReport report;
    report.rows = acc.rows();
    report.tolerance = opts.exact ? 0.0 : opts.tolerance;
    for (const auto &row : report.rows) {
        if (!(row.max_abs_deviation <= report.tolerance)) {
            report.passed = false;
        }
    }
    return report;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> asymmetric_vectors(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::uint64_t>> out;
    for (int i = 0; i < count; ++i) {
        std::vector<std::uint64_t> v;
        for (std::size_t m = 0; m < pattern_count(n); ++m) {
            v.push_back(rng() % 1000 + 1);
        }
        out.push_back(std::move(v));
    }
    return out;
}

VerifyReport run_verify(const VerifyOptions &opts) {
    if (opts.ns.empty()) {
        fail(ErrorCode::invalid_argument, "no photon counts to verify");
    }
    return opts.exact ? run_typed<Rational>(opts) : run_typed<double>(opts);
}

std::string verify_csv(const VerifyReport &report) {
    std::string out = "n,class,max_abs_deviation\n";
    char buf[128];
    for (const auto &row : report.rows) {
        std::snprintf(buf, sizeof buf, "%d,%s,%.6g\n", row.n, row.tag.c_str(), row.max_abs_deviation);
        out += buf;
    }
    return out;
}

}  // namespace ghzpurify
