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

// Acceptance checks. One PASS/FAIL line per criterion; exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bitflip.hpp"
#include "metrics.hpp"
#include "oracle/oracle.hpp"
#include "phaseflip.hpp"
#include "plan_enum.hpp"
#include "planner.hpp"
#include "verify.hpp"

using namespace ghzpurify;

namespace {

class Checker {
   public:
    void expect(bool ok, const std::string &what) {
        ++count_;
        if (!ok && failures_.size() < 5) {
            failures_.push_back(what);
        }
        failed_ |= !ok;
    }

    void near(double got, double want, double tol, const std::string &what) {
        std::ostringstream s;
        s.precision(17);
        s << what << ": got " << got << ", want " << want << " +- " << tol;
        expect(std::fabs(got - want) <= tol, s.str());
    }

    bool failed() const { return failed_; }
    int count() const { return count_; }
    const std::vector<std::string> &failures() const { return failures_; }

   private:
    bool failed_ = false;
    int count_ = 0;
    std::vector<std::string> failures_;
};

Rational q(long p, long d = 1) {
    return Rational(p) / Rational(d);
}

std::string str(double x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

void worked_example(Checker &c) {
    using namespace symmetric3;
    const double f1 = 0.8, f2 = 0.6, tol = 5e-4;
    c.near(f_triple(f1, f2), 0.866, tol, "F'''");
    c.near(f_t(f1, f2), 0.795, tol, "F^t");
    c.near(fidelity_p1(f1, f2), 0.898, tol, "F_P1");
    c.near(fidelity_p1prime(f1, f2), 0.947, tol, "F_P1'");
    c.near(yield_p1(f1, f2), 0.753, tol, "Y_P1");
    c.near(yield_p1prime(f1, f2), 0.510, tol, "Y_P1'");
    auto r1 = p1_report(f1, f2), r2 = p1prime_report(f1, f2);
    c.near(r1.average_fidelity, 0.898, tol, "P1 report fidelity");
    c.near(r2.yield, 0.510, tol, "P1' report yield");
}

void threshold_boundaries(Checker &c) {
    const Rational eps = q(1, 1000000);
    for (const char *f1 : {"0.8", "0.5", "0.95", "1"}) {
        auto hi3 = symmetric_ensemble(3, parse_rational(f1));
        c.expect(!identity_improves(hi3, symmetric_ensemble(3, q(1, 4))), std::string("n=3 at 1/4, F1=") + f1);
        c.expect(identity_improves(hi3, symmetric_ensemble(3, q(1, 4) + eps)) == (parse_rational(f1) < 1),
                 std::string("n=3 above 1/4, F1=") + f1);
        c.expect(!identity_improves(hi3, symmetric_ensemble(3, q(1, 4) - eps)), std::string("n=3 below 1/4, F1=") + f1);
    }
    for (int n = 3; n <= 5; ++n) {
        Rational bound = q(1, 1L << (n - 1));
        for (const char *f1 : {"0.8", "0.5", "0.95"}) {
            auto hi = symmetric_ensemble(n, parse_rational(f1));
            std::string tag = "n=" + std::to_string(n) + " F1=" + f1;
            c.expect(!identity_improves(hi, symmetric_ensemble(n, bound)), tag + " at boundary");
            c.expect(identity_improves(hi, symmetric_ensemble(n, Rational(bound + eps))), tag + " above boundary");
            c.expect(!identity_improves(hi, symmetric_ensemble(n, Rational(bound - eps))), tag + " below boundary");
            c.expect(identity_improves_by_threshold(hi, symmetric_ensemble(n, Rational(bound + eps))),
                     tag + " threshold form above");
            c.expect(!identity_improves_by_threshold(hi, symmetric_ensemble(n, bound)), tag + " threshold form at");
        }
    }
}

void oracle_equivalence(Checker &c) {
    auto start = std::chrono::steady_clock::now();
    for (bool exact : {false, true}) {
        VerifyOptions opts;
        opts.ns = {3, 4};
        opts.exact = exact;
        auto report = run_verify(opts);
        c.expect(report.passed, exact ? "exact run" : "double run");
        for (const auto &row : report.rows) {
            c.expect(row.max_abs_deviation <= report.tolerance,
                     "n=" + std::to_string(row.n) + " " + row.tag + " deviation " + str(row.max_abs_deviation));
        }
        int bitflip_rows = 0;
        for (const auto &row : report.rows) {
            bitflip_rows += row.tag.find_first_not_of("01") == std::string::npos;
        }
        c.expect(bitflip_rows == 4 + 8, "every parity class is covered");
    }
    VerifyOptions broken;
    broken.ns = {3};
    broken.inject_fault = true;
    c.expect(!run_verify(broken).passed, "an injected fault is detected");
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < 60, "runtime " + str(seconds) + " s");
}

double unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Ensemble<double> random_ensemble(int n, std::mt19937_64 &rng) {
    std::vector<double> w(pattern_count(n));
    double sum = 0;
    for (auto &x : w) {
        x = unit(rng) + 1e-3;
        sum += x;
    }
    for (auto &x : w) {
        x /= sum;
    }
    return make_ensemble<double>(n, std::move(w));
}

void conservation(Checker &c) {
    std::mt19937_64 rng(0x636f6e73ULL);
    const double tol = 1e-12;
    for (int trial = 0; trial < 1000; ++trial) {
        double f1 = unit(rng), f2 = unit(rng);
        std::string tag = " (" + str(f1) + ", " + str(f2) + ")";
        c.near(symmetric3::yield_identity(f1, f2) + symmetric3::p_cross(f1, f2), 1.0, tol, "Y_i + P_cross" + tag);

        int n = 2 + trial % 4;
        auto a = random_ensemble(n, rng), b = random_ensemble(n, rng);
        double total = 0, weighted = 0;
        for (Pattern cls = 0; cls < pattern_count(n); ++cls) {
            auto raw = class_weights(a, b, cls);
            double p = raw.total();
            total += p;
            if (p > 0) {
                auto post = cls == 0 ? purify_identity(a, b) : cross_residual(a, b, cls);
                weighted += post.probability * post.ensemble.fidelity();
            }
        }
        std::string etag = " n=" + std::to_string(n) + " trial " + std::to_string(trial);
        c.near(total, 1.0, tol, "class probabilities" + etag);
        c.near(weighted, a.fidelity(), tol, "branch-weighted fidelity" + etag);
    }
}

// Closed forms written out independently of the library.
Rational phase_identity_form(const Rational &p1, const Rational &p2) {
    return p1 * p2 / (p1 * p2 + (1 - p1) * (1 - p2));
}

Rational phase_residual_form(const Rational &p1, const Rational &p2) {
    return p1 * (1 - p2) / (p1 * (1 - p2) + (1 - p1) * p2);
}

void phase_suite(Checker &c) {
    for (int i = 1; i < 20; ++i) {
        for (int j = 1; j < 20; ++j) {
            Rational p1 = q(i, 20), p2 = q(j, 20);
            std::string tag = " (" + std::to_string(i) + "/20, " + std::to_string(j) + "/20)";
            PhaseEnsemble<Rational> a{3, p1}, b{3, p2};
            auto id = phase_identity(a, b);
            auto res = phase_residual(a, b);
            Rational pp = phase_residual_form(p1, p2);
            c.expect(id.ensemble.p0 == phase_identity_form(p1, p2), "P'" + tag);
            c.expect(res.ensemble.p0 == pp, "P''" + tag);
            c.expect(phase_second_round(res.ensemble).ensemble.p0 == phase_identity_form(pp, pp), "P'''" + tag);
            if (i == j) {
                c.expect(res.ensemble.p0 == q(1, 2), "P'' = 1/2 on equal inputs" + tag);
            }
        }
    }
    for (double p1 : {0.1, 0.35, 0.6, 0.8, 0.95}) {
        for (double p2 : {0.2, 0.5, 0.6, 0.9}) {
            auto orc = oracle::oracle_phase(3, p1, p2);
            PhaseEnsemble<double> a{3, p1}, b{3, p2};
            auto id = phase_identity(a, b);
            auto res = phase_residual(a, b);
            double ip = orc.identity_plus + orc.identity_minus, rp = orc.residual_plus + orc.residual_minus;
            std::string tag = " oracle (" + str(p1) + ", " + str(p2) + ")";
            c.near(id.probability, ip, 1e-12, "identity probability" + tag);
            c.near(id.ensemble.p0, orc.identity_plus / ip, 1e-12, "P'" + tag);
            c.near(res.probability, rp, 1e-12, "residual probability" + tag);
            c.near(res.ensemble.p0, orc.residual_plus / rp, 1e-12, "P''" + tag);
            c.near(orc.stray_mass, 0, 1e-12, "stray mass" + tag);
        }
    }
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            Rational p1 = q(i, 100), p2 = q(j, 100);
            Rational hi = p1 > p2 ? p1 : p2, lo = p1 > p2 ? p2 : p1;
            bool direct = false;
            if (hi * (1 - lo) + (1 - hi) * lo != 0) {
                Rational pp = phase_residual_form(hi, lo);
                direct = phase_identity_form(pp, pp) > hi;
            }
            c.expect(phase_residual_improves(p1, p2) == direct,
                     "improvement predicate at (" + std::to_string(i) + ", " + std::to_string(j) + ")/100");
        }
    }
    for (int n = 2; n <= 6; ++n) {
        PhaseEnsemble<Rational> a{n, q(4, 5)}, b{n, q(3, 5)};
        c.expect(phase_identity(a, b).ensemble.p0 == q(6, 7), "P' at n=" + std::to_string(n));
        c.expect(phase_residual(a, b).ensemble.p0 == q(8, 11), "P'' at n=" + std::to_string(n));
        c.expect(phase_second_round(phase_residual(a, b).ensemble).ensemble.p0 == q(64, 73),
                 "P''' at n=" + std::to_string(n));
        auto orc = oracle::oracle_phase(n, q(4, 5), q(3, 5));
        c.expect(orc.residual_plus / (orc.residual_plus + orc.residual_minus) == q(8, 11),
                 "oracle P'' at n=" + std::to_string(n));
    }
}

void region_figures(Checker &c) {
    for (auto p : {RegionPredicate::fig7, RegionPredicate::fig8, RegionPredicate::fig9}) {
        c.expect(*region_value(p, 0.8, 0.6) > 0, std::string(predicate_id(p)) + " contains (0.8, 0.6)");
    }
    c.expect(*region_value(RegionPredicate::fig3, q(1, 4), q(1, 4)) == 0, "fig3 vanishes at (1/4, 1/4)");
    for (int k = 1; k < 100; ++k) {
        if (k == 25) {
            continue;
        }
        Rational f = q(k, 100);
        Rational v = *region_value(RegionPredicate::fig3, f, f);
        c.expect(k < 25 ? v < 0 : v > 0, "fig3 diagonal sign at " + std::to_string(k) + "/100");
    }
    // Nesting of the fig10 regions across rounds on an interior grid.
    const int steps = 41;
    std::vector<std::vector<bool>> inside;
    for (int rounds = 2; rounds <= 4; ++rounds) {
        std::vector<bool> cells;
        for (int i = 1; i <= steps; ++i) {
            for (int j = 1; j <= steps; ++j) {
                double f1 = static_cast<double>(i) / (steps + 1), f2 = static_cast<double>(j) / (steps + 1);
                cells.push_back(*region_value(RegionPredicate::fig10, f1, f2, rounds) > 1e-12);
            }
        }
        inside.push_back(std::move(cells));
    }
    std::vector<int> counts;
    for (const auto &cells : inside) {
        int n = 0;
        for (bool b : cells) {
            n += b;
        }
        counts.push_back(n);
    }
    for (std::size_t r = 1; r < inside.size(); ++r) {
        bool nested = true;
        for (std::size_t k = 0; k < inside[r].size(); ++k) {
            nested &= !inside[r][k] || inside[r - 1][k];
        }
        std::string tag = "R=" + std::to_string(r + 2) + " vs R=" + std::to_string(r + 1);
        c.expect(nested, "fig10 regions nest, " + tag);
        c.expect(counts[r] <= counts[r - 1], "fig10 region sizes are monotone, " + tag);
    }
    c.expect(counts.front() > 0 && counts.back() > 0, "fig10 regions are nonempty");
}

PlanRequest request(Track track, double f1, double f2, double target, int max_rounds, Scope scope,
                    Objective objective) {
    PlanRequest req;
    req.track = track;
    if (track == Track::bitflip) {
        req.rho1 = symmetric_ensemble(3, f1);
        req.rho2 = symmetric_ensemble(3, f2);
    } else {
        req.phase1 = make_phase_ensemble(3, f1);
        req.phase2 = make_phase_ensemble(3, f2);
    }
    req.target = target;
    req.max_rounds = max_rounds;
    req.scope = scope;
    req.objective = objective;
    return req;
}

void planner_audit(Checker &c) {
    using ghzpurify::testing::actions_of;
    using ghzpurify::testing::brute_force;
    std::mt19937_64 rng(0x706c616eULL);
    for (int trial = 0; trial < 120; ++trial) {
        double f1 = 0.3 + 0.7 * unit(rng), f2 = 0.3 + 0.7 * unit(rng);
        double target = 0.5 + 0.5 * unit(rng);
        int max_rounds = static_cast<int>(rng() % 6);
        Scope scope = rng() % 2 ? Scope::all : Scope::recycle;
        Objective obj = rng() % 2 ? Objective::fidelity_first : Objective::yield_first;
        for (Track track : {Track::bitflip, Track::phase}) {
            auto req = request(track, f1, f2, target, max_rounds, scope, obj);
            std::string tag = " trial " + std::to_string(trial) + " " + track_name(track);
            Plan p = search_plan(req);
            if (p.feasible) {
                Plan again = replay_plan(req, actions_of(p));
                c.near(again.final_fidelity, p.final_fidelity, 1e-12, "replayed fidelity" + tag);
                c.near(again.total_yield, p.total_yield, 1e-12, "replayed yield" + tag);
                c.expect(p.final_fidelity >= target, "target met" + tag);
            } else {
                c.expect(p.nodes.empty(), "infeasible plan has no actions" + tag);
            }
            if (max_rounds > 3) {
                continue;
            }
            auto b = brute_force(req);
            bool b_feasible = b && b->feasible;
            c.expect(p.feasible == b_feasible, "feasibility matches enumeration" + tag);
            if (p.feasible && b_feasible) {
                c.expect(actions_of(p) == actions_of(*b), "plan matches enumeration" + tag);
            }
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<void(Checker &)> run;
    };
    const std::vector<Criterion> criteria{
        {"worked example", worked_example},
        {"threshold boundaries", threshold_boundaries},
        {"oracle equivalence", oracle_equivalence},
        {"conservation identities", conservation},
        {"phase-flip suite", phase_suite},
        {"region figures", region_figures},
        {"planner audit", planner_audit},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checker c;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run(c);
        } catch (const std::exception &e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %zu %s (%d checks, %.0f ms)\n", c.failed() ? "FAIL" : "PASS", i + 1, criteria[i].name,
                    c.count(), ms);
        for (const auto &f : c.failures()) {
            std::printf("    %s\n", f.c_str());
        }
        failed += c.failed();
    }
    return failed == 0 ? 0 : 1;
}
