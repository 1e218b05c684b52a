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

#include "ghzpurify/ghzpurify.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "bitflip.hpp"
#include "error.hpp"
#include "json_io.hpp"
#include "link.hpp"
#include "metrics.hpp"
#include "phaseflip.hpp"
#include "planner.hpp"
#include "step.hpp"
#include "verify.hpp"

struct ghzp_ensemble {
    ghzpurify::Ensemble<double> e;
};

namespace {

using namespace ghzpurify;

thread_local std::string g_last_error;

template <class F>
ghzp_status guard(F &&f) {
    try {
        g_last_error.clear();
        f();
        return GHZP_OK;
    } catch (const Error &e) {
        g_last_error = e.what();
        return static_cast<ghzp_status>(e.code());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return GHZP_E_SIZE_CAP;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return GHZP_E_INTERNAL;
    }
}

void need(const void *p, const char *what) {
    if (p == nullptr) {
        fail(ErrorCode::invalid_argument, std::string(what) + " must not be null");
    }
}

const Ensemble<double> &get(const ghzp_ensemble *e, const char *what) {
    need(e, what);
    return e->e;
}

ghzp_ensemble *wrap(Ensemble<double> e) {
    return new ghzp_ensemble{std::move(e)};
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_optional(double *dst, double v) {
    if (dst != nullptr) {
        *dst = v;
    }
}

void emit(const PurifyOutcome<double> &o, double *probability, ghzp_ensemble **out) {
    need(out, "out");
    set_optional(probability, o.probability);
    *out = wrap(o.ensemble);
}

PhaseEnsemble<double> from_c(ghzp_phase_ensemble p) {
    return make_phase_ensemble(p.n, p.p0);
}

void emit_phase(const PhaseOutcome<double> &o, double *probability, ghzp_phase_ensemble *out) {
    need(out, "out");
    set_optional(probability, o.probability);
    *out = {o.ensemble.n, o.ensemble.p0};
}

Ensemble<Rational> exact_of(const Ensemble<double> &e) {
    Ensemble<Rational> r{e.n, {}, e.parties};
    for (double w : e.weights) {
        r.weights.push_back(rational_from_double(w));
    }
    return normalized(r);
}

PhaseEnsemble<Rational> exact_of(const PhaseEnsemble<double> &p) {
    return make_phase_ensemble(p.n, rational_from_double(p.p0));
}

void fill_report(const SchemeReport<double> &r, ghzp_scheme_report *out) {
    need(out, "out");
    if (r.components.size() > GHZP_MAX_COMPONENTS) {
        fail(ErrorCode::internal, "report has too many components");
    }
    std::memset(out, 0, sizeof(*out));
    std::strncpy(out->scheme, r.scheme.c_str(), sizeof(out->scheme) - 1);
    out->yield = r.yield;
    out->average_fidelity = r.average_fidelity;
    out->component_count = static_cast<int>(r.components.size());
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const auto &c = r.components[i];
        ghzp_component &d = out->components[i];
        std::strncpy(d.label, c.label.c_str(), sizeof(d.label) - 1);
        d.probability = c.probability;
        d.fidelity = c.fidelity ? *c.fidelity : std::numeric_limits<double>::quiet_NaN();
    }
}

PlanRequest plan_request(Track track, const ghzp_plan_options *opts) {
    need(opts, "opts");
    PlanRequest req;
    req.track = track;
    req.target = opts->target;
    req.max_rounds = opts->max_rounds;
    if (opts->objective != nullptr) {
        req.objective = parse_objective(opts->objective);
    }
    if (opts->scope != nullptr) {
        req.scope = parse_scope(opts->scope);
    }
    return req;
}

void run_plan(const PlanRequest &req, char **json, int *feasible) {
    need(json, "json");
    check_request(req);
    Plan plan = search_plan(req);
    *json = dup_string(plan_to_json(plan));
    if (feasible != nullptr) {
        *feasible = plan.feasible ? 1 : 0;
    }
}

}  // namespace

extern "C" {

const char *ghzp_status_string(ghzp_status status) {
    if (status == GHZP_OK) {
        return "ok";
    }
    return error_code_name(static_cast<ErrorCode>(status));
}

const char *ghzp_last_error(void) {
    return g_last_error.c_str();
}

void ghzp_string_free(char *s) {
    std::free(s);
}

ghzp_status ghzp_ensemble_create(int n, const double *weights, size_t count, ghzp_ensemble **out) {
    return guard([&] {
        need(out, "out");
        need(weights, "weights");
        auto e = make_ensemble(n, std::vector<double>(weights, weights + count));
        check_normalized(e, kNormalizationTolerance);
        *out = wrap(normalized(e));
    });
}

ghzp_status ghzp_ensemble_symmetric(int n, double f0, ghzp_ensemble **out) {
    return guard([&] {
        need(out, "out");
        *out = wrap(symmetric_ensemble(n, f0));
    });
}

ghzp_status ghzp_ensemble_from_json(const char *json, ghzp_ensemble **out) {
    return guard([&] {
        need(json, "json");
        need(out, "out");
        *out = wrap(ensemble_from_json<double>(json));
    });
}

ghzp_status ghzp_ensemble_to_json(const ghzp_ensemble *e, char **out) {
    return guard([&] {
        need(out, "out");
        *out = dup_string(ensemble_to_json(get(e, "ensemble")));
    });
}

void ghzp_ensemble_free(ghzp_ensemble *e) {
    delete e;
}

int ghzp_ensemble_n(const ghzp_ensemble *e) {
    return e == nullptr ? 0 : e->e.n;
}

size_t ghzp_ensemble_size(const ghzp_ensemble *e) {
    return e == nullptr ? 0 : e->e.weights.size();
}

size_t ghzp_ensemble_weights(const ghzp_ensemble *e, double *out, size_t count) {
    if (e == nullptr) {
        return 0;
    }
    const auto &w = e->e.weights;
    for (size_t i = 0; out != nullptr && i < count && i < w.size(); ++i) {
        out[i] = w[i];
    }
    return w.size();
}

size_t ghzp_ensemble_parties(const ghzp_ensemble *e, int *out, size_t count) {
    if (e == nullptr) {
        return 0;
    }
    const auto &p = e->e.parties;
    for (size_t i = 0; out != nullptr && i < count && i < p.size(); ++i) {
        out[i] = p[i];
    }
    return p.size();
}

ghzp_status ghzp_ensemble_set_parties(ghzp_ensemble *e, const int *parties, size_t count) {
    return guard([&] {
        need(e, "ensemble");
        need(parties, "parties");
        Ensemble<double> next = e->e;
        next.parties.assign(parties, parties + count);
        check_shape(next);
        e->e = std::move(next);
    });
}

ghzp_status ghzp_canonicalize(int n, uint32_t raw, uint32_t *out) {
    return guard([&] {
        need(out, "out");
        check_arity(n);
        if (raw > full_mask(n)) {
            fail(ErrorCode::invalid_arity, "pattern has more bits than parties");
        }
        *out = canonicalize(n, raw);
    });
}

ghzp_status ghzp_parity_class(int n, uint32_t e, uint32_t f, uint32_t *out) {
    return guard([&] {
        need(out, "out");
        *out = parity_class(n, e, f);
    });
}

ghzp_status ghzp_parity_label(int n, uint32_t cls, char *buf, size_t buf_size) {
    return guard([&] {
        need(buf, "buf");
        std::string s = parity_label(n, cls);
        if (buf_size < s.size() + 1) {
            fail(ErrorCode::invalid_argument, "buffer too small");
        }
        std::memcpy(buf, s.c_str(), s.size() + 1);
    });
}

ghzp_status ghzp_single_flip_index(int n, int party, uint32_t *out) {
    return guard([&] {
        need(out, "out");
        *out = single_flip_index(n, party);
    });
}

ghzp_status ghzp_relabel(const ghzp_ensemble *e, uint32_t flips, ghzp_ensemble **out) {
    return guard([&] {
        need(out, "out");
        *out = wrap(relabel(get(e, "ensemble"), flips));
    });
}

ghzp_status ghzp_argmax_to_zero(const ghzp_ensemble *e, ghzp_ensemble **out, uint32_t *mask) {
    return guard([&] {
        need(out, "out");
        auto r = argmax_to_zero(get(e, "ensemble"));
        if (mask != nullptr) {
            *mask = r.mask;
        }
        *out = wrap(std::move(r.ensemble));
    });
}

ghzp_status ghzp_purify_identity(const ghzp_ensemble *r1, const ghzp_ensemble *r2, double *probability,
                                 ghzp_ensemble **out) {
    return guard([&] { emit(purify_identity(get(r1, "r1"), get(r2, "r2")), probability, out); });
}

ghzp_status ghzp_cross_residual(const ghzp_ensemble *r1, const ghzp_ensemble *r2, uint32_t cls, double *probability,
                                ghzp_ensemble **out) {
    return guard([&] { emit(cross_residual(get(r1, "r1"), get(r2, "r2"), cls), probability, out); });
}

ghzp_status ghzp_second_round(const ghzp_ensemble *a, const ghzp_ensemble *b, double *probability,
                              ghzp_ensemble **out) {
    return guard([&] { emit(second_round(get(a, "a"), get(b, "b")), probability, out); });
}

ghzp_status ghzp_identity_improves(const ghzp_ensemble *r1, const ghzp_ensemble *r2, int *out) {
    return guard([&] {
        need(out, "out");
        *out = identity_improves(get(r1, "r1"), get(r2, "r2")) ? 1 : 0;
    });
}

ghzp_status ghzp_residual_improves(const ghzp_ensemble *r1, const ghzp_ensemble *r2, int *out) {
    return guard([&] {
        need(out, "out");
        *out = residual_improves(get(r1, "r1"), get(r2, "r2")) ? 1 : 0;
    });
}

ghzp_status ghzp_three_choices(int n, double f1, double f2, int *choice, double *value) {
    return guard([&] {
        auto c = three_choices(n, f1, f2);
        if (choice != nullptr) {
            *choice = c.index;
        }
        set_optional(value, c.value);
    });
}

ghzp_status ghzp_extract_subsystem(const ghzp_ensemble *r1, const ghzp_ensemble *r2, uint32_t cls, const int *keep,
                                   size_t keep_count, double *probability, ghzp_ensemble **out) {
    return guard([&] {
        need(keep, "keep");
        std::vector<int> k(keep, keep + keep_count);
        emit(extract_subsystem(get(r1, "r1"), get(r2, "r2"), cls, k), probability, out);
    });
}

ghzp_status ghzp_default_keep(const ghzp_ensemble *r1, const ghzp_ensemble *r2, uint32_t cls, int *out, size_t count,
                              size_t *written) {
    return guard([&] {
        auto k = default_keep(get(r1, "r1"), get(r2, "r2"), cls);
        for (size_t i = 0; out != nullptr && i < count && i < k.size(); ++i) {
            out[i] = k[i];
        }
        if (written != nullptr) {
            *written = k.size();
        }
    });
}

ghzp_status ghzp_entanglement_link(const ghzp_ensemble *a, const ghzp_ensemble *b, double *probability,
                                   ghzp_ensemble **out) {
    return guard([&] { emit(entanglement_link(get(a, "a"), get(b, "b")), probability, out); });
}

ghzp_status ghzp_link_improves(double f1, double f2, int *out) {
    return guard([&] {
        need(out, "out");
        *out = link_improves(f1, f2) ? 1 : 0;
    });
}

ghzp_status ghzp_nprime_range(int n, int *lo, int *hi) {
    return guard([&] {
        auto [a, b] = nprime_range(n);
        if (lo != nullptr) {
            *lo = a;
        }
        if (hi != nullptr) {
            *hi = b;
        }
    });
}

ghzp_status ghzp_phase_from_json(const char *json, ghzp_phase_ensemble *out) {
    return guard([&] {
        need(json, "json");
        need(out, "out");
        auto p = phase_from_json<double>(json);
        *out = {p.n, p.p0};
    });
}

ghzp_status ghzp_phase_identity(ghzp_phase_ensemble r1, ghzp_phase_ensemble r2, double *probability,
                                ghzp_phase_ensemble *out) {
    return guard([&] { emit_phase(phase_identity(from_c(r1), from_c(r2)), probability, out); });
}

ghzp_status ghzp_phase_residual(ghzp_phase_ensemble r1, ghzp_phase_ensemble r2, double *probability,
                                ghzp_phase_ensemble *out) {
    return guard([&] { emit_phase(phase_residual(from_c(r1), from_c(r2)), probability, out); });
}

ghzp_status ghzp_phase_second_round(ghzp_phase_ensemble r, double *probability, ghzp_phase_ensemble *out) {
    return guard([&] { emit_phase(phase_second_round(from_c(r)), probability, out); });
}

ghzp_status ghzp_phase_residual_improves(double p1, double p2, int *out) {
    return guard([&] {
        need(out, "out");
        make_phase_ensemble(2, p1);
        make_phase_ensemble(2, p2);
        *out = phase_residual_improves(p1, p2) ? 1 : 0;
    });
}

ghzp_status ghzp_p1_report(double f1, double f2, ghzp_scheme_report *out) {
    return guard([&] { fill_report(p1_report(f1, f2), out); });
}

ghzp_status ghzp_p1prime_report(double f1, double f2, ghzp_scheme_report *out) {
    return guard([&] { fill_report(p1prime_report(f1, f2), out); });
}

ghzp_status ghzp_compare_schemes(double f1, double f2, int rounds, ghzp_preferred *out) {
    return guard([&] {
        need(out, "out");
        symmetric_ensemble(3, f1);
        symmetric_ensemble(3, f2);
        *out = static_cast<ghzp_preferred>(compare_schemes(f1, f2, rounds));
    });
}

ghzp_status ghzp_multiround_tradeoff(double f1, double f2, int rounds, double *f_triple, double *f_t) {
    return guard([&] {
        auto t = multiround_tradeoff(f1, f2, rounds);
        set_optional(f_triple, t.f_triple);
        set_optional(f_t, t.f_t);
    });
}

ghzp_status ghzp_region_value(const char *predicate, double f1, double f2, int rounds, double *value, int *defined) {
    return guard([&] {
        need(predicate, "predicate");
        symmetric_ensemble(3, f1);
        symmetric_ensemble(3, f2);
        auto v = region_value(parse_predicate(predicate), f1, f2, rounds);
        set_optional(value, v ? *v : std::numeric_limits<double>::quiet_NaN());
        if (defined != nullptr) {
            *defined = v ? 1 : 0;
        }
    });
}

ghzp_status ghzp_region_sweep_csv(const char *predicate, double f1_min, double f1_max, int f1_steps, double f2_min,
                                  double f2_max, int f2_steps, int rounds, char **csv) {
    return guard([&] {
        need(predicate, "predicate");
        need(csv, "csv");
        GridAxis a{f1_min, f1_max, f1_steps};
        GridAxis b{f2_min, f2_max, f2_steps};
        *csv = dup_string(region_sweep_csv(parse_predicate(predicate), a, b, rounds));
    });
}

ghzp_status ghzp_step(const char *scheme, const ghzp_ensemble *r1, const ghzp_ensemble *r2,
                      const ghzp_phase_ensemble *p1, const ghzp_phase_ensemble *p2, int exact, char **json) {
    return guard([&] {
        need(scheme, "scheme");
        need(json, "json");
        std::string s = scheme;
        check_scheme(s);
        std::string doc;
        if (is_phase_scheme(s)) {
            need(p1, "p1");
            need(p2, "p2");
            auto a = from_c(*p1);
            auto b = from_c(*p2);
            doc = exact ? phase_step_json(s, exact_of(a), exact_of(b)) : phase_step_json(s, a, b);
        } else {
            const auto &a = get(r1, "r1");
            const auto &b = get(r2, "r2");
            doc = exact ? step_json(s, exact_of(a), exact_of(b)) : step_json(s, a, b);
        }
        *json = dup_string(doc);
    });
}

ghzp_status ghzp_step_json(const char *scheme, const char *in1, const char *in2, int exact, char **json) {
    return guard([&] {
        need(scheme, "scheme");
        need(in1, "in1");
        need(in2, "in2");
        need(json, "json");
        std::string s = scheme;
        check_scheme(s);
        std::string doc;
        if (is_phase_scheme(s)) {
            doc = exact ? phase_step_json(s, phase_from_json<Rational>(in1), phase_from_json<Rational>(in2))
                        : phase_step_json(s, phase_from_json<double>(in1), phase_from_json<double>(in2));
        } else {
            doc = exact ? step_json(s, ensemble_from_json<Rational>(in1), ensemble_from_json<Rational>(in2))
                        : step_json(s, ensemble_from_json<double>(in1), ensemble_from_json<double>(in2));
        }
        *json = dup_string(doc);
    });
}

ghzp_status ghzp_verify(const int *ns, size_t ns_count, unsigned flags, char **csv, int *passed) {
    return guard([&] {
        VerifyOptions opts;
        if (ns != nullptr && ns_count > 0) {
            opts.ns.assign(ns, ns + ns_count);
        }
        opts.exact = (flags & GHZP_VERIFY_EXACT) != 0;
        opts.inject_fault = (flags & GHZP_VERIFY_INJECT_FAULT) != 0;
        auto report = run_verify(opts);
        if (csv != nullptr) {
            *csv = dup_string(verify_csv(report));
        }
        if (passed != nullptr) {
            *passed = report.passed ? 1 : 0;
        }
    });
}

ghzp_status ghzp_plan_bitflip(const ghzp_ensemble *r1, const ghzp_ensemble *r2, const ghzp_plan_options *opts,
                              char **json, int *feasible) {
    return guard([&] {
        PlanRequest req = plan_request(Track::bitflip, opts);
        req.rho1 = get(r1, "r1");
        req.rho2 = get(r2, "r2");
        run_plan(req, json, feasible);
    });
}

ghzp_status ghzp_plan_phase(ghzp_phase_ensemble p1, ghzp_phase_ensemble p2, const ghzp_plan_options *opts,
                            char **json, int *feasible) {
    return guard([&] {
        PlanRequest req = plan_request(Track::phase, opts);
        req.phase1 = from_c(p1);
        req.phase2 = from_c(p2);
        run_plan(req, json, feasible);
    });
}

}  // extern "C"
