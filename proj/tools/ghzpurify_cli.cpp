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

// ghzpurify command-line tool. Talks to the library only through the C API.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ghzpurify/ghzpurify.h"
#include "json.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kValidation = 1, kVerifyFailed = 2, kInfeasible = 3 };

struct CliError {
    std::string message;
};

void check(ghzp_status s) {
    if (s != GHZP_OK) {
        throw CliError{ghzp_last_error()};
    }
}

struct StringDeleter {
    void operator()(char *s) const {
        ghzp_string_free(s);
    }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char *s) {
    OwnedString owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

struct EnsembleDeleter {
    void operator()(ghzp_ensemble *e) const {
        ghzp_ensemble_free(e);
    }
};
using OwnedEnsemble = std::unique_ptr<ghzp_ensemble, EnsembleDeleter>;

bool exact_from_env() {
    const char *v = std::getenv("GHZPURIFY_EXACT");
    return v != nullptr && std::string(v) == "1";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError{"io: cannot read '" + path + "'"};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string &out_path, const std::string &text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    out.flush();
    if (!out) {
        throw CliError{"io: cannot write '" + out_path + "'"};
    }
}

// Six significant digits. Accepts JSON numbers and "p/q" strings.
std::string fmt(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

double as_double(const json &v) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            return std::strtod(s.c_str(), nullptr);
        }
        long double p = std::strtold(s.substr(0, slash).c_str(), nullptr);
        long double q = std::strtold(s.substr(slash + 1).c_str(), nullptr);
        return static_cast<double>(p / q);
    }
    return std::nan("");
}

std::string fmt(const json &v) {
    return v.is_null() ? "-" : fmt(as_double(v));
}

struct Inputs {
    std::vector<std::string> sym;
    std::string in1, in2;
    std::vector<std::string> p0;
    int n = 3;
};

void add_input_flags(CLI::App *cmd, Inputs &in, bool phase) {
    cmd->add_option("--sym", in.sym, "Symmetric inputs: N f1 f2")->expected(3);
    cmd->add_option("--in1", in.in1, "First ensemble JSON file");
    cmd->add_option("--in2", in.in2, "Second ensemble JSON file");
    if (phase) {
        cmd->add_option("--p0", in.p0, "Phase-flip inputs: p1 p2")->expected(2);
        cmd->add_option("--n", in.n, "Photon count for --p0 inputs");
    }
}

std::string quoted(const std::string &s) {
    return json(s).dump();
}

// Builds the two input documents, keeping numbers as the user typed them so
// exact mode sees the decimal literally.
std::pair<std::string, std::string> input_documents(const Inputs &in, bool phase) {
    int given = (!in.sym.empty() ? 1 : 0) + (!in.in1.empty() || !in.in2.empty() ? 1 : 0) + (!in.p0.empty() ? 1 : 0);
    if (given != 1) {
        throw CliError{"validation: give exactly one of --sym, --in1/--in2" + std::string(phase ? ", --p0" : "")};
    }
    if (!in.sym.empty()) {
        if (phase) {
            throw CliError{"validation: phase-flip schemes take --p0 or --in1/--in2"};
        }
        std::string head = "{\"n\": " + in.sym[0] + ", \"symmetric\": true, \"f0\": ";
        return {head + quoted(in.sym[1]) + "}", head + quoted(in.sym[2]) + "}"};
    }
    if (!in.p0.empty()) {
        if (!phase) {
            throw CliError{"validation: --p0 applies to phase-flip schemes"};
        }
        std::string head = "{\"n\": " + std::to_string(in.n) + ", \"p0\": ";
        return {head + quoted(in.p0[0]) + "}", head + quoted(in.p0[1]) + "}"};
    }
    if (in.in1.empty() || in.in2.empty()) {
        throw CliError{"validation: --in1 and --in2 go together"};
    }
    return {read_file(in.in1), read_file(in.in2)};
}

OwnedEnsemble load_ensemble(const std::string &doc) {
    ghzp_ensemble *e = nullptr;
    check(ghzp_ensemble_from_json(doc.c_str(), &e));
    return OwnedEnsemble(e);
}

ghzp_phase_ensemble load_phase(const std::string &doc) {
    ghzp_phase_ensemble p{};
    check(ghzp_phase_from_json(doc.c_str(), &p));
    return p;
}

bool is_phase_scheme(const std::string &scheme) {
    return scheme.rfind("p2-", 0) == 0;
}

// ---- step ----

struct StepRow {
    std::string stage, cls, label;
    json probability, fidelity;
    std::string weights;
};

std::string weights_text(const json &w) {
    if (!w.is_object()) {
        return "-";
    }
    std::string s;
    for (const auto &[key, value] : w.items()) {
        s += (s.empty() ? "" : " ") + key + "=" + fmt(value);
    }
    return s;
}

std::vector<StepRow> step_rows(const json &doc) {
    std::vector<StepRow> rows;
    if (doc.contains("branches")) {
        for (const auto &b : doc["branches"]) {
            rows.push_back({"branch", b.value("class", ""), b.value("label", ""), b["probability"], b["fidelity"],
                            weights_text(b.value("weights", json()))});
        }
    }
    if (doc.contains("extracts")) {
        for (const auto &b : doc["extracts"]) {
            rows.push_back({"extract", b.value("class", ""), b.value("parties", ""), b["probability"], b["fidelity"],
                            weights_text(b["weights"])});
        }
        const auto &l = doc["link"];
        rows.push_back({"link", "-", l.value("parties", ""), json(), l["fidelity"], weights_text(l["weights"])});
    }
    for (const char *stage : {"identity", "residual", "second"}) {
        if (doc.contains(stage)) {
            const auto &b = doc[stage];
            rows.push_back({stage, "-", "-", b["probability"], b["p0"], "-"});
        }
    }
    return rows;
}

std::string step_text(const json &doc, const std::string &format) {
    std::ostringstream out;
    auto rows = step_rows(doc);
    if (format == "csv") {
        out << "stage,class,label,probability,fidelity,weights\n";
        for (const auto &r : rows) {
            out << r.stage << ',' << r.cls << ',' << r.label << ',' << fmt(r.probability) << ',' << fmt(r.fidelity)
                << ',' << r.weights << '\n';
        }
        return out.str();
    }
    out << "scheme " << doc["scheme"].get<std::string>() << (doc["exact"].get<bool>() ? " (exact)" : "") << '\n';
    for (const auto &r : rows) {
        out << r.stage << "  class " << r.cls << "  " << r.label << "  p=" << fmt(r.probability)
            << "  F=" << fmt(r.fidelity);
        if (r.weights != "-") {
            out << "  [" << r.weights << ']';
        }
        out << '\n';
    }
    for (const char *key : {"total_probability", "average_fidelity", "best_fidelity"}) {
        if (doc.contains(key)) {
            out << key << ' ' << fmt(doc[key]) << '\n';
        }
    }
    if (doc.contains("improves")) {
        out << "improves " << (doc["improves"].get<bool>() ? "yes" : "no") << '\n';
    }
    return out.str();
}

int cmd_step(const std::string &scheme, const Inputs &in, bool exact, const std::string &format,
             const std::string &out) {
    auto [a, b] = input_documents(in, is_phase_scheme(scheme));
    char *raw = nullptr;
    check(ghzp_step_json(scheme.c_str(), a.c_str(), b.c_str(), exact ? 1 : 0, &raw));
    std::string doc = take(raw);
    write_output(out, format == "json" ? doc + "\n" : step_text(json::parse(doc), format));
    return kOk;
}

// ---- compare ----

int cmd_compare(const Inputs &in, int rounds, const std::string &format, const std::string &out) {
    if (in.sym.empty()) {
        throw CliError{"validation: compare takes --sym 3 f1 f2"};
    }
    if (in.sym[0] != "3") {
        throw CliError{"invalid_arity: compare is defined for three-photon inputs"};
    }
    double f1 = std::strtod(in.sym[1].c_str(), nullptr);
    double f2 = std::strtod(in.sym[2].c_str(), nullptr);
    ghzp_scheme_report p1{}, p1p{};
    double f_triple = 0, f_t = 0;
    ghzp_preferred pref{};
    check(ghzp_p1_report(f1, f2, &p1));
    check(ghzp_p1prime_report(f1, f2, &p1p));
    check(ghzp_multiround_tradeoff(f1, f2, rounds, &f_triple, &f_t));
    check(ghzp_compare_schemes(f1, f2, rounds, &pref));
    const char *names[] = {"P1", "P1'", "tie"};
    const char *preferred = names[pref];
    std::ostringstream s;
    if (format == "json") {
        json doc{{"f1", f1},
                 {"f2", f2},
                 {"rounds", rounds},
                 {"f_triple", f_triple},
                 {"f_t", f_t},
                 {"f_p1", p1.average_fidelity},
                 {"f_p1prime", p1p.average_fidelity},
                 {"y_p1", p1.yield},
                 {"y_p1prime", p1p.yield},
                 {"preferred", preferred}};
        s << doc.dump(2) << '\n';
    } else if (format == "csv") {
        s << "f1,f2,rounds,f_triple,f_t,f_p1,f_p1prime,y_p1,y_p1prime,preferred\n"
          << fmt(f1) << ',' << fmt(f2) << ',' << rounds << ',' << fmt(f_triple) << ',' << fmt(f_t) << ','
          << fmt(p1.average_fidelity) << ',' << fmt(p1p.average_fidelity) << ',' << fmt(p1.yield) << ','
          << fmt(p1p.yield) << ',' << preferred << '\n';
    } else {
        s << "F'''     " << fmt(f_triple) << '\n'
          << "F^t      " << fmt(f_t) << '\n'
          << "F_P1     " << fmt(p1.average_fidelity) << '\n'
          << "F_P1'    " << fmt(p1p.average_fidelity) << '\n'
          << "Y_P1     " << fmt(p1.yield) << '\n'
          << "Y_P1'    " << fmt(p1p.yield) << '\n'
          << "prefer   " << preferred << '\n';
    }
    write_output(out, s.str());
    return kOk;
}

// ---- sweep ----

int cmd_sweep(const std::string &predicate, const std::vector<std::string> &grid, int rounds,
              const std::string &format, const std::string &out) {
    if (format == "json") {
        throw CliError{"validation: sweep emits csv only"};
    }
    if (grid.size() != 3 && grid.size() != 6) {
        throw CliError{"validation: give --grid min max steps once or twice"};
    }
    auto num = [&](std::size_t i) { return std::strtod(grid[i].c_str(), nullptr); };
    auto steps = [&](std::size_t i) { return std::atoi(grid[i].c_str()); };
    std::size_t j = grid.size() == 6 ? 3 : 0;
    char *raw = nullptr;
    check(ghzp_region_sweep_csv(predicate.c_str(), num(0), num(1), steps(2), num(j), num(j + 1), steps(j + 2), rounds,
                                &raw));
    write_output(out, take(raw));
    return kOk;
}

// ---- verify ----

int cmd_verify(const std::vector<int> &ns, bool exact, bool corrupt, const std::string &out) {
    unsigned flags = (exact ? GHZP_VERIFY_EXACT : 0u) | (corrupt ? GHZP_VERIFY_INJECT_FAULT : 0u);
    char *raw = nullptr;
    int passed = 0;
    check(ghzp_verify(ns.data(), ns.size(), flags, &raw, &passed));
    write_output(out, take(raw));
    std::cerr << (passed ? "verify: pass" : "verify: FAIL") << '\n';
    return passed ? kOk : kVerifyFailed;
}

// ---- plan ----

int cmd_plan(const Inputs &in, const ghzp_plan_options &opts, const std::string &out) {
    bool phase = !in.p0.empty();
    if (!phase && !in.in1.empty()) {
        std::string a = read_file(in.in1);
        phase = json::parse(a, nullptr, false).contains("p0");
    }
    auto [a, b] = input_documents(in, phase);
    char *raw = nullptr;
    int feasible = 0;
    if (phase) {
        check(ghzp_plan_phase(load_phase(a), load_phase(b), &opts, &raw, &feasible));
    } else {
        auto r1 = load_ensemble(a);
        auto r2 = load_ensemble(b);
        check(ghzp_plan_bitflip(r1.get(), r2.get(), &opts, &raw, &feasible));
    }
    write_output(out, take(raw) + "\n");
    if (!feasible) {
        std::cerr << "plan: infeasible\n";
        return kInfeasible;
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"GHZ-diagonal multipartite entanglement purification calculator"};
    app.require_subcommand(1);

    std::string out, format = "table";
    bool exact_flag = false;
    app.add_option("--out", out, "Write output to this path")->expected(1);
    app.add_option("--format", format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_flag("--exact", exact_flag, "Exact rational arithmetic (also GHZPURIFY_EXACT=1)");
    app.fallthrough();

    Inputs step_in, cmp_in, plan_in;
    std::string scheme = "p1-identity";
    auto *step = app.add_subcommand("step", "One purification step: branch table");
    step->add_option("--scheme", scheme,
                     "p1-identity p1-branches p1prime p1-link p2-identity p2-residual p2-second");
    add_input_flags(step, step_in, true);

    int rounds = 2;
    auto *compare = app.add_subcommand("compare", "P1 against P1' for symmetric three-photon inputs");
    add_input_flags(compare, cmp_in, false);
    compare->add_option("--rounds", rounds, "Recurrence rounds R for the F''' / F^t trade-off");

    std::string predicate = "fig3";
    std::vector<std::string> grid;
    int sweep_rounds = 2;
    auto *sweep = app.add_subcommand("sweep", "Region table over an (f1, f2) grid as CSV");
    sweep->add_option("--predicate", predicate, "Region predicate id");
    sweep->add_option("--grid", grid, "min max steps (once for a square grid, twice for f1 then f2)")
        ->expected(3)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->required();
    sweep->add_option("--rounds", sweep_rounds, "Rounds R for fig10");

    std::vector<int> ns;
    bool corrupt = false;
    auto *verify = app.add_subcommand("verify", "Closed forms against the circuit oracle");
    verify->add_option("--n", ns, "Photon counts (default 3 and 4)");
    verify->add_flag("--corrupt", corrupt, "Perturb one closed-form weight; the run must fail");

    double target = 0;
    int max_rounds = 2;
    std::string objective = "fidelity-first", scope = "all";
    bool recycle = false;
    auto *plan = app.add_subcommand("plan", "Search purification sequences for a fidelity target");
    add_input_flags(plan, plan_in, true);
    plan->add_option("--target", target, "Fidelity target")->required();
    plan->add_option("--max-rounds", max_rounds, "Round budget (0..6)");
    plan->add_option("--objective", objective, "fidelity-first or yield-first");
    plan->add_option("--scope", scope, "all or recycle");
    plan->add_flag("--recycle", recycle, "Same as --scope recycle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    bool exact = exact_flag || exact_from_env();
    try {
        if (step->parsed()) {
            return cmd_step(scheme, step_in, exact, format, out);
        }
        if (compare->parsed()) {
            return cmd_compare(cmp_in, rounds, format, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(predicate, grid, sweep_rounds, format, out);
        }
        if (verify->parsed()) {
            if (ns.empty()) {
                ns = {3, 4};
            }
            return cmd_verify(ns, exact, corrupt, out);
        }
        ghzp_plan_options opts{target, max_rounds, objective.c_str(), recycle ? "recycle" : scope.c_str()};
        return cmd_plan(plan_in, opts, out);
    } catch (const CliError &e) {
        std::cerr << "error: " << e.message << '\n';
    } catch (const json::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kValidation;
}
