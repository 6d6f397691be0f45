// Command-line surface for the stable-roommates library: solving,
// enumeration, egalitarian matching, most-stable matching, solvability
// search, hardness-instance generation and witness verification.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "srmatch/core.hpp"
#include "srmatch/egal.hpp"
#include "srmatch/io.hpp"
#include "srmatch/reductions.hpp"
#include "srmatch/solver.hpp"
#include "srmatch/srti.hpp"

using json = nlohmann::ordered_json;
using namespace srm;

namespace {

constexpr int kExitAnswered = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;  // unsolvable / unsat style verdicts
constexpr int kExitUsage = 64;

struct Fatal {
    std::string message;
    int code;
};

[[noreturn]] void fail(const std::string& message, int code = kExitError) {
    throw Fatal{message, code};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write '" + path + "'");
    out << content;
}

Instance load_instance(const std::string& path) {
    Instance inst = parse_instance(read_file(path));
    auto violations = validate(inst);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid instance '" << path << "':";
        for (const auto& v : violations) msg << "\n  " << v.message;
        fail(msg.str());
    }
    return inst;
}

std::string matching_lines(const Matching& m) {
    std::ostringstream out;
    for (auto [u, v] : m.pairs) out << u << " " << v << "\n";
    return out.str();
}

json matching_json(const Matching& m) {
    json arr = json::array();
    for (auto [u, v] : m.pairs) arr.push_back({u, v});
    return arr;
}

std::string fmt_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// ---------------------------------------------------------------------------

int cmd_solve(const std::string& file, bool as_json) {
    Instance inst = load_instance(file);
    if (!inst.strict()) fail("solve requires a strict instance; use 'solvable' for ties");
    auto m = solve(inst);
    if (!m) {
        emit(json{{"verdict", "unsolvable"}}, as_json, "verdict: unsolvable\n");
        return kExitNegative;
    }
    long long c = cost(inst, *m);
    emit(json{{"verdict", "stable"}, {"matching", matching_json(*m)}, {"cost", c}}, as_json,
         "verdict: stable\nmatching:\n" + matching_lines(*m) + "cost: " + std::to_string(c) + "\n");
    return kExitAnswered;
}

int cmd_enumerate(const std::string& file, std::uint64_t cap, bool as_json) {
    Instance inst = load_instance(file);
    StableSet set = enumerate_stable(inst, cap);
    if (as_json) {
        json arr = json::array();
        for (const auto& m : set.matchings) arr.push_back(matching_json(m));
        emit(json{{"verdict", "ok"}, {"count", set.size()}, {"matchings", arr}}, true, "");
    } else {
        std::cout << "verdict: ok\ncount: " << set.size() << "\n";
        for (std::size_t k = 0; k < set.size(); ++k)
            std::cout << "matching " << k + 1 << ":\n" << matching_lines(set.matchings[k]);
    }
    return set.empty() ? kExitNegative : kExitAnswered;
}

int cmd_egal(const std::string& file, const std::string& mode, std::optional<int> d_opt,
             bool with_oracle, bool as_json) {
    Instance inst = load_instance(file);
    if (mode == "exact") {
        try {
            auto [m, c] = egal_exact(inst);
            emit(json{{"verdict", "stable"}, {"matching", matching_json(m)}, {"cost", c}}, as_json,
                 "verdict: stable\nmatching:\n" + matching_lines(m) +
                     "cost: " + std::to_string(c) + "\n");
            return kExitAnswered;
        } catch (const Unsolvable&) {
            emit(json{{"verdict", "unsolvable"}}, as_json, "verdict: unsolvable\n");
            return kExitNegative;
        }
    }
    int d = d_opt.value_or(std::clamp(inst.max_list_length(), 3, 5));
    try {
        ApproxReport report = egal_approx(inst, d, with_oracle);
        json j{{"verdict", "stable"},
               {"matching", matching_json(report.output)},
               {"cost", report.output_cost},
               {"d", d},
               {"guarantee", fmt_rational(report.guarantee)},
               {"count12_output", report.count_12_output}};
        std::ostringstream text;
        text << "verdict: stable\nmatching:\n"
             << matching_lines(report.output) << "cost: " << report.output_cost << "\n"
             << "guarantee: " << fmt_rational(report.guarantee) << "\n";
        if (with_oracle) {
            Rational ratio = *report.oracle_cost == 0
                                 ? Rational(1)
                                 : Rational(report.output_cost, *report.oracle_cost);
            j["oracle_cost"] = *report.oracle_cost;
            j["ratio"] = fmt_rational(ratio);
            j["count12_egal"] = *report.count_12_egal;
            j["count12_opt"] = *report.count_12_opt;
            text << "oracle-cost: " << *report.oracle_cost << "\n"
                 << "ratio: " << fmt_rational(ratio) << "\n"
                 << "count12-output: " << report.count_12_output << "\n"
                 << "count12-egal: " << *report.count_12_egal << "\n"
                 << "count12-opt: " << *report.count_12_opt << "\n";
        }
        emit(j, as_json, text.str());
        return kExitAnswered;
    } catch (const Unsolvable&) {
        emit(json{{"verdict", "unsolvable"}}, as_json, "verdict: unsolvable\n");
        return kExitNegative;
    }
}

int cmd_minbp(const std::string& file, const std::string& mode, std::optional<int> kmax,
              bool force, bool as_json) {
    Instance inst = load_instance(file);
    MostStableResult result;
    if (mode == "auto" && inst.max_list_length() <= 2) {
        result = min_bp_2srti(inst);
    } else {
        auto r = min_bp_brute(inst, kmax.value_or(inst.n_agents() * inst.n_agents() + 1), force);
        if (!r) {
            emit(json{{"verdict", "none-within-kmax"}, {"kmax", kmax.value_or(-1)}}, as_json,
                 "verdict: none-within-kmax\nkmax: " + std::to_string(kmax.value_or(-1)) + "\n");
            return kExitNegative;
        }
        result = *r;
    }
    if (kmax && result.bp_count > *kmax) {
        emit(json{{"verdict", "none-within-kmax"}, {"kmax", *kmax}}, as_json,
             "verdict: none-within-kmax\nkmax: " + std::to_string(*kmax) + "\n");
        return kExitNegative;
    }
    emit(json{{"verdict", "ok"}, {"bp", result.bp_count}, {"matching", matching_json(result.matching)}},
         as_json,
         "verdict: ok\nbp: " + std::to_string(result.bp_count) + "\nmatching:\n" +
             matching_lines(result.matching));
    return kExitAnswered;
}

int cmd_solvable(const std::string& file, std::uint64_t budget, bool as_json) {
    Instance inst = load_instance(file);
    SolvableResult result = solvable(inst, budget);
    switch (result.verdict) {
        case SolvableResult::Verdict::Stable:
            emit(json{{"verdict", "stable"},
                      {"matching", matching_json(*result.matching)},
                      {"nodes", result.nodes}},
                 as_json, "verdict: stable\nmatching:\n" + matching_lines(*result.matching));
            return kExitAnswered;
        case SolvableResult::Verdict::Unsolvable:
            emit(json{{"verdict", "unsolvable"}, {"nodes", result.nodes}}, as_json,
                 "verdict: unsolvable\n");
            return kExitNegative;
        default:
            emit(json{{"verdict", "timeout"}, {"nodes", result.nodes}}, as_json,
                 "verdict: timeout\nnodes: " + std::to_string(result.nodes) + "\n");
            return kExitError;
    }
}

// ---------------------------------------------------------------------------
// Bundle serialization: instance file plus a "<agent> TAB <role>" sidecar
// whose #meta header lines make the bundle self-contained.

std::string graph_meta(const CubicGraph& g) {
    std::ostringstream out;
    for (std::size_t j = 0; j < g.edges.size(); ++j)
        out << (j ? "," : "") << g.edges[j].first << "-" << g.edges[j].second;
    return out.str();
}

std::string formula_meta(const CnfFormula& f) {
    std::ostringstream out;
    for (int j = 0; j < f.nclauses(); ++j) {
        if (j) out << ";";
        for (int p = 0; p < 3; ++p) out << (p ? "," : "") << f.clauses[j][p];
    }
    return out.str();
}

std::string render_map(const ReductionBundle& b) {
    std::ostringstream out;
    switch (b.kind) {
        case ReductionBundle::Kind::VertexCover:
            out << "#meta kind vc\n";
            out << "#meta n " << b.graph.n << "\n";
            out << "#meta m " << b.graph.edges.size() << "\n";
            out << "#meta K " << b.k << "\n";
            out << "#meta Kprime " << *b.k_prime << "\n";
            out << "#meta graph " << graph_meta(b.graph) << "\n";
            break;
        case ReductionBundle::Kind::Sat:
        case ReductionBundle::Kind::AmplifiedSat:
            out << "#meta kind " << (b.kind == ReductionBundle::Kind::Sat ? "sat" : "sat-amplified")
                << "\n";
            out << "#meta nvars " << b.formula.nvars << "\n";
            out << "#meta relaxed " << (b.relaxed ? 1 : 0) << "\n";
            out << "#meta copies " << b.copies << "\n";
            out << "#meta clauses " << formula_meta(b.formula) << "\n";
            break;
    }
    for (Agent a = 1; a < static_cast<Agent>(b.labels.size()); ++a)
        out << a << "\t" << b.labels[a] << "\n";
    return out.str();
}

ReductionBundle load_bundle(const std::string& prefix) {
    std::string map_text = read_file(prefix + ".map");
    std::istringstream in(map_text);
    std::string line, kind, graph_spec, clause_spec;
    int n = 0, k = 0, nvars = 0, copies = 1, relaxed = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag, key;
        ls >> tag;
        if (tag != "#meta") continue;
        ls >> key;
        if (key == "kind")
            ls >> kind;
        else if (key == "n")
            ls >> n;
        else if (key == "K")
            ls >> k;
        else if (key == "nvars")
            ls >> nvars;
        else if (key == "copies")
            ls >> copies;
        else if (key == "relaxed")
            ls >> relaxed;
        else if (key == "graph")
            ls >> graph_spec;
        else if (key == "clauses")
            ls >> clause_spec;
    }

    ReductionBundle bundle;
    if (kind == "vc") {
        CubicGraph g;
        g.n = n;
        std::istringstream es(graph_spec);
        std::string tok;
        while (std::getline(es, tok, ',')) {
            auto dash = tok.find('-');
            g.edges.push_back(make_pair_sorted(std::stoi(tok.substr(0, dash)),
                                               std::stoi(tok.substr(dash + 1))));
        }
        bundle = gen_egal_from_vc(g, k);
    } else if (kind == "sat" || kind == "sat-amplified") {
        CnfFormula f;
        f.nvars = nvars;
        std::istringstream cs(clause_spec);
        std::string clause;
        while (std::getline(cs, clause, ';')) {
            std::array<int, 3> lits{};
            std::istringstream litstream(clause);
            std::string lit;
            int p = 0;
            while (std::getline(litstream, lit, ',') && p < 3) lits[p++] = std::stoi(lit);
            f.clauses.push_back(lits);
        }
        bundle = kind == "sat" ? gen_srti_from_sat(f, relaxed != 0)
                               : gen_amplified(f, copies, relaxed != 0);
    } else {
        fail("'" + prefix + ".map' has no usable #meta kind line");
    }

    std::string instance_text = read_file(prefix);
    if (render_instance(bundle.instance) != render_instance(parse_instance(instance_text)))
        fail("instance file '" + prefix + "' does not match the bundle regenerated from its map");
    return bundle;
}

std::string bundle_header_comment(const ReductionBundle& b) {
    switch (b.kind) {
        case ReductionBundle::Kind::VertexCover:
            return "# K' = " + std::to_string(*b.k_prime) + "\n";
        default:
            return "# agents = " + std::to_string(b.instance.n_agents()) + "\n";
    }
}

int emit_bundle(const ReductionBundle& bundle, const std::string& out_prefix,
                const std::string& summary) {
    std::string text = bundle_header_comment(bundle) + render_instance(bundle.instance);
    if (out_prefix.empty()) {
        std::cout << text;
    } else {
        write_file(out_prefix, text);
        write_file(out_prefix + ".map", render_map(bundle));
        std::cout << summary << "\n";
    }
    return kExitAnswered;
}

int cmd_gen_vc(const std::string& graph_file, int K, const std::string& out_prefix) {
    CubicGraph g = parse_graph(read_file(graph_file));
    ReductionBundle bundle = gen_egal_from_vc(g, K);
    return emit_bundle(bundle, out_prefix, "K'=" + std::to_string(*bundle.k_prime));
}

int cmd_gen_sat(const std::string& cnf_file, int copies, bool relaxed,
                const std::string& out_prefix) {
    CnfFormula f = parse_dimacs(read_file(cnf_file), relaxed);
    ReductionBundle bundle =
        copies > 0 ? gen_amplified(f, copies, relaxed) : gen_srti_from_sat(f, relaxed);
    return emit_bundle(bundle, out_prefix,
                       "agents=" + std::to_string(bundle.instance.n_agents()));
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& prefix, const std::string& witness_file) {
    ReductionBundle bundle = load_bundle(prefix);
    std::string witness_text = read_file(witness_file);
    bool all_ok = true;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok: " : "fail: ") << what << "\n";
        all_ok = all_ok && ok;
    };
    check(true, "instance file matches the bundle map");

    if (bundle.kind == ReductionBundle::Kind::VertexCover) {
        std::vector<int> cover;
        std::istringstream in(witness_text);
        int v;
        while (in >> v) cover.push_back(v);
        Matching m = cover_to_matching(bundle, cover);  // throws NotACover
        check(true, "witness is a vertex cover");
        auto report = blocking_edges(bundle.instance, m);
        check(report.stable, "cover matching is stable");
        long long expected = 7LL * bundle.graph.edges.size() + 19LL * bundle.graph.n +
                             static_cast<long long>(cover.size());
        check(cost(bundle.instance, m) == expected,
              "cost equals 7m + 19n + |C| = " + std::to_string(expected));
        auto back = matching_to_cover(bundle, m);
        std::vector<int> sorted_cover = cover;
        std::sort(sorted_cover.begin(), sorted_cover.end());
        check(back == sorted_cover, "cover -> matching -> cover round-trip");
    } else {
        std::vector<bool> assignment(bundle.formula.nvars, false);
        std::vector<char> assigned(bundle.formula.nvars, 0);
        std::istringstream in(witness_text);
        int lit;
        while (in >> lit) {
            int var = std::abs(lit);
            if (var < 1 || var > bundle.formula.nvars) fail("witness literal out of range");
            assignment[var - 1] = lit > 0;
            assigned[var - 1] = 1;
        }
        for (int i = 0; i < bundle.formula.nvars; ++i)
            if (!assigned[i]) fail("witness leaves variable " + std::to_string(i + 1) + " unset");
        Matching m = assignment_to_matching(bundle, assignment);  // throws NotSatisfying
        check(true, "witness satisfies the formula");
        auto report = blocking_edges(bundle.instance, m);
        if (bundle.kind == ReductionBundle::Kind::Sat) {
            check(report.stable, "witness matching is stable");
            check(2 * m.size() == static_cast<std::size_t>(bundle.instance.n_agents()),
                  "witness matching is perfect");
            auto back = matching_to_assignment(bundle, m);
            check(back == assignment, "assignment -> matching -> assignment round-trip");
        } else {
            check(report.blocking.size() == 1,
                  "amplified witness has exactly 1 blocking edge (the triangle)");
        }
    }
    return all_ok ? kExitAnswered : kExitError;
}

int cmd_random(int n, int d, double ties, std::uint64_t seed) {
    if (n < 2 || d < 1 || ties < 0.0 || ties > 1.0) fail("bad generator parameters", kExitUsage);
    std::cout << render_instance(random_instance(n, d, ties, seed));
    return kExitAnswered;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable Roommates with short lists: solvers, egalitarian "
                 "approximation, most-stable matchings and hardness-instance generators"};
    app.require_subcommand(1);

    std::string file, mode, graph_file, cnf_file, out_prefix, witness_file, prefix;
    bool as_json = false, with_oracle = false, force = false, relaxed = false;
    std::uint64_t cap = kDefaultEnumerationCap, budget = kDefaultSolvableBudget, seed = 1;
    std::optional<int> d_opt, kmax;
    int K = 0, copies = 0, rn = 0, rd = 0;
    double ties = 0.0;

    auto* c_solve = app.add_subcommand("solve", "Find one stable matching (strict lists)");
    c_solve->add_option("file", file)->required();
    c_solve->add_flag("--json", as_json);

    auto* c_enum = app.add_subcommand("enumerate", "List every stable matching");
    c_enum->add_option("file", file)->required();
    c_enum->add_option("--cap", cap, "Abort after this many matchings");
    c_enum->add_flag("--json", as_json);

    auto* c_egal = app.add_subcommand("egal", "Egalitarian stable matching");
    c_egal->add_option("file", file)->required();
    c_egal->add_option("--mode", mode, "exact or approx")
        ->required()
        ->check(CLI::IsMember({"exact", "approx"}));
    c_egal->add_option("--d", d_opt, "List-length bound for approx (3, 4 or 5)")
        ->check(CLI::IsMember({3, 4, 5}));
    c_egal->add_flag("--oracle", with_oracle, "Also compute the exact cost and ratio");
    c_egal->add_flag("--json", as_json);

    auto* c_minbp = app.add_subcommand("minbp", "Most-stable matching");
    c_minbp->add_option("file", file)->required();
    c_minbp->add_option("--mode", mode)->check(CLI::IsMember({"auto", "brute"}));
    c_minbp->add_option("--kmax", kmax, "Report failure if every matching has more blocking edges");
    c_minbp->add_flag("--force", force, "Override the brute-force size guard");
    c_minbp->add_flag("--json", as_json);

    auto* c_solvable = app.add_subcommand("solvable", "Weak-stability solvability (ties allowed)");
    c_solvable->add_option("file", file)->required();
    c_solvable->add_option("--budget", budget, "Search-node budget");
    c_solvable->add_flag("--json", as_json);

    auto* c_gen = app.add_subcommand("gen", "Generate hardness instances");
    c_gen->require_subcommand(1);
    auto* c_gen_vc = c_gen->add_subcommand("vc", "3-VC -> EGAL 3-SRI DEC");
    c_gen_vc->add_option("--graph", graph_file, "Cubic graph file")->required();
    c_gen_vc->add_option("--k", K, "Cover size bound")->required();
    c_gen_vc->add_option("--out", out_prefix, "Write instance and .map here");
    auto* c_gen_sat = c_gen->add_subcommand("sat", "(2,2)-E3-SAT -> SOLVABLE 3-SRTI");
    c_gen_sat->add_option("--cnf", cnf_file, "DIMACS CNF file")->required();
    c_gen_sat->add_option("--copies", copies, "Amplified family: number of formula copies");
    c_gen_sat->add_flag("--relaxed", relaxed, "Allow fewer than two occurrences per polarity");
    c_gen_sat->add_option("--out", out_prefix, "Write instance and .map here");

    auto* c_verify = app.add_subcommand("verify", "Verify reduction witnesses");
    auto* c_verify_red = c_verify->add_subcommand("reduction", "Round-trip checks on a bundle");
    c_verify_red->add_option("bundle", prefix, "Path prefix written by gen --out")->required();
    c_verify_red->add_option("--witness", witness_file, "Cover / assignment file")->required();

    auto* c_random = app.add_subcommand("random", "Random degree-bounded instance");
    c_random->add_option("--n", rn)->required();
    c_random->add_option("--d", rd)->required();
    c_random->add_option("--ties", ties, "Tie probability per adjacent position");
    c_random->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(c_solve)) return cmd_solve(file, as_json);
        if (app.got_subcommand(c_enum)) return cmd_enumerate(file, cap, as_json);
        if (app.got_subcommand(c_egal)) return cmd_egal(file, mode, d_opt, with_oracle, as_json);
        if (app.got_subcommand(c_minbp))
            return cmd_minbp(file, mode.empty() ? "auto" : mode, kmax, force, as_json);
        if (app.got_subcommand(c_solvable)) return cmd_solvable(file, budget, as_json);
        if (app.got_subcommand(c_gen)) {
            if (c_gen->got_subcommand(c_gen_vc)) return cmd_gen_vc(graph_file, K, out_prefix);
            return cmd_gen_sat(cnf_file, copies, relaxed, out_prefix);
        }
        if (app.got_subcommand(c_verify)) return cmd_verify(prefix, witness_file);
        if (app.got_subcommand(c_random)) return cmd_random(rn, rd, ties, seed);
    } catch (const Fatal& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
