// Python bindings for the main library operations. Matchings cross the
// boundary as lists of (u, v) tuples, weight functions as {(u, v): w}
// dicts, preference lists as lists of tiers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srmatch/core.hpp"
#include "srmatch/egal.hpp"
#include "srmatch/io.hpp"
#include "srmatch/reductions.hpp"
#include "srmatch/solver.hpp"
#include "srmatch/srti.hpp"

namespace py = pybind11;
using namespace srm;

namespace {

using PyPairs = std::vector<std::pair<int, int>>;

Matching to_matching(const PyPairs& pairs) {
    std::vector<Pair> ps;
    ps.reserve(pairs.size());
    for (auto [u, v] : pairs) ps.push_back(make_pair_sorted(u, v));
    return Matching(std::move(ps));
}

PyPairs from_matching(const Matching& m) { return m.pairs; }

WeightFn to_weights(const std::map<std::pair<int, int>, long long>& w) {
    WeightFn fn;
    for (auto& [e, value] : w) fn.set({e.first, e.second}, value);
    return fn;
}

std::string verdict_name(SolvableResult::Verdict v) {
    switch (v) {
        case SolvableResult::Verdict::Stable: return "stable";
        case SolvableResult::Verdict::Unsolvable: return "unsolvable";
        default: return "timeout";
    }
}

std::string kind_name(ComponentShape::Kind k) {
    switch (k) {
        case ComponentShape::Kind::Path: return "path";
        case ComponentShape::Kind::EvenCycle: return "even_cycle";
        default: return "odd_cycle";
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stable Roommates with short preference lists: solvers, "
              "egalitarian approximation, most-stable matchings and "
              "NP-hardness instance generators";

    // Exceptions. The base is registered first so specific translators,
    // registered later, take precedence.
    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<TiesPresent>(m, "TiesPresent", base.ptr());
    py::register_exception<Unsolvable>(m, "Unsolvable", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<DegreeTooHigh>(m, "DegreeTooHigh", base.ptr());
    py::register_exception<SizeGuardExceeded>(m, "SizeGuardExceeded", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<NotAcceptable>(m, "NotAcceptable", base.ptr());
    py::register_exception<InvalidMatching>(m, "InvalidMatching", base.ptr());
    py::register_exception<NotCubic>(m, "NotCubic", base.ptr());
    py::register_exception<NotACover>(m, "NotACover", base.ptr());
    py::register_exception<NotStable>(m, "NotStable", base.ptr());
    py::register_exception<NotSatisfying>(m, "NotSatisfying", base.ptr());
    py::register_exception<MalformedFormula>(m, "MalformedFormula", base.ptr());
    py::register_exception<MalformedMatching>(m, "MalformedMatching", base.ptr());
    py::register_exception<OccurrenceBound>(m, "OccurrenceBound", base.ptr());
    py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());

    py::class_<Instance>(m, "Instance")
        .def(py::init([](int n, std::vector<PrefList> prefs, int degree_bound) {
                 return Instance(n, std::move(prefs), degree_bound);
             }),
             py::arg("n"), py::arg("prefs"), py::arg("degree_bound") = 0,
             "prefs[i] lists agent i+1's tiers; a tier is a list of agent ids.")
        .def_property_readonly("n", &Instance::n_agents)
        .def_property_readonly("strict", &Instance::strict)
        .def_property_readonly("degree_bound", &Instance::degree_bound)
        .def("tiers", &Instance::tiers, py::arg("agent"))
        .def("preference_list", &Instance::list, py::arg("agent"))
        .def("edges", &Instance::edges)
        .def("__repr__", [](const Instance& inst) {
            return "<Instance n=" + std::to_string(inst.n_agents()) +
                   (inst.strict() ? " strict" : " tied") + ">";
        });

    py::class_<CubicGraph>(m, "Graph")
        .def(py::init([](int n, PyPairs edges) {
                 CubicGraph g;
                 g.n = n;
                 for (auto [u, v] : edges) g.edges.push_back(make_pair_sorted(u, v));
                 return g;
             }),
             py::arg("n"), py::arg("edges"))
        .def_readonly("n", &CubicGraph::n)
        .def_readonly("edges", &CubicGraph::edges);

    py::class_<CnfFormula>(m, "Formula")
        .def(py::init([](int nvars, std::vector<std::array<int, 3>> clauses) {
                 return CnfFormula{nvars, std::move(clauses)};
             }),
             py::arg("nvars"), py::arg("clauses"))
        .def_readonly("nvars", &CnfFormula::nvars)
        .def_readonly("clauses", &CnfFormula::clauses)
        .def("satisfied_by", &CnfFormula::satisfied_by, py::arg("assignment"));

    py::class_<ReductionBundle>(m, "ReductionBundle")
        .def_property_readonly("instance",
                               [](const ReductionBundle& b) { return b.instance; })
        .def_property_readonly("labels", [](const ReductionBundle& b) { return b.labels; })
        .def_property_readonly("k_prime", [](const ReductionBundle& b) { return b.k_prime; })
        .def_property_readonly("copies", [](const ReductionBundle& b) { return b.copies; })
        .def("agent_of", &ReductionBundle::agent_of, py::arg("label"));

    py::class_<PreprocessOutcome>(m, "PreprocessOutcome")
        .def_property_readonly("reduced", [](const PreprocessOutcome& p) { return p.reduced; })
        .def_property_readonly("forced",
                               [](const PreprocessOutcome& p) { return from_matching(p.forced); })
        .def_readonly("base_cost", &PreprocessOutcome::base_cost)
        .def_readonly("removed", &PreprocessOutcome::removed);

    py::class_<ApproxReport>(m, "ApproxReport")
        .def_property_readonly("output",
                               [](const ApproxReport& r) { return from_matching(r.output); })
        .def_readonly("output_cost", &ApproxReport::output_cost)
        .def_readonly("oracle_cost", &ApproxReport::oracle_cost)
        .def_property_readonly("guarantee",
                               [](const ApproxReport& r) {
                                   return std::pair(r.guarantee.numerator(),
                                                    r.guarantee.denominator());
                               })
        .def_readonly("count_12_output", &ApproxReport::count_12_output)
        .def_readonly("count_12_egal", &ApproxReport::count_12_egal)
        .def_readonly("count_12_opt", &ApproxReport::count_12_opt);

    py::class_<ComponentShape>(m, "ComponentShape")
        .def_property_readonly("kind",
                               [](const ComponentShape& s) { return kind_name(s.kind); })
        .def_readonly("vertices", &ComponentShape::vertices)
        .def_readonly("odd_party", &ComponentShape::odd_party);

    // Core ------------------------------------------------------------------
    m.def("parse_instance", &parse_instance, py::arg("text"));
    m.def("render_instance", &render_instance, py::arg("instance"));
    m.def("validate", [](const Instance& inst) {
        std::vector<std::tuple<std::string, std::vector<int>, std::string>> out;
        for (auto& v : validate(inst)) out.emplace_back(v.code, v.agents, v.message);
        return out;
    });
    m.def("rank", &rank, py::arg("instance"), py::arg("i"), py::arg("j"));
    m.def("pair_type", [](const Instance& inst, std::pair<int, int> e) {
        auto t = pair_type(inst, {e.first, e.second});
        return std::pair(t.i, t.j);
    });
    m.def("blocking_edges", [](const Instance& inst, const PyPairs& m) {
        auto report = blocking_edges(inst, to_matching(m));
        return std::pair(report.blocking, report.stable);
    }, py::arg("instance"), py::arg("matching"),
       "Returns (blocking_edges, stable).");
    m.def("cost",
          [](const Instance& inst, const PyPairs& m) { return cost(inst, to_matching(m)); });

    // Solver ----------------------------------------------------------------
    m.def("solve", [](const Instance& inst) -> std::optional<PyPairs> {
        auto m = solve(inst);
        if (!m) return std::nullopt;
        return from_matching(*m);
    });
    m.def("enumerate_stable", [](const Instance& inst, std::uint64_t cap) {
        std::vector<PyPairs> out;
        for (auto& m : enumerate_stable(inst, cap).matchings) out.push_back(from_matching(m));
        return out;
    }, py::arg("instance"), py::arg("cap") = kDefaultEnumerationCap);
    m.def("matched_set", &matched_set);

    // Egalitarian -----------------------------------------------------------
    m.def("egal_exact", [](const Instance& inst) {
        auto [m, c] = egal_exact(inst);
        return std::pair(from_matching(m), c);
    });
    m.def("preprocess", &preprocess);
    m.def("weight12", [](const Instance& inst, std::pair<int, int> e) {
        return weight12(inst, {e.first, e.second});
    });
    m.def("check_u_shaped",
          [](const Instance& inst, const std::map<std::pair<int, int>, long long>& w) {
              auto v = check_u_shaped(inst, to_weights(w));
              return std::tuple(v.ok, v.vertex, v.position);
          },
          "Returns (ok, vertex, position).");
    m.def("min_weight_stable",
          [](const Instance& inst, const std::map<std::pair<int, int>, long long>& w) {
              return from_matching(min_weight_stable(inst, to_weights(w)));
          });
    m.def("egal_approx", [](const Instance& inst, int d, bool oracle) {
        return egal_approx(inst, d, oracle);
    }, py::arg("instance"), py::arg("d"), py::arg("oracle") = false);
    m.def("egal_2sri", [](const Instance& inst) {
        auto [m, c] = egal_2sri(inst);
        return std::pair(from_matching(m), c);
    });

    // SRTI ------------------------------------------------------------------
    m.def("solvable", [](const Instance& inst, std::uint64_t budget) {
        auto r = solvable(inst, budget);
        std::optional<PyPairs> matching;
        if (r.matching) matching = from_matching(*r.matching);
        return std::tuple(verdict_name(r.verdict), matching, r.nodes);
    }, py::arg("instance"), py::arg("budget") = kDefaultSolvableBudget,
       "Returns (verdict, matching or None, nodes).");
    m.def("classify_components", &classify_components);
    m.def("min_bp_2srti", [](const Instance& inst) {
        auto r = min_bp_2srti(inst);
        return std::pair(from_matching(r.matching), r.bp_count);
    }, "Returns (matching, bp_count).");
    m.def("min_bp_brute",
          [](const Instance& inst, int k_max,
             bool force) -> std::optional<std::pair<PyPairs, int>> {
              auto r = min_bp_brute(inst, k_max, force);
              if (!r) return std::nullopt;
              return std::pair(from_matching(r->matching), r->bp_count);
          },
          py::arg("instance"), py::arg("k_max"), py::arg("force") = false);

    // Reductions ------------------------------------------------------------
    m.def("gen_egal_from_vc", &gen_egal_from_vc, py::arg("graph"), py::arg("k"));
    m.def("cover_to_matching", [](const ReductionBundle& b, const std::vector<int>& cover) {
        return from_matching(cover_to_matching(b, cover));
    });
    m.def("matching_to_cover", [](const ReductionBundle& b, const PyPairs& m) {
        return matching_to_cover(b, to_matching(m));
    });
    m.def("gen_srti_from_sat", &gen_srti_from_sat, py::arg("formula"),
          py::arg("relaxed") = false);
    m.def("assignment_to_matching",
          [](const ReductionBundle& b, const std::vector<bool>& assignment) {
              return from_matching(assignment_to_matching(b, assignment));
          });
    m.def("matching_to_assignment", [](const ReductionBundle& b, const PyPairs& m) {
        return matching_to_assignment(b, to_matching(m));
    });
    m.def("gen_amplified", &gen_amplified, py::arg("formula"), py::arg("copies"),
          py::arg("relaxed") = false);
    m.def("brute_vc", &brute_vc, py::arg("graph"));
    m.def("brute_sat", &brute_sat, py::arg("formula"));

    // IO --------------------------------------------------------------------
    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("parse_dimacs", &parse_dimacs, py::arg("text"), py::arg("relaxed") = false);
    m.def("random_instance", &random_instance, py::arg("n"), py::arg("d"),
          py::arg("tie_prob"), py::arg("seed"));
}
