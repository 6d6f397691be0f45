#pragma once

#include <cstdint>
#include <string>

#include "srmatch/instance.hpp"
#include "srmatch/reductions_types.hpp"
#include "srmatch/types.hpp"

namespace srm {

/// Parses the instance text format:
///
///   sri <n>      (or "srti <n>" when ties are present)
///   i: tier tier ...
///
/// where a tier is a bare agent id or "(id id ...)" for a tie, and "#"
/// starts a full-line comment. Throws ParseError on syntax errors. The
/// result is not validated; run validate() for invariant violations.
/// agent_lines, when given, receives each agent's 1-based source line so
/// violations can be reported against the input.
Instance parse_instance(const std::string& text, std::vector<int>* agent_lines = nullptr);

/// Canonical text form: "sri"/"srti" header by strictness, agents in
/// ascending order, tie members ascending. parse(render(x)) == x.
std::string render_instance(const Instance& inst);

/// Graph format: "p <n> <m>" then m lines "u v" (1-based); "#" comments.
/// Checks that the graph is simple and cubic (throws NotCubic).
CubicGraph parse_graph(const std::string& text);

/// DIMACS CNF, restricted to exactly-3-literal clauses over distinct
/// variables. In strict mode each variable must occur exactly twice
/// unnegated and twice negated (throws OccurrenceBound); relaxed mode
/// allows fewer occurrences.
CnfFormula parse_dimacs(const std::string& text, bool relaxed = false);

/// Random instance with maximum degree d and ties introduced with
/// probability tie_prob per adjacent list position. Deterministic per seed.
Instance random_instance(int n, int d, double tie_prob, std::uint64_t seed);

}  // namespace srm
