#!/usr/bin/env python3
"""Python binding smoke tests: exercise each exposed operation once."""

import sys

try:
    import srmatch as sr
except ImportError:
    import _core as sr

failures = 0


def check(name, ok):
    global failures
    print(("ok" if ok else "FAIL") + f": {name}")
    if not ok:
        failures += 1


# Instances and core operations -------------------------------------------
tri = sr.parse_instance("sri 3\n1: 2 3\n2: 3 1\n3: 1 2\n")
check("parse/render round-trip", sr.render_instance(tri) == "sri 3\n1: 2 3\n2: 3 1\n3: 1 2\n")
check("validate clean", sr.validate(tri) == [])
check("rank", sr.rank(tri, 1, 2) == 1 and sr.rank(tri, 1, 3) == 2)
check("pair_type", sr.pair_type(tri, (1, 2)) == (1, 2))
blocking, stable = sr.blocking_edges(tri, [(1, 2)])
check("blocking_edges", blocking == [(2, 3)] and not stable)

inst = sr.Instance(2, [[[2]], [[1]]])
check("Instance ctor + cost", sr.cost(inst, [(1, 2)]) == 2)
check("exceptions", issubclass(sr.Unsolvable, sr.Error))

# Solver --------------------------------------------------------------------
check("solve unsolvable", sr.solve(tri) is None)
check("solve single edge", sr.solve(inst) == [(1, 2)])
four = sr.parse_instance("sri 4\n1: 2 4\n2: 3 1\n3: 4 2\n4: 1 3\n")
check("enumerate", len(sr.enumerate_stable(four)) == 2)
check("matched_set", sr.matched_set(inst) == {1, 2})

# Egalitarian ----------------------------------------------------------------
matching, c = sr.egal_exact(four)
check("egal_exact", c == 6 and matching == [(1, 2), (3, 4)])
report = sr.egal_approx(four, 3, oracle=True)
check("egal_approx", report.guarantee == (9, 7) and report.output_cost <= 2 * report.oracle_cost)
pre = sr.preprocess(sr.parse_instance("sri 2\n1: 2\n2: 1\n"))
check("preprocess", pre.forced == [(1, 2)] and pre.base_cost == 2)
check("weight12", sr.weight12(four, (1, 2)) == 0)
m2, c2 = sr.egal_2sri(sr.parse_instance("sri 3\n1: 2\n2: 1 3\n3: 2\n"))
check("egal_2sri", m2 == [(1, 2)] and c2 == 2)

# SRTI ------------------------------------------------------------------------
tied = sr.parse_instance("srti 3\n1: (2 3)\n2: 3 1\n3: 1 2\n")
verdict, matching, nodes = sr.solvable(tied)
check("solvable", verdict == "stable" and matching == [(1, 3)])
shapes = sr.classify_components(tied)
check("classify", shapes[0].kind == "odd_cycle" and not shapes[0].odd_party)
matching, bp = sr.min_bp_2srti(tri)
check("min_bp_2srti", bp == 1)
best = sr.min_bp_brute(tri, 1)
check("min_bp_brute", best is not None and best[1] == 1)
check("min_bp_brute none-within", sr.min_bp_brute(tri, 0) is None)

# Reductions -------------------------------------------------------------------
k4 = sr.Graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
bundle = sr.gen_egal_from_vc(k4, 3)
check("gen vc", bundle.instance.n == 72 and bundle.k_prime == 121)
witness = sr.cover_to_matching(bundle, [1, 2, 3])
check("cover witness", sr.cost(bundle.instance, witness) == 121)
check("cover round-trip", sr.matching_to_cover(bundle, witness) == [1, 2, 3])
check("brute_vc", sr.brute_vc(k4) == (3, [1, 2, 3]))

f = sr.parse_dimacs("p cnf 3 4\n1 2 3 0\n1 2 3 0\n-1 -2 -3 0\n-1 -2 -3 0\n")
sat_bundle = sr.gen_srti_from_sat(f)
check("gen sat", sat_bundle.instance.n == 92)
assignment = sr.brute_sat(f)
check("brute_sat", assignment is not None and f.satisfied_by(assignment))
wm = sr.assignment_to_matching(sat_bundle, assignment)
check("sat witness stable", sr.blocking_edges(sat_bundle.instance, wm)[1])
check("sat round-trip", f.satisfied_by(sr.matching_to_assignment(sat_bundle, wm)))
amp = sr.gen_amplified(f, 2)
check("gen amplified", amp.instance.n == 187)

# IO ----------------------------------------------------------------------------
g = sr.parse_graph("p 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
check("parse_graph", g.n == 4 and len(g.edges) == 6)
r1 = sr.random_instance(8, 3, 0.3, 42)
r2 = sr.random_instance(8, 3, 0.3, 42)
check("random deterministic", sr.render_instance(r1) == sr.render_instance(r2))

try:
    sr.egal_exact(tri)
    check("Unsolvable raised", False)
except sr.Unsolvable:
    check("Unsolvable raised", True)

try:
    sr.parse_instance("bogus")
    check("ParseError raised", False)
except sr.ParseError:
    check("ParseError raised", True)

print(f"{failures} failures")
sys.exit(1 if failures else 0)
