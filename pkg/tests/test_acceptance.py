"""The ten acceptance criteria, each at its stated size, tolerance and time limit.

Every criterion prints one ``ACCEPTANCE <n> PASS|FAIL`` line (run with ``-s``
or look at the captured output). Criterion 7 is a strict xfail: the
claim it checks is false in general (minimal counterexamples are kept as
tests next to it). It still runs in full and reports FAIL.
"""
import itertools
import random
import time

import pytest

from hsideals.campaigns import run_campaign
from hsideals.graphs import (
    SimpleGraph,
    all_graphs,
    complement,
    edge_ideal,
    find_induced_cycle,
    find_reversible_peo,
    is_chordal,
    is_proper_interval,
    is_reversible_peo,
    random_graph,
    satisfies_window_property,
)
from hsideals.linquot import find_admissible_order, has_linear_quotients, hs_linquot, lex_admissible
from hsideals.monomial import MonomialIdeal, parse_ideal, squarefree
from hsideals.polymatroid import is_lq_all_lex_orders, is_polymatroidal
from hsideals.resolution import all_hs, has_linear_resolution, hs_betti, multigraded_betti
from hsideals.sampling import random_degree3_instance

from .conftest import EX14, EX14_HS1, EX23_EDGES

SEED = 0


@pytest.fixture
def report(capsys):
    state = {"t0": time.perf_counter()}

    def done(n, ok, limit, detail=""):
        elapsed = time.perf_counter() - state["t0"]
        verdict = "PASS" if ok and elapsed < limit else "FAIL"
        with capsys.disabled():
            print(f"\nACCEPTANCE {n} {verdict} ({elapsed:.1f}s, limit {limit}s) {detail}".rstrip())
        assert elapsed < limit, f"criterion {n} took {elapsed:.1f}s (limit {limit}s)"
        return ok

    return done


def test_criterion_1_example_hs1_not_lq(report):
    i = parse_ideal(EX14)
    want = parse_ideal(EX14_HS1, 4)
    cert = find_admissible_order(i)
    hs1 = hs_linquot(i, cert, 1)
    t = multigraded_betti(hs1)
    g = t.graded()
    table = {(0, 3): 1, (0, 5): 1, (1, 6): 1, (0, 6): 8, (1, 7): 15, (2, 8): 8, (3, 9): 1, (1, 9): 3, (2, 10): 5, (3, 11): 2}
    checks = {
        "hs1": hs1 == want and hs_betti(i, 1) == want and len(hs1) == 10,
        "table": g == table,
        "b08": g.get((0, 8), 0) == 0 and g.get((1, 9), 0) != 0,
        "no_lq": not has_linear_quotients(hs1, max_gens=None),
    }
    ok = report(1, all(checks.values()), 60, str(checks))
    assert ok, checks


def test_criterion_2_example_nonlinear_hs2(report):
    i = edge_ideal(SimpleGraph(6, EX23_EDGES))
    hs = all_hs(i)
    hs2 = hs[2]
    g = multigraded_betti(hs2).graded()
    checks = {
        "hs0_lq": find_admissible_order(hs[0]) is not None,
        "hs1_lq": find_admissible_order(hs[1]) is not None,
        "hs2": hs2 == parse_ideal("x1x2x3x4, x1x4x5x6", 6),
        "not_linear": not has_linear_resolution(hs2),
        "shape": g == {(0, 4): 2, (1, 6): 1},
    }
    ok = report(2, all(checks.values()), 10, str(checks))
    assert ok, checks


def test_criterion_3_hs1_linear_quotients(report):
    r = run_campaign("T1.3", 200, SEED)
    c = r.counts()
    ok = report(3, c["pass"] == 200, 300, f"{c['pass']}/200 pass")
    assert ok, r.failures()[:3]


def test_criterion_4_oracle_equivalence(report):
    r = run_campaign("oracle", 100, SEED)
    c = r.counts()
    ok = report(4, c["pass"] == 100, 600, f"{c['pass']}/100 agree")
    assert ok, r.failures()[:3]


def test_criterion_5_dirac(report):
    exhaustive = bad = 0
    for n in range(1, 7):
        for g in all_graphs(n):
            exhaustive += 1
            if bool(is_chordal(g)) != (find_induced_cycle(g) is None):
                bad += 1
    chordal7 = 0
    for s in range(500):
        rng = random.Random(f"dirac:{SEED}:{s}")
        g = random_graph(7, rng.uniform(0.1, 0.9), rng.random())
        c = bool(is_chordal(g))
        chordal7 += c
        if c != (find_induced_cycle(g) is None):
            bad += 1
    ok = report(5, bad == 0, 300, f"{exhaustive} exhaustive + 500 random (n=7, {chordal7} chordal), {bad} disagreements")
    assert ok


def test_criterion_6_froberg(report):
    bad = linear = 0
    for s in range(300):
        rng = random.Random(f"froberg:{SEED}:{s}")
        n = rng.randint(2, 7)
        g = random_graph(n, rng.uniform(0.2, 0.95), rng.random())
        lin = has_linear_resolution(edge_ideal(g))
        linear += lin
        if lin != bool(is_chordal(complement(g))):
            bad += 1
    ok = report(6, bad == 0, 600, f"300 graphs ({linear} with linear resolution), {bad} disagreements")
    assert ok


# Smallest counterexamples have 5 vertices. Here G has edges 13, 14, 15, 25;
# its complement (edges 12, 23, 24, 34, 35, 45) has the reversible PEO
# 1 > 2 > 3 > 4 > 5, yet HS_1(I(G)) = (x1x2x5, x1x3x4, x1x3x5, x1x4x5) sorted
# lex-descending puts x1x2x5 first, and the colon at x1x3x4 is (x2x5).
LEX_COUNTEREXAMPLE = SimpleGraph(5, [(1, 3), (1, 4), (1, 5), (2, 5)])


def test_lex_counterexample_is_genuine():
    g = LEX_COUNTEREXAMPLE
    peo = (1, 2, 3, 4, 5)
    assert is_reversible_peo(complement(g), peo)
    hs1 = hs_betti(edge_ideal(g), 1)
    assert hs1 == parse_ideal("x1x2x5, x1x3x4, x1x3x5, x1x4x5")
    w = lex_admissible(hs1, peo)
    assert not w and w.position == 2 and w.quotient == (0, 1, 0, 0, 1)
    # some other order works, and so does the reversed lex order here
    assert find_admissible_order(hs1) is not None
    assert lex_admissible(hs1, peo[::-1])


def test_double_star_complement_is_proper_interval():
    # The graph of criterion 2 is a double star. Its complement is a proper
    # interval graph (intervals 4:[0,1] 2:[.5,2] 3:[.6,2.1] 5:[1.5,3]
    # 6:[1.6,3.1] 1:[2.5,4]), so it has a reversible PEO, yet HS_2 of its
    # edge ideal has two generators whose only syzygy sits in degree 6.
    g = SimpleGraph(6, EX23_EDGES)
    h = complement(g)
    order = is_proper_interval(h)
    assert order is not None and satisfies_window_property(h, (4, 2, 3, 5, 6, 1))
    peo = find_reversible_peo(h)
    assert peo is not None
    hs2 = hs_betti(edge_ideal(g), 2)
    assert not has_linear_resolution(hs2)
    assert find_admissible_order(hs2) is None
    assert not lex_admissible(hs2, peo) and not lex_admissible(hs2, peo[::-1])


@pytest.mark.xfail(strict=True, reason="the lex-order claim is false; see the two counterexample tests above")
def test_criterion_7_reversible_cochordal_lex(report):
    r = run_campaign("T2.6", 100, SEED)
    c = r.counts()
    no_order = sum(
        1 for rec in r.records if any(v.get("linear_quotients") is False for v in rec["verdicts"])
    )
    detail = f"{c['pass']}/100 pass both lex orders; {no_order} instances have an HS_k with no admissible order at all"
    ok = report(7, c["pass"] == 100, 600, detail)
    assert ok, r.failures()[:1]


def test_criterion_8_forests_and_multipartite(report):
    a = run_campaign("T3.1", 100, SEED)
    b = run_campaign("C3.6", 20, SEED)
    ca, cb = a.counts(), b.counts()
    ok = report(8, ca["pass"] == 100 and cb["pass"] == 20, 600, f"forests {ca['pass']}/100, multipartite {cb['pass']}/20")
    assert ok, (a.failures() + b.failures())[:3]


def test_criterion_9_degree2_polymatroidal(report):
    r = run_campaign("T4.7", 100, SEED)
    c = r.counts()
    ok = report(9, c["pass"] == 100, 600, f"{c['pass']}/100 pass")
    assert ok, r.failures()[:3]


def test_criterion_10_polymatroidal_iff_all_lex_orders(report):
    bad, checked, poly = [], 0, 0
    pairs = list(itertools.combinations(range(1, 5), 2))
    for size in range(1, len(pairs) + 1):
        for edges in itertools.combinations(pairs, size):
            i = MonomialIdeal(4, tuple(squarefree(4, e) for e in edges))
            p = is_polymatroidal(i)[0]
            poly += p
            checked += 1
            if p != is_lq_all_lex_orders(i)[0]:
                bad.append(i)
    for s in range(100):
        i, _ = random_degree3_instance(random.Random(f"T4.2:{SEED}:{s}"), max_n=5)
        p = is_polymatroidal(i)[0]
        poly += p
        checked += 1
        if p != is_lq_all_lex_orders(i)[0]:
            bad.append(i)
    ok = report(10, not bad, 600, f"{checked} ideals ({poly} polymatroidal), {len(bad)} disagreements")
    assert ok, bad[:3]
