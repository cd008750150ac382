"""Randomized properties; instance sizes are kept small enough for brute force."""
import itertools
from collections import Counter

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from hsideals.graphs import SimpleGraph, complement, edge_ideal, find_induced_cycle, is_chordal, is_peo
from hsideals.linquot import find_admissible_order, hs_linquot, is_admissible
from hsideals.monomial import (
    MonomialIdeal,
    colon_quotient,
    contains,
    divides,
    intersect,
    lcm,
    lex_compare,
    mul,
    multiply,
)
from hsideals.polymatroid import check_dual_exchange, is_lq_all_lex_orders, is_polymatroidal
from hsideals.resolution import all_hs, has_linear_resolution, multigraded_betti

N = 3


def monos(n=N, top=3):
    return st.tuples(*[st.integers(0, top)] * n)


def ideals(n=N, top=3, max_gens=5):
    return st.lists(monos(n, top).filter(any), min_size=1, max_size=max_gens).map(lambda g: MonomialIdeal(n, tuple(g)))


@st.composite
def equigenerated(draw, n=N, d=None):
    d = d or draw(st.integers(1, 3))
    pool = [u for u in itertools.product(range(d + 1), repeat=n) if sum(u) == d]
    gens = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=6, unique=True))
    return MonomialIdeal(n, tuple(gens))


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph(n, chosen)


FAST = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@FAST
@given(ideals())
def test_generators_are_an_antichain(i):
    for u, v in itertools.permutations(i.gens, 2):
        assert not divides(u, v)
    assert MonomialIdeal(i.n, i.gens) == i


@FAST
@given(ideals(), ideals(), monos())
def test_intersection_and_product_membership(a, b, u):
    assert contains(intersect(a, b), u) == (contains(a, u) and contains(b, u))
    if contains(multiply(a, b), u):
        assert contains(a, u) and contains(b, u)


@FAST
@given(monos(), monos())
def test_colon_quotient_is_least_multiplier(u, v):
    q = colon_quotient(u, v)
    assert divides(u, mul(v, q))
    for p in range(N):
        if q[p]:
            smaller = list(q)
            smaller[p] -= 1
            assert not divides(u, mul(v, tuple(smaller)))


@FAST
@given(monos(), monos(), st.permutations([1, 2, 3]))
def test_lex_is_a_total_order(u, v, order):
    assert lex_compare(u, v, order) == -lex_compare(v, u, order)
    assert (lex_compare(u, v, order) == 0) == (u == v)


@FAST
@given(ideals(max_gens=5))
def test_betti_alternating_sum_matches_inclusion_exclusion(i):
    # sum_i (-1)^i beta_{i,a} equals the coefficient of t^a in
    # sum over non-empty S of G(I) of (-1)^(|S|-1) t^lcm(S)
    lhs = Counter()
    for (k, a), r in multigraded_betti(i).entries.items():
        lhs[a] += (-1) ** k * r
    rhs = Counter()
    for size in range(1, len(i.gens) + 1):
        for s in itertools.combinations(i.gens, size):
            m = s[0]
            for g in s[1:]:
                m = lcm(m, g)
            rhs[m] += (-1) ** (size - 1)
    assert +lhs == +rhs and -lhs == -rhs


@FAST
@given(ideals(max_gens=5))
def test_search_result_is_admissible_and_matches_oracle(i):
    cert = find_admissible_order(i)
    if cert is None:
        assert not any(is_admissible(i, p) for p in itertools.permutations(i.gens))
        return
    assert is_admissible(i, cert.order)
    for k, h in enumerate(all_hs(i)):
        assert hs_linquot(i, cert, k) == h


@FAST
@given(equigenerated())
def test_equigenerated_lq_has_linear_resolution(i):
    if find_admissible_order(i) is not None:
        assert has_linear_resolution(i)


@FAST
@given(equigenerated())
def test_hs1_of_equigenerated_lq_has_lq(i):
    cert = find_admissible_order(i)
    if cert is not None:
        assert find_admissible_order(hs_linquot(i, cert, 1), max_gens=None) is not None


@FAST
@given(graphs())
def test_dirac(g):
    cert = is_chordal(g)
    assert bool(cert) == (find_induced_cycle(g) is None)
    if cert:
        assert is_peo(g, cert.ordering)


@FAST
@given(graphs(max_n=6))
def test_froberg(g):
    i = edge_ideal(g)
    assert has_linear_resolution(i) == bool(is_chordal(complement(g)))


@FAST
@given(equigenerated(n=3))
def test_polymatroidal_characterizations(i):
    poly = is_polymatroidal(i)[0]
    assert poly == is_lq_all_lex_orders(i)[0]
    if poly:
        assert check_dual_exchange(i)[0]
