"""Seeded generators for fuzz instances. Every function takes a
``random.Random`` so a campaign seed fully determines the instance stream."""
from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement

from .graphs import (
    SimpleGraph,
    complement,
    complete_multipartite,
    find_reversible_peo,
    is_chordal,
    random_forest,
    random_graph,
    random_proper_interval,
)
from .monomial import MonomialIdeal, colon_quotient, mul, var, variable_index
from .polymatroid import exchange_closure, is_polymatroidal


def random_monomial(rng: random.Random, n: int, d: int) -> tuple:
    u = [0] * n
    for _ in range(d):
        u[rng.randrange(n)] += 1
    return tuple(u)


def all_monomials(n: int, d: int) -> list:
    out = []
    for c in combinations_with_replacement(range(n), d):
        u = [0] * n
        for p in c:
            u[p] += 1
        out.append(tuple(u))
    return out


def _linear_after(prior, u) -> bool:
    quots = [colon_quotient(v, u) for v in prior]
    lin = {p for p in map(variable_index, quots) if p is not None}
    return all(any(q[p - 1] for p in lin) for q in quots)


def _incremental_lq(rng, n, d, m):
    gens = [random_monomial(rng, n, d)]
    pool = all_monomials(n, d)
    for _ in range(50 * m):
        if len(gens) >= m:
            break
        if rng.random() < 0.7:
            # a neighbour of an existing generator keeps colons small
            g = rng.choice(gens)
            i, j = rng.randrange(n), rng.randrange(n)
            if g[i] == 0 or i == j:
                continue
            u = list(g)
            u[i] -= 1
            u[j] += 1
            u = tuple(u)
        else:
            u = rng.choice(pool)
        if u not in gens and _linear_after(gens, u):
            gens.append(u)
    return MonomialIdeal(n, tuple(gens))


def _borel_closure(n, gens):
    seen = set(gens)
    stack = list(gens)
    while stack:
        u = stack.pop()
        for j in range(n):
            if not u[j]:
                continue
            for i in range(j):
                w = list(u)
                w[j] -= 1
                w[i] += 1
                w = tuple(w)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen


def _stable(rng, n, d, m):
    for _ in range(50):
        seeds = [random_monomial(rng, n, d) for _ in range(rng.randint(1, 2))]
        closure = _borel_closure(n, seeds)
        if len(closure) <= m:
            return MonomialIdeal(n, tuple(closure))
    return MonomialIdeal(n, (tuple([d] + [0] * (n - 1)),))


def _transversal(rng, n, d, m):
    for _ in range(50):
        factors = [rng.sample(range(1, n + 1), rng.randint(1, min(n, 3))) for _ in range(d)]
        gens = [(0,) * n]
        for f in factors:
            gens = {mul(u, var(n, p)) for u in gens for p in f}
        if len(gens) <= m:
            return MonomialIdeal(n, tuple(gens))
    return MonomialIdeal(n, (tuple([d] + [0] * (n - 1)),))


def _cochordal_edge_ideal(rng, n, m):
    from .graphs import edge_ideal

    for _ in range(200):
        g = random_graph(n, rng.uniform(0.3, 0.9), rng.random())
        if 0 < len(g.edges) <= m and is_chordal(complement(g)):
            return edge_ideal(g)
    return MonomialIdeal(n, (mul(var(n, 1), var(n, 2)),))


LQ_FAMILIES = ("incremental", "stable", "transversal", "cochordal")


def random_lq_ideal(rng: random.Random, max_n: int = 5, max_degree: int = 4, max_gens: int = 10, min_gens: int = 3):
    """Random equigenerated ideal with linear quotients; returns (ideal, family).

    Draws are repeated until ``min_gens <= |G(I)| <= max_gens``.
    """
    for _ in range(1000):
        family = rng.choice(LQ_FAMILIES)
        n = rng.randint(2, max_n)
        d = rng.randint(2, max_degree)
        m = rng.randint(min_gens, max_gens)
        if family == "incremental":
            ideal = _incremental_lq(rng, n, d, m)
        elif family == "stable":
            ideal = _stable(rng, n, d, max_gens)
        elif family == "transversal":
            ideal = _transversal(rng, n, d, max_gens)
        else:
            ideal = _cochordal_edge_ideal(rng, n, max_gens)
        if min_gens <= len(ideal) <= max_gens:
            return ideal, family
    raise RuntimeError("could not sample a linear-quotients ideal of the requested size")


def random_equigenerated(rng: random.Random, n: int, d: int, m: int, squarefree: bool = False) -> MonomialIdeal:
    if squarefree:
        pool = [tuple(1 if p in c else 0 for p in range(n)) for c in combinations(range(n), d)]
    else:
        pool = all_monomials(n, d)
    return MonomialIdeal(n, tuple(rng.sample(pool, min(m, len(pool)))))


def random_reversible_cochordal(rng: random.Random, max_n: int = 8) -> tuple[SimpleGraph, tuple, str]:
    """Graph G whose complement has a reversible PEO; returns (G, peo, family)."""
    n = rng.randint(2, max_n)
    if rng.random() < 0.5:
        h = random_proper_interval(n, rng.random())
        family = "proper_interval"
    else:
        family = "random_reversible"
        for _ in range(1000):
            h = random_graph(n, rng.uniform(0.2, 0.9), rng.random())
            if find_reversible_peo(h) is not None:
                break
    peo = find_reversible_peo(h)
    assert peo is not None
    return complement(h), peo, family


def random_forest_complement(rng: random.Random, max_n: int = 8) -> tuple[SimpleGraph, SimpleGraph]:
    n = rng.randint(2, max_n)
    f = random_forest(n, rng.random())
    return complement(f), f


def random_multipartite(rng: random.Random, max_n: int = 8) -> tuple[SimpleGraph, list]:
    n = rng.randint(2, max_n)
    parts = []
    left = n
    while left:
        s = rng.randint(1, left)
        parts.append(s)
        left -= s
    if len(parts) == 1:
        parts = [n - 1, 1]
    return complete_multipartite(parts), parts


def random_degree3_instance(rng: random.Random, max_n: int = 5) -> tuple[MonomialIdeal, str]:
    """Degree-3 ideals for the lex-order characterization: about half come
    from polymatroidal families, the rest are arbitrary."""
    n = rng.randint(2, max_n)
    r = rng.random()
    if r < 0.25:
        return _transversal(rng, n, 3, 10 ** 6), "transversal"
    if r < 0.4:
        vs = sorted(rng.sample(range(n), rng.randint(1, n)))
        pool = [u for u in all_monomials(n, 3) if all(u[p] == 0 for p in range(n) if p not in vs)]
        return MonomialIdeal(n, tuple(pool)), "veronese"
    if r < 0.55:
        seeds = random_equigenerated(rng, n, 3, rng.randint(1, 3))
        return exchange_closure(seeds), "closure"
    return random_equigenerated(rng, n, 3, rng.randint(1, 10), squarefree=rng.random() < 0.3), "random"


def random_degree3_polymatroidal(rng: random.Random, max_n: int = 5) -> tuple[MonomialIdeal, str]:
    for _ in range(1000):
        ideal, fam = random_degree3_instance(rng, max_n)
        if fam != "random" and is_polymatroidal(ideal)[0]:
            return ideal, fam
    raise RuntimeError("could not sample a polymatroidal ideal")
