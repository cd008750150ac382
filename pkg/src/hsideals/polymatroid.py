"""Exchange-property checks and the degree-two homological shift decomposition."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations

from .errors import InputError, ResourceCapError
from .graphs import complement, graph_of_ideal, hs_edge_ideal, is_chordal, is_peo
from .linquot import hs_linquot, is_admissible
from .monomial import (
    MonomialIdeal,
    add,
    format_monomial,
    mul,
    scale,
    squarefree,
    var,
    variable_ideal,
)

MAX_PERMUTATION_VARS = 7


@dataclass(frozen=True)
class ExchangeWitness:
    """One instance of the exchange condition: ``u``, ``v`` in G(I) and a
    variable ``i`` with ``deg_i(u) > deg_i(v)``. ``j`` is the exchange that
    worked (or None when none did)."""

    u: tuple
    v: tuple
    i: int
    j: int | None
    satisfied: bool
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "u": format_monomial(self.u) if self.u else None,
            "v": format_monomial(self.v) if self.v else None,
            "i": self.i,
            "j": self.j,
            "satisfied": self.satisfied,
            "reason": self.reason,
        }


def _exchange(ideal: MonomialIdeal, dual: bool) -> tuple[bool, ExchangeWitness | None]:
    gens = set(ideal.gens)
    n = ideal.n
    for u in ideal.gens:
        for v in ideal.gens:
            if u == v:
                continue
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                ok = False
                for j in range(n):
                    if u[j] >= v[j]:
                        continue
                    if dual:
                        w = list(v)
                        w[j] -= 1
                        w[i] += 1
                    else:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                    if tuple(w) in gens:
                        ok = True
                        break
                if not ok:
                    return False, ExchangeWitness(u, v, i + 1, None, False)
    return True, None


def is_polymatroidal(ideal: MonomialIdeal) -> tuple[bool, ExchangeWitness | None]:
    """Equigenerated, and for all ``u != v`` in G(I) and every ``i`` with
    ``deg_i(u) > deg_i(v)`` there is ``j`` with ``deg_j(u) < deg_j(v)`` and
    ``x_j u / x_i`` in G(I)."""
    if not ideal.is_equigenerated():
        return False, ExchangeWitness((), (), 0, None, False, "not equigenerated")
    return _exchange(ideal, dual=False)


def check_dual_exchange(ideal: MonomialIdeal) -> tuple[bool, ExchangeWitness | None]:
    """The symmetric form: ``x_i v / x_j`` in G(I) for some such ``j``."""
    return _exchange(ideal, dual=True)


def is_lq_all_lex_orders(ideal: MonomialIdeal, max_vars: int = MAX_PERMUTATION_VARS) -> tuple[bool, tuple | None]:
    """Does G(I), sorted lex-descending, form an admissible order for every
    ordering of the variables? Returns ``(ok, first failing variable order)``.

    Non-equigenerated ideals are rejected with ``(False, None)``.
    """
    if not ideal.is_equigenerated():
        return False, None
    if ideal.n > max_vars:
        raise ResourceCapError("variables for the all-orders check", max_vars, ideal.n)
    for order in permutations(range(ideal.n)):
        gens = sorted(ideal.gens, key=lambda u: tuple(u[i] for i in order), reverse=True)
        if not is_admissible(ideal, gens):
            return False, tuple(p + 1 for p in order)
    return True, None


def degree2_decompose(ideal: MonomialIdeal) -> tuple[MonomialIdeal, list, tuple]:
    """Split a degree-two ideal into its squarefree part ``J`` and the list of
    ``l`` with ``x_l^2`` in G(I).

    Also returns a relabelling ``perm`` (``perm[p-1]`` is the new index of
    ``x_p``) that moves the squared variables to ``1..t``.
    """
    if ideal.degrees() - {2}:
        raise InputError("ideal is not generated in degree two")
    j = MonomialIdeal(ideal.n, tuple(u for u in ideal.gens if max(u) == 1))
    squares = sorted(u.index(2) + 1 for u in ideal.gens if max(u) == 2)
    rest = [p for p in range(1, ideal.n + 1) if p not in squares]
    new_order = squares + rest
    perm = [0] * ideal.n
    for new, old in enumerate(new_order, 1):
        perm[old - 1] = new
    return j, squares, tuple(perm)


def _hs_matroidal(j: MonomialIdeal, k: int) -> MonomialIdeal:
    if j.is_zero():
        return j
    g = graph_of_ideal(j)
    peo = is_chordal(complement(g))
    if not peo:
        raise InputError("squarefree part is not cochordal")
    return hs_edge_ideal(g, peo.ordering, k)


def hs_degree2(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """``HS_k(I)`` for degree-two polymatroidal ``I`` via

        HS_k(I) = HS_k(J) + sum_l x_l^2 * HS_{k-1}(J_l),

    where ``J`` is the squarefree part, ``l`` runs over the squared
    variables and ``J_l`` is generated by the other variables of the
    support of ``I``. ``HS_k(J)`` comes from the cochordal-graph formula.
    """
    if k < 0:
        raise InputError("k must be non-negative")
    if k == 0:
        return ideal
    j, squares, _ = degree2_decompose(ideal)
    out = _hs_matroidal(j, k)
    supp = ideal.support()
    n = ideal.n
    for l in squares:
        jl = variable_ideal(n, sorted(supp - {l}))
        if jl.is_zero():
            continue
        cert = is_admissible(jl, jl.gens)
        out = add(out, scale(mul(var(n, l), var(n, l)), hs_linquot(jl, cert, k - 1)))
    return out


def matroidal_any_order_peo(ideal: MonomialIdeal, max_vars: int = MAX_PERMUTATION_VARS) -> bool:
    """For degree-two matroidal ``I = I(G)``: is every vertex ordering a PEO
    of the complement of ``G``?

    ``G`` is taken on the support of ``I``; a variable dividing no
    generator would be a universal vertex of the complement and is not
    part of the graph the statement concerns.
    """
    if ideal.degrees() - {2} or not ideal.is_squarefree():
        raise InputError("ideal is not squarefree quadratic")
    ok, _ = is_polymatroidal(ideal)
    if not ok:
        raise InputError("ideal is not matroidal")
    supp = sorted(ideal.support())
    if len(supp) > max_vars:
        raise ResourceCapError("variables for the all-orders check", max_vars, len(supp))
    g = graph_of_ideal(ideal).induced(supp)
    gc = complement(g)
    return all(is_peo(gc, order) for order in permutations(gc.vertices()))


# --- samplers ----------------------------------------------------------------

FAMILIES = ("transversal", "veronese", "squarefree_veronese", "graph", "closure")


def _degree2_monomials(n, vars_):
    return [mul(var(n, a), var(n, b)) for a, b in combinations_with_replacement(vars_, 2)]


def exchange_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Add ``x_j u / x_i`` for every failed exchange until none fail."""
    gens = set(ideal.gens)
    n = ideal.n
    changed = True
    while changed:
        changed = False
        cur = sorted(gens)
        for u in cur:
            for v in cur:
                if u == v:
                    continue
                for i in range(n):
                    if u[i] <= v[i]:
                        continue
                    cands = []
                    for j in range(n):
                        if u[j] < v[j]:
                            w = list(u)
                            w[i] -= 1
                            w[j] += 1
                            cands.append(tuple(w))
                    if not any(w in gens for w in cands):
                        gens.update(cands)
                        changed = True
    return MonomialIdeal(n, tuple(gens))


def sample_degree2_polymatroidal(n: int, seed, family: str | None = None, max_attempts: int = 1000) -> tuple[MonomialIdeal, str]:
    """A degree-two polymatroidal ideal in ``n <= 8`` variables, deterministic
    per seed. Returns ``(ideal, family)``."""
    if not 1 <= n <= 8:
        raise InputError("n must be in 1..8")
    rng = random.Random(seed)
    if family is None:
        family = rng.choice(FAMILIES)
    if family == "transversal":
        a = rng.sample(range(1, n + 1), rng.randint(1, n))
        b = rng.sample(range(1, n + 1), rng.randint(1, n))
        ideal = MonomialIdeal(n, tuple(mul(var(n, x), var(n, y)) for x in a for y in b))
    elif family == "veronese":
        vs = sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))
        ideal = MonomialIdeal(n, tuple(_degree2_monomials(n, vs)))
    elif family == "squarefree_veronese":
        if n < 2:
            return sample_degree2_polymatroidal(n, seed, "veronese")
        vs = sorted(rng.sample(range(1, n + 1), rng.randint(2, n)))
        ideal = MonomialIdeal(n, tuple(squarefree(n, e) for e in combinations(vs, 2)))
    elif family == "graph":
        pool = _degree2_monomials(n, range(1, n + 1))
        for _ in range(max_attempts):
            k = rng.randint(1, min(len(pool), 2 * n))
            ideal = MonomialIdeal(n, tuple(rng.sample(pool, k)))
            if is_polymatroidal(ideal)[0]:
                break
        else:
            raise ResourceCapError("rejection-sampling attempts", max_attempts)
    elif family == "closure":
        pool = _degree2_monomials(n, range(1, n + 1))
        ideal = exchange_closure(MonomialIdeal(n, tuple(rng.sample(pool, rng.randint(1, min(3, len(pool)))))))
    else:
        raise InputError(f"unknown family {family!r}")
    assert is_polymatroidal(ideal)[0], f"sampler family {family} produced a non-polymatroidal ideal"
    return ideal, family
