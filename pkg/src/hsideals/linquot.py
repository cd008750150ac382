"""Linear quotients: admissible orders, ``set(u_i)``, and HS_k from an order.

An ordering ``u_1, ..., u_m`` of ``G(I)`` is admissible when every colon
ideal ``(u_1, ..., u_{i-1}) : u_i`` is generated by variables. That colon
ideal is generated by the quotients ``u_j : u_i`` (``j < i``), so it is
linear iff each such quotient is divisible by some ``u_l : u_i`` that is a
single variable.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import InputError, ParseError, ResourceCapError
from .monomial import (
    MonomialIdeal,
    colon_quotient,
    format_monomial,
    mul,
    parse_monomial,
    squarefree,
    variable_index,
)

DEFAULT_MAX_GENS = 20


@dataclass(frozen=True)
class AdmissibleOrderCertificate:
    order: tuple
    sets: tuple  # sets[i] is set(order[i]) as a frozenset of variable indices

    valid = True

    def __bool__(self):
        return True

    def set_of(self, i: int) -> frozenset:
        """``set(u_i)`` for the 1-based position ``i``."""
        if not 1 <= i <= len(self.order):
            raise IndexError(f"position {i} out of range 1..{len(self.order)}")
        return self.sets[i - 1]

    def to_text(self) -> str:
        lines = ["order:"]
        for i, (u, s) in enumerate(zip(self.order, self.sets), 1):
            lines.append(f"{i} {format_monomial(u)} set={sorted(s)}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "valid": True,
            "order": [format_monomial(u) for u in self.order],
            "sets": [sorted(s) for s in self.sets],
        }


@dataclass(frozen=True)
class FailureWitness:
    """The colon ideal at ``position`` is not linear because of ``offender``.

    Positions are 1-based; ``quotient`` is ``u_offender : u_position``, which
    no variable quotient ``u_l : u_position`` (``l < position``) divides.
    """

    position: int
    offender: int
    quotient: tuple
    order: tuple = field(repr=False, default=())

    valid = False

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        return {
            "valid": False,
            "position": self.position,
            "offender": self.offender,
            "quotient": format_monomial(self.quotient),
            "order": [format_monomial(u) for u in self.order],
        }


def _colon_step(prior: Sequence, u) -> tuple[frozenset, int | None, tuple | None]:
    """Return (set, first offending index into ``prior``, its quotient)."""
    quots = [colon_quotient(v, u) for v in prior]
    linear = frozenset(p for p in map(variable_index, quots) if p is not None)
    for j, q in enumerate(quots):
        if not any(q[p - 1] for p in linear):
            return linear, j, q
    return linear, None, None


def is_admissible(ideal: MonomialIdeal, order: Sequence) -> AdmissibleOrderCertificate | FailureWitness:
    """Check whether ``order`` (a permutation of ``G(I)``) is admissible.

    On failure the witness is the first position ``i``, and the first
    ``j < i`` at that position, for which the defining condition breaks.
    """
    order = tuple(tuple(u) for u in order)
    if len(order) != len(ideal.gens) or set(order) != set(ideal.gens):
        raise InputError("order is not a permutation of the minimal generators")
    sets = []
    for i, u in enumerate(order):
        s, bad, q = _colon_step(order[:i], u)
        if bad is not None:
            return FailureWitness(i + 1, bad + 1, q, order)
        sets.append(s)
    return AdmissibleOrderCertificate(order, tuple(sets))


def _search_tables(gens):
    """Per ordered pair (u, v): bitmask of variables in ``v : u``, and the
    0-based variable index when ``v : u`` is a single variable."""
    m = len(gens)
    supp = [[0] * m for _ in range(m)]
    lin = [[None] * m for _ in range(m)]
    for a, u in enumerate(gens):
        for b, v in enumerate(gens):
            if a == b:
                continue
            q = colon_quotient(v, u)
            mask = 0
            for p, e in enumerate(q):
                if e:
                    mask |= 1 << p
            supp[a][b] = mask
            p = variable_index(q)
            if p is not None:
                lin[a][b] = p - 1
    return supp, lin


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def find_admissible_order(
    ideal: MonomialIdeal,
    max_gens: int | None = DEFAULT_MAX_GENS,
    degree_pruning: bool = True,
) -> AdmissibleOrderCertificate | None:
    """Search for an admissible order; None if the ideal has no linear quotients.

    Whether a set S of already-placed generators can be followed by ``u``
    depends only on S, so the search memoizes dead subsets and explores
    at most ``2^m`` states. With ``degree_pruning`` only generators of the
    smallest remaining degree may be placed next; ideals with linear
    quotients always admit such a degree-increasing order, so this prunes
    without losing completeness. Candidates are tried in generator order.
    """
    gens = ideal.gens
    m = len(gens)
    if max_gens is not None and m > max_gens:
        raise ResourceCapError("generator count", max_gens, m)
    if m == 0:
        return AdmissibleOrderCertificate((), ())
    supp, lin = _search_tables(gens)
    degs = [sum(u) for u in gens]
    full = (1 << m) - 1
    dead = set()

    def extendable(placed, a):
        row = lin[a]
        avail = 0
        for b in _bits(placed):
            if row[b] is not None:
                avail |= 1 << row[b]
        srow = supp[a]
        return all(srow[b] & avail for b in _bits(placed))

    def candidates(placed):
        rest = [a for a in range(m) if not placed >> a & 1]
        if degree_pruning and rest:
            dmin = min(degs[a] for a in rest)
            rest = [a for a in rest if degs[a] == dmin]
        return iter(rest)

    # iterative DFS so deep searches (m in the dozens) stay off the C stack
    placed = 0
    path = []
    stack = [candidates(0)]
    while placed != full:
        for a in stack[-1]:
            child = placed | 1 << a
            if child not in dead and extendable(placed, a):
                path.append(a)
                placed = child
                stack.append(candidates(placed))
                break
        else:
            dead.add(placed)
            stack.pop()
            if not path:
                return None
            placed ^= 1 << path.pop()
    cert = is_admissible(ideal, [gens[a] for a in path])
    assert cert, "search produced a non-admissible order"
    return cert


def set_of(ideal: MonomialIdeal, cert: AdmissibleOrderCertificate, i: int) -> frozenset:
    """``{p : x_p u_i in (u_1, ..., u_{i-1})}`` for the certificate's order."""
    if not cert:
        raise InputError("certificate is not valid")
    return cert.set_of(i)


def hs_linquot(ideal: MonomialIdeal, cert: AdmissibleOrderCertificate, k: int) -> MonomialIdeal:
    """``HS_k(I) = (u_i x_A : A subset of set(u_i), |A| = k)``, minimalized."""
    if not cert:
        raise InputError("certificate is not valid")
    if k < 0:
        raise InputError("k must be non-negative")
    n = ideal.n
    out = []
    for u, s in zip(cert.order, cert.sets):
        for A in combinations(sorted(s), k):
            out.append(mul(u, squarefree(n, A)))
    return MonomialIdeal(n, tuple(out))


def colon_all_others_is_variable_generated(ideal: MonomialIdeal, i: int) -> tuple[bool, tuple | None]:
    """Is ``(G(I) minus u_i) : u_i`` generated by variables?

    ``i`` is a 1-based index into ``ideal.gens``. Returns ``(ok, witness)``
    where the witness is a quotient ``u_j : u_i`` not divisible by any
    variable in the colon ideal.
    """
    gens = ideal.gens
    if not 1 <= i <= len(gens):
        raise IndexError(f"generator index {i} out of range 1..{len(gens)}")
    u = gens[i - 1]
    others = gens[: i - 1] + gens[i:]
    _, bad, q = _colon_step(others, u)
    return bad is None, q


def has_linear_quotients(ideal: MonomialIdeal, max_gens: int | None = DEFAULT_MAX_GENS) -> bool:
    return find_admissible_order(ideal, max_gens=max_gens) is not None


def lex_admissible(ideal: MonomialIdeal, order: Sequence[int]) -> AdmissibleOrderCertificate | FailureWitness:
    """Run :func:`is_admissible` on ``G(I)`` sorted lex-descending for the
    variable order ``x_order[0] > x_order[1] > ...``."""
    idx = [p - 1 for p in order]
    gens = sorted(ideal.gens, key=lambda u: tuple(u[i] for i in idx), reverse=True)
    return is_admissible(ideal, gens)


def parse_certificate(text: str, n: int) -> tuple:
    """Parse :meth:`AdmissibleOrderCertificate.to_text` (or its JSON form)
    back into the claimed order and sets, for replay by a verifier."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        order = tuple(parse_monomial(s, n) for s in data["order"])
        sets = tuple(frozenset(s) for s in data.get("sets", ()))
        return order, sets
    order, sets = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line == "order:" or line.startswith("#"):
            continue
        try:
            _, mono, rest = line.split(None, 2)
            if not rest.startswith("set="):
                raise ValueError
            order.append(parse_monomial(mono, n))
            sets.append(frozenset(json.loads(rest[4:])))
        except ValueError:
            raise ParseError(f"bad certificate line {line!r}", lineno, 1) from None
    return tuple(order), tuple(sets)
