"""Monomials as exponent tuples, and monomial ideals by minimal generators.

A monomial in ``n`` variables is a plain tuple of ``n`` non-negative ints;
position ``p - 1`` holds the exponent of ``x_p`` (variables are 1-based in
every public interface). Everything here is immutable and side-effect free.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, InputError, ParseError

Monomial = tuple  # tuple[int, ...]


def monomial(exps: Iterable[int]) -> Monomial:
    u = tuple(int(e) for e in exps)
    if any(e < 0 for e in u):
        raise InputError(f"negative exponent in {u}")
    return u


def one(n: int) -> Monomial:
    return (0,) * n


def var(n: int, p: int) -> Monomial:
    """The variable ``x_p`` in ``n`` variables."""
    if not 1 <= p <= n:
        raise InputError(f"variable index {p} out of range 1..{n}")
    return tuple(1 if q == p else 0 for q in range(1, n + 1))


def squarefree(n: int, support: Iterable[int]) -> Monomial:
    """``x_A`` for a set ``A`` of 1-based variable indices."""
    s = set(support)
    return tuple(1 if p in s else 0 for p in range(1, n + 1))


def degree(u: Monomial) -> int:
    return sum(u)


def is_squarefree(u: Monomial) -> bool:
    return all(e <= 1 for e in u)


def support(u: Monomial) -> frozenset:
    return frozenset(p for p, e in enumerate(u, 1) if e)


def _check(u, v):
    if len(u) != len(v):
        raise DimensionError(f"ambient sizes differ: {len(u)} vs {len(v)}")


def divides(u: Monomial, v: Monomial) -> bool:
    _check(u, v)
    return all(a <= b for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    _check(u, v)
    return tuple(a + b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _check(u, v)
    return tuple(a if a > b else b for a, b in zip(u, v))


def div(u: Monomial, v: Monomial) -> Monomial:
    """``u / v``; ``v`` must divide ``u``."""
    _check(u, v)
    w = tuple(a - b for a, b in zip(u, v))
    if any(e < 0 for e in w):
        raise InputError(f"{format_monomial(v)} does not divide {format_monomial(u)}")
    return w


def colon_quotient(u: Monomial, v: Monomial) -> Monomial:
    """``u : v = lcm(u, v) / v``."""
    _check(u, v)
    return tuple(a - b if a > b else 0 for a, b in zip(u, v))


def variable_index(u: Monomial) -> int | None:
    """``p`` if ``u == x_p``, else None."""
    p = None
    for q, e in enumerate(u, 1):
        if e == 0:
            continue
        if e > 1 or p is not None:
            return None
        p = q
    return p


def lex_compare(u: Monomial, v: Monomial, order: Sequence[int] | None = None) -> int:
    """Pure lexicographic comparison; returns -1, 0 or 1.

    ``order`` is a permutation ``(p1, p2, ...)`` of 1..n meaning
    ``x_p1 > x_p2 > ...``; the default is ``x1 > x2 > ... > xn``.
    """
    _check(u, v)
    if order is None:
        order = range(1, len(u) + 1)
    for p in order:
        a, b = u[p - 1], v[p - 1]
        if a != b:
            return 1 if a > b else -1
    return 0


def lex_key(order: Sequence[int]):
    """Sort key: ``sorted(gens, key=lex_key(order), reverse=True)`` is lex-descending."""
    idx = [p - 1 for p in order]
    return lambda u: tuple(u[i] for i in idx)


def check_variable_order(order: Sequence[int], n: int) -> tuple:
    order = tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise InputError(f"{order} is not a permutation of 1..{n}")
    return order


def _canonical(gens):
    return sorted(gens, key=lambda u: (sum(u), tuple(-e for e in u)))


def _minimal(gens):
    kept = []
    for u in sorted(set(gens), key=sum):
        if not any(all(a <= b for a, b in zip(g, u)) for g in kept):
            kept.append(u)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generating set.

    Generators are minimalized on construction and kept in a canonical
    order (ascending degree, then lex-descending with x1 > ... > xn), so two
    ideals are equal iff their ``gens`` tuples are equal. An empty ``gens``
    is the zero ideal; the unit ideal has the single generator ``one(n)``.
    """

    n: int
    gens: tuple = ()

    def __post_init__(self):
        gens = []
        for u in self.gens:
            u = monomial(u)
            if len(u) != self.n:
                raise DimensionError(f"generator {u} has length {len(u)}, ambient n={self.n}")
            gens.append(u)
        object.__setattr__(self, "gens", tuple(_canonical(_minimal(gens))))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, u):
        return contains(self, u)

    def __str__(self):
        return format_ideal(self)

    def is_zero(self) -> bool:
        return not self.gens

    def degrees(self) -> set:
        return {sum(u) for u in self.gens}

    def is_equigenerated(self) -> bool:
        return len(self.degrees()) <= 1

    def is_squarefree(self) -> bool:
        return all(is_squarefree(u) for u in self.gens)

    def support(self) -> frozenset:
        return frozenset().union(*(support(u) for u in self.gens)) if self.gens else frozenset()

    def lcm(self) -> Monomial:
        out = one(self.n)
        for u in self.gens:
            out = lcm(out, u)
        return out


def minimalize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(gens))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (one(n),))


def variable_ideal(n: int, indices: Iterable[int]) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(var(n, p) for p in indices))


def _same_ring(a: MonomialIdeal, b: MonomialIdeal):
    if a.n != b.n:
        raise DimensionError(f"ambient sizes differ: {a.n} vs {b.n}")


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ring(a, b)
    return MonomialIdeal(a.n, tuple(lcm(u, v) for u in a.gens for v in b.gens))


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ring(a, b)
    return MonomialIdeal(a.n, tuple(mul(u, v) for u in a.gens for v in b.gens))


def add(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ring(a, b)
    return MonomialIdeal(a.n, a.gens + b.gens)


def scale(u: Monomial, ideal: MonomialIdeal) -> MonomialIdeal:
    """The ideal ``u * I``."""
    return MonomialIdeal(ideal.n, tuple(mul(u, g) for g in ideal.gens))


def contains(ideal: MonomialIdeal, u: Monomial) -> bool:
    if len(u) != ideal.n:
        raise DimensionError(f"monomial has length {len(u)}, ambient n={ideal.n}")
    return any(all(a <= b for a, b in zip(g, u)) for g in ideal.gens)


def embed(ideal: MonomialIdeal, n: int, mapping: Sequence[int] | None = None) -> MonomialIdeal:
    """Move ``ideal`` into ``n`` variables, sending ``x_p`` to ``x_mapping[p-1]``."""
    if mapping is None:
        mapping = range(1, ideal.n + 1)
    gens = []
    for u in ideal.gens:
        w = [0] * n
        for p, e in enumerate(u, 1):
            w[mapping[p - 1] - 1] += e
        gens.append(tuple(w))
    return MonomialIdeal(n, tuple(gens))


# --- text format -----------------------------------------------------------

def format_monomial(u: Monomial) -> str:
    parts = []
    for p, e in enumerate(u, 1):
        if e == 1:
            parts.append(f"x{p}")
        elif e > 1:
            parts.append(f"x{p}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(ideal: MonomialIdeal, sep: str = ", ") -> str:
    if ideal.is_zero():
        return "0"
    return sep.join(format_monomial(u) for u in ideal.gens)


def dump_ideal(ideal: MonomialIdeal) -> str:
    """File form accepted by :func:`parse_ideal`."""
    body = "\n".join(format_monomial(u) for u in ideal.gens)
    return f"n={ideal.n}\n{body}\n"


_FACTOR = re.compile(r"x(\d+)(?:\s*\^\s*(\d+))?\s*")
_HEADER = re.compile(r"\s*n\s*=\s*(\d+)\s*$")


def _parse_token(tok: str, line: int, col: int):
    """Exponent dict for one monomial token, or None for the token ``0``."""
    s = tok.strip()
    col += len(tok) - len(tok.lstrip())
    if s == "1":
        return {}
    if s == "0":
        return None
    exps = {}
    pos = 0
    while pos < len(s):
        if exps and s[pos] == "*":
            pos += 1
            while pos < len(s) and s[pos].isspace():
                pos += 1
        m = _FACTOR.match(s, pos)
        if not m:
            raise ParseError(f"cannot parse {s[pos:]!r}", line, col + pos)
        p = int(m.group(1))
        if p < 1:
            raise ParseError("variables are numbered from x1", line, col + pos)
        exps[p] = exps.get(p, 0) + int(m.group(2) or 1)
        pos = m.end()
    return exps


def parse_monomial(text: str, n: int | None = None) -> Monomial:
    exps = _parse_token(text, 1, 1)
    if exps is None:
        raise ParseError("0 is not a monomial", 1, 1)
    top = max(exps, default=0)
    if n is None:
        n = top
    if top > n:
        raise ParseError(f"x{top} exceeds ambient n={n}", 1, 1)
    return tuple(exps.get(p, 0) for p in range(1, n + 1))


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    """Parse the ideal file format.

    Monomials are separated by commas and/or newlines, written like
    ``x1^2*x3`` (``*`` optional) or ``1``. An optional ``n=<int>`` header
    fixes the number of variables; otherwise it is the largest index seen.
    ``#`` starts a comment. A lone ``0`` denotes the zero ideal.
    """
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        h = _HEADER.match(body)
        if h:
            if n is not None and int(h.group(1)) != n:
                raise ParseError(f"header n={h.group(1)} conflicts with n={n}", lineno, 1)
            n = int(h.group(1))
            continue
        col = 1
        for tok in body.split(","):
            if tok.strip():
                exps = _parse_token(tok, lineno, col)
                if exps is not None:
                    raw.append((exps, lineno, col))
            col += len(tok) + 1
    top = max((max(e, default=0) for e, _, _ in raw), default=0)
    if n is None:
        n = top
    for exps, lineno, col in raw:
        if exps and max(exps) > n:
            raise ParseError(f"x{max(exps)} exceeds ambient n={n}", lineno, col)
    return MonomialIdeal(n, tuple(tuple(e.get(p, 0) for p in range(1, n + 1)) for e, _, _ in raw))
