"""Multigraded Betti numbers of monomial ideals via upper Koszul complexes.

For a multidegree ``a``, the upper Koszul simplicial complex of ``I`` at
``a`` has the faces ``W`` (subsets of ``supp(a)``) with ``x^a / x_W`` in
``I``, and

    beta_{i,a}(I) = dim H~_{i-1}(K^a(I); Q).

Only lcm's of subsets of ``G(I)`` can carry nonzero Betti numbers, so the
table is built over the lcm-closure of the generators. Ranks of boundary
matrices are computed exactly over the integers (row reduction with
content normalization, so the rank is the rank over Q).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from math import gcd

from .errors import InputError, ResourceCapError
from .monomial import MonomialIdeal, format_monomial, intersect

DEFAULT_MAX_LATTICE = 2 ** 18


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces as bitmasks over 0-based vertex positions; ``0`` is the empty face.

    ``vertices`` lists the variable index carried by each bit position. The
    void complex has no faces at all, and differs from ``{empty face}``.
    """

    vertices: tuple
    faces: frozenset

    @classmethod
    def from_facets(cls, vertices, facets) -> "SimplicialComplex":
        faces = set()
        for f in facets:
            sub = f
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return cls(tuple(vertices), frozenset(faces))

    def is_void(self) -> bool:
        return not self.faces

    def face_sets(self) -> list:
        """Faces as sorted tuples of variable indices."""
        out = []
        for f in self.faces:
            out.append(tuple(self.vertices[b] for b in range(len(self.vertices)) if f >> b & 1))
        return sorted(out, key=lambda t: (len(t), t))

    def f_vector(self) -> dict:
        """``{dim: number of faces}``, dim -1 counting the empty face."""
        counts = defaultdict(int)
        for f in self.faces:
            counts[bin(f).count("1") - 1] += 1
        return dict(counts)


def _row_reduce_rank(rows: list) -> int:
    """Rank over Q of an integer matrix given as sparse ``{col: value}`` rows."""
    rank = 0
    pivots = {}  # col -> pivot row
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            prow = pivots.get(col)
            if prow is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if g > 1:
                    row = {c: v // g for c, v in row.items()}
                pivots[col] = row
                rank += 1
                break
            a, b = prow[col], row[col]
            # row <- a*row - b*prow clears col while staying in Z
            new = {c: a * v for c, v in row.items()}
            for c, v in prow.items():
                new[c] = new.get(c, 0) - b * v
            row = {c: v for c, v in new.items() if v}
            if row:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if g > 1:
                    row = {c: v // g for c, v in row.items()}
    return rank


def _boundary_rank(upper: list, lower_index: dict) -> int:
    rows = []
    for f in upper:
        row = {}
        sign = 1
        bits = f
        # faces' vertices in increasing bit order; alternate signs per removed vertex
        while bits:
            low = bits & -bits
            row[lower_index[f ^ low]] = sign
            sign = -sign
            bits ^= low
        rows.append(row)
    return _row_reduce_rank(rows)


def homology_ranks(c: SimplicialComplex) -> dict:
    """Reduced homology ranks ``{d: dim H~_d}`` over Q, for d from -1.

    The complex ``{empty face}`` has ``H~_{-1} = 1``; the void complex
    has no homology at all and yields ``{}``.
    """
    if c.is_void():
        return {}
    by_dim = defaultdict(list)
    for f in c.faces:
        by_dim[bin(f).count("1") - 1].append(f)
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    # rank of the boundary map from dimension d to d-1
    brank = {}
    for d in range(0, top + 1):
        brank[d] = _boundary_rank(by_dim[d], index[d - 1]) if by_dim[d] else 0
    ranks = {}
    for d in range(-1, top + 1):
        ranks[d] = len(by_dim[d]) - brank.get(d, 0) - brank.get(d + 1, 0)
    return ranks


def upper_koszul(ideal: MonomialIdeal, a) -> SimplicialComplex:
    """Upper Koszul simplicial complex of ``ideal`` at multidegree ``a``.

    ``x^a / x_W`` lies in ``I`` iff some generator ``g`` divides it, i.e.
    ``g | x^a`` and ``W`` avoids every ``p`` with ``g_p = a_p``. The complex
    is therefore generated by the facets ``{p : g_p < a_p}``, one for each
    generator dividing ``x^a``.
    """
    a = tuple(a)
    if len(a) != ideal.n or any(e < 0 for e in a):
        raise InputError(f"bad multidegree {a}")
    supp = [p for p in range(ideal.n) if a[p] > 0]
    bit = {p: b for b, p in enumerate(supp)}
    facets = set()
    for g in ideal.gens:
        if all(x <= y for x, y in zip(g, a)):
            mask = 0
            for p in supp:
                if g[p] < a[p]:
                    mask |= 1 << bit[p]
            facets.add(mask)
    return SimplicialComplex.from_facets([p + 1 for p in supp], _maximal(facets))


def _maximal(masks):
    ms = sorted(masks, key=lambda m: -bin(m).count("1"))
    out = []
    for m in ms:
        if not any(m & o == m for o in out):
            out.append(m)
    return out


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers ``entries[(i, a)] = beta_{i,a}``."""

    n: int
    entries: dict = field(default_factory=dict)

    def graded(self) -> dict:
        """``{(i, j): beta_{i,j}}`` with ``beta_{i,j} = sum over |a| = j``."""
        out = defaultdict(int)
        for (i, a), r in self.entries.items():
            out[(i, sum(a))] += r
        return dict(out)

    def beta(self, i: int, j: int) -> int:
        return self.graded().get((i, j), 0)

    def total(self, i: int) -> int:
        return sum(r for (h, _), r in self.entries.items() if h == i)

    def multidegrees(self, i: int) -> list:
        return sorted(a for (h, a) in self.entries if h == i)

    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def triples(self) -> list:
        return [
            {"i": i, "a": list(a), "rank": r}
            for (i, a), r in sorted(self.entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))
        ]

    def render(self, rows: range | None = None, cols: range | None = None) -> str:
        """Text table: columns are homological degrees ``i``, rows are
        ``j - i``; zeros print as ``.``."""
        g = self.graded()
        if not g and (rows is None or cols is None):
            return "(zero ideal)\n"
        if cols is None:
            cols = range(0, max(i for i, _ in g) + 1)
        if rows is None:
            shifts = [j - i for i, j in g]
            rows = range(min(shifts), max(shifts) + 1)
        cells = [[str(g.get((i, r + i), 0) or ".") for i in cols] for r in rows]
        label_w = max(len(str(r)) for r in rows) + 1
        widths = [
            max([len(str(i))] + [len(cells[k][c]) for k in range(len(cells))])
            for c, i in enumerate(cols)
        ]
        head = " " * label_w + " | " + " ".join(str(i).rjust(w) for i, w in zip(cols, widths))
        lines = [head.rstrip(), "-" * len(head.rstrip())]
        for r, row in zip(rows, cells):
            lines.append(f"{str(r).rjust(label_w)} | " + " ".join(c.rjust(w) for c, w in zip(row, widths)))
        return "\n".join(lines) + "\n"


def lcm_closure(ideal: MonomialIdeal, max_size: int | None = DEFAULT_MAX_LATTICE) -> set:
    """All lcm's of non-empty subsets of ``G(I)``."""
    gens = ideal.gens
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                lc = tuple(x if x > y else y for x, y in zip(e, g))
                if lc not in seen:
                    seen.add(lc)
                    nxt.append(lc)
                    if max_size is not None and len(seen) > max_size:
                        raise ResourceCapError("lcm lattice size", max_size)
        frontier = nxt
    return seen


def multigraded_betti(ideal: MonomialIdeal, max_lattice: int | None = DEFAULT_MAX_LATTICE) -> BettiTable:
    table = BettiTable(ideal.n)
    for a in sorted(lcm_closure(ideal, max_lattice)):
        k = upper_koszul(ideal, a)
        full = (1 << len(k.vertices)) - 1
        if k.vertices and full in k.faces:
            continue  # a full simplex is acyclic
        for d, r in homology_ranks(k).items():
            if r:
                table.entries[(d + 1, a)] = r
    return table


def hs_betti(ideal: MonomialIdeal, k: int, max_lattice: int | None = DEFAULT_MAX_LATTICE) -> MonomialIdeal:
    """``HS_k(I)``: the ideal generated by ``x^a`` over all ``a`` with ``beta_{k,a} != 0``."""
    if k < 0:
        raise InputError("k must be non-negative")
    return hs_from_table(multigraded_betti(ideal, max_lattice), k)


def hs_from_table(table: BettiTable, k: int) -> MonomialIdeal:
    return MonomialIdeal(table.n, tuple(table.multidegrees(k)))


def all_hs(ideal: MonomialIdeal, max_lattice: int | None = DEFAULT_MAX_LATTICE) -> list:
    """``[HS_0, ..., HS_pd]`` from a single Betti computation."""
    t = multigraded_betti(ideal, max_lattice)
    return [hs_from_table(t, k) for k in range(t.projective_dimension() + 1)]


def has_linear_resolution(ideal: MonomialIdeal, table: BettiTable | None = None) -> bool:
    """Equigenerated in degree d with ``beta_{i,j} = 0`` for ``j != i + d``.

    The zero ideal counts as having a linear resolution (vacuously).
    """
    if ideal.is_zero():
        return True
    if not ideal.is_equigenerated():
        return False
    d = sum(ideal.gens[0])
    if table is None:
        table = multigraded_betti(ideal)
    return all(j == i + d for (i, j) in table.graded())


def is_betti_splitting(ideal: MonomialIdeal, part1: MonomialIdeal, part2: MonomialIdeal) -> tuple[bool, tuple | None]:
    """Check ``beta_{i,j}(I) = beta_{i,j}(I1) + beta_{i,j}(I2) + beta_{i-1,j}(I1 cap I2)``.

    ``G(I)`` must be the disjoint union of ``G(I1)`` and ``G(I2)``. Returns
    ``(ok, first failing (i, j))``.
    """
    g, g1, g2 = set(ideal.gens), set(part1.gens), set(part2.gens)
    if g1 & g2 or g1 | g2 != g:
        raise InputError("G(I) is not the disjoint union of G(I1) and G(I2)")
    b = multigraded_betti(ideal).graded()
    b1 = multigraded_betti(part1).graded()
    b2 = multigraded_betti(part2).graded()
    b12 = multigraded_betti(intersect(part1, part2)).graded()
    keys = set(b) | set(b1) | set(b2) | {(i + 1, j) for i, j in b12}
    for i, j in sorted(keys):
        if b.get((i, j), 0) != b1.get((i, j), 0) + b2.get((i, j), 0) + b12.get((i - 1, j), 0):
            return False, (i, j)
    return True, None


def describe(table: BettiTable) -> str:
    lines = []
    for t in table.triples():
        lines.append(f"{t['i']} {format_monomial(tuple(t['a']))} {t['rank']}")
    return "\n".join(lines) + ("\n" if lines else "")
