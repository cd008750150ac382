"""Simple graphs on vertices 1..n: chordality, elimination orders, edge ideals.

Orderings are tuples of vertices ``(v_1, ..., v_n)``; as a variable order
this reads ``x_{v_1} > x_{v_2} > ... > x_{v_n}``. A perfect elimination
order (PEO) is one in which the neighbours of each ``v_i`` among
``v_{i+1}, ..., v_n`` are pairwise adjacent.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, ParseError, ResourceCapError
from .monomial import MonomialIdeal, squarefree

DEFAULT_MAX_VERTICES = 10


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise InputError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InputError(f"edge {e} outside vertex range 1..{self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def adj(self) -> tuple:
        """``adj[v]`` is the neighbourhood of ``v`` as a bitmask over vertex bits."""
        a = [0] * (self.n + 1)
        for i, j in self.edges:
            a[i] |= 1 << j
            a[j] |= 1 << i
        return tuple(a)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> frozenset:
        return frozenset(u for u in self.vertices() if self.adj[v] >> u & 1)

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        """Induced subgraph, relabelled 1..k in increasing vertex order."""
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs, 1)}
        return SimpleGraph(len(vs), frozenset((pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos))

    def relabel(self, mapping: Sequence[int]) -> "SimpleGraph":
        """Send vertex ``v`` to ``mapping[v - 1]``."""
        return SimpleGraph(self.n, frozenset((mapping[i - 1], mapping[j - 1]) for i, j in self.edges))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))


def complement(g: SimpleGraph) -> SimpleGraph:
    return SimpleGraph(g.n, frozenset(e for e in combinations(g.vertices(), 2) if e not in g.edges))


def _check_ordering(g: SimpleGraph, ordering) -> tuple:
    ordering = tuple(ordering)
    if sorted(ordering) != list(g.vertices()):
        raise InputError(f"{ordering} is not an ordering of the vertices 1..{g.n}")
    return ordering


# --- perfect elimination orders --------------------------------------------

@dataclass(frozen=True)
class Peo:
    """A verified perfect elimination order; ``later[i]`` is the (clique)
    set of neighbours of ``ordering[i]`` placed after it."""

    ordering: tuple
    later: tuple = field(repr=False, default=())

    def __bool__(self):
        return True


@dataclass(frozen=True)
class PeoFailure:
    """``vertex``'s later neighbours include the non-adjacent ``pair``."""

    ordering: tuple
    vertex: int
    pair: tuple

    def __bool__(self):
        return False


@dataclass(frozen=True)
class InducedCycle:
    """Chordality failure: an induced cycle of length >= 4, in cyclic order."""

    cycle: tuple

    def __bool__(self):
        return False


def is_peo(g: SimpleGraph, ordering: Sequence[int]) -> Peo | PeoFailure:
    ordering = _check_ordering(g, ordering)
    remaining = 0
    for v in ordering:
        remaining |= 1 << v
    later = []
    for v in ordering:
        remaining &= ~(1 << v)
        nb = [u for u in ordering if remaining >> u & 1 and g.adj[v] >> u & 1]
        for a, b in combinations(nb, 2):
            if not g.has_edge(a, b):
                return PeoFailure(ordering, v, (a, b))
        later.append(frozenset(nb))
    return Peo(ordering, tuple(later))


def mcs_order(g: SimpleGraph) -> tuple:
    """Maximum cardinality search; returns the reversed visiting order, which
    is a PEO exactly when ``g`` is chordal. Ties go to the smallest vertex."""
    weight = [0] * (g.n + 1)
    visited = []
    left = set(g.vertices())
    while left:
        v = max(sorted(left), key=lambda u: weight[u])
        left.remove(v)
        visited.append(v)
        for u in left:
            if g.adj[v] >> u & 1:
                weight[u] += 1
    return tuple(reversed(visited))


def _cycle_order(g: SimpleGraph, vs: list) -> tuple:
    start = vs[0]
    cyc = [start]
    prev = None
    cur = start
    sset = set(vs)
    while True:
        nxt = min(u for u in g.neighbors(cur) if u in sset and u != prev)
        if nxt == start:
            break
        cyc.append(nxt)
        prev, cur = cur, nxt
        if len(cyc) > len(vs):
            break
    # orient so the second vertex is the smaller neighbour of start
    if len(cyc) > 2 and cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[1:][::-1]
    return tuple(cyc)


def find_induced_cycle(g: SimpleGraph, min_length: int = 4) -> tuple | None:
    """Brute force: the first vertex subset (by size, then lexicographically)
    inducing a cycle of length >= ``min_length``, or None."""
    for size in range(min_length, g.n + 1):
        for vs in combinations(g.vertices(), size):
            mask = 0
            for v in vs:
                mask |= 1 << v
            if any(bin(g.adj[v] & mask).count("1") != 2 for v in vs):
                continue
            # 2-regular; it is a single cycle iff connected
            seen = 1 << vs[0]
            stack = [vs[0]]
            while stack:
                v = stack.pop()
                new = g.adj[v] & mask & ~seen
                seen |= new
                stack.extend(u for u in vs if new >> u & 1)
            if seen == mask:
                return _cycle_order(g, list(vs))
    return None


def is_chordal(g: SimpleGraph) -> Peo | InducedCycle:
    """MCS ordering checked by :func:`is_peo`; on failure an induced cycle
    of length >= 4 is found by brute force."""
    cert = is_peo(g, mcs_order(g))
    if cert:
        return cert
    cyc = find_induced_cycle(g)
    assert cyc is not None, "MCS rejected a graph with no long induced cycle"
    return InducedCycle(cyc)


def is_cochordal(g: SimpleGraph) -> Peo | InducedCycle:
    """Chordality certificate for the complement of ``g``."""
    return is_chordal(complement(g))


def _check_cap(g, max_vertices):
    if max_vertices is not None and g.n > max_vertices:
        raise ResourceCapError("vertex count", max_vertices, g.n)


def find_reversible_peo(g: SimpleGraph, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> tuple | None:
    """An ordering that is a PEO of ``g`` and whose reversal is one too.

    Built left to right: placing ``v`` after the set P needs the neighbours
    of ``v`` outside P (its later neighbours) and those inside P (its later
    neighbours in the reversed order) to be cliques. Both depend only on P,
    so dead prefixes are memoized by their vertex set.
    """
    _check_cap(g, max_vertices)
    full = 0
    for v in g.vertices():
        full |= 1 << v
    clique = {}

    def is_clique_mask(mask):
        if mask not in clique:
            vs = [u for u in g.vertices() if mask >> u & 1]
            clique[mask] = all(g.adj[a] >> b & 1 for a, b in combinations(vs, 2))
        return clique[mask]

    dead = set()
    path = []

    def go(placed):
        if placed == full:
            return True
        if placed in dead:
            return False
        for v in g.vertices():
            if placed >> v & 1:
                continue
            after = full & ~placed & ~(1 << v)
            if is_clique_mask(g.adj[v] & after) and is_clique_mask(g.adj[v] & placed):
                path.append(v)
                if go(placed | 1 << v):
                    return True
                path.pop()
        dead.add(placed)
        return False

    return tuple(path) if go(0) else None


def is_reversible_peo(g: SimpleGraph, ordering: Sequence[int]) -> bool:
    return bool(is_peo(g, ordering)) and bool(is_peo(g, tuple(reversed(tuple(ordering)))))


def satisfies_window_property(g: SimpleGraph, ordering: Sequence[int]) -> bool:
    """For every edge between positions i < j, positions i..j form a clique."""
    ordering = _check_ordering(g, ordering)
    for i in range(len(ordering)):
        for j in range(i + 1, len(ordering)):
            if g.has_edge(ordering[i], ordering[j]) and not g.is_clique(ordering[i : j + 1]):
                return False
    return True


def is_proper_interval(g: SimpleGraph, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> tuple | None:
    """A vertex ordering with the clique-window property, or None.

    Backtracking: when ``v`` is appended, the window from its earliest
    placed neighbour through ``v`` must be a clique. Only the suffix of the
    prefix starting at the first vertex that still has unplaced neighbours
    can affect later windows, so (placed set, that suffix) is memoized.
    """
    _check_cap(g, max_vertices)
    full = 0
    for v in g.vertices():
        full |= 1 << v
    dead = set()
    path = []

    def go(placed):
        if placed == full:
            return True
        unplaced = full & ~placed
        start = next((i for i, u in enumerate(path) if g.adj[u] & unplaced), len(path))
        key = (placed, tuple(path[start:]))
        if key in dead:
            return False
        for v in g.vertices():
            if placed >> v & 1:
                continue
            first = next((i for i, u in enumerate(path) if g.has_edge(u, v)), None)
            if first is not None:
                window = path[first:] + [v]
                if not all(g.has_edge(a, b) for a, b in combinations(window, 2)):
                    continue
            path.append(v)
            if go(placed | 1 << v):
                return True
            path.pop()
        dead.add(key)
        return False

    return tuple(path) if go(0) else None


# --- edge ideals and the set formula ----------------------------------------

def edge_ideal(g: SimpleGraph) -> MonomialIdeal:
    return MonomialIdeal(g.n, tuple(squarefree(g.n, e) for e in g.edges))


def graph_of_ideal(ideal: MonomialIdeal) -> SimpleGraph:
    """Inverse of :func:`edge_ideal` for squarefree quadratic ideals."""
    edges = []
    for u in ideal.gens:
        s = [p for p, e in enumerate(u, 1) if e]
        if len(s) != 2 or sum(u) != 2:
            raise InputError("not a squarefree quadratic monomial ideal")
        edges.append(tuple(s))
    return SimpleGraph(ideal.n, frozenset(edges))


def _relabelled(g: SimpleGraph, peo_of_complement: Sequence[int]):
    peo = _check_ordering(g, peo_of_complement)
    if not is_peo(complement(g), peo):
        raise InputError(f"{peo} is not a perfect elimination order of the complement")
    pos = {v: i for i, v in enumerate(peo, 1)}
    return peo, pos, g.relabel([pos[v] for v in g.vertices()])


def set_edge(g: SimpleGraph, peo_of_complement: Sequence[int], edge: tuple) -> frozenset:
    """``set(x_i x_j)`` for the lex order induced by a PEO of the complement.

    After relabelling so the PEO reads ``1 > 2 > ... > n``, an edge with
    ends ``i < j`` has ``set = {1..i-1} | ({i+1..j-1} & N(i))``. The result
    is reported in the original vertex labels.
    """
    a, b = edge
    if not g.has_edge(a, b):
        raise InputError(f"{edge} is not an edge")
    peo, pos, h = _relabelled(g, peo_of_complement)
    i, j = sorted((pos[a], pos[b]))
    s = set(range(1, i)) | {k for k in range(i + 1, j) if h.has_edge(i, k)}
    return frozenset(peo[k - 1] for k in s)


def hs_edge_ideal(g: SimpleGraph, peo_of_complement: Sequence[int], k: int) -> MonomialIdeal:
    """``HS_k(I(G))`` from the closed description for cochordal graphs:
    generated by ``x_A x_B`` with ``A, B`` non-empty, ``max A < min B``,
    ``|A| + |B| = k + 2`` and ``max A`` adjacent to every vertex of ``B``
    (all in the relabelled coordinates where the PEO is ``1 > ... > n``).
    """
    if k < 0:
        raise InputError("k must be non-negative")
    peo, pos, h = _relabelled(g, peo_of_complement)
    n = g.n
    out = []
    for i in range(1, n + 1):
        right = [b for b in range(i + 1, n + 1) if h.has_edge(i, b)]
        for nb in range(1, min(len(right), k + 1) + 1):
            na = k + 2 - nb - 1  # elements of A besides i
            if na < 0 or na > i - 1:
                continue
            for B in combinations(right, nb):
                for A in combinations(range(1, i), na):
                    out.append(squarefree(n, [peo[v - 1] for v in A + (i,) + B]))
    return MonomialIdeal(n, tuple(out))


# --- constructions -----------------------------------------------------------

def add_whisker(g: SimpleGraph, i: int) -> SimpleGraph:
    """Add a new vertex ``n + 1`` joined only to ``i``."""
    if not 1 <= i <= g.n:
        raise InputError(f"vertex {i} not in graph")
    return SimpleGraph(g.n + 1, g.edges | {(i, g.n + 1)})


def disjoint_union(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    """Vertex-disjoint union; vertices of ``g2`` are shifted by ``g1.n``."""
    shifted = {(i + g1.n, j + g1.n) for i, j in g2.edges}
    return SimpleGraph(g1.n + g2.n, g1.edges | shifted)


# the construction is called the "join" of two disjoint graphs in the source literature
paper_join = disjoint_union


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset())


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(combinations(range(1, n + 1), 2)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))


def complete_bipartite(n: int, m: int) -> SimpleGraph:
    return SimpleGraph(n + m, frozenset((i, j) for i in range(1, n + 1) for j in range(n + 1, n + m + 1)))


def complete_multipartite(parts: Sequence[int]) -> SimpleGraph:
    label = []
    for c, size in enumerate(parts):
        label += [c] * size
    n = len(label)
    return SimpleGraph(n, frozenset((i, j) for i, j in combinations(range(1, n + 1), 2) if label[i - 1] != label[j - 1]))


def random_tree(n: int, seed) -> SimpleGraph:
    """Random labelled tree grown by whiskers, then randomly relabelled."""
    rng = random.Random(seed)
    g = empty_graph(1)
    for _ in range(n - 1):
        g = add_whisker(g, rng.randint(1, g.n))
    if n == 0:
        return empty_graph(0)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return g.relabel(perm)


def random_forest(n: int, seed) -> SimpleGraph:
    """Disjoint union of random trees with random component sizes, relabelled."""
    rng = random.Random(seed)
    sizes = []
    left = n
    while left:
        s = rng.randint(1, left)
        sizes.append(s)
        left -= s
    g = empty_graph(0)
    for s in sizes:
        g = disjoint_union(g, random_tree(s, rng.random()))
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return g.relabel(perm)


def random_graph(n: int, p: float, seed) -> SimpleGraph:
    rng = random.Random(seed)
    return SimpleGraph(n, frozenset(e for e in combinations(range(1, n + 1), 2) if rng.random() < p))


def random_proper_interval(n: int, seed) -> SimpleGraph:
    """Random graph with the clique-window property along a hidden ordering:
    vertex ``i`` is adjacent to ``i+1..r(i)`` for non-decreasing ``r``."""
    rng = random.Random(seed)
    reach = []
    r = 1
    for i in range(1, n + 1):
        r = max(r, i)
        r = rng.randint(r, min(n, r + 2))
        reach.append(r)
    edges = {(i, j) for i in range(1, n + 1) for j in range(i + 1, reach[i - 1] + 1)}
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return SimpleGraph(n, frozenset(edges)).relabel(perm)


def all_graphs(n: int):
    """Every graph on vertices 1..n (``2^(n choose 2)`` of them)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


# --- file format ---------------------------------------------------------------

def parse_graph(text: str) -> SimpleGraph:
    """``n <int>`` on the first content line, then one ``i j`` per edge; ``#`` comments."""
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise ParseError("expected header 'n <int>'", lineno, 1)
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected 'i j', got {body!r}", lineno, 1)
        i, j = map(int, parts)
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise ParseError(f"bad edge {i} {j} for n={n}", lineno, 1)
        edges.append((i, j))
    if n is None:
        raise ParseError("missing header 'n <int>'", 1, 1)
    return SimpleGraph(n, frozenset(edges))


def dump_graph(g: SimpleGraph) -> str:
    return f"n {g.n}\n" + "".join(f"{i} {j}\n" for i, j in sorted(g.edges))
