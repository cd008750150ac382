"""Recompute the worked examples and diff them against the stored golden values."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from itertools import permutations

from .errors import InputError
from .graphs import (
    SimpleGraph,
    complement,
    complete_bipartite,
    edge_ideal,
    is_chordal,
    is_peo,
    is_reversible_peo,
)
from .linquot import find_admissible_order
from .monomial import MonomialIdeal, parse_ideal, parse_monomial
from .polymatroid import is_lq_all_lex_orders, is_polymatroidal
from .resolution import all_hs, has_linear_resolution, hs_from_table, multigraded_betti

EXAMPLES = ("ex1.4", "ex2.3", "ex2.10a", "ex2.10b")


def load_golden() -> dict:
    text = resources.files("hsideals").joinpath("data/golden.json").read_text()
    return json.loads(text)


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class Reproduction:
    example: str
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name, expected, actual):
        self.checks.append(Check(name, expected, actual))

    def render(self) -> str:
        lines = [f"{self.example}: {'pass' if self.ok else 'FAIL'}"]
        for c in self.checks:
            if c.ok:
                lines.append(f"  ok   {c.name}")
            else:
                lines.append(f"  DIFF {c.name}\n    expected: {c.expected}\n    actual:   {c.actual}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "example": self.example,
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok, "expected": _js(c.expected), "actual": _js(c.actual)} for c in self.checks],
        }


def _js(x):
    if isinstance(x, dict):
        return {str(k): _js(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_js(v) for v in x]
    return x


def _graded_keys(d: dict) -> dict:
    return {tuple(int(t) for t in k.split(",")): v for k, v in d.items()}


def _ex14(g) -> Reproduction:
    r = Reproduction("ex1.4")
    n = g["n"]
    ideal = parse_ideal(g["ideal"], n)
    hs1 = hs_from_table(multigraded_betti(ideal), 1)
    expected = MonomialIdeal(n, tuple(parse_monomial(s, n) for s in g["hs1"]))
    r.add("HS_1 generators", sorted(expected.gens), sorted(hs1.gens))
    graded = multigraded_betti(hs1).graded()
    r.add("HS_1 graded Betti numbers", _graded_keys(g["hs1_graded_betti"]), graded)
    # a componentwise-linear ideal with beta_{1,9} != 0 needs a generator of degree 8
    r.add("beta_{0,8}(HS_1) = 0 and beta_{1,9}(HS_1) != 0", True, graded.get((0, 8), 0) == 0 and graded.get((1, 9), 0) != 0)
    r.add("HS_1 has linear quotients", g["hs1_has_linear_quotients"], find_admissible_order(hs1, max_gens=None) is not None)
    return r


def _ex23(g) -> Reproduction:
    r = Reproduction("ex2.3")
    gr = SimpleGraph(g["graph"]["n"], [tuple(e) for e in g["graph"]["edges"]])
    ideal = edge_ideal(gr)
    n = gr.n
    r.add("G is cochordal", g["cochordal"], bool(is_chordal(complement(gr))))
    hs = all_hs(ideal)
    for k, want in g["linear_quotients"].items():
        r.add(f"HS_{k} has linear quotients", want, find_admissible_order(hs[int(k)], max_gens=None) is not None)
    hs2 = hs[2] if len(hs) > 2 else MonomialIdeal(n, ())
    want = MonomialIdeal(n, tuple(parse_monomial(s, n) for s in g["hs2"]))
    r.add("HS_2 generators", sorted(want.gens), sorted(hs2.gens))
    t = multigraded_betti(hs2)
    r.add("HS_2 graded Betti numbers", _graded_keys(g["hs2_graded_betti"]), t.graded())
    r.add("HS_2 has a linear resolution", g["hs2_linear_resolution"], has_linear_resolution(hs2, t))
    return r


def _every_ordering_peo(h: SimpleGraph) -> bool:
    return all(is_peo(h, p) for p in permutations(h.vertices()))


def _components(h: SimpleGraph) -> list:
    seen, out = set(), []
    for v in h.vertices():
        if v in seen:
            continue
        comp, stack = set(), [v]
        while stack:
            w = stack.pop()
            if w in comp:
                continue
            comp.add(w)
            stack.extend(h.neighbors(w))
        seen |= comp
        out.append(sorted(comp))
    return out


def _ex210a(g) -> Reproduction:
    r = Reproduction("ex2.10a")
    gr = complete_bipartite(g["n"], g["m"])
    h = complement(gr)
    comps = _components(h)
    r.add("complement is a disjoint union of cliques", g["complement_cliques"], [c for c in comps if h.is_clique(c)])
    r.add("every ordering is a PEO of the complement", g["every_ordering_peo"], _every_ordering_peo(h))
    hs = all_hs(edge_ideal(gr))
    r.add("number of generators of HS_k", g["hs_counts"], [len(x) for x in hs])
    r.add("every HS_k is polymatroidal", g["hs_polymatroidal"], all(is_polymatroidal(x)[0] for x in hs))
    small = g["all_lex_orders_check"]
    hs_small = all_hs(edge_ideal(complete_bipartite(small["n"], small["m"])))
    r.add(
        f"K_{{{small['n']},{small['m']}}}: every HS_k has linear quotients for every lex order",
        True,
        all(is_lq_all_lex_orders(x)[0] for x in hs_small),
    )
    return r


def cone_graph(n: int, m: int) -> SimpleGraph:
    """Vertices ``1..n+m``; ``{i, j}`` is an edge whenever ``i < j`` and ``j > n``."""
    return SimpleGraph(n + m, [(i, j) for j in range(n + 1, n + m + 1) for i in range(1, j)])


def _ex210b(g) -> Reproduction:
    r = Reproduction("ex2.10b")
    gr = cone_graph(g["n"], g["m"])
    h = complement(gr)
    ident = tuple(h.vertices())
    r.add("identity ordering is a reversible PEO of the complement", True, is_reversible_peo(h, ident))
    r.add("every ordering is a PEO of the complement", g["every_ordering_peo"], _every_ordering_peo(h))
    hs = all_hs(edge_ideal(gr))
    r.add("number of generators of HS_k", g["hs_counts"], [len(x) for x in hs])
    r.add("every HS_k has linear quotients for every lex order", g["all_lex_orders"], all(is_lq_all_lex_orders(x)[0] for x in hs))
    return r


_RUNNERS = {"ex1.4": _ex14, "ex2.3": _ex23, "ex2.10a": _ex210a, "ex2.10b": _ex210b}


def reproduce(example: str, golden: dict | None = None) -> Reproduction:
    if example not in _RUNNERS:
        raise InputError(f"unknown example {example!r}; choose from {', '.join(EXAMPLES)}")
    golden = golden or load_golden()
    return _RUNNERS[example](golden[example])
