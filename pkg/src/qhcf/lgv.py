"""Planar networks whose path-weight matrices are products of R_m(q) and L_m(q).

Layout (matching the usual picture): strands ``1..m+1`` from top to bottom,
vertex columns ``0..N+1``.  Column ``c`` in ``1..N`` carries a rung: edges
pointing down (an R block) or up (an L block) between adjacent strands.  The
horizontal edge leaving column ``c >= 1`` on strand ``s`` has weight
``q^(m+1-s)``; the edges leaving the sources are unweighted.  Weights are kept
as integer exponents.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .matrixcalc import PolyMatrix
from .poly import IntLaurentPoly
from .shape import CFrac

__all__ = [
    "Network",
    "build_network",
    "path_weight_matrix",
    "iter_paths",
    "disjoint_pair_sum",
    "minor2x2_by_paths",
]

Vertex = tuple[int, int]  # (column, strand)


@dataclass(frozen=True)
class Network:
    m: int
    kinds: tuple[str, ...]  # one "R" or "L" per rung column

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if any(k not in ("R", "L") for k in self.kinds):
            raise ValueError("rung kinds must be 'R' or 'L'")

    @property
    def width(self) -> int:
        return len(self.kinds)

    @property
    def strands(self) -> range:
        return range(1, self.m + 2)

    def sources(self) -> list[Vertex]:
        return [(0, s) for s in self.strands]

    def sinks(self) -> list[Vertex]:
        return [(self.width + 1, s) for s in self.strands]

    def vertices(self) -> list[Vertex]:
        return [(c, s) for c in range(self.width + 2) for s in self.strands]

    @cached_property
    def edges(self) -> tuple[tuple[Vertex, Vertex, int], ...]:
        m, out = self.m, []
        for c in range(self.width + 1):
            for s in self.strands:
                out.append(((c, s), (c + 1, s), 0 if c == 0 else m + 1 - s))
        for c, kind in enumerate(self.kinds, start=1):
            for s in range(1, m + 1):
                if kind == "R":
                    out.append(((c, s), (c, s + 1), 0))
                else:
                    out.append(((c, s + 1), (c, s), 0))
        return tuple(out)

    @cached_property
    def out_edges(self) -> dict[Vertex, tuple[tuple[Vertex, int], ...]]:
        adj: dict[Vertex, list] = defaultdict(list)
        for u, v, w in self.edges:
            adj[u].append((v, w))
        return {u: tuple(vs) for u, vs in adj.items()}

    def concat(self, other: Network) -> Network:
        if other.m != self.m:
            raise ValueError("cannot glue networks with different m")
        return Network(self.m, self.kinds + other.kinds)

    def to_dot(self) -> str:
        lines = ["digraph network {", "  rankdir=LR;"]
        for c, s in self.vertices():
            lines.append(f'  "{c},{s}" [pos="{c},{-s}!", label=""];')
        for (c1, s1), (c2, s2), w in self.edges:
            label = f' [label="q^{w}"]' if w else ""
            lines.append(f'  "{c1},{s1}" -> "{c2},{s2}"{label};')
        lines.append("}")
        return "\n".join(lines)


def build_network(cf: CFrac | Sequence[int], m: int, first: str = "R") -> Network:
    """``a_1`` R-blocks, then ``a_2`` L-blocks, and so on (or starting with L)."""
    terms = cf.terms if isinstance(cf, CFrac) else tuple(cf)
    other = {"R": "L", "L": "R"}
    kinds: list[str] = []
    kind = first
    for a in terms:
        kinds += [kind] * a
        kind = other[kind]
    return Network(m, tuple(kinds))


def _topo_order(net: Network) -> list[Vertex]:
    # within a column rungs go one way only, so sort strands along the rung direction
    order = []
    for c in range(net.width + 2):
        strands = list(net.strands)
        if 1 <= c <= net.width and net.kinds[c - 1] == "L":
            strands.reverse()
        order += [(c, s) for s in strands]
    return order


def path_weight_matrix(net: Network) -> PolyMatrix:
    """Generating function of source-to-sink paths, by dynamic programming over the DAG."""
    order = _topo_order(net)
    sinks = net.sinks()
    rows = []
    for src in net.sources():
        acc: dict[Vertex, dict[int, int]] = defaultdict(lambda: defaultdict(int))
        acc[src][0] = 1
        for u in order:
            if u not in acc:
                continue
            for v, w in net.out_edges.get(u, ()):
                for e, c in acc[u].items():
                    acc[v][e + w] += c
        rows.append([IntLaurentPoly.from_dict(acc[t]) if t in acc else IntLaurentPoly() for t in sinks])
    return PolyMatrix(rows)


def iter_paths(net: Network, src: Vertex, dst: Vertex) -> Iterator[tuple[tuple[Vertex, ...], int]]:
    """All directed paths ``src -> dst`` as ``(vertices, weight exponent)``."""
    stack = [src]

    def rec(u, w):
        if u == dst:
            yield tuple(stack), w
            return
        if u[0] > dst[0]:
            return
        for v, ew in net.out_edges.get(u, ()):
            stack.append(v)
            yield from rec(v, w + ew)
            stack.pop()

    yield from rec(src, 0)


def _column_moves(net: Network, c: int) -> list[tuple[int, int, frozenset[int]]]:
    """Within column ``c``: every rung walk ``s -> t`` with the strands it touches."""
    moves = []
    for s in net.strands:
        seen = [s]
        moves.append((s, s, frozenset(seen)))
        u = (c, s)
        while True:
            nxt = [v for v, _ in net.out_edges.get(u, ()) if v[0] == c]
            if not nxt:
                break
            u = nxt[0]
            seen.append(u[1])
            moves.append((s, u[1], frozenset(seen)))
    return moves


def disjoint_pair_sum(net: Network, starts: tuple[int, int], ends: tuple[int, int]) -> IntLaurentPoly:
    """Sum of ``wt(p1) wt(p2)`` over vertex-disjoint pairs ``p1: starts[0] -> ends[0]``, ``p2: starts[1] -> ends[1]``.

    Both paths are advanced one column at a time; the state is the pair of
    strands they occupy, and a column step is allowed only when the two rung
    walks touch disjoint sets of vertices.
    """
    m = net.m
    s1, s2 = starts
    if s1 == s2:
        return IntLaurentPoly()
    state: dict[tuple[int, int], dict[int, int]] = {(s1, s2): {0: 1}}
    for c in range(1, net.width + 1):
        # horizontal edge from column c-1 into column c
        hw = (lambda s: 0) if c == 1 else (lambda s: m + 1 - s)
        moves = _column_moves(net, c)
        nxt: dict[tuple[int, int], dict[int, int]] = defaultdict(lambda: defaultdict(int))
        for (x1, x2), poly in state.items():
            shift = hw(x1) + hw(x2)
            for a, t1, used1 in moves:
                if a != x1:
                    continue
                for b, t2, used2 in moves:
                    if b != x2 or used1 & used2:
                        continue
                    tgt = nxt[t1, t2]
                    for e, k in poly.items():
                        tgt[e + shift] += k
        state = nxt
    last = (lambda s: 0) if net.width == 0 else (lambda s: m + 1 - s)
    out: dict[int, int] = defaultdict(int)
    poly = state.get(tuple(ends))
    if poly:
        shift = last(ends[0]) + last(ends[1])
        for e, k in poly.items():
            out[e + shift] += k
    return IntLaurentPoly.from_dict(out)


def minor2x2_by_paths(net: Network, rows: tuple[int, int], cols: tuple[int, int]) -> IntLaurentPoly:
    """Signed sum over vertex-disjoint path pairs for the 1-based source rows and sink columns.

    Identity pairing minus crossed pairing; in this planar layout the crossed
    term is always zero, which the tests check separately.
    """
    (i1, i2), (j1, j2) = rows, cols
    straight = disjoint_pair_sum(net, (i1, i2), (j1, j2))
    crossed = disjoint_pair_sum(net, (i1, i2), (j2, j1))
    return straight - crossed
