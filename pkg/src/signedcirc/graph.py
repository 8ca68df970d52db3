"""Signed multigraphs: representation, switching, cycle signs, equivalence.

Vertices are the integers ``0..n-1``. Edges are ``(u, v, sign)`` triples with
``u <= v``; ``u == v`` is a loop. Parallel edges of either sign are allowed, so
the same type carries the loops and digons produced by vertex contraction.
"""
from __future__ import annotations

import io
from collections import Counter, deque
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Sequence

from .errors import NotAWalk, NotDegenerate, ParseError, StructureMismatch


class Sign(IntEnum):
    POS = 1
    NEG = -1

    def __mul__(self, other):
        if isinstance(other, Sign):
            return Sign(int(self) * int(other))
        return NotImplemented

    def flip(self) -> "Sign":
        return Sign(-int(self))

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POS else "-"

    @classmethod
    def parse(cls, text: str) -> "Sign":
        if text == "+":
            return cls.POS
        if text == "-":
            return cls.NEG
        raise ValueError(f"bad sign {text!r}")


POS = Sign.POS
NEG = Sign.NEG

Edge = tuple[int, int, Sign]


def _norm_edge(u: int, v: int, s) -> Edge:
    if not isinstance(s, Sign):
        s = Sign.parse(s) if isinstance(s, str) else Sign(s)
    return (u, v, s) if u <= v else (v, u, s)


@dataclass(frozen=True)
class SignedGraph:
    """Immutable signed multigraph.

    Edges are kept sorted, so two graphs compare equal exactly when their
    edge multisets agree.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normed = []
        for e in self.edges:
            u, v, s = _norm_edge(*e)
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise IndexError(f"vertex {x} out of range for n={self.n}")
            normed.append((u, v, s))
        normed.sort(key=lambda e: (e[0], e[1], -int(e[2])))
        object.__setattr__(self, "edges", tuple(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "SignedGraph":
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> set[int]:
        """Distinct neighbours of ``v``; loops are ignored."""
        out = set()
        for a, b, _ in self.edges:
            if a == v and b != v:
                out.add(b)
            elif b == v and a != v:
                out.add(a)
        return out

    def adjacency(self) -> list[list[tuple[int, Sign]]]:
        """Per-vertex incidence list ``(other endpoint, sign)``; loops listed once."""
        adj: list[list[tuple[int, Sign]]] = [[] for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u].append((v, s))
            if u != v:
                adj[v].append((u, s))
        return adj

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def signs_between(self, u: int, v: int) -> list[Sign]:
        a, b = (u, v) if u <= v else (v, u)
        return [s for x, y, s in self.edges if x == a and y == b]

    def has_loop(self, sign: Sign | None = None) -> bool:
        return any(u == v and (sign is None or s == sign) for u, v, s in self.edges)

    def is_simple(self) -> bool:
        seen = set()
        for u, v, _ in self.edges:
            if u == v or (u, v) in seen:
                return False
            seen.add((u, v))
        return True

    def is_forest(self) -> bool:
        """True for a simple graph without cycles (signs ignored)."""
        if not self.is_simple():
            return False
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def components(self) -> list[list[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp, queue = [], deque([start])
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in sorted(adj[x]):
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def induced(self, keep: Iterable[int]) -> tuple["SignedGraph", list[int]]:
        """Induced subgraph on ``keep``; returns it with the new-to-old id map."""
        old = sorted(set(keep))
        new_id = {v: i for i, v in enumerate(old)}
        edges = [(new_id[u], new_id[v], s) for u, v, s in self.edges
                 if u in new_id and v in new_id]
        return SignedGraph(len(old), tuple(edges)), old

    def delete_vertex(self, w: int) -> tuple["SignedGraph", list[int]]:
        return self.induced(v for v in range(self.n) if v != w)

    def add_edges(self, extra_vertices: int, edges: Iterable[tuple]) -> "SignedGraph":
        return SignedGraph(self.n + extra_vertices, self.edges + tuple(edges))

    def underlying(self) -> Counter:
        """Unsigned edge multiset."""
        return Counter((u, v) for u, v, _ in self.edges)


@dataclass(frozen=True)
class SimplifyFlags:
    has_positive_loop: bool
    has_negative_loop: bool
    has_digon: bool


# -- serialization -----------------------------------------------------------

def loads(text: str) -> SignedGraph:
    """Parse the ``.sg`` text format."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise ParseError("duplicate header", lineno)
            if len(fields) != 4 or fields[1] != "sg":
                raise ParseError("header must be 'p sg <n> <m>'", lineno)
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise ParseError("non-integer in header", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative count in header", lineno)
        elif fields[0] == "e":
            if header is None:
                raise ParseError("edge before header", lineno)
            if len(fields) != 4:
                raise ParseError("edge must be 'e <u> <v> <+|->'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("non-integer endpoint", lineno) from None
            if fields[3] not in ("+", "-"):
                raise ParseError(f"bad sign {fields[3]!r}", lineno)
            if u < 0 or v < 0:
                raise ParseError("negative vertex id", lineno)
            if u >= header[0] or v >= header[0]:
                raise IndexError(f"line {lineno}: vertex id out of range for n={header[0]}")
            edges.append((u, v, Sign.parse(fields[3])))
        else:
            raise ParseError(f"unknown line type {fields[0]!r}", lineno)
    if header is None:
        raise ParseError("missing header")
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}")
    return SignedGraph(header[0], tuple(edges))


def load(stream) -> SignedGraph:
    data = stream.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return loads(data)


def dumps(g: SignedGraph, comments: Sequence[str] = ()) -> str:
    out = io.StringIO()
    for c in comments:
        out.write(f"# {c}\n")
    out.write(f"p sg {g.n} {g.m}\n")
    for u, v, s in g.edges:
        out.write(f"e {u} {v} {s.symbol}\n")
    return out.getvalue()


def save(g: SignedGraph, stream, comments: Sequence[str] = ()) -> None:
    stream.write(dumps(g, comments))


# -- signature operations ----------------------------------------------------

def _check_set(g: SignedGraph, members: Iterable[int]) -> frozenset[int]:
    s = frozenset(members)
    for v in s:
        if not 0 <= v < g.n:
            raise IndexError(f"switch vertex {v} out of range for n={g.n}")
    return s


def switch(g: SignedGraph, members: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in ``members``."""
    s = _check_set(g, members)
    edges = tuple(
        (u, v, sg.flip() if (u in s) != (v in s) else sg) for u, v, sg in g.edges
    )
    return SignedGraph(g.n, edges)


def cycle_sign(g: SignedGraph, walk: Sequence[tuple]) -> Sign:
    """Sign of a closed walk given as consecutive ``(u, v, sign)`` steps.

    Each step names the traversed edge explicitly, so walks through digons
    are unambiguous.
    """
    if not walk:
        raise NotAWalk("empty walk")
    available = Counter(g.edges)
    steps = []
    for step in walk:
        u, v, s = step
        e = _norm_edge(u, v, s)
        if available[e] == 0:
            raise NotAWalk(f"no edge {u}{v}{e[2].symbol} in graph")
        steps.append((u, v, e[2]))
    for (_, v, _), (u2, _, _) in zip(steps, steps[1:] + steps[:1]):
        if v != u2:
            raise NotAWalk(f"walk breaks between {v} and {u2}")
    sign = POS
    for _, _, s in steps:
        sign = sign * s
    return sign


def is_equivalent(g1: SignedGraph, g2: SignedGraph) -> tuple[bool, frozenset[int] | None]:
    """Decide switching equivalence; on success also return a switching set.

    Each vertex pair constrains whether its endpoints are switched the same
    way or not; the constraints are propagated along a BFS spanning forest and
    every remaining pair is checked against the propagated values.
    """
    if g1.n != g2.n or g1.underlying() != g2.underlying():
        raise StructureMismatch("signed graphs have different underlying multigraphs")

    def by_pair(g):
        d = {}
        for u, v, s in g.edges:
            d.setdefault((u, v), Counter())[s] += 1
        return d

    p1, p2 = by_pair(g1), by_pair(g2)
    # allowed parity of (x_u xor x_v) per pair
    allowed: dict[tuple[int, int], set[int]] = {}
    for pair, c1 in p1.items():
        c2 = p2[pair]
        flipped = Counter({s.flip(): k for s, k in c1.items()})
        ok = set()
        if c1 == c2:
            ok.add(0)
        if pair[0] != pair[1] and flipped == c2:
            ok.add(1)
        if not ok:
            return False, None
        if ok != {0, 1}:
            allowed[pair] = ok

    adj: list[list[tuple[int, int]]] = [[] for _ in range(g1.n)]
    for (u, v), ok in allowed.items():
        (par,) = ok
        adj[u].append((v, par))
        adj[v].append((u, par))
    side = [-1] * g1.n
    for start in range(g1.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, par in adj[x]:
                want = side[x] ^ par
                if side[y] == -1:
                    side[y] = want
                    queue.append(y)
                elif side[y] != want:
                    return False, None
    witness = frozenset(v for v in range(g1.n) if side[v] == 1)
    return True, witness


def is_bipartite(g: SignedGraph) -> tuple[bool, tuple[list[int], list[int]] | None]:
    if g.has_loop():
        return False, None
    side = [-1] * g.n
    adj = [set() for _ in range(g.n)]
    for u, v, _ in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False, None
    parts = ([v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1])
    return True, parts


def degeneracy_order(g: SignedGraph, k: int) -> list[int]:
    """Order with at most ``k`` earlier neighbours per vertex.

    Built by repeatedly deleting a minimum-degree vertex (smallest id on
    ties) and reversing the deletion sequence. Raises NotDegenerate.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    adj = [g.neighbors(v) for v in range(g.n)]
    alive = set(range(g.n))
    deg = {v: len(adj[v]) for v in alive}
    removed = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        if deg[v] > k:
            raise NotDegenerate(k, v, deg[v])
        alive.remove(v)
        removed.append(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
    return removed[::-1]


def simplify(g: SignedGraph) -> tuple[SignedGraph, SimplifyFlags]:
    """Collapse same-sign parallel edges; opposite-sign pairs are kept."""
    edges = tuple(sorted(set(g.edges), key=lambda e: (e[0], e[1], -int(e[2]))))
    pairs = Counter((u, v) for u, v, _ in edges if u != v)
    flags = SimplifyFlags(
        has_positive_loop=any(u == v and s == POS for u, v, s in edges),
        has_negative_loop=any(u == v and s == NEG for u, v, s in edges),
        has_digon=any(c > 1 for c in pairs.values()),
    )
    return SignedGraph(g.n, edges), flags
