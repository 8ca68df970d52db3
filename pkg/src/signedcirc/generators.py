"""Graph constructions: contraction and gadget operations, S(G), T2, and the
tight families.

Conventions for choices that are free up to switching:

* ``s_of``: the 4-cycle ``u-a-v-b-u`` replacing ``uv`` has ``bu`` negative.
* ``t2_of``: the half-edge at ``u`` carries ``-sign(uv)``, the half at ``v`` is positive.
* ``omega``: the new vertex ``v_{2i+3}`` sees ``v_{2i+1}`` negatively and
  ``v_{2i+2}`` positively.
* ``gamma_star``: the subdivided edge is ``v1 - s`` positive, ``s - v2`` negative.
"""
from __future__ import annotations

from typing import Sequence

from .errors import NonSimpleInput, NotPositiveEdge
from .graph import NEG, POS, Sign, SignedGraph, simplify


def complete(n: int, sign=POS) -> SignedGraph:
    sign = Sign.parse(sign) if isinstance(sign, str) else Sign(sign)
    return SignedGraph(n, tuple((u, v, sign) for u in range(n) for v in range(u + 1, n)))


def cycle(n: int, pattern: str | Sequence) -> SignedGraph:
    """Cycle ``0-1-...-(n-1)-0``; ``pattern[i]`` is the sign of edge ``i,i+1``.

    ``n == 2`` gives two parallel edges and ``n == 1`` a loop.
    """
    signs = [Sign.parse(c) if isinstance(c, str) else Sign(c) for c in pattern]
    if len(signs) != n:
        raise ValueError(f"pattern length {len(signs)} does not match n={n}")
    return SignedGraph(n, tuple((i, (i + 1) % n, signs[i]) for i in range(n)))


def path(n: int, sign=POS) -> SignedGraph:
    sign = Sign.parse(sign) if isinstance(sign, str) else Sign(sign)
    return SignedGraph(n, tuple((i, i + 1, sign) for i in range(n - 1)))


def fu_vertex_map(g: SignedGraph, u: int) -> tuple[list[int], int]:
    """Vertex map of ``f_u``: old id -> new id, and the id of the merged vertex.

    Vertices outside the closed neighbourhood keep their relative order; the
    merged vertex comes last.
    """
    closed = g.neighbors(u) | {u}
    mapping = [0] * g.n
    nxt = 0
    for v in range(g.n):
        if v not in closed:
            mapping[v] = nxt
            nxt += 1
    z = nxt
    for v in closed:
        mapping[v] = z
    return mapping, z


def f_u(g: SignedGraph, u: int) -> tuple[SignedGraph, int]:
    """Contract every edge at ``u``; same-sign parallels are then collapsed.

    Edges between two neighbours of ``u`` become loops at the merged vertex
    ``z``. A positive loop means the result has infinite circular chromatic
    number; check with ``has_loop(POS)``.
    """
    if not 0 <= u < g.n:
        raise IndexError(f"vertex {u} out of range")
    mapping, z = fu_vertex_map(g, u)
    edges = []
    for a, b, s in g.edges:
        if (a == u) != (b == u):
            continue
        edges.append((mapping[a], mapping[b], s))
    out, _ = simplify(SignedGraph(z + 1, tuple(edges)))
    return out, z


def f_uv(g: SignedGraph, u: int, v: int) -> SignedGraph:
    """Gadget expansion at the positive edge ``uv``.

    New vertices: ``u' = n``, ``v' = n+1``, ``x = n+2``, ``y = n+3``. ``u'``
    copies the neighbourhood of ``u``; ``v'`` then copies the neighbourhood of
    ``v`` including ``u'``.
    """
    if not g.is_simple():
        raise NonSimpleInput("f_uv needs a simple signed graph")
    if POS not in g.signs_between(u, v) or u == v:
        raise NotPositiveEdge(f"{u}{v} is not a positive edge")
    n = g.n
    u2, v2, x, y = n, n + 1, n + 2, n + 3
    edges = list(g.edges)
    for w, s in g.adjacency()[u]:
        edges.append((u2, w, s))
    for a, b, s in list(edges):
        if a == v and b != v:
            edges.append((v2, b, s))
        elif b == v and a != v:
            edges.append((v2, a, s))
    edges += [(x, u, POS), (y, v, POS), (x, u2, NEG), (y, v2, NEG), (x, y, NEG)]
    return SignedGraph(n + 4, tuple(edges))


def s_of(g: SignedGraph) -> SignedGraph:
    """Replace every edge by a negative 4-cycle through two new vertices.

    Edge signs of the input are ignored.
    """
    if not g.is_simple():
        raise NonSimpleInput("s_of needs a simple graph")
    edges = []
    n = g.n
    for i, (u, v, _) in enumerate(g.edges):
        a, b = n + 2 * i, n + 2 * i + 1
        edges += [(u, a, POS), (a, v, POS), (v, b, POS), (b, u, NEG)]
    return SignedGraph(n + 2 * g.m, tuple(edges))


def t2_of(g: SignedGraph) -> SignedGraph:
    """Subdivide each edge once so the resulting 2-path has the negated sign."""
    if not g.is_simple():
        raise NonSimpleInput("t2_of needs a simple signed graph")
    edges = []
    n = g.n
    for i, (u, v, s) in enumerate(g.edges):
        mid = n + i
        edges += [(u, mid, s.flip()), (mid, v, POS)]
    return SignedGraph(n + g.m, tuple(edges))


def omega(i: int) -> SignedGraph:
    if i < 1:
        raise ValueError("omega needs i >= 1")
    edges = [(0, 1, POS), (0, 2, POS), (1, 2, POS)]
    last = 2
    for _ in range(i - 1):
        copy, apex = last + 1, last + 2
        for a, b, s in list(edges):
            if a == last:
                edges.append((copy, b, s))
            elif b == last:
                edges.append((copy, a, s))
        edges += [(apex, last, NEG), (apex, copy, POS)]
        last = apex
    return SignedGraph(2 * i + 1, tuple(edges))


def gamma_star(i: int) -> SignedGraph:
    if i < 2:
        raise ValueError("gamma_star needs i >= 2")
    base = omega(i - 1)
    s = base.n
    edges = [e for e in base.edges if (e[0], e[1]) != (0, 1)]
    edges += [(0, s, POS), (s, 1, NEG)]
    return SignedGraph(base.n + 1, tuple(edges))
