"""Constructive (4 - eps)-colorings.

Every procedure here returns a certificate ``(switch_set, coloring)``: the
coloring is valid for ``switch(g, switch_set)``. Switching at a vertex is
mirrored by moving its color to the antipode, which keeps every constraint at
that vertex intact while flipping the signs of its edges. Each result is
re-verified before it is returned and a failed check raises
:class:`VerificationFailure`.
"""
from __future__ import annotations

from fractions import Fraction

from .circle import Coloring, TransformParams, find_point, transform_4eps, verify_coloring
from .errors import (BadRadius, InvalidInputColoring, NonSimpleInput, NotDegenerate,
                     NotPositiveEdge, PositiveLoopInContraction, VerificationFailure)
from .generators import f_u, f_uv, fu_vertex_map
from .graph import NEG, POS, Sign, SignedGraph, degeneracy_order, switch


def _check_radius(r: Fraction) -> Fraction:
    if not 2 < r < 4:
        raise BadRadius(f"radius must lie in (2, 4), got {r}")
    return 4 - r


def _reverify(g: SignedGraph, switch_set, c: Coloring, what: str) -> None:
    bad = verify_coloring(switch(g, switch_set), c)
    if bad is not None:
        raise VerificationFailure(f"{what} produced an invalid coloring: {bad}")


def _insert(colors: dict[int, Fraction], r: Fraction, w: int,
            back: list[tuple[int, Sign]]) -> tuple[set[int], dict[int, Fraction], Fraction]:
    """Color ``w`` given at most two colored neighbours ``back``.

    Returns the neighbours switched, the new color map (all colored vertices)
    and the new radius.
    """
    flips = {x for x, s in back if s == NEG}
    half = r / 2
    colors = {v: (p + half) % r if v in flips else p for v, p in colors.items()}
    if not back:
        colors[w] = Fraction(0)
        return flips, colors, r
    if len(back) == 1:
        (x, _), = back
        colors[w] = (colors[x] + 1) % r
        return flips, colors, r

    (u, _), (v, _) = back
    shift = colors[u]
    colors = {x: (p - shift) % r for x, p in colors.items()}
    if 0 < colors[v] < half:
        colors = {x: (r - p) % r for x, p in colors.items()}
    cv = colors[v]
    if cv == 0 or cv >= 2:
        colors[w] = Fraction(1)
        return flips, colors, r
    shrunk = transform_4eps(Coloring(r, colors))
    colors = dict(shrunk.f)
    colors[w] = Fraction(1)
    return flips, colors, shrunk.r


def extend_degree2(g: SignedGraph, w: int, c: Coloring) -> tuple[frozenset[int], Coloring]:
    """Extend a coloring of ``g - w`` to ``g`` when ``w`` has degree at most 2.

    The output radius is either ``c.r`` or ``4 - eps/4`` where ``c.r = 4 - eps``.
    """
    if not g.is_simple():
        raise NonSimpleInput("extend_degree2 needs a simple signed graph")
    _check_radius(c.r)
    deg = g.degree(w)
    if deg > 2:
        raise NotDegenerate(2, w, deg)
    others = [v for v in range(g.n) if v != w]
    missing = [v for v in others if v not in c.f]
    if missing:
        raise InvalidInputColoring(f"vertices {missing} are uncolored")
    base = c.restrict(others)
    if verify_coloring(g, base, partial=True) is not None:
        raise InvalidInputColoring("input is not a valid coloring of g - w")
    back = sorted((x, s) for x, s in g.adjacency()[w])
    flips, colors, r = _insert(dict(base.f), c.r, w, back)
    out = Coloring(r, colors)
    switch_set = frozenset(flips)
    _reverify(g, switch_set, out, "extend_degree2")
    return switch_set, out


def color_2degenerate(g: SignedGraph) -> tuple[frozenset[int], Coloring]:
    """Color a simple 2-degenerate signed graph on a circle of length < 4.

    Starts from ``r = 3`` and inserts vertices in degeneracy order. A vertex
    is placed at the current radius whenever some point works; otherwise the
    degree-2 extension shrinks the gap to 4.
    """
    if not g.is_simple():
        raise NonSimpleInput("color_2degenerate needs a simple signed graph")
    order = degeneracy_order(g, 2)
    if not order:
        return frozenset(), Coloring(3, {})
    adj = g.adjacency()
    flipped: set[int] = set()
    r = Fraction(3)
    colors = {order[0]: Fraction(0)}
    for w in order[1:]:
        back = []
        for x, s in adj[w]:
            if x in colors:
                if (x in flipped) != (w in flipped):
                    s = s.flip()
                back.append((x, s))
        back.sort()
        spot = find_point(r, [(colors[x], s) for x, s in back])
        if spot is not None:
            colors[w] = spot
            continue
        flips, colors, r = _insert(colors, r, w, back)
        flipped ^= flips
    switch_set = frozenset(flipped)
    out = Coloring(r, colors)
    _reverify(g, switch_set, out, "color_2degenerate")
    return switch_set, out


def lift_fu(g: SignedGraph, u: int, c: Coloring) -> tuple[frozenset[int], Coloring]:
    """Turn a ``(4-eps)``-coloring of ``f_u(g)`` into a ``(4-eps/4)``-coloring of
    a switching of ``g``.

    All neighbours of ``u`` inherit the merged vertex's color; the negative
    ones are switched and sent to the antipode. After the gap-insertion
    transform they sit at 0 and 2, and ``u`` goes to 1.
    """
    contracted, z = f_u(g, u)
    if contracted.has_loop(POS):
        raise PositiveLoopInContraction(f"contracting at {u} creates a positive loop")
    if any(len(set(g.signs_between(u, x))) > 1 for x in g.neighbors(u)) or \
            POS in g.signs_between(u, u):
        raise NonSimpleInput(f"vertex {u} has a digon or a positive loop")
    eps = _check_radius(c.r)
    if set(c.f) != set(range(contracted.n)) or verify_coloring(contracted, c) is not None:
        raise InvalidInputColoring("input is not a valid coloring of f_u(g)")
    mapping, _ = fu_vertex_map(g, u)
    r = c.r
    shift = c[z]
    negatives = {x for x, s in g.adjacency()[u] if s == NEG and x != u}
    colors = {}
    for v in range(g.n):
        if v == u:
            continue
        if mapping[v] != z:
            colors[v] = (c[mapping[v]] - shift) % r
        else:
            colors[v] = r / 2 if v in negatives else Fraction(0)
    shrunk = transform_4eps(Coloring(r, colors))
    colors = dict(shrunk.f)
    colors[u] = Fraction(1)
    out = Coloring(shrunk.r, colors)
    assert out.r == 4 - eps / 4
    switch_set = frozenset(negatives)
    _reverify(g, switch_set, out, "lift_fu")
    return switch_set, out


def lift_fuv(g: SignedGraph, u: int, v: int, c: Coloring) -> Coloring:
    """Extend a ``(4-eps)``-coloring of ``g`` to a ``(4-eps/4)``-coloring of
    ``f_uv(g)``.

    The coloring is normalised so that ``u`` is at 0 and ``v`` lies in
    ``[1, 2 - eps/2]``, then transformed; the four gadget vertices get
    ``eps/8``, ``v* + eps/8``, ``1`` and ``v* + eps/4 - 1`` where ``v*`` is the
    scaled position of ``v``.
    """
    if POS not in g.signs_between(u, v) or u == v:
        raise NotPositiveEdge(f"{u}{v} is not a positive edge")
    target = f_uv(g, u, v)
    eps = _check_radius(c.r)
    if set(c.f) != set(range(g.n)) or verify_coloring(g, c) is not None:
        raise InvalidInputColoring("input is not a valid coloring of g")
    r = c.r
    shift = c[u]
    colors = {x: (p - shift) % r for x, p in c.f.items()}
    if colors[v] > r / 2:
        colors = {x: (r - p) % r for x, p in colors.items()}
    assert 1 <= colors[v] <= 2 - eps / 2
    params = TransformParams.for_eps(eps)
    scaled_v = params.gamma * colors[v]
    psi = {x: params.map_point(p) for x, p in colors.items()}
    n = g.n
    psi[n] = eps / 8
    psi[n + 1] = scaled_v + eps / 8
    psi[n + 2] = Fraction(1)
    psi[n + 3] = scaled_v + eps / 4 - 1
    out = Coloring(params.new_radius, psi)
    bad = verify_coloring(target, out)
    if bad is not None:
        raise VerificationFailure(f"lift_fuv produced an invalid coloring: {bad}")
    return out
