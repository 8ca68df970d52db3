"""Exact circle arithmetic and circular colorings of signed graphs.

All scalars are :class:`fractions.Fraction`. A coloring places each vertex on
the circle ``[0, r)``; a positive edge needs its endpoints at circular
distance at least 1, a negative edge needs one endpoint at distance at least 1
from the antipode of the other.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainMismatch, EpsOutOfRange, OutOfRange
from .graph import NEG, POS, Sign, SignedGraph


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or 'p/q' strings")
    return Fraction(x)


def fmt(x: Fraction) -> str:
    """Render as ``num/den``; the denominator is always printed."""
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    if not isinstance(text, str):
        if isinstance(text, int):
            return Fraction(text)
        raise ValueError(f"expected a 'num/den' string, got {text!r}")
    return Fraction(text.strip())


def _check_point(r: Fraction, a: Fraction) -> None:
    if not 0 <= a < r:
        raise OutOfRange(f"point {a} outside [0, {r})")


def circ_dist(r, a, b) -> Fraction:
    r, a, b = as_fraction(r), as_fraction(a), as_fraction(b)
    _check_point(r, a)
    _check_point(r, b)
    d = abs(a - b)
    return min(d, r - d)


def antipodal(r, a) -> Fraction:
    r, a = as_fraction(r), as_fraction(a)
    _check_point(r, a)
    return (a + r / 2) % r


@dataclass(frozen=True)
class Coloring:
    """Circumference ``r`` and a map vertex -> point of ``[0, r)``.

    Points are reduced modulo ``r`` on construction. ``f`` may be partial; it
    is checked against a graph's vertex set only when verified.
    """

    r: Fraction
    f: Mapping[int, Fraction]

    def __post_init__(self):
        r = as_fraction(self.r)
        if r < 1:
            raise ValueError(f"circumference must be at least 1, got {r}")
        raw = self.f
        if not isinstance(raw, Mapping):
            raw = dict(enumerate(raw))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "f", {int(v): as_fraction(p) % r for v, p in sorted(raw.items())})

    def __getitem__(self, v: int) -> Fraction:
        return self.f[v]

    def __len__(self):
        return len(self.f)

    def as_list(self) -> list[Fraction]:
        if sorted(self.f) != list(range(len(self.f))):
            raise DomainMismatch("coloring is not defined on 0..n-1")
        return [self.f[v] for v in range(len(self.f))]

    def restrict(self, vertices: Iterable[int]) -> "Coloring":
        return Coloring(self.r, {v: self.f[v] for v in vertices})

    def relabel(self, mapping: Mapping[int, int]) -> "Coloring":
        """New coloring with vertex ``v`` renamed to ``mapping[v]``."""
        return Coloring(self.r, {mapping[v]: p for v, p in self.f.items()})

    def to_json(self) -> dict:
        return {"r": fmt(self.r), "f": [fmt(p) for p in self.as_list()]}

    @classmethod
    def from_json(cls, data: dict) -> "Coloring":
        return cls(parse_fraction(data["r"]), [parse_fraction(x) for x in data["f"]])


@dataclass(frozen=True)
class Violation:
    edge: tuple[int, int, Sign]
    reason: str
    slack: Fraction

    def to_json(self) -> dict:
        u, v, s = self.edge
        return {"edge": [u, v, s.symbol], "reason": self.reason, "slack": fmt(self.slack)}


def edge_slack(r: Fraction, fu: Fraction, fv: Fraction, sign: Sign) -> Fraction:
    """Circle-metric slack of one edge constraint; valid iff ``>= 0``."""
    if sign == POS:
        return circ_dist(r, fu, fv) - 1
    return circ_dist(r, fu, antipodal(r, fv)) - 1


def metric_ok(r: Fraction, fu: Fraction, fv: Fraction, sign: Sign) -> bool:
    """Edge constraint in the circle-metric form."""
    return edge_slack(r, fu, fv, sign) >= 0


def interval_ok(r: Fraction, fu: Fraction, fv: Fraction, sign: Sign) -> bool:
    """Edge constraint in the interval form on representatives in ``[0, r)``."""
    d = abs(fu - fv)
    if sign == POS:
        return 1 <= d <= r - 1
    return d <= r / 2 - 1 or d >= r / 2 + 1


def verify_coloring(g: SignedGraph, c: Coloring, partial: bool = False) -> Violation | None:
    """Return the first violated edge, or ``None`` if ``c`` is a valid coloring.

    Both the circle-metric and the interval characterisations are evaluated
    on every edge and must agree. With ``partial=True`` only edges whose two
    endpoints are colored are checked.
    """
    if partial:
        if any(not 0 <= v < g.n for v in c.f):
            raise DomainMismatch("coloring names vertices outside the graph")
    elif set(c.f) != set(range(g.n)):
        raise DomainMismatch(f"coloring domain has {len(c.f)} vertices, graph has {g.n}")
    r = c.r
    first = None
    for u, v, s in g.edges:
        if u not in c.f or v not in c.f:
            continue
        slack = edge_slack(r, c.f[u], c.f[v], s)
        ok_metric = slack >= 0
        ok_interval = interval_ok(r, c.f[u], c.f[v], s)
        if ok_metric != ok_interval:
            raise AssertionError(
                f"circle and interval criteria disagree on edge {(u, v, s)} at r={r}")
        if not ok_metric and first is None:
            kind = "positive edge endpoints closer than 1" if s == POS else \
                "negative edge endpoint closer than 1 to the other's antipode"
            first = Violation((u, v, s), kind, slack)
    return first


def is_valid(g: SignedGraph, c: Coloring, partial: bool = False) -> bool:
    return verify_coloring(g, c, partial=partial) is None


def rotate(c: Coloring, delta) -> Coloring:
    delta = as_fraction(delta)
    return Coloring(c.r, {v: (p + delta) % c.r for v, p in c.f.items()})


def reflect(c: Coloring) -> Coloring:
    return Coloring(c.r, {v: (c.r - p) % c.r for v, p in c.f.items()})


def recolor_antipodal(c: Coloring, vertices: Iterable[int]) -> Coloring:
    """Move the given vertices to their antipodes (the recoloring that
    accompanies switching at those vertices)."""
    vs = set(vertices)
    half = c.r / 2
    return Coloring(c.r, {v: (p + half) % c.r if v in vs else p for v, p in c.f.items()})


@dataclass(frozen=True)
class TransformParams:
    eps: Fraction
    gamma: Fraction
    cut: Fraction

    @classmethod
    def for_eps(cls, eps) -> "TransformParams":
        eps = as_fraction(eps)
        if not 0 < eps < 2:
            raise EpsOutOfRange(f"eps must lie in (0, 2), got {eps}")
        gamma = (4 - eps / 2) / (4 - eps)
        assert gamma == 1 + eps / (8 - 2 * eps)
        assert gamma > 1
        return cls(eps, gamma, 1 - eps / 8)

    @property
    def new_radius(self) -> Fraction:
        return 4 - self.eps / 4

    def map_point(self, p: Fraction) -> Fraction:
        scaled = self.gamma * p
        return scaled if scaled < self.cut else scaled + self.eps / 4


def transform_4eps(c: Coloring) -> Coloring:
    """Rescale a ``(4-eps)``-coloring to ``4-eps/2`` and open a gap of length
    ``eps/4`` at ``1-eps/8``, giving a ``(4-eps/4)``-coloring.

    Validity is preserved for every signed graph: scaling buys slack
    ``eps/(8-2eps)`` on every constraint and the gap moves antipodes by at
    most ``eps/8``.
    """
    params = TransformParams.for_eps(4 - c.r)
    return Coloring(params.new_radius, {v: params.map_point(p) for v, p in c.f.items()})


def constraint_arcs(r: Fraction, anchors: Iterable[tuple[Fraction, Sign]]) -> list[Fraction]:
    """Centers of the forbidden open arcs for a point constrained by ``anchors``.

    A point must be at distance >= 1 from each center.
    """
    centers = []
    for p, s in anchors:
        centers.append(p if s == POS else (p + r / 2) % r)
    return centers


def find_point(r: Fraction, anchors: Iterable[tuple[Fraction, Sign]],
               self_loops: Iterable[Sign] = ()) -> Fraction | None:
    """Smallest-index feasible point for a new vertex, or ``None``.

    The feasible set is a finite union of closed arcs whose endpoints lie at
    ``center +- 1``; testing those endpoints (in a fixed order) is complete.
    """
    r = as_fraction(r)
    loops = list(self_loops)
    if POS in loops or (NEG in loops and r < 2):
        return None
    centers = constraint_arcs(r, anchors)
    if not centers:
        return Fraction(0)
    candidates = []
    for c in centers:
        candidates.append((c + 1) % r)
        candidates.append((c - 1) % r)
    for x in candidates:
        if all(circ_dist(r, x, c) >= 1 for c in centers):
            return x
    return None
