"""Exact circular chromatic numbers of small signed graphs.

Candidate values ``p/q`` (``p`` even, ``p <= 2n``) are scanned in increasing
order. Each is tested by a backtracking search for a map into the grid
``{0, ..., p-1}`` where grid point ``i`` stands for the circle point ``i/q``
on a circle of length ``p/q``. Because ``p`` is even the grid is closed under
taking antipodes (shift by ``p/2``).

Search: domains are bitmasks, assignments forward-check all neighbours, the
next variable is the one with the fewest remaining colors (ties broken by a
degeneracy ranking), the first vertex of every component is fixed at 0 and the
second assigned vertex is restricted to ``[0, p/2]`` (reflection symmetry).
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .circle import Coloring, fmt, verify_coloring
from .errors import InvalidColoring, VerificationFailure
from .graph import NEG, POS, Sign, SignedGraph, simplify

INF = "inf"


@dataclass(frozen=True)
class SignedCircularClique:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.p % 2:
            raise ValueError(f"p must be even and >= 2, got {self.p}")
        if self.q < 1:
            raise ValueError(f"q must be positive, got {self.q}")

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def cyclic_distance(self, i: int, j: int) -> int:
        d = (i - j) % self.p
        return min(d, self.p - d)

    def adjacent(self, i: int, j: int, sign: Sign) -> bool:
        if sign == POS:
            return self.cyclic_distance(i, j) >= self.q
        return self.cyclic_distance(i, (j + self.p // 2) % self.p) >= self.q


@dataclass(frozen=True)
class Candidate:
    value: Fraction
    p: int
    q: int


def even_representation(x: Fraction) -> tuple[int, int]:
    a, b = x.numerator, x.denominator
    return (a, b) if a % 2 == 0 else (2 * a, 2 * b)


def candidate_values(g_or_n, max_numerator: int | None = None,
                     below: Fraction | None = None) -> list[Candidate]:
    """Distinct values ``p/q >= 2`` with ``p`` even and ``p <= 2n``, ascending.

    ``max_numerator`` overrides the ``2n`` cap; ``below`` keeps only values
    strictly smaller than it.
    """
    n = g_or_n.n if isinstance(g_or_n, SignedGraph) else int(g_or_n)
    top = 2 * n if max_numerator is None else max_numerator
    values = set()
    for p in range(2, top + 1, 2):
        for q in range(1, p // 2 + 1):
            values.add(Fraction(p, q))
    out = []
    for v in sorted(values):
        if below is not None and v >= below:
            continue
        p, q = even_representation(v)
        out.append(Candidate(v, p, q))
    return out


def _static_rank(n: int, adj: list[list[tuple[int, Sign]]]) -> list[int]:
    """Rank vertices by reverse smallest-last order (dense core first)."""
    nbrs = [set(w for w, _ in adj[v] if w != v) for v in range(n)]
    deg = [len(s) for s in nbrs]
    alive = set(range(n))
    removed = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], -x))
        alive.remove(v)
        removed.append(v)
        for w in nbrs[v]:
            if w in alive:
                deg[w] -= 1
    rank = [0] * n
    for i, v in enumerate(reversed(removed)):
        rank[v] = i
    return rank


def _masks(p: int, q: int) -> tuple[list[int], list[int]]:
    full = (1 << p) - 1
    base = 0
    for j in range(q, p - q + 1):
        base |= 1 << j
    pos = []
    for c in range(p):
        pos.append(((base << c) | (base >> (p - c))) & full)
    half = p // 2
    neg = [pos[(c + half) % p] for c in range(p)]
    return pos, neg


def _search(n: int, adj: list[list[tuple[int, Sign]]], p: int, q: int) -> list[int] | None:
    if 2 * q > p:
        # no two grid points are 1 apart; only edgeless graphs survive
        return None if any(adj[v] for v in range(n)) else [0] * n
    pos, neg = _masks(p, q)
    full = (1 << p) - 1
    domain = [full] * n
    for v in range(n):
        for w, s in adj[v]:
            if w == v:
                if s == POS:
                    return None
                # negative loop: distance p/2 >= q always holds here
    rank = _static_rank(n, adj)
    nbrs = [[(w, pos if s == POS else neg) for w, s in adj[v] if w != v] for v in range(n)]
    assignment = [-1] * n
    first_half = (1 << (p // 2 + 1)) - 1

    comp_of = [-1] * n
    comps = []
    for v in sorted(range(n), key=lambda x: rank[x]):
        if comp_of[v] != -1:
            continue
        stack, members = [v], []
        comp_of[v] = len(comps)
        while stack:
            x = stack.pop()
            members.append(x)
            for y, _ in nbrs[x]:
                if comp_of[y] == -1:
                    comp_of[y] = len(comps)
                    stack.append(y)
        comps.append(members)

    def assign(v: int, color: int, dom: list[int]) -> list[int] | None:
        new = dom[:]
        new[v] = 1 << color
        for w, table in nbrs[v]:
            if assignment[w] == -1 and w != v:
                nd = new[w] & table[color]
                if not nd:
                    return None
                new[w] = nd
            elif assignment[w] != -1 and not (table[color] >> assignment[w]) & 1:
                return None
        return new

    def solve(members: list[int], dom: list[int], placed: int) -> list[int] | None:
        free = [v for v in members if assignment[v] == -1]
        if not free:
            return dom
        v = min(free, key=lambda x: (bin(dom[x]).count("1"), rank[x]))
        mask = dom[v]
        if placed == 0:
            mask &= 1
        elif placed == 1:
            mask &= first_half
        while mask:
            low = mask & -mask
            color = low.bit_length() - 1
            mask ^= low
            nd = assign(v, color, dom)
            if nd is None:
                continue
            assignment[v] = color
            res = solve(members, nd, placed + 1)
            if res is not None:
                return res
            assignment[v] = -1
        return None

    for members in comps:
        if solve(members, domain, 0) is None:
            return None
    return assignment[:]


def is_hom_feasible(g: SignedGraph, k: SignedCircularClique) -> tuple[bool, Coloring | None]:
    """Search for a map of ``g`` into the grid target ``k``.

    On success the witness is returned as a circle coloring of length
    ``p/q`` and has already been re-verified.
    """
    g, _ = simplify(g)
    colors = _search(g.n, g.adjacency(), k.p, k.q)
    if colors is None:
        return False, None
    witness = Coloring(k.value, {v: Fraction(c, k.q) for v, c in enumerate(colors)})
    bad = verify_coloring(g, witness)
    if bad is not None:
        raise VerificationFailure(f"grid witness fails verification: {bad}")
    return True, witness


def _feasible_task(args):
    n, edges, p, q = args
    g = SignedGraph(n, edges)
    ok, witness = is_hom_feasible(g, SignedCircularClique(p, q))
    return ok, witness


@dataclass
class ChiResult:
    value: Fraction | str
    p: int | None
    q: int | None
    witness: Coloring | None
    kind: str = "solved"

    @property
    def is_infinite(self) -> bool:
        return self.value == INF

    def to_json(self) -> dict:
        out = {
            "chi_c": INF if self.is_infinite else fmt(self.value),
            "p": self.p,
            "q": self.q,
            "kind": self.kind,
            "witness": self.witness.to_json() if self.witness is not None else None,
        }
        return out


def _forest_witness(g: SignedGraph) -> Coloring:
    """2-coloring on the circle of length 2: positive edges across the parts,
    negative edges inside a part."""
    side = [-1] * g.n
    adj = g.adjacency()
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y, s in adj[x]:
                if side[y] == -1:
                    side[y] = side[x] ^ (1 if s == POS else 0)
                    stack.append(y)
    return Coloring(2, {v: Fraction(side[v]) for v in range(g.n)})


def chi_c(g: SignedGraph, jobs: int = 1, max_numerator: int | None = None,
          grid_scale: int = 1) -> ChiResult:
    """Exact circular chromatic number with a verified optimal witness.

    ``grid_scale`` tests every candidate on the refined grid ``(kp, kq)``;
    the answer must not depend on it.
    """
    simple, flags = simplify(g)
    if flags.has_positive_loop:
        return ChiResult(INF, None, None, None, kind="positive-loop")
    if simple.m == 0:
        return ChiResult(Fraction(1), 1, 1, Coloring(1, {v: 0 for v in range(g.n)}), kind="edgeless")
    if simple.is_forest():
        w = _forest_witness(simple)
        if verify_coloring(simple, w) is not None:
            raise VerificationFailure("forest witness fails verification")
        return ChiResult(Fraction(2), 2, 1, w, kind="forest")

    cands = candidate_values(simple, max_numerator=max_numerator)
    tasks = [(simple.n, simple.edges, c.p * grid_scale, c.q * grid_scale) for c in cands]
    if jobs <= 1:
        for cand, task in zip(cands, tasks):
            ok, witness = _feasible_task(task)
            if ok:
                return ChiResult(cand.value, cand.p, cand.q, witness)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for start in range(0, len(tasks), jobs):
                batch = tasks[start:start + jobs]
                results = list(pool.map(_feasible_task, batch))
                for cand, (ok, witness) in zip(cands[start:start + jobs], results):
                    if ok:
                        return ChiResult(cand.value, cand.p, cand.q, witness)
    raise RuntimeError("no candidate value is feasible; the candidate bound was violated")


# -- tight cycles --------------------------------------------------------------

@dataclass
class TightnessReport:
    """Tight-edge structure of a coloring.

    ``cycle`` is a directed tight cycle: along it every positive edge advances
    the color by exactly 1 and every negative edge by exactly ``r/2 + 1``
    (modulo ``r``). With ``s`` positive and ``t`` negative edges and total
    advance ``m * r`` this gives ``r = 2(s+t) / (2m - t)``.
    """

    r: Fraction
    tight_edges: list[tuple[int, int, Sign]]
    cycle: list[int] | None = None
    cycle_edges: list[tuple[int, int, Sign]] = field(default_factory=list)
    increments: list[Fraction] = field(default_factory=list)
    s: int = 0
    t: int = 0
    m: int = 0
    unit_sum: int = 0

    @property
    def found(self) -> bool:
        return self.cycle is not None

    @property
    def a(self) -> int:
        return self.m - self.t

    @property
    def recovered_r(self) -> Fraction | None:
        if not self.found or 2 * self.m - self.t == 0:
            return None
        return Fraction(2 * self.unit_sum, 2 * self.m - self.t)

    def is_hamiltonian(self, n: int) -> bool:
        return self.found and len(self.cycle) == n and len(set(self.cycle)) == n

    def to_json(self) -> dict:
        out = {
            "r": fmt(self.r),
            "tight_edges": [[u, v, s.symbol] for u, v, s in self.tight_edges],
            "cycle": self.cycle,
        }
        if self.found:
            out.update({
                "increments": [fmt(x) for x in self.increments],
                "s": self.s, "t": self.t, "m": self.m, "a": self.a,
                "unit_sum": self.unit_sum,
                "recovered_r": fmt(self.recovered_r) if self.recovered_r is not None else None,
            })
        return out


def _directed_cycles(n: int, arcs: list[list[tuple[int, int]]]) -> Iterator[list[tuple[int, int]]]:
    """Yield each simple directed cycle once, as ``(tail vertex, arc index)``
    steps starting from its smallest vertex."""
    def extend(start, v, path, on_path):
        for w, idx in arcs[v]:
            if w == start:
                yield path + [(v, idx)]
            elif w > start and w not in on_path:
                on_path.add(w)
                yield from extend(start, w, path + [(v, idx)], on_path)
                on_path.discard(w)

    for start in range(n):
        yield from extend(start, start, [], {start})


def analyze_tightness(g: SignedGraph, c: Coloring, prefer_longest: bool = True,
                      max_cycles: int = 100000) -> TightnessReport:
    """Find the tight edges of ``c`` and a directed tight cycle among them.

    With ``prefer_longest`` the longest directed tight cycle found within
    ``max_cycles`` enumerated cycles is reported.
    """
    bad = verify_coloring(g, c)
    if bad is not None:
        raise InvalidColoring(f"coloring is not valid: {bad}")
    r = c.r
    half = r / 2
    step = {POS: Fraction(1), NEG: (half + 1) % r}
    tight = []
    arcs: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    arc_info = []
    for u, v, s in g.edges:
        fu, fv = c[u], c[v]
        target = fv if s == POS else (fv + half) % r
        d = abs(fu - target)
        if min(d, r - d) != 1:
            continue
        tight.append((u, v, s))
        for a, b in ((u, v), (v, u)) if u != v else ((u, v),):
            if (c[b] - c[a]) % r == step[s]:
                arcs[a].append((b, len(arc_info)))
                arc_info.append((a, b, s))
    report = TightnessReport(r, tight)
    best = None
    for count, cyc in enumerate(_directed_cycles(g.n, arcs)):
        if best is None or len(cyc) > len(best):
            best = cyc
        if not prefer_longest or len(best) == g.n or count >= max_cycles:
            break
    if best is None:
        return report
    report.cycle = [v for v, _ in best]
    report.cycle_edges = [arc_info[idx] for _, idx in best]
    report.increments = [(c[b] - c[a]) % r for a, b, _ in report.cycle_edges]
    report.s = sum(1 for e in report.cycle_edges if e[2] == POS)
    report.t = len(report.cycle_edges) - report.s
    total = sum(report.increments, Fraction(0))
    assert total % r == 0
    report.m = int(total / r)
    report.unit_sum = len(report.cycle_edges)
    return report
