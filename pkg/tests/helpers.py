"""Random instance builders and brute-force oracles shared by the test modules.

The oracles here deliberately avoid the search code they check: feasibility
is decided by enumerating every grid assignment, equivalence by enumerating
every switching set.
"""
from fractions import Fraction
from itertools import product

from signedcirc.circle import Coloring, edge_slack, is_valid
from signedcirc.generators import fu_vertex_map
from signedcirc.graph import NEG, POS, SignedGraph

SIGNS = (POS, NEG)


def random_signed_graph(rng, n, p_edge=0.5, loops=False, parallel=False):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_edge:
                edges.append((u, v, rng.choice(SIGNS)))
                if parallel and rng.random() < 0.15:
                    edges.append((u, v, rng.choice(SIGNS)))
        if loops and rng.random() < 0.1:
            edges.append((u, u, rng.choice(SIGNS)))
    return SignedGraph(n, tuple(edges))


def random_2degenerate(rng, n):
    """Simple 2-degenerate signed graph with shuffled vertex ids."""
    edges = set()
    for w in range(1, n):
        k = rng.randint(0, min(2, w))
        for x in rng.sample(range(w), k):
            edges.add((x, w, rng.choice(SIGNS)))
    perm = list(range(n))
    rng.shuffle(perm)
    return SignedGraph(n, tuple((perm[a], perm[b], s) for a, b, s in edges))


def random_radius(rng):
    """Rational r in (2, 4)."""
    k = rng.choice([2, 3, 4, 5, 6, 8, 12, 16])
    return 4 - Fraction(rng.randint(1, 2 * k - 1), k)


def random_points(rng, r, count):
    """Points on a random grid of ``[0, r)`` so that equalities occur often."""
    steps = rng.randint(4, 24)
    return [r * Fraction(rng.randrange(steps), steps) for _ in range(count)]


def planted(rng, n, r=None, density=0.6):
    """Simple signed graph together with a valid r-coloring of it."""
    r = random_radius(rng) if r is None else r
    pts = random_points(rng, r, n)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                s = rng.choice(SIGNS)
                if edge_slack(r, pts[u], pts[v], s) >= 0:
                    edges.append((u, v, s))
    g = SignedGraph(n, tuple(edges))
    c = Coloring(r, pts)
    assert is_valid(g, c)
    return g, c


def planted_fuv(rng):
    """(g, u, v, coloring) with uv a positive edge."""
    while True:
        n = rng.randint(2, 12)
        g, c = planted(rng, n)
        pos = [(u, v) for u, v, s in g.edges if s == POS]
        if pos:
            u, v = rng.choice(pos)
            if rng.random() < 0.5:
                u, v = v, u
            return g, u, v, c


def planted_fu(rng):
    """(g, u, coloring of f_u(g)) built from a coloring of the contraction."""
    r = random_radius(rng)
    k = rng.randint(0, 7)
    d = rng.randint(1, 4)
    pts = random_points(rng, r, k + 1)
    zc = pts[k]
    n = 1 + d + k
    perm = list(range(n))
    rng.shuffle(perm)
    u = perm[0]
    nbrs = perm[1:1 + d]
    outside = perm[1 + d:]
    color = {outside[i]: pts[i] for i in range(k)}
    edges = [(u, x, rng.choice(SIGNS)) for x in nbrs]
    for i, a in enumerate(outside):
        for b in outside[i + 1:]:
            s = rng.choice(SIGNS)
            if rng.random() < 0.6 and edge_slack(r, color[a], color[b], s) >= 0:
                edges.append((a, b, s))
    for x in nbrs:
        for w in outside:
            s = rng.choice(SIGNS)
            if rng.random() < 0.5 and edge_slack(r, zc, color[w], s) >= 0:
                edges.append((x, w, s))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if rng.random() < 0.3:
                edges.append((x, y, NEG))
    g = SignedGraph(n, tuple(edges))
    mapping, z = fu_vertex_map(g, u)
    fc = {z: zc}
    for w in outside:
        fc[mapping[w]] = color[w]
    return g, u, Coloring(r, fc)


# -- oracles -----------------------------------------------------------------

def brute_grid_feasible(g: SignedGraph, p: int, q: int) -> bool:
    """Enumerate every map V -> {0..p-1} with vertex 0 fixed at 0."""
    if g.n == 0:
        return True
    r = Fraction(p, q)
    for rest in product(range(p), repeat=g.n - 1):
        c = Coloring(r, [Fraction(x, q) for x in (0,) + rest])
        if is_valid(g, c):
            return True
    return False


def brute_chi(g: SignedGraph) -> Fraction:
    """Smallest ``p/q`` (``p`` even, ``p <= 2n``, value ``>= 2``) whose grid
    admits a coloring, by exhaustive enumeration."""
    values = sorted({Fraction(p, q) for p in range(2, 2 * g.n + 1, 2)
                     for q in range(1, p // 2 + 1)})
    for v in values:
        a, b = v.numerator, v.denominator
        p, q = (a, b) if a % 2 == 0 else (2 * a, 2 * b)
        if brute_grid_feasible(g, p, q):
            return v
    raise AssertionError("no feasible value")


def switch_signs(edges, signs, mask):
    out = []
    for (u, v, _), s in zip(edges, signs):
        flip = ((mask >> u) & 1) != ((mask >> v) & 1)
        out.append(s.flip() if flip else s)
    return out


def brute_class_rep(n, edges, signs):
    """Canonical representative of the switching class over all 2^n sets.

    Parallel edges are compared as multisets per vertex pair.
    """
    best = None
    for mask in range(1 << n):
        sw = switch_signs(edges, signs, mask)
        key = tuple(sorted(((u, v, int(s)) for (u, v, _), s in zip(edges, sw))))
        if best is None or key < best:
            best = key
    return best
