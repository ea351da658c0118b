"""Constructive generators and recognizers for the extremal graph families.

Each family packages the graphs attaining equality in one of the verified
bounds:

* ``lambda``  -- dominating edge {a, b} plus an independent rest partitioned
  into a-only / b-only / both neighborhoods (total-OI product lower bound).
* ``phi``     -- clique K_p with a distinguished vertex x and an independent
  attachment set J (total-OI sum equal to n - 1).
* ``psi``     -- the p = 4 variant with degree floors 2 and ceilings |R| - 2
  (2-OI product lower bound).
* ``omega``   -- matched pairs plus uniform-degree attachment vertices and
  optional leaf stars (double-OI degree-based lower bound).
* ``gcal``    -- every vertex of one side joined to exactly two vertices of
  the other (2-OI value n - m/2).
* ``theta``   -- clique plus a pendant path whose inner vertex sees all but
  one clique vertex (double-OI sum equal to 2n - 1).
* ``h``       -- even cycle with cliques glued on consecutive pairs (sharp
  for the (Delta-1)n/Delta upper bound).
* ``grid``    -- P_{3k} x P_2 (sharp for the bipartite upper bound).

Randomized edge choices are seeded rejection sampling; every generated graph
is accepted by its recognizer.  Recognizers answer membership up to the given
labeling's structure, and are isomorphism-invariant.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, from_edge_list

__all__ = [
    "FamilySpec",
    "generate",
    "recognize",
    "fixture",
    "FIXTURE_NAMES",
    "classic",
    "generate_lambda",
    "generate_phi",
    "generate_psi",
    "generate_omega",
    "generate_gcal",
    "generate_theta",
    "generate_h",
    "generate_grid",
    "in_lambda",
    "in_phi",
    "in_psi",
    "in_omega",
    "in_gcal",
    "in_theta",
]

RETRY_CAP = 10_000
OMEGA_RECOGNIZER_CAP = 16


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# lambda: edge {a, b} + independent rest split into A / B / C
# ---------------------------------------------------------------------------

def generate_lambda(a_size: int, b_size: int, c_size: int) -> Graph:
    """Members have order n = a_size + b_size + c_size + 2 >= 5."""
    if min(a_size, b_size, c_size) < 1:
        raise ValueError("all three classes must be nonempty")
    a, b = 0, 1
    edges = [(a, b)]
    v = 2
    for _ in range(a_size):
        edges.append((a, v))
        v += 1
    for _ in range(b_size):
        edges.append((b, v))
        v += 1
    for _ in range(c_size):
        edges.append((a, v))
        edges.append((b, v))
        v += 1
    return from_edge_list(v, edges)


def in_lambda(g: Graph) -> bool:
    n = g.n
    if n < 5:
        return False
    adj = g.adj
    m = g.m
    for a in range(n):
        row = adj[a] >> (a + 1) << (a + 1)
        for b in _bits(row):
            # Every edge must touch {a, b}; equivalent to the incidence count.
            if m != adj[a].bit_count() + adj[b].bit_count() - 1:
                continue
            rest = g.vertex_mask() & ~(1 << a) & ~(1 << b)
            amask = adj[a] & rest & ~adj[b]
            bmask = adj[b] & rest & ~adj[a]
            cmask = adj[a] & adj[b] & rest
            if amask and bmask and cmask and (amask | bmask | cmask) == rest:
                return True
    return False


# ---------------------------------------------------------------------------
# phi / psi: clique with a distinguished vertex + independent attachments
# ---------------------------------------------------------------------------

def _attachment_graph(
    n: int,
    p: int,
    min_deg: int,
    max_slack: int,
    seed: int,
    cross_edges,
) -> Graph:
    """Clique on 0..p-1 (x = 0) plus J = p..n-1, wired subject to the floor
    ``min_deg`` on J-degrees and ceiling |J| - max_slack on clique-degrees."""
    jsize = n - p
    targets = list(range(1, p))
    js = list(range(p, n))
    cap = jsize - max_slack
    if jsize * min_deg > len(targets) * cap:
        raise ValueError(
            f"attachment conditions are unsatisfiable for n={n}, p={p}: "
            f"{jsize} vertices need {min_deg} neighbors each, "
            f"but each of {len(targets)} targets may take at most {cap}"
        )
    edges = [(u, v) for u, v in combinations(range(p), 2)]
    if cross_edges is not None:
        chosen = [tuple(sorted(e)) for e in cross_edges]
    else:
        rng = random.Random(seed)
        for _ in range(RETRY_CAP):
            chosen = []
            counts = {t: 0 for t in targets}
            ok = True
            for j in js:
                k = rng.randint(min_deg, len(targets))
                nbrs = rng.sample(targets, k)
                for t in nbrs:
                    counts[t] += 1
                chosen.extend((t, j) for t in nbrs)
            if all(c <= cap for c in counts.values()):
                break
        else:
            raise ValueError("rejection sampling exhausted; spec looks unsatisfiable")
    g = from_edge_list(n, edges + list(chosen))
    # Explicit choices are trusted but verified.
    if cross_edges is not None:
        clique_zone = (1 << p) - 1
        for j in js:
            if g.adj[j] & ~clique_zone or g.adj[j] & 1:
                raise ValueError("explicit cross edges leave the allowed bipartite zone")
            if g.degree(j) < min_deg:
                raise ValueError(f"attachment vertex {j} is below the degree floor {min_deg}")
        if any((g.adj[t] >> p).bit_count() > cap for t in targets):
            raise ValueError(f"a clique vertex exceeds the attachment ceiling {cap}")
    return g


def generate_phi(n: int, p: int, seed: int = 0, cross_edges=None) -> Graph:
    if not 3 <= p <= n - 2:
        raise ValueError(f"need 3 <= p <= n-2, got p={p}, n={n}")
    return _attachment_graph(n, p, min_deg=1, max_slack=1, seed=seed, cross_edges=cross_edges)


def generate_psi(n: int, seed: int = 0, cross_edges=None) -> Graph:
    if n < 6:
        raise ValueError(f"psi members have order >= 6, got {n}")
    return _attachment_graph(n, 4, min_deg=2, max_slack=2, seed=seed, cross_edges=cross_edges)


def _clique_attachment_member(g: Graph, p_wanted: int | None, min_deg: int, max_slack: int) -> bool:
    n = g.n
    adj = g.adj
    full = g.vertex_mask()
    for x in range(n):
        k = adj[x] | (1 << x)
        p = k.bit_count()
        if p_wanted is not None and p != p_wanted:
            continue
        if not 3 <= p <= n - 2:
            continue
        if any((adj[v] | (1 << v)) & k != k for v in _bits(k)):
            continue  # N[x] is not a clique
        j = full & ~k
        jsize = j.bit_count()
        if any(adj[v] & j for v in _bits(j)):
            continue  # J not independent
        core = k & ~(1 << x)
        if any((adj[v] & core).bit_count() < min_deg for v in _bits(j)):
            continue
        cap = jsize - max_slack
        if any((adj[v] & j).bit_count() > cap for v in _bits(k & ~(1 << x))):
            continue
        return True
    return False


def in_phi(g: Graph) -> bool:
    return _clique_attachment_member(g, None, min_deg=1, max_slack=1)


def in_psi(g: Graph) -> bool:
    return g.n >= 6 and _clique_attachment_member(g, 4, min_deg=2, max_slack=2)


# ---------------------------------------------------------------------------
# omega: matched pairs + uniform attachment vertices + leaf stars
# ---------------------------------------------------------------------------

def generate_omega(
    a: int,
    b: int,
    p: int,
    r: int,
    leaf_counts: tuple[int, ...] = (),
    seed: int = 0,
    u_targets=None,
) -> Graph:
    """Pairs (v_i, v_i') at indices (2i, 2i+1); attachment vertices next;
    leaves last.  The first ``a`` pairs form the high-degree class B; each of
    the ``p`` attachment vertices picks exactly ``r`` neighbors among B and
    the centers of the remaining ``b`` pairs, keeping every B vertex at degree
    >= r.
    """
    if a < 0 or b < 0 or a + b < 1 or r < 2 or p < 0:
        raise ValueError("need a, b >= 0, a + b >= 1, r >= 2, p >= 0")
    if 2 * a * (r - 1) > p * r:
        raise ValueError(f"degree floors need 2a(r-1) <= pr, got a={a}, p={p}, r={r}")
    leaf_counts = tuple(leaf_counts)
    if len(leaf_counts) < b:
        leaf_counts = leaf_counts + (0,) * (b - len(leaf_counts))
    if len(leaf_counts) != b or any(k < 0 for k in leaf_counts):
        raise ValueError("leaf_counts must give one count >= 0 per plain pair")
    pairs = a + b
    edges = [(2 * i, 2 * i + 1) for i in range(pairs)]
    allowed = [2 * i for i in range(a)] + [2 * i + 1 for i in range(a)]
    allowed += [2 * (a + i) for i in range(b)]
    bmask_vertices = allowed[: 2 * a]
    if p > 0 and r > len(allowed):
        raise ValueError(f"attachment degree r={r} exceeds the {len(allowed)} allowed targets")
    u_base = 2 * pairs
    if u_targets is not None:
        if len(u_targets) != p:
            raise ValueError(f"need target lists for exactly {p} attachment vertices")
        picks = [sorted(t) for t in u_targets]
        for t in picks:
            if len(set(t)) != r or any(x not in allowed for x in t):
                raise ValueError(f"each attachment vertex needs {r} distinct allowed targets")
        deg = {v: 1 for v in bmask_vertices}
        for t in picks:
            for x in t:
                if x in deg:
                    deg[x] += 1
        if any(d < r for d in deg.values()):
            raise ValueError("explicit targets leave a B vertex below degree r")
    else:
        rng = random.Random(seed)
        for _ in range(RETRY_CAP):
            picks = [sorted(rng.sample(allowed, r)) for _ in range(p)]
            deg = {v: 1 for v in bmask_vertices}
            for t in picks:
                for x in t:
                    if x in deg:
                        deg[x] += 1
            if all(d >= r for d in deg.values()):
                break
        else:
            raise ValueError("rejection sampling exhausted; spec looks unsatisfiable")
    for i, t in enumerate(picks):
        edges.extend((u_base + i, x) for x in t)
    w = u_base + p
    for i, count in enumerate(leaf_counts):
        center = 2 * (a + i)
        for _ in range(count):
            edges.append((center, w))
            w += 1
    return from_edge_list(w, edges)


def _is_star_component(g: Graph, comp: int) -> tuple[int, int] | None:
    """(center, leaf-set mask) if the induced component is a star K_{1,k},
    k >= 1, whose non-center vertices are degree-1 in the whole graph."""
    size = comp.bit_count()
    if size < 2:
        return None
    best = None
    for c in _bits(comp):
        others = comp & ~(1 << c)
        if g.adj[c] & others != others:
            continue
        if all(g.adj[v].bit_count() == 1 for v in _bits(others)):
            best = (c, others)
            break
    return best


def _components(g: Graph, sub: int) -> list[int]:
    out = []
    todo = sub
    while todo:
        start = todo & -todo
        seen = start
        frontier = start
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= g.adj[v]
            frontier = grow & sub & ~seen
            seen |= frontier
        out.append(seen)
        todo &= ~seen
    return out


def in_omega(g: Graph, cap: int = OMEGA_RECOGNIZER_CAP) -> bool:
    n = g.n
    if n > cap:
        raise ValueError(f"order {n} exceeds the omega recognizer cap {cap}")
    if n == 0:
        return False
    adj = g.adj
    degs = g.degrees()
    if min(degs) == 0:
        return False
    full = g.vertex_mask()
    leaves = 0
    supports = 0
    for v, d in enumerate(degs):
        if d == 1:
            leaves |= 1 << v
            supports |= adj[v]
    ls = leaves | supports
    w = full & ~ls
    if w == 0:
        # Galaxy case: every component must be a star with >= 2 vertices.
        return all(_is_star_component(g, comp) is not None for comp in _components(g, full))
    r = min(degs[v] for v in _bits(w))
    if r < 2:
        return False
    # Leaf/support part must decompose into stars whose centers may reach
    # only degree-r vertices of W; those reached vertices are forced into U.
    forced_u = 0
    for comp in _components(g, ls):
        extras = None
        for c in _bits(comp):
            others = comp & ~(1 << c)
            if not others or adj[c] & comp != others:
                continue
            if any(degs[v] != 1 for v in _bits(others)):
                continue
            cand = adj[c] & ~comp
            if cand & ~w or any(degs[v] != r for v in _bits(cand)):
                continue
            extras = cand
            break
        if extras is None:
            return False
        forced_u |= extras
    # W vertices adjacent to the leaf/support part must also join U.
    for v in _bits(w):
        if adj[v] & ls:
            forced_u |= 1 << v
    free = 0
    for v in _bits(w):
        if degs[v] == r and not forced_u >> v & 1:
            free |= 1 << v
    if any(degs[v] != r for v in _bits(forced_u)):
        return False
    free_list = list(_bits(free))
    for pick in range(1 << len(free_list)):
        u_mask = forced_u
        for i, v in enumerate(free_list):
            if pick >> i & 1:
                u_mask |= 1 << v
        if _omega_partition_ok(g, w, ls, u_mask, r):
            return True
    return False


def _omega_partition_ok(g: Graph, w: int, ls: int, u_mask: int, r: int) -> bool:
    adj = g.adj
    m_mask = w & ~u_mask
    if u_mask == 0 and m_mask:
        return False
    for v in _bits(u_mask):
        if adj[v] & u_mask:
            return False  # U must be independent
        if adj[v] & ~(m_mask | ls):
            return False
    matched = 0
    for v in _bits(m_mask):
        inside = adj[v] & m_mask
        if inside.bit_count() != 1:
            return False
        if adj[v] & ~(inside | u_mask):
            return False  # only the partner and attachment vertices
        matched |= 1 << v
    return matched == m_mask


# ---------------------------------------------------------------------------
# gcal: one side all of degree exactly two into the other
# ---------------------------------------------------------------------------

def generate_gcal(p_size: int, q_size: int, seed: int = 0, choices=None) -> Graph:
    if p_size < 1 or q_size < 2:
        raise ValueError("need |P| >= 1 and |Q| >= 2")
    qs = list(range(p_size, p_size + q_size))
    if choices is not None:
        picks = [tuple(sorted(c)) for c in choices]
        if len(picks) != p_size or any(
            len(set(c)) != 2 or any(x not in qs for x in c) for c in picks
        ):
            raise ValueError("each P vertex needs two distinct Q targets")
    else:
        rng = random.Random(seed)
        picks = [tuple(rng.sample(qs, 2)) for _ in range(p_size)]
    edges = []
    for i, (x, y) in enumerate(picks):
        edges.append((i, x))
        edges.append((i, y))
    return from_edge_list(p_size + q_size, edges)


def in_gcal(g: Graph) -> bool:
    n = g.n
    adj = g.adj
    degs = g.degrees()
    options: list[list[tuple[int, int]]] = []
    for comp in _components(g, g.vertex_mask()):
        if comp.bit_count() == 1:
            options.append([(0, 1)])  # an untouched vertex can only sit in Q
            continue
        start = comp & -comp
        color = {start.bit_length() - 1: 0}
        queue = [start.bit_length() - 1]
        ok = True
        while queue and ok:
            v = queue.pop()
            for u in _bits(adj[v]):
                if u in color:
                    if color[u] == color[v]:
                        ok = False
                        break
                else:
                    color[u] = 1 - color[v]
                    queue.append(u)
        if not ok:
            return False
        side = [0, 0]
        bad = [False, False]
        for v, c in color.items():
            side[c] += 1
            if degs[v] != 2:
                bad[c] = True
        opts = []
        if not bad[0]:
            opts.append((side[0], side[1]))
        if not bad[1]:
            opts.append((side[1], side[0]))
        if not opts:
            return False
        options.append(opts)
    # Some per-component side choice must give |P| >= 1 and |Q| >= 2 overall.
    totals = {(0, 0)}
    for opts in options:
        totals = {
            (min(tp + p, 2), min(tq + q, 3))
            for tp, tq in totals
            for p, q in opts
        }
    return any(tp >= 1 and tq >= 2 for tp, tq in totals)


# ---------------------------------------------------------------------------
# theta: clique + pendant path seeing all but one clique vertex
# ---------------------------------------------------------------------------

def generate_theta(q: int) -> Graph:
    if q < 3:
        raise ValueError(f"the clique needs at least 3 vertices, got {q}")
    edges = [(u, v) for u, v in combinations(range(q), 2)]
    u, w = q, q + 1
    edges.append((u, w))
    edges.extend((u, v) for v in range(q - 1))
    return from_edge_list(q + 2, edges)


def in_theta(g: Graph) -> bool:
    n = g.n
    if n < 5:
        return False
    adj = g.adj
    full = g.vertex_mask()
    for w in range(n):
        if adj[w].bit_count() != 1:
            continue
        u = adj[w].bit_length() - 1
        c = full & ~(1 << w) & ~(1 << u)
        if c.bit_count() < 3:
            continue
        if any((adj[v] | (1 << v)) & c != c for v in _bits(c)):
            continue
        if (adj[u] & c).bit_count() == c.bit_count() - 1:
            return True
    return False


# ---------------------------------------------------------------------------
# h family and grids
# ---------------------------------------------------------------------------

def generate_h(k: int, p: int) -> Graph:
    """Cycle C_{2k} with a complete graph K_p glued on each consecutive pair
    (v_{2i-1}, v_{2i}).  Needs k >= 2 so the base cycle is a proper cycle."""
    if k < 2 or p < 0:
        raise ValueError("need k >= 2 and p >= 0")
    edges = [(i, (i + 1) % (2 * k)) for i in range(2 * k)]
    base = 2 * k
    for i in range(k):
        block = list(range(base, base + p))
        edges.extend((u, v) for u, v in combinations(block, 2))
        for x in block:
            edges.append((2 * i, x))
            edges.append((2 * i + 1, x))
        base += p
    return from_edge_list(2 * k + k * p, edges)


def generate_grid(k: int) -> Graph:
    """P_{3k} x P_2 with vertex (i, j) at index 2i + j."""
    if k < 1:
        raise ValueError("need k >= 1")
    cols = 3 * k
    edges = []
    for i in range(cols):
        edges.append((2 * i, 2 * i + 1))
        if i + 1 < cols:
            edges.append((2 * i, 2 * i + 2))
            edges.append((2 * i + 1, 2 * i + 3))
    return from_edge_list(2 * cols, edges)


# ---------------------------------------------------------------------------
# classic graphs and frozen fixtures
# ---------------------------------------------------------------------------

def classic(name: str) -> Graph:
    """Small named graphs: kN, cN, pN, eN (edgeless), sN (star of order N),
    mN (perfect matching of order N), and kA,B (complete bipartite)."""
    s = name.strip().lower()
    if "," in s and s.startswith("k"):
        a, b = (int(x) for x in s[1:].split(","))
        return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    kind, num = s[0], s[1:]
    if not num.isdigit():
        raise ValueError(f"unknown classic graph {name!r}")
    n = int(num)
    if kind == "k":
        return from_edge_list(n, list(combinations(range(n), 2)))
    if kind == "e":
        return from_edge_list(n, [])
    if kind == "p":
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "c":
        if n < 3:
            raise ValueError("cycles need at least 3 vertices")
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "s":
        if n < 2:
            raise ValueError("stars need at least 2 vertices")
        return from_edge_list(n, [(0, i) for i in range(1, n)])
    if kind == "m":
        if n % 2:
            raise ValueError("perfect matchings need even order")
        return from_edge_list(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])
    raise ValueError(f"unknown classic graph {name!r}")


# 12-vertex cubic claw-free graph meeting the 2n/3 upper bound.
# Three K4-minus-an-edge blocks x1..x4 -> 0..3, y1..y4 -> 4..7, z1..z4 -> 8..11,
# linked by x4-z4, z2-y4, x2-y2.
_H1_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 0), (0, 2),
    (4, 5), (5, 6), (6, 7), (7, 4), (4, 6),
    (8, 9), (9, 10), (10, 11), (11, 8), (8, 10),
    (3, 11), (9, 7), (1, 5),
]

# 10-vertex cubic claw-free graph meeting the 3n/5 lower bound.
# u1..u6 -> 0..5, v1..v4 -> 6..9.
_H2_EDGES = [
    (6, 0), (0, 1), (1, 6), (6, 3), (3, 9), (9, 5), (5, 8), (8, 4), (4, 7),
    (7, 1), (0, 7), (8, 2), (2, 9), (5, 4), (2, 3),
]

# 10-vertex psi member: triangle y1 y2 y3 (0,1,2) + x (3) joined to the
# triangle, and pairs x1..x6 (4..9) each joined to two triangle vertices.
_PSI10_EDGES = [
    (0, 1), (1, 2), (2, 0),
    (3, 0), (3, 1), (3, 2),
    (4, 0), (4, 1), (5, 0), (5, 1),
    (6, 0), (6, 2), (7, 0), (7, 2),
    (8, 1), (8, 2), (9, 1), (9, 2),
]

# 15-vertex omega member with (a, b, p, r, k_3, k_4) = (2, 2, 4, 3, 0, 3).
# Pairs v1 v1' .. v4 v4' -> 0..7, attachments u1..u4 -> 8..11, leaves -> 12..14.
_OMEGA15_EDGES = [
    (0, 1), (2, 3), (4, 5), (6, 7),
    (8, 0), (9, 0), (8, 2), (11, 2), (8, 3), (11, 3),
    (9, 1), (10, 1), (9, 6), (10, 4), (10, 6), (11, 1),
    (12, 6), (13, 6), (14, 6),
]

_FIXTURES = {
    "h1": (12, _H1_EDGES),
    "h2": (10, _H2_EDGES),
    "psi10": (10, _PSI10_EDGES),
    "omega15": (15, _OMEGA15_EDGES),
}

FIXTURE_NAMES = tuple(sorted(_FIXTURES))


def fixture(name: str) -> Graph:
    """Frozen edge-list constants for the bound-sharpness witnesses."""
    key = name.strip().lower()
    if key not in _FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}")
    n, edges = _FIXTURES[key]
    return from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# Spec bundle for the CLI / JSON surface
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """Family tag plus integer parameters, a seed, and optional explicit
    edge choices; JSON-serializable for fixture files."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def to_json(self) -> str:
        return json.dumps(
            {"family": self.family, "params": self.params, "seed": self.seed},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "FamilySpec":
        data = json.loads(text)
        return cls(
            family=data["family"],
            params=dict(data.get("params", {})),
            seed=int(data.get("seed", 0)),
        )


def generate(spec: FamilySpec) -> Graph:
    fam = spec.family.lower()
    p = dict(spec.params)
    if fam == "lambda":
        return generate_lambda(p["a_size"], p["b_size"], p["c_size"])
    if fam == "phi":
        return generate_phi(p["n"], p["p"], seed=spec.seed, cross_edges=p.get("cross_edges"))
    if fam == "psi":
        return generate_psi(p["n"], seed=spec.seed, cross_edges=p.get("cross_edges"))
    if fam == "omega":
        return generate_omega(
            p["a"], p["b"], p["p"], p["r"],
            leaf_counts=tuple(p.get("leaf_counts", ())),
            seed=spec.seed,
            u_targets=p.get("u_targets"),
        )
    if fam == "gcal":
        return generate_gcal(p["p_size"], p["q_size"], seed=spec.seed, choices=p.get("choices"))
    if fam == "theta":
        return generate_theta(p["q"])
    if fam == "h":
        return generate_h(p["k"], p["p"])
    if fam == "grid":
        return generate_grid(p["k"])
    if fam.startswith("classic:"):
        return classic(fam.split(":", 1)[1])
    if fam == "classic":
        return classic(p["name"])
    raise ValueError(f"unknown family {spec.family!r}")


_RECOGNIZERS = {
    "lambda": in_lambda,
    "phi": in_phi,
    "psi": in_psi,
    "omega": in_omega,
    "gcal": in_gcal,
    "theta": in_theta,
}


def recognize(g: Graph, family: str) -> bool:
    fam = family.lower()
    if fam not in _RECOGNIZERS:
        raise ValueError(f"no recognizer for family {family!r}; have {sorted(_RECOGNIZERS)}")
    return _RECOGNIZERS[fam](g)
