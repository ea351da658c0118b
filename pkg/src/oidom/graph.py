"""Immutable simple graphs with bit-parallel neighborhoods.

Vertices are the integers ``0 .. n-1`` and every neighborhood is stored as a
Python int used as a bitset, so set algebra on neighborhoods is a couple of
machine-word operations for the graph orders this package targets (the exact
solvers are exponential anyway; the representation itself has no hard cap).

The module also provides the interchange formats used by the rest of the
package: the standard graph6 line format and a plain ``"n m"`` edge-list text
format, plus the structural predicates and the small-order isomorphism test
that the characterization checks rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "DegreeProfile",
    "from_edge_list",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list_text",
    "to_edge_list_text",
    "complement",
    "relabel",
    "disjoint_union",
    "is_independent",
    "is_connected",
    "is_bipartite",
    "is_triangle_free",
    "is_claw_free",
    "degree_profile",
    "canonical_form",
    "are_isomorphic",
]

ISO_CAP_DEFAULT = 10


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An immutable simple graph: vertex count plus one adjacency bitset per vertex.

    Invariants enforced at construction: no loops, symmetric adjacency, and no
    bit at position >= n.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        rows = tuple(adj)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row >> n:
                raise ValueError(f"adjacency of vertex {v} mentions vertices >= {n}")
            if row & (1 << v):
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(row & full):
                if not rows[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for off in _bits(row):
                out.append((u, u + 1 + off))
        return out

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from unordered pairs; duplicates collapse.

    Rejects loops and out-of-range endpoints, naming the offending pair.
    """
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


# ---------------------------------------------------------------------------
# graph6 interchange format
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_parse_order(data: str) -> tuple[int, int]:
    """Return (n, index of first payload char)."""
    if not data:
        raise ValueError("empty graph6 string")
    c0 = ord(data[0])
    if not 63 <= c0 <= 126:
        raise ValueError(f"graph6 character out of range: {data[0]!r}")
    if c0 != 126:
        return c0 - 63, 1
    if len(data) >= 2 and ord(data[1]) == 126:
        raise ValueError("graph6 orders above 258047 are not supported")
    if len(data) < 4:
        raise ValueError("truncated graph6 length prefix")
    n = 0
    for ch in data[1:4]:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise ValueError(f"graph6 character out of range: {ch!r}")
        n = (n << 6) | (c - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header allowed)."""
    data = text.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    n, pos = _g6_parse_order(data)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < nchars:
        raise ValueError(f"graph6 payload too short: need {nchars} chars, got {len(payload)}")
    if len(payload) > nchars:
        raise ValueError(f"trailing garbage after graph6 payload: {payload[nchars:]!r}")
    bits = 0
    for ch in payload:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise ValueError(f"graph6 character out of range: {ch!r}")
        bits = (bits << 6) | (c - 63)
    pad = nchars * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise ValueError("nonzero padding bits in graph6 payload")
    bits >>= pad
    adj = [0] * n
    # Upper triangle in column-major order: (0,1), (0,2), (1,2), (0,3), ...
    idx = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if bits >> idx & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx -= 1
    return Graph(n, adj)


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line (no header)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    else:
        raise ValueError("graph6 orders above 258047 are not supported")
    bits = 0
    nbits = n * (n - 1) // 2
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            bits = (bits << 1) | (row >> u & 1)
    pad = (-nbits) % 6
    bits <<= pad
    chars = []
    for i in range((nbits + pad) // 6 - 1, -1, -1):
        chars.append(chr(63 + (bits >> (6 * i) & 63)))
    return head + "".join(chars)


# ---------------------------------------------------------------------------
# Plain edge-list text format: first line "n m", then m lines "u v"
# ---------------------------------------------------------------------------

def parse_edge_list_text(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(lines) - 1} lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


def to_edge_list_text(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    return Graph(g.n, [full & ~(row | (1 << v)) for v, row in enumerate(g.adj)])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex bijection v -> perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertices")
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        img = 0
        for u in _bits(row):
            img |= 1 << perm[u]
        adj[perm[v]] = img
    return Graph(g.n, adj)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, adj)


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------

def _mask_of(g: Graph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge has both endpoints in ``s``."""
    mask = _mask_of(g, s)
    for v in _bits(mask):
        if g.adj[v] & mask:
            return False
    return True


def is_connected(g: Graph) -> bool:
    """True iff the graph has one component (vacuously true for n <= 1)."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        seen |= frontier
    return seen == g.vertex_mask()


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in _bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        row = g.adj[u] >> (u + 1) << (u + 1)
        for v in _bits(row):
            if g.adj[u] & g.adj[v]:
                return False
    return True


def is_claw_free(g: Graph) -> bool:
    """True iff the graph has no induced K_{1,3}."""
    for v in range(g.n):
        nb = g.adj[v]
        if nb.bit_count() < 3:
            continue
        for a in _bits(nb):
            rest = nb & ~g.adj[a] & ~((1 << (a + 1)) - 1)
            for b in _bits(rest):
                if rest & ~g.adj[b] & ~((1 << (b + 1)) - 1):
                    return False
    return True


@dataclass(frozen=True, slots=True)
class DegreeProfile:
    """Degree extremes plus the leaf/support structure.

    ``delta_star`` is the minimum degree over vertices that are neither leaves
    nor supports, and 2 when no such vertex exists.  Isolated vertices are
    neither leaves nor supports, so they enter that minimum; on isolate-free
    graphs ``delta_star >= 2`` always holds.
    """

    delta: int
    Delta: int
    leaves: frozenset[int]
    supports: frozenset[int]
    delta_star: int


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    leaves_mask = 0
    supports_mask = 0
    for v, d in enumerate(degs):
        if d == 1:
            leaves_mask |= 1 << v
            supports_mask |= g.adj[v]
    rest = g.vertex_mask() & ~(leaves_mask | supports_mask)
    if rest:
        delta_star = min(degs[v] for v in _bits(rest))
    else:
        delta_star = 2
    return DegreeProfile(
        delta=min(degs, default=0),
        Delta=max(degs, default=0),
        leaves=frozenset(_bits(leaves_mask)),
        supports=frozenset(_bits(supports_mask)),
        delta_star=delta_star,
    )


# ---------------------------------------------------------------------------
# Small-order isomorphism via minimum adjacency encoding
# ---------------------------------------------------------------------------

def canonical_form(g: Graph, cap: int = ISO_CAP_DEFAULT) -> tuple[int, ...]:
    """Minimum adjacency encoding over all vertex orderings.

    Entry i of the result is the bitset of back-edges from the vertex placed
    at position i to positions 0..i-1.  The search keeps, level by level, every
    partial ordering that still realizes the lexicographically smallest prefix,
    collapsing orderings that present identical adjacency views to the
    remaining vertices.  Intended for characterization tests at small orders.
    """
    n = g.n
    if n > cap:
        raise ValueError(f"order {n} exceeds the isomorphism cap {cap}")
    if n == 0:
        return ()
    prefix: list[int] = []
    # State: (placed tuple, remaining mask); all states share the code prefix.
    states = [((), g.vertex_mask())]
    for _ in range(n):
        best_row = None
        nxt = []
        for placed, remaining in states:
            for v in _bits(remaining):
                row = 0
                for pos, u in enumerate(placed):
                    if g.adj[v] >> u & 1:
                        row |= 1 << pos
                if best_row is None or row < best_row:
                    best_row = row
                    nxt = [(placed + (v,), remaining & ~(1 << v))]
                elif row == best_row:
                    nxt.append((placed + (v,), remaining & ~(1 << v)))
        prefix.append(best_row)  # type: ignore[arg-type]
        seen = set()
        states = []
        for placed, remaining in nxt:
            key = (remaining, tuple(_view(g, placed, remaining)))
            if key not in seen:
                seen.add(key)
                states.append((placed, remaining))
    return tuple(prefix)


def _view(g: Graph, placed: tuple[int, ...], remaining: int) -> Iterator[int]:
    for v in _bits(remaining):
        row = 0
        for pos, u in enumerate(placed):
            if g.adj[v] >> u & 1:
                row |= 1 << pos
        yield row


def are_isomorphic(g: Graph, h: Graph, cap: int = ISO_CAP_DEFAULT) -> bool:
    """True iff some vertex bijection maps edges onto edges (orders <= cap)."""
    if g.n != h.n:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g, cap) == canonical_form(h, cap)
