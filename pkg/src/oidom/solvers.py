"""Exact solvers for the outer-independent domination parameters.

Seven parameters are supported: the three outer-independent numbers (total,
2-, and double), the independence number alpha, and the classical support
parameters gamma, gamma_t and gamma_x2.

The outer-independent solvers work on the complement side: a set S is valid
iff I = V \\ S is independent, every member of I clears a degree floor (1 for
total, 2 for the other two), and — for the total and double variants — every
vertex keeps a neighbor outside I.  Minimizing |S| is therefore a constrained
maximum-independent-set search, which branch and bound handles comfortably at
the 30-to-40-vertex orders the reduction gadgets produce.

All solvers return, deterministically, the optimal certificate whose sorted
vertex list is lexicographically smallest; ``solve_naive`` realizes the same
contract by plain subset enumeration and serves as the independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .graph import Graph

__all__ = [
    "ParamKind",
    "ParamResult",
    "check_set",
    "violation_reason",
    "solve",
    "solve_naive",
    "param_value",
    "NAIVE_CAP_DEFAULT",
]

NAIVE_CAP_DEFAULT = 20


class ParamKind(str, Enum):
    TOID = "toid"
    TWO_OID = "2oid"
    DOID = "doid"
    ALPHA = "alpha"
    GAMMA = "gamma"
    GAMMA_T = "gamma-t"
    GAMMA_X2 = "gamma-x2"


#: Parameters that are well defined only on graphs without isolated vertices.
UNDEFINED_ON_ISOLATES = frozenset(
    {ParamKind.TOID, ParamKind.DOID, ParamKind.GAMMA_T, ParamKind.GAMMA_X2}
)

_MAXIMIZED = frozenset({ParamKind.ALPHA})

# Complement-side search profile: (degree floor on I, outside-support needed).
_I_SIDE = {
    ParamKind.ALPHA: (0, False),
    ParamKind.TOID: (1, True),
    ParamKind.TWO_OID: (2, False),
    ParamKind.DOID: (2, True),
}

# Direct S-side profile: (required hits, closed neighborhood).
_S_SIDE = {
    ParamKind.GAMMA: (1, True),
    ParamKind.GAMMA_T: (1, False),
    ParamKind.GAMMA_X2: (2, True),
}


@dataclass(frozen=True, slots=True)
class ParamResult:
    """Parameter value plus one optimal certificate, or the undefined marker.

    ``value is None`` exactly when the parameter is undefined for the graph
    (an isolated vertex for the total/double variants); the certificate is
    present iff the value is.
    """

    value: int | None
    certificate: frozenset[int] | None

    @property
    def defined(self) -> bool:
        return self.value is not None


def _mask(g: Graph, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def _set(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def violation_reason(g: Graph, s: Iterable[int], kind: ParamKind) -> str | None:
    """Name the first definitional condition violated by ``s``, or None if valid."""
    kind = ParamKind(kind)
    smask = _mask(g, s)
    n, adj = g.n, g.adj
    outside = g.vertex_mask() & ~smask

    if kind is ParamKind.ALPHA:
        for v in range(n):
            if smask >> v & 1 and adj[v] & smask:
                u = (adj[v] & smask).bit_length() - 1
                return f"set is not independent: edge {v}-{u} inside it"
        return None

    if kind in (ParamKind.TOID, ParamKind.TWO_OID, ParamKind.DOID):
        for v in range(n):
            if outside >> v & 1 and adj[v] & outside:
                u = (adj[v] & outside).bit_length() - 1
                return f"complement is not independent: edge {v}-{u} outside the set"

    if kind in (ParamKind.TOID, ParamKind.GAMMA_T):
        for v in range(n):
            if not adj[v] & smask:
                return f"vertex {v} has no neighbor in the set"
    elif kind is ParamKind.GAMMA:
        for v in range(n):
            if not outside >> v & 1:
                continue
            if not adj[v] & smask:
                return f"vertex {v} is not dominated"
    elif kind is ParamKind.TWO_OID:
        for v in range(n):
            if outside >> v & 1 and (adj[v] & smask).bit_count() < 2:
                k = (adj[v] & smask).bit_count()
                return f"vertex {v} has only {k} neighbor(s) in the set, needs 2"
    else:  # DOID, GAMMA_X2: closed neighborhood hits
        for v in range(n):
            hits = (adj[v] & smask).bit_count() + (smask >> v & 1)
            if hits < 2:
                return f"vertex {v} has |N[v] ∩ S| = {hits}, needs 2"
    return None


def check_set(g: Graph, s: Iterable[int], kind: ParamKind) -> bool:
    """True iff ``s`` satisfies the exact definitional conditions for ``kind``."""
    return violation_reason(g, s, kind) is None


# ---------------------------------------------------------------------------
# Complement-side branch and bound
# ---------------------------------------------------------------------------

def _eligible_mask(n: int, adj: tuple[int, ...], floor: int) -> int:
    if floor == 0:
        return (1 << n) - 1
    elig = 0
    for v in range(n):
        if adj[v].bit_count() >= floor:
            elig |= 1 << v
    return elig


def _max_constrained_indep(n: int, adj: tuple[int, ...], floor: int, outside: bool) -> int:
    """Largest independent I with deg(v) >= floor on members and, when
    ``outside`` is set, every vertex keeping a neighbor not in I.

    Assumes the caller ruled out isolated vertices when ``outside`` is set
    (no valid I exists in that case).
    """
    elig = _eligible_mask(n, adj, floor)
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    best = 0  # I = empty is always valid here

    def grow(cand: int, imask: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + cand.bit_count() <= best:
            return
        pick = -1
        for v in order:
            if cand >> v & 1:
                pick = v
                break
        bit = 1 << pick
        # Include branch, unless it strands a vertex whose whole
        # neighborhood would then lie inside I.
        if outside:
            broken = False
            inew = imask | bit
            row = adj[pick]
            while row:
                low = row & -row
                u = low.bit_length() - 1
                if not adj[u] & ~inew:
                    broken = True
                    break
                row ^= low
            if not broken:
                grow(cand & ~adj[pick] & ~bit, inew, size + 1)
        else:
            grow(cand & ~adj[pick] & ~bit, imask | bit, size + 1)
        grow(cand & ~bit, imask, size)

    grow(elig, 0, 0)
    return best


def _lex_constrained_indep(
    n: int,
    adj: tuple[int, ...],
    floor: int,
    outside: bool,
    target: int,
    prefer_in: bool,
) -> int:
    """First valid I of size ``target`` in preference-order DFS over vertex
    indices: ``prefer_in`` tries membership first (lex-min I), otherwise
    exclusion first (lex-min complement)."""
    elig = _eligible_mask(n, adj, floor)
    full = (1 << n) - 1

    def walk(v: int, imask: int, forbidden: int, size: int) -> int | None:
        if size == target:
            return imask  # remaining vertices stay out; constraints are monotone-safe
        if v == n:
            return None
        avail = elig & ~forbidden & (full << v)
        if size + avail.bit_count() < target:
            return None
        bit = 1 << v
        can_include = bool(avail & bit)
        if can_include and outside:
            inew = imask | bit
            row = adj[v]
            while row:
                low = row & -row
                u = low.bit_length() - 1
                if not adj[u] & ~inew:
                    can_include = False
                    break
                row ^= low
        branches = (True, False) if prefer_in else (False, True)
        for take in branches:
            if take:
                if not can_include:
                    continue
                got = walk(v + 1, imask | bit, forbidden | adj[v] | bit, size + 1)
            else:
                got = walk(v + 1, imask, forbidden, size)
            if got is not None:
                return got
        return None

    got = walk(0, 0, 0, 0)
    if got is None:
        raise AssertionError("no certificate at the proven optimum")
    return got


# ---------------------------------------------------------------------------
# Direct S-side branch and bound (gamma, gamma_t, gamma_x2)
# ---------------------------------------------------------------------------

def _min_covering(n: int, adj: tuple[int, ...], need: int, closed: bool) -> int:
    cov = tuple((adj[v] | (1 << v)) if closed else adj[v] for v in range(n))
    have = [0] * n
    # Undecided coverers per vertex; have[u] + pot[u] only drops on exclusions,
    # so checking the sum there keeps every reached leaf valid.
    pot = [row.bit_count() for row in cov]
    best = n  # S = V is valid under the caller's definedness preconditions

    def walk(v: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        if v == n:
            best = size
            return
        row = cov[v]
        # Include v in S.
        r = row
        while r:
            low = r & -r
            u = low.bit_length() - 1
            have[u] += 1
            pot[u] -= 1
            r ^= low
        walk(v + 1, size + 1)
        r = row
        while r:
            low = r & -r
            u = low.bit_length() - 1
            have[u] -= 1
            pot[u] += 1
            r ^= low
        # Leave v out of S.
        ok = True
        r = row
        while r:
            low = r & -r
            u = low.bit_length() - 1
            pot[u] -= 1
            if have[u] + pot[u] < need:
                ok = False
            r ^= low
        if ok:
            walk(v + 1, size)
        r = row
        while r:
            low = r & -r
            pot[low.bit_length() - 1] += 1
            r ^= low

    walk(0, 0)
    return best


def _lex_covering(n: int, adj: tuple[int, ...], need: int, closed: bool, target: int) -> int:
    cov = tuple((adj[v] | (1 << v)) if closed else adj[v] for v in range(n))
    have = [0] * n
    pot = [row.bit_count() for row in cov]

    def walk(v: int, smask: int, size: int) -> int | None:
        if v == n:
            return smask if size == target else None
        if size + (n - v) < target or size > target:
            return None
        row = cov[v]
        if size < target:
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                have[u] += 1
                pot[u] -= 1
                r ^= low
            got = walk(v + 1, smask | (1 << v), size + 1)
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                have[u] -= 1
                pot[u] += 1
                r ^= low
            if got is not None:
                return got
        ok = True
        r = row
        while r:
            low = r & -r
            u = low.bit_length() - 1
            pot[u] -= 1
            if have[u] + pot[u] < need:
                ok = False
            r ^= low
        got = walk(v + 1, smask, size) if ok else None
        r = row
        while r:
            low = r & -r
            pot[low.bit_length() - 1] += 1
            r ^= low
        return got

    got = walk(0, 0, 0)
    if got is None:
        raise AssertionError("no certificate at the proven optimum")
    return got


# ---------------------------------------------------------------------------
# Public solvers
# ---------------------------------------------------------------------------

def param_value(g: Graph, kind: ParamKind) -> int | None:
    """Value-only fast path with the same semantics as ``solve(...).value``."""
    kind = ParamKind(kind)
    n = g.n
    if n == 0:
        return 0
    if kind in UNDEFINED_ON_ISOLATES and min(g.degrees()) == 0:
        return None
    if kind in _I_SIDE:
        floor, outside = _I_SIDE[kind]
        best = _max_constrained_indep(n, g.adj, floor, outside)
        return best if kind in _MAXIMIZED else n - best
    need, closed = _S_SIDE[kind]
    return _min_covering(n, g.adj, need, closed)


def solve(g: Graph, kind: ParamKind) -> ParamResult:
    """Optimal value with the lexicographically smallest optimal certificate."""
    kind = ParamKind(kind)
    n = g.n
    if n == 0:
        return ParamResult(0, frozenset())
    if kind in UNDEFINED_ON_ISOLATES and min(g.degrees()) == 0:
        return ParamResult(None, None)
    if kind in _I_SIDE:
        floor, outside = _I_SIDE[kind]
        best = _max_constrained_indep(n, g.adj, floor, outside)
        if kind in _MAXIMIZED:
            imask = _lex_constrained_indep(n, g.adj, floor, outside, best, prefer_in=True)
            return ParamResult(best, _set(imask))
        imask = _lex_constrained_indep(n, g.adj, floor, outside, best, prefer_in=False)
        return ParamResult(n - best, _set(g.vertex_mask() & ~imask))
    need, closed = _S_SIDE[kind]
    best = _min_covering(n, g.adj, need, closed)
    smask = _lex_covering(n, g.adj, need, closed, best)
    return ParamResult(best, _set(smask))


def solve_naive(g: Graph, kind: ParamKind, cap: int = NAIVE_CAP_DEFAULT) -> ParamResult:
    """Subset-enumeration oracle with the same contract as ``solve``.

    Enumerates candidate sets by cardinality (increasing for the minimized
    parameters, decreasing for alpha) and lexicographically within each
    cardinality, returning the first valid set.
    """
    kind = ParamKind(kind)
    n = g.n
    if n > cap:
        raise ValueError(f"order {n} exceeds the enumeration guard {cap}")
    if n == 0:
        return ParamResult(0, frozenset())
    if kind in UNDEFINED_ON_ISOLATES and min(g.degrees()) == 0:
        return ParamResult(None, None)
    sizes = range(n, -1, -1) if kind in _MAXIMIZED else range(n + 1)
    for k in sizes:
        for combo in combinations(range(n), k):
            if check_set(g, combo, kind):
                return ParamResult(k, frozenset(combo))
    raise AssertionError("every parameter admits a valid set on a defined instance")


# ---------------------------------------------------------------------------
# Shared fast scan (value-only, all four complement-side parameters at once)
# ---------------------------------------------------------------------------

def oid_scan(n: int, adj: tuple[int, ...]) -> tuple[int, int | None, int, int | None]:
    """(alpha, toid, 2oid, doid) by one walk over all independent sets.

    Meant for the exhaustive sweeps at small orders, where a single
    enumeration of the independent-set family beats four separate searches.
    The total/double entries are None exactly on graphs with an isolated
    vertex.
    """
    full = (1 << n) - 1
    elig1 = 0
    elig2 = 0
    isolate = False
    for v in range(n):
        d = adj[v].bit_count()
        if d >= 1:
            elig1 |= 1 << v
        else:
            isolate = True
        if d >= 2:
            elig2 |= 1 << v
    best_a = 0
    best_2 = 0
    best_t = -1 if isolate else 0
    best_d = best_t
    stack = [(0, full)]
    while stack:
        imask, cand = stack.pop()
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            inew = imask | low
            sub = cand & ~adj[v]
            if sub:
                stack.append((inew, sub))
            size = inew.bit_count()
            if size > best_a:
                best_a = size
            in2 = not (inew & ~elig2)
            if in2 and size > best_2:
                best_2 = size
            if (size > best_d and in2) or (size > best_t and not (inew & ~elig1)):
                ok = True
                for u in range(n):
                    if not adj[u] & ~inew:
                        ok = False
                        break
                if ok:
                    if size > best_t and not (inew & ~elig1):
                        best_t = size
                    if in2 and size > best_d:
                        best_d = size
    return (
        best_a,
        None if best_t < 0 else n - best_t,
        n - best_2,
        None if best_d < 0 else n - best_d,
    )


def total_domination_value(n: int, adj: tuple[int, ...]) -> int | None:
    """gamma_t by subset scan in increasing cardinality (small orders only)."""
    if n == 0:
        return 0
    if any(row == 0 for row in adj):
        return None
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            smask = 0
            for v in combo:
                smask |= 1 << v
            if all(adj[v] & smask for v in range(n)):
                return k
    raise AssertionError("S = V totally dominates an isolate-free graph")
