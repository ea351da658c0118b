"""Exhaustive small-graph verification of the package's bound inventory.

Twenty statements are registered, each with an applicability filter, an
inequality/identity evaluator, and — where an equality characterization
exists — the matching family recognizer checked in both directions: a graph
attaining the bound must be recognized, and a recognized graph must attain
the bound.  A sweep enumerates graphs (every labeled graph by default),
evaluates the requested statements, and aggregates a deterministic report:
its JSON serialization is byte-identical regardless of worker count, so
timing lives on the report object and never in the JSON.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, Sequence

from ._limits import env_max_n
from . import families
from .graph import Graph, canonical_form, complement, parse_graph6, to_graph6
from .reductions import ReductionKind, reduce as gadget_of
from .solvers import ParamKind, oid_scan, param_value, total_domination_value

__all__ = [
    "TheoremId",
    "EnumerationMode",
    "CheckOutcome",
    "EqualityCase",
    "TheoremReport",
    "SweepReport",
    "enumerate_graphs",
    "check_theorem",
    "sweep",
    "toid_product_census_n4",
    "LABELED_FREE_CAP",
    "ENUMERATION_HARD_CAP",
    "VIOLATION_STORE_CAP",
]

LABELED_FREE_CAP = 7
ENUMERATION_HARD_CAP = 8
VIOLATION_STORE_CAP = 100


class EnumerationMode(str, Enum):
    LABELED = "labeled"
    CANONICAL = "canonical"
    FILE = "file"


class TheoremId(str, Enum):
    L1_SUM_BOUNDS = "L1_SUM_BOUNDS"
    L2_TOID_N_MINUS_1 = "L2_TOID_N_MINUS_1"
    T3_PRODUCT_TOID = "T3_PRODUCT_TOID"
    T4_SUM_EQ_PHI = "T4_SUM_EQ_PHI"
    T5_PRODUCT_2OID = "T5_PRODUCT_2OID"
    DOID_SUM_2N = "DOID_SUM_2N"
    DOID_SUM_2N_MINUS_1 = "DOID_SUM_2N_MINUS_1"
    DOID_PRODUCT_LOWER = "DOID_PRODUCT_LOWER"
    T_DELTA_UPPER = "T_DELTA_UPPER"
    E8_IDENTITY = "E8_IDENTITY"
    CLAWFREE_LOWER = "CLAWFREE_LOWER"
    CLAWFREE_EQUALITY = "CLAWFREE_EQUALITY"
    CUBIC_CLAWFREE_SANDWICH = "CUBIC_CLAWFREE_SANDWICH"
    TRIANGLEFREE_ALPHA = "TRIANGLEFREE_ALPHA"
    TRIANGLEFREE_UPPER = "TRIANGLEFREE_UPPER"
    DELTASTAR_LOWER = "DELTASTAR_LOWER"
    TREE_COROLLARY = "TREE_COROLLARY"
    P1_LOWER_AND_GCAL = "P1_LOWER_AND_GCAL"
    BIPARTITE_UPPER = "BIPARTITE_UPPER"
    NP_IDENTITY = "NP_IDENTITY"


@dataclass(frozen=True, slots=True)
class EqualityCase:
    values: dict
    recognized: bool | None  # None when the statement has no characterization


@dataclass(frozen=True, slots=True)
class CheckOutcome:
    status: str  # "pass" | "fail" | "skipped"
    equalities: tuple[EqualityCase, ...] = ()
    detail: str = ""

    @property
    def label(self) -> str:
        if self.status == "skipped":
            return "SKIPPED"
        if self.status == "fail":
            return "APPLICABLE_FAIL"
        return "EQUALITY_CASE" if self.equalities else "APPLICABLE_PASS"


_SKIP = CheckOutcome("skipped")
_PASS = CheckOutcome("pass")


def _fail(detail: str) -> CheckOutcome:
    return CheckOutcome("fail", detail=detail)


def _hit(values: dict, recognized: bool | None = None) -> EqualityCase:
    return EqualityCase(values=values, recognized=recognized)


# ---------------------------------------------------------------------------
# Per-graph fact cache
# ---------------------------------------------------------------------------

_UNSET = object()


class _Facts:
    """Lazily computed invariants shared by all statement evaluators."""

    __slots__ = (
        "g", "n", "adj", "full", "degs", "m", "delta", "Delta",
        "_comp", "_scan_g", "_scan_c", "_connected", "_bipartite",
        "_trianglefree", "_clawfree", "_profile", "_gamma_t", "_g6",
        "_in_phi", "_in_psi_either", "_lambda_either", "_theta_either",
        "_in_omega", "_in_gcal",
    )

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.full = g.vertex_mask()
        self.degs = [row.bit_count() for row in g.adj]
        self.m = sum(self.degs) // 2
        self.delta = min(self.degs, default=0)
        self.Delta = max(self.degs, default=0)
        self._comp = _UNSET
        self._scan_g = _UNSET
        self._scan_c = _UNSET
        self._connected = _UNSET
        self._bipartite = _UNSET
        self._trianglefree = _UNSET
        self._clawfree = _UNSET
        self._profile = _UNSET
        self._gamma_t = _UNSET
        self._g6 = _UNSET
        self._in_phi = _UNSET
        self._in_psi_either = _UNSET
        self._lambda_either = _UNSET
        self._theta_either = _UNSET
        self._in_omega = _UNSET
        self._in_gcal = _UNSET

    # -- raw graphs -----------------------------------------------------
    @property
    def comp(self) -> Graph:
        if self._comp is _UNSET:
            self._comp = complement(self.g)
        return self._comp

    @property
    def isolated(self) -> bool:
        return self.delta == 0 and self.n > 0

    @property
    def isolated_comp(self) -> bool:
        return self.Delta == self.n - 1 and self.n > 0

    # -- parameter values -----------------------------------------------
    def _scan(self, side: str):
        if side == "g":
            if self._scan_g is _UNSET:
                self._scan_g = oid_scan(self.n, self.adj)
            return self._scan_g
        if self._scan_c is _UNSET:
            self._scan_c = oid_scan(self.n, self.comp.adj)
        return self._scan_c

    @property
    def alpha(self) -> int:
        return self._scan("g")[0]

    @property
    def toid(self) -> int | None:
        return self._scan("g")[1]

    @property
    def twooid(self) -> int:
        return self._scan("g")[2]

    @property
    def doid(self) -> int | None:
        return self._scan("g")[3]

    @property
    def toid_c(self) -> int | None:
        return self._scan("c")[1]

    @property
    def twooid_c(self) -> int:
        return self._scan("c")[2]

    @property
    def doid_c(self) -> int | None:
        return self._scan("c")[3]

    @property
    def gamma_t(self) -> int | None:
        if self._gamma_t is _UNSET:
            self._gamma_t = total_domination_value(self.n, self.adj)
        return self._gamma_t

    # -- predicates -------------------------------------------------------
    @property
    def connected(self) -> bool:
        if self._connected is _UNSET:
            if self.n <= 1:
                self._connected = True
            else:
                seen = 1
                frontier = 1
                adj = self.adj
                while frontier:
                    grow = 0
                    f = frontier
                    while f:
                        low = f & -f
                        grow |= adj[low.bit_length() - 1]
                        f ^= low
                    frontier = grow & ~seen
                    seen |= frontier
                self._connected = seen == self.full
        return self._connected

    @property
    def bipartite(self) -> bool:
        if self._bipartite is _UNSET:
            from .graph import is_bipartite
            self._bipartite = is_bipartite(self.g)
        return self._bipartite

    @property
    def trianglefree(self) -> bool:
        if self._trianglefree is _UNSET:
            from .graph import is_triangle_free
            self._trianglefree = is_triangle_free(self.g)
        return self._trianglefree

    @property
    def clawfree(self) -> bool:
        if self._clawfree is _UNSET:
            from .graph import is_claw_free
            self._clawfree = is_claw_free(self.g)
        return self._clawfree

    @property
    def tree(self) -> bool:
        return self.m == self.n - 1 and self.connected

    @property
    def profile(self) -> tuple[int, int, int]:
        """(leaf count, support count, delta_star)."""
        if self._profile is _UNSET:
            leaves = 0
            supports = 0
            for v, d in enumerate(self.degs):
                if d == 1:
                    leaves |= 1 << v
                    supports |= self.adj[v]
            rest = self.full & ~(leaves | supports)
            if rest:
                star = min(self.degs[v] for v in _bits(rest))
            else:
                star = 2
            self._profile = (leaves.bit_count(), supports.bit_count(), star)
        return self._profile

    # -- structural one-liners against fixed target graphs ----------------
    @property
    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    @property
    def is_edgeless(self) -> bool:
        return self.m == 0

    @property
    def is_c4(self) -> bool:
        return self.n == 4 and self.delta == 2 and self.Delta == 2

    @property
    def is_c5(self) -> bool:
        return self.n == 5 and self.delta == 2 and self.Delta == 2

    @property
    def is_2p2(self) -> bool:
        return self.n == 4 and self.delta == 1 and self.Delta == 1

    @property
    def is_p3(self) -> bool:
        return self.n == 3 and self.m == 2

    @property
    def is_p4(self) -> bool:
        return self.n == 4 and self.m == 3 and sorted(self.degs) == [1, 1, 2, 2]

    @property
    def is_odd_cycle(self) -> bool:
        return self.n % 2 == 1 and self.delta == 2 and self.Delta == 2 and self.connected

    # -- family recognizers ------------------------------------------------
    @property
    def in_phi(self) -> bool:
        if self._in_phi is _UNSET:
            self._in_phi = families.in_phi(self.g)
        return self._in_phi

    @property
    def in_psi_either(self) -> bool:
        if self._in_psi_either is _UNSET:
            self._in_psi_either = families.in_psi(self.g) or families.in_psi(self.comp)
        return self._in_psi_either

    @property
    def lambda_either(self) -> bool:
        if self._lambda_either is _UNSET:
            self._lambda_either = families.in_lambda(self.g) or families.in_lambda(self.comp)
        return self._lambda_either

    @property
    def theta_either(self) -> bool:
        if self._theta_either is _UNSET:
            self._theta_either = families.in_theta(self.g) or families.in_theta(self.comp)
        return self._theta_either

    @property
    def in_omega(self) -> bool:
        if self._in_omega is _UNSET:
            self._in_omega = families.in_omega(self.g)
        return self._in_omega

    @property
    def in_gcal(self) -> bool:
        if self._in_gcal is _UNSET:
            self._in_gcal = families.in_gcal(self.g)
        return self._in_gcal

    @property
    def g6(self) -> str:
        if self._g6 is _UNSET:
            self._g6 = to_graph6(self.g)
        return self._g6


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Statement evaluators
# ---------------------------------------------------------------------------

def _eval_l1(f: _Facts) -> CheckOutcome:
    if f.isolated or f.isolated_comp:
        return _SKIP
    n, t, tc = f.n, f.toid, f.toid_c
    s = t + tc
    if not n - 1 <= s <= 2 * n - 1:
        return _fail(f"sum {s} outside [{n - 1}, {2 * n - 1}]")
    recognized = f.is_c4 or f.is_2p2
    if s == 2 * n - 1:
        if not recognized:
            return _fail(f"upper equality {s} on an unrecognized graph")
        return CheckOutcome("pass", ( _hit({"toid": t, "toid_comp": tc, "side": "upper"}, True),))
    if recognized:
        return _fail("recognized graph misses the upper equality")
    return _PASS


def _eval_l2(f: _Facts) -> CheckOutcome:
    if f.n < 2 or not f.connected:
        return _SKIP
    t = f.toid
    member = f.is_p3 or f.is_c4 or f.is_c5 or (f.is_complete and f.n >= 3)
    if (t == f.n - 1) != member:
        return _fail(f"toid={t} vs family membership {member}")
    if t == f.n - 1:
        return CheckOutcome("pass", (_hit({"toid": t}, True),))
    return _PASS


def _eval_t3(f: _Facts) -> CheckOutcome:
    if f.n < 5 or f.isolated or f.isolated_comp:
        return _SKIP
    n, t, tc = f.n, f.toid, f.toid_c
    prod = t * tc
    lo, hi = 2 * n - 6, (n - 1) ** 2
    if not lo <= prod <= hi:
        return _fail(f"product {prod} outside [{lo}, {hi}]")
    eqs = []
    if prod == lo:
        if not f.lambda_either:
            return _fail(f"lower equality {prod} on an unrecognized graph")
        eqs.append(_hit({"toid": t, "toid_comp": tc, "side": "lower"}, True))
    elif f.lambda_either:
        return _fail("recognized graph misses the lower equality")
    if prod == hi:
        if not f.is_c5:
            return _fail(f"upper equality {prod} on a non-C5 graph")
        eqs.append(_hit({"toid": t, "toid_comp": tc, "side": "upper"}, True))
    elif f.is_c5:
        return _fail("C5 misses the upper equality")
    return CheckOutcome("pass", tuple(eqs)) if eqs else _PASS


def _eval_t4(f: _Facts) -> CheckOutcome:
    if f.isolated or f.isolated_comp:
        return _SKIP
    t, tc = f.toid, f.toid_c
    s = t + tc
    member = f.in_phi
    if (s == f.n - 1) != member:
        return _fail(f"sum={s} vs membership {member}")
    if s == f.n - 1:
        return CheckOutcome("pass", (_hit({"toid": t, "toid_comp": tc}, True),))
    return _PASS


def _eval_t5(f: _Facts) -> CheckOutcome:
    if f.n < 4:
        return _SKIP
    n, a, b = f.n, f.twooid, f.twooid_c
    prod = a * b
    lo, hi = 3 * n - 12, n * (n - 1)
    if not lo <= prod <= hi:
        return _fail(f"product {prod} outside [{lo}, {hi}]")
    eqs = []
    if prod == lo:
        if not f.in_psi_either:
            return _fail(f"lower equality {prod} on an unrecognized graph")
        eqs.append(_hit({"twooid": a, "twooid_comp": b, "side": "lower"}, True))
    elif f.in_psi_either:
        return _fail("recognized graph misses the lower equality")
    extremal = f.is_complete or f.is_edgeless
    if prod == hi:
        if not extremal:
            return _fail(f"upper equality {prod} off K_n / its complement")
        eqs.append(_hit({"twooid": a, "twooid_comp": b, "side": "upper"}, True))
    elif extremal:
        return _fail("K_n or its complement misses the upper equality")
    return CheckOutcome("pass", tuple(eqs)) if eqs else _PASS


def _eval_doid_sum_2n(f: _Facts) -> CheckOutcome:
    if f.isolated or f.isolated_comp:
        return _SKIP
    d, dc = f.doid, f.doid_c
    s = d + dc
    if s > 2 * f.n:
        return _fail(f"sum {s} above 2n")
    if (s == 2 * f.n) != f.is_p4:
        return _fail(f"sum={s} vs P4 membership {f.is_p4}")
    if s == 2 * f.n:
        return CheckOutcome("pass", (_hit({"doid": d, "doid_comp": dc}, True),))
    return _PASS


def _eval_doid_sum_2n_minus_1(f: _Facts) -> CheckOutcome:
    if f.n < 5 or f.isolated or f.isolated_comp:
        return _SKIP
    d, dc = f.doid, f.doid_c
    s = d + dc
    if s > 2 * f.n - 1:
        return _fail(f"sum {s} above 2n-1")
    member = f.theta_either
    if (s == 2 * f.n - 1) != member:
        return _fail(f"sum={s} vs membership {member}")
    if s == 2 * f.n - 1:
        return CheckOutcome("pass", (_hit({"doid": d, "doid_comp": dc}, True),))
    return _PASS


def _eval_doid_product_lower(f: _Facts) -> CheckOutcome:
    if f.isolated or f.isolated_comp:
        return _SKIP
    d, dc = f.doid, f.doid_c
    prod = d * dc
    lo = 3 * f.n - 12
    if prod < lo:
        return _fail(f"product {prod} below {lo}")
    member = f.in_psi_either
    if (prod == lo) != member:
        return _fail(f"product={prod} vs membership {member}")
    if prod == lo:
        return CheckOutcome("pass", (_hit({"doid": d, "doid_comp": dc}, True),))
    return _PASS


def _eval_delta_upper(f: _Facts) -> CheckOutcome:
    # Connectivity mirrors the coloring argument behind the bound; without it
    # unions such as two triangles break the stated inequality.
    if f.delta < 2 or not f.connected or f.is_complete or f.is_odd_cycle:
        return _SKIP
    n, d = f.n, f.Delta
    val = f.twooid
    if val * d > (d - 1) * n:
        return _fail(f"{val} above (Delta-1)n/Delta with Delta={d}")
    if val * d == (d - 1) * n:
        return CheckOutcome("pass", (_hit({"twooid": val, "max_degree": d}),))
    return _PASS


def _eval_e8(f: _Facts) -> CheckOutcome:
    if f.delta < 2:
        return _SKIP
    if f.twooid != f.n - f.alpha:
        return _fail(f"twooid {f.twooid} != n - alpha = {f.n - f.alpha}")
    return _PASS


def _eval_clawfree_lower(f: _Facts) -> CheckOutcome:
    if f.isolated or not f.clawfree:
        return _SKIP
    n, d = f.n, f.delta
    for name, val in (("toid", f.toid), ("twooid", f.twooid), ("doid", f.doid)):
        if val * (d + 2) < d * n:
            return _fail(f"{name}={val} below delta*n/(delta+2)")
    if f.twooid * (d + 2) == d * n:
        values = {"toid": f.toid, "twooid": f.twooid, "doid": f.doid, "min_degree": d}
        return CheckOutcome("pass", (_hit(values),))
    return _PASS


def _eval_clawfree_equality(f: _Facts) -> CheckOutcome:
    if f.delta < 3 or not f.clawfree:
        return _SKIP
    if not f.toid == f.twooid == f.doid:
        return _fail(f"values differ: {f.toid}, {f.twooid}, {f.doid}")
    return _PASS


def _eval_cubic_sandwich(f: _Facts) -> CheckOutcome:
    if not (f.delta == 3 and f.Delta == 3) or f.is_complete or not f.clawfree:
        return _SKIP
    val = f.twooid
    if not f.toid == val == f.doid:
        return _fail(f"values differ: {f.toid}, {val}, {f.doid}")
    if 5 * val < 3 * f.n:
        return _fail(f"{val} below 3n/5")
    if 3 * val > 2 * f.n:
        return _fail(f"{val} above 2n/3")
    lower = 5 * val == 3 * f.n
    upper = 3 * val == 2 * f.n
    if lower or upper:
        values = {"value": val, "lower_tight": lower, "upper_tight": upper}
        return CheckOutcome("pass", (_hit(values),))
    return _PASS


def _eval_trianglefree_alpha(f: _Facts) -> CheckOutcome:
    if f.n == 0 or not f.trianglefree:
        return _SKIP
    if f.alpha * (3 + f.Delta) < 2 * f.n:
        return _fail(f"alpha={f.alpha} below 2n/(3+Delta)")
    if f.alpha * (3 + f.Delta) == 2 * f.n:
        return CheckOutcome("pass", (_hit({"alpha": f.alpha, "max_degree": f.Delta}),))
    return _PASS


def _eval_trianglefree_upper(f: _Facts) -> CheckOutcome:
    if f.delta < 2 or not f.trianglefree:
        return _SKIP
    val, d = f.twooid, f.Delta
    if val * (d + 3) > (d + 1) * f.n:
        return _fail(f"{val} above (Delta+1)n/(Delta+3)")
    if val * (d + 3) == (d + 1) * f.n:
        return CheckOutcome("pass", (_hit({"twooid": val, "max_degree": d}),))
    return _PASS


def _eval_deltastar_lower(f: _Facts) -> CheckOutcome:
    if f.isolated or f.n == 0:
        return _SKIP
    ell, s, star = f.profile
    d = f.doid
    lhs = d * (2 * star - 1)
    rhs = 2 * star * f.n - 2 * f.m + ell - s
    if lhs < rhs:
        return _fail(f"doid={d} below the delta* bound")
    member = f.in_omega
    if (lhs == rhs) != member:
        return _fail(f"tightness {lhs == rhs} vs membership {member}")
    if lhs == rhs:
        values = {"doid": d, "delta_star": star, "size": f.m, "leaves": ell, "supports": s}
        return CheckOutcome("pass", (_hit(values, True),))
    return _PASS


def _eval_tree(f: _Facts) -> CheckOutcome:
    if f.n < 2 or not f.tree:
        return _SKIP
    ell, s, _ = f.profile
    d = f.doid
    if 3 * d < 2 * f.n + ell - s + 2:
        return _fail(f"doid={d} below (2n+l-s+2)/3")
    if 3 * d == 2 * f.n + ell - s + 2:
        return CheckOutcome("pass", (_hit({"doid": d, "leaves": ell, "supports": s}),))
    return _PASS


def _eval_p1(f: _Facts) -> CheckOutcome:
    # Edgeless graphs attain the bound but have an empty attachment side,
    # which the family excludes, so they are filtered out.
    if f.m == 0:
        return _SKIP
    val = f.twooid
    if 2 * val < 2 * f.n - f.m:
        return _fail(f"twooid={val} below n - m/2")
    member = f.in_gcal
    if (2 * val == 2 * f.n - f.m) != member:
        return _fail(f"tightness {2 * val == 2 * f.n - f.m} vs membership {member}")
    if 2 * val == 2 * f.n - f.m:
        return CheckOutcome("pass", (_hit({"twooid": val, "size": f.m}, True),))
    return _PASS


def _eval_bipartite_upper(f: _Facts) -> CheckOutcome:
    if f.delta < 2 or not f.bipartite:
        return _SKIP
    if f.toid != f.doid:
        return _fail(f"toid {f.toid} != doid {f.doid} at delta >= 2")
    gt = f.gamma_t
    if 2 * f.doid > f.n + gt:
        return _fail(f"doid={f.doid} above (n + gamma_t)/2")
    if 2 * f.doid == f.n + gt:
        return CheckOutcome("pass", (_hit({"doid": f.doid, "gamma_t": gt}),))
    return _PASS


#: Sweep-side gate for the gadget identity: gadgets have 6n vertices, so the
#: exhaustive check runs where the exact solvers stay comfortable.
NP_IDENTITY_MAX_N = 5


def _eval_np_identity(f: _Facts) -> CheckOutcome:
    if f.n < 1 or f.delta == 0 or f.n > NP_IDENTITY_MAX_N:
        return _SKIP
    expected = 3 * f.n - f.alpha
    for kind, pk in (
        (ReductionKind.TWO_OID_GADGET, ParamKind.TWO_OID),
        (ReductionKind.DOID_GADGET, ParamKind.DOID),
    ):
        val = param_value(gadget_of(f.g, kind), pk)
        if val != expected:
            return _fail(f"{kind.value} gadget gives {val}, expected {expected}")
    return _PASS


_EVALUATORS = {
    TheoremId.L1_SUM_BOUNDS: _eval_l1,
    TheoremId.L2_TOID_N_MINUS_1: _eval_l2,
    TheoremId.T3_PRODUCT_TOID: _eval_t3,
    TheoremId.T4_SUM_EQ_PHI: _eval_t4,
    TheoremId.T5_PRODUCT_2OID: _eval_t5,
    TheoremId.DOID_SUM_2N: _eval_doid_sum_2n,
    TheoremId.DOID_SUM_2N_MINUS_1: _eval_doid_sum_2n_minus_1,
    TheoremId.DOID_PRODUCT_LOWER: _eval_doid_product_lower,
    TheoremId.T_DELTA_UPPER: _eval_delta_upper,
    TheoremId.E8_IDENTITY: _eval_e8,
    TheoremId.CLAWFREE_LOWER: _eval_clawfree_lower,
    TheoremId.CLAWFREE_EQUALITY: _eval_clawfree_equality,
    TheoremId.CUBIC_CLAWFREE_SANDWICH: _eval_cubic_sandwich,
    TheoremId.TRIANGLEFREE_ALPHA: _eval_trianglefree_alpha,
    TheoremId.TRIANGLEFREE_UPPER: _eval_trianglefree_upper,
    TheoremId.DELTASTAR_LOWER: _eval_deltastar_lower,
    TheoremId.TREE_COROLLARY: _eval_tree,
    TheoremId.P1_LOWER_AND_GCAL: _eval_p1,
    TheoremId.BIPARTITE_UPPER: _eval_bipartite_upper,
    TheoremId.NP_IDENTITY: _eval_np_identity,
}


def check_theorem(theorem: TheoremId, g: Graph) -> CheckOutcome:
    """Evaluate one registered statement on one graph."""
    return _EVALUATORS[TheoremId(theorem)](_Facts(g))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _edge_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _check_enum_cap(n: int, allow_large: bool) -> None:
    cap = max(ENUMERATION_HARD_CAP, env_max_n() or 0)
    if n > cap:
        raise ValueError(f"order {n} exceeds the enumeration cap {cap}")
    if n > LABELED_FREE_CAP and not allow_large and (env_max_n() or 0) < n:
        raise ValueError(
            f"order {n} enumerates {2 ** (n * (n - 1) // 2)} labeled graphs; "
            f"pass allow_large=True (or set OIDOM_MAX_N) to confirm"
        )


def _labeled_adj(n: int, mask: int, pairs: Sequence[tuple[int, int]]) -> list[int]:
    adj = [0] * n
    while mask:
        low = mask & -mask
        u, v = pairs[low.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        mask ^= low
    return adj


def enumerate_graphs(
    n: int | None,
    mode: EnumerationMode = EnumerationMode.LABELED,
    source: str | None = None,
    allow_large: bool = False,
) -> Iterator[Graph]:
    """Stream graphs of order ``n``: every labeled graph (mask order), one
    canonical representative per isomorphism class, or the parsed lines of a
    graph6 file (``n`` is ignored for files)."""
    mode = EnumerationMode(mode)
    if mode is EnumerationMode.FILE:
        if source is None:
            raise ValueError("FILE mode needs a source path")
        with open(source, "r", encoding="ascii") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    yield parse_graph6(line)
                except ValueError as exc:
                    raise ValueError(f"{source}:{lineno}: {exc}") from exc
        return
    if n is None or n < 0:
        raise ValueError("labeled/canonical enumeration needs an order n >= 0")
    _check_enum_cap(n, allow_large)
    pairs = _edge_pairs(n)
    total = 1 << len(pairs)
    if mode is EnumerationMode.LABELED:
        for mask in range(total):
            yield Graph(n, _labeled_adj(n, mask, pairs))
        return
    seen: set[tuple[int, ...]] = set()
    for mask in range(total):
        g = Graph(n, _labeled_adj(n, mask, pairs))
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g


# ---------------------------------------------------------------------------
# Sweep
# ---------------------------------------------------------------------------

@dataclass
class TheoremReport:
    theorem: TheoremId
    checked: int = 0
    skipped: int = 0
    violations: list[str] | None = None
    violations_total: int = 0
    equality_cases: list[dict] | None = None

    def __post_init__(self):
        if self.violations is None:
            self.violations = []
        if self.equality_cases is None:
            self.equality_cases = []


@dataclass
class SweepReport:
    orders: list[int]
    mode: str
    theorems: list[TheoremReport]
    wall_ms: float = 0.0  # informational; deliberately absent from the JSON

    @property
    def passed(self) -> bool:
        return all(t.violations_total == 0 for t in self.theorems)

    def to_json_dict(self) -> dict:
        return {
            "meta": {"orders": self.orders, "mode": self.mode},
            "theorems": [
                {
                    "id": t.theorem.value,
                    "checked": t.checked,
                    "skipped": t.skipped,
                    "violations": t.violations,
                    "violations_total": t.violations_total,
                    "equality_cases": t.equality_cases,
                }
                for t in self.theorems
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"


def _normalize_ids(ids) -> list[TheoremId]:
    if ids is None:
        return list(TheoremId)
    wanted = {TheoremId(i) for i in ids}
    return [t for t in TheoremId if t in wanted]


def _evaluate_into(acc: dict, ids: Sequence[TheoremId], f: _Facts) -> None:
    for tid in ids:
        out = _EVALUATORS[tid](f)
        slot = acc[tid.value]
        if out.status == "skipped":
            slot[0] += 1
        elif out.status == "fail":
            slot[1].append(f.g6)
        elif out.equalities:
            for eq in out.equalities:
                slot[2].append((f.g6, eq.values, eq.recognized))


def _new_acc(ids: Sequence[TheoremId]) -> dict:
    return {tid.value: [0, [], []] for tid in ids}


def _merge_acc(into: dict, other: dict) -> None:
    for key, (sk, viols, eqs) in other.items():
        slot = into[key]
        slot[0] += sk
        slot[1].extend(viols)
        slot[2].extend(eqs)


def _labeled_task(args) -> dict:
    id_values, n, lo, hi = args
    ids = [TheoremId(v) for v in id_values]
    pairs = _edge_pairs(n)
    acc = _new_acc(ids)
    for mask in range(lo, hi):
        f = _Facts(Graph(n, _labeled_adj(n, mask, pairs)))
        _evaluate_into(acc, ids, f)
    return acc


def _g6_task(args) -> dict:
    id_values, lines = args
    ids = [TheoremId(v) for v in id_values]
    acc = _new_acc(ids)
    for line in lines:
        f = _Facts(parse_graph6(line))
        _evaluate_into(acc, ids, f)
    return acc


def _chunk_ranges(total: int, chunk: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]


def sweep(
    n_min: int,
    n_max: int,
    ids=None,
    mode: EnumerationMode = EnumerationMode.LABELED,
    jobs: int = 1,
    source: str | None = None,
    allow_large: bool = False,
) -> SweepReport:
    """Aggregate ``check_theorem`` over the enumerated stream.

    The report content is deterministic and independent of ``jobs``: partial
    results merge by an order-insensitive fold and every stored list is
    sorted before serialization.
    """
    t0 = time.perf_counter()
    mode = EnumerationMode(mode)
    ids = _normalize_ids(ids)
    id_values = tuple(t.value for t in ids)
    acc = _new_acc(ids)
    checked = 0

    tasks: list = []
    runner = None
    if mode is EnumerationMode.LABELED:
        for n in range(n_min, n_max + 1):
            _check_enum_cap(n, allow_large)
            total = 1 << (n * (n - 1) // 2)
            chunk = max(256, min(1 << 15, total // 64 or total))
            tasks.extend((id_values, n, lo, hi) for lo, hi in _chunk_ranges(total, chunk))
            checked += total
        runner = _labeled_task
    else:
        lines: list[str] = []
        if mode is EnumerationMode.CANONICAL:
            for n in range(n_min, n_max + 1):
                for g in enumerate_graphs(n, EnumerationMode.CANONICAL, allow_large=allow_large):
                    lines.append(to_graph6(g))
        else:
            for g in enumerate_graphs(None, EnumerationMode.FILE, source=source):
                if n_min <= g.n <= n_max:
                    lines.append(to_graph6(g))
        checked = len(lines)
        chunk = max(64, len(lines) // 64 or 1)
        tasks.extend(
            (id_values, lines[lo:hi]) for lo, hi in _chunk_ranges(len(lines), chunk)
        )
        runner = _g6_task

    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            _merge_acc(acc, runner(task))
    else:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            for part in pool.imap_unordered(runner, tasks):
                _merge_acc(acc, part)

    theorems = []
    for tid in ids:
        sk, viols, eqs = acc[tid.value]
        viols.sort()
        eqs.sort(key=lambda item: (item[0], json.dumps(item[1], sort_keys=True)))
        theorems.append(
            TheoremReport(
                theorem=tid,
                checked=checked,
                skipped=sk,
                violations=viols[:VIOLATION_STORE_CAP],
                violations_total=len(viols),
                equality_cases=[
                    {"g6": g6, "values": values, "recognized": rec}
                    for g6, values, rec in eqs
                ],
            )
        )
    report = SweepReport(
        orders=list(range(n_min, n_max + 1)),
        mode=mode.value,
        theorems=theorems,
        wall_ms=(time.perf_counter() - t0) * 1000.0,
    )
    return report


# ---------------------------------------------------------------------------
# The order-4 product census kept separate from the general product theorem
# ---------------------------------------------------------------------------

def toid_product_census_n4() -> dict:
    """Census of toid(G) * toid(complement) over all labeled 4-vertex graphs
    with both sides isolate-free; the product only ever lands on 4 or 12, the
    latter exactly on the C4 / 2P2 pairs."""
    counts: dict[int, int] = {}
    pair_count = 0
    for g in enumerate_graphs(4, EnumerationMode.LABELED):
        f = _Facts(g)
        if f.isolated or f.isolated_comp:
            continue
        prod = f.toid * f.toid_c
        counts[prod] = counts.get(prod, 0) + 1
        if f.is_c4 or f.is_2p2:
            pair_count += 1
            if prod != 12:
                raise AssertionError("C4/2P2 pair off the expected product")
    return {"products": counts, "c4_2p2_graphs": pair_count}
