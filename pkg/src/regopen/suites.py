"""Exhaustive verification suites over the small-space enumeration, plus the
search for non-homeomorphic space pairs with isomorphic regular-open lattices.

Each suite runs a named family of checks over every instance drawn from the
labeled enumeration up to a ground-size bound, collecting failures rather
than raising, and reports deterministically (instances are generated in a
fixed order and failures keep that order regardless of worker count).
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import cofinite as cof
from .enumeration import (
    EnumerationSpec,
    brute_force_topologies,
    canonical_classes,
    enumerate_dense_subsets,
    enumerate_topologies,
)
from .errors import RegOpenError, SizeGuardExceeded, UnknownSuite
from .ideals import ideal_open_correspondence, ideals, ultrafilters
from .lattice import (
    PairRelation,
    check_boolean_algebra,
    check_distributive,
    check_lattice_tables,
    check_r_lattice,
    find_order_isomorphisms,
    ge_relation,
    regular_open_lattice,
    transport_relation,
    well_inside,
)
from .metric import FiniteMetric, combine_metric, dominates
from .serialize import canonical_json, space_to_dict
from .stone import stone_space
from .topology import Topology, set_of
from .transfer import (
    DenseEmbedding,
    closure_density_check,
    point_recovery,
    restriction_isomorphism,
    separating_witness,
)

Instance = tuple[tuple, Callable[[], dict | None]]


@dataclass
class SuiteReport:
    suite: str
    bound: int
    instances: int
    failures: list[dict]
    wall_time_s: float = 0.0
    schema: int = 1

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {
            "schema": self.schema,
            "suite": self.suite,
            "bound": self.bound,
            "instances": self.instances,
            "failures": self.failures,
            "passed": self.passed,
        }
        # Timing is volatile, so byte-identical reports exclude it by default.
        if include_timing:
            d["wall_time_s"] = self.wall_time_s
        return d

    def to_json(self, include_timing: bool = False) -> str:
        return canonical_json(self.to_dict(include_timing))


def _spaces(bound: int, allow_n5: bool) -> Iterable[Topology]:
    for n in range(1, bound + 1):
        yield from enumerate_topologies(EnumerationSpec(n, allow_n5=allow_n5))


def _space_key(t: Topology) -> tuple:
    return (t.n, len(t.open_masks), t.open_masks)


# -- individual suites ---------------------------------------------------------


def _suite_ux0(bound: int, allow_n5: bool) -> list[Instance]:
    out = []
    for t in _spaces(bound, allow_n5):
        for y in enumerate_dense_subsets(t):
            def check(t=t, y=y):
                try:
                    restriction_isomorphism(DenseEmbedding(t, y))
                except RegOpenError as exc:
                    return {"space": space_to_dict(t), "dense": sorted(y), "error": str(exc)}
                return None

            out.append(((*_space_key(t), tuple(sorted(y))), check))
    return out


def _suite_denso(bound: int, allow_n5: bool) -> list[Instance]:
    out = []
    for t in _spaces(bound, allow_n5):
        for y in enumerate_dense_subsets(t):
            for u in t.open_masks:
                def check(t=t, y=y, u=u):
                    if not closure_density_check(t, y, set_of(u)):
                        return {
                            "space": space_to_dict(t),
                            "dense": sorted(y),
                            "open": sorted(set_of(u)),
                            "error": "closure of the open differs from closure of its dense trace",
                        }
                    return None

                out.append(((*_space_key(t), tuple(sorted(y)), u), check))
    return out


def _suite_uvw(bound: int, allow_n5: bool) -> list[Instance]:
    out = []
    for t in _spaces(bound, allow_n5):
        regs = t.regular_open_masks()
        for u, v in itertools.product(regs, repeat=2):
            if u & ~v == 0:
                continue
            def check(t=t, u=u, v=v):
                try:
                    separating_witness(t, set_of(u), set_of(v))
                except RegOpenError as exc:
                    return {
                        "space": space_to_dict(t),
                        "u": sorted(set_of(u)),
                        "v": sorted(set_of(v)),
                        "error": str(exc),
                    }
                return None

            out.append(((*_space_key(t), u, v), check))
    return out


def _suite_regularity(bound: int, allow_n5: bool) -> list[Instance]:
    """Both routes to 'regular open' agree on every subset of every space:
    the fixpoint definition versus openness plus 'every open inside the
    closure already sits inside the set'."""
    out = []
    for t in _spaces(bound, allow_n5):
        for a in range(t.full_mask + 1):
            def check(t=t, a=a):
                direct = t.is_regular_open_mask(a)
                cl = t.closure_mask(a)
                via_opens = t.is_open_mask(a) and all(
                    v & ~a == 0 for v in t.open_masks if v & ~cl == 0
                )
                if direct != via_opens:
                    return {
                        "space": space_to_dict(t),
                        "subset": sorted(set_of(a)),
                        "error": f"fixpoint route says {direct}, open-scan route says {via_opens}",
                    }
                return None

            out.append(((*_space_key(t), a), check))
    return out


def _recovery_instance(t: Topology, y: frozenset[int]) -> dict | None:
    emb = DenseEmbedding(t, y)
    bx = [m for m in t.regular_open_masks() if m]
    by = [m for m in emb.sub.regular_open_masks() if m]
    iso = {set_of(u): set_of(emb.compress(u & emb.subset_mask)) for u in bx}
    ph = point_recovery(t, [set_of(m) for m in bx], emb.sub, [set_of(m) for m in by], iso)
    for x, yy in ph.tau.items():
        if emb.index_map.get(x) != yy:
            return {
                "space": space_to_dict(t),
                "dense": sorted(y),
                "error": f"recovered {x} -> {yy}, expected the dense-set inclusion",
            }
    return None


def _suite_recovery(bound: int, allow_n5: bool) -> list[Instance]:
    """Recovery from the basis isomorphism induced by dense restriction must
    send each recovered point to its own copy. Instances are limited to
    (space, dense set) pairs where the nonempty regular opens do form bases
    on both sides, since the construction quantifies over given bases."""
    out = []
    for t in _spaces(bound, allow_n5):
        bx = [m for m in t.regular_open_masks() if m]
        if not _is_basis(t, bx):
            continue
        for y in enumerate_dense_subsets(t):
            emb = DenseEmbedding(t, y)
            by = [m for m in emb.sub.regular_open_masks() if m]
            if not _is_basis(emb.sub, by):
                continue
            def check(t=t, y=y):
                try:
                    return _recovery_instance(t, y)
                except RegOpenError as exc:
                    return {"space": space_to_dict(t), "dense": sorted(y), "error": str(exc)}

            out.append(((*_space_key(t), tuple(sorted(y))), check))
    return out


def _is_basis(t: Topology, masks: list[int]) -> bool:
    for u in t.open_masks:
        cover = 0
        for b in masks:
            if b & u == b:
                cover |= b
        if cover != u:
            return False
    return True


def _suite_boolean(bound: int, allow_n5: bool) -> list[Instance]:
    out = []
    for t in _spaces(bound, allow_n5):
        def check(t=t):
            try:
                lat = regular_open_lattice(t)
            except RegOpenError as exc:
                return {"space": space_to_dict(t), "error": str(exc)}
            for name, result in (
                ("boolean", check_boolean_algebra(lat)),
                ("distributive", check_distributive(lat)),
                ("lattice-tables", check_lattice_tables(lat)),
            ):
                ok, witness = result
                if not ok:
                    return {"space": space_to_dict(t), "check": name, "witness": list(witness)}
            return None

        out.append((_space_key(t), check))
    return out


def _suite_rlattice(bound: int, allow_n5: bool) -> list[Instance]:
    out = []
    for t in _spaces(bound, allow_n5):
        def check(t=t):
            lat = regular_open_lattice(t)
            report = check_r_lattice(lat, ge_relation(lat))
            if not report.passed:
                return {"space": space_to_dict(t), "report": report.to_dict()}
            rel = well_inside(lat)
            for f, g in rel:
                for h in range(lat.m):
                    if lat.leq(f, h) and (h, g) not in rel:
                        return {
                            "space": space_to_dict(t),
                            "error": f"well-inside not upward monotone at ({h},{f},{g})",
                        }
                    if lat.leq(h, g) and (f, h) not in rel:
                        return {
                            "space": space_to_dict(t),
                            "error": f"well-inside not downward monotone at ({f},{g},{h})",
                        }
            return None

        out.append((_space_key(t), check))
    return out


def _suite_stone(bound: int, allow_n5: bool) -> list[Instance]:
    out = []
    for t in _spaces(bound, allow_n5):
        def check(t=t):
            lat = regular_open_lattice(t)
            try:
                st = stone_space(lat)
            except RegOpenError as exc:
                return {"space": space_to_dict(t), "error": str(exc)}
            if len(st.atoms) != len(lat.atoms()) or st.space.n != len(st.atoms):
                return {"space": space_to_dict(t), "error": "point count differs from atom count"}
            clopen = regular_open_lattice(st.space)
            if sorted(st.space.to_mask(s) for s in st.to_clopen) != list(clopen.payload_masks):
                return {"space": space_to_dict(t), "error": "image is not the full clopen algebra"}
            return None

        out.append((_space_key(t), check))
    for n in range(1, 6):
        def check_uf(n=n):
            ufs = ultrafilters(n)
            if len(ufs) != n:
                return {"powerset": n, "error": f"expected {n} ultrafilters, found {len(ufs)}"}
            return None

        out.append((("ultrafilters", n), check_uf))
    return out


def _brute_force_ideals(n: int) -> set[frozenset]:
    subsets = [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]
    found = set()
    middle = [s for s in subsets if s]
    for picks in range(1 << len(middle)):
        fam = {frozenset()} | {s for i, s in enumerate(middle) if picks >> i & 1}
        ok = all(a | b in fam for a in fam for b in fam) and all(
            sub in fam for a in fam for sub in _power(a)
        )
        if ok:
            found.add(frozenset(fam))
    return found


def _power(s: frozenset) -> list[frozenset]:
    pts = sorted(s)
    return [frozenset(c) for r in range(len(pts) + 1) for c in itertools.combinations(pts, r)]


def _suite_ideals(bound: int, allow_n5: bool) -> list[Instance]:
    out = []
    for n in range(1, min(bound, 4) + 1):
        def check_enum(n=n):
            constructed = {i.members for i in ideals(n)}
            brute = _brute_force_ideals(n)
            if constructed != brute:
                return {"powerset": n, "error": "principal construction disagrees with brute filter"}
            return None

        out.append((("ideal-enumeration", n), check_enum))
    for n in range(1, min(bound, 5) + 1):
        def check_corr(n=n):
            try:
                ideal_open_correspondence(n)
            except RegOpenError as exc:
                return {"powerset": n, "error": str(exc)}
            return None

        out.append((("ideal-open-correspondence", n), check_corr))
    return out


_COFINITE_TRIALS = 10_000


def _random_symbolic(rnd: random.Random) -> cof.SymbolicSet:
    kind = cof.FINITE if rnd.random() < 0.5 else cof.COFINITE
    support = frozenset(rnd.sample(range(10), rnd.randint(0, 5)))
    return cof.SymbolicSet(kind, support)


def _symbolic_identities(a, b, c) -> str | None:
    if cof.union(a, b) != cof.union(b, a):
        return "union commutativity"
    if cof.intersect(a, b) != cof.intersect(b, a):
        return "intersection commutativity"
    if cof.union(cof.union(a, b), c) != cof.union(a, cof.union(b, c)):
        return "union associativity"
    if cof.intersect(cof.intersect(a, b), c) != cof.intersect(a, cof.intersect(b, c)):
        return "intersection associativity"
    if cof.complement(cof.complement(a)) != a:
        return "double complement"
    if cof.complement(cof.union(a, b)) != cof.intersect(cof.complement(a), cof.complement(b)):
        return "De Morgan (union)"
    if cof.complement(cof.intersect(a, b)) != cof.union(cof.complement(a), cof.complement(b)):
        return "De Morgan (intersection)"
    if cof.union(a, cof.intersect(a, b)) != a:
        return "absorption"
    if cof.intersect(a, cof.union(a, b)) != a:
        return "absorption dual"
    if cof.intersect(a, cof.union(b, c)) != cof.union(cof.intersect(a, b), cof.intersect(a, c)):
        return "distributivity"
    if cof.interior(a) != cof.complement(cof.closure(cof.complement(a))):
        return "interior/closure duality"
    if not cof.is_subset(cof.interior(a), a) or not cof.is_subset(a, cof.closure(a)):
        return "interior below, closure above"
    return None


def _suite_cofinite(bound: int, allow_n5: bool, seed: int = 0) -> list[Instance]:
    out = []

    def check_family():
        family, traces = cof.regular_opens()
        if set(family) != {cof.EMPTY, cof.FULL}:
            return {"error": "regular-open family is not the two-element algebra"}
        for tr in traces:
            if tr.queried not in family and tr.regularization != cof.FULL:
                return {"error": f"nonempty proper open {tr.queried!r} did not regularize to the full set"}
        return None

    out.append((("cofinite-regular-family",), check_family))

    def check_identities():
        rnd = random.Random(seed)
        for trial in range(_COFINITE_TRIALS):
            a, b, c = (_random_symbolic(rnd) for _ in range(3))
            failed = _symbolic_identities(a, b, c)
            if failed:
                return {"trial": trial, "error": f"identity failed: {failed}", "sets": [repr(a), repr(b), repr(c)]}
        return None

    out.append((("cofinite-identities", _COFINITE_TRIALS, seed), check_identities))
    return out


_METRIC_TRIALS = 1_000


def _random_metric(rnd: random.Random, n: int) -> FiniteMetric:
    # Distances in [1, 2] satisfy the triangle inequality automatically.
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = 1 + Fraction(rnd.randint(0, 16), 16)
            rows[i][j] = rows[j][i] = d
    return FiniteMetric(rows)


def _suite_metric(bound: int, allow_n5: bool, seed: int = 0) -> list[Instance]:
    def check():
        rnd = random.Random(seed)
        for trial in range(_METRIC_TRIALS):
            dx = _random_metric(rnd, 4)
            dy = _random_metric(rnd, 4)
            tau = list(range(4))
            rnd.shuffle(tau)
            try:
                dz = combine_metric(dx, dy, tau)  # constructor scans all axioms
            except RegOpenError as exc:
                return {"trial": trial, "error": str(exc)}
            if not dominates(dz, dx):
                return {"trial": trial, "error": "combined metric does not dominate the first factor"}
        return None

    return [(("metric-combination", _METRIC_TRIALS, seed), check)]


SUITES: dict[str, Callable[..., list[Instance]]] = {
    "ux0": _suite_ux0,
    "denso": _suite_denso,
    "uvw": _suite_uvw,
    "regularity": _suite_regularity,
    "recovery": _suite_recovery,
    "boolean": _suite_boolean,
    "rlattice": _suite_rlattice,
    "stone": _suite_stone,
    "ideals": _suite_ideals,
    "cofinite": _suite_cofinite,
    "metric": _suite_metric,
}


def run_suite(
    name: str,
    bound: int = 3,
    *,
    sample: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    allow_n5: bool = False,
) -> SuiteReport:
    """Run one named suite over the enumeration up to ``bound`` points.

    ``sample`` draws a deterministic random subset of instances (for the
    gated n = 5 scale); ``jobs`` fans instances out to worker threads, with
    failures merged back in instance order either way.
    """
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    builder = SUITES[name]
    if name in ("cofinite", "metric"):
        instances = builder(bound, allow_n5, seed)
    else:
        instances = builder(bound, allow_n5)
    if sample is not None and sample < len(instances):
        rnd = random.Random(seed)
        instances = [instances[i] for i in sorted(rnd.sample(range(len(instances)), sample))]
    start = time.perf_counter()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda inst: inst[1](), instances))
    else:
        results = [check() for _, check in instances]
    failures = [r for r in results if r is not None]
    return SuiteReport(
        suite=name,
        bound=bound,
        instances=len(instances),
        failures=failures,
        wall_time_s=time.perf_counter() - start,
    )


# -- counterexample gallery ------------------------------------------------------


@dataclass(frozen=True)
class CounterexamplePair:
    """Two non-homeomorphic spaces with order-isomorphic regular-open lattices.

    ``iso`` is the lexicographically first order isomorphism; the two
    topologically induced well-inside relations are reported along with
    whether the iso (or any iso) carries one onto the other.
    """

    t1: Topology
    t2: Topology
    iso: tuple[int, ...]
    rel1: PairRelation
    rel2: PairRelation
    same_under_reported_iso: bool
    same_under_some_iso: bool

    def to_dict(self) -> dict:
        return {
            "space1": space_to_dict(self.t1),
            "space2": space_to_dict(self.t2),
            "iso": list(self.iso),
            "well_inside_1": sorted([f, g] for f, g in self.rel1),
            "well_inside_2": sorted([f, g] for f, g in self.rel2),
            "same_under_reported_iso": self.same_under_reported_iso,
            "same_under_some_iso": self.same_under_some_iso,
        }


def counterexample_search(max_n: int) -> list[CounterexamplePair]:
    """All pairs of homeomorphism-class representatives (n <= max_n) whose
    regular-open lattices are order isomorphic, in canonical order."""
    if max_n > 4:
        raise SizeGuardExceeded("counterexample search is guarded at n <= 4")
    reps = canonical_classes(max_n)
    lats = [regular_open_lattice(t) for t in reps]
    rels = [well_inside(lat) for lat in lats]
    out = []
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if lats[i].m != lats[j].m:
                continue
            isos = find_order_isomorphisms(lats[i], lats[j])
            if not isos:
                continue
            reported = isos[0]
            same_reported = transport_relation(rels[i], reported) == rels[j]
            same_some = any(transport_relation(rels[i], phi) == rels[j] for phi in isos)
            out.append(
                CounterexamplePair(
                    reps[i], reps[j], reported, rels[i], rels[j], same_reported, same_some
                )
            )
    return out
