"""Exhaustive small-space enumeration, randomized instance generation, and a
registry of machine-checked statements about the open/arbitrary duality.

Every statement the package claims to know is represented here as a named
check that can be run on a single instance or swept over all spaces of a
given size.  Checks report ``pass``/``fail``, ``expected-fail`` for the two
counterexample entries, and ``skip`` when an instance misses a hypothesis.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .bits import bits_of, canonical_subsets, is_subset, iter_bits, subset_key
from .errors import (BudgetExceeded, InternalCheckError, NotContinuous,
                     NotMonotone, TrivialFrame, UnknownTheorem)
from . import finord
from .finord import (FinLattice, FinPreTopSpace, FinTopSpace, class_of,
                     closure, continuity_failure, equivalence_classes,
                     irreducible_closed_sets, is_reflexive_transitive,
                     lattice_analyze, monotonicity_failure,
                     reflexive_transitive_closure, subset_lattice,
                     upset_family)
from .frames import (AdFrame, AdFrameHom, REL_NAMES, Variant,
                     bounded_lattice_homs, build_ado, build_ado_hom,
                     check_usc_lsc, compose_homs, epsilon_hom, ind_functor,
                     validate_adframe, validate_hom, _two_chain)
from .duality import (adpt_hom, adpt_space, eta_map, is_ad_sober, is_ad_t0,
                      pullback_point, transpose)
from .sobrify import (IrreduciblePair, ads_adpt_iso, ads_hom, ads_space,
                      irreducible_pairs, standard_sobrification)

VARIANTS = (Variant.UP, Variant.DOWN, Variant.BOTH)

ENUM_POINT_CAP = 4
DEFAULT_ISO_BUDGET = 200_000
_DEFAULT_SAMPLES = 24


# ---------------------------------------------------------------------------
# exhaustive enumeration of small carriers


_TOPOLOGY_CACHE: dict[int, tuple] = {}
_PREORDER_CACHE: dict[int, tuple] = {}


def enumerate_topologies(n: int) -> tuple[tuple[int, ...], ...]:
    """All topologies on n labelled points, by brute force over set
    families containing the empty and full sets and closed under union
    and intersection."""
    if n < 0 or n > ENUM_POINT_CAP:
        raise BudgetExceeded(f"topology enumeration is capped at {ENUM_POINT_CAP} points")
    if n not in _TOPOLOGY_CACHE:
        subs = 1 << n
        base = 1 | (1 << (subs - 1))
        free = max(0, subs - 2)
        found = []
        for r in range(1 << free):
            fam = base | (r << 1)
            members = [s for s in range(subs) if fam >> s & 1]
            ok = True
            for i, a in enumerate(members):
                for b in members[i + 1:]:
                    if not (fam >> (a | b) & 1) or not (fam >> (a & b) & 1):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found.append(canonical_subsets(members))
        found.sort(key=lambda fam: (len(fam), fam))
        _TOPOLOGY_CACHE[n] = tuple(found)
    return _TOPOLOGY_CACHE[n]


def enumerate_preorders(n: int) -> tuple[tuple[int, ...], ...]:
    """All preorders on n labelled points (reflexive transitive relations),
    by filtering every assignment of off-diagonal arrows."""
    if n < 0 or n > ENUM_POINT_CAP:
        raise BudgetExceeded(f"preorder enumeration is capped at {ENUM_POINT_CAP} points")
    if n not in _PREORDER_CACHE:
        positions = [(x, y) for x in range(n) for y in range(n) if x != y]
        found = []
        for assignment in range(1 << len(positions)):
            rows = [1 << x for x in range(n)]
            for k, (x, y) in enumerate(positions):
                if assignment >> k & 1:
                    rows[x] |= 1 << y
            if is_reflexive_transitive(rows, n):
                found.append(tuple(rows))
        found.sort()
        _PREORDER_CACHE[n] = tuple(found)
    return _PREORDER_CACHE[n]


def is_t0_topology(top: FinTopSpace) -> bool:
    spec = finord.specialization_preorder(top)
    for x in range(top.n):
        for y in range(top.n):
            if x != y and spec[x] >> y & 1 and spec[y] >> x & 1:
                return False
    return True


def enumerate_spaces(n: int, mode: str = "all",
                     topology=None) -> tuple[FinPreTopSpace, ...]:
    """Every preordered space on n points: each topology crossed with each
    preorder.  ``t0`` keeps only T0 topologies; ``fixed-topology`` varies
    the preorder under the one given."""
    if n < 0 or n > ENUM_POINT_CAP:
        raise BudgetExceeded(f"space enumeration is capped at {ENUM_POINT_CAP} points")
    if mode == "fixed-topology":
        if topology is None:
            raise ValueError("fixed-topology mode needs a topology")
        base = topology if isinstance(topology, FinTopSpace) else finord.make_topology(n, topology)
        if base.n != n:
            raise ValueError("topology size does not match n")
        families = (base.opens,)
    elif mode == "t0":
        families = tuple(t for t in enumerate_topologies(n)
                         if is_t0_topology(FinTopSpace(n, t)))
    elif mode == "all":
        families = enumerate_topologies(n)
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")
    preorders = enumerate_preorders(n)
    return tuple(FinPreTopSpace(n, opens, rows)
                 for opens in families for rows in preorders)


def _poset_shell(rows: Sequence[int]) -> FinPreTopSpace:
    k = len(rows)
    return FinPreTopSpace(k, (0,) if k == 0 else (0, (1 << k) - 1), tuple(rows))


def lattice_order_iso(a: FinLattice, b: FinLattice, budget: int = DEFAULT_ISO_BUDGET):
    """Order isomorphism between two finite lattices (which is then
    automatically a lattice isomorphism), or None."""
    if a.m != b.m:
        return None
    ra = tuple(sum(1 << j for j in range(a.m) if a.leq[i, j]) for i in range(a.m))
    rb = tuple(sum(1 << j for j in range(b.m) if b.leq[i, j]) for i in range(b.m))
    return _iso_pretop(FinPreTopSpace(a.m, (0, (1 << a.m) - 1) if a.m else (0,), ra),
                       FinPreTopSpace(b.m, (0, (1 << b.m) - 1) if b.m else (0,), rb),
                       budget)


def enumerate_distributive_lattices(max_size: int = 8) -> list[FinLattice]:
    """One representative per isomorphism class of distributive lattices
    with at most ``max_size`` elements, realized as up-set lattices of
    their posets of generators.

    Posets are grown one maximal element at a time; a branch is cut as
    soon as its up-set count passes the bound, which is sound because
    antichains of a subposet remain antichains of the whole.
    """
    found: list[FinLattice] = []
    fingerprints: dict[tuple, list[FinLattice]] = {}

    def register(lat: FinLattice) -> None:
        fp = (lat.m,
              tuple(sorted(lat.up_masks[i].bit_count() for i in range(lat.m))),
              tuple(sorted(lat.down_masks[i].bit_count() for i in range(lat.m))))
        bucket = fingerprints.setdefault(fp, [])
        for old in bucket:
            if lattice_order_iso(old, lat) is not None:
                return
        bucket.append(lat)
        found.append(lat)

    def grow(rows: list[int]) -> None:
        shell = _poset_shell(rows)
        upsets = upset_family(shell)
        if len(upsets) > max_size:
            return
        register(subset_lattice(shell, "upsets"))
        k = len(rows)
        downs = [sum(1 << y for y in range(k) if rows[y] >> x & 1) for x in range(k)]
        for d in range(1 << k):
            if any(d >> x & 1 and not is_subset(downs[x], d) for x in range(k)):
                continue  # the strict lower set must be down-closed
            rows2 = [rows[x] | (1 << k) if d >> x & 1 else rows[x] for x in range(k)]
            rows2.append(1 << k)
            grow(rows2)

    grow([])
    found.sort(key=lambda lat: lat.m)
    return found


def all_maps(src_points: int, dst_points: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(dst_points), repeat=src_points)


def continuous_maps(src, dst) -> list[tuple[int, ...]]:
    return [m for m in all_maps(src.n, dst.n)
            if continuity_failure(src, dst, m) is None]


def pretop_maps(src: FinPreTopSpace, dst: FinPreTopSpace) -> list[tuple[int, ...]]:
    """Continuous monotone maps, exhaustively."""
    return [m for m in all_maps(src.n, dst.n)
            if continuity_failure(src, dst, m) is None
            and monotonicity_failure(src, dst, m) is None]


# ---------------------------------------------------------------------------
# separation / semi-closedness helpers


def upper_semi_closed(space: FinPreTopSpace) -> bool:
    """Every up-cone is closed."""
    for x in range(space.n):
        up = space.leq[x]
        if closure(space, up) != up:
            return False
    return True


def lower_semi_closed(space: FinPreTopSpace) -> bool:
    for x in range(space.n):
        down = sum(1 << y for y in range(space.n) if space.leq[y] >> x & 1)
        if closure(space, down) != down:
            return False
    return True


def is_t1_topology(top: FinTopSpace) -> bool:
    return all(closure(top, 1 << x) == 1 << x for x in range(top.n))


def sober_topology(top: FinTopSpace) -> bool:
    """Every irreducible closed set is the closure of exactly one point."""
    closures = [closure(top, 1 << x) for x in range(top.n)]
    for c in irreducible_closed_sets(top):
        if sum(1 for cl in closures if cl == c) != 1:
            return False
    return True


def frame_point_space(lat: FinLattice) -> FinTopSpace:
    """Classical frame spectrum: prime elements, opened by the elements
    they fail to dominate."""
    primes = lattice_analyze(lat).primes
    masks = {sum(1 << i for i, p in enumerate(primes) if not lat.leq[u, p])
             for u in range(lat.m)}
    return FinTopSpace(len(primes), canonical_subsets(masks))


# ---------------------------------------------------------------------------
# seeded random generation


@dataclass(eq=False)
class Generated:
    kind: str
    payload: object
    meta: dict


def _rng(tag: str, params, seed) -> random.Random:
    blob = json.dumps(params or {}, sort_keys=True, default=str)
    return random.Random(f"{tag}|{blob}|{seed}")


def _random_preorder(rng: random.Random, n: int, density: float) -> tuple[int, ...]:
    rows = [1 << x for x in range(n)]
    for x in range(n):
        for y in range(n):
            if x != y and rng.random() < density:
                rows[x] |= 1 << y
    return reflexive_transitive_closure(rows, n)


def _random_poset(rng: random.Random, n: int, density: float = 0.4) -> tuple[int, ...]:
    # only forward arrows, so the closure is automatically antisymmetric
    rows = [1 << x for x in range(n)]
    for x in range(n):
        for y in range(x + 1, n):
            if rng.random() < density:
                rows[x] |= 1 << y
    return reflexive_transitive_closure(rows, n)


def _random_space(rng: random.Random, n: int, density: float) -> FinPreTopSpace:
    shell = FinPreTopSpace(n, (0,) if n == 0 else (0, (1 << n) - 1),
                           _random_preorder(rng, n, density))
    opens = canonical_subsets(upset_family(shell))
    return FinPreTopSpace(n, opens, _random_preorder(rng, n, density))


def _swap_rel(frame: AdFrame, name: str, rel) -> AdFrame:
    parts = {"tot": frame.tot, "con": frame.con, "fof": frame.fof, "cou": frame.cou}
    parts[name] = frozenset(rel)
    return AdFrame(frame.omega, frame.ell, parts["tot"], parts["con"],
                   parts["fof"], parts["cou"], frame.variant)


def _mutations(frame: AdFrame) -> list[tuple[str, Callable[[], AdFrame]]]:
    """Single-edit corruptions, each tagged with the law it should break."""
    om, el = frame.omega, frame.ell
    tt = (om.top, el.bot)
    ff = (om.bot, el.top)
    bots = (om.bot, el.bot)
    tops = (om.top, el.top)
    out = []
    if frame.variant.sees_up:
        if tops != tt and tops in frame.tot:
            out.append(("tot-up-closed",
                        lambda f=frame: _swap_rel(f, "tot", f.tot - {tops})))
        if tt in frame.tot:
            out.append(("tot-has-tt",
                        lambda f=frame: _swap_rel(f, "tot", f.tot - {tt})))
        if bots not in (ff, tt) and bots in frame.con:
            out.append(("con-down-closed",
                        lambda f=frame: _swap_rel(f, "con", f.con - {bots})))
        if el.m > 1 and tops not in frame.con:
            out.append(("con-tot-aligned",
                        lambda f=frame: _swap_rel(f, "con", f.con | {tops})))
    if frame.variant.sees_down:
        if tops != tt and tops in frame.fof and tt in frame.fof:
            out.append(("fof-up-closed",
                        lambda f=frame: _swap_rel(f, "fof", f.fof - {tt})))
        if bots in frame.fof and (om.m > 1 or el.m > 1):
            out.append(("fof-has-bots",
                        lambda f=frame: _swap_rel(f, "fof", f.fof - {bots})))
        if ff != bots and ff in frame.cou and bots in frame.cou:
            out.append(("cou-down-closed",
                        lambda f=frame: _swap_rel(f, "cou", f.cou - {ff})))
    if frame.variant is Variant.BOTH and el.m > 1 and tt not in frame.cou:
        out.append(("tot-cou-ell-top",
                    lambda f=frame: _swap_rel(f, "cou", f.cou | {tt})))
    return out


def generate_random(kind: str, params=None, seed: int = 0) -> Generated:
    """Deterministic seeded instance families.

    kind "space": a random topology (up-sets of one random preorder) with an
    independently random preorder on top.
    kind "adframe": family "ado" (frame of a random space), "ind" (two-sided
    lift of the up-set lattice of a random poset), or "mutated" (a valid
    frame with one edit aimed at a named axiom).
    """
    params = dict(params or {})
    if kind == "space":
        n = int(params.get("n", 3))
        density = float(params.get("density", 0.35))
        rng = _rng("space", params, seed)
        space = _random_space(rng, n, density)
        return Generated("space", space, {"family": "space", "n": n, "seed": seed})
    if kind != "adframe":
        raise ValueError(f"unknown generation kind {kind!r}")

    family = params.get("family", "ado")
    variant = Variant.parse(params.get("variant", "both"))
    if family == "ado":
        n = int(params.get("n", 3))
        density = float(params.get("density", 0.35))
        rng = _rng("adframe-ado", params, seed)
        space = _random_space(rng, n, density)
        frame = build_ado(space, variant)
        return Generated("adframe", frame,
                         {"family": "ado", "n": n, "seed": seed,
                          "variant": variant.value})
    if family == "ind":
        rng = _rng("adframe-ind", params, seed)
        k = int(params.get("base_points", rng.randint(1, 4)))
        shell = FinPreTopSpace(k, (0, (1 << k) - 1), _random_poset(rng, k))
        lat = subset_lattice(shell, "upsets")
        frame = ind_functor(lat, variant=variant)
        return Generated("adframe", frame,
                         {"family": "ind", "base_points": k, "seed": seed,
                          "variant": variant.value})
    if family == "mutated":
        target = params.get("target")
        for attempt in range(64):
            rng = _rng(f"adframe-mutated-{attempt}", params, seed)
            base_family = rng.choice(("ado", "ind"))
            inner = dict(params)
            inner["family"] = base_family
            inner.pop("target", None)
            base = generate_random("adframe", inner, seed * 131 + attempt)
            frame = base.payload
            options = _mutations(frame)
            if target is not None:
                options = [m for m in options if m[0] == target]
            if not options:
                continue
            law, edit = rng.choice(options)
            mutated = edit()
            report = validate_adframe(mutated)
            if not report.ok and law in {c.law for c in report.failures()}:
                return Generated("adframe", mutated,
                                 {"family": "mutated", "target": law,
                                  "seed": seed, "variant": variant.value,
                                  "base": base.meta})
        raise InternalCheckError("mutation search failed to break the target axiom")
    raise ValueError(f"unknown adframe family {family!r}")


# ---------------------------------------------------------------------------
# isomorphism search


def _pretop_profile(space: FinPreTopSpace):
    out = []
    for x in range(space.n):
        sizes = tuple(sorted(u.bit_count() for u in space.opens if u >> x & 1))
        outdeg = space.leq[x].bit_count()
        indeg = sum(1 for y in range(space.n) if space.leq[y] >> x & 1)
        out.append((sizes, outdeg, indeg))
    return out


def _iso_pretop(a: FinPreTopSpace, b: FinPreTopSpace, budget: int):
    if a.n != b.n or len(a.opens) != len(b.opens):
        return None
    if sorted(u.bit_count() for u in a.opens) != sorted(u.bit_count() for u in b.opens):
        return None
    pa, pb = _pretop_profile(a), _pretop_profile(b)
    if sorted(pa) != sorted(pb):
        return None
    n = a.n
    cands = [tuple(y for y in range(n) if pb[y] == pa[x]) for x in range(n)]
    order = sorted(range(n), key=lambda x: len(cands[x]))
    perm = [-1] * n
    used = [False] * n
    nodes = 0

    def rec(k: int) -> bool:
        nonlocal nodes
        if k == n:
            mapped = {sum(1 << perm[x] for x in bits_of(u)) for u in a.opens}
            return mapped == set(b.opens)
        x = order[k]
        for y in cands[x]:
            if used[y]:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded("isomorphism search budget exhausted")
            ok = True
            for j in range(k):
                z, w = order[j], perm[order[j]]
                if (a.leq[x] >> z & 1) != (b.leq[y] >> w & 1) or \
                   (a.leq[z] >> x & 1) != (b.leq[w] >> y & 1):
                    ok = False
                    break
            if not ok:
                continue
            perm[x] = y
            used[y] = True
            if rec(k + 1):
                return True
            perm[x] = -1
            used[y] = False
        return False

    return tuple(perm) if rec(0) else None


def _as_discrete(top) -> FinPreTopSpace:
    t = top if isinstance(top, FinTopSpace) else top.topology()
    return FinPreTopSpace(t.n, t.opens, tuple(1 << x for x in range(t.n)))


def _iso_adframe(a: AdFrame, b: AdFrame, budget: int):
    if a.variant is not b.variant:
        return None
    if a.omega.m != b.omega.m or a.ell.m != b.ell.m:
        return None
    for name in REL_NAMES:
        if len(a.rel(name)) != len(b.rel(name)):
            return None

    def side_profile(frame: AdFrame, omega_side: bool):
        lat = frame.omega if omega_side else frame.ell
        out = []
        for e in range(lat.m):
            degs = tuple(sum(1 for pair in frame.rel(nm)
                             if pair[0 if omega_side else 1] == e)
                         for nm in REL_NAMES)
            out.append((lat.up_masks[e].bit_count(),
                        lat.down_masks[e].bit_count(), degs))
        return out

    state = {"nodes": 0}

    def order_iso_search(la: FinLattice, lb: FinLattice, prof_a, prof_b,
                         accept: Callable[[tuple], bool]) -> bool:
        if sorted(prof_a) != sorted(prof_b):
            return False
        m = la.m
        cands = [tuple(j for j in range(m) if prof_b[j] == prof_a[i])
                 for i in range(m)]
        order = sorted(range(m), key=lambda i: len(cands[i]))
        perm = [-1] * m
        used = [False] * m

        def rec(k: int) -> bool:
            if k == m:
                return accept(tuple(perm))
            i = order[k]
            for j in cands[i]:
                if used[j]:
                    continue
                state["nodes"] += 1
                if state["nodes"] > budget:
                    raise BudgetExceeded("isomorphism search budget exhausted")
                good = True
                for kk in range(k):
                    z, w = order[kk], perm[order[kk]]
                    if bool(la.leq[i, z]) != bool(lb.leq[j, w]) or \
                       bool(la.leq[z, i]) != bool(lb.leq[w, j]):
                        good = False
                        break
                if not good:
                    continue
                perm[i] = j
                used[j] = True
                if rec(k + 1):
                    return True
                perm[i] = -1
                used[j] = False
            return False

        return rec(0)

    found = {}

    def try_tau(sigma: tuple) -> bool:
        def accept(tau: tuple) -> bool:
            for name in REL_NAMES:
                mapped = {(sigma[u], tau[x]) for u, x in a.rel(name)}
                if mapped != set(b.rel(name)):
                    return False
            found["iso"] = (sigma, tau)
            return True
        return order_iso_search(a.ell, b.ell,
                                side_profile(a, False), side_profile(b, False),
                                accept)

    hit = order_iso_search(a.omega, b.omega,
                           side_profile(a, True), side_profile(b, True),
                           try_tau)
    return found["iso"] if hit else None


def iso_check(kind: str, left, right, budget: int = DEFAULT_ISO_BUDGET):
    """Search for an isomorphism; returns the witness permutation(s) or
    None.  Raises BudgetExceeded if the backtracking budget runs out."""
    if kind == "pretop":
        return _iso_pretop(left, right, budget)
    if kind == "top":
        return _iso_pretop(_as_discrete(left), _as_discrete(right), budget)
    if kind == "adframe":
        return _iso_adframe(left, right, budget)
    raise ValueError(f"unknown isomorphism kind {kind!r}")


# ---------------------------------------------------------------------------
# basic functors


def basic_functors(which: str, space):
    """discr: equality preorder on a topology.  ind_space: indiscrete
    preorder on a topology.  underlying: forget the preorder."""
    if which == "underlying":
        return space.topology() if isinstance(space, FinPreTopSpace) else space
    top = space if isinstance(space, FinTopSpace) else space.topology()
    if which == "discr":
        return FinPreTopSpace(top.n, top.opens,
                              tuple(1 << x for x in range(top.n)))
    if which == "ind_space":
        full = (1 << top.n) - 1
        return FinPreTopSpace(top.n, top.opens, tuple(full for _ in range(top.n)))
    raise ValueError(f"unknown functor {which!r}")


def lifted_preorder(base, targets: Sequence[tuple]) -> FinPreTopSpace:
    """Largest preorder on a topology making every given map into a
    preordered space monotone: the pointwise intersection of the pulled
    back orders."""
    top = base if isinstance(base, FinTopSpace) else base.topology()
    n = top.n
    full = (1 << n) - 1
    rows = [full] * n
    for mapping, target in targets:
        mapping = tuple(int(v) for v in mapping)
        bad = continuity_failure(top, target, mapping)
        if bad is not None:
            raise NotContinuous(
                f"lift target map pulls open {bits_of(bad)} back to a non-open")
        for x in range(n):
            mask = 0
            for y in range(n):
                if target.leq[mapping[x]] >> mapping[y] & 1:
                    mask |= 1 << y
            rows[x] &= mask
    result = FinPreTopSpace(n, top.opens, tuple(rows))
    if not is_reflexive_transitive(result.leq, n):
        raise InternalCheckError("intersected preorder lost transitivity")
    for mapping, target in targets:
        if monotonicity_failure(result, target, tuple(mapping)) is not None:
            raise InternalCheckError("lifted preorder fails to make a target monotone")
    return result


def designated_counterexample() -> FinPreTopSpace:
    """Two points, indiscrete topology, discrete preorder: the standard
    witness separating the pair space from the classical sobrification."""
    return FinPreTopSpace(2, (0, 3), (1, 2))


# ---------------------------------------------------------------------------
# check registry plumbing


@dataclass(eq=False)
class Instance:
    kind: str
    payload: tuple
    describe: dict


@dataclass(eq=False)
class CheckReport:
    id: str
    instance: dict
    verdict: str
    witness: object = None
    ms: float = 0.0

    def to_json(self) -> dict:
        return {"id": self.id, "instance": self.instance,
                "verdict": self.verdict, "witness": self.witness,
                "ms": self.ms}


@dataclass(eq=False)
class SweepSpec:
    n: int = 2
    variants: tuple = VARIANTS
    seed: int = 0
    count: Optional[int] = None


@dataclass(eq=False)
class _Entry:
    id: str
    doc: str
    run: Callable[[Instance], tuple]
    sweep: Callable[[SweepSpec], Iterable[Instance]]
    expected_fail: bool = False


_REGISTRY: dict[str, _Entry] = {}


def registry_ids() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def registry_doc(theorem_id: str) -> str:
    return _lookup(theorem_id).doc


def _lookup(theorem_id: str) -> _Entry:
    entry = _REGISTRY.get(theorem_id)
    if entry is None:
        known = ", ".join(_REGISTRY)
        raise UnknownTheorem(f"no check named {theorem_id!r}; known ids: {known}")
    return entry


def describe_space(space: FinPreTopSpace, variant: Optional[Variant] = None) -> dict:
    doc = {"kind": "space", "points": space.n,
           "opens": [bits_of(u) for u in space.opens],
           "leq": [[x, y] for x in range(space.n)
                   for y in bits_of(space.leq[x]) if x != y]}
    if variant is not None:
        doc["variant"] = variant.value
    return doc


def describe_topology(top: FinTopSpace, variant: Optional[Variant] = None) -> dict:
    doc = {"kind": "topology", "points": top.n,
           "opens": [bits_of(u) for u in top.opens]}
    if variant is not None:
        doc["variant"] = variant.value
    return doc


def space_instance(space: FinPreTopSpace, variant=Variant.BOTH) -> Instance:
    variant = Variant.parse(variant)
    return Instance("space", (space, variant), describe_space(space, variant))


def top_instance(top: FinTopSpace, variant=Variant.BOTH) -> Instance:
    variant = Variant.parse(variant)
    return Instance("topology", (top, variant), describe_topology(top, variant))


def frame_instance(frame: AdFrame, meta: Optional[dict] = None) -> Instance:
    doc = {"kind": "adframe", "omega": frame.omega.m, "ell": frame.ell.m,
           "variant": frame.variant.value}
    doc.update(meta or {})
    return Instance("adframe", (frame,), doc)


def lattice_instance(lat: FinLattice, meta: Optional[dict] = None) -> Instance:
    doc = {"kind": "lattice", "size": lat.m}
    doc.update(meta or {})
    return Instance("lattice", (lat,), doc)


def restrict_space(space: FinPreTopSpace, keep_mask: int) -> FinPreTopSpace:
    kept = bits_of(keep_mask & ((1 << space.n) - 1))
    pos = {x: i for i, x in enumerate(kept)}

    def squash(mask: int) -> int:
        return sum(1 << pos[x] for x in kept if mask >> x & 1)

    opens = canonical_subsets(squash(u) for u in space.opens)
    rows = tuple(squash(space.leq[x]) for x in kept)
    return FinPreTopSpace(len(kept), opens, rows)


def _shrink(entry: _Entry, inst: Instance):
    """Greedy point removal keeping the verdict bad."""
    space, variant = inst.payload
    if space.n == 0:
        return None
    cur, cur_w = space, None
    improved = True
    while improved:
        improved = False
        for x in range(cur.n):
            keep = ((1 << cur.n) - 1) & ~(1 << x)
            sub = restrict_space(cur, keep)
            try:
                ok, w = entry.run(space_instance(sub, variant))
            except Exception:
                continue
            if ok is False:
                cur, cur_w = sub, w
                improved = True
                break
    if cur.n == space.n:
        return None
    return space_instance(cur, variant), cur_w


def _coerce_sweep(sweep) -> SweepSpec:
    if sweep is None:
        return SweepSpec()
    if isinstance(sweep, SweepSpec):
        return sweep
    spec = SweepSpec()
    spec.n = int(sweep.get("n", spec.n))
    spec.seed = int(sweep.get("seed", spec.seed))
    if sweep.get("count") is not None:
        spec.count = int(sweep["count"])
    raw_variants = sweep.get("variants") or sweep.get("variant")
    if raw_variants:
        if isinstance(raw_variants, (str, Variant)):
            raw_variants = [raw_variants]
        spec.variants = tuple(Variant.parse(v) for v in raw_variants)
    return spec


def run_check(theorem_id: str, instance: Optional[Instance] = None, *,
              instances: Optional[Iterable[Instance]] = None,
              sweep=None, fail_fast: bool = False,
              budget_ms: Optional[float] = None) -> list[CheckReport]:
    """Run one registered check over an instance, an explicit instance
    stream, or a sweep of all spaces of a given size."""
    entry = _lookup(theorem_id)
    if instance is not None:
        stream: Iterable[Instance] = [instance]
    elif instances is not None:
        stream = instances
    else:
        stream = entry.sweep(_coerce_sweep(sweep))

    reports: list[CheckReport] = []
    started = time.perf_counter()
    for inst in stream:
        if budget_ms is not None and (time.perf_counter() - started) * 1000 > budget_ms:
            exc = BudgetExceeded(
                f"{theorem_id}: budget of {budget_ms:g} ms exhausted "
                f"after {len(reports)} instances")
            exc.reports = reports
            raise exc
        t0 = time.perf_counter()
        ok, witness = entry.run(inst)
        ms = round((time.perf_counter() - t0) * 1000, 3)
        if ok is None:
            verdict = "skip"
        elif entry.expected_fail:
            verdict = "expected-fail" if not ok else "fail"
            if ok:
                witness = {"note": "statement unexpectedly holds here",
                           "detail": witness}
        else:
            verdict = "pass" if ok else "fail"
        if verdict in ("fail", "expected-fail") and inst.kind == "space":
            shrunk = _shrink(entry, inst)
            if shrunk is not None:
                small, small_w = shrunk
                witness = {"detail": witness, "minimized": small.describe,
                           "minimized_detail": small_w}
        reports.append(CheckReport(theorem_id, inst.describe, verdict, witness, ms))
        if fail_fast and verdict == "fail":
            break
    return reports


# ---------------------------------------------------------------------------
# shared sweep generators


def _sweep_spaces(spec: SweepSpec) -> Iterator[Instance]:
    spaces = enumerate_spaces(spec.n)
    if spec.count is None:
        for sp in spaces:
            for v in spec.variants:
                yield space_instance(sp, v)
    else:
        rng = random.Random(f"sweep-spaces|{spec.n}|{spec.seed}")
        for _ in range(spec.count):
            yield space_instance(rng.choice(spaces), rng.choice(spec.variants))


def _sweep_topologies(spec: SweepSpec) -> Iterator[Instance]:
    tops = [FinTopSpace(spec.n, fam) for fam in enumerate_topologies(spec.n)]
    if spec.count is None:
        for t in tops:
            for v in spec.variants:
                yield top_instance(t, v)
    else:
        rng = random.Random(f"sweep-tops|{spec.n}|{spec.seed}")
        for _ in range(spec.count):
            yield top_instance(rng.choice(tops), rng.choice(spec.variants))


def _cex_qualifies(space: FinPreTopSpace) -> bool:
    discrete = all(space.leq[x] == 1 << x for x in range(space.n))
    return discrete and not sober_topology(space.topology())


def _sweep_cex(spec: SweepSpec) -> Iterator[Instance]:
    for sp in enumerate_spaces(spec.n):
        if _cex_qualifies(sp):
            for v in spec.variants:
                yield space_instance(sp, v)


def _morphism_instance(src, dst, mapping, variant) -> Instance:
    doc = {"kind": "morphism", "map": list(mapping),
           "src": describe_space(src), "dst": describe_space(dst),
           "variant": variant.value}
    return Instance("morphism", (src, dst, tuple(mapping), variant), doc)


def _top_morphism_instance(src, dst, mapping, variant) -> Instance:
    doc = {"kind": "top-morphism", "map": list(mapping),
           "src": describe_topology(src), "dst": describe_topology(dst),
           "variant": variant.value}
    return Instance("top-morphism", (src, dst, tuple(mapping), variant), doc)


def _sweep_morphisms(spec: SweepSpec) -> Iterator[Instance]:
    spaces = enumerate_spaces(spec.n)
    if spec.count is None and spec.n <= 2:
        for v in spec.variants:
            for src in spaces:
                for dst in spaces:
                    for m in pretop_maps(src, dst):
                        yield _morphism_instance(src, dst, m, v)
        return
    count = spec.count or _DEFAULT_SAMPLES
    rng = random.Random(f"sweep-morphisms|{spec.n}|{spec.seed}")
    emitted = 0
    while emitted < count:
        src, dst = rng.choice(spaces), rng.choice(spaces)
        maps = pretop_maps(src, dst)
        if not maps:
            continue
        yield _morphism_instance(src, dst, rng.choice(maps), rng.choice(spec.variants))
        emitted += 1


def _sweep_top_morphisms(spec: SweepSpec) -> Iterator[Instance]:
    tops = [FinTopSpace(spec.n, fam) for fam in enumerate_topologies(spec.n)]
    for v in spec.variants:
        for t in tops:
            yield top_instance(t, v)
    if spec.count is None and spec.n <= 2:
        for v in spec.variants:
            for src in tops:
                for dst in tops:
                    for m in continuous_maps(src, dst):
                        yield _top_morphism_instance(src, dst, m, v)
        return
    count = spec.count or _DEFAULT_SAMPLES
    rng = random.Random(f"sweep-top-morphisms|{spec.n}|{spec.seed}")
    emitted = 0
    while emitted < count:
        src, dst = rng.choice(tops), rng.choice(tops)
        maps = continuous_maps(src, dst)
        if not maps:
            continue
        yield _top_morphism_instance(src, dst, rng.choice(maps), rng.choice(spec.variants))
        emitted += 1


def _opens_lattices(n: int) -> list[FinLattice]:
    out, seen = [], set()
    for fam in enumerate_topologies(n):
        lat = subset_lattice(_as_discrete(FinTopSpace(n, fam)), "opens")
        if lat.key() not in seen:
            seen.add(lat.key())
            out.append(lat)
    return out


# ---------------------------------------------------------------------------
# runners


def _run_ado_valid(inst: Instance):
    space, v = inst.payload
    report = validate_adframe(build_ado(space, v))
    if report.ok:
        return True, None
    return False, [c.law for c in report.failures()]


def _spectrum_cache_key(space: FinPreTopSpace, v: Variant):
    return (space.opens, space.leq, v)


def _sweep_triangle(spec: SweepSpec) -> Iterator[Instance]:
    spaces = enumerate_spaces(spec.n)
    spectra: dict = {}

    def spectrum_of(sp, v):
        key = _spectrum_cache_key(sp, v)
        if key not in spectra:
            spectra[key] = adpt_space(build_ado(sp, v))
        return spectra[key]

    def triangle_inst(x_space, frame_space, spectrum, m, v):
        doc = {"kind": "triangle", "space": describe_space(x_space),
               "frame_space": describe_space(frame_space),
               "map": list(m), "variant": v.value}
        return Instance("triangle", (x_space, spectrum, m, v), doc)

    def roundtrip_inst(x_space, y_space, h, v):
        doc = {"kind": "roundtrip", "map": list(h),
               "src": describe_space(x_space), "dst": describe_space(y_space),
               "variant": v.value}
        return Instance("roundtrip", (x_space, y_space, h, v), doc)

    if spec.count is None and spec.n <= 2:
        for v in spec.variants:
            for y_space in spaces:
                spectrum = spectrum_of(y_space, v)
                for x_space in spaces:
                    for m in pretop_maps(x_space, spectrum.space):
                        yield triangle_inst(x_space, y_space, spectrum, m, v)
            for x_space in spaces:
                for y_space in spaces:
                    for h in pretop_maps(x_space, y_space):
                        yield roundtrip_inst(x_space, y_space, h, v)
        return

    count = spec.count or _DEFAULT_SAMPLES
    rng = random.Random(f"sweep-triangle|{spec.n}|{spec.seed}")
    emitted = 0
    while emitted < count:
        v = rng.choice(spec.variants)
        x_space, y_space = rng.choice(spaces), rng.choice(spaces)
        if emitted % 2:
            maps = pretop_maps(x_space, y_space)
            if not maps:
                continue
            yield roundtrip_inst(x_space, y_space, rng.choice(maps), v)
        else:
            spectrum = spectrum_of(y_space, v)
            maps = pretop_maps(x_space, spectrum.space)
            if not maps:
                continue
            yield triangle_inst(x_space, y_space, spectrum, rng.choice(maps), v)
        emitted += 1


def _run_triangle(inst: Instance):
    if inst.kind == "triangle":
        x_space, spectrum, mapping, v = inst.payload
        try:
            hom = transpose(x_space, spectrum, mapping)
        except InternalCheckError as exc:
            return False, str(exc)
        eta = eta_map(x_space, v)
        for x in range(x_space.n):
            pulled = pullback_point(hom, eta.spectrum.points[eta.mapping[x]])
            if spectrum.point_index(pulled) != mapping[x]:
                return False, f"triangle fails at point {x}"
        return True, None

    x_space, y_space, h, v = inst.payload
    g = build_ado_hom(h, x_space, y_space, v)
    smap = adpt_hom(g)
    eta_x = eta_map(x_space, v)
    composite = tuple(smap.mapping[eta_x.mapping[x]] for x in range(x_space.n))
    try:
        back = transpose(x_space, smap.cod, composite)
    except InternalCheckError as exc:
        return False, str(exc)
    if back.key() != g.key():
        return False, {"recovered_phi": back.phi, "expected_phi": g.phi,
                       "recovered_p": back.p, "expected_p": g.p}
    return True, None


def _run_adj_exists(inst: Instance):
    src, dst, h, v = inst.payload
    g = build_ado_hom(h, src, dst, v)
    smap = adpt_hom(g)
    eta_src = eta_map(src, v)
    eta_dst = eta_map(dst, v)
    left = [smap.mapping[eta_src.mapping[x]] for x in range(src.n)]
    right = [eta_dst.mapping[h[x]] for x in range(src.n)]
    if left != right:
        return False, {"through_spectra": left, "through_unit": right}
    return True, None


def _run_usc_lsc(inst: Instance):
    if inst.kind == "adframe":
        frame, = inst.payload
        flags = check_usc_lsc(frame)
        spectrum = adpt_space(frame)
        if flags[0] and not upper_semi_closed(spectrum.space):
            return False, "usc frame with a spectrum that is not upper semi-closed"
        if flags[1] and not lower_semi_closed(spectrum.space):
            return False, "lsc frame with a spectrum that is not lower semi-closed"
        return True, {"usc": flags[0], "lsc": flags[1]}

    space, v = inst.payload
    frame = build_ado(space, v)
    flags = check_usc_lsc(frame)
    want = (upper_semi_closed(space) if v.sees_up else None,
            lower_semi_closed(space) if v.sees_down else None)
    if flags != want:
        return False, {"frame_flags": flags, "direct": want}
    spectrum = adpt_space(frame)
    if flags[0] and not upper_semi_closed(spectrum.space):
        return False, "usc frame with a spectrum that is not upper semi-closed"
    if flags[1] and not lower_semi_closed(spectrum.space):
        return False, "lsc frame with a spectrum that is not lower semi-closed"
    return True, None


def _run_ads_iso(inst: Instance):
    space, v = inst.payload
    try:
        iso = ads_adpt_iso(space, v)
    except InternalCheckError as exc:
        return False, str(exc)
    fwd = iso.forward
    if len(set(fwd)) != len(fwd) or len(fwd) != len(iso.spectrum.points):
        return False, "pair-to-point map is not bijective"
    pair_space, spectrum_space = iso.ads.space, iso.spectrum.space
    for i in range(pair_space.n):
        for j in range(pair_space.n):
            if (pair_space.leq[i] >> j & 1) != \
               (spectrum_space.leq[fwd[i]] >> fwd[j] & 1):
                return False, f"order mismatch between pairs {i} and {j}"
    mapped = {sum(1 << fwd[i] for i in bits_of(u)) for u in pair_space.opens}
    if mapped != set(spectrum_space.opens):
        return False, "open families do not correspond"
    return True, None


def _run_os_iso(inst: Instance):
    space, v = inst.payload
    try:
        ads = ads_space(space, v)
    except InternalCheckError as exc:
        return False, str(exc)
    if set(ads.diamond_map) != set(ads.space.opens) or \
       len(set(ads.diamond_map)) != len(space.opens):
        return False, "diamond transfer is not a bijection onto the pair-space opens"
    for i, u in enumerate(space.opens):
        for j, w in enumerate(space.opens):
            if is_subset(u, w) != is_subset(ads.diamond_map[i], ads.diamond_map[j]):
                return False, "diamond transfer does not preserve and reflect order"
    pair_upsets = set(upset_family(ads.space))
    if set(ads.bracket_map) != pair_upsets or \
       len(set(ads.bracket_map)) != len(ads.upsets):
        return False, "bracket transfer is not a bijection onto the up-closed sets"
    for i, a in enumerate(ads.upsets):
        for j, b in enumerate(ads.upsets):
            if is_subset(a, b) != is_subset(ads.bracket_map[i], ads.bracket_map[j]):
                return False, "bracket transfer does not preserve and reflect order"
    return True, None


def _run_eta_preimage(inst: Instance):
    space, v = inst.payload
    ads = ads_space(space, v)
    classes = equivalence_classes(space.leq)
    unit = []
    for x in range(space.n):
        pair = IrreduciblePair(closure(space, 1 << x), class_of(classes, x))
        try:
            unit.append(ads.pair_index(pair))
        except ValueError:
            return False, f"canonical pair of point {x} is not irreducible"
    for k, u in enumerate(space.opens):
        if finord.preimage(unit, ads.diamond_map[k]) != u:
            return False, {"open": bits_of(u)}
    for k, a in enumerate(ads.upsets):
        if finord.preimage(unit, ads.bracket_map[k]) != a:
            return False, {"upset": bits_of(a)}
    return True, None


def _run_adsober_eq(inst: Instance):
    space, v = inst.payload
    try:
        res = is_ad_sober(space, v)
    except InternalCheckError as exc:
        return False, str(exc)
    eta = eta_map(space, v)
    bijective = (len(set(eta.mapping)) == space.n
                 and len(eta.spectrum.points) == space.n)
    if bijective:
        inverse = [0] * space.n
        for x in range(space.n):
            inverse[eta.mapping[x]] = x
        if continuity_failure(eta.spectrum.space, space, inverse) is not None or \
           monotonicity_failure(eta.spectrum.space, space, inverse) is not None:
            return False, "bijective unit whose inverse is not a map of spaces"
    if res.ad_sober != bijective:
        return False, {"pair_route": res.ad_sober, "unit_bijective": bijective,
                       "witness": res.witness}
    return True, None


def _nat_ind_alpha(top: FinTopSpace, v: Variant):
    """Pair space of the indiscrete lift against the classical
    sobrification; returns the matching permutation or an error string."""
    ind = basic_functors("ind_space", top)
    ads = ads_space(ind, v)
    irr = irreducible_closed_sets(top)
    full = (1 << top.n) - 1
    alpha = []
    for pr in ads.pairs:
        if top.n and pr.cls != full:
            return None, "pair class is not the whole carrier"
        if pr.closed not in irr:
            return None, "pair closed set is not irreducible in the base"
        alpha.append(irr.index(pr.closed))
    if sorted(alpha) != list(range(len(irr))):
        return None, {"pairs": len(ads.pairs), "irreducible_closed": len(irr)}
    sob, _unit = standard_sobrification(top)
    ind_sob = basic_functors("ind_space", sob)
    mapped = {sum(1 << alpha[i] for i in bits_of(u)) for u in ads.space.opens}
    if mapped != set(ind_sob.opens):
        return None, "open families do not correspond"
    for i in range(ads.space.n):
        for j in range(ads.space.n):
            if (ads.space.leq[i] >> j & 1) != \
               (ind_sob.leq[alpha[i]] >> alpha[j] & 1):
                return None, "preorders do not correspond"
    return alpha, None


def _sobrification_map(src_top: FinTopSpace, dst_top: FinTopSpace,
                       mapping: Sequence[int]):
    irr_src = irreducible_closed_sets(src_top)
    irr_dst = irreducible_closed_sets(dst_top)
    out = []
    for c in irr_src:
        d = closure(dst_top, finord.image(mapping, c))
        if d not in irr_dst:
            return None
        out.append(irr_dst.index(d))
    return out


def _run_nat_ind(inst: Instance):
    if inst.kind == "topology":
        top, v = inst.payload
        alpha, err = _nat_ind_alpha(top, v)
        return (alpha is not None), err

    src, dst, g, v = inst.payload
    a_src, err = _nat_ind_alpha(src, v)
    if a_src is None:
        return False, err
    a_dst, err = _nat_ind_alpha(dst, v)
    if a_dst is None:
        return False, err
    amap = ads_hom(g, basic_functors("ind_space", src),
                   basic_functors("ind_space", dst), v)
    gs = _sobrification_map(src, dst, g)
    if gs is None:
        return False, "image closure left the irreducible family"
    for i in range(len(amap.mapping)):
        if a_dst[amap.mapping[i]] != gs[a_src[i]]:
            return False, f"square does not commute at pair {i}"
    return True, None


def _nat_discr_alpha(top: FinTopSpace, v: Variant):
    disc = basic_functors("discr", top)
    ads = ads_space(disc, v)
    alpha = []
    for pr in ads.pairs:
        if pr.cls.bit_count() != 1:
            return None, "pair class is not a singleton"
        x = pr.rep
        if pr.closed != closure(top, 1 << x):
            return None, "pair closed set is not the closure of its point"
        alpha.append(x)
    if sorted(alpha) != list(range(top.n)):
        return None, {"pairs": len(ads.pairs), "points": top.n}
    mapped = {sum(1 << alpha[i] for i in bits_of(u)) for u in ads.space.opens}
    if mapped != set(top.opens):
        return None, "open families do not correspond"
    for i in range(ads.space.n):
        for j in range(ads.space.n):
            if (ads.space.leq[i] >> j & 1) != (1 if alpha[i] == alpha[j] else 0):
                return None, "pair space is not discretely ordered"
    return alpha, None


def _run_nat_discr(inst: Instance):
    if inst.kind == "topology":
        top, v = inst.payload
        alpha, err = _nat_discr_alpha(top, v)
        return (alpha is not None), err

    src, dst, g, v = inst.payload
    a_src, err = _nat_discr_alpha(src, v)
    if a_src is None:
        return False, err
    a_dst, err = _nat_discr_alpha(dst, v)
    if a_dst is None:
        return False, err
    amap = ads_hom(g, basic_functors("discr", src),
                   basic_functors("discr", dst), v)
    for i in range(len(amap.mapping)):
        if a_dst[amap.mapping[i]] != g[a_src[i]]:
            return False, f"square does not commute at pair {i}"
    return True, None


def _run_cex_ads(inst: Instance):
    space, v = inst.payload
    if not _cex_qualifies(space):
        return None, "needs a discrete preorder over a non-sober topology"
    ads = ads_space(space, v)
    sob, _unit = standard_sobrification(space.topology())
    perm = iso_check("top", ads.space.topology(), sob)
    counts = {"pair_space_points": ads.space.n,
              "sobrification_points": sob.n}
    return perm is not None, counts


def _run_homeo_ads(inst: Instance):
    space, v = inst.payload
    top = space.topology()
    irr = irreducible_closed_sets(top)
    downs = [sum(1 << y for y in range(space.n) if space.leq[y] >> x & 1)
             for x in range(space.n)]
    literal = True
    if v.sees_up:
        literal = literal and upper_semi_closed(space) and all(
            any(is_subset(c, space.leq[x]) for x in bits_of(c)) for c in irr)
    if v.sees_down:
        literal = literal and lower_semi_closed(space) and all(
            any(is_subset(c, downs[x]) for x in bits_of(c)) for c in irr)
    t1_sober = is_t1_topology(top) and sober_topology(top)
    if not (literal or t1_sober):
        return None, "hypotheses not satisfied"
    ads = ads_space(space, v)
    sob, _unit = standard_sobrification(top)
    pi = []
    for pr in ads.pairs:
        if pr.closed not in irr:
            return False, "pair closed set is not irreducible"
        pi.append(irr.index(pr.closed))
    if sorted(pi) != list(range(len(irr))):
        return False, {"pairs": len(ads.pairs), "sobrification_points": sob.n}
    mapped = {sum(1 << pi[i] for i in bits_of(u)) for u in ads.space.opens}
    if mapped != set(sob.opens):
        return False, "open families do not correspond"
    return True, {"hypothesis": "literal" if literal else "t1-sober"}


def _run_adt0_lemma(inst: Instance):
    space, v = inst.payload
    sober = is_ad_sober(space, v).ad_sober
    t0 = is_ad_t0(space)
    classes = equivalence_classes(space.leq)
    canonical = all(
        any(pr.closed == closure(space, 1 << x)
            and pr.cls == class_of(classes, x)
            for x in range(space.n))
        for pr in irreducible_pairs(space, v))
    if sober != (t0 and canonical):
        return False, {"ad_sober": sober, "ad_t0": t0,
                       "pairs_all_canonical": canonical}
    return True, None


def _run_idempotent(inst: Instance):
    if inst.kind == "adframe":
        frame, = inst.payload
        spectrum = adpt_space(frame)
        res = is_ad_sober(spectrum.space, frame.variant)
    else:
        space, v = inst.payload
        pair_space = ads_space(space, v).space
        res = is_ad_sober(pair_space, v)
    return res.ad_sober, res.witness


def _run_ind_valid(inst: Instance):
    lat, = inst.payload
    if lat.m < 2:
        return None, "one-element lattice: the lift is degenerate"
    report = validate_adframe(ind_functor(lat))
    if report.ok:
        return True, None
    return False, [c.law for c in report.failures()]


def _run_eps_valid(inst: Instance):
    frame, = inst.payload
    if frame.omega.m < 2:
        return None, "trivial opens lattice"
    try:
        eps = epsilon_hom(frame)
    except TrivialFrame:
        return None, "trivial opens lattice"
    report = validate_hom(eps)
    if report.ok:
        return True, None
    return False, [c.law for c in report.failures()]


_IND_ADJ_SIZE_GATE = 16


def _run_ind_adj(inst: Instance):
    lat, frame = inst.payload
    if lat.m < 2:
        return None, "one-element source lattice"
    if lat.m > _IND_ADJ_SIZE_GATE or frame.omega.m > 64:
        return None, "size gate"
    second = bounded_lattice_homs(_two_chain(), frame.ell)
    if second != [(frame.ell.bot, frame.ell.top)]:
        return False, {"second_component_maps": second}
    source = ind_functor(lat, variant=frame.variant)
    bnd = (frame.ell.bot, frame.ell.top)
    valid = []
    for phi in bounded_lattice_homs(lat, frame.omega):
        cand = AdFrameHom(source, frame, tuple(phi), bnd)
        if validate_hom(cand).ok:
            valid.append(cand)
    eps = epsilon_hom(frame)
    for cand in valid:
        through = compose_homs(
            eps, ind_functor(lat, psi=cand.phi, target=frame.omega,
                             variant=frame.variant))
        if through.key() != cand.key():
            return False, {"phi": cand.phi}
    return True, {"valid_homs": len(valid)}


def _sweep_ind_adj(spec: SweepSpec) -> Iterator[Instance]:
    lattices = [lat for lat in _opens_lattices(spec.n) if lat.m >= 2]
    spaces = enumerate_spaces(spec.n)

    def make(lat, sp, v):
        doc = {"kind": "hom-family", "source_lattice": lat.m,
               "frame_space": describe_space(sp), "variant": v.value}
        return Instance("hom-family", (lat, build_ado(sp, v)), doc)

    if spec.count is None and spec.n <= 2:
        for v in spec.variants:
            for lat in lattices:
                for sp in spaces:
                    yield make(lat, sp, v)
        return
    count = spec.count or _DEFAULT_SAMPLES
    rng = random.Random(f"sweep-ind-adj|{spec.n}|{spec.seed}")
    for _ in range(count):
        yield make(rng.choice(lattices), rng.choice(spaces),
                   rng.choice(spec.variants))


def _run_lift_square(inst: Instance):
    top, v = inst.payload
    if top.n == 0:
        return None, "empty carrier"
    left = build_ado(basic_functors("ind_space", top), v)
    right = ind_functor(subset_lattice(_as_discrete(top), "opens"), variant=v)
    iso = iso_check("adframe", left, right)
    if iso is None:
        return False, {"left": (left.omega.m, left.ell.m),
                       "right": (right.omega.m, right.ell.m)}
    return True, None


def _run_cex_lift(inst: Instance):
    space, v = inst.payload
    if not _cex_qualifies(space):
        return None, "needs a discrete preorder over a non-sober topology"
    frame = build_ado(space, v)
    spectrum = adpt_space(frame)
    classical = frame_point_space(frame.omega)
    perm = iso_check("top", spectrum.space.topology(), classical)
    counts = {"spectrum_points": len(spectrum.points),
              "frame_points": classical.n}
    return perm is not None, counts


def _sweep_eps(spec: SweepSpec) -> Iterator[Instance]:
    for inst in _sweep_spaces(spec):
        space, v = inst.payload
        yield frame_instance(build_ado(space, v), {"from_space": describe_space(space)})


def _sweep_lattices(spec: SweepSpec) -> Iterator[Instance]:
    for lat in _opens_lattices(spec.n):
        yield lattice_instance(lat)


# ---------------------------------------------------------------------------
# the registry itself


def _add(id_: str, doc: str, run, sweep, expected_fail: bool = False) -> None:
    _REGISTRY[id_] = _Entry(id_, doc, run, sweep, expected_fail)


_add("ADO-VALID",
     "The four extensional relations of any preordered space satisfy every "
     "frame law of the chosen variant.",
     _run_ado_valid, _sweep_spaces)
_add("ADJ-TRIANGLE",
     "The transpose of a map into a spectrum is the unique hom whose "
     "spectrum map closes the triangle with the unit; transposing the "
     "adjoint of a hom gives the hom back.",
     _run_triangle, _sweep_triangle)
_add("ADJ-EXISTS",
     "The unit is natural: spectra of preimage homs commute with it.",
     _run_adj_exists, _sweep_morphisms)
_add("USC-LSC",
     "Semi-closedness of a space is recoverable from its frame, and "
     "semi-closed frames have semi-closed spectra.",
     _run_usc_lsc, _sweep_spaces)
_add("ADS-ISO",
     "The irreducible-pair space is isomorphic to the spectrum of the "
     "space's frame.",
     _run_ads_iso, _sweep_spaces)
_add("OS-ISO",
     "Opens and up-closed sets transfer to the pair space by order "
     "isomorphisms.",
     _run_os_iso, _sweep_spaces)
_add("ETA-PREIMAGE",
     "Pulling transferred opens and up-sets back along the canonical map "
     "into the pair space recovers the originals.",
     _run_eta_preimage, _sweep_spaces)
_add("ADSOBER-EQ",
     "The pair-space route, the unit-bijectivity route, and unit "
     "invertibility agree on which spaces are sober for the pair notion.",
     _run_adsober_eq, _sweep_spaces)
_add("NAT-IND",
     "Indiscrete lift then pair space agrees naturally with classical "
     "sobrification then indiscrete lift.",
     _run_nat_ind, _sweep_top_morphisms)
_add("NAT-DISCR",
     "Discrete lift then pair space returns the original space, "
     "naturally.",
     _run_nat_discr, _sweep_top_morphisms)
_add("CEX-ADS",
     "With a discrete preorder over a non-sober topology the pair space "
     "is NOT the classical sobrification; expected to fail.",
     _run_cex_ads, _sweep_cex, expected_fail=True)
_add("HOMEO-ADS",
     "Under semi-closedness with pointed irreducible sets (or T1 sober), "
     "forgetting classes maps the pair space onto the sobrification "
     "homeomorphically.",
     _run_homeo_ads, _sweep_spaces)
_add("ADT0-LEMMA",
     "Pair-sobriety is exactly the order-T0 condition plus every "
     "irreducible pair being a point's canonical pair.",
     _run_adt0_lemma, _sweep_spaces)
_add("IDEMPOTENT",
     "Pair spaces (equivalently all spectra) are themselves sober for the "
     "pair notion.",
     _run_idempotent, _sweep_spaces)
_add("IND-VALID",
     "The two-sided lift of any nontrivial distributive lattice is a "
     "valid frame.",
     _run_ind_valid, _sweep_lattices)
_add("EPS-VALID",
     "The counit comparison from the two-sided lift of a frame's opens "
     "back to the frame is a valid hom.",
     _run_eps_valid, _sweep_eps)
_add("IND-ADJ",
     "Every hom out of a two-sided lift forces the bottom/top second "
     "component and factors uniquely through the counit.",
     _run_ind_adj, _sweep_ind_adj)
_add("LIFT-SQUARE",
     "On nonempty carriers, the frame of the indiscrete lift is "
     "isomorphic to the two-sided lift of the opens lattice.",
     _run_lift_square, _sweep_topologies)
_add("CEX-LIFT",
     "With a discrete preorder over a non-sober topology the spectrum "
     "disagrees with the classical frame spectrum; expected to fail.",
     _run_cex_lift, _sweep_cex, expected_fail=True)


# ---------------------------------------------------------------------------
# single-payload instance builders (used by the command line)


def instances_for_payload(theorem_id: str, payload,
                          variant=Variant.BOTH) -> list[Instance]:
    """Adapt one JSON payload (space, frame, or lattice) to the instance
    kind a check expects.  Morphism checks get the family of self-maps."""
    entry = _lookup(theorem_id)
    variant = Variant.parse(variant)
    if isinstance(payload, AdFrame):
        if theorem_id in ("IDEMPOTENT", "EPS-VALID", "USC-LSC"):
            return [frame_instance(payload)]
        raise ValueError(f"{theorem_id} needs a space payload")
    if isinstance(payload, FinLattice):
        if theorem_id == "IND-VALID":
            return [lattice_instance(payload)]
        raise ValueError(f"{theorem_id} needs a space payload")
    space = payload
    if theorem_id in ("NAT-IND", "NAT-DISCR", "LIFT-SQUARE"):
        return [top_instance(space.topology(), variant)]
    if theorem_id == "IND-VALID":
        return [lattice_instance(subset_lattice(space, "opens"))]
    if theorem_id == "EPS-VALID":
        return [frame_instance(build_ado(space, variant),
                               {"from_space": describe_space(space)})]
    if theorem_id == "IND-ADJ":
        lat = subset_lattice(space, "opens")
        doc = {"kind": "hom-family", "source_lattice": lat.m,
               "frame_space": describe_space(space), "variant": variant.value}
        return [Instance("hom-family", (lat, build_ado(space, variant)), doc)]
    if theorem_id == "ADJ-EXISTS":
        return [_morphism_instance(space, space, m, variant)
                for m in pretop_maps(space, space)]
    if theorem_id == "ADJ-TRIANGLE":
        spectrum = adpt_space(build_ado(space, variant))
        out = []
        for m in pretop_maps(space, spectrum.space):
            doc = {"kind": "triangle", "space": describe_space(space),
                   "frame_space": describe_space(space),
                   "map": list(m), "variant": variant.value}
            out.append(Instance("triangle", (space, spectrum, m, variant), doc))
        return out
    return [space_instance(space, variant)]
