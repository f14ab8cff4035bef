"""Points of ad-frames and the spectrum construction.

A point is a pair (x, s): x a completely prime filter of the opens side,
s a completely prime complete filter of the lattice side, subject to the
four relation conditions of the frame's variant.  Both components are bit
vectors over lattice element indices.

Two enumeration routes exist and must agree: the prime route walks prime
elements of the opens side and pitchfork pairs of the lattice side; the
brute-force route scans every subset pair and tests the definitions
directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .bits import canonical_subsets, full_mask, is_subset, iter_bits
from .errors import (
    BudgetExceeded,
    InternalCheckError,
    NotAPointMap,
    NotContinuous,
    NotMonotone,
)
from . import finord
from .finord import FinLattice, FinPreTopSpace, lattice_analyze
from .frames import (AdFrame, AdFrameHom, Variant, bounded_lattice_homs,
                     build_ado, validate_hom)

_BRUTE_GATE = 20


@dataclass(frozen=True, order=True)
class AdPoint:
    x: int  # filter on the opens side, mask over omega element indices
    s: int  # complete filter on the lattice side, mask over ell indices


def min_of_filter(ell: FinLattice, s_mask: int) -> int:
    """The least member of an up-closed s (its generating element)."""
    for b in iter_bits(s_mask):
        if ell.up_masks[b] == s_mask:
            return b
    raise ValueError("subset is not the up-cone of any element")


def point_sort_key(pt: AdPoint, ell: FinLattice) -> tuple[int, int]:
    return (min_of_filter(ell, pt.s), pt.x)


# ---------------------------------------------------------------------------
# filter predicates (used by the brute-force route and the validator tests)


def is_cp_filter(lat: FinLattice, mask: int) -> bool:
    """Completely prime filter: non-empty, up-closed, meet-closed, avoids
    bottom, complement closed under binary join."""
    if mask == 0 or mask >> lat.bot & 1:
        return False
    members = list(iter_bits(mask))
    for i in members:
        if lat.up_masks[i] & ~mask:
            return False
    for i in members:
        for j in members:
            if not mask >> lat.meet(i, j) & 1:
                return False
    comp = full_mask(lat.m) & ~mask
    for i in iter_bits(comp):
        for j in iter_bits(comp):
            if mask >> lat.join(i, j) & 1:
                return False
    return True


def is_cpc_filter(lat: FinLattice, mask: int) -> bool:
    """Completely prime complete filter: the up-cone of a coprime element."""
    if mask == 0:
        return False
    members = list(iter_bits(mask))
    b = lat.meet_all(members)
    if not mask >> b & 1 or lat.up_masks[b] != mask:
        return False
    if b == lat.bot:
        return False
    above_b = lat.leq[b]
    joins_above = above_b[lat.join_table]
    viol = joins_above & ~above_b[:, None] & ~above_b[None, :]
    return not viol.any()


def point_conditions_ok(frame: AdFrame, x: int, s: int) -> bool:
    """The defining point conditions, verbatim, for the frame's variant."""
    if frame.variant.sees_up:
        for u, a in frame.tot:
            if not (x >> u & 1 or s >> a & 1):
                return False
        for u, a in frame.con:
            if x >> u & 1 and s >> a & 1:
                return False
    if frame.variant.sees_down:
        for u, a in frame.fof:
            if not (x >> u & 1 or not s >> a & 1):
                return False
        for u, a in frame.cou:
            if not (not x >> u & 1 or s >> a & 1):
                return False
    return True


# ---------------------------------------------------------------------------
# enumeration


def _enumerate_prime(frame: AdFrame) -> tuple[AdPoint, ...]:
    omega, ell = frame.omega, frame.ell
    primes = lattice_analyze(omega).primes
    forks = lattice_analyze(ell).pitchfork
    O, E = omega.leq, ell.leq
    u8 = np.uint8

    # bad1[p, b]: some (p, a) in tot without b <= a; bad2[b, p]: some (u, b)
    # in con without u <= p; bad3/bad4 are the fof/cou analogues with q.
    tot_m = frame.rel_matrix("tot").astype(u8)
    con_m = frame.rel_matrix("con").astype(u8)
    fof_m = frame.rel_matrix("fof").astype(u8)
    cou_m = frame.rel_matrix("cou").astype(u8)
    not_O = (~O).astype(u8)
    not_E = (~E).astype(u8)
    bad1 = (tot_m @ not_E.T) > 0
    bad2 = (con_m.T @ not_O) > 0
    bad3 = (fof_m @ not_E) > 0
    bad4 = (cou_m.T @ not_O) > 0

    found = []
    for p in primes:
        x = full_mask(omega.m) & ~omega.down_masks[p]
        for q, b in forks:
            if frame.variant.sees_up and (bad1[p, b] or bad2[b, p]):
                continue
            if frame.variant.sees_down and (bad3[p, q] or bad4[q, p]):
                continue
            found.append((b, x, ell.up_masks[b]))
    found.sort()
    return tuple(AdPoint(x, s) for _, x, s in found)


def _enumerate_bruteforce(frame: AdFrame) -> tuple[AdPoint, ...]:
    omega, ell = frame.omega, frame.ell
    if omega.m > _BRUTE_GATE or ell.m > _BRUTE_GATE:
        raise BudgetExceeded(
            f"brute-force point scan gated at {_BRUTE_GATE} lattice elements")
    xs = [m for m in range(1 << omega.m) if is_cp_filter(omega, m)]
    ss = [m for m in range(1 << ell.m) if is_cpc_filter(ell, m)]
    pts = [AdPoint(x, s) for x in xs for s in ss
           if point_conditions_ok(frame, x, s)]
    pts.sort(key=lambda pt: point_sort_key(pt, ell))
    return tuple(pts)


def enumerate_points(frame: AdFrame, algorithm: str = "prime") -> tuple[AdPoint, ...]:
    if algorithm == "prime":
        return _enumerate_prime(frame)
    if algorithm == "bruteforce":
        return _enumerate_bruteforce(frame)
    raise ValueError(f"unknown point enumeration algorithm {algorithm!r}")


# ---------------------------------------------------------------------------
# spectra


@dataclass(eq=False)
class Spectrum:
    """The space of points of an ad-frame.

    ``open_map`` sends each opens-side element u to the subset of points
    whose first component contains u; ``upset_map`` is the lattice-side
    counterpart.  The preorder compares second components by inclusion.
    """

    frame: AdFrame
    points: tuple[AdPoint, ...]
    space: FinPreTopSpace
    open_map: tuple[int, ...]
    upset_map: tuple[int, ...]

    def point_index(self, pt: AdPoint) -> Optional[int]:
        try:
            return self.points.index(pt)
        except ValueError:
            return None


def adpt_space(frame: AdFrame) -> Spectrum:
    points = enumerate_points(frame, "prime")
    n = len(points)
    open_map = []
    for u in range(frame.omega.m):
        mask = 0
        for i, pt in enumerate(points):
            if pt.x >> u & 1:
                mask |= 1 << i
        open_map.append(mask)
    upset_map = []
    for a in range(frame.ell.m):
        mask = 0
        for i, pt in enumerate(points):
            if pt.s >> a & 1:
                mask |= 1 << i
        upset_map.append(mask)
    opens = canonical_subsets(open_map)
    rows = tuple(
        sum(1 << j for j, other in enumerate(points) if is_subset(pt.s, other.s))
        for pt in points
    )
    try:
        finord._check_topology(opens, n)
    except Exception as exc:  # structurally impossible for a valid frame
        raise InternalCheckError(f"spectrum opens are not a topology: {exc}") from exc
    space = FinPreTopSpace(n, opens, rows)
    if set(finord.upset_family(space)) != set(upset_map):
        raise InternalCheckError(
            "up-closed sets of the spectrum do not all come from lattice elements")
    return Spectrum(frame, points, space, tuple(open_map), tuple(upset_map))


@dataclass(eq=False)
class SpectrumMap:
    dom: Spectrum
    cod: Spectrum
    mapping: tuple[int, ...]


def adpt_hom(hom: AdFrameHom, dom: Optional[Spectrum] = None,
             cod: Optional[Spectrum] = None) -> SpectrumMap:
    """Spectrum map induced by a hom, contravariantly: a point of the
    target pulls back along (phi, p) to a point of the source."""
    dom = dom if dom is not None else adpt_space(hom.target)
    cod = cod if cod is not None else adpt_space(hom.source)
    mapping = []
    for pt in dom.points:
        x = sum(1 << v for v in range(hom.source.omega.m) if pt.x >> hom.phi[v] & 1)
        s = sum(1 << a for a in range(hom.source.ell.m) if pt.s >> hom.p[a] & 1)
        idx = cod.point_index(AdPoint(x, s))
        if idx is None:
            raise InternalCheckError(
                f"pullback of point {pt} along the hom is not a point")
        mapping.append(idx)
    smap = SpectrumMap(dom, cod, tuple(mapping))
    bad = finord.continuity_failure(dom.space, cod.space, smap.mapping)
    if bad is not None:
        raise InternalCheckError("induced spectrum map is not continuous")
    if finord.monotonicity_failure(dom.space, cod.space, smap.mapping) is not None:
        raise InternalCheckError("induced spectrum map is not monotone")
    return smap


# ---------------------------------------------------------------------------
# the unit


@dataclass(eq=False)
class Eta:
    """Unit of the adjunction at one space: x goes to (opens around x,
    up-closed sets around x) inside the spectrum of the space's ad-frame."""

    frame: AdFrame
    spectrum: Spectrum
    mapping: tuple[int, ...]


def eta_map(space: FinPreTopSpace, variant=Variant.BOTH) -> Eta:
    variant = Variant.parse(variant)
    frame = build_ado(space, variant)
    spectrum = adpt_space(frame)
    mapping = []
    for x in range(space.n):
        nx = sum(1 << u for u, lab in enumerate(frame.omega.labels) if lab >> x & 1)
        ux = sum(1 << a for a, lab in enumerate(frame.ell.labels) if lab >> x & 1)
        idx = spectrum.point_index(AdPoint(nx, ux))
        if idx is None:
            raise InternalCheckError(f"unit image of point {x} is not a point")
        mapping.append(idx)
    eta = Eta(frame, spectrum, tuple(mapping))
    for u, lab in enumerate(frame.omega.labels):
        if finord.preimage(eta.mapping, spectrum.open_map[u]) != lab:
            raise InternalCheckError("unit does not pull spectrum opens back to opens")
    if finord.monotonicity_failure(space, spectrum.space, eta.mapping) is not None:
        raise InternalCheckError("unit is not monotone")
    return eta


# ---------------------------------------------------------------------------
# transpose


_UNIQUE_GATE = 64


def transpose(space: FinPreTopSpace, spectrum: Spectrum,
              mapping: Sequence) -> AdFrameHom:
    """Universal-property transpose of a continuous monotone map into a
    spectrum: the hom whose spectrum map composed with the unit gives the
    map back.  Verifies the triangle; runs an exhaustive uniqueness scan on
    small instances."""
    frame = spectrum.frame
    idxs = []
    for value in mapping:
        if isinstance(value, AdPoint):
            idx = spectrum.point_index(value)
            if idx is None:
                raise NotAPointMap(f"{value} is not a point of the spectrum")
        else:
            idx = int(value)
            if not (0 <= idx < len(spectrum.points)):
                raise NotAPointMap(f"point index {idx} out of range")
        idxs.append(idx)
    idxs = tuple(idxs)

    bad = finord.continuity_failure(space, spectrum.space, idxs)
    if bad is not None:
        raise NotContinuous(f"map into the spectrum pulls back open "
                            f"{bad} to a non-open")
    if finord.monotonicity_failure(space, spectrum.space, idxs) is not None:
        raise NotMonotone("map into the spectrum is not monotone")

    ado_x = build_ado(space, frame.variant)
    omega_index = {lab: i for i, lab in enumerate(ado_x.omega.labels)}
    ell_index = {lab: i for i, lab in enumerate(ado_x.ell.labels)}
    phi = []
    for v in range(frame.omega.m):
        mask = sum(1 << x for x in range(space.n)
                   if spectrum.points[idxs[x]].x >> v & 1)
        phi.append(omega_index[mask])
    p = []
    for a in range(frame.ell.m):
        mask = sum(1 << x for x in range(space.n)
                   if spectrum.points[idxs[x]].s >> a & 1)
        p.append(ell_index[mask])
    hom = AdFrameHom(frame, ado_x, tuple(phi), tuple(p))
    rep = validate_hom(hom)
    if not rep.ok:
        raise InternalCheckError(f"transpose is not a hom: {rep.failures()}")

    eta = eta_map(space, frame.variant)
    smap = adpt_hom(hom, dom=eta.spectrum, cod=spectrum)
    for x in range(space.n):
        if smap.mapping[eta.mapping[x]] != idxs[x]:
            raise InternalCheckError(f"transpose triangle fails at point {x}")

    if frame.omega.m * ado_x.omega.m <= _UNIQUE_GATE:
        _uniqueness_scan(space, spectrum, idxs, hom, eta)
    return hom


def pullback_point(hom: AdFrameHom, pt: AdPoint) -> AdPoint:
    """Image of a spectrum point of the target under the spectrum map of a
    hom: componentwise preimage of the two filters."""
    x = sum(1 << v for v in range(hom.source.omega.m) if pt.x >> hom.phi[v] & 1)
    s = sum(1 << a for a in range(hom.source.ell.m) if pt.s >> hom.p[a] & 1)
    return AdPoint(x, s)


def _uniqueness_scan(space, spectrum, idxs, hom, eta) -> None:
    """All valid homs satisfying the triangle must equal the computed one.
    Candidates come from the bounded-lattice-hom enumerator on each side,
    so the scan stays cheap even when raw map counts would explode."""
    frame, ado_x = hom.source, hom.target
    matches = []
    for phi in bounded_lattice_homs(frame.omega, ado_x.omega):
        for p in bounded_lattice_homs(frame.ell, ado_x.ell):
            cand = AdFrameHom(frame, ado_x, phi, p)
            if not validate_hom(cand).ok:
                continue
            ok = True
            for x in range(space.n):
                pulled = pullback_point(cand, eta.spectrum.points[eta.mapping[x]])
                if spectrum.point_index(pulled) != idxs[x]:
                    ok = False
                    break
            if ok:
                matches.append(cand)
    if len(matches) != 1 or matches[0].key() != hom.key():
        raise InternalCheckError(
            f"uniqueness scan found {len(matches)} triangle-compatible homs")


# ---------------------------------------------------------------------------
# separation


def is_ad_t0(space: FinPreTopSpace) -> bool:
    """Antisymmetry of specialization intersected with the preorder."""
    spec = finord.specialization_preorder(space)
    for x in range(space.n):
        both_x = spec[x] & space.leq[x]
        for y in iter_bits(both_x):
            if y != x and spec[y] >> x & 1 and space.leq[y] >> x & 1:
                return False
    return True


@dataclass(frozen=True)
class SoberResult:
    ad_sober: bool
    witness: Optional[tuple] = None


def is_ad_sober(space: FinPreTopSpace, variant=Variant.BOTH) -> SoberResult:
    """Two agreeing routes: the canonical pairs map (closure of x with the
    class of x) is bijective onto the irreducible pairs, iff the unit is
    bijective onto the spectrum."""
    from . import sobrify  # local import; sobrify builds on this module

    variant = Variant.parse(variant)
    pairs = sobrify.irreducible_pairs(space, variant)
    classes = finord.equivalence_classes(space.leq)
    assigned = {}
    route_a = True
    witness: Optional[tuple] = None
    for x in range(space.n):
        pair = sobrify.IrreduciblePair(finord.closure(space, 1 << x),
                                       finord.class_of(classes, x))
        if pair in assigned:
            route_a = False
            witness = ("unit-collision", assigned[pair], x)
            break
        assigned[pair] = x
    if route_a and set(assigned) != set(pairs):
        route_a = False
        missing = sorted(set(pairs) - set(assigned), key=lambda p: (p.closed, p.cls))
        extra = sorted(set(assigned) - set(pairs), key=lambda p: (p.closed, p.cls))
        witness = ("pair-mismatch", tuple(missing), tuple(extra))

    eta = eta_map(space, variant)
    route_b = (len(set(eta.mapping)) == space.n
               and len(eta.spectrum.points) == space.n)
    if route_a != route_b:
        raise InternalCheckError(
            f"sobriety routes disagree: pairs say {route_a}, unit says {route_b}")
    return SoberResult(route_a, witness)
