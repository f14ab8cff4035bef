"""Sobrification constructions.

The classical sobrification of the topology lives alongside the two-sided
one whose carrier is the set of irreducible pairs: an irreducible closed
set C together with a preorder-equivalence class [x], subject to
variant-dependent compatibility (meeting the cone of x and landing inside
the closure of the opposite cone).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bits import bits_of, canonical_subsets, is_subset, iter_bits, subset_key
from .errors import ImageNotIrreducible, InternalCheckError, NotContinuous, NotMonotone
from . import finord
from .finord import (
    FinPreTopSpace,
    FinTopSpace,
    class_of,
    closure,
    downclose,
    equivalence_classes,
    irreducible_closed_sets,
    upclose,
    upset_family,
)
from .frames import Variant, build_ado
from .duality import AdPoint, Spectrum, adpt_space


@dataclass(frozen=True)
class IrreduciblePair:
    """closed: an irreducible closed subset mask; cls: the full class mask
    (representative = lowest bit)."""

    closed: int
    cls: int

    @property
    def rep(self) -> int:
        return (self.cls & -self.cls).bit_length() - 1


def _pair_ok(space: FinPreTopSpace, c: int, x: int, variant: Variant) -> bool:
    if variant.sees_up:
        if c & downclose(space, 1 << x) == 0:
            return False
        if not is_subset(c, closure(space, upclose(space, 1 << x))):
            return False
    if variant.sees_down:
        if c & upclose(space, 1 << x) == 0:
            return False
        if not is_subset(c, closure(space, downclose(space, 1 << x))):
            return False
    return True


def irreducible_pairs(space: FinPreTopSpace, variant=Variant.BOTH) -> tuple[IrreduciblePair, ...]:
    variant = Variant.parse(variant)
    classes = equivalence_classes(space.leq)
    out = []
    for c in irreducible_closed_sets(space):
        for cls in classes:
            members = bits_of(cls)
            ok = _pair_ok(space, c, members[0], variant)
            if len(members) > 1 and _pair_ok(space, c, members[1], variant) != ok:
                raise InternalCheckError(
                    "pair conditions depend on the class representative")
            if ok:
                out.append(IrreduciblePair(c, cls))
    out.sort(key=lambda p: (subset_key(p.closed), subset_key(p.cls)))
    return tuple(out)


# ---------------------------------------------------------------------------
# classical sobrification


def standard_sobrification(space) -> tuple[FinTopSpace, tuple[int, ...]]:
    """(space of irreducible closed sets with the diamond topology, unit)."""
    irr = irreducible_closed_sets(space)
    opens = []
    for u in space.opens:
        opens.append(sum(1 << i for i, c in enumerate(irr) if c & u))
    family = canonical_subsets(opens)
    if len(family) != len(space.opens):
        raise InternalCheckError("diamond map identified two distinct opens")
    result = FinTopSpace(len(irr), family)
    finord._check_topology(result.opens, result.n)
    unit = tuple(irr.index(closure(space, 1 << x)) for x in range(space.n))
    for u, diam in zip(space.opens, opens):
        if finord.preimage(unit, diam) != u:
            raise InternalCheckError("sobrification unit is not continuous")
    return result, unit


# ---------------------------------------------------------------------------
# two-sided sobrification


@dataclass(eq=False)
class AdsSpace:
    """``diamond_map[k]`` is the image of ``base.opens[k]``; ``bracket_map[a]``
    the image of the a-th up-closed set of the base (canonical order)."""

    base: FinPreTopSpace
    variant: Variant
    pairs: tuple[IrreduciblePair, ...]
    space: FinPreTopSpace
    diamond_map: tuple[int, ...]
    bracket_map: tuple[int, ...]
    upsets: tuple[int, ...]

    def pair_index(self, pair: IrreduciblePair) -> int:
        return self.pairs.index(pair)


def ads_space(space: FinPreTopSpace, variant=Variant.BOTH) -> AdsSpace:
    """The irreducible-pair space, with both transfer maps verified to be
    order isomorphisms onto the opens and the up-closed sets."""
    variant = Variant.parse(variant)
    pairs = irreducible_pairs(space, variant)
    n = len(pairs)
    diamond = tuple(
        sum(1 << i for i, pr in enumerate(pairs) if pr.closed & u)
        for u in space.opens
    )
    base_upsets = upset_family(space)
    bracket = tuple(
        sum(1 << i for i, pr in enumerate(pairs) if pr.cls & a)
        for a in base_upsets
    )
    opens = canonical_subsets(diamond)
    if len(opens) != len(space.opens):
        raise InternalCheckError("diamond map identified two distinct opens")
    rows = tuple(
        sum(1 << j for j, other in enumerate(pairs)
            if space.leq[pr.rep] >> other.rep & 1)
        for pr in pairs
    )
    finord._check_topology(opens, n)
    result = FinPreTopSpace(n, opens, rows)

    for i, u in enumerate(space.opens):
        for j, v in enumerate(space.opens):
            if is_subset(u, v) != is_subset(diamond[i], diamond[j]):
                raise InternalCheckError(
                    "diamond map is not an order isomorphism onto the opens")
    result_upsets = set(upset_family(result))
    if len(set(bracket)) != len(base_upsets) or set(bracket) != result_upsets:
        raise InternalCheckError(
            "bracket map is not a bijection onto the up-closed sets")
    for i, a in enumerate(base_upsets):
        for j, b in enumerate(base_upsets):
            if is_subset(a, b) != is_subset(bracket[i], bracket[j]):
                raise InternalCheckError(
                    "bracket map is not an order isomorphism onto the up-closed sets")
    return AdsSpace(space, variant, pairs, result, diamond, bracket, base_upsets)


@dataclass(eq=False)
class AdsMap:
    dom: AdsSpace
    cod: AdsSpace
    mapping: tuple[int, ...]


def ads_hom(mapping: Sequence[int], src: FinPreTopSpace, dst: FinPreTopSpace,
            variant=Variant.BOTH) -> AdsMap:
    """Image of a continuous monotone map on irreducible pairs: close the
    direct image of C, push the class through."""
    variant = Variant.parse(variant)
    bad = finord.continuity_failure(src, dst, mapping)
    if bad is not None:
        raise NotContinuous(f"preimage of open {bits_of(bad)} is not open")
    if finord.monotonicity_failure(src, dst, mapping) is not None:
        raise NotMonotone("map does not respect the preorders")
    ads_src = ads_space(src, variant)
    ads_dst = ads_space(dst, variant)
    classes_dst = equivalence_classes(dst.leq)
    index = {pr: i for i, pr in enumerate(ads_dst.pairs)}
    out = []
    for pr in ads_src.pairs:
        d = closure(dst, finord.image(mapping, pr.closed))
        cls = class_of(classes_dst, mapping[pr.rep])
        target = IrreduciblePair(d, cls)
        if target not in index:
            raise ImageNotIrreducible(
                f"image pair ({bits_of(d)}, class of {mapping[pr.rep]}) "
                f"is not an irreducible pair")
        out.append(index[target])
    amap = AdsMap(ads_src, ads_dst, tuple(out))
    if finord.continuity_failure(ads_src.space, ads_dst.space, amap.mapping) is not None:
        raise InternalCheckError("pair-space image map is not continuous")
    if finord.monotonicity_failure(ads_src.space, ads_dst.space, amap.mapping) is not None:
        raise InternalCheckError("pair-space image map is not monotone")
    return amap


# ---------------------------------------------------------------------------
# agreement with the spectrum


@dataclass(eq=False)
class AdsAdptIso:
    """Explicit isomorphism between the irreducible-pair space and the
    spectrum of the space's ad-frame, plus the pair-space unit."""

    ads: AdsSpace
    spectrum: Spectrum
    forward: tuple[int, ...]   # pair index -> point index
    unit: tuple[int, ...]      # base point -> pair index


def ads_adpt_iso(space: FinPreTopSpace, variant=Variant.BOTH) -> AdsAdptIso:
    variant = Variant.parse(variant)
    ads = ads_space(space, variant)
    frame = build_ado(space, variant)
    spectrum = adpt_space(frame)

    forward = []
    for pr in ads.pairs:
        x = sum(1 << u for u, lab in enumerate(frame.omega.labels) if lab & pr.closed)
        s = sum(1 << a for a, lab in enumerate(frame.ell.labels) if lab & pr.cls)
        idx = spectrum.point_index(AdPoint(x, s))
        if idx is None:
            raise InternalCheckError(f"pair {pr} does not map to a point")
        forward.append(idx)
    if len(set(forward)) != len(forward) or len(forward) != len(spectrum.points):
        raise InternalCheckError("pair space and spectrum are not in bijection")

    # opens and up-closed sets correspond along the bijection
    for k in range(len(space.opens)):
        transported = sum(1 << forward[i] for i in iter_bits(ads.diamond_map[k]))
        if transported != spectrum.open_map[k]:
            raise InternalCheckError("diamond opens do not match spectrum opens")
    for a in range(len(ads.upsets)):
        transported = sum(1 << forward[i] for i in iter_bits(ads.bracket_map[a]))
        if transported != spectrum.upset_map[a]:
            raise InternalCheckError("bracket sets do not match spectrum up-sets")
    for i, pr in enumerate(ads.pairs):
        for j, other in enumerate(ads.pairs):
            here = ads.space.leq[i] >> j & 1
            there = spectrum.space.leq[forward[i]] >> forward[j] & 1
            if here != there:
                raise InternalCheckError("bijection does not respect the preorders")

    classes = equivalence_classes(space.leq)
    pair_index = {pr: i for i, pr in enumerate(ads.pairs)}
    unit = []
    for x in range(space.n):
        pr = IrreduciblePair(closure(space, 1 << x), class_of(classes, x))
        if pr not in pair_index:
            raise InternalCheckError(f"unit image of point {x} is not a pair")
        unit.append(pair_index[pr])
    unit = tuple(unit)
    for k, u in enumerate(space.opens):
        if finord.preimage(unit, ads.diamond_map[k]) != u:
            raise InternalCheckError("unit preimage of a diamond open is off")
    for a, lab in enumerate(ads.upsets):
        if finord.preimage(unit, ads.bracket_map[a]) != lab:
            raise InternalCheckError("unit preimage of a bracket set is off")
    return AdsAdptIso(ads, spectrum, tuple(forward), unit)
