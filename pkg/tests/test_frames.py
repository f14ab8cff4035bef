import itertools

import pytest

from adframe import (AdFrame, TrivialFrame, Variant, VariantMismatch,
                     adframe_from_json, adframe_to_json, bnd_map,
                     bounded_lattice_homs, build_ado, build_ado_hom,
                     check_usc_lsc, compose_homs, epsilon_hom, identity_hom,
                     ind_functor, subset_lattice, validate_adframe,
                     validate_hom)
from adframe.bits import is_subset
from adframe.frames import AdFrameHom, _two_chain
from adframe.theorems import enumerate_spaces, pretop_maps, upper_semi_closed, lower_semi_closed

from helpers import CHAIN3, SIERPINSKI, pts

VARIANTS = (Variant.UP, Variant.DOWN, Variant.BOTH)


def relation_oracle(space):
    """The four relations recomputed from their set definitions."""
    omega = subset_lattice(space, "opens")
    ell = subset_lattice(space, "upsets")
    full = pts(space.full)
    out = {"tot": set(), "con": set(), "fof": set(), "cou": set()}
    for i, u in enumerate(omega.labels):
        for j, a in enumerate(ell.labels):
            if pts(u) | pts(a) == full:
                out["tot"].add((i, j))
            if not pts(u) & pts(a):
                out["con"].add((i, j))
            if pts(u) >= pts(a):
                out["fof"].add((i, j))
            if pts(u) <= pts(a):
                out["cou"].add((i, j))
    return out


def test_relations_match_definitions_exhaustive_n2():
    for sp in enumerate_spaces(2):
        frame = build_ado(sp)
        oracle = relation_oracle(sp)
        for name in ("tot", "con", "fof", "cou"):
            assert frame.rel(name) == oracle[name], (sp, name)


def test_sierpinski_relations_spot():
    frame = build_ado(SIERPINSKI)
    # omega: {}, {1}, {0,1}; ell: {}, {0}, {0,1}
    assert frame.omega.labels == (0, 2, 3)
    assert frame.ell.labels == (0, 1, 3)
    assert frame.tot == {(0, 2), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)}
    assert frame.con == {(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)}
    assert frame.fof == {(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)}
    assert frame.cou == {(0, 0), (0, 1), (0, 2), (1, 2), (2, 2)}


@pytest.mark.parametrize("variant", VARIANTS)
def test_validator_passes_on_canonical_frames(variant):
    for sp in enumerate_spaces(2):
        report = validate_adframe(build_ado(sp, variant))
        assert report.ok, report.failures()


def drop(rel, pair):
    assert pair in rel
    return frozenset(rel - {pair})


def test_validator_flags_missing_top_pair():
    frame = build_ado(SIERPINSKI)
    tt = (frame.omega.top, frame.ell.bot)
    broken = AdFrame(frame.omega, frame.ell, drop(frame.tot, tt), frame.con,
                     frame.fof, frame.cou, frame.variant)
    failed = {c.law for c in validate_adframe(broken).failures()}
    assert "tot-has-tt" in failed


def test_validator_flags_upward_closure_gap():
    frame = build_ado(SIERPINSKI)
    broken = AdFrame(frame.omega, frame.ell,
                     drop(frame.tot, (frame.omega.top, frame.ell.top)),
                     frame.con, frame.fof, frame.cou, frame.variant)
    failed = {c.law for c in validate_adframe(broken).failures()}
    assert "tot-up-closed" in failed


def test_validator_flags_alignment_break():
    frame = build_ado(SIERPINSKI)
    # declare the top pair consistent as well: con and tot now share it
    broken = AdFrame(frame.omega, frame.ell, frame.tot,
                     frame.con | {(frame.omega.top, frame.ell.top)},
                     frame.fof, frame.cou, frame.variant)
    failed = {c.law for c in validate_adframe(broken).failures()}
    assert failed & {"con-tot-aligned", "con-down-closed", "con-cou-bottom",
                     "tot-cou-ell-top"}


def test_validator_variant_scoping():
    frame = build_ado(SIERPINSKI, Variant.UP)
    broken = AdFrame(frame.omega, frame.ell, frame.tot, frame.con,
                     frozenset(), frame.cou, Variant.UP)
    assert validate_adframe(broken).ok  # fof laws invisible to the Up variant
    assert not validate_adframe(broken.with_variant(Variant.BOTH)).ok


def test_validation_report_lists_every_law_once():
    report = validate_adframe(build_ado(CHAIN3))
    laws = [c.law for c in report.checks]
    assert len(laws) == len(set(laws))
    assert {"tot-has-ff", "con-scott-oracle", "fof-info-meet", "cou-fof-aligned",
            "con-cou-bottom"} <= set(laws)


# ---------------------------------------------------------------------------
# homs


def test_ado_hom_contravariant_functor_laws():
    spaces = enumerate_spaces(1) + enumerate_spaces(2)[:6]
    for sp in spaces:
        ident = build_ado_hom(tuple(range(sp.n)), sp, sp)
        assert ident.key() == identity_hom(build_ado(sp)).key()
    src, mid = enumerate_spaces(2)[3], SIERPINSKI
    for f in pretop_maps(src, mid):
        for g in pretop_maps(mid, CHAIN3):
            gf = tuple(g[f[x]] for x in range(src.n))
            left = build_ado_hom(gf, src, CHAIN3)
            right = compose_homs(build_ado_hom(f, src, mid),
                                 build_ado_hom(g, mid, CHAIN3))
            assert left.key() == right.key()


def test_ado_hom_validates_exhaustive_n2():
    for src in enumerate_spaces(2)[:8]:
        for dst in (SIERPINSKI, CHAIN3):
            for f in pretop_maps(src, dst):
                hom = build_ado_hom(f, src, dst)
                assert validate_hom(hom).ok


def test_validate_hom_rejects_non_hom():
    frame = build_ado(SIERPINSKI)
    bad = AdFrameHom(frame, frame, (0, 2, 2), (0, 1, 2))  # breaks disjointness
    report = validate_hom(bad)
    assert not report.ok
    assert any(c.law == "con-preserved" for c in report.failures())


def test_bounded_lattice_homs_against_bruteforce():
    two = _two_chain()
    opens = subset_lattice(CHAIN3, "opens")
    for src, dst in ((two, opens), (opens, two), (opens, opens)):
        brute = []
        for arr in itertools.product(range(dst.m), repeat=src.m):
            if arr[src.bot] != dst.bot or arr[src.top] != dst.top:
                continue
            if any(arr[src.join_table[i, j]] != dst.join_table[arr[i], arr[j]]
                   or arr[src.meet_table[i, j]] != dst.meet_table[arr[i], arr[j]]
                   for i in range(src.m) for j in range(src.m)):
                continue
            brute.append(arr)
        assert sorted(bounded_lattice_homs(src, dst)) == sorted(brute)


# ---------------------------------------------------------------------------
# semi-continuity flags


def test_usc_lsc_match_direct_semiclosedness():
    for sp in enumerate_spaces(2):
        usc, lsc = check_usc_lsc(build_ado(sp))
        assert usc == upper_semi_closed(sp)
        assert lsc == lower_semi_closed(sp)


def test_usc_lsc_variant_contract():
    up_frame = build_ado(SIERPINSKI, Variant.UP)
    usc, lsc = check_usc_lsc(up_frame)
    assert usc is not None and lsc is None
    with pytest.raises(VariantMismatch):
        check_usc_lsc(up_frame, side="lsc")
    assert check_usc_lsc(up_frame, side="usc") == usc


# ---------------------------------------------------------------------------
# the two-element coupling


def test_coupling_relations_by_cases():
    omega = subset_lattice(CHAIN3, "opens")
    frame = ind_functor(omega)
    top, bot = omega.top, omega.bot
    for u in range(omega.m):
        for a in (0, 1):
            assert ((u, a) in frame.tot) == (u == top or a == 1)
            assert ((u, a) in frame.con) == (u == bot or a == 0)
            assert ((u, a) in frame.fof) == (u == top or a == 0)
            assert ((u, a) in frame.cou) == (u == bot or a == 1)
    assert validate_adframe(frame).ok


def test_coupling_rejects_trivial_lattice():
    from adframe.finord import lattice_from_labels
    with pytest.raises(TrivialFrame):
        ind_functor(lattice_from_labels((0,)))


def test_bnd_is_the_only_bounded_hom_from_two():
    for sp in enumerate_spaces(2)[:6]:
        ell = subset_lattice(sp, "upsets")
        homs = bounded_lattice_homs(_two_chain(), ell)
        assert homs == [bnd_map(ell)]
        assert bnd_map(ell) == (ell.bot, ell.top)


def test_epsilon_hom_validates():
    for sp in (SIERPINSKI, CHAIN3):
        frame = build_ado(sp)
        eps = epsilon_hom(frame)
        assert validate_hom(eps).ok
        assert eps.p == (frame.ell.bot, frame.ell.top)


def test_coupling_hom_form_checks_psi():
    omega = subset_lattice(SIERPINSKI, "opens")
    target = subset_lattice(CHAIN3, "opens")
    good = bounded_lattice_homs(omega, target)[0]
    hom = ind_functor(omega, psi=good, target=target)
    assert validate_hom(hom).ok
    with pytest.raises(ValueError):
        ind_functor(omega, psi=(0,) * omega.m, target=target)


# ---------------------------------------------------------------------------
# serialization


def test_adframe_json_roundtrip():
    for variant in VARIANTS:
        frame = build_ado(SIERPINSKI, variant)
        back = adframe_from_json(adframe_to_json(frame))
        assert back.key() == frame.key()


def test_adframe_json_rejects_out_of_range_pair():
    doc = adframe_to_json(build_ado(SIERPINSKI))
    doc["tot"] = doc["tot"] + [[99, 0]]
    with pytest.raises(ValueError):
        adframe_from_json(doc)
