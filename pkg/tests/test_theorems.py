import pytest

from adframe import (BudgetExceeded, FinPreTopSpace, FinTopSpace,
                     NotContinuous, UnknownTheorem, Variant, build_ado,
                     generate_random, instances_for_payload, iso_check,
                     registry_doc, registry_ids, run_check, subset_lattice,
                     validate_adframe)
from adframe.theorems import (VARIANTS, basic_functors,
                              designated_counterexample,
                              enumerate_distributive_lattices,
                              enumerate_preorders, enumerate_spaces,
                              enumerate_topologies, frame_instance,
                              frame_point_space, is_t0_topology,
                              lattice_order_iso, lifted_preorder, pretop_maps,
                              restrict_space, sober_topology, space_instance)

from helpers import CHAIN3, SIERPINSKI


# ---------------------------------------------------------------------------
# enumeration


def test_topology_and_preorder_counts_agree():
    expected = {0: 1, 1: 1, 2: 4, 3: 29, 4: 355}
    for n, count in expected.items():
        assert len(enumerate_topologies(n)) == count
        assert len(enumerate_preorders(n)) == count


def test_alexandroff_bijection():
    # sending a preorder to its up-set topology hits every topology once
    from adframe.finord import upset_family
    for n in (0, 1, 2, 3):
        tops = set(enumerate_topologies(n))
        image = {
            upset_family(FinPreTopSpace(n, (0, (1 << n) - 1) if n else (0,), rows))
            for rows in enumerate_preorders(n)
        }
        assert image == tops


def test_space_enumeration_modes():
    assert len(enumerate_spaces(2)) == 16
    assert len(enumerate_spaces(3)) == 841
    assert len(enumerate_spaces(3, "t0")) == 551
    fixed = enumerate_spaces(2, "fixed-topology", topology=(0, 3))
    assert len(fixed) == 4
    assert all(sp.opens == (0, 3) for sp in fixed)


def test_t0_topologies_are_labeled_posets():
    # 1, 3, 19 labeled partial orders on 1..3 points
    for n, count in ((1, 1), (2, 3), (3, 19)):
        tops = [FinTopSpace(n, fam) for fam in enumerate_topologies(n)]
        assert sum(is_t0_topology(t) for t in tops) == count


def test_finite_sober_means_t0():
    for n in (1, 2, 3):
        for fam in enumerate_topologies(n):
            top = FinTopSpace(n, fam)
            assert sober_topology(top) == is_t0_topology(top)


def test_distributive_lattice_counts():
    lats = enumerate_distributive_lattices(8)
    by_size = {}
    for lat in lats:
        by_size[lat.m] = by_size.get(lat.m, 0) + 1
    assert [by_size.get(m, 0) for m in range(1, 9)] == [1, 1, 1, 2, 3, 5, 8, 15]
    # pairwise non-isomorphic
    small = [l for l in lats if l.m <= 5]
    for i, a in enumerate(small):
        for b in small[i + 1:]:
            if a.m == b.m:
                assert lattice_order_iso(a, b, 10_000) is None


def test_frame_point_space_of_opens_recovers_sober_spaces():
    for fam in enumerate_topologies(2):
        top = FinTopSpace(2, fam)
        if not sober_topology(top):
            continue
        lat = subset_lattice(FinPreTopSpace(2, fam, (1, 2)), "opens")
        back = frame_point_space(lat)
        assert iso_check("top", back, top) is not None


# ---------------------------------------------------------------------------
# generators


def test_generator_is_deterministic():
    a = generate_random("space", {"n": 4}, seed=11)
    b = generate_random("space", {"n": 4}, seed=11)
    c = generate_random("space", {"n": 4}, seed=12)
    assert a.payload == b.payload
    assert a.payload != c.payload or a.meta != c.meta


def test_generated_frames_validate():
    for seed in range(10):
        for family in ("ado", "ind"):
            gen = generate_random("adframe", {"family": family}, seed=seed)
            assert validate_adframe(gen.payload).ok, (family, seed)


def test_mutated_frames_break_their_target_law():
    for seed in range(8):
        gen = generate_random("adframe", {"family": "mutated"}, seed=seed)
        report = validate_adframe(gen.payload)
        assert not report.ok
        assert gen.meta["target"] in {c.law for c in report.failures()}


def test_mutation_target_can_be_forced():
    gen = generate_random("adframe",
                          {"family": "mutated", "target": "con-down-closed"},
                          seed=3)
    failed = {c.law for c in validate_adframe(gen.payload).failures()}
    assert "con-down-closed" in failed


# ---------------------------------------------------------------------------
# isomorphism search


def test_iso_check_finds_relabelings():
    left = SIERPINSKI
    right = FinPreTopSpace(2, (0, 1, 3), (3, 2))  # same shape, points swapped
    perm = iso_check("pretop", left, right)
    assert perm is not None
    assert iso_check("pretop", left, CHAIN3) is None


def test_iso_check_distinguishes_order():
    plain = FinPreTopSpace(2, (0, 3), (1, 2))
    chained = FinPreTopSpace(2, (0, 3), (3, 2))
    assert iso_check("pretop", plain, chained) is None
    assert iso_check("top", plain, chained) is not None


def test_iso_check_adframe_relabeling():
    left = build_ado(SIERPINSKI)
    right = build_ado(FinPreTopSpace(2, (0, 1, 3), (3, 2)))
    assert iso_check("adframe", left, right) is not None
    assert iso_check("adframe", left, build_ado(CHAIN3)) is None


def test_iso_check_budget():
    big_a = basic_functors("discr", FinTopSpace(6, (0, 63)))
    big_b = basic_functors("discr", FinTopSpace(6, (0, 63)))
    with pytest.raises(BudgetExceeded):
        iso_check("pretop", big_a, big_b, budget=3)


# ---------------------------------------------------------------------------
# functors and lifts


def test_basic_functors_shapes():
    top = SIERPINSKI.topology()
    assert basic_functors("underlying", SIERPINSKI).opens == SIERPINSKI.opens
    assert basic_functors("discr", top).leq == (1, 2)
    assert basic_functors("ind_space", top).leq == (3, 3)


def test_lifted_preorder_is_pointwise_intersection():
    base = SIERPINSKI.topology()
    ind = basic_functors("ind_space", base)
    lifted = lifted_preorder(base, [((0, 1), ind)])
    assert lifted.leq == (3, 3)
    lifted2 = lifted_preorder(base, [((0, 1), ind), ((0, 1), SIERPINSKI)])
    assert lifted2.leq == SIERPINSKI.leq
    with pytest.raises(NotContinuous):
        lifted_preorder(base, [((1, 0), SIERPINSKI)])


def test_designated_counterexample_shape():
    sp = designated_counterexample()
    assert (sp.n, sp.opens, sp.leq) == (2, (0, 3), (1, 2))


# ---------------------------------------------------------------------------
# registry and harness


EXPECTED_IDS = ("ADO-VALID", "ADJ-TRIANGLE", "ADJ-EXISTS", "USC-LSC",
                "ADS-ISO", "OS-ISO", "ETA-PREIMAGE", "ADSOBER-EQ", "NAT-IND",
                "NAT-DISCR", "CEX-ADS", "HOMEO-ADS", "ADT0-LEMMA",
                "IDEMPOTENT", "IND-VALID", "EPS-VALID", "IND-ADJ",
                "LIFT-SQUARE", "CEX-LIFT")


def test_registry_contents():
    assert registry_ids() == EXPECTED_IDS
    for cid in EXPECTED_IDS:
        assert registry_doc(cid)
    with pytest.raises(UnknownTheorem):
        registry_doc("MISSING")


def test_run_check_pass_record_shape():
    reports = run_check("ADO-VALID", instance=space_instance(SIERPINSKI))
    assert len(reports) == 1
    rep = reports[0]
    assert rep.verdict == "pass"
    assert rep.witness is None
    assert rep.ms >= 0
    assert rep.instance["kind"] == "space"
    assert set(rep.to_json()) == {"id", "instance", "verdict", "witness", "ms"}


def test_run_check_sweep_counts():
    reports = run_check("IDEMPOTENT", sweep={"n": 2})
    assert len(reports) == 48  # 16 spaces x 3 variants
    assert {r.verdict for r in reports} == {"pass"}


def test_run_check_single_variant_sweep():
    reports = run_check("IDEMPOTENT", sweep={"n": 2, "variant": "up"})
    assert len(reports) == 16


def test_run_check_sampled_sweep_deterministic():
    a = run_check("ADO-VALID", sweep={"n": 3, "count": 5, "seed": 9})
    b = run_check("ADO-VALID", sweep={"n": 3, "count": 5, "seed": 9})
    assert [r.instance for r in a] == [r.instance for r in b]
    assert len(a) == 5


def test_expected_fail_and_minimization():
    qualifying = FinPreTopSpace(3, (0, 7), (1, 2, 4))
    reports = run_check("CEX-ADS", instance=space_instance(qualifying))
    rep = reports[0]
    assert rep.verdict == "expected-fail"
    assert rep.witness["detail"] == {"pair_space_points": 3,
                                     "sobrification_points": 1}
    assert rep.witness["minimized"]["points"] == 2
    assert rep.witness["minimized_detail"] == {"pair_space_points": 2,
                                               "sobrification_points": 1}


def test_skip_on_unmet_hypotheses():
    reports = run_check("CEX-ADS", instance=space_instance(SIERPINSKI))
    assert reports[0].verdict == "skip"


def test_honest_fail_verdict_on_broken_frame():
    # a frame built to violate its laws; the counit then fails validation,
    # which the harness must report as a plain fail with a witness
    gen = generate_random("adframe", {"family": "mutated"}, seed=0)
    assert not validate_adframe(gen.payload).ok
    reports = run_check("EPS-VALID", instance=frame_instance(gen.payload))
    assert reports[0].verdict == "fail"
    assert reports[0].witness is not None


def test_fail_fast_stops_at_first_failure():
    gen = generate_random("adframe", {"family": "mutated"}, seed=0)
    bad = frame_instance(gen.payload)
    good = frame_instance(build_ado(SIERPINSKI))
    reports = run_check("EPS-VALID", instances=[bad, good], fail_fast=True)
    assert len(reports) == 1
    reports = run_check("EPS-VALID", instances=[bad, good])
    assert [r.verdict for r in reports] == ["fail", "pass"]


def test_budget_carries_partial_reports():
    with pytest.raises(BudgetExceeded) as excinfo:
        run_check("ADS-ISO", sweep={"n": 3}, budget_ms=1)
    partial = excinfo.value.reports
    assert partial and all(r.verdict == "pass" for r in partial)


def test_instances_for_payload_dispatch():
    frame = build_ado(SIERPINSKI)
    insts = instances_for_payload("IDEMPOTENT", frame)
    assert [i.kind for i in insts] == ["adframe"]
    insts = instances_for_payload("IND-VALID", subset_lattice(SIERPINSKI, "opens"))
    assert [i.kind for i in insts] == ["lattice"]
    insts = instances_for_payload("ADJ-TRIANGLE", SIERPINSKI)
    assert insts and all(i.kind == "triangle" for i in insts)
    reports = run_check("ADJ-TRIANGLE",
                        instances=instances_for_payload("ADJ-TRIANGLE", SIERPINSKI))
    assert {r.verdict for r in reports} == {"pass"}


def test_restrict_space_squashes_bits():
    smaller = restrict_space(CHAIN3, 0b101)  # keep points 0 and 2
    assert smaller.n == 2
    assert smaller.opens == (0, 2, 3)
    assert smaller.leq == (3, 2)


# ---------------------------------------------------------------------------
# full registry smoke at the smallest size


def test_every_check_passes_tiny_sweep():
    for cid in registry_ids():
        reports = run_check(cid, sweep={"n": 1})
        assert all(r.verdict in ("pass", "skip", "expected-fail")
                   for r in reports), cid
