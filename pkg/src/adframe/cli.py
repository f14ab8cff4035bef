"""Command line for the finite duality laboratory.

Verbs: validate a payload, build the frame / spectrum / pair-space /
sobrification constructions, run registered checks singly or as sweeps,
and render DOT drawings.  Payload kind (space, ad-frame, lattice) is
detected from the JSON keys.  Exit codes: 0 success (expected failures
and skips included), 1 failed checks or exhausted budgets, 2 bad usage
or malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .bits import bits_of
from .errors import (AdframeError, BudgetExceeded, InternalCheckError,
                     TooLarge, UnknownTheorem)
from .finord import (FinLattice, FinPreTopSpace, equivalence_classes,
                     lattice_analyze, lattice_from_json, space_from_json,
                     space_to_json)
from .frames import (AdFrame, Variant, adframe_from_json, adframe_to_json,
                     build_ado, validate_adframe)
from .duality import adpt_space
from .sobrify import ads_space, standard_sobrification
from . import theorems

RENDER_NODE_CAP = 256


# ---------------------------------------------------------------------------
# payload and output plumbing


def _read_payload(path: str):
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("payload must be a JSON object")
    if "omega" in doc:
        return adframe_from_json(doc)
    if "points" in doc or "opens" in doc:
        return space_from_json(doc)
    if "leq" in doc:
        return lattice_from_json(doc)
    raise ValueError(
        "unrecognized payload: expected a space, ad-frame, or lattice document")


def _require_space(payload) -> FinPreTopSpace:
    if not isinstance(payload, FinPreTopSpace):
        raise ValueError("this verb needs a space payload")
    return payload


def _emit(text: str, out_path) -> None:
    if text and not text.endswith("\n"):
        text += "\n"
    if out_path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out_path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".adframe-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out_path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _emit_json(doc, out_path) -> None:
    _emit(json.dumps(doc, indent=2, sort_keys=True, default=str), out_path)


def _record_lines(reports) -> str:
    return "\n".join(json.dumps(r.to_json(), sort_keys=True, default=str)
                     for r in reports)


# ---------------------------------------------------------------------------
# construction verbs


def _cmd_validate(args) -> int:
    payload = _read_payload(args.infile)
    if isinstance(payload, AdFrame):
        report = validate_adframe(payload)
        doc = {"kind": "adframe", "variant": payload.variant.value,
               "omega": payload.omega.m, "ell": payload.ell.m,
               "ok": report.ok,
               "failures": [{"law": c.law, "witness": c.witness}
                            for c in report.failures()]}
        _emit_json(doc, args.out)
        return 0 if report.ok else 1
    if isinstance(payload, FinLattice):
        analysis = lattice_analyze(payload)
        doc = {"kind": "lattice", "size": payload.m,
               "distributive": analysis.distributive, "ok": True}
        _emit_json(doc, args.out)
        return 0
    doc = {"kind": "space", "points": payload.n,
           "opens": len(payload.opens), "ok": True}
    _emit_json(doc, args.out)
    return 0


def _cmd_ado(args) -> int:
    space = _require_space(_read_payload(args.infile))
    frame = build_ado(space, Variant.parse(args.variant))
    _emit_json(adframe_to_json(frame), args.out)
    return 0


def _cmd_adpt(args) -> int:
    payload = _read_payload(args.infile)
    if isinstance(payload, FinPreTopSpace):
        payload = build_ado(payload, Variant.parse(args.variant))
    if not isinstance(payload, AdFrame):
        raise ValueError("adpt needs an ad-frame or space payload")
    spectrum = adpt_space(payload)
    doc = {"space": space_to_json(spectrum.space),
           "points": [{"x": bits_of(pt.x), "s": bits_of(pt.s)}
                      for pt in spectrum.points],
           "open_map": [bits_of(m) for m in spectrum.open_map],
           "upset_map": [bits_of(m) for m in spectrum.upset_map]}
    _emit_json(doc, args.out)
    return 0


def _cmd_ads(args) -> int:
    space = _require_space(_read_payload(args.infile))
    res = ads_space(space, Variant.parse(args.variant))
    doc = {"space": space_to_json(res.space),
           "pairs": [{"closed": bits_of(pr.closed), "class": bits_of(pr.cls)}
                     for pr in res.pairs],
           "diamond": [bits_of(m) for m in res.diamond_map],
           "bracket": [bits_of(m) for m in res.bracket_map]}
    _emit_json(doc, args.out)
    return 0


def _cmd_sobrify(args) -> int:
    space = _require_space(_read_payload(args.infile))
    top, unit = standard_sobrification(space)
    doc = {"space": {"points": top.n, "opens": [bits_of(u) for u in top.opens]},
           "unit": list(unit)}
    _emit_json(doc, args.out)
    return 0


# ---------------------------------------------------------------------------
# checks


def _parse_sweep_flag(raw: str) -> dict:
    out = {}
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"bad sweep component {part!r}; expected key=value")
        key, value = part.split("=", 1)
        key = key.strip()
        if key not in ("n", "count"):
            raise ValueError(f"unknown sweep key {key!r}; use n or count")
        out[key] = int(value)
    if "n" not in out:
        raise ValueError("sweep needs n=K")
    return out


def _sweep_spec(args) -> theorems.SweepSpec:
    values = _parse_sweep_flag(args.sweep) if args.sweep else {"n": 2}
    spec = theorems.SweepSpec(n=values["n"], seed=args.seed)
    spec.count = values.get("count")
    if args.variant is not None:
        spec.variants = (Variant.parse(args.variant),)
    return spec


def _cmd_check(args) -> int:
    theorems.registry_doc(args.id)  # fail early on unknown ids
    try:
        if args.infile:
            payload = _read_payload(args.infile)
            insts = theorems.instances_for_payload(
                args.id, payload, Variant.parse(args.variant or "both"))
            reports = theorems.run_check(args.id, instances=insts,
                                         fail_fast=args.fail_fast,
                                         budget_ms=args.budget_ms)
        else:
            reports = theorems.run_check(args.id, sweep=_sweep_spec(args),
                                         fail_fast=args.fail_fast,
                                         budget_ms=args.budget_ms)
    except BudgetExceeded as exc:
        _emit(_record_lines(getattr(exc, "reports", [])), args.out)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(_record_lines(reports), args.out)
    return 1 if any(r.verdict == "fail" for r in reports) else 0


def _cmd_sweep(args) -> int:
    spec = _sweep_spec(args)
    ids = [args.id] if args.id else list(theorems.registry_ids())
    for cid in ids:
        theorems.registry_doc(cid)
    lines = []
    failed = False
    exhausted = False
    for cid in ids:
        try:
            reports = theorems.run_check(cid, sweep=spec,
                                         fail_fast=args.fail_fast,
                                         budget_ms=args.budget_ms)
        except BudgetExceeded as exc:
            lines.append(_record_lines(getattr(exc, "reports", [])))
            print(f"error: {exc}", file=sys.stderr)
            exhausted = True
            break
        lines.append(_record_lines(reports))
        if any(r.verdict == "fail" for r in reports):
            failed = True
            if args.fail_fast:
                break
    _emit("\n".join(line for line in lines if line), args.out)
    return 1 if failed or exhausted else 0


# ---------------------------------------------------------------------------
# DOT rendering


def _set_label(mask: int) -> str:
    return "{" + ",".join(str(b) for b in bits_of(mask)) + "}"


def _hasse_edges(strictly_less, count: int):
    covers = []
    for i in range(count):
        for j in range(count):
            if not strictly_less(i, j):
                continue
            if any(strictly_less(i, k) and strictly_less(k, j)
                   for k in range(count)):
                continue
            covers.append((i, j))
    return covers


def _lattice_cluster(lat: FinLattice, prefix: str, title: str) -> list[str]:
    lines = [f"  subgraph cluster_{prefix} {{", f'    label="{title}";']
    for i in range(lat.m):
        text = _set_label(lat.labels[i]) if lat.labels is not None else str(i)
        lines.append(f'    {prefix}{i} [label="{text}"];')

    def less(i, j):
        return i != j and bool(lat.leq[i, j])

    for i, j in _hasse_edges(less, lat.m):
        lines.append(f"    {prefix}{i} -> {prefix}{j};")
    lines.append("  }")
    return lines


def render_dot(payload) -> str:
    """Hasse-style DOT text for a space, lattice, or ad-frame."""
    if isinstance(payload, FinLattice):
        if payload.m > RENDER_NODE_CAP:
            raise TooLarge(f"lattice has {payload.m} elements; rendering caps at {RENDER_NODE_CAP}")
        lines = ["digraph lattice {", "  rankdir=BT;"] + [
            ln.replace("    ", "  ", 1)
            for ln in _lattice_cluster(payload, "e", "")[2:-1]]
        lines.append("}")
        return "\n".join(lines)

    if isinstance(payload, FinPreTopSpace):
        classes = equivalence_classes(payload.leq)
        if len(classes) > RENDER_NODE_CAP:
            raise TooLarge(f"space has {len(classes)} order classes; rendering caps at {RENDER_NODE_CAP}")
        reps = [bits_of(cls)[0] for cls in classes]
        opens = ("  ".join(_set_label(u) for u in payload.opens)
                 if len(payload.opens) <= 16 else f"{len(payload.opens)} open sets")
        lines = ["digraph pretop {", "  rankdir=BT;", f'  label="opens: {opens}";']
        for idx, cls in enumerate(classes):
            text = ",".join(str(b) for b in bits_of(cls))
            lines.append(f'  c{idx} [label="{text}"];')

        def less(a, b):
            return a != b and bool(payload.leq[reps[a]] >> reps[b] & 1)

        for a, b in _hasse_edges(less, len(classes)):
            lines.append(f"  c{a} -> c{b};")
        lines.append("}")
        return "\n".join(lines)

    if isinstance(payload, AdFrame):
        total = payload.omega.m + payload.ell.m
        if total > RENDER_NODE_CAP:
            raise TooLarge(f"frame has {total} lattice elements; rendering caps at {RENDER_NODE_CAP}")
        lines = ["digraph adframe {", "  rankdir=BT;", "  compound=true;"]
        lines += _lattice_cluster(payload.omega, "o", "omega")
        lines += _lattice_cluster(payload.ell, "l", "ell")
        styles = {"tot": ("red", "solid"), "con": ("blue", "dashed"),
                  "fof": ("darkgreen", "solid"), "cou": ("orange", "dashed")}
        for name, (color, style) in styles.items():
            for u, a in sorted(payload.rel(name)):
                lines.append(f"  o{u} -> l{a} [color={color}, style={style}, "
                             f"arrowhead=none, constraint=false];")
        lines.append("}")
        return "\n".join(lines)

    raise ValueError("nothing to render for this payload")


def _cmd_render(args) -> int:
    payload = _read_payload(args.infile)
    _emit(render_dot(payload), args.out)
    return 0


# ---------------------------------------------------------------------------
# argument wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adframe",
        description="Finite laboratory for the open/arbitrary-subset duality "
                    "of preordered spaces.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb, fn, helptext, needs_in=True, has_id=False, has_sweep=False):
        p = sub.add_parser(verb, help=helptext)
        p.add_argument("--in", dest="infile", required=needs_in and not has_sweep,
                       metavar="PATH", help="input JSON payload")
        p.add_argument("--out", metavar="PATH",
                       help="output path (atomic write); default stdout")
        p.add_argument("--variant", choices=["up", "down", "both"],
                       default="both" if not has_sweep else None,
                       help="which refinement relations are in force")
        if has_id:
            p.add_argument("--id", required=(verb == "check"),
                           help="registered check identifier")
        if has_sweep:
            p.add_argument("--sweep", metavar="n=K[,count=C]",
                           help="run over all spaces of size K "
                                "(count samples instead when given)")
            p.add_argument("--seed", type=int, default=0,
                           help="seed for sampled sweeps")
            p.add_argument("--budget-ms", type=float, default=None,
                           help="abort after this many milliseconds")
            p.add_argument("--fail-fast", action="store_true",
                           help="stop at the first failing record")
        p.set_defaults(func=fn)
        return p

    add("validate", _cmd_validate, "parse a payload and report its laws")
    add("ado", _cmd_ado, "build the four-relation frame of a space")
    add("adpt", _cmd_adpt, "enumerate the spectrum of an ad-frame")
    add("ads", _cmd_ads, "build the irreducible-pair space")
    add("sobrify", _cmd_sobrify, "classical sobrification of the underlying topology")
    check_p = add("check", _cmd_check, "run one registered check",
                  needs_in=False, has_id=True, has_sweep=True)
    check_p.description = "known ids: " + ", ".join(theorems.registry_ids())
    add("sweep", _cmd_sweep, "run every registered check over a sweep",
        needs_in=False, has_id=True, has_sweep=True)
    add("render", _cmd_render, "emit a DOT drawing of a payload")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except UnknownTheorem as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AdframeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
