"""Command line front end.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on input errors (bad files, bad parameters, unmet preconditions).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .curve import CurveSpec, constants, canonical_class, load_curve
from .divisors import DivisorClass, format_divisor, parse_divisor, reduce
from .errors import BadDivisibility, NotHyperelliptic, ParseError, SpinDivError
from .lowgenus import format_torus_divisor, sphere_spin, torus_gcd_lcm_check, torus_spin
from .mobius import induce_permutation, mobius_from_json, values_from_json
from .mumford import (
    class_to_form,
    count_identity_terms,
    enumerate_forms,
    form_to_class,
    parse_form,
    verify_count_identity,
)
from .spin import JACOBIAN_NOTE, SpinClass, is_spin, spin_count, spin_set
from .symmetry import fixed_spin, symmetry_from_json
from .torsion import check_budget, torsion_star
from .verify import NOTES, run_theorem


@dataclass
class Report:
    command: str
    curve: dict[str, Any] | None = None
    results: Any = None
    notes: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    passed: bool = True
    argv: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "argv": self.argv,
            "curve": self.curve,
            "results": self.results,
            "notes": self.notes,
            "status": "pass" if self.passed else "fail",
            "exit_code": self.exit_code,
        }
        return json.dumps(doc, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        out = [f"# {self.command}"]
        if self.curve:
            out.append("# curve: " + " ".join(f"{k}={v}" for k, v in self.curve.items()))
        out.extend(self.lines)
        out.extend(f"note: {n}" for n in self.notes)
        out.append(f"status: {'pass' if self.passed else 'fail'}")
        return "\n".join(out)


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None


def _fmt_coords(coords: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in coords) + ")"


def _mumford_n(curve: CurveSpec, m: int) -> int | None:
    g = curve.genus
    if curve.p == 2 and m % 2 == 0 and g >= 2 and (g - 1) % (m // 2) == 0:
        return m // 2
    return None


def describe_class(c: DivisorClass, m: int | None = None) -> tuple[dict[str, Any], str]:
    rep = format_divisor(c.representative())
    info: dict[str, Any] = {"degree": c.degree, "coords": list(c.coords), "representative": rep}
    line = f"deg={c.degree} coords={_fmt_coords(c.coords)} rep={rep}"
    if m is not None and _mumford_n(c.curve, m) is not None and is_spin(c, m):
        form = class_to_form(SpinClass(c, m))
        info["mumford"] = form.to_dict()
        line += f" form=[{form}]"
    return info, line


def _spin_lines(classes: list[SpinClass], m: int) -> tuple[list[dict], list[str]]:
    ordered = sorted(classes, key=lambda s: s.coords)
    infos, lines = [], []
    for s in ordered:
        info, line = describe_class(s.divisor_class, m)
        infos.append(info)
        lines.append(line)
    return infos, lines


# -- handlers --------------------------------------------------------------


def cmd_curve_info(args) -> Report:
    curve = load_curve(args.curve)
    k = constants(curve)
    res = {
        "p": curve.p,
        "r": curve.r,
        "n": curve.n,
        "genus": curve.genus,
        "branch_labels": list(curve.branch_labels),
        "base_point": curve.base_label,
        "canonical_degree": k.canonical_degree,
        "D_degree": k.D_degree,
        "admissible_m": list(k.admissible_m),
        "canonical_class": canonical_class(curve).to_dict(),
    }
    lines = [f"{key}: {val}" for key, val in res.items()]
    return Report("curve-info", curve.summary(), res, lines=lines)


def cmd_reduce(args) -> Report:
    curve = load_curve(args.curve)
    d = parse_divisor(curve, args.divisor)
    c = reduce(d)
    info, line = describe_class(c)
    res = {"divisor": format_divisor(d), "class": info, "is_zero": c.is_zero()}
    return Report("reduce", curve.summary(), res, lines=[f"divisor: {res['divisor']}", line])


def cmd_equiv(args) -> Report:
    curve = load_curve(args.curve)
    d1, d2 = parse_divisor(curve, args.d1), parse_divisor(curve, args.d2)
    c1, c2 = reduce(d1), reduce(d2)
    res = {"equivalent": c1 == c2, "class1": c1.to_dict(), "class2": c2.to_dict()}
    lines = [
        f"class1: deg={c1.degree} coords={_fmt_coords(c1.coords)}",
        f"class2: deg={c2.degree} coords={_fmt_coords(c2.coords)}",
        f"equivalent: {str(c1 == c2).lower()}",
    ]
    return Report("equiv", curve.summary(), res, lines=lines)


def cmd_spin(args) -> Report:
    curve = load_curve(args.curve)
    m = args.m
    notes = [] if m % curve.p == 0 else [JACOBIAN_NOTE]
    if args.action == "count":
        n = spin_count(curve, m)
        return Report("spin count", curve.summary(), {"m": m, "count": n}, [JACOBIAN_NOTE], [f"count: {n}"])
    if args.action == "enumerate":
        classes = list(spin_set(curve, m))
        infos, lines = _spin_lines(classes, m)
        res = {"m": m, "count": len(infos), "classes": infos}
        return Report("spin enumerate", curve.summary(), res, notes, [f"count: {len(infos)}"] + lines)
    if not args.symmetry:
        raise ParseError("spin fixed needs --symmetry FILE")
    sym = symmetry_from_json(curve, _read_json(args.symmetry))
    classes = list(fixed_spin(sym, m))
    infos, lines = _spin_lines(classes, m)
    res = {
        "m": m,
        "symmetry": sym.to_dict(),
        "involution": sym.is_involution(),
        "count": len(infos),
        "classes": infos,
    }
    return Report("spin fixed", curve.summary(), res, notes, [f"count: {len(infos)}"] + lines)


def cmd_mumford(args) -> Report:
    if args.action == "verify-identity":
        if args.g is None:
            if not args.curve:
                raise ParseError("verify-identity needs -g G or --curve FILE")
            g = load_curve(args.curve).genus
        else:
            g = args.g
        terms = count_identity_terms(g, args.n)
        ok = verify_count_identity(g, args.n)
        res = {"g": g, "n": args.n, "terms": {str(k): v for k, v in terms.items()},
               "total": sum(terms.values()), "expected": 2 ** (2 * g), "holds": ok}
        lines = [f"l={l}: {v}" for l, v in terms.items()]
        lines.append(f"total: {res['total']} expected: {res['expected']}")
        return Report("mumford verify-identity", None, res, lines=lines, passed=ok)
    if not args.curve:
        raise ParseError(f"mumford {args.action} needs --curve FILE")
    curve = load_curve(args.curve)
    if args.action == "to-form":
        if args.divisor is None:
            raise ParseError("mumford to-form needs a divisor")
        c = reduce(parse_divisor(curve, args.divisor))
        form = class_to_form(SpinClass(c, 2 * args.n))
        res = {"class": c.to_dict(), "form": form.to_dict()}
        return Report("mumford to-form", curve.summary(), res, lines=[str(form)])
    if args.action == "from-form":
        if args.form is None:
            raise ParseError("mumford from-form needs a form such as 'k=0; points=1,0'")
        form = parse_form(curve, args.form, args.n)
        s = form_to_class(form)
        info, line = describe_class(s.divisor_class)
        res = {"form": form.to_dict(), "divisor": format_divisor(form.divisor()), "class": info}
        return Report("mumford from-form", curve.summary(), res, lines=[line])
    forms = enumerate_forms(curve, args.n)
    check_budget(len(forms), "form enumeration")
    items, lines = [], [f"count: {len(forms)}"]
    for f in forms:
        c = form_to_class(f).divisor_class
        items.append({**f.to_dict(), "class": c.to_dict()})
        lines.append(f"[{f}] deg={c.degree} coords={_fmt_coords(c.coords)}")
    return Report("mumford enumerate", curve.summary(), {"n": args.n, "count": len(forms), "forms": items}, lines=lines)


def cmd_mobius(args) -> Report:
    curve = load_curve(args.curve)
    mp = mobius_from_json(_read_json(args.map))
    values = values_from_json(curve, _read_json(args.values))
    sym = induce_permutation(curve, mp, values)
    res = {**sym.to_dict(), "order": sym.order}
    lines = [f"{a} -> {b}" for a, b in sym.label_map().items()]
    lines += [f"antiholomorphic: {str(sym.antiholomorphic).lower()}", f"order: {sym.order}"]
    return Report("mobius induce", curve.summary(), res, lines=lines)


def cmd_sphere(args) -> Report:
    s = sphere_spin(args.m)
    res = {"divisor": s.divisor, "canonical": s.canonical, "count": s.count}
    lines = [f"spin: {format_torus_divisor(s.divisor)}", f"canonical: {format_torus_divisor(s.canonical)}",
             f"count: {s.count}"]
    return Report("sphere spins", {"genus": 0}, res, lines=lines)


def cmd_torus(args) -> Report:
    if args.action == "spins":
        pts = torus_spin(args.m)
        items = [{"a": p.a, "b": p.b, "divisor": p.divisor()} for p in pts]
        lines = [f"count: {len(pts)}"]
        lines += [f"({p.a},{p.b}) {format_torus_divisor(p.divisor())}" for p in pts]
        return Report("torus spins", {"genus": 1}, {"m": args.m, "count": len(pts), "points": items}, lines=lines)
    rep = torus_gcd_lcm_check(args.m1, args.m2)
    lines = [f"{k}: {v}" for k, v in rep.to_dict().items()]
    notes = [] if rep.sum_is_lcm else ["sum is a proper subgroup of Tor_lcm"]
    return Report("torus check-gcd-lcm", {"genus": 1}, rep.to_dict(), notes, lines, rep.passed)


def cmd_verify(args) -> Report:
    instances = run_theorem(args.theorem, args.sweep, exhaustive=args.exhaustive)
    timing = not args.no_timing
    items = [i.to_dict(timing) for i in instances]
    failed = sum(not i.passed for i in instances)
    res = {"theorem": args.theorem, "sweep": args.sweep, "instances": items,
           "total": len(instances), "failed": failed}
    lines = []
    for inst in instances:
        key = " ".join(f"{k}={v}" for k, v in inst.key.items())
        scan = "" if inst.scan is None else f" scan={inst.scan}"
        t = f" t={inst.seconds:.3f}s" if timing else ""
        lines.append(f"{'PASS' if inst.passed else 'FAIL'} {key} expected={inst.expected} "
                     f"observed={inst.observed}{scan}{t}")
    lines.append(f"{len(instances) - failed}/{len(instances)} passed")
    return Report(f"verify {args.theorem}", None, res, list(NOTES.get(args.theorem, [])), lines, failed == 0)


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--no-timing", action="store_true", help="omit timing fields")

    curve_opt = argparse.ArgumentParser(add_help=False)
    curve_opt.add_argument("--curve", required=True, help="curve definition JSON file")

    parser = argparse.ArgumentParser(prog="spindiv", description="Branch-supported spin divisors on p-gonal curves")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve-info", parents=[common, curve_opt], help="genus, canonical class, admissible m")
    p.set_defaults(func=cmd_curve_info)

    p = sub.add_parser("reduce", parents=[common, curve_opt], help="normal form of a divisor")
    p.add_argument("divisor", help='e.g. "2*inf - 1*0 + 1*xi1"')
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("equiv", parents=[common, curve_opt], help="linear equivalence of two divisors")
    p.add_argument("d1")
    p.add_argument("d2")
    p.set_defaults(func=cmd_equiv)

    spin = sub.add_parser("spin", help="m-spin classes on the branch set").add_subparsers(dest="action", required=True)
    for action in ("count", "enumerate", "fixed"):
        p = spin.add_parser(action, parents=[common, curve_opt])
        p.add_argument("-m", type=int, required=True)
        if action == "fixed":
            p.add_argument("--symmetry", required=True, help="symmetry JSON file")
        p.set_defaults(func=cmd_spin, action=action)

    mum = sub.add_parser("mumford", help="Mumford forms on hyperelliptic curves").add_subparsers(
        dest="action", required=True
    )
    for action in ("to-form", "from-form", "enumerate", "verify-identity"):
        p = mum.add_parser(action, parents=[common])
        p.add_argument("--curve")
        p.add_argument("-n", type=int, default=1, help="m = 2n (default 1)")
        if action == "to-form":
            p.add_argument("divisor", nargs="?")
        if action == "from-form":
            p.add_argument("form", nargs="?")
        if action == "verify-identity":
            p.add_argument("-g", type=int)
        p.set_defaults(func=cmd_mumford, action=action)

    mob = sub.add_parser("mobius", help="exact Möbius maps").add_subparsers(dest="action", required=True)
    p = mob.add_parser("induce", parents=[common, curve_opt], help="branch permutation induced by a map")
    p.add_argument("--map", required=True)
    p.add_argument("--values", required=True)
    p.set_defaults(func=cmd_mobius)

    sph = sub.add_parser("sphere").add_subparsers(dest="action", required=True)
    p = sph.add_parser("spins", parents=[common])
    p.add_argument("-m", type=int, default=2)
    p.set_defaults(func=cmd_sphere)

    tor = sub.add_parser("torus").add_subparsers(dest="action", required=True)
    p = tor.add_parser("spins", parents=[common])
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=cmd_torus, action="spins")
    p = tor.add_parser("check-gcd-lcm", parents=[common])
    p.add_argument("m1", type=int)
    p.add_argument("m2", type=int)
    p.set_defaults(func=cmd_torus, action="check-gcd-lcm")

    p = sub.add_parser("verify", parents=[common], help="theorem sweeps")
    p.add_argument("--theorem", required=True)
    p.add_argument("--sweep", default=None, help='e.g. "p=2,g=1..8,m=even"')
    p.add_argument("--exhaustive", action="store_true", help="fail instead of skipping scans over budget")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(argv)
    command = " ".join(x for x in (args.command, getattr(args, "action", None)) if x)
    try:
        report = args.func(args)
    except (SpinDivError, OSError) as exc:
        err = {"type": type(exc).__name__, "message": str(exc)}
        if args.format == "json":
            doc = {"command": command, "argv": argv, "status": "error", "error": err, "exit_code": 2}
            print(json.dumps(doc, indent=2, ensure_ascii=False))
        else:
            print(f"error: {err['type']}: {err['message']}", file=sys.stderr)
        return 2
    report.argv = argv
    print(report.to_json() if args.format == "json" else report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
