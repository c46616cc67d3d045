"""Command-line interface.

Every subcommand writes a JSON report (sorted keys) to stdout.  Exit codes:
0 success or pass, 1 infeasible or fail, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import constructor as cs
from . import diamond as dm
from . import inequalities as iq
from .cyclotomic import NonIntegralSum
from .groups import Gabg, ResourceCapExceeded, close, group_spec_from_json
from .invariants import DEFAULT_BASIS_CAP, burnside_dims, closed_form_aa, closed_form_ab, crosscheck

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
CLI_GROUP_CAP = 10**6
CAPS_ENV = "HODGE_FORGE_CAPS"


class InputError(Exception):
    pass


# ---------------------------------------------------------------- helpers


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _pair(text: str) -> tuple[int, int]:
    xs = _ints(text)
    if len(xs) != 2:
        raise InputError(f"expected two integers 'a,b', got {text!r}")
    return xs[0], xs[1]


def _read_json(args) -> dict:
    path = getattr(args, "input", None)
    try:
        if path and path != "-":
            with open(path) as fh:
                return json.load(fh)
        return json.load(sys.stdin)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def caps_from(args) -> tuple[int, int]:
    """Resource caps: command-line flags, then ``HODGE_FORGE_CAPS``, then defaults.

    The environment variable has the form ``max_group=N,max_basis=M``.
    """
    group, basis = CLI_GROUP_CAP, DEFAULT_BASIS_CAP
    env = os.environ.get(CAPS_ENV, "").strip()
    if env:
        for item in env.split(","):
            key, _, val = item.partition("=")
            key = key.strip().replace("-", "_")
            try:
                num = int(val)
            except ValueError:
                raise InputError(f"{CAPS_ENV}: bad value in {item!r}") from None
            if key == "max_group":
                group = num
            elif key == "max_basis":
                basis = num
            else:
                raise InputError(f"{CAPS_ENV}: unknown key {key!r}")
    if args.max_group is not None:
        group = args.max_group
    if args.max_basis is not None:
        basis = args.max_basis
    return group, basis


def _render_table(obj, indent: str = "") -> str:
    if isinstance(obj, dict):
        if "h" in obj and "n" in obj and isinstance(obj["h"], list):
            return dm._pretty(obj["n"], obj["h"])
        if "rules" in obj:
            lines = [f"{indent}branch: {obj.get('branch', '')}"]
            for r in obj["rules"]:
                lines.append(f"{indent}{r['status']:>4}  {r['rule']:<24} {r['paper_anchor']}  "
                             f"[lhs={r['lhs']}, rhs={r['rhs']}]")
            return "\n".join(lines)
        lines = []
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (int, str)) for x in v):
                lines.append(f"{indent}{k}:")
                lines.append(_render_table(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_render_table(x, indent) if isinstance(x, (dict, list)) else f"{indent}{x}" for x in obj)
    return f"{indent}{obj}"


def _emit(args, obj) -> None:
    if args.format == "table":
        print(_render_table(obj))
    else:
        print(json.dumps(obj, sort_keys=True))


def _plan_output(res) -> tuple[dict, int]:
    if isinstance(res, cs.Infeasible):
        return res.to_json(), EXIT_FAIL
    return dict(res.to_json(), feasible=True), EXIT_OK


# ---------------------------------------------------------------- commands


def cmd_validate(args) -> int:
    obj = _read_json(args)
    if "b" in obj and "h" not in obj:
        b = dm.BettiVector(int(obj["n"]), tuple(obj["b"]))
        violations = dm.validate_betti(b)
    else:
        violations = dm.validate(dm.diamond_from_json(obj))
    _emit(args, {"valid": not violations, "violations": [v.to_json() for v in violations]})
    return EXIT_OK if not violations else EXIT_FAIL


def cmd_plan_weight(args) -> int:
    if args.target is None:
        obj = _read_json(args)
        k, n, target = int(obj["k"]), int(obj["n"]), list(obj["target"])
    else:
        target = _ints(args.target)
        k = args.k if args.k is not None else len(target) - 1
        n = args.n if args.n is not None else k + 1
    out, code = _plan_output(cs.plan_weight_k(k, target, n))
    _emit(args, out)
    return code


def cmd_plan_middle(args) -> int:
    if args.target is None:
        obj = _read_json(args)
        n, target = int(obj["n"]), list(obj["target"])
    else:
        target = _ints(args.target)
        n = args.n if args.n is not None else len(target) - 1
    out, code = _plan_output(cs.plan_middle_weight(target, n))
    _emit(args, out)
    return code


def cmd_plan_truncated(args) -> int:
    d = dm.diamond_from_json(_read_json(args))
    if isinstance(d, dm.FormalHodgeDiamond):
        d = d.truncated()
    out, code = _plan_output(cs.plan_truncated(d))
    _emit(args, out)
    return code


def cmd_plan_betti(args) -> int:
    # the middle entry is not planned; "*" (or null in JSON) stands for it
    if args.b is not None:
        parts = args.b.replace(" ", "").split(",")
        n = (len(parts) - 1) // 2
        b = [None if x == "*" else x for x in parts]
        b = [x if x is None else _ints(x)[0] for x in b]
    else:
        obj = _read_json(args)
        b, n = list(obj["b"]), int(obj["n"])
    if len(b) != 2 * n + 1:
        raise InputError(f"a Betti vector of dimension {n} has {2 * n + 1} entries, got {len(b)}")
    if any(x is None for i, x in enumerate(b) if i != n):
        raise InputError("only the middle Betti number may be left unspecified")
    if b[n] is None:
        b[n] = b[n - 2] if n >= 2 else 1
    out, code = _plan_output(cs.plan_betti(dm.BettiVector(n, tuple(b))))
    _emit(args, out)
    return code


def cmd_evaluate(args) -> int:
    obj = _read_json(args)
    if obj.get("feasible") is False:
        raise InputError("cannot evaluate an infeasible plan")
    group_cap, basis_cap = caps_from(args)
    ev = cs.evaluate(cs.recipe_from_json(obj), group_cap=group_cap, basis_cap=basis_cap)
    _emit(args, ev.to_json())
    return EXIT_OK


def _gabg_args(args) -> Gabg:
    if args.a is None or args.b is None or args.g is None:
        raise InputError("--a, --b and --g are required")
    return Gabg(args.a, args.b, args.g)


def _closed(a: int, b: int, g: int, variant: str):
    if a > b:
        return closed_form_ab(a, b, g)
    return closed_form_aa(a, g, variant)


def cmd_invariants(args) -> int:
    spec = _gabg_args(args)
    t = _closed(spec.a, spec.b, spec.g, args.variant)
    _emit(args, dict(t.to_json(), source=t.source, variant=args.variant if spec.a == spec.b else "a>b"))
    return EXIT_OK


def _oracle_group(args):
    if args.a is not None:
        spec = _gabg_args(args)
    else:
        spec = group_spec_from_json(_read_json(args))
    return spec


def cmd_oracle(args) -> int:
    group_cap, basis_cap = caps_from(args)
    spec = _oracle_group(args)
    space = spec.space()
    if args.method == "factored" or (args.method == "auto" and isinstance(spec, Gabg)):
        if not isinstance(spec, Gabg):
            raise InputError("the factored route needs a Gabg group")
        t = burnside_dims(space, spec, method="factored", group_cap=group_cap, basis_cap=basis_cap)
        order = None
    else:
        group = close(spec.generators(), space.genera, cap=group_cap)
        method = "cycles" if args.method == "auto" else args.method
        t = burnside_dims(space, group, method=method, group_cap=group_cap, basis_cap=basis_cap, jobs=args.jobs)
        order = group.order
    out = dict(t.to_json(), source=t.source, group=spec.to_json())
    if order is not None:
        out["order"] = order
    _emit(args, out)
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    group_cap, basis_cap = caps_from(args)
    spec = _gabg_args(args)
    closed = _closed(spec.a, spec.b, spec.g, args.variant)
    diffs = crosscheck(spec.space(), spec, closed, group_cap=group_cap, basis_cap=basis_cap)
    _emit(args, {"group": spec.to_json(), "closed_source": closed.source, "variant": args.variant,
                 "discrepancies": [d.to_json() for d in diffs], "agree": not diffs})
    return EXIT_OK if not diffs else EXIT_FAIL


def cmd_zc_cert(args) -> int:
    cert = cs.zc_certificate(args.a, args.b, args.c, args.n)
    problems = cs.validate_certificate(cert)
    _emit(args, dict(cert.to_json(), problems=problems))
    return EXIT_OK if not problems else EXIT_FAIL


def _fields(obj: dict, names: Sequence[str]) -> dict:
    missing = [k for k in names if k not in obj]
    if missing:
        raise InputError(f"missing fields: {', '.join(missing)}")
    out = {}
    for k in names:
        v = obj[k]
        if not isinstance(v, int) or v < 0:
            raise InputError(f"field {k} must be a natural number")
        out[k] = v
    return out


def cmd_check_surface(args) -> int:
    if args.h10 is not None or args.h20 is not None or args.h11 is not None:
        if None in (args.h10, args.h20, args.h11):
            raise InputError("--h10, --h20 and --h11 must be given together")
        data = iq.SurfaceData(args.h10, args.h20, args.h11)
    else:
        data = iq.SurfaceData(**_fields(_read_json(args), ("h10", "h20", "h11")))
    rep = iq.surface_check(data)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_check_threefold(args) -> int:
    obj = _read_json(args)
    data = iq.ThreefoldData(**_fields(obj, ("h10", "h20", "h30", "h11", "h21")), chern=obj.get("chern"))
    rep = iq.threefold_check(data)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_check_fourfold(args) -> int:
    obj = _read_json(args)
    canonical = obj.get("canonical")
    if canonical not in (None, "anti-ample", "trivial", "ample"):
        raise InputError("canonical must be one of anti-ample, trivial, ample")
    data = iq.FourfoldData(**_fields(obj, ("h10", "h20", "h30", "h40", "h11", "h21", "h31", "h22")),
                           chern=obj.get("chern"), canonical=canonical)
    rep = iq.fourfold_check(data)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_hypersurface(args) -> int:
    d = iq.hypersurface_hodge(args.n, args.d)
    prim = iq.primitive_middle(args.n, args.d)
    _emit(args, dict(d.to_json(), middle_row=d.row(args.n), primitive_middle=prim,
                     betti=list(dm.betti_of(d).b)))
    return EXIT_OK


def cmd_dominates(args) -> int:
    res = iq.dominates(args.n, _pair(args.rs), _pair(args.pq))
    _emit(args, res.to_json())
    return EXIT_OK


def cmd_family(args) -> int:
    rs, pq = _pair(args.rs), _pair(args.pq)
    dom = iq.dominates(args.n, rs, pq)
    if dom.dominates or dom.tag == "trivial":
        _emit(args, {"domination": dom.to_json(), "witnesses": [], "reason": "domination holds"})
        return EXIT_FAIL
    ws = [iq.counterexample_family(args.n, rs, pq, j) for j in range(args.start, args.start + args.count)]
    _emit(args, {"domination": dom.to_json(), "witnesses": [w.to_json() for w in ws]})
    return EXIT_OK


def cmd_constants(args) -> int:
    ps = [args.p] if args.p is not None else list(range(1, (args.n - 1) // 2 + 1))
    rows = [cs.planner_constants(p, args.n).to_json() for p in ps]
    ok = all(b["holds"] for r in rows for b in r["bounds"].values())
    _emit(args, {"n": args.n, "constants": rows, "all_bounds_hold": ok})
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", metavar="PATH", help="JSON input file (default: stdin)")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--max-group", type=int, default=None, help=f"group closure cap (default {CLI_GROUP_CAP})")
    common.add_argument("--max-basis", type=int, default=None,
                        help=f"monomial-action cap for Burnside sums (default {DEFAULT_BASIS_CAP})")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for Burnside sums")

    parser = argparse.ArgumentParser(prog="hodge-forge", description="Exact Hodge-number construction calculus.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a diamond (or Betti vector) against the formal predicates")

    p = add("plan-weight", cmd_plan_weight, "plan a weight-k Hodge structure")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--target", help="h^{k,0},...,h^{0,k}")

    p = add("plan-middle", cmd_plan_middle, "plan a middle-weight Hodge structure with h^{n,0}=0")
    p.add_argument("--n", type=int)
    p.add_argument("--target", help="h^{n,0},...,h^{0,n}")

    add("plan-truncated", cmd_plan_truncated, "plan a truncated Hodge diamond")

    p = add("plan-betti", cmd_plan_betti, "plan Betti numbers away from the middle degree")
    p.add_argument("--b", help="b_0,...,b_2n")

    add("evaluate", cmd_evaluate, "evaluate a recipe to Hodge numbers")

    for name, func, text in (("invariants", cmd_invariants, "closed-form invariant dimensions of G(a,b,g)"),
                             ("oracle", cmd_oracle, "Burnside invariant dimensions"),
                             ("crosscheck", cmd_crosscheck, "compare closed form with Burnside")):
        p = add(name, func, text)
        p.add_argument("--a", type=int)
        p.add_argument("--b", type=int)
        p.add_argument("--g", type=int)
        if name != "oracle":
            p.add_argument("--variant", choices=("corrected", "printed"), default="corrected",
                           help="a=b closed form variant")
        else:
            p.add_argument("--method", choices=("auto", "cycles", "enumerate", "factored"), default="auto")

    p = add("zc-cert", cmd_zc_cert, "emit a Z_c certificate")
    for flag in ("--a", "--b", "--c", "--n"):
        p.add_argument(flag, type=int, required=True)

    p = add("check-surface", cmd_check_surface, "surface inequalities")
    for flag in ("--h10", "--h20", "--h11"):
        p.add_argument(flag, type=int)
    add("check-threefold", cmd_check_threefold, "three-fold checks (JSON input)")
    add("check-fourfold", cmd_check_fourfold, "four-fold checks (JSON input)")

    p = add("hypersurface", cmd_hypersurface, "Hodge diamond of a smooth hypersurface")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("dominates", cmd_dominates, "domination decision")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rs", required=True)
    p.add_argument("--pq", required=True)

    p = add("family", cmd_family, "counterexample family witnesses")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rs", required=True)
    p.add_argument("--pq", required=True)
    p.add_argument("--start", type=int, default=1)
    p.add_argument("--count", type=int, default=5)

    p = add("constants", cmd_constants, "planner constants C1, C2, C")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ResourceCapExceeded as exc:
        print(json.dumps({"error": "resource cap", "detail": str(exc)}, sort_keys=True))
        return EXIT_CAP
    except NonIntegralSum as exc:
        print(json.dumps({"error": "internal consistency failure", "detail": str(exc)}, sort_keys=True))
        return EXIT_FAIL
    except (InputError, dm.StructureError, ValueError, KeyError, TypeError) as exc:
        print(json.dumps({"error": "input", "detail": str(exc)}, sort_keys=True))
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
