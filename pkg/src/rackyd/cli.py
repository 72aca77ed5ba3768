"""Command-line surface.

Every subcommand prints one JSON report to stdout (sorted keys, so identical
inputs give byte-identical output) and a timing line to stderr.  Exit codes:
0 when every mathematical check in the command passed, 1 when a check failed
(the report carries the witness), 2 for unusable input (bad file, bad table,
bad flags).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import envelope, group_hopf, jsonio, leibniz, racks, yd
from .errors import ValidationError
from .linalg import Matrix
from .scalars import field_from_name


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    return str(obj)


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc


def _write_json(path, payload):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise ValidationError(f"cannot write {path}: {exc}") from exc


def _limit_witnesses(witnesses, limit):
    if witnesses is None:
        return None
    if isinstance(witnesses, dict):
        items = sorted(witnesses.items())[:limit]
        return {k: _jsonable(v) for k, v in items}
    return _jsonable(witnesses)


def _emit_matrix(bm, args, report):
    """Shared tail for braiding-matrix and hv-rmatrix; returns (code, report)."""
    payload = bm.to_json_dict()
    if args.integers:
        payload["matrix"]["entries"] = bm.matrix.as_int_rows()
    if args.paper_layout:
        width = max(
            (len(str(v)) for row in bm.matrix.as_int_rows() for v in row), default=1
        )
        for row in bm.matrix.as_int_rows():
            print(" ".join(str(v).rjust(width) for v in row))
        return 0, None
    if args.json:
        _write_json(args.json, payload)
        report["artifact"] = args.json
    else:
        report["braiding"] = payload
    return 0, report


def _rack_q(module):
    """q(x) = p(x) - 1 recovered from a diagonal group grading."""
    hopf = module.hopf
    if not isinstance(hopf, group_hopf.GroupAlgebraDescriptor):
        raise ValidationError("--rack-q needs a module over a group algebra")
    one = module.field.one
    e = hopf.unit
    q = []
    for x in range(module.dim):
        terms = module.coaction[x]
        if len(terms) != 1 or terms[0][0] != x or terms[0][2] != one:
            raise ValidationError(
                "--rack-q needs a grading coaction x -> x (x) p(x)"
            )
        g = terms[0][1]
        q.append({g: one, e: -one} if g != e else {})
    return q


def _get_q(args, module, field):
    if getattr(args, "rack_q", False):
        return _rack_q(module)
    if getattr(args, "q", None):
        return jsonio.q_from_dict(_load_json(args.q), field)
    raise ValidationError("pass --q FILE or --rack-q")


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (exit_code, report_dict or None)

def _cmd_check_rack(args, field):
    shelf = racks.FiniteShelf.from_json_dict(_load_json(args.file))
    rep = racks.check_shelf(shelf)
    report = {
        "is_shelf": rep.is_shelf,
        "is_rack": rep.is_rack,
        "is_quandle": rep.is_quandle,
        "witnesses": _limit_witnesses(rep.witnesses, args.witness_limit),
    }
    return (0 if rep.is_rack else 1), report


def _cmd_make_dihedral(args, field):
    shelf = racks.dihedral_quandle(args.n)
    rep = racks.check_shelf(shelf)
    report = {"size": shelf.size, "is_quandle": rep.is_quandle}
    payload = shelf.to_json_dict()
    if args.json:
        _write_json(args.json, payload)
        report["artifact"] = args.json
    else:
        report["rack"] = payload
    return 0, report


def _cmd_make_conjugation(args, field):
    group = racks.FiniteGroup.from_json_dict(_load_json(args.file))
    shelf = racks.conjugation_rack(group)
    rep = racks.check_shelf(shelf)
    report = {"size": shelf.size, "is_quandle": rep.is_quandle}
    payload = shelf.to_json_dict()
    if args.json:
        _write_json(args.json, payload)
        report["artifact"] = args.json
    else:
        report["rack"] = payload
    return 0, report


def _cmd_inner_augmentation(args, field):
    shelf = racks.FiniteShelf.from_json_dict(_load_json(args.file))
    aug = racks.inner_augmentation(shelf)
    report = {
        "rack_size": aug.size,
        "inner_group_order": aug.group.size,
        "augmented_ok": True,
    }
    payload = aug.to_json_dict()
    if args.json:
        _write_json(args.json, payload)
        report["artifact"] = args.json
    else:
        report["augmented_rack"] = payload
    return 0, report


def _cmd_check_augmented(args, field):
    aug = racks.AugmentedRack.from_json_dict(_load_json(args.file))
    rep = racks.check_augmented(aug)
    report = {"ok": rep.ok, "witness": _jsonable(rep.witness)}
    return (0 if rep.ok else 1), report


def _cmd_rack_braiding(args, field):
    aug1 = racks.AugmentedRack.from_json_dict(_load_json(args.file))
    aug2 = racks.AugmentedRack.from_json_dict(_load_json(args.file2)) if args.file2 else aug1
    tensor, braid = racks.rack_tensor_and_braiding(aug1, aug2)
    report = {
        "tensor_size": tensor.size,
        "braiding": {f"{x},{y}": list(braid[(x, y)]) for x, y in sorted(braid)},
    }
    code = 0
    if args.file2 is None:
        ybe = racks.rack_braiding_ybe(aug1)
        report["set_level_ybe"] = ybe.ok
        report["witness"] = _jsonable(ybe.witness)
        code = 0 if ybe.ok else 1
    if args.json:
        _write_json(args.json, tensor.to_json_dict())
        report["artifact"] = args.json
    return code, report


def _cmd_linearize(args, field):
    aug = racks.AugmentedRack.from_json_dict(_load_json(args.file))
    lin = group_hopf.linearize_augmented(aug, field)
    rep = yd.check_yd(lin.module)
    report = {
        "dim": lin.module.dim,
        "group_order": aug.group.size,
        "yd_ok": rep.ok,
    }
    payload = jsonio.yd_to_dict(lin.module)
    if args.json:
        _write_json(args.json, payload)
        report["artifact"] = args.json
    else:
        report["module"] = payload
    return (0 if rep.ok else 1), report


def _cmd_check_yd(args, field):
    module = jsonio.yd_from_dict(_load_json(args.file), field)
    rep = yd.check_yd(module)
    report = {
        "ok": rep.ok,
        "yd_coproduct_form": rep.ok_coproduct_form,
        "yd_antipode_form": rep.ok_antipode_form,
        "witness": _jsonable(rep.witness),
    }
    return (0 if rep.ok else 1), report


def _cmd_braiding_matrix(args, field):
    module = jsonio.yd_from_dict(_load_json(args.file), field)
    bm = yd.braiding(module)
    report = {"factor_dim": bm.factor_dim, "size": bm.matrix.rows}
    return _emit_matrix(bm, args, report)


def _cmd_check_ybe(args, field):
    payload = _load_json(args.file)
    if "matrix" in payload:
        bm = yd.BraidingMatrix.from_json_dict(payload, field)
        matrix = bm.matrix
    else:
        matrix = Matrix.from_json_dict(payload, field)
    rep = yd.check_ybe(matrix, field)
    report = {"ok": rep.ok}
    if not rep.ok and args.json:
        _write_json(args.json, rep.defect.to_json_dict())
        report["defect_artifact"] = args.json
    return (0 if rep.ok else 1), report


def _cmd_check_leibniz(args, field):
    alg = leibniz.LeibnizAlgebra.from_json_dict(_load_json(args.file), field)
    rep = leibniz.check_leibniz(alg)
    report = {"ok": rep.ok, "witness": _jsonable(rep.witness)}
    return (0 if rep.ok else 1), report


def _cmd_lie_quotient(args, field):
    alg = leibniz.LeibnizAlgebra.from_json_dict(_load_json(args.file), field)
    lq = leibniz.lie_quotient(alg)
    report = {
        "input_dim": alg.dim,
        "ideal_dim": len(lq.ideal),
        "quotient_dim": lq.dim,
        "quotient_basis": list(lq.quotient.basis),
    }
    payload = {
        "quotient": lq.quotient.to_json_dict(),
        "pi": lq.pi.to_json_dict(),
        "section": lq.section.to_json_dict(),
        "ideal": [[str(c) for c in row] for row in lq.ideal],
    }
    if args.json:
        _write_json(args.json, payload)
        report["artifact"] = args.json
    else:
        report["quotient"] = payload["quotient"]
    return 0, report


def _cmd_unital_shelf(args, field):
    alg = leibniz.LeibnizAlgebra.from_json_dict(_load_json(args.file), field)
    shelf = leibniz.unital_shelf(alg)
    entries = []
    for i in range(shelf.dim):
        for j in range(shelf.dim):
            if shelf.table[i][j]:
                entries.append({
                    "i": i, "j": j,
                    "out": {str(k): str(c) for k, c in sorted(shelf.table[i][j].items())},
                })
    payload = {"basis": list(shelf.basis), "table": entries}
    report = {"dim": shelf.dim}
    if args.json:
        _write_json(args.json, payload)
        report["artifact"] = args.json
    else:
        report["shelf"] = payload
    return 0, report


def _cmd_first_order_yd(args, field):
    alg = leibniz.LeibnizAlgebra.from_json_dict(_load_json(args.file), field)
    module = leibniz.first_order_yd(alg, args.degree)
    rep = yd.check_yd(module)
    report = {"dim": module.dim, "yd_ok": rep.ok}
    payload = jsonio.yd_to_dict(module)
    if args.json:
        _write_json(args.json, payload)
        report["artifact"] = args.json
    else:
        report["module"] = payload
    return (0 if rep.ok else 1), report


def _cmd_hv_rmatrix(args, field):
    module = leibniz.first_order_yd(leibniz.heisenberg_voros(field), args.degree)
    bm = yd.braiding(module)
    report = {"factor_basis": list(bm.factor_basis), "size": bm.matrix.rows}
    return _emit_matrix(bm, args, report)


def _cmd_env_build(args, field):
    alg = leibniz.LeibnizAlgebra.from_json_dict(_load_json(args.file), field)
    env = envelope.build_env(leibniz.lie_map_object(alg), args.degree)
    report = {
        "degree": args.degree,
        "pbw_dim": env.pbw.size,
        "carrier_dim": env.size,
        "pbw_basis": list(env.pbw.labels),
    }
    if args.json:
        payload = {
            "labels": list(env.labels),
            "right_action": [
                [{str(e): str(c) for e, c in sorted(vec.items())} for vec in row]
                for row in env.right_act_tab
            ],
            "left_action": [
                [{str(e): str(c) for e, c in sorted(vec.items())} for vec in row]
                for row in env.left_act_tab
            ],
            "left_coaction": [
                [[h, e, str(c)] for h, e, c in row] for row in env.left_coact_tab
            ],
            "right_coaction": [
                [[e, h, str(c)] for e, h, c in row] for row in env.right_coact_tab
            ],
        }
        _write_json(args.json, payload)
        report["artifact"] = args.json
    return 0, report


def _cmd_env_checks(args, field):
    alg = leibniz.LeibnizAlgebra.from_json_dict(_load_json(args.file), field)
    env = envelope.build_env(leibniz.lie_map_object(alg), args.degree)
    pr = envelope.phi_checks(env)
    fr = envelope.f_tilde_checks(env)
    ar = envelope.antipode_checks(env)
    ok = pr.ok and fr.ok and ar.ok
    report = {
        "ok": ok,
        "phi_bimodule": {"ok": pr.bimodule_ok, "scope": pr.bimodule_scope},
        "phi_coderivation": {"ok": pr.coderivation_ok, "scope": pr.coderivation_scope},
        "restriction_im_in_ker_eps": {"ok": fr.im_in_ker_eps, "scope": "exact"},
        "restriction_colinear": {"ok": fr.colinear, "scope": "exact"},
        "restriction_yd_morphism": {"ok": fr.yd_morphism, "scope": "exact"},
        "antipode_square": {"ok": ar.ok, "scope": ar.scope},
        "witnesses": _limit_witnesses(
            {**pr.witnesses, **fr.witnesses}, args.witness_limit
        ),
    }
    return (0 if ok else 1), report


def _cmd_theorem1_bracket(args, field):
    alg = leibniz.LeibnizAlgebra.from_json_dict(_load_json(args.file), field)
    env = envelope.build_env(leibniz.lie_map_object(alg), args.degree)
    data = envelope.enveloping_bracket(env)
    rep = yd.check_braided_leibniz(data)
    matches = all(
        data.bracket[i][j] == alg.brackets[i][j]
        for i in range(alg.dim) for j in range(alg.dim)
    )
    entries = []
    for i in range(data.dim):
        for j in range(data.dim):
            if data.bracket[i][j]:
                entries.append({
                    "i": i, "j": j,
                    "out": {str(k): str(c) for k, c in sorted(data.bracket[i][j].items())},
                })
    report = {
        "braided_leibniz_ok": rep.ok,
        "recovers_input_brackets": matches,
        "tau_is_flip": data.tau.matrix == yd.flip_matrix(data.dim, field),
        "bracket": entries,
    }
    if args.json:
        _write_json(args.json, {"basis": list(data.basis), "bracket": entries,
                                "tau": data.tau.to_json_dict()})
        report["artifact"] = args.json
        del report["bracket"]
    return (0 if rep.ok else 1), report


def _cmd_q_conditions(args, field):
    module = jsonio.yd_from_dict(_load_json(args.file), field)
    q = _get_q(args, module, field)
    rep = yd.check_q_conditions(module, q)
    report = {
        "ok": rep.ok,
        "equivariance": rep.equivariance,
        "coderivation_condition": rep.coderivation_condition,
        "witnesses": _limit_witnesses(rep.witnesses, args.witness_limit),
    }
    return (0 if rep.ok else 1), report


def _cmd_braided_leibniz(args, field):
    module = jsonio.yd_from_dict(_load_json(args.file), field)
    q = _get_q(args, module, field)
    data = yd.braided_leibniz_from_q(module, q)
    rep = yd.check_braided_leibniz(data)
    entries = []
    for i in range(data.dim):
        for j in range(data.dim):
            if data.bracket[i][j]:
                entries.append({
                    "i": i, "j": j,
                    "out": {str(k): str(c) for k, c in sorted(data.bracket[i][j].items())},
                })
    report = {"ok": rep.ok, "witness": _jsonable(rep.witness), "bracket": entries}
    if args.json:
        _write_json(args.json, {"basis": list(data.basis), "bracket": entries,
                                "tau": data.tau.to_json_dict()})
        report["artifact"] = args.json
        del report["bracket"]
    return (0 if rep.ok else 1), report


def _cmd_dual_check(args, field):
    aug = racks.AugmentedRack.from_json_dict(_load_json(args.file))
    rep = group_hopf.function_dual_check(aug, field)
    report = {
        "ok": rep.ok,
        "p_star_right_colinear": rep.p_star_right_colinear,
        "p_star_bimodule": rep.p_star_bimodule,
        "note": rep.note,
        "witnesses": _limit_witnesses(rep.witnesses, args.witness_limit),
    }
    return (0 if rep.ok else 1), report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="rational", metavar="rational|gfp:<p>",
                        help="scalar field (default: rational)")
    common.add_argument("--witness-limit", type=int, default=8, metavar="K",
                        help="cap on witnesses included in the report")
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--json", metavar="PATH", help="write the main artifact to PATH")
    deg = argparse.ArgumentParser(add_help=False)
    deg.add_argument("--degree", type=int, default=2, metavar="D",
                     help="truncation degree for enveloping algebras (default 2)")
    mat = argparse.ArgumentParser(add_help=False)
    mat.add_argument("--paper-layout", action="store_true",
                     help="print the matrix as rows of space-separated integers")
    mat.add_argument("--integers", action="store_true",
                     help="emit integer entries, failing if any entry is not integral")

    parser = argparse.ArgumentParser(
        prog="rackyd",
        description="exact verification of racks, Yetter-Drinfel'd modules, "
                    "and braided Leibniz brackets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help, parents=(), positional=("file",)):
        p = sub.add_parser(name, parents=[common, *parents], help=help)
        for pos in positional:
            if pos == "file":
                p.add_argument("file", help="input JSON file")
            elif pos == "file2":
                p.add_argument("file2", nargs="?", default=None,
                               help="optional second input")
            elif pos == "n":
                p.add_argument("n", type=int)
        p.set_defaults(handler=handler)
        return p

    add("check-rack", _cmd_check_rack, "shelf/rack/quandle axioms of a table")
    add("make-dihedral", _cmd_make_dihedral, "build the dihedral quandle on Z/n",
        parents=[out], positional=("n",))
    add("make-conjugation", _cmd_make_conjugation, "conjugation quandle of a group",
        parents=[out])
    add("inner-augmentation", _cmd_inner_augmentation,
        "augment a rack over its inner permutation group", parents=[out])
    add("check-augmented", _cmd_check_augmented, "augmentation identity of a G-set")
    add("rack-braiding", _cmd_rack_braiding,
        "tensor braiding c(x,y) = (y, x.p(y)); set-level YBE when braiding with itself",
        parents=[out], positional=("file", "file2"))
    add("linearize", _cmd_linearize, "kX as a graded module over kG", parents=[out])
    add("check-yd", _cmd_check_yd, "Yetter-Drinfel'd compatibility of a module file")
    add("braiding-matrix", _cmd_braiding_matrix, "matrix of tau on M (x) M",
        parents=[out, mat])
    add("check-ybe", _cmd_check_ybe, "Yang-Baxter equation for a matrix file",
        parents=[out])
    add("check-leibniz", _cmd_check_leibniz, "Leibniz identity of structure constants")
    add("lie-quotient", _cmd_lie_quotient, "quotient by the squares ideal",
        parents=[out])
    add("unital-shelf", _cmd_unital_shelf, "the operation aa' + a'u + [u,v] on k+g",
        parents=[out])
    add("first-order-yd", _cmd_first_order_yd,
        "module on k+g over the truncated enveloping algebra", parents=[out, deg])
    add("hv-rmatrix", _cmd_hv_rmatrix,
        "16x16 braiding matrix of the Heisenberg-Voros module",
        parents=[out, deg, mat], positional=())
    add("env-build", _cmd_env_build, "assemble the enveloping tetramodule",
        parents=[out, deg])
    add("env-checks", _cmd_env_checks,
        "phi bilinearity/coderivation, restriction, and antipode checks",
        parents=[deg])
    add("theorem1-bracket", _cmd_theorem1_bracket,
        "braided Leibniz bracket on the invariants of the enveloping tetramodule",
        parents=[out, deg])
    qp = add("q-conditions", _cmd_q_conditions,
             "equivariance and colinearity of a map q into ker(counit)")
    qp.add_argument("--q", metavar="QFILE", help="q-map JSON file")
    qp.add_argument("--rack-q", action="store_true",
                    help="use q(x) = p(x) - 1 read off a grading coaction")
    bp = add("braided-leibniz", _cmd_braided_leibniz,
             "build and verify the bracket x <| y = x q(y)", parents=[out])
    bp.add_argument("--q", metavar="QFILE", help="q-map JSON file")
    bp.add_argument("--rack-q", action="store_true",
                    help="use q(x) = p(x) - 1 read off a grading coaction")
    add("dual-check", _cmd_dual_check,
        "pullback p*: k[G] -> k[X] respects the (co)module structures")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    t0 = time.perf_counter()
    try:
        field = field_from_name(args.field)
        code, report = args.handler(args, field)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        # timing goes to stderr so that stdout stays byte-identical across runs
        elapsed = (time.perf_counter() - t0) * 1000.0
        print(f"elapsed_ms={elapsed:.1f}", file=sys.stderr)
    if report is not None:
        report = {"command": ["rackyd", *argv], **report}
        print(json.dumps(_jsonable(report), indent=2, sort_keys=True))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
