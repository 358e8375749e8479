"""Command-line front end.

Exit codes: 0 when the computation succeeded and the property the command
asserts holds, 1 when it was computed and fails (with a certificate), 2 for
input and usage errors.  Output is deterministic: basis order throughout and
no timestamps, so two runs can be diffed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bialg import (
    AxiomError,
    Bialgebra,
    check_bialgebra_axioms,
    dual_bialgebra,
    format_element as fmt_element,
    format_tensor as fmt_tensor,
)
from .conv import check_antihom, solve_antipode
from .exactla import PrimeField, QQ, StructuralError
from .fileformat import BialgebraFileError, dumps, parse_bialgebra, write_bialgebra
from .frob import (
    antipode_from_fh,
    casimir_report,
    fh_system,
    integral_spaces,
    norm_report,
    summingup_report,
)
from .hopfmod import build_b_check, build_b_hat, hopf_galois, nu_from_eta, sigma
from .report import Report, TheoremViolation
from .zoo import ZooValidationError, zoo

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

GEN_NAMES = (
    "c2", "c3", "c4", "s3", "sweedler_h4", "trivial", "idempotent_monoid",
    "divided_power_char_p",
)


class UsageError(Exception):
    pass


# -- formatting ------------------------------------------------------------


def scalars(B: Bialgebra, v: Sequence) -> list[str]:
    return [B.field.format(x) for x in v]


def report_json(rep: Report) -> dict:
    return {
        "title": rep.title,
        "passed": rep.passed,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "witness": None if c.witness is None else str(c.witness),
                "detail": c.detail,
            }
            for c in rep.checks
        ],
    }


# -- commands ---------------------------------------------------------------
# each returns (exit code, text lines, json object)


def cmd_validate(B: Bialgebra, args):
    rep = check_bialgebra_axioms(B)
    return (EXIT_OK if rep.passed else EXIT_FAIL), [rep.render()], report_json(rep)


def cmd_antipode(B: Bialgebra, args):
    sides = ["right", "left"] if args.side == "both" else [args.side]
    for side in sides:
        if solve_antipode(B, side) is None:
            msg = f"no {side} antipode: inconsistent system"
            return EXIT_FAIL, [msg], {"antipode": None, "side": side, "certificate": msg}
    sol = solve_antipode(B, args.side)
    S = sol.S
    lines = [f"{args.side} antipode of {B.name or 'B'} (solution space dim {sol.solution_space_dim})"]
    for i, b in enumerate(B.basis):
        lines.append(f"  S({b}) = {fmt_element(B, S.col_list(i))}")
    anti = check_antihom(B, S)
    lines.append(anti.render())
    obj = {
        "side": args.side,
        "solution_space_dim": sol.solution_space_dim,
        "antipode": [scalars(B, S.col_list(i)) for i in range(B.dim)],
        "antihom": report_json(anti),
    }
    return EXIT_OK, lines, obj


def cmd_sigma(B: Bialgebra, args):
    M = build_b_check(B) if args.left else build_b_hat(B)
    data = sigma(M)
    c, q = data.dims
    label = "varsigma" if args.left else "sigma"
    lines = [
        f"{label} of {M.name}: coinvariants dim {c} -> bar quotient dim {q}, rank {data.rank}",
        f"  invertible: {'yes' if data.invertible else 'no'}",
    ]
    lines += ["  " + " ".join(str(x) for x in r) for r in data.sigma.to_rows()]
    lines.append(data.decomposition.render())
    obj = {
        "module": M.name,
        "coinvariants_dim": c,
        "bar_dim": q,
        "rank": data.rank,
        "invertible": data.invertible,
        "matrix": [[B.field.format(x) for x in r] for r in data.sigma.to_rows()],
        "decomposition": report_json(data.decomposition),
    }
    if not data.invertible:
        cert = f"rank {data.rank} from dim {c} to dim {q}"
        lines.append(f"not invertible: {cert}")
        obj["certificate"] = cert
        return EXIT_FAIL, lines, obj
    return EXIT_OK, lines, obj


def cmd_integrals(B: Bialgebra, args):
    ints = integral_spaces(B)
    spaces = [
        ("left integrals in B", ints.left_in, ""),
        ("right integrals in B", ints.right_in, ""),
        ("left integrals on B", ints.left_on, "*"),
        ("right integrals on B", ints.right_on, "*"),
    ]
    lines, obj = [], {}
    for title, space, suffix in spaces:
        basis = [fmt_element(B, v, suffix) for v in space.vectors()]
        lines.append(f"{title}: dim {space.dim}" + (f", span{{{', '.join(basis)}}}" if basis else ""))
        obj[title.replace(" ", "_")] = [scalars(B, v) for v in space.vectors()]
    return EXIT_OK, lines, obj


def _fh_or_fail(B: Bialgebra):
    sys_ = fh_system(B)
    if not sys_:
        msg = f"not an FH-algebra: {sys_}"
        return None, (EXIT_FAIL, [msg], {"fh": False, "reason": sys_.reason, "certificate": sys_.certificate})
    return sys_, None


def cmd_fh(B: Bialgebra, args):
    sys_, fail = _fh_or_fail(B)
    if fail:
        return fail
    lines = [
        f"{B.name or 'B'} is an FH-algebra",
        f"  psi = {fmt_element(B, sys_.psi, '*')}",
        f"  T   = {fmt_element(B, sys_.T)}",
        f"  t   = {fmt_element(B, sys_.t)}",
        f"  e   = {fmt_tensor(B, sys_.e)}",
        f"  psi coordinates: {' '.join(scalars(B, sys_.psi))}",
        f"  T coordinates:   {' '.join(scalars(B, sys_.T))}",
        f"  t coordinates:   {' '.join(scalars(B, sys_.t))}",
        f"  e coordinates:   {' '.join(scalars(B, sys_.e))}",
    ]
    obj = {
        "fh": True,
        "psi": scalars(B, sys_.psi),
        "T": scalars(B, sys_.T),
        "t": scalars(B, sys_.t),
        "e": scalars(B, sys_.e),
    }
    return EXIT_OK, lines, obj


def cmd_frobenius(B: Bialgebra, args):
    sys_, fail = _fh_or_fail(B)
    if fail:
        return fail
    cas = casimir_report(B, sys_)
    nrm = norm_report(B, sys_)
    S = antipode_from_fh(B, sys_)
    lines = [f"Frobenius form psi(b_i b_j), psi = {fmt_element(B, sys_.psi, '*')}"]
    lines += ["  " + " ".join(str(x) for x in r) for r in sys_.form.to_rows()]
    lines += [cas.render(), nrm.render(), "antipode from the Frobenius system"]
    for i, b in enumerate(B.basis):
        lines.append(f"  S({b}) = {fmt_element(B, S.S.col_list(i))}")
    ok = cas.passed and nrm.passed
    obj = {
        "form": [[B.field.format(x) for x in r] for r in sys_.form.to_rows()],
        "casimir": report_json(cas),
        "norms": report_json(nrm),
        "antipode": [scalars(B, S.S.col_list(i)) for i in range(B.dim)],
    }
    return (EXIT_OK if ok else EXIT_FAIL), lines, obj


def cmd_galois(B: Bialgebra, args):
    g = hopf_galois(B)
    n2 = B.dim * B.dim
    lines = [f"Hopf-Galois map a ⊗ b -> a b_1 ⊗ b_2: rank {g.rank} of {n2}"]
    obj = {"rank": g.rank, "size": n2, "bijective": g.bijective}
    nu = nu_from_eta(B)
    if nu is not None:
        lines.append("eta of B^ invertible; nu(b) from its inverse:")
        for i, b in enumerate(B.basis):
            lines.append(f"  nu({b}) = {fmt_element(B, nu.col_list(i))}")
        obj["nu"] = [scalars(B, nu.col_list(i)) for i in range(B.dim)]
    if not g.bijective:
        lines.append(f"not bijective: rank {g.rank} < {n2}")
        return EXIT_FAIL, lines, obj
    return EXIT_OK, lines, obj


def cmd_report(B: Bialgebra, args):
    panel = summingup_report(B)
    obj = {
        "bialgebra": panel.bialgebra,
        "consistent": panel.consistent,
        "rows": [
            {"item": r.item, "statement": r.statement, "verdict": r.verdict, "witness": r.witness}
            for r in panel.rows
        ],
    }
    return (EXIT_OK if panel.verdict else EXIT_FAIL), [panel.render()], obj


def cmd_dual(B: Bialgebra, args):
    D = dual_bialgebra(B)
    return _emit_file(D, args.output, f"dual of {B.name or 'B'}")


def _emit_file(B: Bialgebra, output, what: str):
    if output:
        write_bialgebra(B, output)
        return EXIT_OK, [f"wrote {output} ({what}, dim {B.dim})"], {"written": output, "dim": B.dim}
    return EXIT_OK, [dumps(B).rstrip("\n")], None


def parse_field(text: str):
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        try:
            return PrimeField(int(text[3:]))
        except (ValueError, StructuralError):
            pass
    raise UsageError(f"--field must be Q or Fp:<prime>, got {text!r}")


def cmd_gen(args):
    F = parse_field(args.field)
    name = args.name
    params = {}
    if name == "divided_power_char_p":
        if F.characteristic == 0:
            raise UsageError("divided_power_char_p needs --field Fp:<prime>")
        params["p"] = F.characteristic
    try:
        B = zoo(name, F, **params)
    except KeyError:
        raise UsageError(f"unknown zoo member {name!r}; known: {', '.join(GEN_NAMES)}") from None
    return _emit_file(B, args.output, f"{B.name} over {F!r}")


COMMANDS = {
    "validate": (cmd_validate, "check the bialgebra axioms"),
    "antipode": (cmd_antipode, "solve for a left, right or two-sided antipode"),
    "sigma": (cmd_sigma, "the canonical map on B^ (or B-check with --left)"),
    "integrals": (cmd_integrals, "the four integral spaces"),
    "frobenius": (cmd_frobenius, "Frobenius form, Casimir and norm identities, antipode"),
    "fh": (cmd_fh, "decide FH-algebra; print psi, T, t, e"),
    "galois": (cmd_galois, "rank of the Hopf-Galois map"),
    "report": (cmd_report, "the eight equivalent conditions"),
    "dual": (cmd_dual, "write the dual bialgebra"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--unchecked", action="store_true",
                        help="skip the axiom check when reading the file")
    parser = argparse.ArgumentParser(prog="hopfrob", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file")
        if name == "antipode":
            p.add_argument("--side", choices=("left", "right", "both"), default="both")
        if name == "sigma":
            p.add_argument("--left", action="store_true")
        if name == "dual":
            p.add_argument("-o", "--output")
    g = sub.add_parser("gen", parents=[common], help="write a zoo member")
    g.add_argument("name", help=", ".join(GEN_NAMES))
    g.add_argument("--field", default="Q", help="Q or Fp:<prime>")
    g.add_argument("-o", "--output")
    return parser


def _emit(code: int, lines, obj, as_json: bool, out) -> int:
    if as_json and obj is not None:
        obj = {"exit": code, **obj}
        out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")
    return code


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "gen":
            return _emit(*cmd_gen(args), args.json, out)
        # validate always reads unchecked: failing axioms is its verdict, not an input error
        check = not (args.unchecked or args.command == "validate")
        B = parse_bialgebra(args.file, check=check)
        fn = COMMANDS[args.command][0]
        try:
            result = fn(B, args)
        except TheoremViolation as exc:
            axioms = check_bialgebra_axioms(B)
            if axioms.passed:
                raise  # a genuine inconsistency, never an input problem
            err.write(f"hopfrob: input is not a bialgebra ({exc.args[0].splitlines()[0]})\n")
            err.write(axioms.render() + "\n")
            return EXIT_INPUT
        return _emit(*result, args.json, out)
    except UsageError as exc:
        err.write(f"hopfrob: {exc}\n")
        return EXIT_INPUT
    except AxiomError as exc:
        err.write(f"hopfrob: {exc}\n")
        return EXIT_INPUT
    except (BialgebraFileError, ZooValidationError, StructuralError) as exc:
        err.write(f"hopfrob: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
