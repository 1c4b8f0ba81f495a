"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid input (including a
certificate that fails verification), 3 search budget exhausted or method
inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import concordance, report
from .concordance import Conclusion
from .cyclotomic import RootOfUnity
from .errors import AlgsliceError, Inconclusive, InputError, NotFound
from .exactmat import IntMatrix, det
from .matrixio import format_matrix, parse_matrix
from .qform import QuadForm, SearchBudget, find_primitive_isotropic, symplectic_completion
from .report import Report
from .seifert import (SeifertForm, alexander_polynomial, arf_invariant, genus, intersection_form,
                      knot_signature, tristram_levine)
from .torus import torus_seifert_matrix

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(args.max_norm, args.time_budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _read_matrix(path: str):
    return parse_matrix(_read(path))


def _read_json(path: str) -> dict:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not a JSON document ({exc.msg}, line {exc.lineno})") from None


def _seifert(path: str) -> SeifertForm:
    V = SeifertForm(_read_matrix(path), Path(path).stem)
    intersection_form(V)  # rejects matrices that are not Seifert matrices of a knot
    return V


def _render(args, tree: dict) -> str:
    rep = Report(tree)
    return rep.to_json() if args.json else rep.to_text()


# -- subcommands --------------------------------------------------------------------

def cmd_torus(args):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        V = torus_seifert_matrix(args.p, args.q)
    if args.json:
        return _render(args, {"kind": "torus", "p": min(args.p, args.q), "q": max(args.p, args.q),
                              "genus": genus(V), "V": V.matrix.to_lists()})
    return format_matrix(V.matrix)


def _invariants(V: SeifertForm, omegas) -> dict:
    delta = alexander_polynomial(V)
    tl = {}
    for w in omegas:
        tl[str(RootOfUnity.parse(w))] = tristram_levine(V, w)
    J = V.matrix - V.matrix.T
    return {
        "kind": "invariants",
        "label": V.label,
        "dimension": V.dim,
        "genus": genus(V),
        "det_intersection": det(J),
        "alexander": str(delta),
        "alexander_coefficients": [[e, c] for e, c in delta.terms],
        "signature": knot_signature(V),
        "arf": arf_invariant(V),
        "tristram_levine": tl,
    }


def cmd_invariants(args):
    V = _seifert(args.matrix)
    return _render(args, _invariants(V, args.omega or ["-1", "i"]))


def cmd_signature(args):
    V = _seifert(args.matrix)
    if args.omega is None:
        value, omega = knot_signature(V), "-1"
    else:
        value, omega = tristram_levine(V, args.omega), str(RootOfUnity.parse(args.omega))
    return _render(args, {"kind": "signature", "omega": omega, "signature": value})


def _as_quadform(M) -> QuadForm:
    # symmetric input is the form itself; anything else is a Seifert matrix
    return QuadForm(M if M.is_symmetric() else M + M.T)


def cmd_isotropic(args):
    Q = _as_quadform(_read_matrix(args.matrix))
    try:
        cert = find_primitive_isotropic(Q, _budget(args))
    except NotFound as exc:
        if exc.definite:
            raise NotFound("not found: form is definite", exc.radius, True) from None
        raise NotFound(f"not found: {exc}", exc.radius) from None
    if args.json:
        return _render(args, {"kind": "isotropic", "Q": Q.matrix.to_lists(), "z": list(cert.z),
                              "q_value": cert.q_value, "gcd": cert.gcd,
                              "search_radius_used": cert.search_radius_used,
                              "method": cert.method})
    return format_matrix(IntMatrix.row_vector(cert.z), (
        f"primitive isotropic vector: q(z) = {cert.q_value}, gcd = {cert.gcd}",
        f"sup-norm radius {cert.search_radius_used} ({cert.method})"))


def cmd_complete(args):
    M = _read_matrix(args.form)
    J = M if M.is_skew() else intersection_form(SeifertForm(M))
    zm = _read_matrix(args.vector)
    if zm.rows != 1:
        raise InputError("vector file must hold a 1 x n matrix")
    P = symplectic_completion(J, zm.row(0))
    if args.json:
        return _render(args, {"kind": "symplectic-completion", "J": J.to_lists(),
                              "z": list(zm.row(0)), "P": P.matrix.to_lists()})
    return format_matrix(P.matrix, ("symplectic basis change P: first row z, P J P^T = J_std",))


def cmd_derive(args):
    V = _seifert(args.matrix)
    cert = concordance.derive_reduced_form(V, _budget(args))
    return _render(args, report.derived_to_json(cert))


def cmd_certify_slice(args):
    text = _read(args.input)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        V = SeifertForm(parse_matrix(text), Path(args.input).stem)
        cert = concordance.derive_reduced_form(V, _budget(args))
    else:
        if not isinstance(doc, dict) or doc.get("kind") != "derived-form":
            raise InputError("certify-slice needs a derived-form certificate or a matrix file")
        cert = report.derived_from_json(doc)
    return _render(args, report.slice_to_json(concordance.build_slice_certificate(cert)))


def cmd_verify_metabolizer(args):
    if args.metabolizer is None:
        cert = report.slice_from_json(_read_json(args.form))
        W, M = cert.sum_form, cert.metabolizer
    else:
        W, M = SeifertForm(_read_matrix(args.form)), _read_matrix(args.metabolizer)
    ok = concordance.verify_metabolizer(W, M)
    out = _render(args, {"kind": "verification", "certificate": "metabolizer", "valid": ok})
    return out if ok else (out, EXIT_INPUT, "metabolizer check failed")


def cmd_verify_certificate(args):
    doc = _read_json(args.certificate)
    failed = report.verify_certificate(doc)
    out = _render(args, {"kind": "verification", "certificate": doc.get("kind"),
                         "valid": not failed, "failed_checks": failed})
    return (out, EXIT_INPUT, "certificate check failed") if failed else out


def cmd_paper_chain(args):
    r = concordance.tau_chain_report(args.p, args.q, _budget(args))
    if args.json:
        out = _render(args, report.tau_chain_to_json(r))
    else:
        tree = report.tau_chain_to_json(r)
        # the text view keeps the headline numbers and summarizes the witnesses
        for key in ("derived", "slice"):
            tree.pop(key)
        if r.derived is not None:
            tree["isotropic_z"] = list(r.derived.iso.z)
            tree["V_star_corner"] = r.derived.corner
            tree["slice_certificate_valid"] = r.slice.verify()
        out = _render(args, tree)
    if r.conclusion is not Conclusion.SUMMAND_ESTABLISHED:
        return out, EXIT_INCONCLUSIVE, f"inconclusive: {r.reason}"
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write the output to this file instead of stdout")
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")
    common.add_argument("--max-norm", type=int, default=SearchBudget.max_sup_norm,
                        help="largest sup-norm radius for the isotropic search (default 8)")
    common.add_argument("--time-budget", type=float, default=SearchBudget.max_seconds,
                        help="seconds allowed for the isotropic search (default 120)")

    parser = _Parser(prog="algslice", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("torus", cmd_torus, "Seifert matrix of the torus knot T(p,q)")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)

    sp = add("invariants", cmd_invariants, "algebraic concordance invariants of a Seifert matrix")
    sp.add_argument("matrix")
    sp.add_argument("--omega", action="append",
                    help="Tristram-Levine point: -1, i, -i or a/b for exp(2 pi i a/b); repeatable")

    sp = add("signature", cmd_signature, "knot or Tristram-Levine signature")
    sp.add_argument("matrix")
    sp.add_argument("--omega")

    sp = add("isotropic", cmd_isotropic, "primitive isotropic vector of a form")
    sp.add_argument("matrix", help="symmetric form, or a Seifert matrix V (uses V + V^T)")

    sp = add("complete", cmd_complete, "complete a primitive vector to a symplectic basis")
    sp.add_argument("form", help="skew form J, or a Seifert matrix V (uses V - V^T)")
    sp.add_argument("vector", help="1 x n matrix file holding z")

    sp = add("derive", cmd_derive, "derive V* with vanishing corner")
    sp.add_argument("matrix")

    sp = add("certify-slice", cmd_certify_slice, "metabolizer for V + (-V*)")
    sp.add_argument("input", help="derived-form certificate (JSON) or Seifert matrix file")

    sp = add("verify-metabolizer", cmd_verify_metabolizer, "check a metabolizer")
    sp.add_argument("form", help="slice certificate (JSON), or form matrix file W")
    sp.add_argument("metabolizer", nargs="?", help="metabolizer matrix file M")

    sp = add("verify-certificate", cmd_verify_certificate,
             "re-verify a derived-form, slice or tau-chain certificate")
    sp.add_argument("certificate")

    sp = add("paper-chain", cmd_paper_chain, "full tau inequality chain for T(p,q)")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"algslice: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        result = args.func(args)
        code, note = EXIT_OK, None
        if isinstance(result, tuple):
            result, code, *rest = result
            note = rest[0] if rest else None
    except UsageError as exc:
        print(f"algslice: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except Inconclusive as exc:
        print(f"algslice: {exc}", file=stderr)
        return EXIT_INCONCLUSIVE
    except (AlgsliceError, ValueError) as exc:
        print(f"algslice: invalid input: {exc}", file=stderr)
        return EXIT_INPUT
    if args.out:
        Path(args.out).write_text(result)
    else:
        stdout.write(result)
    if note:
        print(f"algslice: {note}", file=stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
