"""Command-line front end: ``dihedral-kinematics <subcommand> <n> [args] [--flags]``.

Exit codes: 0 all verdicts pass, 1 a numeric check failed, 2 usage error.
Reports go to stdout (JSON by default, keys sorted, complex numbers as
``{"re": .., "im": ..}``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from . import coherent, kinematics, linalg, verify
from .dihedral import cayley_table, enumerate_group, parse_element
from .kinematics import Rep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- serialisation ---------------------------------------------------------------


def encode_complex(z: complex) -> dict[str, float]:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def decode_complex(d: dict[str, float]) -> complex:
    return complex(d["re"], d["im"])


def encode_array(A: np.ndarray) -> list:
    A = np.asarray(A)
    if A.ndim == 1:
        return [encode_complex(z) for z in A]
    return [encode_array(row) for row in A]


def decode_array(data: list) -> np.ndarray:
    if data and isinstance(data[0], list):
        return np.array([[decode_complex(z) for z in row] for row in data], dtype=complex)
    return np.array([decode_complex(z) for z in data], dtype=complex)


def _fmt(x: float) -> str:
    return format(x, ".17g")


def dump_csv(A: np.ndarray) -> str:
    """One row per matrix row (a vector is a single column); each cell is
    ``re+imj`` with 17 significant digits, parseable by ``complex()``."""
    A = np.asarray(A, dtype=complex)
    if A.ndim == 1:
        A = A[:, None]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in A:
        w.writerow([f"{_fmt(z.real)}{format(z.imag, '+.17g')}j" for z in row])
    return buf.getvalue()


def parse_csv(text: str) -> np.ndarray:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    return np.array([[complex(c) for c in r] for r in rows], dtype=complex)


@dataclass
class ReportDocument:
    command: str
    parameters: dict[str, Any]
    verdicts: list[verify.Verdict] = field(default_factory=list)
    payload: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_dict(self) -> dict[str, Any]:
        d = {
            "command": self.command,
            "parameters": self.parameters,
            "verdicts": [v.as_dict() for v in self.verdicts],
            "all_pass": self.passed,
        }
        if self.payload is not None:
            d["payload"] = self.payload
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, allow_nan=False)


# -- argument helpers ---------------------------------------------------------------


def _order(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"n must be an integer, got {text!r}") from None
    return n


def _check_n(n: int) -> None:
    if n < 2:
        raise UsageError("n must be >= 2")


def _element(text: str, n: int):
    try:
        return parse_element(text, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _index(name: str, value: int, n: int) -> None:
    if not 0 <= value < n:
        raise UsageError(f"{name}={value} out of range [0, {n})")


def _rep(text: str) -> Rep:
    try:
        return Rep.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- subcommands ------------------------------------------------------------------


def cmd_group(args) -> ReportDocument:
    n = args.n
    _check_n(n)
    suite = verify.Suite(args.tol)
    verify.group_checks(suite, n)
    G = enumerate_group(n)
    table = cayley_table(n)
    commutative = all(table[i][j] == table[j][i] for i in range(len(G)) for j in range(len(G)))
    payload: dict[str, Any] = {"elements": [str(g) for g in G], "commutative": commutative}
    if args.table:
        payload["table"] = [[str(x) for x in row] for row in table]
    return ReportDocument("group", {"n": n, "tol": args.tol}, suite.verdicts, payload)


def cmd_rep(args) -> ReportDocument:
    n = args.n
    _check_n(n)
    rep = _rep(args.rep)
    g = _element(args.element, n)
    V = kinematics.rep_closed_form(rep, g)
    suite = verify.Suite(args.tol)
    suite.add("unitarity", linalg.unitarity_defect(V), verify.EXACT_TOL)
    if args.oracle:
        oracle = kinematics.induce_rep(rep.irrep, g)
        suite.add("oracle_agreement", linalg.max_norm_diff(oracle, V), 0.0, "coset-condition construction")
    payload = {"matrix": encode_array(V)}
    return ReportDocument(
        "rep", {"n": n, "rep": rep.value, "element": str(g), "oracle": args.oracle, "tol": args.tol},
        suite.verdicts, payload,
    )


def cmd_verify(args) -> ReportDocument:
    n = args.n
    _check_n(n)
    reps = [Rep.V1, Rep.V2] if args.rep == "both" else [_rep(args.rep)]
    t0 = time.perf_counter()
    suite = verify.run(n, reps, args.tol)
    elapsed = time.perf_counter() - t0
    print(f"verify n={n}: {len(suite.verdicts)} checks in {elapsed:.2f}s", file=sys.stderr)
    return ReportDocument(
        "verify", {"n": n, "rep": args.rep, "tol": args.tol}, suite.verdicts, {"elapsed_seconds": round(elapsed, 3)}
    )


def cmd_coherent(args) -> ReportDocument:
    n, k, a = args.n, args.k, args.a
    _check_n(n)
    _index("k", k, n)
    _index("a", a, n)
    rep = _rep(args.rep)
    g = _element(args.element, n)
    label = coherent.WeylLabel(a, g, rep)
    state = coherent.coherent_state(label, k)
    direct = coherent.coherent_state_direct(label, k)
    suite = verify.Suite(args.tol)
    suite.add("formula_vs_product", linalg.max_norm_diff(state.components, direct.components), verify.EXACT_TOL)
    suite.add("unit_norm", abs(np.linalg.norm(state.components) - 1), verify.EXACT_TOL)
    payload: dict[str, Any] = {"state": encode_array(state.components)}

    if args.probabilities:
        probs = coherent.position_probabilities(state)
        closed = np.array([coherent.position_probability_closed_form(j, g) for j in range(n)])
        suite.add("probability_closed_form", float(np.max(np.abs(probs - closed))), verify.EXP_TOL)
        suite.add("probability_sum", abs(float(probs.sum()) - 1), verify.EXACT_TOL)
        payload["probabilities"] = [float(p) for p in probs]

    if args.overlaps_with:
        n2, k2, a2, el2 = args.overlaps_with
        try:
            n2, k2, a2 = int(n2), int(k2), int(a2)
        except ValueError:
            raise UsageError(f"--overlaps-with expects N K A ELEMENT, got {args.overlaps_with}") from None
        if (n2, k2) != (n, k):
            raise UsageError(f"--overlaps-with must use the same n and k (got n={n2}, k={k2})")
        _index("a", a2, n)
        other = coherent.coherent_state(coherent.WeylLabel(a2, _element(el2, n), rep), k)
        val = coherent.overlap(state, other)
        closed = coherent.overlap_closed_form(state, other)
        swapped = coherent.overlap(other, state)
        suite.add("overlap_closed_form", abs(val - closed), verify.EXACT_TOL)
        suite.add("overlap_hermitian_symmetry", abs(val - np.conj(swapped)), verify.EXACT_TOL)
        payload["overlap"] = encode_complex(val)
        payload["overlap_with"] = str(other.label)

    params = {"n": n, "k": k, "a": a, "element": str(g), "rep": rep.value, "tol": args.tol}
    return ReportDocument("coherent", params, suite.verdicts, payload)


# -- entry point ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dihedral-kinematics", description="Quantum kinematics on Z_n with D_n symmetry.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("n", type=_order)
        sp.add_argument("--tol", type=float, default=None, help="override every check tolerance")

    sp = sub.add_parser("group", help="Cayley table and group axioms of D_n")
    common(sp)
    sp.add_argument("--table", action="store_true")
    sp.set_defaults(func=cmd_group)

    sp = sub.add_parser("rep", help="matrix of V1/V2 at one group element")
    common(sp)
    sp.add_argument("rep")
    sp.add_argument("element", help='e.g. "R3" or "M0"')
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--oracle", action="store_true", help="compare with the coset-condition construction")
    sp.set_defaults(func=cmd_rep)

    sp = sub.add_parser("verify", help="run the full invariant suite")
    common(sp)
    sp.add_argument("--rep", choices=("V1", "V2", "both"), default="both")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("coherent", help="coherent state |a,g>^(k)")
    common(sp)
    sp.add_argument("k", type=int)
    sp.add_argument("a", type=int)
    sp.add_argument("element")
    sp.add_argument("--rep", default="V1")
    sp.add_argument("--probabilities", action="store_true")
    sp.add_argument("--overlaps-with", nargs=4, metavar=("N", "K", "A", "ELEMENT"))
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_coherent)
    return p


def _emit(doc: ReportDocument, fmt: str, out) -> None:
    if fmt == "csv" and doc.payload is not None:
        key = "matrix" if "matrix" in doc.payload else "state"
        out.write(dump_csv(decode_array(doc.payload[key])))
        for v in doc.verdicts:
            print(f"{v.name}: {'pass' if v.passed else 'FAIL'} (deviation {v.deviation:.3g}, tol {v.tol:g})",
                  file=sys.stderr)
        return
    out.write(doc.to_json() + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(doc, getattr(args, "format", "json"), sys.stdout)
    return EXIT_OK if doc.passed else EXIT_FAIL


def run() -> None:
    sys.exit(main())
