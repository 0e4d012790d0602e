"""Command-line front end.

    hopfwit check hopf --input h4.json
    hopfwit solve integral --input kc2.json --out t.json
    hopfwit verify integral --input kc2.json --witness t.json
    hopfwit transport --direction integral->idempotent --input kc2.json --witness t.json
    hopfwit deform --theta w.json --input e.json --map g.json
    hopfwit deform --fieldext d.json --map f.json
    hopfwit catalog --filter kC2 --json

Exit status: 0 pass or witness found, 1 no witness or a failed check,
2 malformed input, 3 a solved witness failed re-verification (a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import serialize as ser
from .catalog import catalog_run
from .deform import (
    PrimitiveExtensionData, deform_to_colinear, field_ext_deform, kspace, maschke_split,
)
from .entwine import check_entwined_module, check_entwining
from .errors import HopfwitError, ParseError, VerificationFailure
from .exactfield import SimpleExtension
from .linalg import Matrix
from .strucalg import Algebra, Coalgebra, HopfAlgebra, check_structure
from .witness import (
    DIRECTIONS, Witness, solve_augmented_cointegral, solve_cocasimir,
    solve_dual_normalized_integral, solve_normalized_integral, solve_quantum_integral,
    solve_relative_casimir, solve_theta, solve_total_integral, verify_witness, witness_transport,
)

LEVELS = ("algebra", "coalgebra", "bialgebra", "hopf", "module", "comodule", "entwining",
          "entwined-module")


class Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"hopfwit: usage error: {message}", file=sys.stderr)
        raise SystemExit(2)


# ---------------------------------------------------------------------------
# witness kinds: how to read the input and which solver to run

def _hopf(obj) -> dict:
    H = ser.load_structure(obj)
    if not isinstance(H, HopfAlgebra):
        raise ParseError("expected a Hopf algebra presentation")
    return {"H": H}


def _casimir(obj) -> dict:
    """A presentation, or ``{"S": presentation, "T": [vectors]}``."""
    if isinstance(obj, dict) and "S" in obj:
        S = ser._part(obj["S"], Algebra)
        T = obj.get("T")
        if T is not None:
            T = tuple(Matrix.column(S.field, [ser._scalar(S.field, x) for x in v]) for v in T)
        return {"S": S, "T": T}
    return {"S": ser._part(obj, Algebra), "T": None}


def _entwining(obj) -> dict:
    return {"entwining": ser.load_entwining(obj)}


def _total(obj) -> dict:
    """A Hopf presentation (A = L), or ``{"L", "A", "coaction"}``."""
    if isinstance(obj, dict) and "L" in obj:
        L = _hopf(obj["L"])["H"]
        return {"L": L, "A": ser._part(obj["A"], Algebra, L.field),
                "coaction": ser.load_matrix(L.field, obj["coaction"])}
    L = _hopf(obj)["H"]
    return {"L": L, "A": L.algebra, "coaction": L.comult}


def _cointegral(obj) -> dict:
    """A Hopf presentation (C = L), or ``{"L", "C", "kappa"}``."""
    if isinstance(obj, dict) and "L" in obj:
        L = _hopf(obj["L"])["H"]
        return {"L": L, "C": ser._part(obj["C"], Coalgebra, L.field),
                "kappa": ser.load_matrix(L.field, obj["kappa"])}
    L = _hopf(obj)["H"]
    return {"L": L, "C": L.coalgebra, "kappa": L.mult}


KINDS: dict[str, tuple[str, Callable[[object], dict], Callable[[dict], Witness | None]]] = {
    "integral": ("NormalizedIntegral", _hopf, lambda c: solve_normalized_integral(c["H"])),
    "dual-integral": ("DualIntegral", _hopf, lambda c: solve_dual_normalized_integral(c["H"])),
    "casimir": ("RelativeCasimir", _casimir, lambda c: solve_relative_casimir(c["S"], c["T"])),
    "theta": ("Theta", _entwining, lambda c: solve_theta(c["entwining"])),
    "cocasimir": ("Cocasimir", _entwining, lambda c: solve_cocasimir(c["entwining"])),
    "total-integral": ("TotalIntegral", _total,
                       lambda c: solve_total_integral(c["L"], c["A"], c["coaction"])),
    "cointegral": ("AugmentedCointegral", _cointegral,
                   lambda c: solve_augmented_cointegral(c["L"], c["C"], c["kappa"])),
    "quantum-integral": ("QuantumIntegral", lambda o: {"L": _hopf(o)["H"]},
                         lambda c: solve_quantum_integral(c["L"])),
}
_KIND_OF_TAG = {tag: kind for kind, (tag, _, _) in KINDS.items()}


# ---------------------------------------------------------------------------
# I/O

def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise Usage(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _emit(obj, out: str | None = None):
    text = json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise Usage(f"{args.verb} needs --{n.replace('_', '-')}")


def _report_status(rep, as_json: bool) -> int:
    print(json.dumps(rep.to_json(), indent=2) if as_json else rep)
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------
# verbs

def cmd_check(args) -> int:
    _need(args, "input")
    obj = _read_json(args.input)
    level = args.target
    if level in ("module", "comodule"):
        M = (ser.load_module if level == "module" else ser.load_comodule)(obj)
        return _report_status(check_structure(M, level), args.json)
    if level == "entwining":
        return _report_status(check_entwining(ser.load_entwining(obj)), args.json)
    if level == "entwined-module":
        if not isinstance(obj, dict) or "entwining" not in obj or "module" not in obj:
            raise ParseError("entwined-module input needs 'entwining' and 'module'")
        e = ser.load_entwining(obj["entwining"])
        M = ser.load_entwined_module(obj["module"], e)
        return _report_status(check_entwined_module(e, M), args.json)
    return _report_status(check_structure(ser.load_structure(obj), level), args.json)


def _context(kind: str, path: str) -> dict:
    return KINDS[kind][1](_read_json(path))


def cmd_solve(args) -> int:
    _need(args, "input")
    kind = args.target
    w = KINDS[kind][2](_context(kind, args.input))
    if w is None:
        print(f"NoWitness: no {kind} exists for {args.input}")
        return 1
    if not verify_witness(w).passed:  # solvers verify already; this is the file-level guard
        raise VerificationFailure(f"{kind} witness failed re-verification")
    _emit(ser.witness_to_json(w), args.out)
    return 0


def _load_witness(kind: str, args) -> Witness:
    obj = _read_json(args.witness)
    tag = KINDS[kind][0]
    if not isinstance(obj, dict) or obj.get("tag") != tag:
        raise ParseError(f"witness file is not a {tag} witness")
    return ser.witness_from_json(obj, _context(kind, args.input))


def cmd_verify(args) -> int:
    _need(args, "input", "witness")
    w = _load_witness(args.target, args)
    return _report_status(verify_witness(w), args.json)


def cmd_transport(args) -> int:
    _need(args, "direction", "input", "witness")
    if args.direction not in DIRECTIONS:
        raise Usage(f"unknown direction {args.direction!r}; expected one of {sorted(DIRECTIONS)}")
    w = _load_witness(_KIND_OF_TAG[DIRECTIONS[args.direction]], args)
    out = witness_transport(w, args.direction)
    if not verify_witness(out).passed:
        raise VerificationFailure("transported witness failed re-verification")
    _emit(ser.witness_to_json(out), args.out)
    return 0


def cmd_deform(args) -> int:
    _need(args, "map")
    spec = _read_json(args.map)
    if not isinstance(spec, dict):
        raise ParseError("map file must be a JSON object")
    if args.fieldext:
        K = ser.load_field(_read_json(args.fieldext))
        if not isinstance(K, SimpleExtension):
            raise ParseError("--fieldext must describe a simple extension field")
        d = PrimitiveExtensionData(K)
        F = K.base
        aM = (ser.load_matrix(F, spec["alphaM"]) if "alphaM" in spec
              else kspace(K, int(spec.get("dimM", 1))))
        aN = (ser.load_matrix(F, spec["alphaN"]) if "alphaN" in spec
              else kspace(K, int(spec.get("dimN", 1))))
        _emit(field_ext_deform(d, ser.load_matrix(F, spec["f"]), aM, aN).to_json(), args.out)
        return 0
    if not args.theta:
        raise Usage("deform needs --theta or --fieldext")
    _need(args, "input")
    ctx = _context("theta", args.input)
    e = ctx["entwining"]
    theta = ser.witness_from_json(_read_json(args.theta), ctx)
    F = e.field
    M = ser.load_entwined_module(spec["M"], e)
    N = ser.load_entwined_module(spec["N"], e)
    if "p" in spec:
        r = maschke_split(e, theta, ser.load_matrix(F, spec["i"]), ser.load_matrix(F, spec["p"]),
                          M, N)
    else:
        r = deform_to_colinear(e, theta, ser.load_matrix(F, spec["g"]), M, N)
    _emit(r.to_json(), args.out)
    return 0


def cmd_catalog(args) -> int:
    rep = catalog_run(args.filter)
    if args.json:
        _emit(rep.rows, args.out)
    else:
        print(rep)
    return 0 if rep.passed else 1


COMMANDS = {"check": cmd_check, "solve": cmd_solve, "verify": cmd_verify,
            "transport": cmd_transport, "deform": cmd_deform, "catalog": cmd_catalog}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hopfwit", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("--input")
        sp.add_argument("--out")
        sp.add_argument("--json", action="store_true", help="machine-readable report")
        return sp

    common(sub.add_parser("check", help="check axioms")).add_argument("target", choices=LEVELS)
    common(sub.add_parser("solve", help="solve for a witness")).add_argument(
        "target", choices=sorted(KINDS))
    v = common(sub.add_parser("verify", help="re-check a witness file"))
    v.add_argument("target", choices=sorted(KINDS))
    v.add_argument("--witness")
    t = common(sub.add_parser("transport", help="map a witness along a proof construction"))
    t.add_argument("--direction")
    t.add_argument("--witness")
    d = common(sub.add_parser("deform", help="apply a deformation map"))
    d.add_argument("--theta")
    d.add_argument("--fieldext")
    d.add_argument("--map")
    c = common(sub.add_parser("catalog", help="run the built-in consistency catalog"))
    c.add_argument("--filter")
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own one-line diagnostic
        return 0 if exc.code == 0 else 2
    try:
        return COMMANDS[args.verb](args)
    except VerificationFailure as exc:
        print(f"hopfwit: internal error: {exc}", file=sys.stderr)
        return 3
    except (Usage, HopfwitError, KeyError, TypeError, ValueError) as exc:
        msg = f"missing field {exc}" if isinstance(exc, KeyError) else str(exc)
        print(f"hopfwit: {type(exc).__name__}: {msg}".splitlines()[0], file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
