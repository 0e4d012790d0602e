"""JSON encoding of fields, presentations, modules, entwinings and witnesses.

Scalars are written as strings in the field's canonical format, so the
encoding of a structure is deterministic and its SHA-256 can serve as a
content hash.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .entwine import (
    DoiKoppinenDatum, EntwinedModule, EntwiningStructure, entwining_from_doi_koppinen,
    entwining_lc, entwining_relative_hopf, entwining_yetter_drinfeld, flip_entwining,
)
from .errors import ContextMismatch, ParseError
from .exactfield import Field, field_construct, spec_from_json, spec_to_json
from .linalg import Matrix
from .strucalg import Algebra, Coalgebra, Comodule, HopfAlgebra, Module
from .witness import Witness

__all__ = [
    "dump", "load_field", "load_matrix", "load_structure", "load_entwining",
    "load_entwined_module", "content_hash", "witness_to_json", "witness_from_json",
]


def _fmt(F: Field, x) -> str:
    return F.format(x)


def _rows(m: Matrix) -> list:
    return [[_fmt(m.field, x) for x in r] for r in m.entries]


def _vec(F: Field, v) -> list:
    return [_fmt(F, x) for x in v]


def dump(obj) -> Any:
    """JSON-ready encoding of any supported object."""
    if obj is None or isinstance(obj, (str, int, bool)):
        return obj
    if isinstance(obj, Matrix):
        return obj.to_json()
    if isinstance(obj, (tuple, list)):
        return [dump(x) for x in obj]
    if isinstance(obj, Algebra):
        F = obj.field
        return {"field": spec_to_json(F.spec), "dim": obj.dim,
                "mult": [[_vec(F, v) for v in r] for r in obj.table()],
                "unit": _vec(F, obj.unit.col_vec(0))}
    if isinstance(obj, Coalgebra):
        F = obj.field
        return {"field": spec_to_json(F.spec), "dim": obj.dim,
                "comult": [[_vec(F, v) for v in r] for r in obj.table()],
                "counit": _vec(F, obj.counit.row_vec(0))}
    if isinstance(obj, HopfAlgebra):
        out = dump(obj.algebra)
        out.update({k: v for k, v in dump(obj.coalgebra).items() if k in ("comult", "counit")})
        if obj.antipode is not None:
            out["antipode"] = _rows(obj.antipode)
        if obj.notes:
            out["notes"] = list(obj.notes)
        return out
    if isinstance(obj, Module):
        return {"algebra": dump(obj.algebra), "action": [_rows(R) for R in obj.action]}
    if isinstance(obj, Comodule):
        return {"coalgebra": dump(obj.coalgebra), "rho": _rows(obj.rho)}
    if isinstance(obj, EntwiningStructure):
        return {"A": dump(obj.algebra), "C": dump(obj.coalgebra), "psi": _rows(obj.psi)}
    if isinstance(obj, DoiKoppinenDatum):
        return {"H": dump(obj.H), "A": dump(obj.algebra), "C": dump(obj.coalgebra),
                "coactionA": _rows(obj.coaction), "actionC": _rows(obj.kappa)}
    if isinstance(obj, EntwinedModule):
        return {"action": [_rows(R) for R in obj.action], "rho": _rows(obj.rho)}
    raise ParseError(f"cannot encode {type(obj).__name__}")


def canonical(obj) -> str:
    return json.dumps(dump(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def content_hash(obj) -> str:
    return hashlib.sha256(canonical(obj).encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# loading

def load_field(obj) -> Field:
    if isinstance(obj, Field):
        return obj
    if not isinstance(obj, dict):
        raise ParseError("field must be a JSON object")
    return field_construct(spec_from_json(obj))


def _scalar(F: Field, x):
    if isinstance(x, bool) or x is None:
        raise ParseError(f"bad scalar {x!r}")
    return F.parse(x) if isinstance(x, str) else F(x)


def load_matrix(F: Field, obj) -> Matrix:
    """Accepts ``{"rows", "cols", "entries"}`` or a nested list of rows."""
    if isinstance(obj, dict):
        return Matrix.from_json(F, obj)
    if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
        raise ParseError("matrix must be a list of rows")
    return Matrix.from_rows(F, [[_scalar(F, x) for x in r] for r in obj])


def _vector(F: Field, obj, name: str) -> list:
    if not isinstance(obj, list):
        raise ParseError(f"{name} must be a list")
    return [_scalar(F, x) for x in obj]


def _table(F: Field, obj, n: int, name: str) -> list:
    ok = (isinstance(obj, list) and len(obj) == n
          and all(isinstance(r, list) and len(r) == n for r in obj)
          and all(isinstance(v, list) and len(v) == n for r in obj for v in r))
    if not ok:
        raise ParseError(f"{name} must be an {n}x{n}x{n} table")
    return [[[_scalar(F, x) for x in v] for v in r] for r in obj]


def _field_of(obj: dict, F: Field | None) -> Field:
    if "field" in obj:
        return load_field(obj["field"])
    if F is None:
        raise ParseError("structure has no field")
    return F


def load_structure(obj, F: Field | None = None):
    """Algebra, Coalgebra or HopfAlgebra from presentation JSON."""
    if not isinstance(obj, dict):
        raise ParseError("presentation must be a JSON object")
    F = _field_of(obj, F)
    try:
        n = int(obj["dim"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("presentation needs an integer 'dim'") from exc
    alg = coalg = None
    if "mult" in obj:
        alg = Algebra.from_table(F, _table(F, obj["mult"], n, "mult"),
                                 _vector(F, obj.get("unit"), "unit"))
    if "comult" in obj:
        coalg = Coalgebra.from_table(F, _table(F, obj["comult"], n, "comult"),
                                     _vector(F, obj.get("counit"), "counit"))
    if alg is not None and coalg is not None:
        S = load_matrix(F, obj["antipode"]) if "antipode" in obj else None
        return HopfAlgebra(alg, coalg, S, tuple(obj.get("notes", ())))
    if alg is not None:
        return alg
    if coalg is not None:
        return coalg
    raise ParseError("presentation has neither 'mult' nor 'comult'")


def _hopf(obj, F=None) -> HopfAlgebra:
    H = load_structure(obj, F)
    if not isinstance(H, HopfAlgebra):
        raise ParseError("expected a Hopf presentation")
    return H


def _part(obj, cls, F=None):
    s = load_structure(obj, F)
    if isinstance(s, HopfAlgebra):
        s = s.algebra if cls is Algebra else s.coalgebra
    if not isinstance(s, cls):
        raise ParseError(f"expected {cls.__name__.lower()} presentation")
    return s


def load_module(obj, F: Field | None = None) -> Module:
    A = _part(obj["algebra"], Algebra, F)
    return Module(A, tuple(load_matrix(A.field, R) for R in obj["action"]))


def load_comodule(obj, F: Field | None = None) -> Comodule:
    C = _part(obj["coalgebra"], Coalgebra, F)
    return Comodule(C, load_matrix(C.field, obj["rho"]))


def load_entwining(obj) -> EntwiningStructure:
    """Explicit ``{"A", "C", "psi"}``, a datum ``{"H", "A", "C", "coactionA", "actionC"}``,
    or ``{"construction": relative-hopf | lc | yetter-drinfeld | flip, ...}``."""
    if not isinstance(obj, dict):
        raise ParseError("entwining must be a JSON object")
    if "psi" in obj:
        A = _part(obj["A"], Algebra)
        C = _part(obj["C"], Coalgebra, A.field)
        return EntwiningStructure(A, C, load_matrix(A.field, obj["psi"]))
    if "coactionA" in obj:
        H = _hopf(obj["H"])
        F = H.field
        A = _part(obj["A"], Algebra, F)
        C = _part(obj["C"], Coalgebra, F)
        d = DoiKoppinenDatum(H, A, load_matrix(F, obj["coactionA"]), C,
                             load_matrix(F, obj["actionC"]))
        return entwining_from_doi_koppinen(d, "Doi-Koppinen")
    kind = obj.get("construction")
    if kind == "yetter-drinfeld":
        return entwining_yetter_drinfeld(_hopf(obj["L"]))
    if kind == "relative-hopf":
        L = _hopf(obj["L"])
        if "A" in obj:
            return entwining_relative_hopf(L, _part(obj["A"], Algebra, L.field),
                                           load_matrix(L.field, obj["coaction"]))
        return entwining_relative_hopf(L)
    if kind == "lc":
        L = _hopf(obj["L"])
        if "C" in obj:
            return entwining_lc(L, _part(obj["C"], Coalgebra, L.field),
                                load_matrix(L.field, obj["kappa"]))
        return entwining_lc(L)
    if kind == "flip":
        A = _part(obj["A"], Algebra) if "A" in obj else None
        C = _part(obj["C"], Coalgebra) if "C" in obj else None
        return flip_entwining(A, C)
    raise ParseError("unrecognised entwining description")


def load_entwined_module(obj, e: EntwiningStructure) -> EntwinedModule:
    F = e.field
    return EntwinedModule(Module(e.algebra, tuple(load_matrix(F, R) for R in obj["action"])),
                          Comodule(e.coalgebra, load_matrix(F, obj["rho"])))


# ---------------------------------------------------------------------------
# witnesses

def witness_to_json(w: Witness) -> dict:
    """The data plus content hashes of every context structure."""
    ctx = {k: content_hash(v) for k, v in sorted(w.context.items())
           if not isinstance(v, str)}
    ctx.update({k: v for k, v in w.context.items() if isinstance(v, str)})
    return {"tag": w.tag, "data": dump(w.data), "context": ctx, "verified": True}


def witness_from_json(obj: dict, context: dict) -> Witness:
    """Rebuild a witness against freshly loaded ``context``; hashes must agree."""
    if not isinstance(obj, dict) or "tag" not in obj or "data" not in obj:
        raise ParseError("witness JSON needs 'tag' and 'data'")
    expected = witness_to_json(Witness(obj["tag"], None, context))["context"]
    stored = obj.get("context", {})
    if stored != expected:
        bad = sorted(k for k in set(stored) | set(expected) if stored.get(k) != expected.get(k))
        raise ContextMismatch(f"witness context does not match the input: {bad}")
    F = next(v.field for v in context.values() if hasattr(v, "field"))
    data = obj["data"]
    if isinstance(data, list):
        data = tuple(load_matrix(F, d) for d in data)
    else:
        data = load_matrix(F, data)
    return Witness(obj["tag"], data, dict(context))
