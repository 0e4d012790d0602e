"""Built-in instances and the cross-criterion consistency runner.

Every entry builds its structures, runs the relevant solvers and records one
row per outcome: ``{entry, solver, outcome, expected, pass}``.  Expected
outcomes are ``Exists`` / ``NotExists`` where they are known in advance and
``Unspecified`` otherwise; every returned witness is re-verified, and every
transport output is checked by the target verifier.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from .deform import (
    PrimitiveExtensionData, deform_to_colinear, field_ext_deform, is_k_linear, kspace,
    maschke_split,
)
from .entwine import (
    check_entwining, entwining_lc, entwining_relative_hopf, entwining_yetter_drinfeld,
    flip_entwining, split_monic, trivial_algebra, trivial_coalgebra, unit_splits,
)
from .exactfield import FieldSpec, QQ, GF, field_construct
from .fuzz import (
    make_rng, random_entwined_morphism, random_invertible, random_K_linear, random_matrix,
    random_split_monic, random_summand,
)
from .linalg import Matrix, rank, solve_matrix_equations
from .strucalg import (
    S3_TABLE, check_structure, coaction_retraction, cyclic_group_table, group_algebra,
    simple_extension_algebra, sweedler_h4, trivial_comodule,
)
from .witness import (
    Witness, frobenius_entwining_tools, frobenius_ring_tools, solve_augmented_cointegral,
    solve_bimodule_retraction, solve_cocasimir, solve_dual_normalized_integral,
    solve_fg_z, solve_frobenius_casimir, solve_normalized_integral, solve_quantum_integral,
    solve_relative_casimir, solve_theta, solve_total_integral, verify_total_integral,
    verify_witness, witness_transport,
)

EXISTS, NOT_EXISTS, UNSPECIFIED = "Exists", "NotExists", "Unspecified"


@dataclass
class CatalogEntry:
    name: str
    recipe: str
    run: Callable[["Recorder"], None]


@dataclass
class Recorder:
    entry: str
    rows: list = dc_field(default_factory=list)
    witnesses: int = 0

    def row(self, solver: str, outcome: str, expected: str, passed: bool | None = None):
        if passed is None:
            passed = expected == UNSPECIFIED or outcome == expected
        self.rows.append({"entry": self.entry, "solver": solver, "outcome": outcome,
                          "expected": expected, "pass": bool(passed)})

    def check(self, name: str, ok: bool):
        self.row(name, "pass" if ok else "fail", "pass")

    def solved(self, solver: str, w: Witness | None, expected: str = UNSPECIFIED):
        self.row(solver, EXISTS if w is not None else NOT_EXISTS, expected)
        if w is not None:
            self.witnesses += 1
            self.check(f"{solver}:verify", verify_witness(w).passed)
        return w

    def agree(self, name: str, a, b):
        same = (a is None) == (b is None)
        self.row(f"agreement:{name}", "agree" if same else "disagree", "agree")

    def transport(self, w: Witness | None, direction: str):
        if w is None:
            return None
        out = witness_transport(w, direction)
        self.witnesses += 1
        self.check(f"transport:{direction}", verify_witness(out).passed)
        return out


def _exists(flag: bool) -> str:
    return EXISTS if flag else NOT_EXISTS


# ---------------------------------------------------------------------------
# entries

GROUPS = {"C2": cyclic_group_table(2), "C3": cyclic_group_table(3), "S3": S3_TABLE}
FIELDS = {"QQ": (0, QQ), "GF2": (2, lambda: GF(2)), "GF3": (3, lambda: GF(3)),
          "GF5": (5, lambda: GF(5))}


def _group_entry(gname: str, fname: str) -> CatalogEntry:
    def run(rec: Recorder):
        char, mk = FIELDS[fname]
        H = group_algebra(GROUPS[gname], mk())
        order = H.dim
        semisimple = char == 0 or order % char != 0  # char(k) does not divide |G|
        rec.check("hopf axioms", check_structure(H, "hopf").passed)
        t = rec.solved("integral", solve_normalized_integral(H), _exists(semisimple))
        e = rec.solved("casimir", solve_relative_casimir(H.algebra), _exists(semisimple))
        rec.agree("integral~casimir", t, e)
        rec.transport(t, "integral->idempotent")
        rec.solved("dual-integral", solve_dual_normalized_integral(H))
        rec.solved("casimir T=k", solve_relative_casimir(H.algebra, [H.unit]), EXISTS)
    return CatalogEntry(f"k{gname}/{fname}", f"group_algebra({gname}) over {fname}", run)


def _h4_entry(fname: str) -> CatalogEntry:
    def run(rec: Recorder):
        F = QQ() if fname == "QQ" else GF(3)
        H = sweedler_h4(F)
        rec.check("hopf axioms", check_structure(H, "hopf").passed)
        rec.solved("integral", solve_normalized_integral(H), NOT_EXISTS)
        rec.solved("dual-integral", solve_dual_normalized_integral(H), NOT_EXISTS)
        rec.solved("casimir", solve_relative_casimir(H.algebra), NOT_EXISTS)
        e = entwining_yetter_drinfeld(H)
        rec.check("yetter-drinfeld entwining axioms", check_entwining(e).passed)
        th = rec.solved("theta (yetter-drinfeld)", solve_theta(e))
        q = rec.solved("quantum-integral", solve_quantum_integral(H))
        rec.agree("theta~quantum-integral", th, q)
    return CatalogEntry(f"H4/{fname}", f"sweedler_h4 over {fname}", run)


def _sqrt2_entry() -> CatalogEntry:
    def run(rec: Recorder):
        F = QQ()
        K = field_construct(FieldSpec.extension(FieldSpec.rationals(), ["-2", "0", "1"]))
        S = simple_extension_algebra(K)
        e = rec.solved("casimir", solve_relative_casimir(S), EXISTS)
        mu = Matrix.row(F, [1, 0])
        fr = rec.solved("frobenius-casimir", solve_frobenius_casimir(S, mu), EXISTS)
        if fr is not None:
            f = fr.data[1]
            rec.check("frobenius verify", frobenius_ring_tools("verify", S, mu, f).passed)
            x = rec.solved("central-x (Q=k)",
                           frobenius_ring_tools("solve_x", S, mu, f, Q=[S.unit]), EXISTS)
            rec.check("central-x canonical is 1", x is not None and x.data == S.unit)
            a = rec.solved("alpha (T=S)", frobenius_ring_tools("solve_alpha", S, mu, f))
            rec.agree("alpha~casimir", a, e)
        rec.solved("bimodule-retraction (R=k, Q=S)",
                   solve_bimodule_retraction(S, trivial_algebra(F), S.unit, S, Matrix.identity(F, 2)),
                   NOT_EXISTS)
        d = PrimitiveExtensionData(K)
        A = kspace(K, 1)
        sigma = Matrix.from_rows(F, [[1, 0], [0, -1]])
        rec.check("deform: P(conjugation) = 0", field_ext_deform(d, sigma, A, A).is_zero())
        rng = make_rng("catalog-sqrt2")
        ok_fix = ok_idem = True
        for _ in range(5):
            a, b = rng.randint(1, 3), rng.randint(1, 3)
            Am, An = kspace(K, a), kspace(K, b)
            f = random_K_linear(K, b, a, rng)
            ok_fix &= field_ext_deform(d, f, Am, An) == f
            g = random_matrix(F, 2 * b, 2 * a, rng)
            Pg = field_ext_deform(d, g, Am, An)
            ok_idem &= is_k_linear(Pg, Am, An) and field_ext_deform(d, Pg, Am, An) == Pg
        rec.check("deform: P(F(f)) = f", ok_fix)
        rec.check("deform: P(P(f)) = P(f)", ok_idem)
    return CatalogEntry("Q(sqrt2)/Q", "Q[x]/(x^2-2) over Q", run)


def _insep_entry() -> CatalogEntry:
    def run(rec: Recorder):
        K = field_construct(FieldSpec.ratfunc(2, "s"))
        L = field_construct(FieldSpec.extension(FieldSpec.ratfunc(2, "s"), ["s", "0", "1"]))
        S = simple_extension_algebra(L)
        rec.solved("casimir", solve_relative_casimir(S), NOT_EXISTS)
        rng = make_rng("catalog-insep")
        ok = True
        for _ in range(5):
            ok &= maschke_trial(L, rng) is not None
        rec.check("every test monic of L-spaces splits", ok)
    return CatalogEntry("F2(u)/F2(u^2)", "F2(s)[x]/(x^2-s) over F2(s)", run)


def maschke_trial(L, rng, max_dim: int = 2) -> Matrix | None:
    """Random monic ``i`` of L-spaces and an L-linear retraction found by affine solve."""
    K = L.base
    while True:
        m = rng.randint(1, max_dim)
        n = rng.randint(m, max_dim)
        i = random_K_linear(L, n, m, rng)
        if rank(i) == 2 * m:
            break
    P = random_invertible(K, 2 * n, rng)
    An = P @ kspace(L, n) @ P.inverse()
    Am = kspace(L, m)
    i = P @ i
    eqs = [(lambda r: r @ An - Am @ r, Matrix.zeros(K, 2 * m, 2 * n)),
           (lambda r: r @ i, Matrix.identity(K, 2 * m))]
    r, _ = solve_matrix_equations(K, (2 * m, 2 * n), eqs)
    return r


def _flip_entries() -> list[CatalogEntry]:
    def alg_side(fname):
        def run(rec: Recorder):
            F = QQ() if fname == "QQ" else GF(2)
            H = group_algebra(GROUPS["C2"], F)
            e = flip_entwining(H.algebra)
            rec.check("entwining axioms", check_entwining(e).passed)
            rec.solved("theta", solve_theta(e), EXISTS)
            rec.solved("cocasimir", solve_cocasimir(e), _exists(fname == "QQ"))
        return CatalogEntry(f"flip(k,kC2,k)/{fname}", "trivial datum with C = k", run)

    def coalg_side(rec: Recorder):
        F = QQ()
        H = group_algebra(GROUPS["C2"], F)
        e = flip_entwining(C=H.coalgebra)
        rec.check("entwining axioms", check_entwining(e).passed)
        rec.solved("theta", solve_theta(e))
        rec.solved("cocasimir", solve_cocasimir(e), EXISTS)
        M = trivial_comodule(H)
        rec.check("coaction retraction of a comodule", coaction_retraction(M) is not None)
    return [alg_side("QQ"), alg_side("GF2"),
            CatalogEntry("flip(k,k,kC2)/QQ", "trivial datum with A = k", coalg_side)]


def _relative_hopf_entry(lname: str, fname: str, a_trivial: bool) -> CatalogEntry:
    def run(rec: Recorder):
        F = QQ() if fname == "QQ" else GF(2)
        L = group_algebra(GROUPS["C2"], F) if lname == "kC2" else sweedler_h4(F)
        if a_trivial:
            A, rho = trivial_algebra(F), L.unit
        else:
            A, rho = L.algebra, L.comult
        e = entwining_relative_hopf(L, A, rho)
        rec.check("entwining axioms", check_entwining(e).passed)
        th = rec.solved("theta", solve_theta(e))
        phi = rec.solved("total-integral", solve_total_integral(L, A, rho),
                         EXISTS if not a_trivial else UNSPECIFIED)
        rec.agree("theta~total-integral", th, phi)
        rec.transport(th, "theta->totalintegral")
        rec.transport(phi, "totalintegral->theta")
        if not a_trivial:
            rec.check("identity is a total integral of (L, L)",
                      verify_total_integral(Matrix.identity(F, L.dim), L, A, rho).passed)
    aname = "k" if a_trivial else lname
    return CatalogEntry(f"relHopf({lname},{aname})/{fname}", "relative Hopf datum", run)


def _lc_entry(lname: str, c_trivial: bool) -> CatalogEntry:
    def run(rec: Recorder):
        F = QQ()
        L = group_algebra(GROUPS["C2"], F) if lname == "kC2" else sweedler_h4(F)
        if c_trivial:
            C, kappa = trivial_coalgebra(F), L.counit
        else:
            C, kappa = L.coalgebra, L.mult
        e = entwining_lc(L, C, kappa)
        rec.check("entwining axioms", check_entwining(e).passed)
        co = rec.solved("cocasimir", solve_cocasimir(e))
        ps = rec.solved("cointegral", solve_augmented_cointegral(L, C, kappa),
                        EXISTS if not c_trivial else UNSPECIFIED)
        rec.agree("cocasimir~cointegral", co, ps)
        rec.transport(co, "cocasimir->cointegral")
    cname = "k" if c_trivial else lname
    return CatalogEntry(f"[{lname},{cname}]/QQ", "[L,C] datum", run)


def _yd_c2_entry() -> CatalogEntry:
    def run(rec: Recorder):
        F = QQ()
        H = group_algebra(GROUPS["C2"], F)
        e = entwining_yetter_drinfeld(H)
        rec.check("entwining axioms", check_entwining(e).passed)
        rec.check("psi is the flip", e.psi == flip_entwining(H.algebra, H.coalgebra).psi)
        th = rec.solved("theta", solve_theta(e), EXISTS)
        q = rec.solved("quantum-integral", solve_quantum_integral(H), EXISTS)
        rec.agree("theta~quantum-integral", th, q)
        rec.solved("cocasimir", solve_cocasimir(e))
        if th is None:
            return
        fg = rec.solved("frobenius z given theta", solve_fg_z(e, th.data))
        if fg is not None:
            rec.solved("beta (H-separable)", frobenius_entwining_tools("solve_beta_hsep", e, fg.data))
        rng = make_rng("catalog-yd")
        ok_split = ok_fix = True
        for _ in range(3):
            M, _, _ = random_summand(e, rng)
            M2, _, _ = random_summand(e, rng)
            N, i, p = random_split_monic(e, M, M2, rng)
            r = maschke_split(e, th, i, p, M, N)
            ok_split &= r @ i == Matrix.identity(F, M.dim)
            g = random_entwined_morphism(M, N, rng)
            ok_fix &= deform_to_colinear(e, th, g, M, N) == g
        rec.check("deform: colinear retraction of split monics", ok_split)
        rec.check("deform: entwined morphisms are fixed", ok_fix)
    return CatalogEntry("YD(kC2)/QQ", "Yetter-Drinfeld entwining of QC2", run)


def _cor45_entry() -> CatalogEntry:
    def run(rec: Recorder):
        F = QQ()
        H = group_algebra(GROUPS["C2"], F)
        e = entwining_relative_hopf(H)
        th = solve_theta(e)
        rng = make_rng("catalog-cor45")
        ok_unit = ok_summand = ok_inj = True
        for _ in range(3):
            Y, X, B = random_summand(e, rng, v_dim=rng.randint(1, 2), grouplike=H.unit)
            ok_summand &= split_monic(e, B, Y, X) is not None
            ok_unit &= unit_splits(e, Y) is not None
            if th is not None:
                ok_inj &= coaction_retraction(Y) is not None
        rec.check("random summands of Hom(A,V)(x)C are summands", ok_summand)
        rec.check("unit map splits", ok_unit)
        rec.check("relative injective as comodules", ok_inj)
    return CatalogEntry("relHopf(kC2,kC2)/QQ:summands", "direct summands of cofree modules", run)


def entries() -> list[CatalogEntry]:
    out = [_group_entry(g, f) for g in GROUPS for f in FIELDS]
    out += [_h4_entry("QQ"), _h4_entry("GF3"), _sqrt2_entry(), _insep_entry()]
    out += _flip_entries()
    out += [_relative_hopf_entry("kC2", "QQ", False), _relative_hopf_entry("kC2", "GF2", False),
            _relative_hopf_entry("kC2", "QQ", True), _relative_hopf_entry("H4", "QQ", False),
            _relative_hopf_entry("H4", "QQ", True)]
    out += [_lc_entry("kC2", False), _lc_entry("kC2", True), _lc_entry("H4", False)]
    out += [_yd_c2_entry(), _cor45_entry()]
    return sorted(out, key=lambda c: c.name)


@dataclass
class CatalogReport:
    rows: list
    witnesses: int

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.rows)

    def to_json(self) -> dict:
        return {"pass": self.passed, "witnesses": self.witnesses, "rows": self.rows}

    def __str__(self) -> str:
        lines = []
        for r in self.rows:
            mark = "pass" if r["pass"] else "FAIL"
            lines.append(f"[{mark}] {r['entry']}: {r['solver']} -> {r['outcome']}"
                         f" (expected {r['expected']})")
        lines.append(f"{sum(r['pass'] for r in self.rows)}/{len(self.rows)} rows pass, "
                     f"{self.witnesses} witnesses verified")
        return "\n".join(lines)


def catalog_run(filter: str | None = None) -> CatalogReport:
    """Run every entry whose name contains ``filter`` (all entries by default)."""
    rows, count = [], 0
    for entry in entries():
        if filter and filter not in entry.name:
            continue
        rec = Recorder(entry.name)
        try:
            entry.run(rec)
        except Exception as exc:  # a crash is a failed row, not an aborted run
            rec.row("run", f"error: {type(exc).__name__}: {exc}", "pass", False)
        rows.extend(rec.rows)
        count += rec.witnesses
    return CatalogReport(rows, count)
