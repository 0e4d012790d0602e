"""Entwining structures, Doi-Koppinen data and entwined modules.

``psi: C (x) A -> A (x) C`` is written ``psi(c (x) a) = a_psi (x) c^psi`` and
stored as an ``(nA*nC) x (nC*nA)`` matrix.  Every Sweedler-index identity is
compiled into an explicit composition of tensor legs; the leg order is given
in the comment next to each formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DimensionMismatch, InvalidDatum, StructureMismatch
from .exactfield import Field
from .linalg import (
    Matrix, compose, direct_sum, hstack, kron, permutation, rref, solve_matrix_equations,
    swap, tensor, vstack,
)
from .report import Check, Report, compare
from .strucalg import (
    Algebra, Coalgebra, Comodule, HopfAlgebra, Module, _algebra_checks, _coalgebra_checks,
    _comodule_checks, _module_checks, actions_from_map, group_algebra,
)

__all__ = [
    "EntwiningStructure", "DoiKoppinenDatum", "EntwinedModule", "check_entwining",
    "check_datum", "entwining_from_doi_koppinen", "entwining_yetter_drinfeld",
    "entwining_relative_hopf", "entwining_lc", "flip_entwining", "trivial_algebra",
    "trivial_coalgebra", "check_entwined_module", "cofree", "hom_module",
    "cofree_induction", "unit_map", "unit_splits", "entwined_direct_sum",
    "entwined_conjugate", "entwined_from_parts", "split_monic", "cofree_map",
    "compatibility_check", "left_inverse", "restrict_entwined", "generated_submodule",
]


def _I(F: Field, n: int) -> Matrix:
    return Matrix.identity(F, n)


@dataclass(frozen=True)
class EntwiningStructure:
    algebra: Algebra
    coalgebra: Coalgebra
    psi: Matrix
    name: str = ""
    datum: "DoiKoppinenDatum | None" = dc_field(default=None, compare=False, repr=False)

    def __post_init__(self):
        nA, nC = self.algebra.dim, self.coalgebra.dim
        if self.algebra.field is not self.coalgebra.field:
            raise DimensionMismatch("algebra and coalgebra over different fields")
        if self.psi.shape != (nA * nC, nC * nA):
            raise DimensionMismatch(f"psi has shape {self.psi.shape}, expected {(nA * nC, nC * nA)}")

    field = property(lambda self: self.algebra.field)
    nA = property(lambda self: self.algebra.dim)
    nC = property(lambda self: self.coalgebra.dim)


@dataclass(frozen=True)
class DoiKoppinenDatum:
    """(H, A, C): ``coaction`` makes A a right H-comodule algebra (``nA*nH x nA``),
    ``kappa: C (x) H -> C`` makes C a right H-module coalgebra."""

    H: HopfAlgebra
    algebra: Algebra
    coaction: Matrix
    coalgebra: Coalgebra
    kappa: Matrix


@dataclass(frozen=True)
class EntwinedModule:
    module: Module
    comodule: Comodule

    def __post_init__(self):
        if self.module.dim != self.comodule.dim:
            raise DimensionMismatch("action and coaction on spaces of different dimension")

    dim = property(lambda self: self.module.dim)
    field = property(lambda self: self.module.field)
    action = property(lambda self: self.module.action)
    rho = property(lambda self: self.comodule.rho)


def entwined_from_parts(e: EntwiningStructure, action, rho: Matrix) -> EntwinedModule:
    return EntwinedModule(Module(e.algebra, tuple(action)), Comodule(e.coalgebra, rho))


# ---------------------------------------------------------------------------
# axioms

def check_entwining(e: EntwiningStructure) -> Report:
    F, nA, nC = e.field, e.nA, e.nC
    IA, IC = _I(F, nA), _I(F, nC)
    m, u = e.algebra.mult, e.algebra.unit
    d, eps = e.coalgebra.comult, e.coalgebra.counit
    psi = e.psi
    rep = Report("entwining axioms")
    # c (x) a (x) b
    rep.add(compare("multiplicativity", psi @ kron(IC, m),
                    compose(kron(m, IC), kron(IA, psi), kron(psi, IA)), (nC, nA, nA)))
    rep.add(compare("unitality", psi @ kron(IC, u), kron(u, IC), (nC,)))
    # c (x) a
    rep.add(compare("comultiplicativity", kron(IA, d) @ psi,
                    compose(kron(psi, IC), kron(IC, psi), kron(d, IA)), (nC, nA)))
    rep.add(compare("counitality", kron(IA, eps) @ psi, kron(eps, IA), (nC, nA)))
    return rep


def check_datum(d: DoiKoppinenDatum) -> Report:
    H, A, C = d.H, d.algebra, d.coalgebra
    F, nH, nA, nC = H.field, H.dim, A.dim, C.dim
    if d.coaction.shape != (nA * nH, nA) or d.kappa.shape != (nC, nC * nH):
        raise DimensionMismatch("datum structure maps have the wrong shape")
    rep = Report("Doi-Koppinen datum")
    rep.checks.extend(_algebra_checks(A))
    rep.checks.extend(_coalgebra_checks(C))
    rho, kap = d.coaction, d.kappa
    rep.checks.extend(_comodule_checks(Comodule(H.coalgebra, rho)))
    rep.checks.extend(_module_checks(Module(H.algebra, actions_from_map(kap, nH))))
    mid_a = tensor(_I(F, nA), swap(F, nH, nA), _I(F, nH))
    rep.add(compare("coaction is multiplicative", rho @ A.mult,
                    compose(kron(A.mult, H.mult), mid_a, kron(rho, rho)), (nA, nA)))
    rep.add(compare("coaction is unital", rho @ A.unit, kron(A.unit, H.unit)))
    mid_c = tensor(_I(F, nC), swap(F, nC, nH), _I(F, nH))
    rep.add(compare("action is comultiplicative", C.comult @ kap,
                    compose(kron(kap, kap), mid_c, kron(C.comult, H.comult)), (nC, nH)))
    rep.add(compare("action is counital", C.counit @ kap, kron(C.counit, H.counit), (nC, nH)))
    return rep


def entwining_from_doi_koppinen(d: DoiKoppinenDatum, name: str = "") -> EntwiningStructure:
    """``psi(c (x) a) = a_[0] (x) c . a_[1]``."""
    rep = check_datum(d)
    if not rep.passed:
        bad = rep.failures()[0]
        raise InvalidDatum(f"datum fails {bad.name!r} at {bad.at}")
    F, nH, nA, nC = d.H.field, d.H.dim, d.algebra.dim, d.coalgebra.dim
    # c (x) a -> c (x) a0 (x) a1 -> a0 (x) c (x) a1 -> a0 (x) c.a1
    psi = compose(kron(_I(F, nA), d.kappa), kron(swap(F, nC, nA), _I(F, nH)),
                  kron(_I(F, nC), d.coaction))
    return EntwiningStructure(d.algebra, d.coalgebra, psi, name, d)


def trivial_algebra(F: Field) -> Algebra:
    one = Matrix.identity(F, 1)
    return Algebra(F, 1, one, one)


def trivial_coalgebra(F: Field) -> Coalgebra:
    one = Matrix.identity(F, 1)
    return Coalgebra(F, 1, one, one)


def flip_entwining(A: Algebra | None = None, C: Coalgebra | None = None,
                   F: Field | None = None) -> EntwiningStructure:
    """The datum (k, A, C) over the trivial Hopf algebra: ``psi`` is the flip."""
    F = F or (A.field if A is not None else C.field)
    A = A or trivial_algebra(F)
    C = C or trivial_coalgebra(F)
    k = group_algebra(((0,),), F)
    d = DoiKoppinenDatum(k, A, _I(F, A.dim), C, _I(F, C.dim))
    return entwining_from_doi_koppinen(d, "flip")


def entwining_relative_hopf(L: HopfAlgebra, A: Algebra | None = None,
                            coaction: Matrix | None = None) -> EntwiningStructure:
    """(L, A, L): relative Hopf modules; A defaults to L with ``rho = Delta``.

    Pass ``A = trivial_algebra(F)`` with ``coaction = L.unit`` for A = k.
    """
    if A is None:
        A, coaction = L.algebra, L.comult
    kappa = L.mult  # C = L acted on by right multiplication
    d = DoiKoppinenDatum(L, A, coaction, L.coalgebra, kappa)
    return entwining_from_doi_koppinen(d, "relative-Hopf")


def entwining_lc(L: HopfAlgebra, C: Coalgebra | None = None,
                 kappa: Matrix | None = None) -> EntwiningStructure:
    """[L, C]: ``psi(c (x) h) = h_(1) (x) c . h_(2)``; C defaults to L acting on itself.

    Pass ``C = trivial_coalgebra(F)`` with ``kappa = L.counit`` for C = k.
    """
    if C is None:
        C, kappa = L.coalgebra, L.mult
    d = DoiKoppinenDatum(L, L.algebra, L.comult, C, kappa)
    return entwining_from_doi_koppinen(d, "[L,C]")


def entwining_yetter_drinfeld(L: HopfAlgebra) -> EntwiningStructure:
    """``psi(g (x) h) = h_(2) (x) S(h_(1)) g h_(3)`` on (A, C) = (L, L)."""
    if L.antipode is None:
        raise StructureMismatch("Yetter-Drinfeld entwining needs an antipode")
    F, n = L.field, L.dim
    I = _I(F, n)
    d2 = L.coalgebra.comult2()
    # g (x) h1 (x) h2 (x) h3 -> h2 (x) h1 (x) g (x) h3 -> h2 (x) S(h1) g h3
    perm = permutation(F, (n, n, n, n), (2, 1, 0, 3))
    m3 = L.mult @ kron(L.mult, I)
    psi = compose(kron(I, m3), tensor(I, L.antipode, I, I), perm, kron(I, d2))
    return EntwiningStructure(L.algebra, L.coalgebra, psi, "Yetter-Drinfeld")


# ---------------------------------------------------------------------------
# entwined modules

def compatibility_check(e: EntwiningStructure, M: EntwinedModule) -> Check:
    """``rho(m a) = m_[0] a_psi (x) m_[1]^psi``."""
    F, d = e.field, M.dim
    mu = M.module.act_map()
    rho = M.rho
    lhs = rho @ mu
    rhs = compose(kron(mu, _I(F, e.nC)), kron(_I(F, d), e.psi), kron(rho, _I(F, e.nA)))
    return compare("action/coaction compatibility", lhs, rhs, (d, e.nA))


def check_entwined_module(e: EntwiningStructure, M: EntwinedModule) -> Report:
    if M.module.algebra != e.algebra or M.comodule.coalgebra != e.coalgebra:
        raise DimensionMismatch("module does not live over this entwining")
    rep = Report("entwined module")
    rep.checks.extend(_module_checks(M.module))
    rep.checks.extend(_comodule_checks(M.comodule))
    rep.add(compatibility_check(e, M))
    return rep


def cofree(e: EntwiningStructure, N: Module) -> EntwinedModule:
    """``G(N) = N (x) C`` with ``(n (x) c) a = n a_psi (x) c^psi`` and coaction ``I (x) Delta``."""
    F, d = e.field, N.dim
    mu = compose(kron(N.act_map(), _I(F, e.nC)), kron(_I(F, d), e.psi))
    rho = kron(_I(F, d), e.coalgebra.comult)
    return entwined_from_parts(e, actions_from_map(mu, e.nA), rho)


def cofree_map(f: Matrix, e: EntwiningStructure) -> Matrix:
    """``G(f) = f (x) I_C``."""
    return kron(f, _I(e.field, e.nC))


def hom_module(A: Algebra, dim_v: int) -> Module:
    """``Hom(A, V)`` with ``(f . a)(b) = f(ab)``; coordinate ``v*nA + b`` is ``f(e_b)_v``."""
    F, n = A.field, A.dim
    mats = []
    for j in range(n):
        # (f . e_j)[v, b] = sum_k mult[j][b][k] f[v, k]
        Lt = Matrix(F, n, n, tuple(tuple(A.mult[k, j * n + b] for k in range(n))
                                   for b in range(n)))
        mats.append(kron(_I(F, dim_v), Lt))
    return Module(A, tuple(mats))


def cofree_induction(e: EntwiningStructure, V) -> EntwinedModule:
    """``G(N)`` for an A-module ``N``, or ``Hom(A, V) (x) C`` when ``V`` is a dimension."""
    if isinstance(V, Module):
        if V.algebra != e.algebra:
            raise DimensionMismatch("module over a different algebra")
        return cofree(e, V)
    if isinstance(V, int) and V >= 0:
        return cofree(e, hom_module(e.algebra, V))
    raise DimensionMismatch(f"expected an A-module or a dimension, got {V!r}")


def unit_map(e: EntwiningStructure, M: EntwinedModule) -> tuple[EntwinedModule, Matrix]:
    """``eta_M: M -> Hom(A, M) (x) C``, ``m -> (b -> m_[0] b) (x) m_[1]``."""
    F, d, nA = e.field, M.dim, e.nA
    iota = Matrix(F, d * nA, d, tuple(tuple(M.action[b][v, p] for p in range(d))
                                      for v in range(d) for b in range(nA)))
    target = cofree_induction(e, d)
    return target, kron(iota, _I(F, e.nC)) @ M.rho


def _morphism_equations(M: EntwinedModule, N: EntwinedModule):
    F, nC = M.field, M.comodule.coalgebra.dim
    IC = _I(F, nC)
    eqs = [(lambda f, Rm=Rm, Rn=Rn: f @ Rm - Rn @ f, Matrix.zeros(F, N.dim, M.dim))
           for Rm, Rn in zip(M.action, N.action)]
    eqs.append((lambda f: kron(f, IC) @ M.rho - N.rho @ f, Matrix.zeros(F, N.dim * nC, M.dim)))
    return eqs


def unit_splits(e: EntwiningStructure, M: EntwinedModule) -> Matrix | None:
    """Entwined morphism ``r`` with ``r o eta_M = I_M``, or ``None``."""
    G, eta = unit_map(e, M)
    F = e.field
    eqs = _morphism_equations(G, M)
    eqs.append((lambda r: r @ eta, _I(F, M.dim)))
    r, _ = solve_matrix_equations(F, (M.dim, G.dim), eqs)
    return r


def split_monic(e: EntwiningStructure, i: Matrix, M: EntwinedModule, N: EntwinedModule,
                kind: str = "entwined") -> Matrix | None:
    """Retraction ``r: N -> M`` of ``i`` that is A-linear, colinear or both, or ``None``."""
    F = e.field
    eqs = _morphism_equations(N, M)
    if kind == "module":
        eqs = eqs[:-1]
    elif kind == "comodule":
        eqs = eqs[-1:]
    elif kind != "entwined":
        raise StructureMismatch(f"unknown morphism kind {kind!r}")
    eqs.append((lambda r: r @ i, _I(F, M.dim)))
    r, _ = solve_matrix_equations(F, (M.dim, N.dim), eqs)
    return r


def entwined_direct_sum(M: EntwinedModule, N: EntwinedModule) -> EntwinedModule:
    F, nC = M.field, M.comodule.coalgebra.dim
    acts = tuple(direct_sum(a, b) for a, b in zip(M.action, N.action))
    # M (+) N -> (M (x) C) (+) (N (x) C) is already (M (+) N) (x) C in block order
    top = Matrix.zeros(F, M.dim * nC, N.dim)
    bot = Matrix.zeros(F, N.dim * nC, M.dim)
    rho = vstack([hstack([M.rho, top]), hstack([bot, N.rho])])
    return EntwinedModule(Module(M.module.algebra, acts), Comodule(M.comodule.coalgebra, rho))


def entwined_conjugate(M: EntwinedModule, P: Matrix) -> EntwinedModule:
    """Transport the structure along the isomorphism ``P: M -> M'``."""
    Pi = P.inverse()
    IC = _I(M.field, M.comodule.coalgebra.dim)
    acts = tuple(P @ R @ Pi for R in M.action)
    rho = kron(P, IC) @ M.rho @ Pi
    return EntwinedModule(Module(M.module.algebra, acts), Comodule(M.comodule.coalgebra, rho))


def left_inverse(B: Matrix) -> Matrix:
    """Some ``L`` with ``L @ B = I`` for ``B`` of full column rank."""
    F = B.field
    L, _ = solve_matrix_equations(F, (B.cols, B.rows), [(lambda X: X @ B, _I(F, B.cols))])
    if L is None:
        raise DimensionMismatch("columns are linearly dependent")
    return L


def restrict_entwined(M: EntwinedModule, B: Matrix) -> EntwinedModule:
    """Structure on the invariant subspace spanned by the columns of ``B``."""
    L = left_inverse(B)
    IC = _I(M.field, M.comodule.coalgebra.dim)
    acts = tuple(L @ R @ B for R in M.action)
    rho = kron(L, IC) @ M.rho @ B
    sub = EntwinedModule(Module(M.module.algebra, acts), Comodule(M.comodule.coalgebra, rho))
    # invariance: the inclusion must intertwine both structures
    if any(R @ B != B @ Rs for R, Rs in zip(M.action, acts)) or M.rho @ B != kron(B, IC) @ rho:
        raise StructureMismatch("subspace is not an entwined submodule")
    return sub


def generated_submodule(M: EntwinedModule, vectors) -> Matrix:
    """Basis (as columns) of the smallest entwined submodule containing ``vectors``."""
    F, d = M.field, M.dim
    nC = M.comodule.coalgebra.dim
    coeff_maps = [kron(_I(F, d), Matrix.unit(F, 1, nC, 0, c)) @ M.rho for c in range(nC)]
    ops = list(M.action) + coeff_maps
    basis: list[Matrix] = []

    def reduced(vs):
        if not vs:
            return []
        red, piv = rref(hstack(vs).T)
        return [Matrix.column(F, red.row_vec(i)) for i in range(len(piv))]

    todo = list(vectors)
    while todo:
        new = reduced(basis + todo)
        if len(new) == len(basis):
            break
        basis = new
        todo = [op @ v for op in ops for v in basis]
    return hstack(basis) if basis else Matrix.zeros(F, d, 0)
