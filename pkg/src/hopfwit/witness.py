"""Witness solvers, verifiers and transports.

Every criterion is an exact affine system in the entries of one unknown map.
A solver returns the canonical solution (free coordinates set to zero)
wrapped in a :class:`Witness`, or ``None`` when the system is inconsistent.
Each returned witness has already passed its verifier.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .entwine import (
    EntwiningStructure, entwining_lc, entwining_relative_hopf, entwining_yetter_drinfeld,
)
from .errors import (
    NotAFrobeniusSystem, NotAlgebraMap, StructureMismatch, TNotSubalgebra, VerificationFailure,
    WrongMode, WrongTag,
)
from .exactfield import Field
from .linalg import Matrix, compose, hstack, kron, permutation, rank, solve_matrix_equations, swap, tensor
from .report import Check, Report, compare
from .strucalg import Algebra, Coalgebra, HopfAlgebra, is_algebra_map, left_mult, right_mult

TAGS = (
    "NormalizedIntegral", "DualIntegral", "RelativeCasimir", "BimoduleRetraction", "Theta",
    "Cocasimir", "TotalIntegral", "AugmentedCointegral", "Beta", "FrobeniusRing",
    "FrobeniusEntwining", "FrobeniusHK", "Alpha", "CentralX", "QuantumIntegral",
)

DIRECTIONS = {
    "integral->idempotent": "NormalizedIntegral",
    "totalintegral->theta": "TotalIntegral",
    "theta->totalintegral": "Theta",
    "cocasimir->cointegral": "Cocasimir",
}


def _I(F: Field, n: int) -> Matrix:
    return Matrix.identity(F, n)


def _zeros(F: Field, r: int, c: int) -> Matrix:
    return Matrix.zeros(F, r, c)


@dataclass(frozen=True)
class Witness:
    """``data`` is a matrix (or a tuple of matrices for pairs); ``context`` names the
    structures the witness refers to, keyed as the verifier's keyword arguments."""

    tag: str
    data: object
    context: dict = dc_field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.tag not in TAGS:
            raise WrongTag(f"unknown witness tag {self.tag!r}")

    def verify(self) -> Report:
        return verify_witness(self)


_VERIFIERS: dict[str, Callable[..., Report]] = {}


def _verifier(tag: str):
    def deco(fn):
        _VERIFIERS[tag] = fn
        return fn
    return deco


def verify_witness(w: Witness) -> Report:
    return _VERIFIERS[w.tag](w.data, **w.context)


def _finish(tag: str, data, **context) -> Witness:
    w = Witness(tag, data, context)
    rep = verify_witness(w)
    if not rep.passed:
        raise VerificationFailure(f"solved {tag} fails its verifier:\n{rep}")
    return w


def _solve(F: Field, shape: tuple[int, int], eqs) -> Matrix | None:
    return solve_matrix_equations(F, shape, eqs)[0]


def _report(subject: str, checks: Sequence[Check]) -> Report:
    return Report(subject, list(checks))


# ---------------------------------------------------------------------------
# integrals of Hopf algebras

def _integral_checks(t: Matrix, H: HopfAlgebra) -> list[Check]:
    n = H.dim
    one = Matrix.identity(H.field, 1)
    return [compare("right integral: t h = eps(h) t", H.mult @ kron(t, _I(H.field, n)),
                    t @ H.counit, (n,)),
            compare("normalized: eps(t) = 1", H.counit @ t, one)]


@_verifier("NormalizedIntegral")
def verify_normalized_integral(t: Matrix, H: HopfAlgebra) -> Report:
    return _report("normalized right integral", _integral_checks(t, H))


def solve_normalized_integral(H: HopfAlgebra) -> Witness | None:
    F, n = H.field, H.dim
    I = _I(F, n)
    eqs = [(lambda t: H.mult @ kron(t, I) - t @ H.counit, _zeros(F, n, n)),
           (lambda t: H.counit @ t, _I(F, 1))]
    t = _solve(F, (n, 1), eqs)
    return None if t is None else _finish("NormalizedIntegral", t, H=H)


@_verifier("DualIntegral")
def verify_dual_integral(phi: Matrix, H: HopfAlgebra) -> Report:
    n = H.dim
    return _report("normalized integral in the dual", [
        compare("phi(h_(1)) h_(2) = phi(h) 1", kron(phi, _I(H.field, n)) @ H.comult,
                H.unit @ phi, (n,)),
        compare("phi(1) = 1", phi @ H.unit, _I(H.field, 1)),
    ])


def solve_dual_normalized_integral(H: HopfAlgebra) -> Witness | None:
    F, n = H.field, H.dim
    I = _I(F, n)
    eqs = [(lambda p: kron(p, I) @ H.comult - H.unit @ p, _zeros(F, n, n)),
           (lambda p: p @ H.unit, _I(F, 1))]
    phi = _solve(F, (1, n), eqs)
    return None if phi is None else _finish("DualIntegral", phi, H=H)


# ---------------------------------------------------------------------------
# ring extensions over k

def _span_rank(F: Field, vecs: Sequence[Matrix]) -> int:
    return rank(hstack(list(vecs))) if vecs else 0


def check_subalgebra(S: Algebra, T: Sequence[Matrix]) -> None:
    """Raise TNotSubalgebra unless ``span(T)`` contains 1 and is closed under products."""
    T = list(T)
    if any(t.shape != (S.dim, 1) for t in T):
        raise TNotSubalgebra("elements of T must be column vectors in S")
    r = _span_rank(S.field, T)
    if _span_rank(S.field, T + [S.unit]) != r:
        raise TNotSubalgebra("span of T does not contain 1")
    for a in T:
        for b in T:
            if _span_rank(S.field, T + [S.product(a, b)]) != r:
                raise TNotSubalgebra("span of T is not closed under multiplication")


def _basis(S: Algebra) -> list[Matrix]:
    return [S.basis(i) for i in range(S.dim)]


@_verifier("RelativeCasimir")
def verify_relative_casimir(e: Matrix, S: Algebra, T: Sequence[Matrix] | None = None) -> Report:
    F, n = S.field, S.dim
    T = _basis(S) if T is None else T
    I = _I(F, n)
    checks = []
    for k, t in enumerate(T):
        c = compare(f"t e = e t for T element {k}", kron(left_mult(S, t), I) @ e,
                    kron(I, right_mult(S, t)) @ e)
        checks.append(c)
    checks.append(compare("sum e1 e2 = 1", S.mult @ e, S.unit))
    return _report("relative Casimir element", checks)


def solve_relative_casimir(S: Algebra, T: Sequence[Matrix] | None = None) -> Witness | None:
    """``e in S (x) S`` commuting with ``T`` (all of S by default) and ``m(e) = 1``."""
    F, n = S.field, S.dim
    if T is not None:
        T = tuple(T)
        check_subalgebra(S, T)
    I = _I(F, n)
    Ts = _basis(S) if T is None else T
    eqs = [(lambda e, L=kron(left_mult(S, t), I), R=kron(I, right_mult(S, t)): L @ e - R @ e,
            _zeros(F, n * n, 1)) for t in Ts]
    eqs.append((lambda e: S.mult @ e, S.unit))
    e = _solve(F, (n * n, 1), eqs)
    return None if e is None else _finish("RelativeCasimir", e, S=S, T=T)


@_verifier("BimoduleRetraction")
def verify_bimodule_retraction(nu: Matrix, S: Algebra, R: Algebra, i: Matrix,
                               Q: Algebra, j: Matrix) -> Report:
    return _report("bimodule retraction", [
        compare("nu(r s) = r nu(s)", nu @ S.mult @ kron(i, _I(S.field, S.dim)),
                R.mult @ kron(_I(S.field, R.dim), nu), (R.dim, S.dim)),
        compare("nu(s q) = nu(s) q", i @ nu @ S.mult @ kron(_I(S.field, S.dim), j),
                S.mult @ kron(i @ nu, j), (S.dim, Q.dim)),
        compare("nu(1) = 1", nu @ S.unit, R.unit),
    ])


def solve_bimodule_retraction(S: Algebra, R: Algebra, i: Matrix, Q: Algebra,
                              j: Matrix) -> Witness | None:
    """``nu: S -> R`` splitting ``i: R -> S`` as an (R, Q)-bimodule map."""
    if not is_algebra_map(i, R, S):
        raise NotAlgebraMap("R -> S is not an algebra map")
    if not is_algebra_map(j, Q, S):
        raise NotAlgebraMap("Q -> S is not an algebra map")
    F, nS = S.field, S.dim
    IS = _I(F, nS)
    eqs = [
        (lambda v: v @ S.mult @ kron(i, IS) - R.mult @ kron(_I(F, R.dim), v),
         _zeros(F, R.dim, R.dim * nS)),
        (lambda v: i @ v @ S.mult @ kron(IS, j) - S.mult @ kron(i @ v, j),
         _zeros(F, nS, nS * Q.dim)),
        (lambda v: v @ S.unit, R.unit),
    ]
    nu = _solve(F, (R.dim, nS), eqs)
    return None if nu is None else _finish("BimoduleRetraction", nu, S=S, R=R, i=i, Q=Q, j=j)


# ---------------------------------------------------------------------------
# entwining criteria

def _theta_checks(theta: Matrix, e: EntwiningStructure) -> list[Check]:
    F, nC = e.field, e.nC
    IC = _I(F, nC)
    d = e.coalgebra.comult
    # c (x) d
    return [
        compare("theta(c, d1) d2 = theta(c2, d)_psi c1^psi", kron(theta, IC) @ kron(IC, d),
                compose(e.psi, kron(IC, theta), kron(d, IC)), (nC, nC)),
        compare("theta o Delta = 1 eps", theta @ d, e.algebra.unit @ e.coalgebra.counit, (nC,)),
    ]


@_verifier("Theta")
def verify_theta(theta: Matrix, entwining: EntwiningStructure) -> Report:
    return _report("theta map", _theta_checks(theta, entwining))


def _theta_equations(e: EntwiningStructure):
    F, nA, nC = e.field, e.nA, e.nC
    IC = _I(F, nC)
    d = e.coalgebra.comult
    return [
        (lambda th: kron(th, IC) @ kron(IC, d) - compose(e.psi, kron(IC, th), kron(d, IC)),
         _zeros(F, nA * nC, nC * nC)),
        (lambda th: th @ d, e.algebra.unit @ e.coalgebra.counit),
    ]


def solve_theta(e: EntwiningStructure) -> Witness | None:
    theta = _solve(e.field, (e.nA, e.nC * e.nC), _theta_equations(e))
    return None if theta is None else _finish("Theta", theta, entwining=e)


def _cocasimir_checks(E: Matrix, e: EntwiningStructure) -> list[Check]:
    F, nA, nC = e.field, e.nA, e.nC
    IA = _I(F, nA)
    m = e.algebra.mult
    # c (x) a
    return [
        compare("e1(c) e2(c) a = a_psi e1(c^psi) e2(c^psi)", kron(IA, m) @ kron(E, IA),
                compose(kron(m, IA), kron(IA, E), e.psi), (nC, nA)),
        compare("m o e = 1 eps", m @ E, e.algebra.unit @ e.coalgebra.counit, (nC,)),
    ]


@_verifier("Cocasimir")
def verify_cocasimir(E: Matrix, entwining: EntwiningStructure) -> Report:
    return _report("cocasimir map", _cocasimir_checks(E, entwining))


def solve_cocasimir(e: EntwiningStructure) -> Witness | None:
    F, nA, nC = e.field, e.nA, e.nC
    IA = _I(F, nA)
    m = e.algebra.mult
    eqs = [
        (lambda E: kron(IA, m) @ kron(E, IA) - compose(kron(m, IA), kron(IA, E), e.psi),
         _zeros(F, nA * nA, nC * nA)),
        (lambda E: m @ E, e.algebra.unit @ e.coalgebra.counit),
    ]
    E = _solve(F, (nA * nA, nC), eqs)
    return None if E is None else _finish("Cocasimir", E, entwining=e)


@_verifier("TotalIntegral")
def verify_total_integral(phi: Matrix, L: HopfAlgebra, A: Algebra, coaction: Matrix) -> Report:
    return _report("total integral", [
        compare("phi is colinear", coaction @ phi, kron(phi, _I(L.field, L.dim)) @ L.comult,
                (L.dim,)),
        compare("phi(1) = 1", phi @ L.unit, A.unit),
    ])


def solve_total_integral(L: HopfAlgebra, A: Algebra | None = None,
                         coaction: Matrix | None = None) -> Witness | None:
    """Colinear ``phi: L -> A`` with ``phi(1) = 1``; A defaults to L itself."""
    if A is None:
        A, coaction = L.algebra, L.comult
    F, nL = L.field, L.dim
    IL = _I(F, nL)
    eqs = [(lambda p: coaction @ p - kron(p, IL) @ L.comult, _zeros(F, A.dim * nL, nL)),
           (lambda p: p @ L.unit, A.unit)]
    phi = _solve(F, (A.dim, nL), eqs)
    return None if phi is None else _finish("TotalIntegral", phi, L=L, A=A, coaction=coaction)


@_verifier("AugmentedCointegral")
def verify_augmented_cointegral(psi: Matrix, L: HopfAlgebra, C: Coalgebra,
                                kappa: Matrix) -> Report:
    return _report("augmented cointegral", [
        compare("psi is right L-linear", psi @ kappa, L.mult @ kron(psi, _I(L.field, L.dim)),
                (C.dim, L.dim)),
        compare("eps_L o psi = eps_C", L.counit @ psi, C.counit, (C.dim,)),
    ])


def solve_augmented_cointegral(L: HopfAlgebra, C: Coalgebra | None = None,
                               kappa: Matrix | None = None) -> Witness | None:
    """Right L-linear ``psi: C -> L`` with ``eps_L psi = eps_C``; C defaults to L."""
    if C is None:
        C, kappa = L.coalgebra, L.mult
    F, nL = L.field, L.dim
    IL = _I(F, nL)
    eqs = [(lambda p: p @ kappa - L.mult @ kron(p, IL), _zeros(F, nL, C.dim * nL)),
           (lambda p: L.counit @ p, C.counit)]
    psi = _solve(F, (nL, C.dim), eqs)
    return None if psi is None else _finish("AugmentedCointegral", psi, L=L, C=C, kappa=kappa)


# ---------------------------------------------------------------------------
# transports

def witness_transport(w: Witness, direction: str) -> Witness:
    """Map a witness along one of the proof constructions; the result is verified."""
    want = DIRECTIONS.get(direction)
    if want is None:
        raise WrongTag(f"unknown direction {direction!r}; expected one of {sorted(DIRECTIONS)}")
    if w.tag != want:
        raise WrongTag(f"direction {direction!r} needs a {want} witness, got {w.tag}")
    ctx = w.context
    if direction == "integral->idempotent":
        H = ctx["H"]
        if H.antipode is None:
            raise StructureMismatch("transport needs an antipode")
        e = kron(H.antipode, _I(H.field, H.dim)) @ H.comult @ w.data
        return _finish("RelativeCasimir", e, S=H.algebra, T=None)
    if direction == "totalintegral->theta":
        L, A, rho = ctx["L"], ctx["A"], ctx["coaction"]
        if L.antipode is None:
            raise StructureMismatch("transport needs an antipode")
        theta = compose(w.data, L.mult, kron(L.antipode, _I(L.field, L.dim)))
        return _finish("Theta", theta, entwining=entwining_relative_hopf(L, A, rho))
    if direction == "theta->totalintegral":
        e = ctx["entwining"]
        d = e.datum
        if d is None or d.coalgebra != d.H.coalgebra or d.kappa != d.H.mult:
            raise StructureMismatch("theta must live on a relative-Hopf entwining")
        L = d.H
        phi = w.data @ kron(L.unit, _I(L.field, L.dim))
        return _finish("TotalIntegral", phi, L=L, A=d.algebra, coaction=d.coaction)
    # cocasimir->cointegral
    e = ctx["entwining"]
    d = e.datum
    if d is None or d.algebra != d.H.algebra or d.coaction != d.H.comult:
        raise StructureMismatch("cocasimir map must live on an [L,C] entwining")
    L = d.H
    psi = kron(L.counit, _I(L.field, L.dim)) @ w.data
    return _finish("AugmentedCointegral", psi, L=L, C=d.coalgebra, kappa=d.kappa)


# ---------------------------------------------------------------------------
# Frobenius ring extensions over k

def _casimir_equations(S: Algebra):
    F, n = S.field, S.dim
    I = _I(F, n)
    return [(lambda f, L=kron(left_mult(S, s), I), R=kron(I, right_mult(S, s)): L @ f - R @ f,
             _zeros(F, n * n, 1)) for s in _basis(S)]


@_verifier("FrobeniusRing")
def verify_frobenius_ring(data, S: Algebra) -> Report:
    mu_bar, f = data
    F, n = S.field, S.dim
    I = _I(F, n)
    checks = [Check("mu_bar is a k-bimodule map", mu_bar.shape == (1, n),
                    detail="" if mu_bar.shape == (1, n) else f"shape {mu_bar.shape}")]
    if f.shape != (n * n, 1) or mu_bar.shape != (1, n):
        checks.append(Check("shapes", False, detail=f"f has shape {f.shape}"))
        return _report("Frobenius system", checks)
    for k, s in enumerate(_basis(S)):
        checks.append(compare(f"f is Casimir at basis {k}", kron(left_mult(S, s), I) @ f,
                              kron(I, right_mult(S, s)) @ f))
    checks.append(compare("mu_bar(f1) f2 = 1", kron(mu_bar, I) @ f, S.unit))
    checks.append(compare("f1 mu_bar(f2) = 1", kron(I, mu_bar) @ f, S.unit))
    return _report("Frobenius system", checks)


def solve_frobenius_casimir(S: Algebra, mu_bar: Matrix) -> Witness | None:
    """The Casimir element ``f`` dual to a given functional ``mu_bar``."""
    F, n = S.field, S.dim
    I = _I(F, n)
    eqs = _casimir_equations(S)
    eqs.append((lambda f: kron(mu_bar, I) @ f, S.unit))
    eqs.append((lambda f: kron(I, mu_bar) @ f, S.unit))
    f = _solve(F, (n * n, 1), eqs)
    return None if f is None else _finish("FrobeniusRing", (mu_bar, f), S=S)


@_verifier("Alpha")
def verify_alpha(alpha: Matrix, S: Algebra, mu_bar: Matrix, f: Matrix,
                 T: Sequence[Matrix] | None = None) -> Report:
    F, n = S.field, S.dim
    Ts = _basis(S) if T is None else T
    checks = [compare(f"alpha(s t) = alpha(s) t for T element {k}",
                      alpha @ right_mult(S, t), right_mult(S, t) @ alpha)
              for k, t in enumerate(Ts)]
    checks.append(compare("f1 alpha(f2) = 1", S.mult @ kron(_I(F, n), alpha) @ f, S.unit))
    return _report("alpha map", checks)


@_verifier("CentralX")
def verify_central_x(x: Matrix, S: Algebra, mu_bar: Matrix, f: Matrix,
                     Q: Sequence[Matrix] | None = None) -> Report:
    Qs = _basis(S) if Q is None else Q
    checks = [compare(f"q x = x q for Q element {k}", left_mult(S, q) @ x, right_mult(S, q) @ x)
              for k, q in enumerate(Qs)]
    checks.append(compare("mu_bar(x) = 1", mu_bar @ x, _I(S.field, 1)))
    return _report("centralizing element", checks)


def frobenius_ring_tools(mode: str, S: Algebra, mu_bar: Matrix, f: Matrix, *,
                         T: Sequence[Matrix] | None = None, Q: Sequence[Matrix] | None = None):
    """``verify`` returns a report; ``solve_alpha`` / ``solve_x`` return a witness or ``None``."""
    if mode not in ("verify", "solve_alpha", "solve_x"):
        raise WrongMode(f"unknown mode {mode!r}")
    rep = verify_frobenius_ring((mu_bar, f), S)
    if mode == "verify":
        return rep
    if not rep.passed:
        raise NotAFrobeniusSystem(str(rep))
    F, n = S.field, S.dim
    I = _I(F, n)
    if mode == "solve_alpha":
        if T is not None:
            T = tuple(T)
            check_subalgebra(S, T)
        Ts = _basis(S) if T is None else T
        eqs = [(lambda a, R=right_mult(S, t): a @ R - R @ a, _zeros(F, n, n)) for t in Ts]
        eqs.append((lambda a: S.mult @ kron(I, a) @ f, S.unit))
        alpha = _solve(F, (n, n), eqs)
        return None if alpha is None else _finish("Alpha", alpha, S=S, mu_bar=mu_bar, f=f, T=T)
    if Q is not None:
        Q = tuple(Q)
        check_subalgebra(S, Q)
    Qs = _basis(S) if Q is None else Q
    eqs = [(lambda x, Lq=left_mult(S, q), Rq=right_mult(S, q): Lq @ x - Rq @ x, _zeros(F, n, 1))
           for q in Qs]
    eqs.append((lambda x: mu_bar @ x, _I(F, 1)))
    x = _solve(F, (n, 1), eqs)
    return None if x is None else _finish("CentralX", x, S=S, mu_bar=mu_bar, f=f, Q=Q)


# ---------------------------------------------------------------------------
# Frobenius systems for entwined modules

def _fg_parts(e: EntwiningStructure):
    F, nA, nC = e.field, e.nA, e.nC
    return F, nA, nC, _I(F, nA), _I(F, nC), e.algebra.mult, e.psi


def _fg_checks(theta: Matrix, z: Matrix, e: EntwiningStructure) -> list[Check]:
    F, nA, nC, IA, IC, m, psi = _fg_parts(e)
    ue = e.algebra.unit @ e.coalgebra.counit
    # (i) on c (x) d (x) a
    lhs1 = m @ kron(theta, IA)
    rhs1 = compose(m, kron(IA, theta), kron(psi, IC), kron(IC, psi))
    # (iii) on a
    lhs3 = kron(m, IC) @ kron(IA, z)
    rhs3 = compose(kron(m, IC), kron(IA, psi), kron(z, IA))
    # (iv) on d; second form reorders a_l (x) c_l (x) d to d (x) a_l (x) c_l first
    n1 = compose(m, kron(IA, theta), kron(z, IC))
    perm = permutation(F, (nA, nC, nC), (2, 0, 1))
    n2 = compose(m, kron(IA, theta), kron(psi, IC), perm, kron(z, IC))
    return [
        compare("theta(c, d) a = a_psi_Psi theta(c^Psi, d^psi)", lhs1, rhs1, (nC, nC, nA)),
        *_theta_checks(theta, e)[:1],
        compare("az=za", lhs3, rhs3, (nA,)),
        compare("a_l theta(c_l, d) = eps(d) 1", n1, ue, (nC,)),
        compare("a_l_psi theta(d^psi, c_l) = eps(d) 1", n2, ue, (nC,)),
    ]


@_verifier("FrobeniusEntwining")
def verify_frobenius_entwining(data, entwining: EntwiningStructure) -> Report:
    theta, z = data
    return _report("Frobenius system (theta, z)", _fg_checks(theta, z, entwining))


def solve_fg_theta(e: EntwiningStructure, z: Matrix) -> Witness | None:
    """theta completing a Frobenius system for a fixed ``z in A (x) C``."""
    F, nA, nC, IA, IC, m, psi = _fg_parts(e)
    ue = e.algebra.unit @ e.coalgebra.counit
    perm = permutation(F, (nA, nC, nC), (2, 0, 1))
    eqs = _theta_equations(e) + [
        (lambda th: m @ kron(th, IA) - compose(m, kron(IA, th), kron(psi, IC), kron(IC, psi)),
         _zeros(F, nA, nC * nC * nA)),
        (lambda th: compose(m, kron(IA, th), kron(z, IC)), ue),
        (lambda th: compose(m, kron(IA, th), kron(psi, IC), perm, kron(z, IC)), ue),
    ]
    theta = _solve(F, (nA, nC * nC), eqs)
    if theta is None:
        return None
    return _finish_fg(theta, z, e)


def solve_fg_z(e: EntwiningStructure, theta: Matrix) -> Witness | None:
    """z completing a Frobenius system for a fixed theta."""
    F, nA, nC, IA, IC, m, psi = _fg_parts(e)
    ue = e.algebra.unit @ e.coalgebra.counit
    perm = permutation(F, (nA, nC, nC), (2, 0, 1))
    eqs = [
        (lambda z: kron(m, IC) @ kron(IA, z) - compose(kron(m, IC), kron(IA, psi), kron(z, IA)),
         _zeros(F, nA * nC, nA)),
        (lambda z: compose(m, kron(IA, theta), kron(z, IC)), ue),
        (lambda z: compose(m, kron(IA, theta), kron(psi, IC), perm, kron(z, IC)), ue),
    ]
    z = _solve(F, (nA * nC, 1), eqs)
    if z is None:
        return None
    rep = verify_frobenius_entwining((theta, z), e)
    if not rep.passed:  # theta itself violates a z-independent condition
        return None
    return _finish_fg(theta, z, e)


def _finish_fg(theta, z, e):
    return _finish("FrobeniusEntwining", (theta, z), entwining=e)


def _hk_checks(vt: Matrix, E: Matrix, e: EntwiningStructure) -> list[Check]:
    F, nA, nC, IA, IC, m, psi = _fg_parts(e)
    d = e.coalgebra.comult
    ue = e.algebra.unit @ e.coalgebra.counit
    return [
        # c (x) a
        compare("vt(c1, a_psi) c2^psi = vt(c2, a) c1",
                compose(kron(vt, IC), kron(IC, psi), kron(d, IA)),
                compose(kron(IC, vt), kron(d, IA)), (nC, nA)),
        # c
        compare("e(c1) (x) c2 = e(c2) entwined past c1",
                kron(E, IC) @ d, compose(kron(IA, psi), kron(psi, IA), kron(IC, E), d), (nC,)),
        *_cocasimir_checks(E, e)[:1],
        compare("vt(c1, e1(c2)) e2(c2) = eps(c) 1",
                compose(kron(vt, IA), kron(IC, E), d), ue, (nC,)),
        compare("vt(c1^psi, e2(c2)) e1(c2)_psi = eps(c) 1",
                compose(kron(IA, vt), kron(psi, IA), kron(IC, E), d), ue, (nC,)),
    ]


@_verifier("FrobeniusHK")
def verify_frobenius_hk(data, entwining: EntwiningStructure) -> Report:
    vt, E = data
    return _report("Frobenius system (vartheta, e)", _hk_checks(vt, E, entwining))


def solve_hk_vartheta(e: EntwiningStructure, E: Matrix) -> Witness | None:
    """vartheta completing a (vartheta, e) system for a fixed ``e: C -> A (x) A``."""
    F, nA, nC, IA, IC, m, psi = _fg_parts(e)
    d = e.coalgebra.comult
    ue = e.algebra.unit @ e.coalgebra.counit
    eqs = [
        (lambda v: compose(kron(v, IC), kron(IC, psi), kron(d, IA))
         - compose(kron(IC, v), kron(d, IA)), _zeros(F, nC, nC * nA)),
        (lambda v: compose(kron(v, IA), kron(IC, E), d), ue),
        (lambda v: compose(kron(IA, v), kron(psi, IA), kron(IC, E), d), ue),
    ]
    vt = _solve(F, (1, nC * nA), eqs)
    if vt is None:
        return None
    if not verify_frobenius_hk((vt, E), e).passed:
        return None
    return _finish("FrobeniusHK", (vt, E), entwining=e)


def _beta_hsep_map(b: Matrix, theta: Matrix, e: EntwiningStructure) -> Matrix:
    """Left side of the H-separability identity as a map ``C -> A (x) C``."""
    F, nA, nC, IA, IC, m, psi = _fg_parts(e)
    d3 = e.coalgebra.comult3()
    # c1 c2 c3 c4 -> c1 c2 b(c3) c4 -> c1 b_psi1 c2^psi1 c4 -> b_psi1psi2 c1^psi2 c2^psi1 c4
    # -> b.. c1^psi2 theta(c2^psi1, c4) -> b.. theta_psi3 c1^psi2psi3 -> product (x) c
    return compose(kron(m, IC), kron(IA, psi), tensor(IA, IC, theta),
                   tensor(psi, IC, IC), tensor(IC, psi, IC), tensor(IC, IC, b, IC), d3)


def _beta_centralizing(b: Matrix, e: EntwiningStructure) -> tuple[Matrix, Matrix]:
    F, nA, nC, IA, IC, m, psi = _fg_parts(e)
    return m @ kron(b, IA), compose(m, kron(IA, b), psi)


def _beta_colinear(b: Matrix, e: EntwiningStructure) -> tuple[Matrix, Matrix]:
    d = e.coalgebra.comult
    IC = _I(e.field, e.nC)
    return kron(b, IC) @ d, compose(e.psi, kron(IC, b), d)


def _beta_fsep_map(b: Matrix, E: Matrix, e: EntwiningStructure) -> Matrix:
    """Right side of the F-separability identity as a map ``C (x) A -> A``.

    Leg order: psi_1 on (c2, a), psi_2 on (c1, a_psi1), psi_3 on (c1^psi2, e1).
    """
    F, nA, nC, IA, IC, m, psi = _fg_parts(e)
    d = e.coalgebra.comult
    m4 = compose(m, kron(m, IA), tensor(m, IA, IA))
    return compose(m4, tensor(IA, IA, b, IA), tensor(IA, psi, IA), tensor(IA, IC, E),
                   kron(psi, IC), kron(IC, psi), kron(d, IA))


@_verifier("Beta")
def verify_beta(b: Matrix, entwining: EntwiningStructure, kind: str, system) -> Report:
    e = entwining
    F, nA, nC = e.field, e.nA, e.nC
    checks = []
    if kind in ("hsep", "sep"):
        theta, _ = system
        checks.append(compare("beta identity for H-separability", _beta_hsep_map(b, theta, e),
                              kron(e.algebra.unit, _I(F, nC)), (nC,)))
        if kind == "sep":
            checks.append(compare("beta(c) a = a_psi beta(c^psi)", *_beta_centralizing(b, e),
                                  (nC, nA)))
    elif kind in ("fsep", "fsep_full"):
        _, E = system
        checks.append(compare("beta identity for F-separability", _beta_fsep_map(b, E, e),
                              kron(e.coalgebra.counit, _I(F, nA)), (nC, nA)))
        if kind == "fsep_full":
            checks.append(compare("beta(c1) c2 = beta(c2)_psi c1^psi", *_beta_colinear(b, e),
                                  (nC,)))
    else:
        raise WrongMode(f"unknown beta kind {kind!r}")
    return _report(f"beta map ({kind})", checks)


def frobenius_entwining_tools(mode: str, e: EntwiningStructure, system=None):
    """Verify a Frobenius system or solve for beta against a verified one.

    ``system`` is ``(theta, z)`` for the ``*_FG``/``hsep``/``sep`` modes and
    ``(vartheta, e)`` for ``verify_HK`` and the ``fsep`` modes.
    """
    modes = ("verify_FG", "solve_beta_hsep", "solve_beta_sep", "verify_HK",
             "solve_beta_fsep", "solve_beta_fsep_full")
    if mode not in modes:
        raise WrongMode(f"unknown mode {mode!r}; expected one of {modes}")
    fg = mode in ("verify_FG", "solve_beta_hsep", "solve_beta_sep")
    rep = (verify_frobenius_entwining if fg else verify_frobenius_hk)(system, e)
    if mode.startswith("verify"):
        return rep
    if not rep.passed:
        raise NotAFrobeniusSystem(str(rep))
    F, nA, nC, IA, IC, m, psi = _fg_parts(e)
    kind = mode[len("solve_beta_"):]
    if fg:
        theta, _ = system
        eqs = [(lambda b: _beta_hsep_map(b, theta, e), kron(e.algebra.unit, IC))]
        if kind == "sep":
            eqs.append((lambda b: (lambda l, r: l - r)(*_beta_centralizing(b, e)),
                        _zeros(F, nA, nC * nA)))
    else:
        _, E = system
        eqs = [(lambda b: _beta_fsep_map(b, E, e), kron(e.coalgebra.counit, IA))]
        if kind == "fsep_full":
            eqs.append((lambda b: (lambda l, r: l - r)(*_beta_colinear(b, e)),
                        _zeros(F, nA * nC, nC)))
    b = _solve(F, (nA, nC), eqs)
    if b is None:
        return None
    return _finish("Beta", b, entwining=e, kind=kind, system=tuple(system))


# ---------------------------------------------------------------------------
# quantum integrals

def theta_to_gamma(theta: Matrix, n: int) -> Matrix:
    """Curry ``theta(g (x) h)`` into ``gamma(h)(g)``; ``gamma`` is ``n^2 x n`` with
    ``End(L)`` flattened row-major."""
    F = theta.field
    return Matrix(F, n * n, n, tuple(tuple(theta[i, g * n + h] for h in range(n))
                                     for i in range(n) for g in range(n)))


def gamma_to_theta(gamma: Matrix, n: int) -> Matrix:
    F = gamma.field
    return Matrix(F, n, n * n, tuple(tuple(gamma[i * n + g, h] for g in range(n) for h in range(n))
                                     for i in range(n)))


@_verifier("QuantumIntegral")
def verify_quantum_integral(gamma: Matrix, L: HopfAlgebra) -> Report:
    e = entwining_yetter_drinfeld(L)
    return _report("total quantum integral", _theta_checks(gamma_to_theta(gamma, L.dim), e))


def solve_quantum_integral(L: HopfAlgebra, form: str = "theta") -> Witness | None:
    """gamma curried from theta on the Yetter-Drinfeld entwining; ``form="cocasimir"``
    solves the dual e-map instead."""
    e = entwining_yetter_drinfeld(L)
    if form == "cocasimir":
        return solve_cocasimir(e)
    if form != "theta":
        raise WrongMode(f"unknown form {form!r}")
    w = solve_theta(e)
    if w is None:
        return None
    return _finish("QuantumIntegral", theta_to_gamma(w.data, L.dim), L=L)


SOLVERS = {
    "integral": solve_normalized_integral,
    "dual-integral": solve_dual_normalized_integral,
    "casimir": solve_relative_casimir,
    "theta": solve_theta,
    "cocasimir": solve_cocasimir,
    "total-integral": solve_total_integral,
    "cointegral": solve_augmented_cointegral,
    "quantum-integral": solve_quantum_integral,
}
