"""Algebras, coalgebras, Hopf algebras, modules and comodules by structure constants.

Every structure map is a :class:`~hopfwit.linalg.Matrix` in the package-wide
flattening: multiplication ``A (x) A -> A`` is ``n x n^2``, the unit is
``n x 1``, comultiplication ``n^2 x n``, the counit ``1 x n``.  Only right
modules and right comodules are modelled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, InvalidGroupTable, StructureMismatch
from .exactfield import Field, FieldSpec, field_construct
from .linalg import (
    Matrix, compose, kron, matrix_equation_kernel, solve_matrix_equations, swap, tensor,
)
from .report import Check, Report, compare

__all__ = [
    "Algebra", "Coalgebra", "HopfAlgebra", "Module", "Comodule",
    "check_structure", "build_example", "group_algebra", "sweedler_h4", "dual_of",
    "simple_extension_algebra", "hom_space", "coaction_retraction",
    "cyclic_group_table", "S3_TABLE", "regular_module", "trivial_module",
    "regular_comodule", "trivial_comodule", "is_algebra_map", "left_mult", "right_mult",
]


def _I(F: Field, n: int) -> Matrix:
    return Matrix.identity(F, n)


@dataclass(frozen=True)
class Algebra:
    field: Field
    dim: int
    mult: Matrix
    unit: Matrix

    def __post_init__(self):
        n = self.dim
        if self.mult.shape != (n, n * n) or self.unit.shape != (n, 1):
            raise DimensionMismatch(f"algebra of dim {n} with mult {self.mult.shape}, "
                                    f"unit {self.unit.shape}")

    @classmethod
    def from_table(cls, F: Field, table: Sequence, unit: Sequence) -> "Algebra":
        """``table[i][j][k]`` is the coefficient of e_k in e_i e_j."""
        n = len(table)
        rows = [[F(table[i][j][k]) for i in range(n) for j in range(n)] for k in range(n)]
        return cls(F, n, Matrix.from_rows(F, rows), Matrix.column(F, unit))

    def table(self) -> list:
        n = self.dim
        return [[[self.mult[k, i * n + j] for k in range(n)] for j in range(n)]
                for i in range(n)]

    def basis(self, i: int) -> Matrix:
        return Matrix.unit(self.field, self.dim, 1, i, 0)

    def product(self, x: Matrix, y: Matrix) -> Matrix:
        return self.mult @ kron(x, y)


@dataclass(frozen=True)
class Coalgebra:
    field: Field
    dim: int
    comult: Matrix
    counit: Matrix

    def __post_init__(self):
        n = self.dim
        if self.comult.shape != (n * n, n) or self.counit.shape != (1, n):
            raise DimensionMismatch(f"coalgebra of dim {n} with comult {self.comult.shape}, "
                                    f"counit {self.counit.shape}")

    @classmethod
    def from_table(cls, F: Field, table: Sequence, counit: Sequence) -> "Coalgebra":
        """``table[i][j][k]`` is the coefficient of e_j (x) e_k in Delta(e_i)."""
        n = len(table)
        rows = [[F(table[i][j][k]) for i in range(n)] for j in range(n) for k in range(n)]
        return cls(F, n, Matrix.from_rows(F, rows), Matrix.row(F, counit))

    def table(self) -> list:
        n = self.dim
        return [[[self.comult[j * n + k, i] for k in range(n)] for j in range(n)]
                for i in range(n)]

    def comult2(self) -> Matrix:
        """``c -> c_(1) (x) c_(2) (x) c_(3)``."""
        return kron(self.comult, _I(self.field, self.dim)) @ self.comult

    def comult3(self) -> Matrix:
        n = self.dim
        return kron(self.comult, _I(self.field, n * n)) @ self.comult2()


@dataclass(frozen=True)
class HopfAlgebra:
    """Bialgebra on one space; ``antipode`` may be ``None`` for a bare bialgebra."""

    algebra: Algebra
    coalgebra: Coalgebra
    antipode: Matrix | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim or self.algebra.field is not self.coalgebra.field:
            raise DimensionMismatch("algebra and coalgebra parts live on different spaces")
        if self.antipode is not None and self.antipode.shape != (self.dim, self.dim):
            raise DimensionMismatch("antipode must be square")

    field = property(lambda self: self.algebra.field)
    dim = property(lambda self: self.algebra.dim)
    mult = property(lambda self: self.algebra.mult)
    unit = property(lambda self: self.algebra.unit)
    comult = property(lambda self: self.coalgebra.comult)
    counit = property(lambda self: self.coalgebra.counit)


@dataclass(frozen=True)
class Module:
    """Right module; ``action[j]`` is the matrix of ``m -> m . e_j``."""

    algebra: Algebra
    action: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.action) != self.algebra.dim:
            raise DimensionMismatch("need one action matrix per algebra basis element")
        d = self.action[0].rows if self.action else 0
        if any(R.shape != (d, d) for R in self.action):
            raise DimensionMismatch("action matrices must be square of equal size")

    @property
    def dim(self) -> int:
        return self.action[0].rows

    @property
    def field(self) -> Field:
        return self.algebra.field

    def act_map(self) -> Matrix:
        """The action as one map ``M (x) A -> M``."""
        return act_map(self.action, self.algebra.dim)

    def act(self, a: Matrix) -> Matrix:
        """Matrix of ``m -> m . a`` for an arbitrary element ``a`` (column vector)."""
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for j, c in enumerate(a.col_vec(0)):
            if c:
                out = out + self.action[j].scale(c)
        return out


@dataclass(frozen=True)
class Comodule:
    """Right comodule with coaction ``rho: M -> M (x) C``."""

    coalgebra: Coalgebra
    rho: Matrix

    def __post_init__(self):
        n = self.coalgebra.dim
        if self.rho.rows != self.rho.cols * n:
            raise DimensionMismatch(f"coaction of shape {self.rho.shape} over a {n}-dim coalgebra")

    @property
    def dim(self) -> int:
        return self.rho.cols

    @property
    def field(self) -> Field:
        return self.coalgebra.field


def act_map(action: Sequence[Matrix], n_alg: int) -> Matrix:
    F = action[0].field
    d = action[0].rows
    rows = [[action[j][v, p] for p in range(d) for j in range(n_alg)] for v in range(d)]
    return Matrix(F, d, d * n_alg, tuple(tuple(r) for r in rows))


def actions_from_map(mu: Matrix, n_alg: int) -> tuple[Matrix, ...]:
    d = mu.rows
    F = mu.field
    return tuple(Matrix(F, d, d, tuple(tuple(mu[v, p * n_alg + j] for p in range(d))
                                       for v in range(d)))
                 for j in range(n_alg))


def left_mult(A: Algebra, x: Matrix) -> Matrix:
    return A.mult @ kron(x, _I(A.field, A.dim))


def right_mult(A: Algebra, x: Matrix) -> Matrix:
    return A.mult @ kron(_I(A.field, A.dim), x)


# ---------------------------------------------------------------------------
# axiom checks

def _algebra_checks(A: Algebra) -> list[Check]:
    F, n = A.field, A.dim
    I = _I(F, n)
    m, u = A.mult, A.unit
    return [
        compare("associativity", m @ kron(m, I), m @ kron(I, m), (n, n, n)),
        compare("left unit", m @ kron(u, I), I, (n,)),
        compare("right unit", m @ kron(I, u), I, (n,)),
    ]


def _coalgebra_checks(C: Coalgebra) -> list[Check]:
    F, n = C.field, C.dim
    I = _I(F, n)
    d, e = C.comult, C.counit
    return [
        compare("coassociativity", kron(d, I) @ d, kron(I, d) @ d, (n,)),
        compare("left counit", kron(e, I) @ d, I, (n,)),
        compare("right counit", kron(I, e) @ d, I, (n,)),
    ]


def _bialgebra_checks(H: HopfAlgebra) -> list[Check]:
    F, n = H.field, H.dim
    I = _I(F, n)
    m, u, d, e = H.mult, H.unit, H.comult, H.counit
    mid = tensor(I, swap(F, n, n), I)
    one = Matrix.identity(F, 1)
    return [
        compare("comultiplication is multiplicative",
                d @ m, compose(kron(m, m), mid, kron(d, d)), (n, n)),
        compare("comultiplication is unital", d @ u, kron(u, u)),
        compare("counit is multiplicative", e @ m, kron(e, e), (n, n)),
        compare("counit is unital", e @ u, one),
    ]


def _antipode_checks(H: HopfAlgebra) -> list[Check]:
    if H.antipode is None:
        return [Check("antipode present", False, detail="no antipode given")]
    F, n = H.field, H.dim
    I = _I(F, n)
    S = H.antipode
    ue = H.unit @ H.counit
    return [
        compare("antipode left convolution inverse", compose(H.mult, kron(S, I), H.comult), ue, (n,)),
        compare("antipode right convolution inverse", compose(H.mult, kron(I, S), H.comult), ue, (n,)),
    ]


def _module_checks(M: Module) -> list[Check]:
    A = M.algebra
    F, n, d = A.field, A.dim, M.dim
    mu = M.act_map()
    return [
        compare("action associativity", mu @ kron(mu, _I(F, n)), mu @ kron(_I(F, d), A.mult),
                (d, n, n)),
        compare("unit acts as identity", mu @ kron(_I(F, d), A.unit), _I(F, d), (d,)),
    ]


def _comodule_checks(M: Comodule) -> list[Check]:
    C = M.coalgebra
    F, n, d = C.field, C.dim, M.dim
    rho = M.rho
    return [
        compare("coaction coassociativity", kron(rho, _I(F, n)) @ rho,
                kron(_I(F, d), C.comult) @ rho, (d,)),
        compare("coaction counit", kron(_I(F, d), C.counit) @ rho, _I(F, d), (d,)),
    ]


def check_structure(p, level: str) -> Report:
    """Evaluate every axiom of ``level`` on ``p``; one check line per axiom."""
    levels = ("algebra", "coalgebra", "bialgebra", "hopf", "module", "comodule")
    if level not in levels:
        raise StructureMismatch(f"unknown level {level!r}; expected one of {levels}")
    report = Report(f"{level} axioms")
    if level == "module":
        if not isinstance(p, Module):
            raise StructureMismatch("module level needs a Module")
        report.checks.extend(_module_checks(p))
        return report
    if level == "comodule":
        if not isinstance(p, Comodule):
            raise StructureMismatch("comodule level needs a Comodule")
        report.checks.extend(_comodule_checks(p))
        return report
    if level == "algebra":
        A = p.algebra if isinstance(p, HopfAlgebra) else p
        if not isinstance(A, Algebra):
            raise StructureMismatch("algebra level needs an algebra presentation")
        report.checks.extend(_algebra_checks(A))
        return report
    if level == "coalgebra":
        C = p.coalgebra if isinstance(p, HopfAlgebra) else p
        if not isinstance(C, Coalgebra):
            raise StructureMismatch("coalgebra level needs a coalgebra presentation")
        report.checks.extend(_coalgebra_checks(C))
        return report
    if not isinstance(p, HopfAlgebra):
        raise StructureMismatch(f"{level} level needs a bialgebra/Hopf presentation")
    report.checks.extend(_algebra_checks(p.algebra))
    report.checks.extend(_coalgebra_checks(p.coalgebra))
    report.checks.extend(_bialgebra_checks(p))
    if level == "hopf":
        report.checks.extend(_antipode_checks(p))
    report.notes.extend(p.notes)
    return report


def is_algebra_map(f: Matrix, A: Algebra, B: Algebra) -> bool:
    """``f: A -> B`` (a ``dim B x dim A`` matrix) preserves products and units."""
    if f.shape != (B.dim, A.dim):
        return False
    return (f @ A.mult == B.mult @ kron(f, f)) and (f @ A.unit == B.unit)


# ---------------------------------------------------------------------------
# builders

S3_TABLE = (
    # elements: e, (12), (13), (23), (123), (132); entry [i][j] = index of g_i g_j
    (0, 1, 2, 3, 4, 5),
    (1, 0, 4, 5, 2, 3),
    (2, 5, 0, 4, 3, 1),
    (3, 4, 5, 0, 1, 2),
    (4, 3, 1, 2, 5, 0),
    (5, 2, 3, 1, 0, 4),
)


def cyclic_group_table(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def _validate_group(table: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise InvalidGroupTable("group table must be a non-empty square")
    if any(not (isinstance(x, int) and 0 <= x < n) for r in table for x in r):
        raise InvalidGroupTable("group table entries must be indices 0..n-1")
    ident = next((e for e in range(n)
                  if all(table[e][g] == g and table[g][e] == g for g in range(n))), None)
    if ident is None:
        raise InvalidGroupTable("no identity element")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise InvalidGroupTable(f"not associative at {(a, b, c)}")
    inv = []
    for g in range(n):
        h = next((h for h in range(n) if table[g][h] == ident), None)
        if h is None:
            raise InvalidGroupTable(f"element {g} has no inverse")
        inv.append(h)
    return ident, inv


def group_algebra(table: Sequence[Sequence[int]], F: Field) -> HopfAlgebra:
    """kG with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1."""
    ident, inv = _validate_group(table)
    n = len(table)
    z, o = F.zero, F.one
    mult = Matrix(F, n, n * n, tuple(
        tuple(o if table[i][j] == k else z for i in range(n) for j in range(n))
        for k in range(n)))
    unit = Matrix.unit(F, n, 1, ident, 0)
    comult = Matrix(F, n * n, n, tuple(
        tuple(o if (i == j == k) else z for i in range(n))
        for j in range(n) for k in range(n)))
    counit = Matrix(F, 1, n, ((o,) * n,))
    S = Matrix(F, n, n, tuple(tuple(o if inv[j] == i else z for j in range(n))
                              for i in range(n)))
    return HopfAlgebra(Algebra(F, n, mult, unit), Coalgebra(F, n, comult, counit), S)


def sweedler_h4(F: Field) -> HopfAlgebra:
    """Sweedler's 4-dim Hopf algebra on the basis (1, g, x, gx)."""
    one, g, x, gx = range(4)
    prod = {
        (g, g): (one, 1), (g, x): (gx, 1), (g, gx): (x, 1),
        (x, g): (gx, -1), (gx, g): (x, -1),
    }
    table = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for i in range(4):
        table[one][i][i] = 1
        table[i][one][i] = 1
    for (a, b), (c, s) in prod.items():
        table[a][b][c] = s
    # x.x = x.gx = gx.x = gx.gx = 0
    cotable = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    cotable[one][one][one] = 1
    cotable[g][g][g] = 1
    cotable[x][x][one] = 1   # x (x) 1
    cotable[x][g][x] = 1     # g (x) x
    cotable[gx][gx][g] = 1   # gx (x) g
    cotable[gx][one][gx] = 1  # 1 (x) gx
    A = Algebra.from_table(F, table, [1, 0, 0, 0])
    C = Coalgebra.from_table(F, cotable, [1, 1, 0, 0])
    S = Matrix.from_rows(F, [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],   # S(gx) = x
        [0, 0, -1, 0],  # S(x) = -gx
    ])
    notes = ("degenerate signs: characteristic 2 identifies xg with gx",) \
        if F.characteristic == 2 else ()
    return HopfAlgebra(A, C, S, notes)


def dual_of(p):
    """Transpose structure tensors: algebra <-> coalgebra on the dual basis."""
    if isinstance(p, Algebra):
        return Coalgebra(p.field, p.dim, p.mult.T, p.unit.T)
    if isinstance(p, Coalgebra):
        return Algebra(p.field, p.dim, p.comult.T, p.counit.T)
    if isinstance(p, HopfAlgebra):
        S = p.antipode.T if p.antipode is not None else None
        return HopfAlgebra(dual_of(p.coalgebra), dual_of(p.algebra), S, p.notes)
    raise StructureMismatch(f"cannot dualise {type(p).__name__}")


def simple_extension_algebra(K: Field) -> Algebra:
    """A simple extension field ``K = k[X]/(p)`` as a k-algebra on ``1, a, ..., a^(n-1)``."""
    k, n = K.base, K.degree
    basis = [K.from_coeffs([1 if i == j else 0 for j in range(n)]) for i in range(n)]
    table = [[list((basis[i] * basis[j]).coeffs) for j in range(n)] for i in range(n)]
    return Algebra.from_table(k, table, [1] + [0] * (n - 1))


def build_example(name: str, F: Field | FieldSpec, *, table=None, of=None):
    """Catalog constructor: ``group_algebra``, ``sweedler_h4``, ``dual_of`` or ``trivial``."""
    if isinstance(F, FieldSpec):
        F = field_construct(F)
    if name == "group_algebra":
        if table is None:
            raise InvalidGroupTable("group_algebra needs a table")
        return group_algebra(table, F)
    if name == "sweedler_h4":
        return sweedler_h4(F)
    if name == "trivial":
        return group_algebra(((0,),), F)
    if name == "dual_of":
        return dual_of(of)
    raise StructureMismatch(f"unknown example {name!r}")


# ---------------------------------------------------------------------------
# standard modules and comodules

def regular_module(A: Algebra) -> Module:
    return Module(A, tuple(right_mult(A, A.basis(j)) for j in range(A.dim)))


def trivial_module(H: HopfAlgebra) -> Module:
    """k with x . h = eps(h) x."""
    F = H.field
    return Module(H.algebra, tuple(Matrix.from_rows(F, [[H.counit[0, j]]]) for j in range(H.dim)))


def regular_comodule(C: Coalgebra) -> Comodule:
    return Comodule(C, C.comult)


def trivial_comodule(H: HopfAlgebra) -> Comodule:
    """k with rho(1) = 1 (x) 1_H."""
    return Comodule(H.coalgebra, H.unit)


# ---------------------------------------------------------------------------
# hom spaces and splittings

def _module_part(M):
    if isinstance(M, Module):
        return M
    part = getattr(M, "module", None)
    if part is None:
        raise StructureMismatch(f"{type(M).__name__} carries no module structure")
    return part


def _comodule_part(M):
    if isinstance(M, Comodule):
        return M
    part = getattr(M, "comodule", None)
    if part is None:
        raise StructureMismatch(f"{type(M).__name__} carries no comodule structure")
    return part


def _module_equations(M: Module, N: Module):
    if M.algebra != N.algebra:
        raise StructureMismatch("modules over different algebras")
    return [lambda f, Rm=Rm, Rn=Rn: f @ Rm - Rn @ f for Rm, Rn in zip(M.action, N.action)]


def _comodule_equations(M: Comodule, N: Comodule):
    if M.coalgebra != N.coalgebra:
        raise StructureMismatch("comodules over different coalgebras")
    I = _I(M.field, M.coalgebra.dim)
    return [lambda f: kron(f, I) @ M.rho - N.rho @ f]


def hom_space(kind: str, M, N) -> list[Matrix]:
    """Basis of the structure-preserving maps ``M -> N`` (``dim N x dim M`` matrices)."""
    if kind == "module":
        M, N = _module_part(M), _module_part(N)
        eqs = _module_equations(M, N)
    elif kind == "comodule":
        M, N = _comodule_part(M), _comodule_part(N)
        eqs = _comodule_equations(M, N)
    elif kind == "entwined":
        eqs = (_module_equations(_module_part(M), _module_part(N))
               + _comodule_equations(_comodule_part(M), _comodule_part(N)))
    else:
        raise StructureMismatch(f"unknown hom kind {kind!r}")
    return matrix_equation_kernel(M.field, (N.dim, M.dim), eqs)


def coaction_retraction(M: Comodule) -> Matrix | None:
    """Colinear ``lam: M (x) C -> M`` with ``lam o rho = id``, or ``None``.

    ``M (x) C`` carries the cofree coaction ``id (x) Delta``.
    """
    M = _comodule_part(M)
    C = M.coalgebra
    F, d, n = M.field, M.dim, C.dim
    IC = _I(F, n)
    cofree = kron(_I(F, d), C.comult)
    eqs = [
        (lambda lam: M.rho @ lam - kron(lam, IC) @ cofree, Matrix.zeros(F, d * n, d * n)),
        (lambda lam: lam @ M.rho, _I(F, d)),
    ]
    lam, _ = solve_matrix_equations(F, (d, d * n), eqs)
    return lam
