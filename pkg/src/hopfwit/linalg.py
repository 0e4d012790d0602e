"""Exact dense linear algebra over any field from :mod:`hopfwit.exactfield`.

Conventions used everywhere in the package:

* a linear map ``V -> W`` is a ``dim W x dim V`` matrix (columns are images
  of basis vectors), so ``g o f`` is ``g @ f``;
* tensor products are flattened row-major: ``e_i (x) f_j`` has index
  ``i * dim(F) + j``, and ``f (x) g`` is ``kron(f, g)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import DimensionMismatch, EmptySolutionSet, FieldMismatch
from .exactfield import Field, Mod, PrimeField

__all__ = [
    "Matrix", "SolutionSet", "rref", "solve_affine", "kron", "canonical_witness",
    "compose", "flatten_index", "unflatten_index", "permutation", "swap",
    "solve_matrix_equations", "matrix_equation_kernel", "hstack", "vstack",
    "direct_sum", "nullspace", "rank",
]


class Matrix:
    """Immutable dense matrix of exact scalars."""

    __slots__ = ("field", "rows", "cols", "_e")

    def __init__(self, field: Field, rows: int, cols: int, entries: tuple):
        self.field = field
        self.rows = rows
        self.cols = cols
        self._e = entries

    # construction -------------------------------------------------------
    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [tuple(field(x) for x in r) for r in rows]
        ncols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        return cls(field, len(rows), ncols, tuple(rows))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n))
                                      for i in range(n)))

    @classmethod
    def column(cls, field: Field, vec: Sequence) -> "Matrix":
        return cls(field, len(vec), 1, tuple((field(x),) for x in vec))

    @classmethod
    def row(cls, field: Field, vec: Sequence) -> "Matrix":
        return cls(field, 1, len(vec), (tuple(field(x) for x in vec),))

    @classmethod
    def unit(cls, field: Field, rows: int, cols: int, i: int, j: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, rows, cols, tuple(
            tuple(o if (r == i and c == j) else z for c in range(cols)) for r in range(rows)))

    @classmethod
    def from_flat(cls, field: Field, rows: int, cols: int, flat: Sequence) -> "Matrix":
        if len(flat) != rows * cols:
            raise DimensionMismatch(f"{len(flat)} entries for a {rows}x{cols} matrix")
        return cls(field, rows, cols, tuple(tuple(flat[r * cols:(r + 1) * cols])
                                            for r in range(rows)))

    # access --------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        return self._e

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row_vec(self, i: int) -> tuple:
        return self._e[i]

    def col_vec(self, j: int) -> tuple:
        return tuple(r[j] for r in self._e)

    def flat(self) -> tuple:
        return tuple(x for r in self._e for x in r)

    def is_zero(self) -> bool:
        return not any(x for r in self._e for x in r)

    # arithmetic ----------------------------------------------------------
    def _check_same(self, other: "Matrix"):
        if self.field is not other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.field, self.rows, self.cols, tuple(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(self._e, other._e)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.field, self.rows, self.cols, tuple(
            tuple(x - y for x, y in zip(r, s)) for r, s in zip(self._e, other._e)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, tuple(
            tuple(-x for x in r) for r in self._e))

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, self.rows, self.cols, tuple(
            tuple(c * x for x in r) for r in self._e))

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field is not other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        z = self.field.zero
        nz_rows = [[(j, b) for j, b in enumerate(r) if b] for r in other._e]
        out = []
        for r in self._e:
            acc = [z] * other.cols
            for k, a in enumerate(r):
                if a:
                    for j, b in nz_rows[k]:
                        acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return Matrix(self.field, self.rows, other.cols, tuple(out))

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows, tuple(zip(*self._e)) if self.rows
                      else tuple(() for _ in range(self.cols)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field is other.field and self.shape == other.shape
                and self._e == other._e)

    def __hash__(self) -> int:
        return hash((self.shape, self._e))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self._e)
        return f"Matrix({self.rows}x{self.cols} over {self.field}: [{body}])"

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices have inverses")
        n = self.rows
        red, piv = rref(hstack([self, Matrix.identity(self.field, n)]))
        if piv[:n] != tuple(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix(self.field, n, n, tuple(r[n:] for r in red._e))

    # serialisation ---------------------------------------------------------
    def to_json(self) -> dict:
        fmt = self.field.format
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[fmt(x) for x in r] for r in self._e]}

    @classmethod
    def from_json(cls, field: Field, obj: dict) -> "Matrix":
        m = cls.from_rows(field, [[str(x) for x in r] for r in obj["entries"]],
                          cols=obj.get("cols"))
        if m.rows != obj.get("rows", m.rows) or m.cols != obj.get("cols", m.cols):
            raise DimensionMismatch("matrix JSON dimensions do not match its entries")
        return m


# ---------------------------------------------------------------------------
# tensor helpers

def kron(a: Matrix, b: Matrix) -> Matrix:
    """``kron(a, b)[(i, j), (k, l)] = a[i, k] * b[j, l]`` in row-major flattening."""
    if a.field is not b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    z = a.field.zero
    out = []
    for ra in a._e:
        for rb in b._e:
            row = []
            for x in ra:
                if x:
                    row.extend(x * y for y in rb)
                else:
                    row.extend((z,) * b.cols)
            out.append(tuple(row))
    return Matrix(a.field, a.rows * b.rows, a.cols * b.cols, tuple(out))


def tensor(*maps: Matrix) -> Matrix:
    return reduce(kron, maps)


def compose(*maps: Matrix) -> Matrix:
    """``compose(f, g, h) == f @ g @ h``, i.e. h is applied first."""
    # multiply right to left so the narrow end stays narrow
    return reduce(lambda acc, m: m @ acc, reversed(maps[:-1]), maps[-1])


def flatten_index(idx: Sequence[int], dims: Sequence[int]) -> int:
    out = 0
    for i, d in zip(idx, dims):
        out = out * d + i
    return out


def unflatten_index(k: int, dims: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        k, r = divmod(k, d)
        out.append(r)
    return tuple(reversed(out))


def permutation(field: Field, dims: Sequence[int], perm: Sequence[int]) -> Matrix:
    """Map ``V_0 (x) ... (x) V_{n-1} -> V_{perm[0]} (x) ... (x) V_{perm[n-1]}``."""
    out_dims = [dims[p] for p in perm]
    n = 1
    for d in dims:
        n *= d
    z, o = field.zero, field.one
    target = [0] * n
    for idx in product(*(range(d) for d in dims)):
        target[flatten_index(idx, dims)] = flatten_index([idx[p] for p in perm], out_dims)
    rows = [[z] * n for _ in range(n)]
    for src, dst in enumerate(target):
        rows[dst][src] = o
    return Matrix(field, n, n, tuple(tuple(r) for r in rows))


def swap(field: Field, m: int, n: int) -> Matrix:
    """The flip ``V (x) W -> W (x) V`` for ``dim V = m``, ``dim W = n``."""
    return permutation(field, (m, n), (1, 0))


def hstack(ms: Sequence[Matrix]) -> Matrix:
    rows = ms[0].rows
    if any(m.rows != rows for m in ms):
        raise DimensionMismatch("hstack needs equal row counts")
    return Matrix(ms[0].field, rows, sum(m.cols for m in ms), tuple(
        tuple(x for m in ms for x in m._e[i]) for i in range(rows)))


def vstack(ms: Sequence[Matrix]) -> Matrix:
    cols = ms[0].cols
    if any(m.cols != cols for m in ms):
        raise DimensionMismatch("vstack needs equal column counts")
    return Matrix(ms[0].field, sum(m.rows for m in ms), cols,
                  tuple(r for m in ms for r in m._e))


def direct_sum(a: Matrix, b: Matrix) -> Matrix:
    top = hstack([a, Matrix.zeros(a.field, a.rows, b.cols)])
    bottom = hstack([Matrix.zeros(a.field, b.rows, a.cols), b])
    return vstack([top, bottom])


# ---------------------------------------------------------------------------
# elimination

def _rref_generic(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        inv = 1 / rows[r][c]
        pr = [x * inv if x else x for x in rows[r]]
        rows[r] = pr
        nz = [(j, x) for j, x in enumerate(pr) if j >= c and x]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f:
                ri = rows[i]
                for j, x in nz:
                    ri[j] = ri[j] - f * x
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns."""
    F = m.field
    if m.rows == 0 or m.cols == 0:
        return m, ()
    if isinstance(F, PrimeField) and F.p < _kernels.MAX_PRIME:
        arr = np.array([[x.value for x in r] for r in m._e], dtype=np.int64)
        red, piv = _kernels.rref_mod_p(arr, F.p)
        entries = tuple(tuple(Mod(int(v), F) for v in r) for r in red)
        return Matrix(F, m.rows, m.cols, entries), tuple(int(p) for p in piv)
    rows, piv = _rref_generic([list(r) for r in m._e], m.cols)
    return Matrix(F, m.rows, m.cols, tuple(tuple(r) for r in rows)), tuple(piv)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


@dataclass(frozen=True)
class SolutionSet:
    """Affine solution set ``particular + span(kernel)``; ``particular is None`` means empty.

    ``free`` lists the non-pivot coordinates.  The kernel basis is in the
    standard RREF form: kernel vector ``k`` has a one in ``free[k]`` and zeros
    in all other free coordinates.
    """

    field: Field
    particular: tuple | None
    kernel: tuple[tuple, ...]
    free: tuple[int, ...] = ()

    @property
    def empty(self) -> bool:
        return self.particular is None

    @property
    def dimension(self) -> int:
        return -1 if self.empty else len(self.kernel)

    def point(self, coeffs: Sequence) -> tuple:
        if self.empty:
            raise EmptySolutionSet("empty solution set has no points")
        out = list(self.particular)
        for c, k in zip(coeffs, self.kernel):
            c = self.field(c)
            if c:
                out = [x + c * y for x, y in zip(out, k)]
        return tuple(out)


def solve_affine(a: Matrix, b) -> SolutionSet:
    """All ``x`` with ``a @ x = b``; ``b`` is a vector or a single-column matrix."""
    F = a.field
    if isinstance(b, Matrix):
        if b.cols != 1:
            raise DimensionMismatch("right-hand side must be a single column")
        b = b.col_vec(0)
    b = tuple(F(x) for x in b)
    if len(b) != a.rows:
        raise DimensionMismatch(f"system has {a.rows} rows but rhs has {len(b)}")
    n = a.cols
    aug = Matrix(F, a.rows, n + 1, tuple(r + (y,) for r, y in zip(a._e, b)))
    red, piv = rref(aug)
    if piv and piv[-1] == n:
        return SolutionSet(F, None, (), ())
    z, one = F.zero, F.one
    pivset = set(piv)
    free = tuple(j for j in range(n) if j not in pivset)
    x = [z] * n
    for i, c in enumerate(piv):
        x[c] = red[i, n]
    kernel = []
    for f in free:
        v = [z] * n
        v[f] = one
        for i, c in enumerate(piv):
            v[c] = -red[i, f]
        kernel.append(tuple(v))
    return SolutionSet(F, tuple(x), tuple(kernel), free)


def nullspace(a: Matrix) -> tuple[tuple, ...]:
    return solve_affine(a, [0] * a.rows).kernel


def canonical_witness(s: SolutionSet) -> tuple:
    """The solution whose free coordinates are all zero."""
    if s.empty:
        raise EmptySolutionSet("no solution to select a witness from")
    x = list(s.particular)
    for f, k in zip(s.free, s.kernel):
        c = x[f]
        if c:
            x = [xi - c * ki for xi, ki in zip(x, k)]
    return tuple(x)


# ---------------------------------------------------------------------------
# linear equations in an unknown matrix

Equation = tuple[Callable[[Matrix], Matrix], Matrix]


def assemble(field: Field, shape: tuple[int, int], equations: Iterable[Equation]):
    """Coefficient matrix and rhs for ``f(X) = rhs`` with every ``f`` linear in X.

    Columns are found by probing ``f`` on the elementary matrices, so ``f``
    must be genuinely linear (no constant term).
    """
    rows, cols = shape
    equations = list(equations)
    probes = [Matrix.unit(field, rows, cols, i, j) for i in range(rows) for j in range(cols)]
    blocks = []
    rhs: list = []
    for f, target in equations:
        images = [f(E).flat() for E in probes]
        height = target.rows * target.cols
        if images and len(images[0]) != height:
            raise DimensionMismatch("equation image and right-hand side differ in shape")
        blocks.append([tuple(img[r] for img in images) for r in range(height)])
        rhs.extend(target.flat())
    coeff = tuple(r for blk in blocks for r in blk)
    return Matrix(field, len(coeff), rows * cols, coeff), tuple(rhs)


def solve_matrix_equations(field: Field, shape: tuple[int, int],
                           equations: Iterable[Equation]) -> tuple[Matrix | None, SolutionSet]:
    """Canonical solution ``X`` (or ``None``) plus the full solution set."""
    a, b = assemble(field, shape, equations)
    sol = solve_affine(a, b)
    if sol.empty:
        return None, sol
    return Matrix.from_flat(field, shape[0], shape[1], canonical_witness(sol)), sol


def matrix_equation_kernel(field: Field, shape: tuple[int, int],
                           equations: Iterable[Callable[[Matrix], Matrix]]) -> list[Matrix]:
    """Basis of ``{X : f(X) = 0 for all f}``."""
    equations = list(equations)
    if not equations:
        return [Matrix.unit(field, shape[0], shape[1], i, j)
                for i in range(shape[0]) for j in range(shape[1])]
    probe = Matrix.zeros(field, shape[0], shape[1])
    eqs = [(f, Matrix.zeros(field, *f(probe).shape)) for f in equations]
    a, _ = assemble(field, shape, eqs)
    return [Matrix.from_flat(field, shape[0], shape[1], v) for v in nullspace(a)]
