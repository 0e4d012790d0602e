"""Deformation maps: turn maps split at the weak level into morphisms at the strong level.

Two instances are provided.  For a separable primitive field extension
``K = k(a)`` the averaging

    P(f)(m) = p'(a)^-1 sum_i a^(-i-1) (sum_{j<=i} c_j a^j) f(a^i m)

projects k-linear maps onto K-linear ones (``p(X) = X^n - sum c_i X^i``).
For an entwining with a theta map, ``P(g) = nu_N o (g (x) I_C) o rho_M``
turns A-linear maps into colinear ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .entwine import EntwinedModule, EntwiningStructure
from .errors import (
    DimensionMismatch, InseparableMinimalPolynomial, InvalidDatum, InvalidTheta, NotARetraction,
    StructureMismatch,
)
from .exactfield import Field, SimpleExtension, poly_deriv, poly_gcd
from .linalg import Matrix, compose, direct_sum, kron
from .witness import Witness, verify_theta

__all__ = [
    "PrimitiveExtensionData", "alpha_matrix", "kspace", "field_ext_deform", "is_k_linear",
    "colinear_retraction_map", "deform_to_colinear", "maschke_split",
]


@dataclass(frozen=True)
class PrimitiveExtensionData:
    K: SimpleExtension

    def __post_init__(self):
        K = self.K
        if not isinstance(K, SimpleExtension):
            raise InvalidDatum("need a simple extension field")
        p = K.modulus
        if len(poly_gcd(p, poly_deriv(p))) != 1:
            raise InseparableMinimalPolynomial(f"minimal polynomial of {K} has repeated roots")
        if not p[0]:
            raise InvalidDatum("minimal polynomial is divisible by X, hence reducible")

    @property
    def base(self) -> Field:
        return self.K.base

    @property
    def degree(self) -> int:
        return self.K.degree

    @property
    def c(self) -> tuple:
        """``c_0 .. c_{n-1}`` with ``p(X) = X^n - sum c_i X^i``."""
        return tuple(-x for x in self.K.modulus[:-1])

    @property
    def alpha(self):
        return self.K.gen()

    def dprime_alpha(self):
        """``p'(a)``."""
        K = self.K
        return K._reduce(poly_deriv(K.modulus))

    def weights(self) -> list:
        """``w_i = p'(a)^-1 a^(-i-1) sum_{j<=i} c_j a^j`` in K."""
        K, a = self.K, self.alpha
        inv_d = self.dprime_alpha().inverse()
        a_inv = a.inverse()
        out = []
        partial = K.zero
        a_pow = K.one
        a_neg = a_inv
        for i, ci in enumerate(self.c):
            partial = partial + K(ci) * a_pow
            out.append(inv_d * a_neg * partial)
            a_pow = a_pow * a
            a_neg = a_neg * a_inv
        return out


def alpha_matrix(K: SimpleExtension) -> Matrix:
    """Multiplication by the generator on K in the basis ``1, a, .., a^(n-1)``."""
    n = K.degree
    a = K.gen()
    cols = [(a * K.from_coeffs([1 if i == j else 0 for j in range(n)])).coeffs for i in range(n)]
    return Matrix(K.base, n, n, tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))


def kspace(K: SimpleExtension, r: int) -> Matrix:
    """Generator action on ``K^r`` viewed as a k-space of dimension ``r * deg``."""
    A = alpha_matrix(K)
    out = A
    for _ in range(r - 1):
        out = direct_sum(out, A)
    return out if r else Matrix.zeros(K.base, 0, 0)


def _act(w, alpha_N: Matrix) -> Matrix:
    """Matrix of an element ``w`` of K acting through ``alpha_N``."""
    F = alpha_N.field
    out = Matrix.zeros(F, alpha_N.rows, alpha_N.cols)
    power = Matrix.identity(F, alpha_N.rows)
    for c in w.coeffs:
        if c:
            out = out + power.scale(c)
        power = alpha_N @ power
    return out


def is_k_linear(f: Matrix, alpha_M: Matrix, alpha_N: Matrix) -> bool:
    """Whether ``f`` commutes with the generator actions, i.e. is K-linear."""
    return f @ alpha_M == alpha_N @ f


def field_ext_deform(d: PrimitiveExtensionData, f: Matrix, alpha_M: Matrix,
                     alpha_N: Matrix) -> Matrix:
    """K-linear ``P(f)`` for a k-linear ``f: M -> N`` between K-spaces."""
    if alpha_M.rows != alpha_M.cols or alpha_N.rows != alpha_N.cols:
        raise DimensionMismatch("generator actions must be square")
    if f.shape != (alpha_N.rows, alpha_M.rows):
        raise DimensionMismatch(f"map of shape {f.shape} between spaces of dims "
                                f"{alpha_M.rows}, {alpha_N.rows}")
    F = d.base
    out = Matrix.zeros(F, *f.shape)
    power = Matrix.identity(F, alpha_M.rows)
    for w in d.weights():
        out = out + compose(_act(w, alpha_N), f, power)
        power = power @ alpha_M
    return out


def _theta_matrix(e: EntwiningStructure, theta) -> Matrix:
    if isinstance(theta, Witness):
        if theta.tag != "Theta":
            raise InvalidTheta(f"expected a Theta witness, got {theta.tag}")
        theta = theta.data
    if not verify_theta(theta, e).passed:
        raise InvalidTheta("theta fails its defining conditions")
    return theta


def colinear_retraction_map(e: EntwiningStructure, theta: Matrix, N: EntwinedModule) -> Matrix:
    """``nu_N(n (x) c) = n_[0] theta(n_[1] (x) c)``, a colinear retraction of ``rho_N``."""
    F = e.field
    IC = Matrix.identity(F, e.nC)
    return compose(N.module.act_map(), kron(Matrix.identity(F, N.dim), theta), kron(N.rho, IC))


def deform_to_colinear(e: EntwiningStructure, theta, g: Matrix, M: EntwinedModule,
                       N: EntwinedModule) -> Matrix:
    """``P(g) = nu_N o (g (x) I_C) o rho_M``; colinear, and equal to ``g`` when ``g`` is
    already a morphism of entwined modules."""
    theta = _theta_matrix(e, theta)
    if g.shape != (N.dim, M.dim):
        raise DimensionMismatch(f"map of shape {g.shape} from dim {M.dim} to dim {N.dim}")
    IC = Matrix.identity(e.field, e.nC)
    return compose(colinear_retraction_map(e, theta, N), kron(g, IC), M.rho)


def maschke_split(e: EntwiningStructure, theta, i: Matrix, p: Matrix, M: EntwinedModule,
                  N: EntwinedModule) -> Matrix:
    """Colinear retraction of the entwined monic ``i: M -> N`` from an A-linear one ``p``."""
    if p.shape != (M.dim, N.dim) or i.shape != (N.dim, M.dim):
        raise DimensionMismatch("i and p have incompatible shapes")
    if p @ i != Matrix.identity(e.field, M.dim):
        raise NotARetraction("p o i is not the identity")
    r = deform_to_colinear(e, theta, p, N, M)
    if r @ i != Matrix.identity(e.field, M.dim):
        raise StructureMismatch("i is not a morphism of entwined modules")
    return r
