"""Seeded random objects for the consistency suites.

``HOPFWIT_SEED`` fixes the seed; the default keeps runs reproducible.
"""

from __future__ import annotations

import os
import random

from .entwine import (
    EntwinedModule, EntwiningStructure, cofree_induction, entwined_conjugate,
    entwined_direct_sum, generated_submodule, restrict_entwined,
)
from .deform import _act, alpha_matrix
from .exactfield import Field, SimpleExtension
from .linalg import Matrix, hstack, kron, nullspace, rank, vstack
from .strucalg import hom_space

DEFAULT_SEED = 20240611


def seed() -> int:
    return int(os.environ.get("HOPFWIT_SEED", DEFAULT_SEED))


def make_rng(salt: int | str = 0) -> random.Random:
    return random.Random(f"{seed()}:{salt}")


def random_matrix(F: Field, rows: int, cols: int, rng: random.Random) -> Matrix:
    return Matrix(F, rows, cols, tuple(tuple(F.random(rng) for _ in range(cols))
                                       for _ in range(rows)))


def random_invertible(F: Field, n: int, rng: random.Random) -> Matrix:
    while True:
        P = random_matrix(F, n, n, rng)
        if rank(P) == n:
            return P


def random_combination(F: Field, basis, rng: random.Random, shape=None) -> Matrix:
    if not basis:
        return Matrix.zeros(F, *shape)
    out = basis[0].scale(F.random(rng))
    for B in basis[1:]:
        out = out + B.scale(F.random(rng))
    return out


def random_element_matrix(K: SimpleExtension, rows: int, cols: int, rng) -> list:
    n = K.degree
    return [[K.from_coeffs([K.base.random(rng) for _ in range(n)]) for _ in range(cols)]
            for _ in range(rows)]


def restrict_scalars(K: SimpleExtension, entries) -> Matrix:
    """A K-matrix as a k-matrix, each entry replaced by its multiplication block."""
    A = alpha_matrix(K)
    blocks = [[_act(w, A) for w in row] for row in entries]
    return vstack([hstack(r) for r in blocks])


def random_K_linear(K: SimpleExtension, rows: int, cols: int, rng) -> Matrix:
    return restrict_scalars(K, random_element_matrix(K, rows, cols, rng))


def random_summand(e: EntwiningStructure, rng: random.Random, v_dim: int = 1,
                   max_dim: int = 4, grouplike: Matrix | None = None):
    """A random entwined submodule ``Y`` of ``X = Hom(A, k^v) (x) C``.

    Returns ``(Y, X, B)`` with ``B`` the inclusion.  Generators are sparse
    random vectors, or random ``g``-coinvariants (``rho(x) = x (x) g``) when a
    grouplike ``g`` of C is given.
    """
    F = e.field
    X = cofree_induction(e, v_dim)
    if grouplike is not None:
        eqs = X.rho - kron(Matrix.identity(F, X.dim), grouplike)
        pool = [Matrix.column(F, v) for v in nullspace(eqs)]
    else:
        pool = [Matrix.unit(F, X.dim, 1, i, 0) for i in range(X.dim)]
    while True:
        k = rng.randint(1, 2)
        vecs = [random_combination(F, rng.sample(pool, min(len(pool), rng.randint(1, 2))), rng)
                for _ in range(k)]
        B = generated_submodule(X, vecs)
        if 0 < B.cols <= max_dim:
            return restrict_entwined(X, B), X, B


def random_conjugate(M: EntwinedModule, rng: random.Random) -> tuple[EntwinedModule, Matrix]:
    P = random_invertible(M.field, M.dim, rng)
    return entwined_conjugate(M, P), P


def random_entwined_morphism(M: EntwinedModule, N: EntwinedModule, rng) -> Matrix:
    basis = hom_space("entwined", M, N)
    return random_combination(M.field, basis, rng, (N.dim, M.dim))


def random_module_map(M: EntwinedModule, N: EntwinedModule, rng) -> Matrix:
    basis = hom_space("module", M, N)
    return random_combination(M.field, basis, rng, (N.dim, M.dim))


def random_split_monic(e: EntwiningStructure, M: EntwinedModule, M2: EntwinedModule, rng):
    """``i: M -> N = P(M (+) M2)`` and an A-linear (usually not colinear) ``p`` with ``p i = I``."""
    F = e.field
    S = entwined_direct_sum(M, M2)
    N, P = random_conjugate(S, rng)
    d, d2 = M.dim, M2.dim
    iota = vstack([Matrix.identity(F, d), Matrix.zeros(F, d2, d)])
    pi1 = hstack([Matrix.identity(F, d), Matrix.zeros(F, d, d2)])
    pi2 = hstack([Matrix.zeros(F, d2, d), Matrix.identity(F, d2)])
    q = random_module_map(M2, M, rng)
    Pi = P.inverse()
    i = P @ iota
    p = (pi1 + q @ pi2) @ Pi
    return N, i, p
