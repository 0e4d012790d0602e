import random
from fractions import Fraction

import pytest

from hopfwit.deform import (
    PrimitiveExtensionData, alpha_matrix, deform_to_colinear, field_ext_deform, is_k_linear,
    kspace, maschke_split,
)
from hopfwit.entwine import (
    entwined_from_parts, entwining_relative_hopf, entwining_yetter_drinfeld, split_monic,
    trivial_algebra,
)
from hopfwit.errors import (
    DimensionMismatch, InseparableMinimalPolynomial, InvalidDatum, InvalidTheta, NotARetraction,
)
from hopfwit.exactfield import GF, QQ, FieldSpec, field_construct
from hopfwit.fuzz import (
    make_rng, random_entwined_morphism, random_K_linear, random_matrix, random_module_map,
    random_split_monic, random_summand,
)
from hopfwit.linalg import Matrix, kron
from hopfwit.strucalg import cyclic_group_table, group_algebra, sweedler_h4
from hopfwit.witness import solve_theta, solve_total_integral


def sqrt2():
    return field_construct(FieldSpec.extension(FieldSpec.rationals(), ["-2", "0", "1"]))


def cubic():
    # Q(a), a^3 = a + 1: irreducible (no rational roots), separable
    return field_construct(FieldSpec.extension(FieldSpec.rationals(), ["-1", "-1", "0", "1"]))


def test_primitive_data():
    d = PrimitiveExtensionData(sqrt2())
    K = d.K
    assert d.c == (2, 0)
    assert d.dprime_alpha() == K.gen() * K(2)
    w = d.weights()
    assert w[0] == K(Fraction(1, 2))
    assert w[1] == K.gen() * K(Fraction(1, 4))


def test_inseparable_and_reducible_rejected():
    L = field_construct(FieldSpec.extension(FieldSpec.ratfunc(2, "s"), ["s", "0", "1"]))
    with pytest.raises(InseparableMinimalPolynomial):
        PrimitiveExtensionData(L)
    with pytest.raises(InvalidDatum):
        PrimitiveExtensionData(field_construct(
            FieldSpec.extension(FieldSpec.rationals(), ["0", "-1", "1"])))
    with pytest.raises(InvalidDatum):
        PrimitiveExtensionData(QQ())


def test_sqrt2_examples():
    F = QQ()
    d = PrimitiveExtensionData(sqrt2())
    A = kspace(d.K, 1)
    sigma = Matrix.from_rows(F, [[1, 0], [0, -1]])
    assert field_ext_deform(d, sigma, A, A).is_zero()
    proj = Matrix.from_rows(F, [[1, 0], [0, 0]])
    assert field_ext_deform(d, proj, A, A) == Matrix.identity(F, 2).scale(F(Fraction(1, 2)))
    assert field_ext_deform(d, A, A, A) == A


def test_closed_form_for_sqrt2():
    # by hand for p = X^2 - 2: P(f) = f/2 + a f a/4, and a f a/4 = a f a^-1/2 since a^2 = 2
    F = QQ()
    d = PrimitiveExtensionData(sqrt2())
    A = kspace(d.K, 1)
    Ai = A.inverse()
    rng = random.Random(7)
    for _ in range(20):
        f = random_matrix(F, 2, 2, rng)
        expect = (f + A @ f @ Ai).scale(F(Fraction(1, 2)))
        assert field_ext_deform(d, f, A, A) == expect


@pytest.mark.parametrize("K", [sqrt2(), cubic(),
                               field_construct(FieldSpec.extension(FieldSpec.prime(3),
                                                                   ["1", "0", "1"]))],
                         ids=["sqrt2", "cubic", "GF9"])
def test_projector_properties(K):
    d = PrimitiveExtensionData(K)
    F = K.base
    rng = random.Random(str(K))
    for _ in range(10):
        a, b = rng.randint(1, 2), rng.randint(1, 2)
        AM, AN = kspace(K, a), kspace(K, b)
        f = random_matrix(F, AN.rows, AM.rows, rng)
        P = field_ext_deform(d, f, AM, AN)
        assert is_k_linear(P, AM, AN)
        assert field_ext_deform(d, P, AM, AN) == P
        g = random_K_linear(K, b, a, rng)
        assert field_ext_deform(d, g, AM, AN) == g


def test_naturality():
    K = sqrt2()
    d = PrimitiveExtensionData(K)
    F = K.base
    rng = random.Random(11)
    for _ in range(20):
        a, b, c, e = (rng.randint(1, 2) for _ in range(4))
        u = random_K_linear(K, b, a, rng)
        v = random_K_linear(K, e, c, rng)
        hmap = random_matrix(F, 2 * c, 2 * b, rng)
        lhs = field_ext_deform(d, v @ hmap @ u, kspace(K, a), kspace(K, e))
        rhs = v @ field_ext_deform(d, hmap, kspace(K, b), kspace(K, c)) @ u
        assert lhs == rhs


def test_field_ext_deform_shape_errors():
    d = PrimitiveExtensionData(sqrt2())
    A = kspace(d.K, 1)
    with pytest.raises(DimensionMismatch):
        field_ext_deform(d, Matrix.identity(QQ(), 3), A, A)


def yd_setup():
    F = QQ()
    H = group_algebra(cyclic_group_table(2), F)
    e = entwining_yetter_drinfeld(H)
    return F, e, solve_theta(e)


def test_deform_to_colinear_yd():
    F, e, th = yd_setup()
    rng = make_rng("deform-yd")
    IC = Matrix.identity(F, 2)
    for _ in range(5):
        M, _, _ = random_summand(e, rng)
        N, _, _ = random_summand(e, rng)
        assert deform_to_colinear(e, th, Matrix.identity(F, M.dim), M, M) == \
            Matrix.identity(F, M.dim)
        g = random_module_map(M, N, rng)
        P = deform_to_colinear(e, th, g, M, N)
        assert kron(P, IC) @ M.rho == N.rho @ P
        h = random_entwined_morphism(M, N, rng)
        assert deform_to_colinear(e, th, h, M, N) == h


def test_maschke_split_yd():
    F, e, th = yd_setup()
    rng = make_rng("maschke-yd")
    for _ in range(5):
        M, _, _ = random_summand(e, rng)
        M2, _, _ = random_summand(e, rng)
        N, i, p = random_split_monic(e, M, M2, rng)
        r = maschke_split(e, th, i, p, M, N)
        assert r @ i == Matrix.identity(F, M.dim)
        rent = split_monic(e, i, M, N)
        assert maschke_split(e, th, i, rent, M, N) == rent
    # isomorphism case: r is the inverse
    M, _, _ = random_summand(e, rng)
    I = Matrix.identity(F, M.dim)
    assert maschke_split(e, th, I, I, M, M) == I


def test_maschke_split_errors():
    F, e, th = yd_setup()
    M, _, _ = random_summand(e, make_rng("err"))
    I = Matrix.identity(F, M.dim)
    with pytest.raises(NotARetraction):
        maschke_split(e, th, I, I.scale(F(2)), M, M)
    with pytest.raises(InvalidTheta):
        deform_to_colinear(e, Matrix.zeros(F, 2, 4), I, M, M)


def test_dichotomy_without_theta():
    # (H4, k): no theta, and the unit k -> H4 has a linear but no colinear retraction
    F = QQ()
    H = sweedler_h4(F)
    e = entwining_relative_hopf(H, trivial_algebra(F), H.unit)
    assert solve_theta(e) is None and solve_total_integral(H, trivial_algebra(F), H.unit) is None
    one = (Matrix.identity(F, 1),)
    k = entwined_from_parts(e, one, H.unit)
    reg = entwined_from_parts(e, tuple(Matrix.identity(F, 4) for _ in range(1)), H.comult)
    i = H.unit
    assert split_monic(e, i, k, reg, "module") is not None
    assert split_monic(e, i, k, reg, "comodule") is None


def test_theta_guarantees_direct_split():
    F, e, th = yd_setup()
    rng = make_rng("direct")
    for _ in range(3):
        M, _, _ = random_summand(e, rng)
        M2, _, _ = random_summand(e, rng)
        N, i, p = random_split_monic(e, M, M2, rng)
        assert split_monic(e, i, M, N, "comodule") is not None
