import itertools

import pytest

from hopfwit.errors import DimensionMismatch, InvalidGroupTable, StructureMismatch
from hopfwit.exactfield import GF, QQ, FieldSpec
from hopfwit.linalg import Matrix, kron, solve_affine
from hopfwit.strucalg import (
    Algebra, HopfAlgebra, S3_TABLE, build_example, check_structure, coaction_retraction,
    cyclic_group_table, dual_of, group_algebra, hom_space, regular_comodule, regular_module,
    sweedler_h4, trivial_comodule, trivial_module,
)

FIELDS = [QQ(), GF(2), GF(3), GF(5)]
IDS = ["QQ", "GF2", "GF3", "GF5"]


@pytest.mark.parametrize("F", FIELDS, ids=IDS)
@pytest.mark.parametrize("table", [cyclic_group_table(2), cyclic_group_table(3), S3_TABLE],
                         ids=["C2", "C3", "S3"])
def test_group_algebras_are_hopf(F, table):
    H = group_algebra(table, F)
    rep = check_structure(H, "hopf")
    assert rep.passed, str(rep)


def test_group_algebra_structure():
    F = QQ()
    H = group_algebra(S3_TABLE, F)
    # Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1
    for g in range(6):
        e = H.algebra.basis(g)
        assert H.comult @ e == kron(e, e)
        assert (H.counit @ e)[0, 0] == 1
        inv = next(h for h in range(6) if S3_TABLE[g][h] == 0)
        assert H.antipode @ e == H.algebra.basis(inv)


def test_broken_unit_fails_at_basis_zero():
    F = QQ()
    H = group_algebra(cyclic_group_table(2), F)
    A = Algebra(F, 2, H.mult, Matrix.zeros(F, 2, 1))
    rep = check_structure(A, "algebra")
    bad = [c for c in rep.checks if not c.passed]
    assert bad and all("unit" in c.name for c in bad)
    assert bad[0].at == (0,)


@pytest.mark.parametrize("F", [QQ(), GF(3)], ids=["QQ", "GF3"])
def test_sweedler_h4_hopf(F):
    H = sweedler_h4(F)
    assert check_structure(H, "hopf").passed
    x = H.algebra.basis(2)
    assert sum(1 for v in (H.comult @ x).col_vec(0) if v) == 2


def test_sweedler_h4_oracle_products():
    # independent oracle: words in g, x reduced by g^2 = 1, x^2 = 0, xg = -gx
    F = QQ()
    H = sweedler_h4(F)
    words = {0: (1, 0, 0), 1: (1, 1, 0), 2: (1, 0, 1), 3: (1, 1, 1)}  # sign, #g, #x as "g^a x^b"
    index = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}

    def mul(i, j):
        s1, a1, b1 = words[i]
        s2, a2, b2 = words[j]
        if b1 + b2 > 1:
            return None
        sign = s1 * s2 * (-1 if (b1 and a2) else 1)  # move x past g
        return sign, index[((a1 + a2) % 2, b1 + b2)]

    for i, j in itertools.product(range(4), repeat=2):
        got = H.algebra.product(H.algebra.basis(i), H.algebra.basis(j))
        expect = mul(i, j)
        if expect is None:
            assert got.is_zero()
        else:
            assert got == H.algebra.basis(expect[1]).scale(F(expect[0]))


def test_h4_char2_is_flagged():
    H = sweedler_h4(GF(2))
    rep = check_structure(H, "hopf")
    assert any("characteristic 2" in n for n in rep.notes)


def test_dual_of_twice_is_identity():
    H = group_algebra(cyclic_group_table(3), QQ())
    assert dual_of(dual_of(H)) == H
    assert check_structure(dual_of(H), "hopf").passed


def test_invalid_group_tables():
    with pytest.raises(InvalidGroupTable):
        group_algebra(((0, 1), (1, 1)), QQ())
    with pytest.raises(InvalidGroupTable):
        group_algebra(((0, 2), (1, 0)), QQ())


def test_build_example():
    H = build_example("group_algebra", FieldSpec.prime(5), table=cyclic_group_table(2))
    assert H.dim == 2 and H.field is GF(5)
    assert build_example("trivial", QQ()).dim == 1
    with pytest.raises(StructureMismatch):
        build_example("nope", QQ())


def test_missing_antipode_fails_hopf_level():
    H = group_algebra(cyclic_group_table(2), QQ())
    B = HopfAlgebra(H.algebra, H.coalgebra, None)
    assert check_structure(B, "bialgebra").passed
    assert not check_structure(B, "hopf").passed


def test_bad_antipode_reports_failure():
    F = QQ()
    H = group_algebra(cyclic_group_table(3), F)
    B = HopfAlgebra(H.algebra, H.coalgebra, Matrix.identity(F, 3))
    assert not check_structure(B, "hopf").passed


def test_level_mismatch():
    with pytest.raises(StructureMismatch):
        check_structure(group_algebra(cyclic_group_table(2), QQ()).algebra, "hopf")


def test_dimension_mismatch():
    F = QQ()
    with pytest.raises(DimensionMismatch):
        Algebra(F, 2, Matrix.zeros(F, 2, 2), Matrix.zeros(F, 2, 1))


def test_modules_and_comodules():
    H = group_algebra(cyclic_group_table(2), QQ())
    assert check_structure(regular_module(H.algebra), "module").passed
    assert check_structure(trivial_module(H), "module").passed
    assert check_structure(regular_comodule(H.coalgebra), "comodule").passed
    assert check_structure(trivial_comodule(H), "comodule").passed


def test_hom_space_dimensions():
    H = group_algebra(cyclic_group_table(2), QQ())
    R = regular_module(H.algebra)
    assert len(hom_space("module", R, R)) == 2
    assert len(hom_space("comodule", trivial_comodule(H), regular_comodule(H.coalgebra))) == 1
    for M in (R,):
        basis = hom_space("module", M, M)
        # identity lies in the span
        cols = Matrix.from_rows(QQ(), [list(x) for x in zip(*[b.flat() for b in basis])])
        assert not solve_affine(cols, Matrix.identity(QQ(), 2).flat()).empty


def test_coaction_retraction():
    F = QQ()
    H = group_algebra(cyclic_group_table(2), F)
    C = regular_comodule(H.coalgebra)
    lam = coaction_retraction(C)
    assert lam is not None and lam @ C.rho == Matrix.identity(F, 2)
    assert coaction_retraction(trivial_comodule(H)) is not None
    # over GF(2) the dual of kC2 has no normalized integral; its trivial comodule is not injective
    D = dual_of(group_algebra(cyclic_group_table(2), GF(2)))
    assert coaction_retraction(trivial_comodule(D)) is None
