import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfwit.errors import (
    DivisionByZero, FieldMismatch, NonMonicMinimalPolynomial, NonPrimeModulus, ParseError,
    ZeroDegreeExtension,
)
from hopfwit.exactfield import (
    GF, QQ, FieldSpec, field_construct, poly_deriv, poly_gcd, scalar_inv, spec_from_json,
    spec_to_json,
)

SPECS = {
    "QQ": FieldSpec.rationals(),
    "GF2": FieldSpec.prime(2),
    "GF5": FieldSpec.prime(5),
    "GF(3)(u)": FieldSpec.ratfunc(3, "u"),
    "Q(sqrt2)": FieldSpec.extension(FieldSpec.rationals(), ["-2", "0", "1"]),
    "GF2(s)[x]/(x^2-s)": FieldSpec.extension(FieldSpec.ratfunc(2, "s"), ["s", "0", "1"]),
    "GF3[x]/(x^2+1)": FieldSpec.extension(FieldSpec.prime(3), ["1", "0", "1"]),
}


def sqrt2():
    return field_construct(SPECS["Q(sqrt2)"])


def test_prime_field_addition():
    F = GF(5)
    assert F(3) + F(4) == F(2)


def test_extension_generator_squares_to_two():
    K = sqrt2()
    a = K.gen()
    assert a * a == K(2)


def test_ratfunc_cancellation():
    F = field_construct(FieldSpec.ratfunc(2, "u"))
    u = F.gen()
    q = (u * u + u) / u
    assert q == u + F.one
    assert F.format(q) == F.format(u + F.one)


@pytest.mark.parametrize("F, a, inv", [
    (QQ(), Fraction(2, 3), Fraction(3, 2)),
    (GF(5), 2, 3),
])
def test_scalar_inv_examples(F, a, inv):
    assert scalar_inv(F(a), F) == F(inv)


def test_scalar_inv_extension():
    K = sqrt2()
    a = K.gen()
    ai = scalar_inv(a)
    assert ai.coeffs == (Fraction(0), Fraction(1, 2))
    assert a * ai == K.one


@pytest.mark.parametrize("F", [QQ(), GF(7), field_construct(SPECS["GF(3)(u)"]), sqrt2()],
                         ids=["QQ", "GF7", "ratfunc", "ext"])
def test_inverse_of_zero_raises(F):
    with pytest.raises(DivisionByZero):
        scalar_inv(F.zero, F)


def test_construction_errors():
    with pytest.raises(NonPrimeModulus):
        GF(4)
    with pytest.raises(NonPrimeModulus):
        field_construct(FieldSpec.ratfunc(6))
    with pytest.raises(NonMonicMinimalPolynomial):
        field_construct(FieldSpec.extension(FieldSpec.rationals(), ["1", "2"]))
    with pytest.raises(ZeroDegreeExtension):
        field_construct(FieldSpec.extension(FieldSpec.rationals(), ["1"]))


def test_fields_are_unique_per_spec():
    assert GF(5) is GF(5)
    assert field_construct(SPECS["Q(sqrt2)"]) is sqrt2()


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldMismatch):
        GF(3)(1) + GF(5)(1)


def test_inseparable_field_frobenius():
    # alpha^2 = s, and the minimal polynomial x^2 - s has zero derivative in char 2
    L = field_construct(SPECS["GF2(s)[x]/(x^2-s)"])
    s = L.base.gen()
    a = L.gen()
    assert a * a == L(s)
    assert len(poly_gcd(L.modulus, poly_deriv(L.modulus))) > 1


@pytest.mark.parametrize("name", sorted(SPECS))
def test_field_axioms_random(name):
    F = field_construct(SPECS[name])
    rng = random.Random(f"axioms:{name}")
    for _ in range(1000):
        a, b, c = F.random(rng), F.random(rng), F.random(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a + F.zero == a and a * F.one == a
        assert a + (-a) == F.zero
        if a:
            assert a * scalar_inv(a, F) == F.one


@pytest.mark.parametrize("name", sorted(SPECS))
@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_parse_print_round_trip(name, seed):
    F = field_construct(SPECS[name])
    a = F.random(random.Random(seed), small=False)
    assert F.parse(F.format(a)) == a


@pytest.mark.parametrize("name", sorted(SPECS))
def test_spec_json_round_trip(name):
    spec = SPECS[name]
    assert spec_from_json(spec_to_json(spec)) == spec


@pytest.mark.parametrize("F, text", [(QQ(), "1/0"), (QQ(), "x"), (GF(5), "1/2/3")])
def test_parse_errors(F, text):
    with pytest.raises((ParseError, DivisionByZero)):
        F.parse(text)


def test_text_grammar():
    K = sqrt2()
    assert K.parse("[1,1/2]") == K.one + K.gen() * K(Fraction(1, 2))
    R = field_construct(SPECS["GF(3)(u)"])
    u = R.gen()
    assert R.parse("(u^2+1)/(u)") == (u * u + R.one) / u


def test_spec_json_errors():
    with pytest.raises(ParseError):
        spec_from_json({"kind": "Z"})
    with pytest.raises(ParseError):
        spec_from_json({"kind": "GFp"})
