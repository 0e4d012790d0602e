"""Exact scalar fields: Q, GF(p), GF(p)(u) and simple algebraic extensions.

Every field is built from a hashable :class:`FieldSpec` and hands out
immutable scalars that support ``+ - * /``, ``==`` and ``hash``.  Rationals
are :class:`fractions.Fraction`; the other fields use the element classes
below.  Scalars of the same field can be mixed freely with Python ints.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Any, Sequence

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NonMonicMinimalPolynomial,
    NonPrimeModulus,
    ParseError,
    ZeroDegreeExtension,
)

__all__ = [
    "FieldSpec", "Field", "Rationals", "PrimeField", "RationalFunctions",
    "SimpleExtension", "field_construct", "scalar_inv", "QQ", "GF",
    "spec_from_json", "spec_to_json",
    "poly_trim", "poly_add", "poly_sub", "poly_mul", "poly_divmod", "poly_gcd",
    "poly_xgcd", "poly_deriv",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


# --------------------------------------------------------------------------
# specs

@dataclass(frozen=True)
class FieldSpec:
    """Hashable description of a field.

    ``kind`` is one of ``"Q"``, ``"GFp"``, ``"RatFunc"``, ``"SimpleExt"``.
    For ``SimpleExt`` the minimal polynomial is stored as canonical strings
    over the base, lowest degree first, so that specs compare by value.
    """

    kind: str
    p: int | None = None
    var: str | None = None
    base: "FieldSpec | None" = None
    minpoly: tuple[str, ...] | None = None

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("Q")

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec("GFp", p=p)

    @staticmethod
    def ratfunc(p: int, var: str = "u") -> "FieldSpec":
        return FieldSpec("RatFunc", p=p, var=var)

    @staticmethod
    def extension(base: "FieldSpec", minpoly: Sequence[Any]) -> "FieldSpec":
        F = field_construct(base)
        coeffs = tuple(F.format(F(c)) for c in minpoly)
        return FieldSpec("SimpleExt", base=base, minpoly=coeffs)


def spec_to_json(spec: FieldSpec) -> dict:
    if spec.kind == "Q":
        return {"kind": "Q"}
    if spec.kind == "GFp":
        return {"kind": "GFp", "p": spec.p}
    if spec.kind == "RatFunc":
        return {"kind": "RatFunc", "p": spec.p, "var": spec.var}
    if spec.kind == "SimpleExt":
        return {"kind": "SimpleExt", "base": spec_to_json(spec.base),
                "minpoly": list(spec.minpoly)}
    raise ParseError(f"unknown field kind {spec.kind!r}")


def spec_from_json(obj: dict) -> FieldSpec:
    try:
        kind = obj["kind"]
        if kind == "Q":
            return FieldSpec.rationals()
        if kind == "GFp":
            return FieldSpec.prime(int(obj["p"]))
        if kind == "RatFunc":
            return FieldSpec.ratfunc(int(obj["p"]), str(obj.get("var", "u")))
        if kind == "SimpleExt":
            base = spec_from_json(obj["base"])
            return FieldSpec.extension(base, [str(c) for c in obj["minpoly"]])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed field spec: {obj!r}") from exc
    raise ParseError(f"unknown field kind {obj.get('kind')!r}")


# --------------------------------------------------------------------------
# dense polynomials over any field, as tuples of scalars (lowest degree first)

def poly_trim(a: Sequence) -> tuple:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return tuple(a)


def poly_add(a: Sequence, b: Sequence) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    return poly_trim([x + y for x, y in zip(a, b)] + list(a[len(b):]))


def poly_sub(a: Sequence, b: Sequence) -> tuple:
    return poly_add(a, [-y for y in b])


def poly_mul(a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return poly_trim(out)


def poly_divmod(a: Sequence, b: Sequence) -> tuple[tuple, tuple]:
    b = poly_trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = list(poly_trim(a))
    if len(r) < len(b):
        return (), tuple(r)
    inv_lc = 1 / b[-1]
    q = [b[-1] * 0] * (len(r) - len(b) + 1)
    for k in range(len(r) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv_lc
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] = r[k + j] - c * y
    return poly_trim(q), poly_trim(r[:len(b) - 1])


def poly_monic(a: Sequence) -> tuple:
    a = poly_trim(a)
    if not a:
        return a
    inv = 1 / a[-1]
    return tuple(x * inv for x in a)


def poly_gcd(a: Sequence, b: Sequence) -> tuple:
    """Monic gcd (the zero polynomial if both inputs vanish)."""
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_xgcd(a: Sequence, b: Sequence, one) -> tuple[tuple, tuple, tuple]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = poly_trim(a), poly_trim(b)
    s0, s1 = (one,), ()
    t0, t1 = (), (one,)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if not r0:
        return (), s0, t0
    inv = 1 / r0[-1]
    return (tuple(x * inv for x in r0), tuple(x * inv for x in s0),
            tuple(x * inv for x in t0))


def poly_deriv(a: Sequence) -> tuple:
    return poly_trim([a[i] * i for i in range(1, len(a))])


# --------------------------------------------------------------------------
# fields

class Field:
    """Common interface.  Concrete fields are obtained via :func:`field_construct`."""

    spec: FieldSpec
    characteristic: int

    def __call__(self, x) -> Any:
        return self.convert(x)

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return scalar_inv(a, self)

    def eq(self, a, b) -> bool:
        return a == b

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def random(self, rng, small: bool = True):
        raise NotImplementedError

    def random_nonzero(self, rng):
        while True:
            a = self.random(rng)
            if a:
                return a

    def __repr__(self) -> str:
        return f"<{self}>"


class Rationals(Field):
    characteristic = 0

    def __init__(self, spec: FieldSpec):
        self.spec = spec

    def convert(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatch(f"cannot convert {x!r} to a rational")

    def parse(self, text: str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {text!r}") from exc

    def format(self, a) -> str:
        return str(a)

    def random(self, rng, small: bool = True):
        bound = 3 if small else 50
        return Fraction(rng.randint(-bound, bound), rng.randint(1, 2 if small else 9))

    def __str__(self) -> str:
        return "QQ"


class Mod:
    """Residue class modulo a prime; ``value`` is kept in ``[0, p)``."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: "PrimeField"):
        self.value = value
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.field is not self.field:
                raise FieldMismatch(f"GF({self.field.p}) vs GF({other.field.p})")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod((self.value + o) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod((self.value - o) % self.field.p, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod((o - self.value) % self.field.p, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod((self.value * o) % self.field.p, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.value % self.field.p, self.field)

    def __pos__(self):
        return self

    def inverse(self) -> "Mod":
        if not self.value:
            raise DivisionByZero(f"0 has no inverse in GF({self.field.p})")
        return Mod(pow(self.value, -1, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Mod(o % self.field.p, self.field).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Mod):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"

    def __str__(self) -> str:
        return str(self.value)


class PrimeField(Field):
    def __init__(self, spec: FieldSpec):
        if spec.p is None or not is_prime(spec.p):
            raise NonPrimeModulus(f"{spec.p} is not prime")
        self.spec = spec
        self.p = spec.p
        self.characteristic = spec.p

    def convert(self, x):
        if isinstance(x, Mod):
            if x.field is not self:
                raise FieldMismatch(f"element of GF({x.field.p}) given to GF({self.p})")
            return x
        if isinstance(x, int):
            return Mod(x % self.p, self)
        if isinstance(x, Fraction):
            return Mod(x.numerator % self.p, self) / (x.denominator % self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatch(f"cannot convert {x!r} to GF({self.p})")

    def parse(self, text: str):
        text = text.strip()
        try:
            if "/" in text:
                n, d = text.split("/")
                return self.convert(int(n)) / self.convert(int(d))
            return self.convert(int(text))
        except ValueError as exc:
            raise ParseError(f"bad GF({self.p}) element {text!r}") from exc

    def format(self, a) -> str:
        return str(a.value)

    def random(self, rng, small: bool = True):
        return Mod(rng.randrange(self.p), self)

    def __str__(self) -> str:
        return f"GF({self.p})"


class RatFunc:
    """Reduced fraction ``num/den`` of polynomials over GF(p), ``den`` monic.

    Coefficients are plain ints in ``[0, p)``, lowest degree first.
    """

    __slots__ = ("num", "den", "field")

    def __init__(self, num: tuple, den: tuple, field: "RationalFunctions"):
        self.num = num
        self.den = den
        self.field = field

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field is not self.field:
                raise FieldMismatch("rational functions over different fields")
            return other
        if isinstance(other, (int, Mod)):
            return self.field.convert(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        return F._make(F._padd(F._pmul(self.num, o.den), F._pmul(o.num, self.den)),
                       F._pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return RatFunc(tuple(-c % p for c in self.num), self.den, self.field)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        return F._make(F._pmul(self.num, o.num), F._pmul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise DivisionByZero("division by the zero rational function")
        return self.field._make(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Mod)):
            other = self.field.convert(other)
        if isinstance(other, RatFunc):
            return (self.field is other.field and self.num == other.num
                    and self.den == other.den)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.spec, self.num, self.den))

    def __repr__(self) -> str:
        return self.field.format(self)


class RationalFunctions(Field):
    """GF(p)(var), the field of rational functions in one variable."""

    _TERM = re.compile(r"^(?:(\d+)\*?)?(?:([A-Za-z_]\w*)(?:\^(\d+))?)?$")

    def __init__(self, spec: FieldSpec):
        if spec.p is None or not is_prime(spec.p):
            raise NonPrimeModulus(f"{spec.p} is not prime")
        self.spec = spec
        self.p = spec.p
        self.var = spec.var or "u"
        self.characteristic = spec.p

    # int-coefficient polynomial helpers mod p
    def _trim(self, a):
        a = list(a)
        while a and not a[-1]:
            a.pop()
        return tuple(a)

    def _padd(self, a, b):
        p = self.p
        if len(a) < len(b):
            a, b = b, a
        return self._trim([(x + y) % p for x, y in zip(a, b)] + list(a[len(b):]))

    def _pmul(self, a, b):
        if not a or not b:
            return ()
        p = self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._trim([c % p for c in out])

    def _pdivmod(self, a, b):
        p = self.p
        r = list(a)
        inv = pow(b[-1], -1, p)
        q = [0] * max(len(r) - len(b) + 1, 0)
        for k in range(len(r) - len(b), -1, -1):
            c = r[k + len(b) - 1] * inv % p
            q[k] = c
            if c:
                for j, y in enumerate(b):
                    r[k + j] = (r[k + j] - c * y) % p
        return self._trim(q), self._trim(r[:len(b) - 1])

    def _pgcd(self, a, b):
        while b:
            a, b = b, self._pdivmod(a, b)[1]
        return a

    def _make(self, num, den) -> RatFunc:
        num, den = self._trim(num), self._trim(den)
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return RatFunc((), (1,), self)
        g = self._pgcd(num, den)
        if len(g) > 1:
            num = self._pdivmod(num, g)[0]
            den = self._pdivmod(den, g)[0]
        lc = pow(den[-1], -1, self.p)
        num = tuple(c * lc % self.p for c in num)
        den = tuple(c * lc % self.p for c in den)
        return RatFunc(num, den, self)

    def gen(self) -> RatFunc:
        """The transcendental generator ``var``."""
        return RatFunc((0, 1), (1,), self)

    def convert(self, x):
        if isinstance(x, RatFunc):
            if x.field is not self:
                raise FieldMismatch("rational function from a different field")
            return x
        if isinstance(x, Mod):
            x = x.value
        if isinstance(x, int):
            return self._make((x % self.p,), (1,))
        if isinstance(x, Fraction):
            return self.convert(x.numerator) / self.convert(x.denominator)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatch(f"cannot convert {x!r} to {self}")

    def _parse_poly(self, text: str) -> tuple:
        text = text.replace(" ", "")
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        if not text:
            raise ParseError("empty polynomial")
        coeffs: dict[int, int] = {}
        for term in re.split(r"(?=[+-])", text):
            if not term:
                continue
            sign = -1 if term[0] == "-" else 1
            term = term.lstrip("+-")
            m = self._TERM.match(term)
            if not m or not term or (m.group(2) and m.group(2) != self.var):
                raise ParseError(f"bad term {term!r} in polynomial over {self}")
            c = int(m.group(1)) if m.group(1) else 1
            k = (int(m.group(3)) if m.group(3) else 1) if m.group(2) else 0
            coeffs[k] = coeffs.get(k, 0) + sign * c
        deg = max(coeffs)
        return self._trim([coeffs.get(k, 0) % self.p for k in range(deg + 1)])

    def parse(self, text: str):
        text = text.strip()
        depth, split = 0, None
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                split = i
        if split is None:
            return self._make(self._parse_poly(text), (1,))
        num = self._parse_poly(text[:split])
        den = self._parse_poly(text[split + 1:])
        return self._make(num, den)

    def _format_poly(self, a) -> str:
        if not a:
            return "0"
        terms = []
        for k in range(len(a) - 1, -1, -1):
            c = a[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*{self.var}")
            else:
                terms.append(f"{c}*{self.var}^{k}")
        return "+".join(terms)

    def format(self, a) -> str:
        return f"({self._format_poly(a.num)})/({self._format_poly(a.den)})"

    def random(self, rng, small: bool = True):
        deg = 2 if small else 4
        num = tuple(rng.randrange(self.p) for _ in range(rng.randint(0, deg) + 1))
        den = tuple(rng.randrange(self.p) for _ in range(rng.randint(0, deg))) + (1,)
        return self._make(self._trim(num), den)

    def __str__(self) -> str:
        return f"GF({self.p})({self.var})"


class ExtElement:
    """Element of ``base[X]/(minpoly)`` as a coefficient vector of length ``deg``."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: tuple, field: "SimpleExtension"):
        self.coeffs = coeffs
        self.field = field

    def _coerce(self, other):
        if isinstance(other, ExtElement):
            if other.field is not self.field:
                raise FieldMismatch("elements of different extensions")
            return other
        try:
            return self.field.convert(other)
        except FieldMismatch:
            return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtElement(tuple(x + y for x, y in zip(self.coeffs, o.coeffs)), self.field)

    __radd__ = __add__

    def __neg__(self):
        return ExtElement(tuple(-x for x in self.coeffs), self.field)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtElement(tuple(x - y for x, y in zip(self.coeffs, o.coeffs)), self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        return F._reduce(poly_mul(poly_trim(self.coeffs), poly_trim(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "ExtElement":
        F = self.field
        a = poly_trim(self.coeffs)
        if not a:
            raise DivisionByZero(f"0 has no inverse in {F}")
        g, s, _ = poly_xgcd(a, F.modulus, F.base.one)
        if len(g) != 1:
            raise DivisionByZero(f"{F.format(self)} is a zero divisor in {F}")
        return F._reduce(s)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtElement):
            try:
                other = self.field.convert(other)
            except (FieldMismatch, ParseError):
                return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.spec, self.coeffs))

    def __repr__(self) -> str:
        return self.field.format(self)


class SimpleExtension(Field):
    """``base[X]/(p)`` for a monic ``p`` of degree >= 1.

    ``p`` need not be irreducible for arithmetic to work, but then
    inverting a zero divisor raises :class:`DivisionByZero`.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.base = field_construct(spec.base)
        self.characteristic = self.base.characteristic
        modulus = poly_trim([self.base.parse(c) for c in spec.minpoly])
        if len(modulus) < 2:
            raise ZeroDegreeExtension("minimal polynomial must have degree >= 1")
        if modulus[-1] != self.base.one:
            raise NonMonicMinimalPolynomial("minimal polynomial must be monic")
        self.modulus = modulus
        self.degree = len(modulus) - 1

    def _reduce(self, poly) -> ExtElement:
        r = poly_divmod(poly, self.modulus)[1] if len(poly) > self.degree else poly
        z = self.base.zero
        return ExtElement(tuple(r) + (z,) * (self.degree - len(r)), self)

    def gen(self) -> ExtElement:
        """The class of X."""
        return self._reduce((self.base.zero, self.base.one))

    def from_coeffs(self, coeffs: Sequence) -> ExtElement:
        return self._reduce(poly_trim([self.base(c) for c in coeffs]))

    def convert(self, x):
        if isinstance(x, ExtElement):
            if x.field is self:
                return x
            raise FieldMismatch("element of a different extension")
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (list, tuple)):
            return self.from_coeffs(x)
        return self._reduce(poly_trim([self.base(x)]))

    def parse(self, text: str):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            return self.convert(self.base.parse(text))
        parts, depth, cur = [], 0, []
        for ch in text[1:-1]:
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            if ch == "," and depth == 0:
                parts.append("".join(cur))
                cur = []
            else:
                cur.append(ch)
        parts.append("".join(cur))
        if len(parts) != self.degree:
            raise ParseError(f"expected {self.degree} coefficients in {text!r}")
        return self.from_coeffs([self.base.parse(s) for s in parts])

    def format(self, a) -> str:
        return "[" + ",".join(self.base.format(c) for c in a.coeffs) + "]"

    def random(self, rng, small: bool = True):
        return ExtElement(tuple(self.base.random(rng, small) for _ in range(self.degree)), self)

    def __str__(self) -> str:
        return f"{self.base}[X]/({','.join(self.spec.minpoly)})"


@lru_cache(maxsize=None)
def field_construct(spec: FieldSpec) -> Field:
    """Return the (cached, hence unique) field for ``spec``."""
    if spec.kind == "Q":
        return Rationals(spec)
    if spec.kind == "GFp":
        return PrimeField(spec)
    if spec.kind == "RatFunc":
        return RationalFunctions(spec)
    if spec.kind == "SimpleExt":
        if spec.base is None or spec.minpoly is None:
            raise ZeroDegreeExtension("extension needs a base and a minimal polynomial")
        return SimpleExtension(spec)
    raise ParseError(f"unknown field kind {spec.kind!r}")


def scalar_inv(a, field: Field | None = None):
    """Multiplicative inverse; raises :class:`DivisionByZero` on zero."""
    if isinstance(a, Fraction):
        if not a:
            raise DivisionByZero("1/0 over QQ")
        return 1 / a
    if field is not None and isinstance(a, int):
        a = field(a)
    return a.inverse()


def QQ() -> Rationals:
    return field_construct(FieldSpec.rationals())


def GF(p: int) -> PrimeField:
    return field_construct(FieldSpec.prime(p))
