"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored lowest degree first with trailing zeros trimmed, so
``IntPolynomial((1, 2))`` is ``1 + 2x`` and the zero polynomial has no
coefficients at all.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

Rational = Union[int, Fraction]


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class IntPolynomial:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _trim(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    def __reduce__(self):
        return (IntPolynomial, (self.coeffs,))

    # -- construction -------------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [c])

    # -- basic protocol -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(("IntPolynomial", self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return self.human()

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def scale_shift(self, c: int, k: int) -> "IntPolynomial":
        """``c * x**k * self``."""
        return (self * c).shift(k)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def lowest_order(self) -> int:
        """Multiplicity of the root ``x = 0``."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("zero polynomial")

    def strip_x(self) -> Tuple[int, "IntPolynomial"]:
        m = self.lowest_order()
        return m, IntPolynomial(self.coeffs[m:])

    # -- evaluation ---------------------------------------------------------
    def __call__(self, x: Rational) -> Rational:
        return self.eval(x)

    def eval(self, x: Rational) -> Rational:
        """Horner evaluation; exact for ints and Fractions."""
        acc: Rational = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Rational) -> int:
        """Sign of ``self(x)`` using integer arithmetic only."""
        cs = self.coeffs
        if not cs:
            return 0
        if isinstance(x, int):
            a, b = x, 1
        else:
            a, b = x.numerator, x.denominator
        if b == 1:
            v = self.eval(a)
        else:
            # b**d * p(a/b), b > 0 so the sign is unchanged
            v = cs[-1]
            bp = 1
            for c in reversed(cs[:-1]):
                bp *= b
                v = v * a + c * bp
        return (v > 0) - (v < 0)

    # -- division over Q ----------------------------------------------------
    def divmod_q(self, other: "IntPolynomial") -> Tuple[List[Fraction], List[Fraction]]:
        """Quotient and remainder over the rationals (lists, low degree first)."""
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        d = other.coeffs
        lc = d[-1]
        q = [Fraction(0)] * max(len(r) - len(d) + 1, 0)
        while len(r) >= len(d) and r:
            shift = len(r) - len(d)
            f = r[-1] / lc
            q[shift] = f
            for i, c in enumerate(d):
                r[shift + i] -= f * c
            while r and r[-1] == 0:
                r.pop()
        return q, r

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient of an exact division whose result has integer coefficients."""
        q, r = self.divmod_q(other)
        if r:
            raise ValueError("division is not exact")
        if any(c.denominator != 1 for c in q):
            raise ValueError("quotient is not integral")
        return IntPolynomial(int(c) for c in q)

    # -- serialization ------------------------------------------------------
    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    def to_jsonable(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls(int(s) for s in json.loads(text))

    def human(self, var: str = "x") -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"


def _primitive_from_fractions(cs: Sequence[Fraction]) -> IntPolynomial:
    if not cs:
        return IntPolynomial()
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPolynomial(int(c * den) for c in cs).primitive()


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (``gcd(0, 0) = 0``)."""
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        _, r = a.divmod_q(b)
        a, b = b, _primitive_from_fractions(r)
    return a.primitive()


def rem_primitive(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of ``a / b`` over Q, scaled by a *positive* rational to be integral."""
    _, r = a.divmod_q(b)
    if not r:
        return IntPolynomial()
    den = 1
    for c in r:
        den = den * c.denominator // gcd(den, c.denominator)
    p = IntPolynomial(int(c * den) for c in r)
    g = p.content()
    return IntPolynomial(c // g for c in p.coeffs)


# Functional aliases used by callers that prefer plain functions.
def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def poly_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p - q


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def poly_scale_shift(p: IntPolynomial, c: int, k: int) -> IntPolynomial:
    return p.scale_shift(c, k)


def poly_eval_rational(p: IntPolynomial, q: Rational) -> Fraction:
    return Fraction(p.eval(Fraction(q)))


ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))
