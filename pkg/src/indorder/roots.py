"""Certified real roots of integer polynomials.

Everything here is exact: Sturm chains over the integers, bisection on
dyadic rationals, and sign tests by integer evaluation.  Floating point is
only used to format decimals for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor
from typing import List, Optional, Tuple, Union

from .errors import NoRealRoot, ZeroPolynomial
from .graph import Graph
from .indpoly import independence_polynomial
from .poly import IntPolynomial, poly_gcd, rem_primitive

Rational = Union[int, Fraction]


@lru_cache(maxsize=65536)
def square_free_part(p: IntPolynomial) -> IntPolynomial:
    """``p / gcd(p, p')`` made primitive with positive leading coefficient."""
    if p.is_zero():
        raise ZeroPolynomial("square-free part of the zero polynomial")
    if p.degree <= 0:
        return IntPolynomial((1,))
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return p.primitive().exact_div(g).primitive()


@lru_cache(maxsize=65536)
def sturm_chain(p: IntPolynomial) -> Tuple[IntPolynomial, ...]:
    """Sturm sequence with every member scaled by a positive constant."""
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        r = rem_primitive(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(-r)
    return tuple(q for q in chain if not q.is_zero())


def _variations(chain: Tuple[IntPolynomial, ...], x: Rational) -> int:
    count = 0
    last = 0
    for q in chain:
        s = q.sign_at(x)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def count_real_roots(p: IntPolynomial, lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots in ``(lo, hi]``; ``p`` must be square-free."""
    if p.degree <= 0:
        return 0
    if hi <= lo:
        return 0
    chain = sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi)


def count_closed(p: IntPolynomial, lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots in ``[lo, hi]``."""
    if lo == hi:
        return int(p.sign_at(lo) == 0)
    return count_real_roots(p, lo, hi) + int(p.sign_at(lo) == 0)


def root_bound(p: IntPolynomial) -> int:
    """A power of two strictly above every |root| (Cauchy bound)."""
    lc = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    bound = 1 + Fraction(m, lc)
    b = 1
    while b <= bound:
        b *= 2
    return b


def _nonroot_between(p: IntPolynomial, a: Fraction, b: Fraction) -> Fraction:
    """A dyadic point strictly inside ``(a, b)`` where ``p`` is non-zero."""
    m = (a + b) / 2
    if p.sign_at(m):
        return m
    step = (b - a) / 4
    while True:
        for cand in (m + step, m - step):
            if p.sign_at(cand):
                return cand
        step /= 2


@dataclass(frozen=True)
class AlgebraicRoot:
    """Unique root of the square-free ``defpoly`` in ``[lo, hi]``.

    Either ``lo == hi`` (an exact rational root) or neither endpoint is a
    root, so the endpoint signs differ.
    """

    defpoly: IntPolynomial
    lo: Fraction
    hi: Fraction

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def bisect(self) -> "AlgebraicRoot":
        if self.is_exact:
            return self
        p = self.defpoly
        m = (self.lo + self.hi) / 2
        s = p.sign_at(m)
        if s == 0:
            return AlgebraicRoot(p, m, m)
        if s == p.sign_at(self.lo):
            return AlgebraicRoot(p, m, self.hi)
        return AlgebraicRoot(p, self.lo, m)

    def refine(self, width: Rational) -> "AlgebraicRoot":
        if width <= 0:
            raise ValueError("width must be positive")
        r = self
        while r.hi - r.lo > width:
            r = r.bisect()
        return r

    def exact_value(self) -> Optional[Fraction]:
        """The root as a rational if it is one, else ``None``.

        A rational root ``a/b`` of a primitive integer polynomial has ``b``
        dividing the leading coefficient ``L``, so it equals ``k/L`` for an
        integer ``k``.  Shrinking the interval below ``1/L`` leaves at most
        one candidate to test.
        """
        if self.is_exact:
            return self.lo
        L = abs(self.defpoly.leading)
        r = self.refine(Fraction(1, 2 * L))
        if r.is_exact:
            return r.lo
        for k in range(ceil(r.lo * L), floor(r.hi * L) + 1):
            q = Fraction(k, L)
            if self.defpoly.sign_at(q) == 0:
                return q
        return None

    def to_exact(self) -> "AlgebraicRoot":
        q = self.exact_value()
        return AlgebraicRoot(self.defpoly, q, q) if q is not None else self

    def decimal(self, digits: int = 20) -> str:
        """Decimal string correct to about ``digits`` significant places."""
        if self.is_exact:
            q = self.lo
        else:
            r = self.refine(Fraction(1, 10 ** (digits + 2)))
            q = r.midpoint
        with localcontext() as ctx:
            ctx.prec = digits
            return str(+(Decimal(q.numerator) / Decimal(q.denominator)))

    def to_jsonable(self) -> dict:
        return {
            "defpoly": self.defpoly.to_jsonable(),
            "lo": str(self.lo),
            "hi": str(self.hi),
            "exact": self.is_exact,
        }

    def __float__(self):
        return float(self.midpoint)


@lru_cache(maxsize=65536)
def largest_real_root(p: IntPolynomial) -> AlgebraicRoot:
    """Isolating interval for the largest real root of ``p``.

    Rational roots are returned exactly (``lo == hi``).
    """
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no largest root")
    P = square_free_part(p)
    if P.degree < 1:
        raise NoRealRoot(f"{p.human()} is constant")
    B = root_bound(P)
    if P.sign_at(0) != 0 and all(c >= 0 for c in P.coeffs):
        upper = Fraction(0)  # positive coefficients: no roots in [0, inf)
    else:
        upper = Fraction(B)
    a, b = Fraction(-B), upper
    if count_real_roots(P, a, b) == 0:
        raise NoRealRoot(f"{p.human()} has no real root")
    # invariant: P(a), P(b) != 0; at least one root in (a, b]; none above b
    while count_real_roots(P, a, b) > 1:
        m = _nonroot_between(P, a, b)
        if count_real_roots(P, m, b) >= 1:
            a = m
        else:
            b = m
    return AlgebraicRoot(P, a, b).to_exact()


def xi(g: Graph) -> AlgebraicRoot:
    """Largest real root of the independence polynomial of ``g``."""
    if g.n < 1:
        raise ValueError("xi is undefined for the empty graph")
    return xi_of_poly(independence_polynomial(g))


def xi_of_poly(p: IntPolynomial) -> AlgebraicRoot:
    r = largest_real_root(p)
    if not r.hi < 0 and not (r.is_exact and r.lo < 0):
        # interval may touch 0 only from the bracket; tighten until negative
        while r.hi >= 0:
            r = r.bisect()
        if r.lo >= 0:
            raise AssertionError(f"independence polynomial {p.human()} has a non-negative root")
    return r


def refine(r: AlgebraicRoot, width: Rational) -> AlgebraicRoot:
    return r.refine(width)


def sign_at_root(p: IntPolynomial, r: AlgebraicRoot) -> int:
    """Exact sign of ``p`` at the algebraic number ``r``."""
    if p.is_zero():
        return 0
    if r.is_exact:
        return p.sign_at(r.lo)
    if p.degree == 0:
        return p.sign_at(0)
    q = square_free_part(p)
    g = poly_gcd(q, r.defpoly)
    if g.degree >= 1 and count_closed(g, r.lo, r.hi) >= 1:
        return 0
    while count_closed(q, r.lo, r.hi) != 0:
        r = r.bisect()
        if r.is_exact:
            return p.sign_at(r.lo)
    return p.sign_at(r.lo)


def compare_roots(r1: AlgebraicRoot, r2: AlgebraicRoot) -> int:
    """``-1``, ``0`` or ``1`` as the first root is below, equal to, above the second."""
    if r1.is_exact and r2.is_exact:
        return (r1.lo > r2.lo) - (r1.lo < r2.lo)
    if r1.is_exact:
        return -compare_roots(r2, r1)
    if r2.is_exact:
        # r1's interval holds exactly one root of its defpoly
        if r1.lo <= r2.lo <= r1.hi and r1.defpoly.sign_at(r2.lo) == 0:
            return 0
        # r1 has a single root in [lo, hi]; compare positions by refinement
        while r1.lo <= r2.lo <= r1.hi:
            r1 = r1.bisect()
            if r1.is_exact:
                return (r1.lo > r2.lo) - (r1.lo < r2.lo)
        return 1 if r1.lo > r2.lo else -1
    g = poly_gcd(r1.defpoly, r2.defpoly)
    common = g.degree >= 1 and sign_at_root(g, r1) == 0 and sign_at_root(g, r2) == 0
    if common:
        # both are roots of g: equal iff the same root of g
        a1, a2 = r1, r2
        while count_closed(g, a1.lo, a1.hi) > 1:
            a1 = a1.bisect()
        while count_closed(g, a2.lo, a2.hi) > 1:
            a2 = a2.bisect()
        lo, hi = max(a1.lo, a2.lo), min(a1.hi, a2.hi)
        if lo <= hi and count_closed(g, lo, hi) == 1:
            return 0
        r1, r2 = a1, a2
    while True:
        if r1.hi < r2.lo:
            return -1
        if r2.hi < r1.lo:
            return 1
        if r1.is_exact or r2.is_exact:
            return compare_roots(r1, r2)
        r1 = r1.bisect() if r1.width >= r2.width else r1
        r2 = r2.bisect() if r2.width >= r1.width else r2


def isolate_real_roots(p: IntPolynomial, a: Fraction, b: Fraction) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for the roots of square-free ``p`` in ``(a, b)``.

    ``p(a)`` and ``p(b)`` must be non-zero.  Each pair ``(lo, hi)`` holds
    exactly one root; exact rational roots come back as ``(q, q)``, all
    other endpoints are non-roots.  Sorted increasingly.
    """
    out: List[Tuple[Fraction, Fraction]] = []
    stack = [(a, b)]
    while stack:
        lo, hi = stack.pop()
        c = count_real_roots(p, lo, hi)
        if c == 0:
            continue
        if c == 1:
            out.append((lo, hi))
            continue
        m = (lo + hi) / 2
        if p.sign_at(m) == 0:
            out.append((m, m))
            # neighbours of m that are non-roots and keep m isolated
            d = (hi - lo) / 4
            while count_closed(p, m - d, m + d) > 1 or p.sign_at(m - d) == 0 or p.sign_at(m + d) == 0:
                d /= 2
            stack.append((lo, m - d))
            stack.append((m + d, hi))
        else:
            stack.append((lo, m))
            stack.append((m, hi))
    out.sort()
    return out
