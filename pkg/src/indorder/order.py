"""The root-interval order on graphs.

``G ⪰ H`` holds when ``I(H, x) >= I(G, x)`` for every ``x`` in
``[xi(G), 0]``.  The decision procedure is exact: the sign of
``D = I(H) - I(G)`` at ``xi(G)`` comes from :func:`sign_at_root`, and the
sign on the open interval is sampled at rational points between the
isolated roots of ``D``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional

from .graph import Graph
from .indpoly import independence_polynomial
from .poly import IntPolynomial
from .roots import (
    AlgebraicRoot,
    compare_roots,
    count_closed,
    count_real_roots,
    isolate_real_roots,
    root_bound,
    sign_at_root,
    square_free_part,
    xi_of_poly,
)


class Verdict(str, enum.Enum):
    EQUIVALENT = "Equivalent"
    FIRST_STRICTLY_GREATER = "FirstStrictlyGreater"
    SECOND_STRICTLY_GREATER = "SecondStrictlyGreater"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class OrderVerdict:
    verdict: Verdict
    # x0 in [xi(first), 0] with I(second, x0) < I(first, x0), when first ⋡ second
    witness_first: Optional[Fraction] = None
    # x0 in [xi(second), 0] with I(first, x0) < I(second, x0), when second ⋡ first
    witness_second: Optional[Fraction] = None

    @property
    def witness_x(self) -> Optional[Fraction]:
        return self.witness_first if self.witness_first is not None else self.witness_second

    def swapped(self) -> "OrderVerdict":
        flip = {
            Verdict.FIRST_STRICTLY_GREATER: Verdict.SECOND_STRICTLY_GREATER,
            Verdict.SECOND_STRICTLY_GREATER: Verdict.FIRST_STRICTLY_GREATER,
        }
        return OrderVerdict(flip.get(self.verdict, self.verdict), self.witness_second, self.witness_first)


@lru_cache(maxsize=65536)
def _xi_or_none(p: IntPolynomial) -> Optional[AlgebraicRoot]:
    # only the empty graph has I = 1
    if p.degree < 1:
        return None
    return xi_of_poly(p)


def _point_right_of(P: IntPolynomial, r: AlgebraicRoot, want: int) -> Fraction:
    """Rational ``t`` in ``(root, 0)`` with no root of ``P`` in ``(root, t]``.

    ``want`` is 1 when the root of ``r`` is also a root of ``P``.
    """
    if r.is_exact:
        a = r.lo
        t = a / 2
        while count_real_roots(P, a, t) > 0:
            t = (a + t) / 2
        return t
    while r.hi >= 0 or count_closed(P, r.lo, r.hi) != want:
        r = r.bisect()
        if r.is_exact:
            return _point_right_of(P, r, want)
    return r.hi


def domination_witness(pg: IntPolynomial, ph: IntPolynomial,
                       xi_g: Optional[AlgebraicRoot] = None) -> Optional[Fraction]:
    """``None`` if ``G ⪰ H``, otherwise a rational ``x0`` in ``[xi(G), 0]`` where
    ``I(H, x0) < I(G, x0)``.

    ``pg`` and ``ph`` are the independence polynomials.  When ``pg`` has no
    real root (the empty graph) the interval is taken as ``(-inf, 0]``.
    """
    D = ph - pg
    if D.is_zero():
        return None
    if xi_g is None:
        xi_g = _xi_or_none(pg)
    if D.sign_at(0) < 0:
        # not an independence-polynomial pair; x = 0 already decides
        return Fraction(0)
    Dp = D.strip_x()[1] if D.sign_at(0) == 0 else D
    P = square_free_part(Dp)
    if xi_g is None:
        t = Fraction(-root_bound(P) if P.degree >= 1 else -1)
    else:
        s_end = sign_at_root(D, xi_g)
        t = _point_right_of(P, xi_g, 1 if s_end == 0 else 0)
        if s_end < 0:
            # D keeps the sign of D(xi) on (xi, t]
            return t
    # one sample in every root-free gap, plus both sides of each isolated root
    samples: List[Fraction] = [t]
    prev = t
    if P.degree >= 1:
        for lo, hi in isolate_real_roots(P, t, Fraction(0)):
            if hi == 0:
                # D vanishes at 0 itself; pull the right end inside (root, 0)
                r = AlgebraicRoot(P, lo, hi)
                while r.hi == 0:
                    r = r.bisect()
                lo, hi = r.lo, r.hi
            samples.append((prev + lo) / 2)
            if lo != hi:
                samples.extend((lo, hi))
            prev = hi
    samples.append(prev / 2)
    for s in samples:
        if D.sign_at(s) < 0:
            return s
    return None


def dominates_poly(pg: IntPolynomial, ph: IntPolynomial) -> bool:
    return domination_witness(pg, ph) is None


def dominates(g: Graph, h: Graph) -> bool:
    """``g ⪰ h``."""
    return dominates_poly(independence_polynomial(g), independence_polynomial(h))


@lru_cache(maxsize=1 << 18)
def compare_polys(pg: IntPolynomial, ph: IntPolynomial) -> OrderVerdict:
    if pg == ph:
        return OrderVerdict(Verdict.EQUIVALENT)
    wg = domination_witness(pg, ph)
    wh = domination_witness(ph, pg)
    if wg is None and wh is None:
        raise AssertionError(
            f"antisymmetry broken: {pg.human()} and {ph.human()} dominate each other"
        )
    if wg is None:
        return OrderVerdict(Verdict.FIRST_STRICTLY_GREATER, None, wh)
    if wh is None:
        return OrderVerdict(Verdict.SECOND_STRICTLY_GREATER, wg, None)
    return OrderVerdict(Verdict.INCOMPARABLE, wg, wh)


def compare(g: Graph, h: Graph) -> OrderVerdict:
    return compare_polys(independence_polynomial(g), independence_polynomial(h))


def xi_consequence_check(g: Graph, h: Graph) -> bool:
    """For ``g ⪰ h``: does ``xi(g) >= xi(h)`` hold?"""
    return xi_consequence_check_poly(independence_polynomial(g), independence_polynomial(h))


def xi_consequence_check_poly(pg: IntPolynomial, ph: IntPolynomial) -> bool:
    rg, rh = _xi_or_none(pg), _xi_or_none(ph)
    if rh is None:
        return True
    if rg is None:
        return False
    return compare_roots(rg, rh) >= 0


def verdict_to_jsonable(v: OrderVerdict, pg: IntPolynomial, ph: IntPolynomial) -> dict:
    rg = _xi_or_none(pg)
    return {
        "verdict": v.verdict.value,
        "witness_x": None if v.witness_x is None else str(v.witness_x),
        "witness_first": None if v.witness_first is None else str(v.witness_first),
        "witness_second": None if v.witness_second is None else str(v.witness_second),
        "I_g": pg.to_jsonable(),
        "I_h": ph.to_jsonable(),
        "xi_g": None if rg is None else [str(rg.lo), str(rg.hi)],
    }


def clear_caches() -> None:
    compare_polys.cache_clear()
    _xi_or_none.cache_clear()
