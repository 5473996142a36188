"""Exact arithmetic on orbifold Hirzebruch scrolls.

The scroll F_a = P(O + O(-a)) over the projective line with a single
orbifold point of order r carries the two-generator intersection pairing

    sigma^2 = -a,   sigma.F = 1,   F^2 = 0,

where sigma is the directrix and F the fiber class.  The co-directrix is
tau = sigma + a F.  Everything here is exact rational arithmetic; no
floating point is ever used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

FracLike = Union[int, Fraction, str]


def frac(x: FracLike) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


def frac_str(x: Fraction) -> str:
    """Serialize a Fraction as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class OrbiBase:
    """The base curve P^1(r-th root of 0): one orbifold point of order r."""

    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("orbifold order r must be >= 1")


@dataclass(frozen=True)
class Scroll:
    """F_a over an OrbiBase; the twist a is a nonnegative element of (1/r)Z."""

    base: OrbiBase
    a: Fraction

    def __post_init__(self) -> None:
        a = frac(self.a)
        object.__setattr__(self, "a", a)
        if a < 0:
            raise ValueError("twist a must be >= 0")
        if (self.base.r * a).denominator != 1:
            raise ValueError("r*a must be an integer")

    def pair(self, d1: "ScrollDivisor", d2: "ScrollDivisor") -> Fraction:
        """Intersection number of n1*sigma + m1*F with n2*sigma + m2*F."""
        return (
            -self.a * d1.n * d2.n + d1.n * frac(d2.m) + d2.n * frac(d1.m)
        )


@dataclass(frozen=True)
class ScrollDivisor:
    """The divisor class n*sigma + m*F."""

    n: int
    m: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", frac(self.m))
        if self.n < 0:
            raise ValueError("fiber degree n must be >= 0")


class SmoothClass(enum.Enum):
    CONNECTED = "Connected"
    DISJOINT_DIRECTRIX = "DisjointDirectrix"
    NOT_SMOOTH = "NotSmooth"


@dataclass(frozen=True)
class SectionConstraints:
    avoids_sigma0: bool
    etale_over_0: bool
    smooth_class: SmoothClass


@dataclass(frozen=True)
class BranchRelation:
    m: Fraction
    avoid_bound: bool
    etale_bound: bool
    smooth_ok: bool


@dataclass(frozen=True)
class CQSData:
    """A cyclic quotient singularity 1/r(1, q), canonicalized; r=1 is smooth."""

    r: int
    q: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("r must be >= 1")
        object.__setattr__(self, "q", self.q % self.r if self.r > 1 else 0)

    @property
    def smooth(self) -> bool:
        return self.r == 1 or self.q == 0


@dataclass(frozen=True)
class CoarseSingularities:
    at_sigma: CQSData
    at_tau: CQSData
    fiber_multiplicity: int


def adjunction_degree(n: int, m: FracLike, a: FracLike) -> Fraction:
    """deg omega_{C/P} = (n-1)(2m - a n) for C in |n sigma + m F| on F_a."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m, a = frac(m), frac(a)
    return (n - 1) * (2 * m - a * n)


def section_constraints(
    n: int, m: FracLike, a: FracLike, r: int
) -> SectionConstraints:
    """Positional constraints of a member of |n sigma + m F| near sigma.

    avoids_sigma0 holds iff C.sigma = m - n a is a nonnegative integer;
    etale_over_0 iff m - n a or m - (n-1) a is; the smooth classification
    distinguishes the connected case (m - n a >= 0), the disjoint union of
    sigma with a curve in |(n-1) tau| (m - n a = -a), and the rest.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 1:
        raise ValueError("r must be >= 1")
    m, a = frac(m), frac(a)
    if (r * a).denominator != 1 or (r * m).denominator != 1:
        raise ValueError("r*a and r*m must be integers")

    c_sigma = m - n * a
    c_cosection = m - (n - 1) * a

    def nonneg_int(x: Fraction) -> bool:
        return x.denominator == 1 and x >= 0

    avoids = nonneg_int(c_sigma)
    etale = nonneg_int(c_sigma) or nonneg_int(c_cosection)
    if c_sigma >= 0:
        smooth = SmoothClass.CONNECTED
    elif c_sigma == -a:
        smooth = SmoothClass.DISJOINT_DIRECTRIX
    else:
        smooth = SmoothClass.NOT_SMOOTH
    return SectionConstraints(avoids, etale, smooth)


def tetragonal_branch_relation(a: FracLike, b: int) -> BranchRelation:
    """m = b/6 + 2a for a tetragonal class 4 sigma + m F with b branch points.

    The smoothness criterion is: either a <= b/12 or a = b/6.
    """
    a = frac(a)
    if a < 0:
        raise ValueError("a must be >= 0")
    if b < 0:
        raise ValueError("b must be >= 0")
    m = Fraction(b, 6) + 2 * a
    avoid = a <= Fraction(b, 12)
    etale = a <= Fraction(b, 6)
    smooth_ok = avoid or a == Fraction(b, 6)
    return BranchRelation(m, avoid, etale, smooth_ok)


def coarse_singularities(r: int, a: FracLike) -> CoarseSingularities:
    """Singularities of the coarse space of F_a over P^1(r-th root of 0).

    1/r(1, ra mod r) at sigma(0) and 1/r(1, (r - ra) mod r) at tau(0);
    the fiber over 0 has multiplicity r / gcd(r, ra).  Integral a gives a
    smooth coarse space and multiplicity 1.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    a = frac(a)
    if a < 0:
        raise ValueError("a must be >= 0")
    ra = r * a
    if ra.denominator != 1:
        raise ValueError("r*a must be an integer")
    ra = ra.numerator
    if a.denominator == 1:
        return CoarseSingularities(CQSData(1, 0), CQSData(1, 0), 1)
    return CoarseSingularities(
        CQSData(r, ra % r),
        CQSData(r, (r - ra) % r),
        r // gcd(r, ra),
    )
