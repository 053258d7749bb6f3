"""Closed points, divisors and rational self-maps of the projective line.

Closed points of P^1 over Q are monic irreducible polynomials plus a
single point at infinity; divisors are finitely supported integer
combinations of closed points (Weil = Cartier on the smooth curve).
Rational maps are pairs of coprime integer-primitive polynomials, or
constants at rational points.

Pullbacks are computed through the homogenized degree form so that the
point at infinity needs no chart swap: for a finite point with minimal
polynomial p, the fiber polynomial of f = num/den is den^deg(p) *
p(num/den) and the missing degree sits at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import DegenerateInput, NotEffective
from .ratpoly import Poly, factor, is_irreducible, poly_gcd, resultant


class ClosedPoint:
    """A closed point of P^1_Q: a monic irreducible polynomial, or infinity."""

    __slots__ = ("minimal_poly",)

    def __init__(self, minimal_poly: Optional[Poly], _validated: bool = False):
        if minimal_poly is not None and not _validated:
            if minimal_poly.is_constant:
                raise DegenerateInput("a closed point needs a nonconstant polynomial")
            minimal_poly = minimal_poly.monic()
            if not is_irreducible(minimal_poly):
                raise DegenerateInput("point polynomial is reducible")
        object.__setattr__(self, "minimal_poly", minimal_poly)

    def __setattr__(self, name, value):
        raise AttributeError("ClosedPoint is immutable")

    @classmethod
    def infinity(cls) -> "ClosedPoint":
        return INFINITY

    @classmethod
    def finite(cls, poly: Poly) -> "ClosedPoint":
        return cls(poly)

    @classmethod
    def rational(cls, value) -> "ClosedPoint":
        """The degree-1 point x = value."""
        return cls(Poly((-Fraction(value), 1)), _validated=True)

    @classmethod
    def _raw(cls, monic_irreducible: Poly) -> "ClosedPoint":
        # fast path for factorization output, skips the irreducibility check
        return cls(monic_irreducible, _validated=True)

    @property
    def is_infinity(self) -> bool:
        return self.minimal_poly is None

    @property
    def degree(self) -> int:
        return 1 if self.minimal_poly is None else int(self.minimal_poly.degree)

    def rational_value(self) -> Fraction:
        """The value of a finite degree-1 point."""
        if self.is_infinity or self.degree != 1:
            raise DegenerateInput("point is not a finite rational point")
        return -self.minimal_poly[0]

    def sort_key(self) -> tuple:
        if self.minimal_poly is None:
            return (0,)
        return (1,) + self.minimal_poly.sort_key()

    def __eq__(self, other) -> bool:
        return isinstance(other, ClosedPoint) and self.minimal_poly == other.minimal_poly

    def __hash__(self) -> int:
        return hash(("pt", self.minimal_poly))

    def __repr__(self) -> str:
        from .formats import point_to_text

        return f"ClosedPoint({point_to_text(self)})"


INFINITY = ClosedPoint(None)


class Divisor:
    """Finitely supported integer-valued function on closed points."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[tuple[ClosedPoint, int]] = ()):
        acc: dict[ClosedPoint, int] = {}
        for point, mult in entries:
            mult = int(mult)
            if mult:
                acc[point] = acc.get(point, 0) + mult
        cleaned = tuple(
            sorted(((p, m) for p, m in acc.items() if m), key=lambda it: it[0].sort_key())
        )
        object.__setattr__(self, "entries", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Divisor is immutable")

    @classmethod
    def zero(cls) -> "Divisor":
        return cls(())

    @classmethod
    def of(cls, *pairs) -> "Divisor":
        """Divisor.of((point, mult), ...) or Divisor.of(point) for a single [P]."""
        if len(pairs) == 1 and isinstance(pairs[0], ClosedPoint):
            return cls(((pairs[0], 1),))
        return cls(pairs)

    # -- queries --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def multiplicity(self, point: ClosedPoint) -> int:
        for p, m in self.entries:
            if p == point:
                return m
        return 0

    def support(self) -> frozenset[ClosedPoint]:
        return frozenset(p for p, _ in self.entries)

    @property
    def degree(self) -> int:
        return sum(m * p.degree for p, m in self.entries)

    @property
    def is_effective(self) -> bool:
        return all(m > 0 for _, m in self.entries)

    def reduced(self) -> "Divisor":
        """Sum of the support points with multiplicity one."""
        return Divisor((p, 1) for p, _ in self.entries)

    def restrict(self, points: frozenset[ClosedPoint]) -> "Divisor":
        return Divisor((p, m) for p, m in self.entries if p in points)

    def drop(self, points: frozenset[ClosedPoint]) -> "Divisor":
        return Divisor((p, m) for p, m in self.entries if p not in points)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(self.entries + other.entries)

    def __neg__(self) -> "Divisor":
        return Divisor((p, -m) for p, m in self.entries)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        return Divisor((p, k * m) for p, m in self.entries)

    __rmul__ = __mul__

    def __le__(self, other: "Divisor") -> bool:
        return (other - self).is_effective

    def __iter__(self) -> Iterator[tuple[ClosedPoint, int]]:
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Divisor) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        from .formats import divisor_to_text

        return f"Divisor({divisor_to_text(self)!r})"


class CurveSpace:
    """The proper line, or the line minus a finite reduced boundary."""

    __slots__ = ("boundary",)

    def __init__(self, boundary: Iterable[ClosedPoint] = ()):
        object.__setattr__(self, "boundary", frozenset(boundary))

    def __setattr__(self, name, value):
        raise AttributeError("CurveSpace is immutable")

    @classmethod
    def proper(cls) -> "CurveSpace":
        return cls(())

    @classmethod
    def open(cls, boundary: Iterable[ClosedPoint]) -> "CurveSpace":
        boundary = frozenset(boundary)
        if not boundary:
            raise DegenerateInput("an open curve space needs a nonempty boundary")
        return cls(boundary)

    @property
    def is_proper(self) -> bool:
        return not self.boundary

    def contains(self, point: ClosedPoint) -> bool:
        return point not in self.boundary

    def minus(self, points: Iterable[ClosedPoint]) -> "CurveSpace":
        return CurveSpace(self.boundary | frozenset(points))

    def __eq__(self, other) -> bool:
        return isinstance(other, CurveSpace) and self.boundary == other.boundary

    def __hash__(self) -> int:
        return hash(("space", self.boundary))

    def __repr__(self) -> str:
        if self.is_proper:
            return "CurveSpace(proper)"
        pts = sorted(self.boundary, key=lambda p: p.sort_key())
        return f"CurveSpace(open minus {pts!r})"


class RationalMap:
    """A self-map of the line: coprime num/den, or a constant rational point.

    Nonconstant maps are finite surjective of degree max(deg num, deg den);
    they are stored with integer-primitive numerator and denominator
    (coprime, joint content 1, positive denominator leading coefficient)
    so equality is syntactic.  Constant maps carry a degree-1 point.
    """

    __slots__ = ("num", "den", "const")

    def __init__(self, num: Optional[Poly], den: Optional[Poly], const: Optional[ClosedPoint]):
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "const", const)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMap is immutable")

    @classmethod
    def constant(cls, point: ClosedPoint) -> "RationalMap":
        if not point.is_infinity and point.degree != 1:
            raise DegenerateInput("constant maps carry rational points only")
        return cls(None, None, point)

    @classmethod
    def from_fraction(cls, num: Poly, den: Poly) -> "RationalMap":
        if den.is_zero:
            if num.is_zero:
                raise DegenerateInput("0/0 is not a map")
            return cls.constant(INFINITY)
        if num.is_zero:
            return cls.constant(ClosedPoint.rational(0))
        g = poly_gcd(num, den)
        if not g.is_constant:
            num, den = num // g, den // g
        if num.is_constant and den.is_constant:
            return cls.constant(ClosedPoint.rational(num.leading / den.leading))
        cn, zn = num.int_primitive()
        cd, zd = den.int_primitive()
        # joint scaling: keep both integral with coprime contents
        ratio = cn / cd
        a, b = ratio.numerator, ratio.denominator
        num = Poly.from_int_coeffs([v * a for v in zn])
        den = Poly.from_int_coeffs([v * b for v in zd])
        return cls(num, den, None)

    @classmethod
    def identity(cls) -> "RationalMap":
        return cls(Poly.x(), Poly.one(), None)

    @classmethod
    def polynomial(cls, p: Poly) -> "RationalMap":
        return cls.from_fraction(p, Poly.one())

    # -- queries ---------------------------------------------------------

    @property
    def is_constant(self) -> bool:
        return self.const is not None

    @property
    def value(self) -> ClosedPoint:
        if self.const is None:
            raise DegenerateInput("nonconstant map has no constant value")
        return self.const

    @property
    def degree(self) -> int:
        if self.is_constant:
            return 0
        return max(int(self.num.degree), int(self.den.degree))

    @property
    def is_identity(self) -> bool:
        return self.num == Poly.x() and self.den == Poly.one()

    def sort_key(self) -> tuple:
        if self.is_constant:
            return (0,) + self.const.sort_key()
        return (1, self.num.sort_key(), self.den.sort_key())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMap)
            and self.num == other.num
            and self.den == other.den
            and self.const == other.const
        )

    def __hash__(self) -> int:
        return hash(("map", self.num, self.den, self.const))

    def __repr__(self) -> str:
        from .formats import map_to_text

        return f"RationalMap({map_to_text(self)})"

    # -- evaluation --------------------------------------------------------

    def value_at(self, point: ClosedPoint) -> ClosedPoint:
        """Image of a rational point (degree-1 or infinity)."""
        if self.is_constant:
            return self.const
        if point.is_infinity:
            dn, dd = int(self.num.degree), int(self.den.degree)
            if dn > dd:
                return INFINITY
            if dn < dd:
                return ClosedPoint.rational(0)
            return ClosedPoint.rational(self.num.leading / self.den.leading)
        c = point.rational_value()
        dv = self.den(c)
        if not dv:
            return INFINITY
        return ClosedPoint.rational(self.num(c) / dv)

    def inverse(self) -> "RationalMap":
        """Inverse of a degree-1 map (a Moebius transformation)."""
        if self.is_constant or self.degree != 1:
            raise DegenerateInput("only degree-1 maps are invertible")
        a, b = self.num[1], self.num[0]
        c, d = self.den[1], self.den[0]
        return RationalMap.from_fraction(Poly((-b, d)), Poly((a, -c)))


def compose_maps(outer: RationalMap, inner: RationalMap) -> RationalMap:
    """outer after inner."""
    if outer.is_constant:
        return outer
    if inner.is_constant:
        return RationalMap.constant(outer.value_at(inner.value))
    if inner.is_identity:
        return outer
    if outer.is_identity:
        return inner
    d = outer.degree
    num_pows = [Poly.one()]
    den_pows = [Poly.one()]
    for _ in range(d):
        num_pows.append(num_pows[-1] * inner.num)
        den_pows.append(den_pows[-1] * inner.den)
    new_num = Poly.zero()
    new_den = Poly.zero()
    for i in range(d + 1):
        cn = outer.num[i]
        if cn:
            new_num = new_num + (num_pows[i] * den_pows[d - i]).scale(cn)
        cd = outer.den[i]
        if cd:
            new_den = new_den + (num_pows[i] * den_pows[d - i]).scale(cd)
    return RationalMap.from_fraction(new_num, new_den)


def multiply_maps(f: RationalMap, g: RationalMap) -> RationalMap:
    """Product of f and g as rational functions."""
    if f.is_constant or g.is_constant:
        raise DegenerateInput("products are formed from nonconstant maps here")
    return RationalMap.from_fraction(f.num * g.num, f.den * g.den)


# ---------------------------------------------------------------------------
# fibers: the homogenized composite behind every pullback
# ---------------------------------------------------------------------------


def fiber_data(f: RationalMap, point: ClosedPoint) -> tuple[Poly, int]:
    """(g, k): the divisor f*[point] equals div0(g) + k*[infinity].

    g is the dehomogenized fiber form (den^deg(P) * p(num/den) for a
    finite point with minimal polynomial p, den itself for infinity, up
    to a harmless constant), and k the degree deficit absorbed at
    infinity.
    """
    if f.is_constant:
        raise DegenerateInput("no fibers under a constant map")
    return _fiber_cached(f, point)


@lru_cache(maxsize=65536)
def _fiber_cached(f: RationalMap, point: ClosedPoint) -> tuple[Poly, int]:
    from .ratpoly import _zadd, _zmul

    d = f.degree
    if point.is_infinity:
        return f.den, d - int(f.den.degree)
    e = point.degree
    # maps are stored with integer coefficients; clear the point's
    # denominators too and work over Z (a constant factor is harmless)
    _, pz = point.minimal_poly.int_primitive()
    nz = [int(c) for c in f.num.coeffs]
    dz = [int(c) for c in f.den.coeffs]
    num_pows: list[list[int]] = [[1]]
    for _ in range(e):
        num_pows.append(_zmul(num_pows[-1], nz))
    acc: list[int] = []
    den_pow = [1]
    for i in range(e, -1, -1):
        c = pz[i]
        if c:
            acc = _zadd(acc, [c * v for v in _zmul(num_pows[i], den_pow)])
        if i:
            den_pow = _zmul(den_pow, dz)
    if not acc:
        raise ArithmeticError("fiber form vanished; num/den were not coprime")
    k = d * e - (len(acc) - 1)
    return Poly.from_int_coeffs(acc), k


def pullback_divisor(f: RationalMap, divisor: Divisor) -> Divisor:
    """f*D, additive in D; degree multiplies by deg(f)."""
    if f.is_constant:
        raise DegenerateInput("pullback needs a nonconstant map")
    acc: list[tuple[ClosedPoint, int]] = []
    for point, mult in divisor:
        g, k = fiber_data(f, point)
        if k:
            acc.append((INFINITY, mult * k))
        if not g.is_constant:
            for q, m in factor(g).factors:
                acc.append((ClosedPoint._raw(q), mult * m))
    return Divisor(acc)


def point_image(f: RationalMap, point: ClosedPoint) -> ClosedPoint:
    """The closed point f(P).

    For a finite point with minimal polynomial p this is the unique
    irreducible factor of the eliminant Res_t(p(t), y*den(t) - num(t)),
    computed by evaluation and Lagrange interpolation in y.
    """
    if f.is_constant:
        return f.const
    if point.is_infinity or point.degree == 1:
        return f.value_at(point)
    p = point.minimal_poly
    if poly_gcd(p, f.den).degree == p.degree:
        return INFINITY
    e = int(p.degree)
    # avoid the single sample where the t-degree of y*den - num drops
    bad: Optional[Fraction] = None
    dn, dd = int(f.num.degree), int(f.den.degree)
    if dd > dn:
        bad = Fraction(0)
    elif dd == dn:
        bad = f.num.leading / f.den.leading
    samples: list[tuple[Fraction, Fraction]] = []
    y = Fraction(1)
    while len(samples) < e + 1:
        if bad is None or y != bad:
            q = f.den.scale(y) - f.num
            samples.append((y, resultant(p, q)))
        y += 1
    eliminant = _interpolate(samples)
    parts = factor(eliminant).factors
    if len(parts) != 1:
        raise ArithmeticError("eliminant of an irreducible point split")
    return ClosedPoint._raw(parts[0][0])


def _interpolate(samples: list[tuple[Fraction, Fraction]]) -> Poly:
    acc = Poly.zero()
    for i, (xi, yi) in enumerate(samples):
        if not yi:
            continue
        term = Poly.one()
        denom = Fraction(1)
        for j, (xj, _) in enumerate(samples):
            if i == j:
                continue
            term = term * Poly((-xj, 1))
            denom *= xi - xj
        acc = acc + term.scale(yi / denom)
    return acc


def pushforward_divisor(f: RationalMap, divisor: Divisor) -> Divisor:
    """f_*D: a prime point P maps to (deg P / deg f(P)) * [f(P)]."""
    if f.is_constant:
        raise DegenerateInput("pushforward needs a nonconstant map")
    acc = []
    for point, mult in divisor:
        image = point_image(f, point)
        res_deg, rem = divmod(point.degree, image.degree)
        if rem:
            raise ArithmeticError("residue degree was not integral")
        acc.append((image, mult * res_deg))
    return Divisor(acc)


def principal_divisor(f: RationalMap) -> Divisor:
    """div(f) = zeros minus poles; degree zero."""
    if f.is_constant:
        raise DegenerateInput("constant maps have no principal divisor")
    acc: list[tuple[ClosedPoint, int]] = []
    if not f.num.is_constant:
        for q, m in factor(f.num).factors:
            acc.append((ClosedPoint._raw(q), m))
    if not f.den.is_constant:
        for q, m in factor(f.den).factors:
            acc.append((ClosedPoint._raw(q), -m))
    acc.append((INFINITY, int(f.den.degree) - int(f.num.degree)))
    return Divisor(acc)


def min_divisor(d1: Divisor, d2: Divisor) -> Divisor:
    """Pointwise minimum of two effective divisors.

    This is the scheme intersection of the two divisors on the curve:
    the unique largest E below both, and the supports of d1-E and d2-E
    are disjoint by construction.
    """
    if not d1.is_effective or not d2.is_effective:
        raise NotEffective("min_divisor needs effective divisors")
    acc = []
    for point, mult in d1:
        other = d2.multiplicity(point)
        if other:
            acc.append((point, min(mult, other)))
    return Divisor(acc)


@dataclass(frozen=True)
class OrderReport:
    """Comparison data for a divisor pair."""

    effective_1: bool
    le: bool
    eq: bool
    support_1: frozenset[ClosedPoint]
    reduced_1: Divisor


def divisor_order(d1: Divisor, d2: Divisor) -> OrderReport:
    return OrderReport(
        effective_1=d1.is_effective,
        le=d1 <= d2,
        eq=d1 == d2,
        support_1=d1.support(),
        reduced_1=d1.reduced(),
    )


def canonical_split(d: Divisor) -> tuple[Divisor, Divisor]:
    """D = plus - minus with effective halves of disjoint support."""
    plus = Divisor((p, m) for p, m in d if m > 0)
    minus = Divisor((p, -m) for p, m in d if m < 0)
    return plus, minus


# ---------------------------------------------------------------------------
# loci: reduced preimage sets, represented by squarefree polynomials
# ---------------------------------------------------------------------------


class LocusKind(Enum):
    FINITE = "finite"
    ALL = "all"
    COFINITE = "cofinite"


@dataclass(frozen=True)
class Locus:
    """A Galois-stable set of closed points of the line.

    FINITE loci carry a monic squarefree polynomial (roots = the finite
    points) and a flag for infinity.  ALL is the whole line; COFINITE
    only ever appears as the left side of an inclusion test, where
    "infinite" is all that matters.
    """

    kind: LocusKind
    poly: Poly = Poly.one()
    has_infinity: bool = False

    @classmethod
    def empty(cls) -> "Locus":
        return cls(LocusKind.FINITE, Poly.one(), False)

    @classmethod
    def everything(cls) -> "Locus":
        return cls(LocusKind.ALL)

    @property
    def is_empty(self) -> bool:
        return self.kind is LocusKind.FINITE and self.poly.is_constant and not self.has_infinity


def squarefree_part(p: Poly) -> Poly:
    if p.is_zero:
        raise DegenerateInput("zero polynomial")
    if p.is_constant:
        return Poly.one()
    return (p // poly_gcd(p, p.derivative())).monic()


def points_locus(points: Iterable[ClosedPoint]) -> Locus:
    poly = Poly.one()
    inf = False
    for p in points:
        if p.is_infinity:
            inf = True
        else:
            poly = poly * p.minimal_poly
    return Locus(LocusKind.FINITE, poly.monic() if not poly.is_constant else poly, inf)


def preimage_locus(f: RationalMap, points: Iterable[ClosedPoint]) -> Locus:
    """{n : f(n) in points}, as a locus on the source line."""
    pts = list(points)
    if f.is_constant:
        return Locus.everything() if f.const in pts else Locus.empty()
    poly = Poly.one()
    inf = False
    for p in pts:
        g, k = fiber_data(f, p)
        if k > 0:
            inf = True
        if not g.is_constant:
            poly = poly * squarefree_part(g)
    # fibers of distinct points are disjoint, so the product is squarefree
    return Locus(LocusKind.FINITE, poly if poly.is_constant else poly.monic(), inf)


def locus_subtract(a: Locus, b: Locus) -> Locus:
    if b.kind is LocusKind.ALL:
        return Locus.empty()
    if a.kind is LocusKind.ALL:
        return Locus(LocusKind.COFINITE) if not b.is_empty else a
    if a.kind is LocusKind.COFINITE:
        return a
    if b.kind is LocusKind.COFINITE:
        # conservative: unused in the checks we run
        raise DegenerateInput("cannot subtract a cofinite locus")
    poly = a.poly
    if not poly.is_constant and not b.poly.is_constant:
        g = poly_gcd(poly, b.poly)
        if not g.is_constant:
            q = poly // g
            poly = q.monic() if not q.is_constant else Poly.one()
    return Locus(LocusKind.FINITE, poly, a.has_infinity and not b.has_infinity)


def locus_union(a: Locus, b: Locus) -> Locus:
    if a.kind is not LocusKind.FINITE or b.kind is not LocusKind.FINITE:
        return Locus.everything()
    poly = a.poly
    other = b.poly
    if poly.is_constant:
        poly = other
    elif not other.is_constant:
        g = poly_gcd(poly, other)
        poly = (poly * (other // g)).monic()
    return Locus(LocusKind.FINITE, poly, a.has_infinity or b.has_infinity)


def locus_subset(a: Locus, b: Locus) -> bool:
    if a.kind is LocusKind.FINITE and a.is_empty:
        return True
    if b.kind is LocusKind.ALL:
        return True
    if a.kind in (LocusKind.ALL, LocusKind.COFINITE):
        return False  # infinite sets never fit in a finite locus
    if b.kind is LocusKind.COFINITE:
        raise DegenerateInput("cannot test inclusion in a cofinite locus")
    if a.has_infinity and not b.has_infinity:
        return False
    if a.poly.is_constant:
        return True
    if b.poly.is_constant:
        return False
    return a.poly.divides(b.poly)


def locus_intersects(a: Locus, b: Locus) -> bool:
    if a.is_empty or b.is_empty:
        return False
    if a.kind is not LocusKind.FINITE or b.kind is not LocusKind.FINITE:
        return True  # infinite against nonempty always meets on the line
    if a.has_infinity and b.has_infinity:
        return True
    if a.poly.is_constant or b.poly.is_constant:
        return False
    return not poly_gcd(a.poly, b.poly).is_constant


# ---------------------------------------------------------------------------
# divisor comparisons without factorization: gcd-free bases of fiber forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiberTerm:
    """A summand c * div0(g) coming from pulling a point back along a map.

    Provenance (map, point) is kept because fibers of distinct points
    under the same map are coprime for free; fibers under the identity
    are the point minimal polynomials and flagged irreducible.  Both
    facts save nearly all gcd work when comparing pullback divisors.
    """

    poly: tuple[int, ...]  # primitive integer coefficients
    coeff: int
    map_key: int
    point: ClosedPoint
    irreducible: bool = False


def _term(
    poly: Poly, coeff: int, map_key: int, point: ClosedPoint, irreducible: bool
) -> Optional[FiberTerm]:
    _, ints = poly.int_primitive()
    if len(ints) <= 1:
        return None
    return FiberTerm(tuple(ints), coeff, map_key, point, irreducible)


def _coprime_by_provenance(a: FiberTerm, b: FiberTerm) -> bool:
    return a.map_key == b.map_key and a.point != b.point


class PullbackComparison:
    """Accumulates signed pullback terms and decides effectivity.

    Positive verdict means: the accumulated divisor is effective away
    from the escape locus (domain points marked as removed from the
    open model).  Exact, and never factors anything: it refines the
    fiber forms into a gcd-free basis instead.
    """

    def __init__(self):
        self._terms: list[FiberTerm] = []
        self._escapes: list[FiberTerm] = []
        self._inf_coeff = 0
        self._inf_escaped = False
        self._next_key = 0

    def map_key(self) -> int:
        self._next_key += 1
        return self._next_key

    def add_pullback(self, f: RationalMap, divisor: Divisor, sign: int, key: int) -> None:
        irr = f.is_identity
        for point, mult in divisor:
            g, k = fiber_data(f, point)
            self._inf_coeff += sign * mult * k
            t = _term(g, sign * mult, key, point, irr)
            if t:
                self._terms.append(t)

    def add_escape_map(self, f: RationalMap, points: Iterable[ClosedPoint], key: int) -> None:
        irr = f.is_identity
        for point in points:
            g, k = fiber_data(f, point)
            if k > 0:
                self._inf_escaped = True
            t = _term(g, 0, key, point, irr)
            if t:
                self._escapes.append(t)

    def effective(self) -> bool:
        merged: dict[tuple[int, ClosedPoint], FiberTerm] = {}
        for t in self._terms:
            k = (t.map_key, t.point)
            if k in merged:
                prev = merged[k]
                merged[k] = FiberTerm(
                    prev.poly, prev.coeff + t.coeff, t.map_key, t.point, prev.irreducible
                )
            else:
                merged[k] = t
        terms = [t for t in merged.values() if t.coeff]
        if terms:
            basis = _gcd_free_basis(terms + self._escapes)
            for beta, carriers in basis:
                if any(t.coeff == 0 and _exponent_of(beta, list(t.poly)) for t in carriers):
                    continue  # this piece of the line was removed from the model
                total = sum(
                    t.coeff * _exponent_of(beta, list(t.poly)) for t in carriers if t.coeff
                )
                if total < 0:
                    return False
        if not self._inf_escaped and self._inf_coeff < 0:
            return False
        return True


def _gcd_free_basis(items: list[FiberTerm]) -> list[tuple[list[int], list[FiberTerm]]]:
    """Pairwise coprime integer polynomials covering all item factors.

    Returns (basis_poly, carriers) pairs; carriers over-approximate the
    items the basis element can divide.  Items known coprime by
    provenance (same map, distinct points) are never gcd-ed against
    each other, and known-irreducible pieces reduce the gcd to a single
    divisibility test.
    """
    basis: list[tuple[list[int], list[FiberTerm], bool]] = []
    queue = [(list(t.poly), [t], t.irreducible) for t in items]
    while queue:
        q, carriers, q_irr = queue.pop()
        if len(q) <= 1:
            continue
        placed = False
        for idx, (b, b_carriers, b_irr) in enumerate(basis):
            if _all_coprime_by_provenance(carriers, b_carriers):
                continue
            g = _pair_gcd(q, q_irr, b, b_irr)
            if len(g) <= 1:
                continue
            del basis[idx]
            rest_b = _zdiv_exact_local(b, g)
            rest_q = _zdiv_exact_local(q, g)
            if len(rest_b) > 1:
                queue.append((rest_b, b_carriers, False))
            queue.append((g, _merge_carriers(b_carriers, carriers), q_irr or b_irr))
            if len(rest_q) > 1:
                queue.append((rest_q, carriers, False))
            placed = True
            break
        if not placed:
            basis.append((q, carriers, q_irr))
    return [(b, carriers) for b, carriers, _ in basis]


def _pair_gcd(q: list[int], q_irr: bool, b: list[int], b_irr: bool) -> list[int]:
    if q_irr and b_irr:
        return q if q == b else [1]
    if q_irr:
        return q if _zdiv_exact_local(b, q) is not None else [1]
    if b_irr:
        return b if _zdiv_exact_local(q, b) is not None else [1]
    return _zgcd_local(q, b)


def _merge_carriers(xs: list[FiberTerm], ys: list[FiberTerm]) -> list[FiberTerm]:
    out = list(xs)
    for t in ys:
        if t not in out:
            out.append(t)
    return out


def _all_coprime_by_provenance(xs: list[FiberTerm], ys: list[FiberTerm]) -> bool:
    return all(_coprime_by_provenance(a, b) for a in xs for b in ys)


def _exponent_of(beta: list[int], poly: list[int]) -> int:
    count = 0
    cur = list(poly)
    while True:
        nxt = _zdiv_exact_local(cur, beta)
        if nxt is None:
            return count
        count += 1
        cur = nxt


def _zgcd_local(a: list[int], b: list[int]) -> list[int]:
    from .ratpoly import _zgcd

    return _zgcd(list(a), list(b))


def _zdiv_exact_local(a: list[int], b: list[int]):
    from .ratpoly import _zdiv_exact, _zprimitive

    q = _zdiv_exact(list(a), list(b))
    if q is None:
        return None
    return _zprimitive(q)
