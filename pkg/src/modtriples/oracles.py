"""Independent brute-force oracles used by the property suites.

These deliberately avoid the main code paths they certify: the
minimum-divisor oracle enumerates every common lower bound, and the
irreducibility oracle works from rational roots, naive trial-division
factor patterns over small prime fields, and bounded integer factor
enumeration.  Nothing here touches the Hensel machinery.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Optional

from .divisors import Divisor
from .errors import DegenerateInput
from .ratpoly import Poly


# ---------------------------------------------------------------------------
# common lower bounds of divisor pairs
# ---------------------------------------------------------------------------


def common_lower_bounds(d1: Divisor, d2: Divisor) -> Iterator[Divisor]:
    """Every effective E below both divisors (both must be effective)."""
    shared = sorted(d1.support() & d2.support(), key=lambda p: p.sort_key())
    caps = [min(d1.multiplicity(p), d2.multiplicity(p)) for p in shared]
    for choice in itertools.product(*(range(c + 1) for c in caps)):
        yield Divisor((p, m) for p, m in zip(shared, choice))


def disjoint_after_subtracting(d1: Divisor, d2: Divisor, e: Divisor) -> bool:
    return not ((d1 - e).support() & (d2 - e).support())


def min_divisor_oracle(d1: Divisor, d2: Divisor) -> Divisor:
    """The unique common lower bound with disjoint differences, by search."""
    found: Optional[Divisor] = None
    for e in common_lower_bounds(d1, d2):
        if disjoint_after_subtracting(d1, d2, e):
            if found is not None:
                raise AssertionError("two lower bounds with disjoint differences")
            found = e
    if found is None:
        raise AssertionError("no lower bound with disjoint differences")
    return found


# ---------------------------------------------------------------------------
# irreducibility over Q, for degrees up to six
# ---------------------------------------------------------------------------

_ORACLE_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)


class OracleBudgetExceeded(DegenerateInput):
    """The bounded factor enumeration would be too large to run."""


def _divisors_of(n: int) -> list[int]:
    n = abs(n)
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def rational_roots(ints: list[int]) -> list:
    """All rational roots of an integer polynomial (exact)."""
    from fractions import Fraction

    if not ints:
        raise DegenerateInput("zero polynomial")
    roots = []
    shift = 0
    while ints[shift] == 0:
        shift += 1
    if shift:
        roots.append(Fraction(0))
        ints = ints[shift:]
    for num in _divisors_of(ints[0]):
        for den in _divisors_of(ints[-1]):
            for sign in (1, -1):
                cand = Fraction(sign * num, den)
                if cand in roots:
                    continue
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return roots


def _naive_factor_degrees_mod_p(f: list[int], p: int) -> Optional[list[int]]:
    """Degree multiset of the irreducible factors of f mod p, by trial division.

    Returns None if p is a prime of bad reduction (leading coefficient
    drops or the reduction is not squarefree).
    """
    if f[-1] % p == 0:
        return None
    from .ratpoly import _pdivmod, _pgcd, _pmonic, _trim

    g = _pmonic(f, p)
    deriv = _trim([i * c % p for i, c in enumerate(g)][1:])
    if not deriv or len(_pgcd(g, deriv, p)) != 1:
        return None
    degrees = []
    d = 1
    # exhausting lower degrees first keeps reducible candidates harmless
    while 2 * d <= len(g) - 1:
        progressed = True
        while progressed and 2 * d <= len(g) - 1:
            progressed = False
            for cand_tail in itertools.product(range(p), repeat=d):
                cand = list(cand_tail) + [1]
                quo, rem = _pdivmod(g, cand, p)
                if not rem:
                    degrees.append(d)
                    g = quo
                    progressed = True
                    break
        d += 1
    if len(g) > 1:
        degrees.append(len(g) - 1)
    return sorted(degrees)


def _possible_factor_degrees(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    total = sum(degrees)
    return {s for s in sums if 0 < s < total}


def _enumerate_factor(ints: list[int], d: int, budget: int) -> Optional[list[int]]:
    """Search for an integer factor of exact degree d; None if there is none."""
    from .ratpoly import _zdiv_exact

    norm2 = math.isqrt(sum(c * c for c in ints)) + 1
    bound = (1 << d) * norm2
    lead_choices = _divisors_of(ints[-1])
    tail_choices = [s * t for t in _divisors_of(ints[0]) for s in (1, -1)]
    middle = d - 1
    cost = len(lead_choices) * len(tail_choices) * (2 * bound + 1) ** middle
    if cost > budget:
        raise OracleBudgetExceeded(f"enumeration of {cost} candidates refused")
    for lead in lead_choices:
        for tail in tail_choices:
            for mids in itertools.product(range(-bound, bound + 1), repeat=middle):
                cand = [tail, *mids, lead]
                if _zdiv_exact(list(ints), cand) is not None:
                    return cand
    return None


def verify_irreducible(p: Poly, budget: int = 4_000_000) -> bool:
    """Decide irreducibility over Q for degree at most six, independently.

    Strategy: rational roots rule on linear factors; degrees two and
    three need nothing else; above that, factor degree patterns modulo
    several small primes (factored by naive trial division) usually
    certify, and bounded integer factor enumeration settles the rest.
    """
    if p.is_zero or p.is_constant:
        return False
    deg = int(p.degree)
    if deg > 6:
        raise DegenerateInput("oracle only handles degree up to six")
    _, ints = p.int_primitive()
    if rational_roots(ints):
        return deg == 1
    if deg <= 3:
        return True
    candidates = set(range(2, deg // 2 + 1))
    for prime in _ORACLE_PRIMES:
        pattern = _naive_factor_degrees_mod_p(ints, prime)
        if pattern is None:
            continue
        possible = _possible_factor_degrees(pattern)
        candidates &= {d for d in possible if 2 <= d <= deg // 2}
        if not candidates:
            return True
    for d in sorted(candidates):
        if _enumerate_factor(ints, d, budget) is not None:
            return False
    return True
