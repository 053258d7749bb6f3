"""Exact univariate polynomial arithmetic over the rationals.

This is the computational substrate for every divisor operation: gcd,
squarefree decomposition, irreducible factorization and resultants, all
exact.  Rational numbers are ``fractions.Fraction`` (always in lowest
terms, positive denominator), aliased as ``Rat``.

Factorization follows the classic route: squarefree decomposition
(Yun), factorization modulo a small prime of good reduction
(Berlekamp), quadratic Hensel lifting, and exponential-in-the-worst-case
factor recombination, which is fine at desk scale (degrees stay small
and inputs are not adversarial).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DegenerateInput

Rat = Fraction

NEG_INFINITY = float("-inf")  # degree of the zero polynomial


def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


class Poly:
    """A dense univariate polynomial with Fraction coefficients.

    Coefficients are stored ascending; the highest stored index is
    nonzero unless the polynomial is zero (empty tuple).  Instances are
    immutable and hashable, so they can live in divisor supports.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        _trim(cs)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        # trusted: coefficients are Fractions and already trimmed
        self = object.__new__(cls)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(tuple(_trim(out)))

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly._raw(tuple(_trim(out)))

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly._raw(())
        return Poly._raw(tuple(cc * c for cc in self.coeffs))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def __call__(self, value: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> "Poly":
        if self.is_zero:
            raise DegenerateInput("zero polynomial has no monic form")
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact euclidean division over Q."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero or len(self.coeffs) < len(other.coeffs):
            return Poly(()), self
        rem = list(self.coeffs)
        div = other.coeffs
        dlen = len(div)
        inv_lc = 1 / div[-1]
        quo = [Fraction(0)] * (len(rem) - dlen + 1)
        for i in range(len(quo) - 1, -1, -1):
            c = rem[i + dlen - 1] * inv_lc
            if c:
                quo[i] = c
                for j in range(dlen):
                    rem[i + j] -= c * div[j]
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def divides(self, other: "Poly") -> bool:
        if self.is_zero:
            return other.is_zero
        return other.divmod(self)[1].is_zero

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)) by Horner."""
        acc = Poly(())
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(c)
        return acc

    # -- integer form --------------------------------------------------

    def int_primitive(self) -> tuple[Fraction, list[int]]:
        """Write self = content * P with P primitive in Z[x], lc(P) > 0.

        Returns (content, coefficient list of P).  Zero maps to (0, []).
        """
        if self.is_zero:
            return Fraction(0), []
        denom_lcm = 1
        for c in self.coeffs:
            denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if ints[-1] < 0:
            g = -g
        ints = [v // g for v in ints]
        return Fraction(g, denom_lcm), ints

    @classmethod
    def from_int_coeffs(cls, ints: Iterable[int]) -> "Poly":
        return cls(tuple(Fraction(v) for v in ints))

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def sort_key(self) -> tuple:
        # degree first, then coefficients from the top down
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    def __repr__(self) -> str:
        from .formats import poly_to_text  # local import avoids a cycle

        return f"Poly({poly_to_text(self)!r})"


# ---------------------------------------------------------------------------
# integer-coefficient helpers (dense lists of python ints, ascending)
# ---------------------------------------------------------------------------


def _zmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _zadd(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _zsub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _zcontent(a: list[int]) -> int:
    g = 0
    for v in a:
        g = math.gcd(g, v)
    return g


def _zprimitive(a: list[int]) -> list[int]:
    g = _zcontent(a)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [v // g for v in a]


def _zdiv_exact(a: list[int], b: list[int]) -> list[int] | None:
    """Quotient a // b in Z[x] if the division is exact, else None."""
    if not b:
        return None
    if not a:
        return []
    if len(a) < len(b):
        return None
    rem = list(a)
    quo = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(quo) - 1, -1, -1):
        num = rem[i + len(b) - 1]
        if num % lead:
            return None
        c = num // lead
        quo[i] = c
        if c:
            for j in range(len(b)):
                rem[i + j] -= c * b[j]
    return quo if not any(rem) else None


def _zprem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b."""
    rem = list(a)
    lb = b[-1]
    steps = len(a) - len(b) + 1
    while len(rem) >= len(b) and rem:
        lead = rem[-1]
        rem = [c * lb for c in rem]
        shift = len(rem) - len(b)
        for j in range(len(b)):
            rem[shift + j] -= lead * b[j]
        _trim(rem)
        steps -= 1
    if steps > 0:
        scale = lb**steps
        rem = [c * scale for c in rem]
    return rem


_FILTER_PRIMES = (999999937, 999999893)


def _zgcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[x] via the subresultant remainder sequence.

    A modular coprimality filter handles the common case first: if the
    reductions mod a large prime are coprime, so are the inputs.
    """
    a, b = _zprimitive(a), _zprimitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    if len(b) > 1:
        for p in _FILTER_PRIMES:
            if a[-1] % p and b[-1] % p:
                if len(_pgcd(a, b, p)) == 1:
                    return [1]
                break
    g, h = 1, 1
    while True:
        delta = len(a) - len(b)
        rem = _zprem(a, b)
        if not rem:
            return _zprimitive(b)
        if len(rem) == 1:
            return [1]
        a, b = b, [c // (g * h**delta) for c in rem]
        g = a[-1]
        if delta:
            h = g**delta // h ** (delta - 1) if delta > 1 else g
    # unreachable


def _poly_from_z(ints: list[int]) -> Poly:
    return Poly.from_int_coeffs(ints)


# ---------------------------------------------------------------------------
# arithmetic mod a prime (dense int lists, reduced coefficients)
# ---------------------------------------------------------------------------


def _pmod(a: list[int], p: int) -> list[int]:
    return _trim([c % p for c in a])


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(out)


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError
    rem = [c % p for c in a]
    _trim(rem)
    if len(rem) < len(b):
        return [], rem
    inv = pow(b[-1], -1, p)
    quo = [0] * (len(rem) - len(b) + 1)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + len(b) - 1] * inv % p
        quo[i] = c
        if c:
            for j in range(len(b)):
                rem[i + j] = (rem[i + j] - c * b[j]) % p
    return _trim(quo), _trim(rem)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _pmod(a, p), _pmod(b, p)
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _pmonic(a: list[int], p: int) -> list[int]:
    a = _pmod(a, p)
    if a and a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _ppowmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _pbezout(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """s, t with s*a + t*b = 1 mod p, for coprime a, b."""
    r0, r1 = _pmod(a, p), _pmod(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    if len(r0) != 1:
        raise ArithmeticError("inputs not coprime mod p")
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def _berlekamp(f: list[int], p: int) -> list[list[int]]:
    """Factor a monic squarefree polynomial mod p into monic irreducibles."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    # Frobenius matrix: row j holds x^(j*p) mod f
    xp = _ppowmod([0, 1], p, f, p)
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _pdivmod(_pmul(cur, xp, p), f, p)[1]
        rows.append(list(cur) + [0] * (n - len(cur)))
    # kernel of (Q - I) acting on row vectors
    mat = [[(rows[i][j] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = _left_nullspace(mat, p)
    factors = [f]
    for vec in basis:
        v = _trim(list(vec))
        if len(v) <= 1:
            continue  # the constants give no split
        if len(factors) == len(basis):
            break
        next_factors = []
        for g in factors:
            if len(g) - 1 <= 1:
                next_factors.append(g)
                continue
            pieces = []
            rest = g
            for s in range(p):
                if len(rest) - 1 <= 0:
                    break
                d = _pgcd(rest, _psub(v, [s], p), p)
                if 0 < len(d) - 1 < len(rest) - 1:
                    pieces.append(d)
                    rest = _pdivmod(rest, d, p)[0]
            pieces.append(rest)
            next_factors.extend(_pmonic(q, p) for q in pieces if len(q) > 1)
        factors = next_factors
    return factors


def _left_nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    """Vectors v with v*mat = 0 mod p."""
    n = len(mat)
    # transpose, then find the usual right kernel
    m = [[mat[j][i] % p for j in range(n)] for i in range(n)]
    pivots = {}
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, n):
            if m[r][col]:
                sel = r
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [c * inv % p for c in m[row]]
        for r in range(n):
            if r != row and m[r][col]:
                factor = m[r][col]
                m[r] = [(m[r][j] - factor * m[row][j]) % p for j in range(n)]
        pivots[col] = row
        row += 1
    basis = []
    for col in range(n):
        if col in pivots:
            continue
        vec = [0] * n
        vec[col] = 1
        for pc, pr in pivots.items():
            vec[pc] = (-m[pr][col]) % p
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# Hensel lifting (von zur Gathen & Gerhard, Modern Computer Algebra, 15.10/15.17)
# ---------------------------------------------------------------------------


def _mdivmod(a: list[int], b: list[int], m: int) -> tuple[list[int], list[int]]:
    """Division mod m for monic b."""
    rem = [c % m for c in a]
    _trim(rem)
    if len(rem) < len(b):
        return [], rem
    quo = [0] * (len(rem) - len(b) + 1)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + len(b) - 1] % m
        quo[i] = c
        if c:
            for j in range(len(b)):
                rem[i + j] = (rem[i + j] - c * b[j]) % m
    return _trim(quo), _trim(rem)


def _mnorm(a: list[int], m: int) -> list[int]:
    return _trim([c % m for c in a])


def _hensel_step(f, g, h, s, t, m):
    m2 = m * m
    e = _mnorm(_zsub(f, _zmul(g, h)), m2)
    q, r = _mdivmod(_zmul(s, e), h, m2)
    g1 = _mnorm(_zadd(g, _zadd(_zmul(t, e), _zmul(q, g))), m2)
    h1 = _mnorm(_zadd(h, r), m2)
    b = _mnorm(_zsub(_zadd(_zmul(s, g1), _zmul(t, h1)), [1]), m2)
    c, d = _mdivmod(_zmul(s, b), h1, m2)
    s1 = _mnorm(_zsub(s, d), m2)
    t1 = _mnorm(_zsub(t, _zadd(_zmul(t, b), _zmul(c, g1))), m2)
    return g1, h1, s1, t1


def _hensel_lift_pair(f, g, h, p, target):
    """Lift f = g*h from mod p to mod p^k >= target; h stays monic."""
    s, t = _pbezout(g, h, p)
    # degree bounds deg s < deg h, deg t < deg g are required by the step
    s = _pdivmod(s, h, p)[1]
    t, t_rem = _pdivmod(_psub([1], _pmul(s, g, p), p), h, p)
    if t_rem:
        raise ArithmeticError("Bezout normalization failed")
    m = p
    while m < target:
        f_red = _mnorm(f, m * m)
        g, h, s, t = _hensel_step(f_red, g, h, s, t, m)
        m = m * m
    return _mnorm(g, target), _mnorm(h, target)


def _hensel_lift_list(f: list[int], parts: list[list[int]], p: int, target: int) -> list[list[int]]:
    """Lift f = lc(f) * prod(parts) mod p to mod target, returning monic lifts."""
    if len(parts) == 1:
        return [_monic_mod(f, target)]
    k = len(parts) // 2
    g = [f[-1] % p]
    for q in parts[:k]:
        g = _pmul(g, q, p)
    h = [1]
    for q in parts[k:]:
        h = _pmul(h, q, p)
    g_lift, h_lift = _hensel_lift_pair(_mnorm(f, target), g, h, p, target)
    return _hensel_lift_list(g_lift, parts[:k], p, target) + _hensel_lift_list(
        h_lift, parts[k:], p, target
    )


def _monic_mod(a: list[int], m: int) -> list[int]:
    a = _mnorm(a, m)
    inv = pow(a[-1], -1, m)  # lc is a unit: not divisible by p
    return _mnorm([c * inv for c in a], m)


def _sym(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _primes() -> Iterator[int]:
    yield from (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
    n = 49
    while n < 20000:
        n += 2
        for d in range(3, math.isqrt(n) + 1, 2):
            if n % d == 0:
                break
        else:
            yield n
    raise ArithmeticError("ran out of small primes of good reduction")


def _factor_squarefree_int(f: list[int]) -> list[list[int]]:
    """Irreducible factors (primitive, positive lc) of a primitive squarefree f."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    deriv = _trim([i * c for i, c in enumerate(f)][1:])
    # prime of good reduction: lc survives and the reduction is squarefree
    best = None
    seen = 0
    for p in _primes():
        if f[-1] % p == 0:
            continue
        fbar = _pmonic(f, p)
        if len(_pgcd(fbar, _pmod(deriv, p), p)) != 1:
            continue
        parts = _berlekamp(fbar, p)
        seen += 1
        if best is None or len(parts) < len(best[1]):
            best = (p, parts)
        if len(best[1]) == 1 or seen >= 4:
            break
    p, parts = best
    if len(parts) == 1:
        return [f]
    # lift to a modulus beyond twice the Mignotte factor bound
    norm2 = math.isqrt(sum(c * c for c in f)) + 1
    bound = 2 ** (n + 1) * norm2 * abs(f[-1])
    target = p
    while target <= 2 * bound:
        target *= p
    lifted = _hensel_lift_list(f, parts, p, target)
    return _recombine(f, lifted, target)


def _recombine(f: list[int], lifted: list[list[int]], modulus: int) -> list[list[int]]:
    found: list[list[int]] = []
    active = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(active):
        restart = False
        for combo in itertools.combinations(active, size):
            # cheap test on the constant coefficient first
            tail = f[-1]
            for i in combo:
                tail = tail * lifted[i][0] % modulus
            tail = _sym(tail, modulus)
            if f[0] and tail and (f[0] * f[-1]) % tail != 0:
                continue
            cand = [f[-1] % modulus]
            for i in combo:
                cand = _mnorm(_zmul(cand, lifted[i]), modulus)
            cand = _zprimitive([_sym(c, modulus) for c in cand])
            quo = _zdiv_exact(f, cand)
            if quo is not None:
                found.append(cand)
                f = _zprimitive(quo)
                active = [i for i in active if i not in combo]
                restart = True
                break
        if not restart:
            size += 1
    if len(f) > 1:
        found.append(f)
    return found


# ---------------------------------------------------------------------------
# public kernel operations
# ---------------------------------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over Q."""
    if a.is_zero and b.is_zero:
        raise DegenerateInput("gcd of two zero polynomials")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    _, za = a.int_primitive()
    _, zb = b.int_primitive()
    return _poly_from_z(_zgcd(za, zb)).monic()


def squarefree_decomposition(p: Poly) -> list[tuple[int, Poly]]:
    """Yun decomposition p = unit * prod(part^mult), parts monic squarefree.

    Multiplicities are strictly increasing and the parts are pairwise
    coprime.  A nonzero constant decomposes into the empty list.
    """
    if p.is_zero:
        raise DegenerateInput("cannot decompose the zero polynomial")
    if p.is_constant:
        return []
    f = p.monic()
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    out = []
    mult = 1
    while True:
        if b.is_constant:
            break
        g = poly_gcd(b, d) if not d.is_zero else b.monic()
        if not g.is_constant:
            out.append((mult, g))
        b2 = b // g
        c2 = d // g
        d = c2 - b2.derivative()
        b = b2
        mult += 1
    return out


@dataclass(frozen=True)
class FactoredPoly:
    """Canonical factorization unit * prod(factor^multiplicity).

    Factors are monic irreducible over Q, pairwise distinct, sorted by
    (degree, lexicographic coefficients from the top down).
    """

    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        acc = Poly.constant(self.unit)
        for q, m in self.factors:
            acc = acc * q**m
        return acc

    def __iter__(self):
        return iter(self.factors)


def factor(p: Poly) -> FactoredPoly:
    """Factor p into monic irreducibles over Q.

    Raises DegenerateInput on the zero polynomial.  The recombination
    identity ``factored.expand() == p`` holds exactly.
    """
    if p.is_zero:
        raise DegenerateInput("cannot factor the zero polynomial")
    unit = p.leading
    if p.is_constant:
        return FactoredPoly(unit=unit, factors=())
    collected: list[tuple[Poly, int]] = []
    for mult, part in squarefree_decomposition(p):
        _, zpart = part.int_primitive()
        for zfac in _factor_squarefree_int(zpart):
            collected.append((_poly_from_z(zfac).monic(), mult))
    collected.sort(key=lambda item: item[0].sort_key())
    return FactoredPoly(unit=Fraction(unit), factors=tuple(collected))


def is_irreducible(p: Poly) -> bool:
    """True if p is irreducible over Q (degree >= 1)."""
    if p.is_zero or p.is_constant:
        return False
    parts = factor(p)
    return len(parts.factors) == 1 and parts.factors[0][1] == 1


def resultant(a: Poly, b: Poly) -> Fraction:
    """Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots of a.

    Computed by the subresultant pseudo-remainder sequence; zero exactly
    when the inputs share a factor.
    """
    if a.is_zero or b.is_zero:
        return Fraction(0)
    if a.is_constant and b.is_constant:
        return Fraction(1)
    if a.is_constant:
        return a.leading ** (len(b.coeffs) - 1)
    if b.is_constant:
        return b.leading ** (len(a.coeffs) - 1)
    ca, za = a.int_primitive()
    cb, zb = b.int_primitive()
    scale = ca ** (len(zb) - 1) * cb ** (len(za) - 1)
    return scale * _zresultant(za, zb)


def _zresultant(a: list[int], b: list[int]) -> Fraction:
    sign = 1
    if len(a) < len(b):
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            sign = -sign
        a, b = b, a
    g, h = 1, 1
    while True:
        delta = len(a) - len(b)
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            sign = -sign
        rem = _zprem(a, b)
        if not rem:
            return Fraction(0)
        divisor = g * h**delta
        a, b = b, [c // divisor for c in rem]
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g**delta // h ** (delta - 1)
        if len(b) == 1:
            break
    da = len(a) - 1
    value = Fraction(b[0] ** da, h ** (da - 1)) if da >= 1 else Fraction(b[0])
    return sign * value
