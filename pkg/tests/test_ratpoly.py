"""Kernel tests: gcd, squarefree decomposition, factorization, resultants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modtriples import DegenerateInput, Poly, factor, poly_gcd, resultant, squarefree_decomposition
from modtriples.oracles import verify_irreducible

X = Poly.x()
ONE = Poly.one()


def c(v) -> Poly:
    return Poly.constant(v)


small_polys = st.builds(
    Poly,
    st.lists(st.integers(min_value=-20, max_value=20), min_size=1, max_size=7),
)


class TestGcd:
    def test_shared_root(self):
        assert poly_gcd(X**2 - ONE, X - ONE) == X - ONE

    def test_coprime_linears(self):
        assert poly_gcd(X, X + ONE) == ONE

    def test_euclidean_example(self):
        # by hand: x^4-1 = (x^2+1)(x^2-1), so the gcd with x^2-1 is x^2-1
        assert poly_gcd(X**4 - ONE, X**2 - ONE) == X**2 - ONE

    def test_both_zero_rejected(self):
        with pytest.raises(DegenerateInput):
            poly_gcd(Poly.zero(), Poly.zero())

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=60, deadline=None)
    def test_divides_both_and_scales(self, a, b, extra):
        if a.is_zero and b.is_zero:
            return
        g = poly_gcd(a, b)
        assert g.divides(a) and g.divides(b)
        if not extra.is_zero and not (a * extra).is_zero:
            scaled = poly_gcd(a * extra, b * extra)
            if not b.is_zero or not a.is_zero:
                assert scaled == (g * extra).monic()


class TestSquarefree:
    def test_cube_minus_square(self):
        assert squarefree_decomposition(X**3 - X**2) == [(1, X - ONE), (2, X)]

    def test_already_squarefree(self):
        assert squarefree_decomposition(X**2 + ONE) == [(1, X**2 + ONE)]

    def test_two_double_roots(self):
        p = (X - ONE) ** 2 * (X + c(2)) ** 2
        assert squarefree_decomposition(p) == [(2, (X - ONE) * (X + c(2)))]

    def test_zero_rejected(self):
        with pytest.raises(DegenerateInput):
            squarefree_decomposition(Poly.zero())

    @given(small_polys)
    @settings(max_examples=80, deadline=None)
    def test_parts_pairwise_coprime(self, p):
        if p.is_zero or p.is_constant:
            return
        parts = squarefree_decomposition(p)
        mults = [m for m, _ in parts]
        assert mults == sorted(set(mults))
        for i, (_, a) in enumerate(parts):
            for _, b in parts[i + 1 :]:
                assert poly_gcd(a, b) == ONE
        rebuilt = Poly.constant(p.leading)
        for m, part in parts:
            rebuilt = rebuilt * part**m
        assert rebuilt == p


class TestFactor:
    def test_rational_roots(self):
        out = factor(X**2 - ONE)
        assert out.unit == 1
        assert out.factors == ((X - ONE, 1), (X + ONE, 1))

    def test_irreducible_quadratic(self):
        out = factor(X**2 + ONE)
        assert out.factors == ((X**2 + ONE, 1),)

    def test_sophie_germain_shape(self):
        # the two quadratics multiply back to x^4 + 4
        out = factor(X**4 + c(4))
        assert out.expand() == X**4 + c(4)
        assert out.factors == (
            (Poly((2, -2, 1)), 1),
            (Poly((2, 2, 1)), 1),
        )

    def test_zero_rejected(self):
        with pytest.raises(DegenerateInput):
            factor(Poly.zero())

    def test_unit_and_multiplicity(self):
        p = (X - ONE) ** 2 * (X**2 + ONE)
        out = factor(p.scale(Fraction(3, 2)))
        assert out.unit == Fraction(3, 2)
        assert out.factors == ((X - ONE, 2), (X**2 + ONE, 1))

    @given(small_polys, small_polys)
    @settings(max_examples=60, deadline=None)
    def test_multiply_back(self, a, b):
        prod = a * b
        if prod.is_zero:
            return
        out = factor(prod)
        assert out.expand() == prod

    def test_outputs_certified_irreducible(self):
        samples = [
            X**4 + c(4),
            X**6 - ONE,
            (X**2 + ONE) * (X**3 - c(2)),
            X**5 - X - ONE,
            X**4 + ONE,
        ]
        for p in samples:
            for q, _ in factor(p):
                assert verify_irreducible(q)


class TestResultant:
    def test_evaluation(self):
        assert resultant(X**2 + ONE, X - c(2)) == 5

    def test_common_factor(self):
        assert resultant(X - ONE, X - ONE) == 0

    def test_product_formula_linears(self):
        assert resultant(X - ONE, X - c(3)) == -2

    @given(small_polys, small_polys)
    @settings(max_examples=60, deadline=None)
    def test_against_sylvester(self, a, b):
        if a.is_zero or b.is_zero:
            return
        assert resultant(a, b) == _sylvester(a, b)

    @given(small_polys, small_polys)
    @settings(max_examples=60, deadline=None)
    def test_swap_sign(self, a, b):
        if a.is_zero or b.is_zero or a.is_constant or b.is_constant:
            return
        m, n = int(a.degree), int(b.degree)
        assert resultant(a, b) == (-1) ** (m * n) * resultant(b, a)


def _sylvester(a: Poly, b: Poly) -> Fraction:
    m, n = int(a.degree), int(b.degree)
    if m == 0:
        return a.leading**n
    if n == 0:
        return b.leading**m
    size = m + n
    ac = list(reversed(a.coeffs))
    bc = list(reversed(b.coeffs))
    rows = [
        [Fraction(0)] * i + ac + [Fraction(0)] * (size - m - 1 - i) for i in range(n)
    ] + [
        [Fraction(0)] * i + bc + [Fraction(0)] * (size - n - 1 - i) for i in range(m)
    ]
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col]:
                scale = rows[r][col] * inv
                rows[r] = [rows[r][k] - scale * rows[col][k] for k in range(size)]
    return det
