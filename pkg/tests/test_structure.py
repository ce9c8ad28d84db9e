from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deformed_u2 import (
    FrequencyRatio,
    IrrepLabel,
    NotDivisibleError,
    StructureFunction,
    commutator_polynomial,
    energy_of_irrep,
    parafermionic_decompose,
    u_constant,
)


def coprime_pairs(limit):
    return [
        (m, n)
        for m in range(1, limit + 1)
        for n in range(1, limit + 1)
        if gcd(m, n) == 1
    ]


def all_labels(m, n, n_top):
    for big_n in range(n_top + 1):
        for p in range(1, m + 1):
            for q in range(1, n + 1):
                yield IrrepLabel(big_n, p, q)


# printed closed forms of the 1:1, 1:2 and 1:3 families, as plain lambdas
SPECIAL_CASES = [
    (1, 1, 1, lambda N, x: x * (N + 1 - x), lambda N: Fraction(N + 1)),
    (1, 2, 1, lambda N, x: x * (N + 1 - x) * (N + Fraction(1, 2) - x),
     lambda N: N + Fraction(3, 4)),
    (1, 2, 2, lambda N, x: x * (N + 1 - x) * (N + Fraction(3, 2) - x),
     lambda N: N + Fraction(5, 4)),
    (1, 3, 1, lambda N, x: x * (N + 1 - x) * (N + Fraction(1, 3) - x) * (N + Fraction(2, 3) - x),
     lambda N: N + Fraction(2, 3)),
    (1, 3, 2, lambda N, x: x * (N + 1 - x) * (N + Fraction(2, 3) - x) * (N + Fraction(4, 3) - x),
     lambda N: Fraction(N + 1)),
    (1, 3, 3, lambda N, x: x * (N + 1 - x) * (N + Fraction(4, 3) - x) * (N + Fraction(5, 3) - x),
     lambda N: N + Fraction(4, 3)),
]


class TestStructureFunction:
    @pytest.mark.parametrize("m,n,q,phi_closed,energy_closed", SPECIAL_CASES)
    def test_special_case_families(self, m, n, q, phi_closed, energy_closed):
        ratio = FrequencyRatio(m, n)
        for big_n in range(9):
            label = IrrepLabel(big_n, 1, q)
            sf = StructureFunction(label, ratio)
            assert sf.energy == energy_closed(big_n)
            for x in range(big_n + 2):
                assert sf(x) == phi_closed(big_n, Fraction(x))

    def test_product_and_gamma_forms_agree(self):
        arguments = [Fraction(j) for j in range(0, 12)] + [Fraction(1, 7), Fraction(9, 4)]
        for m, n in coprime_pairs(5):
            ratio = FrequencyRatio(m, n)
            for label in all_labels(m, n, 6):
                sf = StructureFunction(label, ratio)
                for x in arguments:
                    assert sf.product_value(x) == sf.gamma_value(x)

    def test_form_selects_evaluation_route(self):
        label, ratio = IrrepLabel(3, 1, 2), FrequencyRatio(1, 2)
        product = StructureFunction(label, ratio, form="product")
        gamma = StructureFunction(label, ratio, form="gamma")
        assert [product(k) for k in range(5)] == [gamma(k) for k in range(5)]
        with pytest.raises(ValueError):
            StructureFunction(label, ratio, form="horner")

    def test_boundary_and_positivity(self):
        for m, n in coprime_pairs(5):
            ratio = FrequencyRatio(m, n)
            for label in all_labels(m, n, 10):
                values = StructureFunction(label, ratio).values()
                assert values[0] == 0
                assert values[-1] == 0
                assert all(v > 0 for v in values[1:-1])

    def test_factorials(self):
        sf = StructureFunction(IrrepLabel(3, 1, 2), FrequencyRatio(1, 2))
        facts = sf.factorials()
        assert facts[0] == 1
        for k in range(1, 4):
            assert facts[k] == facts[k - 1] * sf(k)

    def test_polynomial_form_matches_values(self):
        sf = StructureFunction(IrrepLabel(4, 2, 1), FrequencyRatio(3, 2))
        poly = sf.as_poly()
        for x in range(6):
            assert Fraction(str(poly.eval(x))) == sf(x)

    def test_rejects_label_outside_ratio(self):
        with pytest.raises(ValueError):
            StructureFunction(IrrepLabel(2, 2, 1), FrequencyRatio(1, 2))


class TestUConstant:
    def test_worked_values_1_2(self):
        ratio = FrequencyRatio(1, 2)
        assert u_constant(IrrepLabel(1, 1, 1), ratio) == Fraction(-3, 8)
        assert u_constant(IrrepLabel(1, 1, 2), ratio) == Fraction(-5, 8)
        assert u_constant(IrrepLabel(2, 1, 2), ratio) == Fraction(-9, 8)

    def test_isotropic_shift_is_minus_half_n(self):
        ratio = FrequencyRatio(1, 1)
        for big_n in range(6):
            assert u_constant(IrrepLabel(big_n, 1, 1), ratio) == -Fraction(big_n, 2)


class TestCommutatorPolynomial:
    def test_isotropic_is_plain_u2(self):
        poly = commutator_polynomial(FrequencyRatio(1, 1))
        assert poly.coefficients() == {(0, 1): Fraction(-2)}

    def test_one_two_polynomial(self):
        poly = commutator_polynomial(FrequencyRatio(1, 2))
        assert poly.coefficients() == {
            (0, 2): Fraction(3),
            (1, 1): Fraction(-1),
            (2, 0): Fraction(-1, 4),
            (0, 0): Fraction(3, 16),
        }

    def test_one_three_polynomial(self):
        poly = commutator_polynomial(FrequencyRatio(1, 3))
        assert poly.coefficients() == {
            (0, 3): Fraction(-4),
            (1, 2): Fraction(3),
            (0, 1): Fraction(-7, 9),
            (3, 0): Fraction(-1, 4),
            (1, 0): Fraction(1, 4),
        }

    def test_degree_in_s0(self):
        for m, n in coprime_pairs(5):
            assert commutator_polynomial(FrequencyRatio(m, n)).degree_in_s0 == m + n - 1

    def test_exact_evaluation(self):
        poly = commutator_polynomial(FrequencyRatio(1, 2))
        h, s0 = Fraction(7, 4), Fraction(-3, 8)
        expected = 3 * s0**2 - h * s0 - h**2 / 4 + Fraction(3, 16)
        assert poly(h, s0) == expected

    def test_matches_phi_differences(self):
        # the commutator acting on |k> must reproduce Phi(k+1) - Phi(k)
        for m, n in coprime_pairs(4):
            ratio = FrequencyRatio(m, n)
            poly = commutator_polynomial(ratio)
            for label in all_labels(m, n, 5):
                sf = StructureFunction(label, ratio)
                energy = energy_of_irrep(label, ratio)
                u = sf.u
                for k in range(label.N + 1):
                    assert sf(k + 1) - sf(k) == poly(energy, u + k)


class TestParafermionicDecompose:
    def test_one_two_example(self):
        sf = StructureFunction(IrrepLabel(3, 1, 2), FrequencyRatio(1, 2))
        form = parafermionic_decompose(sf)
        # P(x) = 9/2 - x
        assert form.values == (Fraction(7, 2), Fraction(5, 2), Fraction(3, 2))
        assert form.factor.all_coeffs() == [-1, Fraction(9, 2)]
        assert form.positive

    def test_isotropic_factor_is_one(self):
        for big_n in range(5):
            sf = StructureFunction(IrrepLabel(big_n, 1, 1), FrequencyRatio(1, 1))
            form = parafermionic_decompose(sf)
            assert form.factor.all_coeffs() == [1]
            assert form.positive

    def test_one_three_example(self):
        sf = StructureFunction(IrrepLabel(2, 1, 2), FrequencyRatio(1, 3))
        form = parafermionic_decompose(sf)
        # P(x) = (8/3 - x)(10/3 - x)
        assert form.values == (
            (Fraction(8, 3) - 1) * (Fraction(10, 3) - 1),
            (Fraction(8, 3) - 2) * (Fraction(10, 3) - 2),
        )
        assert form.positive

    def test_refuses_m_not_one(self):
        sf = StructureFunction(IrrepLabel(2, 1, 1), FrequencyRatio(2, 3))
        with pytest.raises(NotDivisibleError):
            parafermionic_decompose(sf)

    @settings(deadline=None)  # sympy division can be slow on first call
    @given(
        n=st.integers(1, 6),
        q=st.integers(1, 6),
        big_n=st.integers(0, 10),
    )
    def test_positivity_property_for_one_to_n(self, n, q, big_n):
        q = min(q, n)
        sf = StructureFunction(IrrepLabel(big_n, 1, q), FrequencyRatio(1, n))
        assert parafermionic_decompose(sf).positive
