"""Structure functions and the ladder commutator of the deformed u(2).

The symmetry algebra of the m:n oscillator is generated by S0, S+, S- and
the (central) Hamiltonian H, and closes through

    [S-, S+] = F(H, S0 + 1) - F(H, S0),

where F(H, S0) is the product of the m raised x-mode factors and the n
lowered y-mode factors; the difference is a polynomial of degree m + n - 1
in S0.  On the irrep (N, p, q) the same data appears as the ladder-strength
function Phi(x), positive on 1..N and vanishing at 0 and N + 1, which pins
the Fock dimension to N + 1.

Everything here is exact.  Rational arithmetic is used throughout, the
bivariate polynomial algebra is done over QQ, and the Gamma-quotient form
of Phi is expanded into rising/falling factorials instead of evaluating a
transcendental Gamma function (so there are no poles and no rounding).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .core import FrequencyRatio, IrrepLabel, energy_of_irrep
from .exceptions import NotDivisibleError

__all__ = [
    "H_SYMBOL",
    "S0_SYMBOL",
    "X_SYMBOL",
    "u_constant",
    "StructureFunction",
    "CommutatorPolynomial",
    "commutator_polynomial",
    "ParafermionicForm",
    "parafermionic_decompose",
]

H_SYMBOL, S0_SYMBOL, X_SYMBOL = sympy.symbols("H S0 x")

_FORMS = ("product", "gamma")


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value: sympy.Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def u_constant(label: IrrepLabel, ratio: FrequencyRatio) -> Fraction:
    """Shift between S0 and the number operator: S0 = (number op) + u."""
    label.validate_for(ratio)
    return (
        Fraction(2 * label.p - 1, 2 * ratio.m)
        - Fraction(2 * label.q - 1, 2 * ratio.n)
        - label.N
    ) / 2


@dataclass(frozen=True)
class StructureFunction:
    """Exact evaluator for the ladder-strength function of one irrep.

    Two algebraically identical evaluation routes are kept side by side:

    * ``product`` -- the product of m + n linear factors,
      prod_k (x + (2p-1)/(2m) - (2k-1)/(2m)) *
      prod_l (N - x + (2q-1)/(2n) + (2l-1)/(2n));
    * ``gamma`` -- the Gamma-quotient form, expanded exactly into
      falling/rising factorials
      (1/(m^m n^n)) * prod_{j=1..m} (m x + p - j) *
      prod_{j=0..n-1} ((N-x) n + q + j).

    Both are exact at any rational argument and must agree everywhere.
    """

    label: IrrepLabel
    ratio: FrequencyRatio
    form: str = "product"

    def __post_init__(self) -> None:
        self.label.validate_for(self.ratio)
        if self.form not in _FORMS:
            raise ValueError(f"form must be one of {_FORMS}, got {self.form!r}")

    @property
    def u(self) -> Fraction:
        return u_constant(self.label, self.ratio)

    @property
    def energy(self) -> Fraction:
        return energy_of_irrep(self.label, self.ratio)

    def __call__(self, x: int | Fraction) -> Fraction:
        x = Fraction(x)
        if self.form == "product":
            return self.product_value(x)
        return self.gamma_value(x)

    def product_value(self, x: int | Fraction) -> Fraction:
        x = Fraction(x)
        m, n = self.ratio.m, self.ratio.n
        value = Fraction(1)
        for k in range(1, m + 1):
            value *= x + Fraction(2 * self.label.p - 1, 2 * m) - Fraction(2 * k - 1, 2 * m)
        for l in range(1, n + 1):
            value *= (
                self.label.N
                - x
                + Fraction(2 * self.label.q - 1, 2 * n)
                + Fraction(2 * l - 1, 2 * n)
            )
        return value

    def gamma_value(self, x: int | Fraction) -> Fraction:
        x = Fraction(x)
        m, n = self.ratio.m, self.ratio.n
        value = Fraction(1, m**m * n**n)
        for j in range(1, m + 1):
            value *= m * x + self.label.p - j
        for j in range(n):
            value *= (self.label.N - x) * n + self.label.q + j
        return value

    def values(self) -> tuple[Fraction, ...]:
        """Phi(0), Phi(1), ..., Phi(N+1)."""
        return tuple(self(k) for k in range(self.label.N + 2))

    def factorials(self) -> tuple[Fraction, ...]:
        """Deformed factorials [0]!, [1]!, ..., [N]! with [k]! = Phi(k) [k-1]!."""
        facts = [Fraction(1)]
        for k in range(1, self.label.N + 1):
            facts.append(facts[-1] * self(k))
        return tuple(facts)

    def as_poly(self) -> sympy.Poly:
        """Phi as a univariate polynomial in x over QQ."""
        m, n = self.ratio.m, self.ratio.n
        expr = sympy.Integer(1)
        for k in range(1, m + 1):
            expr *= X_SYMBOL + sympy.Rational(2 * self.label.p - 1, 2 * m) - sympy.Rational(
                2 * k - 1, 2 * m
            )
        for l in range(1, n + 1):
            expr *= (
                self.label.N
                - X_SYMBOL
                + sympy.Rational(2 * self.label.q - 1, 2 * n)
                + sympy.Rational(2 * l - 1, 2 * n)
            )
        return sympy.Poly(sympy.expand(expr), X_SYMBOL, domain="QQ")


def _ladder_product(ratio: FrequencyRatio) -> sympy.Expr:
    """F(H, S0): the operator product S+ S- expressed through H and S0."""
    expr = sympy.Integer(1)
    for k in range(1, ratio.m + 1):
        expr *= H_SYMBOL / 2 + S0_SYMBOL - sympy.Rational(2 * k - 1, 2 * ratio.m)
    for l in range(1, ratio.n + 1):
        expr *= H_SYMBOL / 2 - S0_SYMBOL + sympy.Rational(2 * l - 1, 2 * ratio.n)
    return sympy.expand(expr)


@dataclass(frozen=True)
class CommutatorPolynomial:
    """[S-, S+] as an exact bivariate polynomial in (H, S0) over QQ."""

    ratio: FrequencyRatio
    poly: sympy.Poly

    @property
    def degree_in_s0(self) -> int:
        return self.poly.degree(S0_SYMBOL)

    def coefficients(self) -> dict[tuple[int, int], Fraction]:
        """Map (H power, S0 power) -> coefficient, zero terms omitted."""
        return {
            (int(dh), int(ds)): _to_fraction(coeff)
            for (dh, ds), coeff in self.poly.terms()
        }

    def __call__(self, h: int | Fraction, s0: int | Fraction) -> Fraction:
        h, s0 = Fraction(h), Fraction(s0)
        result = self.poly.eval((_to_sympy(h), _to_sympy(s0)))
        return _to_fraction(sympy.Rational(result))

    def expression(self) -> sympy.Expr:
        return self.poly.as_expr()

    def __str__(self) -> str:
        return str(self.expression())


def commutator_polynomial(ratio: FrequencyRatio) -> CommutatorPolynomial:
    """Build [S-, S+] = F(H, S0+1) - F(H, S0) for the given ratio.

    The two leading S0^(m+n) terms cancel in the difference, leaving degree
    m + n - 1 in S0; for 1:1 the result is the plain u(2) value -2*S0.
    """
    f = _ladder_product(ratio)
    diff = sympy.expand(f.subs(S0_SYMBOL, S0_SYMBOL + 1) - f)
    return CommutatorPolynomial(ratio, sympy.Poly(diff, H_SYMBOL, S0_SYMBOL, domain="QQ"))


@dataclass(frozen=True)
class ParafermionicForm:
    """Factorization Phi(x) = x (N+1-x) P(x) with P positive on 1..N."""

    factor: sympy.Poly
    values: tuple[Fraction, ...]

    @property
    def positive(self) -> bool:
        return all(v > 0 for v in self.values)


def parafermionic_decompose(sf: StructureFunction) -> ParafermionicForm:
    """Split off the x (N+1-x) prefactor of a 1:n structure function.

    The parafermionic reading of the algebra is established for frequency
    ratios 1:n only, so any other ratio is rejected rather than silently
    factored.  The division itself is exact and its remainder is required
    to vanish.
    """
    if sf.ratio.m != 1:
        raise NotDivisibleError(
            f"parafermionic form applies to 1:n ratios only, got {sf.ratio}"
        )
    big_n = sf.label.N
    base = sympy.Poly(X_SYMBOL * (big_n + 1 - X_SYMBOL), X_SYMBOL, domain="QQ")
    quotient, remainder = sympy.div(sf.as_poly(), base, X_SYMBOL)
    if not remainder.is_zero:
        raise NotDivisibleError(
            f"x (N+1-x) does not divide the structure function of {sf.label}"
        )
    quotient = sympy.Poly(quotient, X_SYMBOL, domain="QQ")
    values = tuple(
        _to_fraction(sympy.Rational(quotient.eval(k))) for k in range(1, big_n + 1)
    )
    return ParafermionicForm(quotient, values)
