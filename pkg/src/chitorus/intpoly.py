"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

from collections.abc import Iterable

from .errors import InexactDivision


class IntPolynomial:
    """Integer-coefficient polynomial, coefficients stored ascending.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def q_integer(cls, d: int) -> "IntPolynomial":
        """The q-integer [d]_q = 1 + q + ... + q^(d-1)."""
        if d < 1:
            raise ValueError("q-integer needs d >= 1")
        return cls((1,) * d)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (IntPolynomial((other,))).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * x for x in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, divisor: "IntPolynomial"):
        """Long division; raises InexactDivision on a non-integral step.

        Safe for any divisor whose leading coefficient is a unit; with a
        non-unit lead a coefficient that fails to divide exactly raises.
        """
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dn = divisor.degree
        quot = [0] * max(len(rem) - dn, 0)
        for k in range(len(rem) - dn - 1, -1, -1):
            top = rem[k + dn]
            if top == 0:
                continue
            q, r = divmod(top, lead)
            if r:
                raise InexactDivision(
                    f"leading coefficient {top} not divisible by {lead}"
                )
            quot[k] = q
            for i, c in enumerate(divisor.coeffs):
                rem[k + i] -= q * c
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient; raises InexactDivision if a remainder is left."""
        quot, rem = self.divmod(divisor)
        if rem:
            raise InexactDivision(f"remainder {list(rem.coeffs)} is nonzero")
        return quot

    def divides(self, other: "IntPolynomial") -> bool:
        try:
            other.exact_div(self)
        except InexactDivision:
            return False
        return True

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def padded(self, length: int) -> tuple[int, ...]:
        """Coefficients padded with zeros up to the given length."""
        if length < len(self.coeffs):
            raise ValueError("padding shorter than the polynomial")
        return self.coeffs + (0,) * (length - len(self.coeffs))
