"""Exact arithmetic substrate: rationals, 2x2 rational matrices, and the
formal quadratic extension Q(sqrt(D)).

All values are immutable and all operations are pure functions, so they can
be shared and sent across threads without synchronization.  No floating
point appears anywhere.  sqrt(D) is a formal symbol: D may be negative or
even a perfect square and the ring arithmetic stays valid, nothing ever
takes a numeric square root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Canonical reduced p/q with q > 0 and gcd(|p|, q) = 1, arbitrary precision.
# fractions.Fraction normalizes eagerly on every operation, which is exactly
# the canonical-form contract the rest of the library relies on.
Rational = Fraction

RationalLike = "Fraction | int | str"


def as_rational(value: Fraction | int | str) -> Fraction:
    """Coerce an int, a Fraction, or a 'p/q' string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' (optionally signed) into an exact Fraction.

    Floating-point literals are rejected: exactness is the whole contract.
    """
    s = text.strip()
    if not s or any(c in s for c in ".eE "):
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(r: Fraction) -> str:
    """Render a Fraction as 'p/q', or just 'p' when the denominator is 1."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parity(n: int) -> int:
    """0 for even n, 1 for odd n."""
    return n & 1


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix of exact rationals, row-major: [[e11, e12], [e21, e22]].

    `*` is the matrix product for Mat2 operands and scaling for rational
    operands; `+`/`-` are entrywise; `**` is binary exponentiation.
    """

    e11: Fraction
    e12: Fraction
    e21: Fraction
    e22: Fraction

    def __post_init__(self) -> None:
        for name in ("e11", "e12", "e21", "e22"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def identity(cls) -> Mat2:
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def zero(cls) -> Mat2:
        return cls(Fraction(0), Fraction(0), Fraction(0), Fraction(0))

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.e11, self.e12, self.e21, self.e22)

    def det(self) -> Fraction:
        return self.e11 * self.e22 - self.e12 * self.e21

    def is_zero(self) -> bool:
        return not any(self.entries())

    def __add__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.e11 + other.e11,
            self.e12 + other.e12,
            self.e21 + other.e21,
            self.e22 + other.e22,
        )

    def __sub__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> Mat2:
        return Mat2(-self.e11, -self.e12, -self.e21, -self.e22)

    def __mul__(self, other: Mat2 | Fraction | int) -> Mat2:
        if isinstance(other, Mat2):
            return Mat2(
                self.e11 * other.e11 + self.e12 * other.e21,
                self.e11 * other.e12 + self.e12 * other.e22,
                self.e21 * other.e11 + self.e22 * other.e21,
                self.e21 * other.e12 + self.e22 * other.e22,
            )
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Fraction | int) -> Mat2:
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Fraction | int) -> Mat2:
        c = as_rational(c)
        return Mat2(c * self.e11, c * self.e12, c * self.e21, c * self.e22)

    def __truediv__(self, other: Fraction | int) -> Mat2:
        if isinstance(other, (Fraction, int)):
            return self.scale(Fraction(1) / as_rational(other))
        return NotImplemented

    def __pow__(self, k: int) -> Mat2:
        if not isinstance(k, int) or k < 0:
            raise ValueError("matrix powers require a non-negative integer exponent")
        result = Mat2.identity()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self) -> str:
        f = format_rational
        return f"[[{f(self.e11)},{f(self.e12)}],[{f(self.e21)},{f(self.e22)}]]"


@dataclass(frozen=True)
class QuadNum:
    """Element x + y*sqrt(D) of the formal quadratic extension Q(sqrt(D)).

    Arithmetic is only defined between operands sharing the same D; mixing
    discriminants is a usage bug and raises ValueError.  Multiplication is
    (x + y*sqrt(D)) * (u + v*sqrt(D)) = (xu + yvD) + (xv + yu)*sqrt(D),
    exactly.  Rationals embed as x + 0*sqrt(D).
    """

    rat: Fraction
    coeff: Fraction
    disc: Fraction

    def __post_init__(self) -> None:
        for name in ("rat", "coeff", "disc"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def from_rational(cls, value: Fraction | int, disc: Fraction | int) -> QuadNum:
        return cls(as_rational(value), Fraction(0), as_rational(disc))

    def _coerce(self, other: QuadNum | Fraction | int) -> QuadNum | None:
        if isinstance(other, QuadNum):
            if other.disc != self.disc:
                raise ValueError(
                    f"mismatched discriminants: sqrt({self.disc}) vs sqrt({other.disc})"
                )
            return other
        if isinstance(other, (Fraction, int)):
            return QuadNum.from_rational(other, self.disc)
        return None

    def __add__(self, other: QuadNum | Fraction | int) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.rat + o.rat, self.coeff + o.coeff, self.disc)

    __radd__ = __add__

    def __sub__(self, other: QuadNum | Fraction | int) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.rat - o.rat, self.coeff - o.coeff, self.disc)

    def __rsub__(self, other: QuadNum | Fraction | int) -> QuadNum:
        return (-self) + other

    def __neg__(self) -> QuadNum:
        return QuadNum(-self.rat, -self.coeff, self.disc)

    def __mul__(self, other: QuadNum | Fraction | int) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(
            self.rat * o.rat + self.coeff * o.coeff * self.disc,
            self.rat * o.coeff + self.coeff * o.rat,
            self.disc,
        )

    __rmul__ = __mul__

    def conj(self) -> QuadNum:
        """Conjugation: negates the sqrt(D) coefficient."""
        return QuadNum(self.rat, -self.coeff, self.disc)

    def norm(self) -> Fraction:
        """self * conj(self), always rational: rat^2 - coeff^2 * D."""
        return self.rat * self.rat - self.coeff * self.coeff * self.disc

    def __truediv__(self, other: QuadNum | Fraction | int) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            # When D is a perfect square the ring has zero divisors, so a
            # nonzero element can still be non-invertible.
            raise ZeroDivisionError(f"{o} has zero norm and is not invertible")
        return self * o.conj() * QuadNum.from_rational(Fraction(1) / n, self.disc)

    def __pow__(self, k: int) -> QuadNum:
        if not isinstance(k, int) or k < 0:
            raise ValueError("quadratic powers require a non-negative integer exponent")
        result = QuadNum.from_rational(1, self.disc)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return self.rat == 0 and self.coeff == 0

    def __str__(self) -> str:
        f = format_rational
        sign = "+" if self.coeff >= 0 else "-"
        return f"{f(self.rat)} {sign} {f(abs(self.coeff))}*sqrt({f(self.disc)})"
