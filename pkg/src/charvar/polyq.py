"""Exact integer polynomials in one variable.

Every E-polynomial handled by the package is a polynomial in ``q = uv`` with
integer coefficients.  :class:`EPoly` is an immutable dense representation
backed by Python ints, so values never overflow.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "EPoly",
    "Q",
    "ONE",
    "ZERO",
    "NotDivisible",
    "InterpolationError",
    "NonIntegralResult",
    "InsufficientPoints",
    "InconsistentPoints",
    "ZeroPolynomial",
    "add",
    "mul",
    "exact_div",
    "evaluate",
    "interpolate",
    "is_palindromic",
    "render",
    "parse",
]


class NotDivisible(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""

    def __init__(self, dividend: "EPoly", divisor: "EPoly", remainder: "EPoly"):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"({dividend}) is not divisible by ({divisor}); remainder {remainder}")


class InterpolationError(ValueError):
    pass


class InsufficientPoints(InterpolationError):
    pass


class NonIntegralResult(InterpolationError):
    """The interpolating polynomial exists but has a non-integer coefficient."""

    def __init__(self, coefficients: Sequence[Fraction]):
        self.coefficients = tuple(coefficients)
        shown = ", ".join(str(c) for c in self.coefficients)
        super().__init__(f"interpolant has non-integral coefficients: [{shown}]")


class InconsistentPoints(InterpolationError):
    """No polynomial within the degree bound passes through every point."""


class ZeroPolynomial(ValueError):
    pass


Coerce = Union["EPoly", int]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, init=False)
class EPoly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``q**i``.

    The zero polynomial has an empty coefficient tuple and ``degree`` None.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        vals = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                else:
                    raise TypeError(f"coefficients must be integers, got {c!r}")
            vals.append(int(c))
        object.__setattr__(self, "coeffs", _strip(vals))

    @classmethod
    def const(cls, c: int) -> "EPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "EPoly":
        if degree < 0:
            raise ValueError("negative degree")
        return cls((0,) * degree + (c,))

    @staticmethod
    def coerce(x: Coerce) -> "EPoly":
        if isinstance(x, EPoly):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return EPoly((x,))
        raise TypeError(f"cannot treat {x!r} as a polynomial")

    @classmethod
    def parse(cls, text: str) -> "EPoly":
        return parse(text)

    @property
    def degree(self) -> int | None:
        # None is the sentinel for the zero polynomial.
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: Coerce) -> "EPoly":
        try:
            return add(self, EPoly.coerce(other))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "EPoly":
        return EPoly(-c for c in self.coeffs)

    def __sub__(self, other: Coerce) -> "EPoly":
        try:
            return add(self, -EPoly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: Coerce) -> "EPoly":
        try:
            return add(EPoly.coerce(other), -self)
        except TypeError:
            return NotImplemented

    def __mul__(self, other: Coerce) -> "EPoly":
        try:
            return mul(self, EPoly.coerce(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "EPoly":
        if k < 0:
            raise ValueError("negative exponent")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __floordiv__(self, other: Coerce) -> "EPoly":
        return exact_div(self, EPoly.coerce(other))

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"EPoly({render(self)!r})"


ZERO = EPoly()
ONE = EPoly((1,))
Q = EPoly((0, 1))


def add(p: EPoly, r: EPoly) -> EPoly:
    n = max(len(p.coeffs), len(r.coeffs))
    return EPoly(p.coeff(i) + r.coeff(i) for i in range(n))


def mul(p: EPoly, r: EPoly) -> EPoly:
    if p.is_zero or r.is_zero:
        return ZERO
    out = [0] * (len(p.coeffs) + len(r.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(r.coeffs):
                out[i + j] += a * b
    return EPoly(out)


def divmod_poly(p: EPoly, r: EPoly) -> tuple[EPoly, EPoly]:
    """Long division over the integers.

    Only exact when the divisor's leading coefficient divides every
    intermediate leading term. Otherwise the step becomes the remainder.
    """
    if r.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dr = len(r.coeffs) - 1
    lead = r.leading
    quot = [0] * max(len(rem) - dr, 0)
    for k in range(len(rem) - 1, dr - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        if c % lead:
            break
        f = c // lead
        quot[k - dr] = f
        for j, b in enumerate(r.coeffs):
            rem[k - dr + j] -= f * b
    return EPoly(quot), EPoly(rem)


def exact_div(p: EPoly, r: EPoly) -> EPoly:
    if r.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    quot, rem = divmod_poly(p, r)
    if not rem.is_zero:
        raise NotDivisible(p, r, rem)
    return quot


def evaluate(p: EPoly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def interpolate(points: Sequence[tuple[int, int]], degree_bound: int) -> EPoly:
    """Fit the unique polynomial of degree at most ``degree_bound``.

    Works over exact rationals (Newton divided differences). Surplus points
    beyond ``degree_bound + 1`` are used as consistency checks.
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be non-negative")
    seen: dict[int, int] = {}
    for x, y in points:
        if x in seen and seen[x] != y:
            raise InconsistentPoints(f"two different values at x={x}")
        seen[x] = y
    if len(seen) < degree_bound + 1:
        raise InsufficientPoints(
            f"need {degree_bound + 1} distinct abscissae, got {len(seen)}"
        )
    xs = sorted(seen)
    fit_x = xs[: degree_bound + 1]
    table = [Fraction(seen[x]) for x in fit_x]
    n = len(fit_x)
    # In-place divided differences; table[i] becomes f[x0..xi].
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (fit_x[i] - fit_x[i - level])
    coeffs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # coeffs <- coeffs * (q - x_i) + table[i]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - fit_x[i] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += table[i]
    for x in xs[degree_bound + 1:]:
        val = sum(c * x**k for k, c in enumerate(coeffs))
        if val != seen[x]:
            raise InconsistentPoints(
                f"no polynomial of degree <= {degree_bound} fits all points (fails at x={x})"
            )
    if any(c.denominator != 1 for c in coeffs):
        raise NonIntegralResult(_strip_fractions(coeffs))
    return EPoly(int(c) for c in coeffs)


def _strip_fractions(coeffs: list[Fraction]) -> list[Fraction]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def is_palindromic(p: EPoly) -> bool:
    if p.is_zero:
        raise ZeroPolynomial("palindromicity is undefined for the zero polynomial")
    c = p.coeffs
    return c == c[::-1]


def render(p: EPoly, var: str = "q") -> str:
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


_TERM = re.compile(r"([+-]?)(\d*)\*?(?:([a-z])(?:\^\{?(\d+)\}?|\*\*(\d+))?)?$")


def parse(text: str, var: str = "q") -> EPoly:
    """Inverse of :func:`render`; also tolerates ``*``, ``**`` and stray spaces."""
    s = text.replace(" ", "").replace("−", "-")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return ZERO
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    acc: dict[int, int] = {}
    for piece in pieces:
        m = _TERM.match(piece)
        if not m or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse term {piece!r} in {text!r}")
        sign, num, v, e1, e2 = m.groups()
        if v is not None and v != var:
            raise ValueError(f"unexpected variable {v!r} in {text!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        k = 0 if v is None else int(e1 or e2 or 1)
        acc[k] = acc.get(k, 0) + c
    top = max(acc)
    return EPoly(acc.get(i, 0) for i in range(top + 1))
