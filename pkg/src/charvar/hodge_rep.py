"""Equivariant E-polynomials and Hodge monodromy representations.

Two representation rings carry the monodromy data:

* ``R(Z2)[q]`` with basis ``T`` (trivial) and ``N`` (sign), ``N*N = T``;
* ``R(Z2 x Z2)[q]`` with basis ``T, S2, S-2, S0``, multiplying as the Klein
  four-group (each basis element squares to ``T``, the product of two distinct
  non-trivial ones is the third).

The total-space formulas only cover the two base configurations in use: the
line minus ``l`` points, with ``Z2`` monodromy, and ``C - {0, 1, -1}`` modulo
``x -> 1/x``, with ``Z2 x Z2`` monodromy.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Union

from .polyq import EPoly, ONE, Q, ZERO, parse as parse_poly, render as render_poly

__all__ = [
    "EquivPair",
    "RepZ2",
    "RepZ2xZ2",
    "ZTotals",
    "quotient_fibration_e",
    "quotient_fibration_pair",
    "tensor_z2",
    "tensor_z2z2",
    "pullback_tau",
    "restrict_to_z2",
    "fiber_e",
    "total_e_punctured_line",
    "total_e_z2z2",
    "conjugation_closure_e",
    "parse_rep",
]


def _p(x) -> EPoly:
    return EPoly.coerce(x)


@dataclass(frozen=True)
class EquivPair:
    """Invariant and anti-invariant parts ``(e+, e-)`` under a Z2 action."""

    plus: EPoly
    minus: EPoly

    def __post_init__(self):
        object.__setattr__(self, "plus", _p(self.plus))
        object.__setattr__(self, "minus", _p(self.minus))

    @property
    def total(self) -> EPoly:
        return self.plus + self.minus

    @classmethod
    def trivial(cls, e) -> "EquivPair":
        return cls(_p(e), ZERO)

    def __str__(self) -> str:
        return f"({self.plus}, {self.minus})"


def quotient_fibration_e(f: EquivPair, b: EquivPair) -> EPoly:
    """E-polynomial of ``(F x B)/Z2`` for a diagonal Z2 action."""
    return f.plus * b.plus + f.minus * b.minus


def quotient_fibration_pair(f: EquivPair, b: EquivPair) -> EquivPair:
    return EquivPair(
        f.plus * b.plus + f.minus * b.minus,
        f.plus * b.minus + f.minus * b.plus,
    )


_Z2_LABELS = ("T", "N")
_Z2Z2_LABELS = ("T", "S₂", "S₋₂", "S₀")
_ASCII = {"S2": "S₂", "S-2": "S₋₂", "S0": "S₀", "S_2": "S₂", "S_-2": "S₋₂", "S_0": "S₀"}


def _render(coeffs, labels) -> str:
    terms = [f"({render_poly(c)}){lab}" for c, lab in zip(coeffs, labels) if not c.is_zero]
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class RepZ2:
    t: EPoly
    n: EPoly

    def __post_init__(self):
        object.__setattr__(self, "t", _p(self.t))
        object.__setattr__(self, "n", _p(self.n))

    @property
    def coeffs(self) -> tuple[EPoly, EPoly]:
        return (self.t, self.n)

    def __add__(self, other: "RepZ2") -> "RepZ2":
        return RepZ2(self.t + other.t, self.n + other.n)

    def __sub__(self, other: "RepZ2") -> "RepZ2":
        return RepZ2(self.t - other.t, self.n - other.n)

    def __neg__(self) -> "RepZ2":
        return RepZ2(-self.t, -self.n)

    def scale(self, c) -> "RepZ2":
        c = _p(c)
        return RepZ2(c * self.t, c * self.n)

    def __mul__(self, other):
        if isinstance(other, RepZ2):
            return tensor_z2(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __str__(self) -> str:
        return _render(self.coeffs, _Z2_LABELS)


@dataclass(frozen=True)
class RepZ2xZ2:
    t: EPoly
    s2: EPoly
    sm2: EPoly
    s0: EPoly

    def __post_init__(self):
        for name in ("t", "s2", "sm2", "s0"):
            object.__setattr__(self, name, _p(getattr(self, name)))

    @property
    def coeffs(self) -> tuple[EPoly, EPoly, EPoly, EPoly]:
        return (self.t, self.s2, self.sm2, self.s0)

    def __add__(self, other: "RepZ2xZ2") -> "RepZ2xZ2":
        return RepZ2xZ2(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RepZ2xZ2") -> "RepZ2xZ2":
        return RepZ2xZ2(*(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "RepZ2xZ2":
        return RepZ2xZ2(*(-a for a in self.coeffs))

    def scale(self, c) -> "RepZ2xZ2":
        c = _p(c)
        return RepZ2xZ2(*(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, RepZ2xZ2):
            return tensor_z2z2(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __str__(self) -> str:
        return _render(self.coeffs, _Z2Z2_LABELS)


def tensor_z2(r1: RepZ2, r2: RepZ2) -> RepZ2:
    return RepZ2(r1.t * r2.t + r1.n * r2.n, r1.t * r2.n + r1.n * r2.t)


# Klein four-group: index 0 = T, 1 = S2, 2 = S-2, 3 = S0; product is XOR.
def tensor_z2z2(r1: RepZ2xZ2, r2: RepZ2xZ2) -> RepZ2xZ2:
    out = [ZERO] * 4
    for i, a in enumerate(r1.coeffs):
        if a.is_zero:
            continue
        for j, b in enumerate(r2.coeffs):
            out[i ^ j] = out[i ^ j] + a * b
    return RepZ2xZ2(*out)


def pullback_tau(r: RepZ2xZ2) -> RepZ2xZ2:
    return RepZ2xZ2(r.t, r.sm2, r.s2, r.s0)


def restrict_to_z2(r: RepZ2xZ2) -> RepZ2:
    return RepZ2(r.t + r.s0, r.s2 + r.sm2)


def fiber_e(r: Union[RepZ2, RepZ2xZ2]) -> EPoly:
    total = ZERO
    for c in r.coeffs:
        total = total + c
    return total


def total_e_punctured_line(r: RepZ2, num_punctures: int) -> EPoly:
    """Total space over the line minus ``num_punctures`` points."""
    if num_punctures < 1:
        raise ValueError("the base must omit at least one point")
    return (Q - 1) * r.t - (num_punctures - 1) * (r.t + r.n)


class ZTotals(NamedTuple):
    total: EPoly
    plus: EPoly
    minus: EPoly


def total_e_z2z2(r: RepZ2xZ2) -> ZTotals:
    a, b, c, d = r.coeffs
    return ZTotals(
        total=(Q - 3) * (a + d) - 2 * (b + c),
        plus=(Q - 2) * a - (b + c + d),
        minus=(Q - 2) * d - (a + b + c),
    )


def conjugation_closure_e(r: RepZ2xZ2) -> EPoly:
    """E-polynomial of the PGL2-sweep of a fibration over ``C - {0, 1, -1}``.

    Equals ``(q^2 - q) e+ + q e`` with ``e+, e`` from :func:`total_e_z2z2`.
    """
    a, b, c, d = r.coeffs
    return Q * (Q * Q - 2 * Q - 1) * a - Q * (Q + 1) * (b + c) - 2 * Q * d


_REP_TERM = re.compile(r"\(([^()]*)\)\s*(T|N|S₂|S₋₂|S₀|S_?-2|S_?2|S_?0)")


def parse_rep(text: str, ring: type | None = None) -> Union[RepZ2, RepZ2xZ2]:
    """Parse ``(a)T + (b)N`` or ``(a)T + (b)S₂ + (c)S₋₂ + (d)S₀``.

    Without ``ring`` the ring is inferred from the labels, and text that only
    uses ``T`` (or is ``0``) lands in ``R(Z2)``.
    """
    s = text.strip()
    if s == "0":
        return RepZ2xZ2(ZERO, ZERO, ZERO, ZERO) if ring is RepZ2xZ2 else RepZ2(ZERO, ZERO)
    found = list(_REP_TERM.finditer(s))
    leftover = _REP_TERM.sub("", s).replace("+", "").strip()
    if not found or leftover:
        raise ValueError(f"cannot parse representation {text!r}")
    acc: dict[str, EPoly] = {}
    for m in found:
        label = _ASCII.get(m.group(2), m.group(2))
        acc[label] = acc.get(label, ZERO) + parse_poly(m.group(1))
    if "N" in acc and any(k in acc for k in _Z2Z2_LABELS[1:]):
        raise ValueError(f"mixed Z2 and Z2xZ2 labels in {text!r}")
    if ring is RepZ2 and any(k in acc for k in _Z2Z2_LABELS[1:]):
        raise ValueError(f"{text!r} is not an element of R(Z2)")
    if ring is RepZ2xZ2 and "N" in acc:
        raise ValueError(f"{text!r} is not an element of R(Z2 x Z2)")
    if ring is RepZ2xZ2 or any(k in acc for k in _Z2Z2_LABELS[1:]):
        return RepZ2xZ2(*(acc.get(k, ZERO) for k in _Z2Z2_LABELS))
    return RepZ2(acc.get("T", ZERO), acc.get("N", ZERO))


# Convenience constants.
T2 = RepZ2(ONE, ZERO)
N2 = RepZ2(ZERO, ONE)
