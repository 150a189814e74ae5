"""Catalog of the named strata of ``SL2`` and ``SL2 x SL2``.

Per-stratum polynomials are stored as data; the cross-identities in
:func:`consistency_report` and the finite-field oracle are what keep them
honest.  Identifiers follow a plain ASCII scheme: ``X4bar_lambda`` is the
commutator fiber over a diagonal matrix, ``X4bar_mod_Z2`` its family over
``C - {0, 1, -1}`` taken modulo ``lambda -> 1/lambda``, and so on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .hodge_rep import (
    EquivPair,
    RepZ2,
    RepZ2xZ2,
    conjugation_closure_e,
    fiber_e,
    quotient_fibration_e,
    restrict_to_z2,
    total_e_punctured_line,
    total_e_z2z2,
)
from .polyq import EPoly, Q, parse

__all__ = [
    "StratumRecord",
    "UnknownSpace",
    "Check",
    "lookup",
    "ids",
    "records",
    "X4_SIGNS",
    "inclusion_exclusion",
    "slice_terms_X4bar",
    "slice_terms_X4bar_mod_Z2",
    "rederive_R_X4bar",
    "rederive_R_X4bar_mod_Z2",
    "consistency_report",
    "export_json",
]


class UnknownSpace(KeyError):
    def __str__(self) -> str:
        return f"no catalog entry named {self.args[0]!r}"


Rep = Union[RepZ2, RepZ2xZ2]


@dataclass(frozen=True)
class StratumRecord:
    id: str
    epoly: EPoly
    citation: str
    equiv: Optional[EquivPair] = None
    monodromy: Optional[Rep] = None
    fiber_id: Optional[str] = None
    factors: tuple[EPoly, ...] = ()
    notes: str = ""

    def __post_init__(self):
        if self.equiv is not None and self.equiv.total != self.epoly:
            raise ValueError(
                f"{self.id}: equivariant split {self.equiv} does not sum to {self.epoly}"
            )
        if self.monodromy is not None and self.fiber_id is None:
            raise ValueError(f"{self.id}: monodromy data needs the id of its fiber")

    def to_dict(self) -> dict:
        out: dict = {
            "id": self.id,
            "coefficients": list(self.epoly.coeffs),
            "epoly": str(self.epoly),
            "citation": self.citation,
        }
        if self.equiv is not None:
            out["equiv"] = {
                "plus": list(self.equiv.plus.coeffs),
                "minus": list(self.equiv.minus.coeffs),
            }
        if self.monodromy is not None:
            ring = "Z2" if isinstance(self.monodromy, RepZ2) else "Z2xZ2"
            out["monodromy"] = {
                "ring": ring,
                "coefficients": [list(c.coeffs) for c in self.monodromy.coeffs],
                "text": str(self.monodromy),
                "fiber": self.fiber_id,
            }
        if self.factors:
            out["factors"] = [str(f) for f in self.factors]
        if self.notes:
            out["notes"] = self.notes
        return out


def _e(text: str) -> EPoly:
    return parse(text)


def _pair(plus: str, minus: str) -> EquivPair:
    return EquivPair(_e(plus), _e(minus))


# Inclusion-exclusion signs of the nine substrata of X4 and its fibers:
# X^4 is the overlap of X^2 and X^3, and X^7, X^8 are removed from the conic
# completion X^6.
X4_SIGNS = (1, 1, 1, 1, -1, 1, 1, -1, -1)

_X4_PARTS = (
    "q^4 - 3q^3 - q^2 + 3q",
    "q^4 - 3q^3 - q^2 + 3q",
    "q^5 - 6q^4 + 4q^3 + 6q^2 - 5q",
    "q^5 - 6q^4 + 4q^3 + 6q^2 - 5q",
    "2q^4 - 10q^3 - 2q^2 + 10q",
    "2q^5 - 8q^4 + 8q^3 + 8q^2 - 10q",
    "q^6 - 4q^5 + q^4 + 11q^3 - 2q^2 - 7q",
    "q^5 - 9q^4 + 21q^3 + 9q^2 - 22q",
    "q^5 - 6q^4 + 10q^3 + 6q^2 - 11q",
)

_X4BAR_LAMBDA_PARTS = (
    "2q - 2",
    "2q - 2",
    "4q^2 - 8q + 4",
    "4q^2 - 8q + 4",
    "8q - 8",
    "4q^2 - 12q + 8",
    "q^3 - 4q^2 - q + 4",
    "4q^2 - 22q + 18",
    "q^2 - 8q + 7",
)

_X4BAR_PARTS = (
    "q^2 - 6q + 5",
    "q^2 - 6q + 5",
    "2q^3 - 14q^2 + 22q - 10",
    "2q^3 - 14q^2 + 22q - 10",
    "4q^2 - 24q + 20",
    "2q^3 - 16q^2 + 34q - 20",
    "q^4 - 6q^3 + 10q^2 + 6q - 11",
    "2q^3 - 21q^2 + 64q - 45",
    "q^3 - 9q^2 + 27q - 19",
)

_QM1 = Q - 1


def slice_terms_X4bar() -> list[tuple[int, RepZ2]]:
    """Signed ``R(S^i)`` for the nine slices, before scaling by ``q - 1``."""
    T, N = RepZ2(1, 0), RepZ2(0, 1)
    tn = T + N
    reps = [
        tn,
        tn,
        tn.scale(2 * (Q - 1)),
        tn.scale(2 * (Q - 1)),
        tn.scale(4),
        tn.scale(2 * (Q - 2)),
        RepZ2(Q * Q - 2 * Q - 3, -(Q + 1)),
        tn.scale(2 * Q - 9),
        RepZ2(Q - 5, -2),
    ]
    return list(zip(X4_SIGNS, reps))


def slice_terms_X4bar_mod_Z2() -> list[tuple[int, RepZ2xZ2]]:
    """Signed ``R(X4bar^i / Z2)`` for the nine substrata."""
    one = RepZ2xZ2(1, 1, 1, 1)
    sq = (Q - 1) ** 2
    reps = [
        RepZ2xZ2(Q, Q, -1, -1),
        RepZ2xZ2(Q, Q, -1, -1),
        one.scale(sq),
        one.scale(sq),
        one.scale(2 * (Q - 1)),
        RepZ2xZ2(Q * Q - Q + 1, 1 - 2 * Q, Q * Q - Q + 1, 1 - 2 * Q).scale(2),
        RepZ2xZ2(Q * Q - 3 * Q, -Q, 1, 3 - Q).scale(Q + 1),
        RepZ2xZ2(
            Q * Q - 5 * Q + 5,
            Q * Q - 5 * Q + 5,
            Q * Q - 6 * Q + 4,
            Q * Q - 6 * Q + 4,
        ),
        RepZ2xZ2(Q * Q - 4 * Q + 1, 1 - Q, 1 - Q, 4 - 2 * Q),
    ]
    return list(zip(X4_SIGNS, reps))


def inclusion_exclusion(terms: Iterable[tuple[int, object]]):
    acc = None
    for sign, value in terms:
        v = value if sign > 0 else -value
        acc = v if acc is None else acc + v
    return acc


def rederive_R_X4bar() -> RepZ2:
    return inclusion_exclusion((s, r.scale(_QM1)) for s, r in slice_terms_X4bar())


def rederive_R_X4bar_mod_Z2() -> RepZ2xZ2:
    return inclusion_exclusion(slice_terms_X4bar_mod_Z2())


R_X4BAR = RepZ2(_e("q^3 - 1"), _e("3q^2 - 3q"))
R_X4BAR_MOD_Z2 = RepZ2xZ2(_e("q^3"), _e("-3q"), _e("3q^2"), _e("-1"))


# Assumed, not checked: the covers trivialising the monodromy are rational curves.
_ASSUMED_RATIONAL = "total-space formula assumes the monodromy covers are rational curves"


def _build() -> dict[str, StratumRecord]:
    recs: list[StratumRecord] = []

    def add(id, epoly, citation, **kw):
        recs.append(StratumRecord(id, _e(epoly) if isinstance(epoly, str) else epoly, citation, **kw))

    # Groups and coset spaces.
    add("SL2", "q^3 - q", "special linear group",
        factors=(Q, Q + 1, Q - 1))
    add("PGL2", "q^3 - q", "projective linear group; conjugation acts through it",
        equiv=_pair("q^3 - q", "0"))
    add("GL2", "q^4 - q^3 - q^2 + q", "general linear group",
        factors=(Q, Q + 1, Q - 1, Q - 1))
    add("GL2_mod_D", "q^2 + q", "GL2 modulo the diagonal torus; Z2 swaps the eigenlines",
        equiv=_pair("q^2", "q"))
    add("GL2_mod_U", "q^2 - 1", "GL2 modulo the centralizer of a Jordan block",
        factors=(Q - 1, Q + 1))
    add("Cstar", "q - 1", "C* with the inversion action",
        equiv=_pair("q", "-1"))
    add("C_minus_0_pm1", "q - 3", "C minus {0, 1, -1} with the inversion action",
        equiv=_pair("q - 2", "-1"))

    # Jordan-type stratification of SL2.
    add("W0", "1", "identity matrix")
    add("W1", "1", "minus identity")
    add("W2", "q^2 - 1", "conjugacy class of J+")
    add("W3", "q^2 - 1", "conjugacy class of J-")
    add("W4", "q^3 - 2q^2 - q", "diagonalizable matrices with trace not +-2",
        notes="quotient of W4tilde by the eigenvalue swap")
    add("W4tilde", "q^3 - 2q^2 - 3q",
        "pairs (matrix in W4, choice of eigenvalue); double cover of W4",
        equiv=_pair("q^3 - 2q^2 - q", "-2q"),
        notes="used only as the base of X0'a")

    # Strata of SL2 x SL2 by commutator type.
    add("X0", "q^4 + 4q^3 - q^2 - 4q", "commuting pairs",
        notes="4 e(SL2) - 4 + e(X0')")
    add("X0prime", "q^4 - q^2 + 4", "commuting pairs, neither entry central")
    add("X0prime_a", "q^4 - 4q^3 + 3q^2 + 4q", "commuting diagonalizable pairs",
        notes="Z2-quotient fibration over W4tilde with fiber C - {0, 1, -1}")
    add("X0prime_b", "4q^3 - 4q^2 - 4q + 4", "commuting unipotent-type pairs",
        factors=(EPoly.const(4), Q * Q - 1, Q - 1))
    add("X1", "q^3 - q", "pairs with commutator -Id; a PGL2-torsor")
    add("X2bar", "q^3 - 2q^2 - 3q", "pairs with commutator J+",
        factors=(Q, Q * Q - 2 * Q - 3))
    add("X2", "q^5 - 2q^4 - 4q^3 + 2q^2 + 3q", "pairs with commutator conjugate to J+",
        factors=(Q * Q - 1, _e("q^3 - 2q^2 - 3q")))
    add("X3prime_bar", "2q^2 - 2q", "commutator J-, first piece",
        notes="two copies of a C*-bundle over C")
    add("X3prime", "2q^4 - 2q^3 - 2q^2 + 2q", "commutator conjugate to J-, first piece")
    add("S_conic", "q^2 + q + 2", "auxiliary surface in the second J- piece")
    add("X3dprime_bar", "q^3 + q^2 + 2q", "commutator J-, second piece",
        factors=(Q, _e("q^2 + q + 2")))
    add("X3dprime", "q^5 + q^4 + q^3 - q^2 - 2q", "commutator conjugate to J-, second piece")
    add("X3bar", "q^3 + 3q^2", "pairs with commutator J-",
        factors=(Q, Q * Q + 3 * Q))
    add("X3", "q^5 + 3q^4 - q^3 - 3q^2", "pairs with commutator conjugate to J-",
        factors=(Q * Q - 1, _e("q^3 + 3q^2")))
    add("X4", "q^6 - 2q^5 - 4q^4 + 3q^2 + 2q",
        "pairs with diagonalizable commutator of trace not +-2",
        factors=(Q**3 - Q, _e("q^3 - 2q^2 - 3q - 2")))
    for i, text in enumerate(_X4_PARTS):
        add(f"X4_{i}", text, f"substratum {i} of X4",
            notes=f"inclusion-exclusion sign {X4_SIGNS[i]:+d}")
    add("X4bar_lambda", "q^3 + 3q^2 - 3q - 1",
        "pairs with commutator diag(lambda, 1/lambda)",
        factors=(Q - 1, _e("q^2 + 4q + 1")))
    for i, text in enumerate(_X4BAR_LAMBDA_PARTS):
        add(f"X4bar_lambda_{i}", text, f"slice {i} of the fixed-lambda fiber",
            notes=f"inclusion-exclusion sign {X4_SIGNS[i]:+d}")
    add("X4bar", "q^4 - 3q^3 - 6q^2 + 5q + 3",
        "family of X4bar_lambda over lambda in C - {0, 1, -1}",
        equiv=_pair("q^4 - 2q^3 - 3q^2 + 3q + 1", "-q^3 - 3q^2 + 2q + 2"),
        monodromy=R_X4BAR, fiber_id="X4bar_lambda", notes=_ASSUMED_RATIONAL)
    for i, text in enumerate(_X4BAR_PARTS):
        add(f"X4bar_{i}", text, f"substratum {i} of the family",
            notes=f"inclusion-exclusion sign {X4_SIGNS[i]:+d}")
    add("X4bar_mod_Z2", "q^4 - 2q^3 - 3q^2 + 3q + 1",
        "family modulo lambda -> 1/lambda, over C - {2, -2}",
        monodromy=R_X4BAR_MOD_Z2, fiber_id="X4bar_lambda", notes=_ASSUMED_RATIONAL)
    return {r.id: r for r in recs}


_CATALOG = _build()


def lookup(id: str) -> StratumRecord:
    try:
        return _CATALOG[id]
    except KeyError:
        raise UnknownSpace(id) from None


def ids() -> list[str]:
    return list(_CATALOG)


def records() -> list[StratumRecord]:
    return list(_CATALOG.values())


def e(id: str) -> EPoly:
    return lookup(id).epoly


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: object
    rhs: object
    detail: str = ""

    def to_dict(self) -> dict:
        def enc(v):
            if isinstance(v, EPoly):
                return list(v.coeffs)
            return str(v)
        return {"name": self.name, "passed": self.passed, "lhs": enc(self.lhs),
                "rhs": enc(self.rhs), "detail": self.detail}


def _check(name: str, lhs, rhs, detail: str = "") -> Check:
    return Check(name, lhs == rhs, lhs, rhs, detail)


def consistency_report() -> list[Check]:
    sl2 = e("SL2")
    out = [
        _check("sum_W_strata", sum((e(f"W{i}") for i in range(5)), EPoly()), sl2),
        _check("W4_quotient_fibration",
               quotient_fibration_e(lookup("GL2_mod_D").equiv, lookup("C_minus_0_pm1").equiv),
               e("W4")),
        _check("W4tilde_split", lookup("W4tilde").equiv.plus, e("W4")),
        _check("sum_X_strata", sum((e(f"X{i}") for i in range(5)), EPoly()), sl2 * sl2),
        _check("X0_decomposition", 4 * sl2 - 4 + e("X0prime"), e("X0")),
        _check("X0prime_split", e("X0prime_a") + e("X0prime_b"), e("X0prime")),
        _check("X0prime_a_fibration",
               quotient_fibration_e(lookup("C_minus_0_pm1").equiv, lookup("W4tilde").equiv),
               e("X0prime_a")),
        _check("X0prime_b_product", 4 * e("GL2_mod_U") * e("Cstar"), e("X0prime_b")),
        _check("X1_torsor", e("PGL2"), e("X1")),
        _check("X2_product", e("GL2_mod_U") * e("X2bar"), e("X2")),
        _check("X3prime_product", e("GL2_mod_U") * e("X3prime_bar"), e("X3prime")),
        _check("X3dprime_product", e("GL2_mod_U") * e("X3dprime_bar"), e("X3dprime")),
        _check("X3bar_split", e("X3prime_bar") + e("X3dprime_bar"), e("X3bar")),
        _check("X3_split", e("X3prime") + e("X3dprime"), e("X3")),
        _check("X3_product", e("GL2_mod_U") * e("X3bar"), e("X3")),
        _check("X4_inclusion_exclusion",
               inclusion_exclusion(zip(X4_SIGNS, (e(f"X4_{i}") for i in range(9)))), e("X4")),
        _check("X4bar_lambda_inclusion_exclusion",
               inclusion_exclusion(zip(X4_SIGNS, (e(f"X4bar_lambda_{i}") for i in range(9)))),
               e("X4bar_lambda")),
        _check("X4bar_inclusion_exclusion",
               inclusion_exclusion(zip(X4_SIGNS, (e(f"X4bar_{i}") for i in range(9)))),
               e("X4bar")),
        _check("R_X4bar_rederived", rederive_R_X4bar(), lookup("X4bar").monodromy),
        _check("R_X4bar_mod_Z2_rederived", rederive_R_X4bar_mod_Z2(),
               lookup("X4bar_mod_Z2").monodromy),
        _check("R_X4bar_mod_Z2_restricts", restrict_to_z2(R_X4BAR_MOD_Z2), R_X4BAR),
        _check("X4bar_total_from_monodromy", total_e_punctured_line(R_X4BAR, 3), e("X4bar")),
        _check("X4bar_z2z2_total", total_e_z2z2(R_X4BAR_MOD_Z2).total, e("X4bar")),
        _check("X4bar_mod_Z2_plus", total_e_z2z2(R_X4BAR_MOD_Z2).plus, e("X4bar_mod_Z2")),
        _check("X4bar_minus", total_e_z2z2(R_X4BAR_MOD_Z2).minus, lookup("X4bar").equiv.minus),
        _check("X4_from_conjugation_closure", conjugation_closure_e(R_X4BAR_MOD_Z2), e("X4")),
        _check("X4_from_fibrations",
               (Q * Q - Q) * e("X4bar_mod_Z2") + Q * e("X4bar"), e("X4")),
    ]
    for rec in records():
        if rec.monodromy is not None:
            out.append(_check(f"{rec.id}_fiber", fiber_e(rec.monodromy), e(rec.fiber_id)))
        if rec.factors:
            prod = EPoly.const(1)
            for f in rec.factors:
                prod = prod * f
            out.append(_check(f"{rec.id}_factored", prod, rec.epoly))
        if rec.equiv is not None:
            out.append(_check(f"{rec.id}_equiv_sum", rec.equiv.total, rec.epoly))
    return out


def export_json(indent: int | None = 2) -> str:
    """Whole catalog as one JSON document; coefficients are listed ascending."""
    doc = {
        "schema": "charvar.catalog/1",
        "variable": "q",
        "records": [r.to_dict() for r in records()],
        "slices": {
            "X4bar": [
                {"sign": s, "rep": str(r), "scale": "q - 1"} for s, r in slice_terms_X4bar()
            ],
            "X4bar_mod_Z2": [{"sign": s, "rep": str(r)} for s, r in slice_terms_X4bar_mod_Z2()],
        },
    }
    return json.dumps(doc, indent=indent, ensure_ascii=False)
