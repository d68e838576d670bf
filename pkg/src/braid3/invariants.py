"""Per-link reports and the degree/coefficient laws of 3-braid closures.

The central facts wired in as runtime checks: for every closed 3-braid,
the top z-degree of the skein polynomial equals 1 - chi, the bottom
v-degree never exceeds 1 - chi, and the coefficient of z^{1-chi} is, up to
a unit +-v^k, one of 1, 1+v^2, 1-v^2, with (1-v^2)^2 reserved for the
3-component unlink.  A report that violates one of these raises
``ConsistencyError`` (a bug), never a user error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import xu
from .errors import ConsistencyError
from .hecke import homfly
from .laurent import LaurentPoly1, LaurentPoly2, alexander, conway
from .words import Word, closure_components

UNIT_MONOMIAL = "unit-monomial"
ONE_PLUS_V2 = "monomial-times-one-plus-v2"
ONE_MINUS_V2 = "monomial-times-one-minus-v2"
THREE_UNLINK_SQUARE = "three-unlink-square"
OTHER = "other"


@dataclass(frozen=True)
class CoeffClass:
    """Exact shape of the z-leading coefficient: sign * v^k * factor."""

    tag: str
    sign: int = 0
    k: int = 0

    def __str__(self) -> str:
        return self.tag if self.tag == OTHER else f"{self.tag}(sign={self.sign:+d}, k={self.k})"


def classify_leading_coefficient(p: LaurentPoly2, chi: int) -> CoeffClass:
    """Pattern-match the coefficient of z^{1-chi}."""
    if p.is_zero:
        raise ValueError("cannot classify the zero polynomial")
    lead = p.z_coefficient(1 - chi)
    if lead.is_zero:
        return CoeffClass(OTHER)
    items = dict(lead.items())
    lo = min(items)
    sign = items[lo]
    if sign not in (1, -1):
        return CoeffClass(OTHER)
    if items == {lo: sign}:
        return CoeffClass(UNIT_MONOMIAL, sign, lo)
    if items == {lo: sign, lo + 2: sign}:
        return CoeffClass(ONE_PLUS_V2, sign, lo)
    if items == {lo: sign, lo + 2: -sign}:
        return CoeffClass(ONE_MINUS_V2, sign, lo)
    if items == {lo: sign, lo + 2: -2 * sign, lo + 4: sign}:
        return CoeffClass(THREE_UNLINK_SQUARE, sign, lo)
    return CoeffClass(OTHER)


def mwf_lower_bound(p: LaurentPoly2) -> int:
    """Morton-Franks-Williams: braid index >= v-span/2 + 1."""
    if p.is_zero:
        raise ValueError("MWF bound of the zero polynomial")
    span = p.max_deg_v() - p.min_deg_v()
    return -(-span // 2) + 1


def c3_bound(chi: int) -> int:
    """Crossing-number bound for a 3-braid representation: floor(5(3-chi)/3)."""
    if chi > 3:
        raise ValueError("Euler characteristic of a 3-braid closure is at most 3")
    return 5 * (3 - chi) // 3


def crossing_obstruction(p: LaurentPoly2, crossings: int) -> bool:
    """True when the crossing number certifies the knot is not a closed 3-braid.

    The test is  c > 2 * floor(5/6 * (max deg_z P + 2)); the crossing number
    itself must be supplied by the caller.
    """
    return crossings > 2 * (5 * (p.max_deg_z() + 2) // 6)


def pmcf_predicate(p: LaurentPoly2) -> bool:
    """Strong-quasipositivity criterion from the Conway polynomial.

    True iff max deg nabla < max deg_z P or the leading Conway coefficient
    is +-2.  For a 3-braid closure this forces a positive band form.
    """
    if p.is_zero:
        raise ValueError("predicate undefined for the zero polynomial")
    nabla = conway(p)
    if nabla.is_zero:
        return True
    return nabla.max_deg() < p.max_deg_z() or nabla.leading_coefficient() in (2, -2)


def maximally_monic(alex: LaurentPoly1, g: int) -> bool:
    """Leading coefficient +-1 and degree (in t = s^2) equal to the genus."""
    if alex.is_zero:
        return False
    return alex.leading_coefficient() in (1, -1) and alex.max_deg() == 2 * g


@dataclass(frozen=True)
class InvariantReport:
    word: Word
    minimal_length: int
    chi: int
    components: int
    genus: int
    quasipositive: str
    polynomial: LaurentPoly2
    max_deg_z: int
    min_deg_v: int
    max_deg_v: int
    leading_class: CoeffClass
    mwf_bound: int
    conway: LaurentPoly1
    alexander: LaurentPoly1


def report(word: Sequence[int]) -> InvariantReport:
    """Compute every invariant of the closure and check the built-in laws."""
    w = tuple(word)
    nf = xu.reduce(w)
    chi = 3 - nf.minimal_length
    m = closure_components(w)
    p = homfly(w)
    max_z = p.max_deg_z()
    if max_z != 1 - chi:
        raise ConsistencyError(
            f"top z-degree {max_z} differs from 1 - chi = {1 - chi} for {w}"
        )
    min_v = p.min_deg_v()
    if min_v > 1 - chi:
        raise ConsistencyError(
            f"bottom v-degree {min_v} exceeds 1 - chi = {1 - chi} for {w}"
        )
    leading = classify_leading_coefficient(p, chi)
    if leading.tag == OTHER:
        raise ConsistencyError(f"leading coefficient outside the allowed classes for {w}")
    nabla = conway(p)
    return InvariantReport(
        word=w,
        minimal_length=nf.minimal_length,
        chi=chi,
        components=m,
        genus=(2 - chi - m) // 2,
        quasipositive=xu.is_strongly_quasipositive(w),
        polynomial=p,
        max_deg_z=max_z,
        min_deg_v=min_v,
        max_deg_v=p.max_deg_v(),
        leading_class=leading,
        mwf_bound=mwf_lower_bound(p),
        conway=nabla,
        alexander=alexander(nabla),
    )
