"""Exhaustive generation of minimal band words and the derived censuses.

Minimal words are generated constructively in their normal-form shapes
(never by filtering all words): positive delta^k R, negative L^{-1} delta^{-k},
and mixed L^{-1} R with both sides nonempty, non-decreasing and cyclically
reduced.  Words are identified up to the closure symmetries that preserve
every computed invariant: cyclic rotation and the subscript shift
(conjugation by delta).  Mirrors are kept distinct because chirality
matters for quasipositivity; census grouping identifies a polynomial with
its mirror image instead.

A brute-force path over all 6^n words doubles as a completeness oracle for
small n and is exercised by the acceptance suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

from . import xu
from .errors import CapExceededError, ConsistencyError
from .hecke import homfly, pretzel_homfly
from .invariants import mwf_lower_bound
from .laurent import LaurentPoly2, mirror_image
from .words import DELTA, Word, closure_components, cyclic_rotate, inverse, shift_indices

DEFAULT_MAX_BANDS = 14

_LETTERS = (1, 2, 3, -1, -2, -3)
_DELTA_INV = (-1, -2)


def canonical_key(word: Sequence[int]) -> Word:
    """Lexicographically least word over all rotations and subscript shifts."""
    w = tuple(word)
    if not w:
        return w
    return min(
        shift_indices(cyclic_rotate(w, r), s) for r in range(len(w)) for s in range(3)
    )


def nondecreasing_words(length: int) -> Iterator[Word]:
    """Positive words where each subscript is followed by itself or +1 mod 3."""
    if length == 0:
        yield ()
        return
    for first in (1, 2, 3):
        for steps in itertools.product((0, 1), repeat=length - 1):
            word = [first]
            for s in steps:
                word.append((word[-1] - 1 + s) % 3 + 1)
            yield tuple(word)


def generate_normal_forms(length: int) -> Iterator[tuple[str, Word]]:
    """All normal-form words of the given length, labelled with their kind."""
    if length < 0:
        raise ValueError("length must be non-negative")
    for k in range(length // 2 + 1):
        rest = length - 2 * k
        for r in nondecreasing_words(rest):
            yield xu.TYPE_A_POSITIVE, DELTA * k + r
        if length > 0:
            for l in nondecreasing_words(rest):
                yield xu.TYPE_A_NEGATIVE, inverse(l) + _DELTA_INV * k
    for left_len in range(1, length):
        for left in nondecreasing_words(left_len):
            for right in nondecreasing_words(length - left_len):
                if left[0] != right[0] and left[-1] != right[-1]:
                    yield xu.TYPE_B, inverse(left) + right


@dataclass(frozen=True)
class CensusEntry:
    """One symmetry orbit of minimal words."""

    word: Word  # canonical orbit representative
    kind: str
    length: int
    components: int
    chi: int
    polynomial: LaurentPoly2
    matched_name: str | None = None


def poly_class_key(p: LaurentPoly2) -> tuple:
    """A grouping key identifying a polynomial with its mirror image."""
    a = tuple(sorted(p.terms_dict().items()))
    b = tuple(sorted(mirror_image(p).terms_dict().items()))
    return min(a, b)


def enumerate_minimal(length: int, cap: int = DEFAULT_MAX_BANDS) -> list[CensusEntry]:
    """All minimal-word orbits of exactly the given length, sorted."""
    if length > cap:
        raise CapExceededError(
            f"length {length} exceeds the enumeration cap {cap}; raise --max-bands"
        )
    seen: dict[Word, str] = {}
    for kind, word in generate_normal_forms(length):
        key = canonical_key(word)
        if key not in seen:
            seen[key] = kind
    entries = []
    for key in sorted(seen):
        entries.append(
            CensusEntry(
                word=key,
                kind=seen[key],
                length=length,
                components=closure_components(key),
                chi=3 - length,
                polynomial=homfly(key),
            )
        )
    return entries


def brute_force_orbits(length: int) -> set[Word]:
    """Orbit keys of the reduced forms of every length-n word that is minimal.

    Only feasible for small n; the acceptance suite compares this against
    the constructive generator for n <= 6.
    """
    out: set[Word] = set()
    for letters in itertools.product(_LETTERS, repeat=length):
        nf = xu.reduce(letters)
        if nf.minimal_length == length:
            out.add(canonical_key(nf.minimal_word))
    return out


def constructive_orbits(length: int) -> set[Word]:
    return {canonical_key(word) for _, word in generate_normal_forms(length)}


@dataclass(frozen=True)
class SweepReport:
    max_length: int
    orbit_counts: dict[int, int]
    checked: int


def verify_theorem1(max_length: int, cap: int = DEFAULT_MAX_BANDS) -> SweepReport:
    """Assert max deg_z P = length - 2 on every minimal orbit up to max_length."""
    counts: dict[int, int] = {}
    checked = 0
    for n in range(max_length + 1):
        entries = enumerate_minimal(n, cap=cap)
        counts[n] = len(entries)
        for e in entries:
            checked += 1
            if e.polynomial.max_deg_z() != n - 2:
                raise ConsistencyError(
                    f"max deg_z {e.polynomial.max_deg_z()} != {n - 2} "
                    f"for minimal word {e.word}"
                )
    return SweepReport(max_length=max_length, orbit_counts=counts, checked=checked)


def genus_census(g: int, table=None, cap: int = DEFAULT_MAX_BANDS) -> list[CensusEntry]:
    """All knot orbits of genus g (minimal length 2g + 2), with names attached."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    entries = [e for e in enumerate_minimal(2 * g + 2, cap=cap) if e.components == 1]
    if table is not None:
        entries = [replace(e, matched_name=table.match(e.polynomial)) for e in entries]
    return entries


def census_classes(entries: Sequence[CensusEntry]) -> list[list[CensusEntry]]:
    """Group census entries by polynomial, identifying mirror images."""
    groups: dict[tuple, list[CensusEntry]] = {}
    for e in entries:
        groups.setdefault(poly_class_key(e.polynomial), []).append(e)
    return [groups[k] for k in sorted(groups)]


REASON_MWF = "mwf-span-exceeds-3"
REASON_PARITY = "degree-parity-mismatch"
REASON_LEADING = "leading-coefficient-class"
REASON_SEARCH = "exhaustive-search-miss"


@dataclass(frozen=True)
class RealizabilityVerdict:
    realizable: bool
    reason: str | None = None
    witness: Word | None = None


def realizable_3braid(
    p: LaurentPoly2, table=None, cap: int = DEFAULT_MAX_BANDS
) -> RealizabilityVerdict:
    """Decide whether a polynomial is the skein polynomial of some closed 3-braid.

    The pipeline runs the cheap obstructions first and finishes with an
    exhaustive search at the only possible band length, 2 + max deg_z.
    A search beyond the cap raises ``CapExceededError`` (inconclusive).
    """
    if p.is_zero:
        raise ValueError("the zero polynomial is not a link polynomial")
    if mwf_lower_bound(p) > 3:
        return RealizabilityVerdict(False, REASON_MWF)
    parities = {dz & 1 for (_, dz) in p.terms_dict()}
    if len(parities) != 1:
        return RealizabilityVerdict(False, REASON_PARITY)
    chi = 1 - p.max_deg_z()
    from .invariants import OTHER, classify_leading_coefficient

    if classify_leading_coefficient(p, chi).tag == OTHER:
        return RealizabilityVerdict(False, REASON_LEADING)
    length = 3 - chi
    if length < 0:
        return RealizabilityVerdict(False, REASON_SEARCH)
    for entry in enumerate_minimal(length, cap=cap):
        if entry.polynomial == p:
            return RealizabilityVerdict(True, witness=entry.word)
    return RealizabilityVerdict(False, REASON_SEARCH)


@dataclass(frozen=True)
class PretzelReport:
    twists: tuple[int, int, int, int]
    chi: int
    max_deg_v: int
    mwf_bound: int


def braid_index_check_pretzel(p: int, q: int, r: int, s: int) -> PretzelReport:
    """Certify braid index 4 for a pretzel with all twist counts >= 2.

    Seifert's algorithm on the standard parallel diagram leaves one circle
    per twist region and one band per crossing, so chi = 4 - (p+q+r+s).
    The check asserts max deg_v P = 7 - chi and an MWF bound of exactly 4
    (the two statements are equivalent given min deg_v = 1 - chi, which
    holds for these positive links).
    """
    twists = (p, q, r, s)
    if any(t < 2 for t in twists):
        raise ValueError("all twist counts must be at least 2")
    poly = pretzel_homfly(twists)
    chi = len(twists) - sum(twists)
    max_v = poly.max_deg_v()
    bound = mwf_lower_bound(poly)
    if poly.min_deg_v() != 1 - chi or poly.max_deg_z() != 1 - chi:
        raise ConsistencyError(f"bottom v-degree is not 1 - chi for pretzel {twists}")
    if max_v != 7 - chi:
        raise ConsistencyError(f"max deg_v {max_v} != {7 - chi} for pretzel {twists}")
    if bound != 4:
        raise ConsistencyError(f"MWF bound {bound} != 4 for pretzel {twists}")
    return PretzelReport(twists=twists, chi=chi, max_deg_v=max_v, mwf_bound=bound)
