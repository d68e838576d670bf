"""Exact sparse Laurent polynomials in one and two variables.

Coefficients are Python integers, so nothing overflows no matter how many
terms get multiplied.  Two rings cover everything in this package:

* ``LaurentPoly2`` is Z[v^{±1}, z^{±1}] and carries the skein polynomial in
  the convention  v^{-1} P(L+) - v P(L-) = z P(L0),  normalised so that
  P(unknot) = 1.  A split unknot multiplies P by delta = (v^{-1} - v)/z.
* ``LaurentPoly1`` is Z[x^{±1}] for a tagged variable x: Burau matrix
  entries (t), Conway polynomials (z), Alexander and Jones values in
  s = t^{1/2}, and z-leading coefficients as polynomials in v.

Values are immutable once built; every operation returns a fresh value.
The two-variable text grammar (used by the CLI and table files) is

    poly := term ('+' term)*          term := int '*v^' int '*z^' int

with all whitespace ignored, integers in signed decimal, a bare integer
allowed as a constant term, and the zero polynomial written "0".
"""

from __future__ import annotations

import re
from typing import Iterator, Mapping

from .errors import PolySyntaxError


def _normalized(terms: Mapping) -> dict:
    return {e: c for e, c in terms.items() if c != 0}


class LaurentPoly1:
    """A Laurent polynomial over Z in one tagged variable."""

    __slots__ = ("var", "_terms")

    def __init__(self, var: str, terms: Mapping[int, int] | None = None):
        self.var = var
        self._terms = _normalized(terms or {})

    @classmethod
    def zero(cls, var: str) -> "LaurentPoly1":
        return cls(var)

    @classmethod
    def one(cls, var: str) -> "LaurentPoly1":
        return cls(var, {0: 1})

    @classmethod
    def monomial(cls, var: str, coeff: int, exp: int) -> "LaurentPoly1":
        return cls(var, {exp: coeff})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def _check_var(self, other: "LaurentPoly1") -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        self._check_var(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(self.var, out)

    def __neg__(self) -> "LaurentPoly1":
        return LaurentPoly1(self.var, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        self._check_var(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly1(self.var, out)

    def __pow__(self, n: int) -> "LaurentPoly1":
        if n < 0:
            raise ValueError("negative powers are not defined here")
        out = LaurentPoly1.one(self.var)
        for _ in range(n):
            out = out * self
        return out

    def max_deg(self) -> int:
        if self.is_zero:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    def min_deg(self) -> int:
        if self.is_zero:
            raise ValueError("degree of the zero polynomial")
        return min(self._terms)

    def leading_coefficient(self) -> int:
        return self._terms[self.max_deg()]

    def invert_variable(self) -> "LaurentPoly1":
        """Substitute x -> x^{-1}."""
        return LaurentPoly1(self.var, {-e: c for e, c in self._terms.items()})

    def shifted(self, k: int) -> "LaurentPoly1":
        """Multiply by x^k."""
        return LaurentPoly1(self.var, {e + k: c for e, c in self._terms.items()})

    def div_exact(self, other: "LaurentPoly1") -> "LaurentPoly1":
        """Exact division; raises ValueError if the quotient is not in the ring."""
        self._check_var(other)
        if other.is_zero:
            raise ValueError("division by zero polynomial")
        if self.is_zero:
            return LaurentPoly1.zero(self.var)
        num = dict(self._terms)
        den = dict(other._terms)
        dmax, lead = max(den), den[max(den)]
        # An exact quotient has min degree min(self) - min(den); going below
        # that means the division cannot terminate.
        qmin = min(num) - min(den)
        quo: dict[int, int] = {}
        while num:
            nmax = max(num)
            c, r = divmod(num[nmax], lead)
            q = nmax - dmax
            if r != 0 or q < qmin:
                raise ValueError("division is not exact")
            quo[q] = quo.get(q, 0) + c
            for e, ce in den.items():
                k = e + q
                num[k] = num.get(k, 0) - c * ce
                if num[k] == 0:
                    del num[k]
        return LaurentPoly1(self.var, quo)

    def render(self) -> str:
        if self.is_zero:
            return "0"
        parts = [f"{c}*{self.var}^{e}" for e, c in self.items()]
        return " + ".join(parts)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentPoly1)
            and self.var == other.var
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPoly1({self.var!r}, {self.render()!r})"


class LaurentPoly2:
    """A Laurent polynomial over Z in v and z, keyed by (deg_v, deg_z)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = _normalized(terms or {})

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int, dv: int, dz: int) -> "LaurentPoly2":
        return cls({(dv, dz): coeff})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        # Canonical order: (dz, dv) ascending, used for rendering too.
        return iter(sorted(self._terms.items(), key=lambda t: (t[0][1], t[0][0])))

    def coefficient(self, dv: int, dz: int) -> int:
        return self._terms.get((dv, dz), 0)

    def terms_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly2(out)

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out: dict[tuple[int, int], int] = {}
        for (v1, z1), c1 in self._terms.items():
            for (v2, z2), c2 in other._terms.items():
                e = (v1 + v2, z1 + z2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly2(out)

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            raise ValueError("negative powers are not defined here")
        out = LaurentPoly2.one()
        for _ in range(n):
            out = out * self
        return out

    def scale_by_monomial(self, coeff: int, dv: int, dz: int) -> "LaurentPoly2":
        return LaurentPoly2(
            {(a + dv, b + dz): coeff * c for (a, b), c in self._terms.items()}
        )

    def _degs(self, axis: int, fn) -> int:
        if self.is_zero:
            raise ValueError("degree of the zero polynomial")
        return fn(e[axis] for e in self._terms)

    def max_deg_v(self) -> int:
        return self._degs(0, max)

    def min_deg_v(self) -> int:
        return self._degs(0, min)

    def max_deg_z(self) -> int:
        return self._degs(1, max)

    def min_deg_z(self) -> int:
        return self._degs(1, min)

    def z_coefficient(self, dz: int) -> LaurentPoly1:
        """The polynomial in v multiplying z^dz (zero if absent)."""
        return LaurentPoly1("v", {a: c for (a, b), c in self._terms.items() if b == dz})

    def render(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"{c}*v^{a}*z^{b}" for (a, b), c in self.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly2) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.render()!r})"


def delta_unlink_factor() -> LaurentPoly2:
    """(v^{-1} - v)/z, the factor contributed by a split unknot."""
    return LaurentPoly2({(-1, -1): 1, (1, -1): -1})


def mirror_image(p: LaurentPoly2) -> LaurentPoly2:
    """The skein polynomial of the mirror link: v -> -v^{-1}, z fixed.

    Validated against the trefoil and Hopf pairs in the test suite before
    anything else relies on it.
    """
    return LaurentPoly2({(-a, b): c * (-1) ** (a & 1) for (a, b), c in p.terms_dict().items()})


def conway(p: LaurentPoly2) -> LaurentPoly1:
    """Substitute v = 1, giving the Conway polynomial in z.

    The result can in principle carry negative z-exponents; for polynomials
    of actual links those coefficients cancel, and consumers that need a
    genuine polynomial (``alexander``) reject leftovers.
    """
    out: dict[int, int] = {}
    for (_, b), c in p.terms_dict().items():
        out[b] = out.get(b, 0) + c
    return LaurentPoly1("z", out)


def alexander(nabla: LaurentPoly1) -> LaurentPoly1:
    """Substitute z = s - s^{-1} into a Conway polynomial (s = t^{1/2}).

    With this normalisation Delta(1) = 1 for knots and Delta(t) = Delta(1/t).
    """
    if nabla.var != "z":
        raise ValueError("alexander expects a polynomial in z")
    if not nabla.is_zero and nabla.min_deg() < 0:
        raise ValueError("Conway polynomial has negative z-exponents")
    s_minus = LaurentPoly1("s", {1: 1, -1: -1})
    out = LaurentPoly1.zero("s")
    for e, c in nabla.items():
        out = out + (s_minus**e) * LaurentPoly1.monomial("s", c, 0)
    return out


def jones(p: LaurentPoly2) -> LaurentPoly1:
    """Substitute v = t = s^2 and z = s - s^{-1}, giving the Jones polynomial.

    Negative z-powers are cleared by an exact division, which succeeds for
    every polynomial actually satisfying the skein relation.
    """
    if p.is_zero:
        return LaurentPoly1.zero("s")
    s_minus = LaurentPoly1("s", {1: 1, -1: -1})
    bmin = p.min_deg_z()
    acc = LaurentPoly1.zero("s")
    for (a, b), c in p.terms_dict().items():
        acc = acc + (s_minus ** (b - bmin)).shifted(2 * a) * LaurentPoly1.monomial("s", c, 0)
    if bmin >= 0:
        return acc * s_minus**bmin
    return acc.div_exact(s_minus ** (-bmin))


_TERM_RE = re.compile(r"^(-?\d+)(?:\*v\^(-?\d+)\*z\^(-?\d+))?$")


def parse_poly(text: str) -> LaurentPoly2:
    """Parse the two-variable grammar; see the module docstring."""
    stripped = re.sub(r"\s+", "", text)
    if not stripped:
        raise PolySyntaxError("empty polynomial text", 0)
    out: dict[tuple[int, int], int] = {}
    for i, chunk in enumerate(stripped.split("+")):
        m = _TERM_RE.match(chunk)
        if not m:
            raise PolySyntaxError(f"malformed term {chunk!r}", i)
        coeff = int(m.group(1))
        dv = int(m.group(2)) if m.group(2) is not None else 0
        dz = int(m.group(3)) if m.group(3) is not None else 0
        out[(dv, dz)] = out.get((dv, dz), 0) + coeff
    return LaurentPoly2(out)


def render_poly(p: LaurentPoly2) -> str:
    return p.render()
