"""Explicit realizations of the genus-0 and genus-1 base cases.

Genus 0: series on the projective line with marked points 0 and infinity.
Sections of degree d are polynomials of degree <= d; vanishing order at 0 is
the lowest nonzero coefficient, vanishing order at infinity is the degree
drop d - deg.  A basis with exact vanishing (a1_j, a2_{r-j}) exists iff
a1_j + a2_{r-j} <= d for all j, and is built from x^{a1_j} * (1 + x^e) with
e = d - a1_j - a2_{r-j}.

Genus 1: the complete series of a degree-d line bundle L has h^0 = d, and its
vanishing sequence at a marked point P is 0, 1, ..., d-1 unless L = O(dP),
in which case it is 0, 1, ..., d-2, d.  Under the generality assumption that
the marked points do not differ by m-torsion for m <= d, a series with
vanishing (a1, a2) exists iff a1_j + a2_{r-j} <= d for all j with equality
for at most one j; equality at j forces L = O(a1_j P1 + a2_{r-j} P2).

All linear algebra is exact over the rationals.
"""

from dataclasses import dataclass
from fractions import Fraction

from .core import VanishingSeq


class DegenerateBasis(ValueError):
    """The polynomial tuple is linearly dependent."""


@dataclass(frozen=True)
class G0Series:
    """Basis of polynomials, each a coefficient vector c_0..c_d (low to high)."""

    d: int
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "basis", tuple(tuple(row) for row in self.basis)
        )
        for row in self.basis:
            if len(row) != self.d + 1:
                raise ValueError(f"coefficient vectors must have length d+1={self.d + 1}")


@dataclass(frozen=True)
class LineBundleDescriptor:
    """Degree-d line bundle on a genus-1 curve: O(a P1 + (d-a) P2) or generic.

    ``a is None`` means a bundle not of the form O(a P1 + (d-a) P2) for any a.
    """

    d: int
    a: int | None

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("degree must be nonnegative")
        if self.a is not None and not 0 <= self.a <= self.d:
            raise ValueError(f"special descriptor needs 0 <= a <= d, got a={self.a}")

    @property
    def is_special(self) -> bool:
        return self.a is not None


def generic_bundle(d: int) -> LineBundleDescriptor:
    return LineBundleDescriptor(d, None)


def special_bundle(d: int, a: int) -> LineBundleDescriptor:
    return LineBundleDescriptor(d, a)


def realize_g0(r: int, d: int, a1: VanishingSeq, a2: VanishingSeq) -> G0Series | None:
    """Polynomial basis with exact vanishing a1_j at 0 and a2_{r-j} at infinity.

    Returns None when a1_j + a2_{r-j} > d for some j (no such series exists).
    """
    if a1.r != r or a2.r != r or a1.d != d or a2.d != d:
        raise ValueError("vanishing sequences must match the (r, d) context")
    rows = []
    for j in range(r + 1):
        gap = d - a1[j] - a2[r - j]
        if gap < 0:
            return None
        coeffs = [0] * (d + 1)
        coeffs[a1[j]] = 1
        if gap >= 1:
            coeffs[a1[j] + gap] += 1
        rows.append(tuple(coeffs))
    return G0Series(d, tuple(rows))


def _pivot_columns(rows: list[list[Fraction]]) -> list[int]:
    """Column indices of pivots under forward Gaussian elimination."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    top = 0
    for col in range(ncols):
        pivot = None
        for i in range(top, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        lead = rows[top][col]
        for i in range(top + 1, len(rows)):
            if rows[i][col] != 0:
                factor = rows[i][col] / lead
                for c in range(col, ncols):
                    rows[i][c] -= factor * rows[top][c]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return pivots


def g0_vanishing_check(s: G0Series) -> tuple[VanishingSeq, VanishingSeq]:
    """Exact vanishing sequences of the span at 0 and infinity.

    Row-reduces the coefficient matrix in increasing-power order for the
    point 0 and in decreasing-power order for infinity; pivot columns are the
    orders of an adapted basis.  Raises DegenerateBasis for dependent input.
    """
    rows0 = [[Fraction(c) for c in row] for row in s.basis]
    rows_inf = [list(reversed(row)) for row in rows0]
    at0 = _pivot_columns(rows0)
    at_inf = _pivot_columns(rows_inf)
    if len(at0) < len(s.basis) or len(at_inf) < len(s.basis):
        raise DegenerateBasis("basis polynomials are linearly dependent")
    return VanishingSeq(tuple(at0), s.d), VanishingSeq(tuple(at_inf), s.d)


def classify_g1_vanishing(bundle: LineBundleDescriptor, at: int) -> VanishingSeq:
    """Vanishing sequence of the complete series of ``bundle`` at marked point 1 or 2.

    Encodes the generic-position dichotomy: 0..d-1 in general, and
    0..d-2, d exactly when the bundle is O(d P) at the chosen point
    (a = d at point 1, a = 0 at point 2).
    """
    if at not in (1, 2):
        raise ValueError("marked point must be 1 or 2")
    d = bundle.d
    if d < 1:
        raise ValueError("classification needs d >= 1")
    concentrated = (bundle.a == d) if at == 1 else (bundle.a == 0)
    if concentrated:
        entries = tuple(range(d - 1)) + (d,)
    else:
        entries = tuple(range(d))
    return VanishingSeq(entries, d)


def realize_g1(r: int, d: int, a1: VanishingSeq, a2: VanishingSeq) -> LineBundleDescriptor | None:
    """Line bundle descriptor carrying a series with vanishing >= (a1, a2).

    None when some a1_j + a2_{r-j} > d or equality holds at two distinct j
    (excluded on a general pair of points).  Equality at exactly one j forces
    the special bundle O(a1_j P1 + a2_{r-j} P2); otherwise any generic bundle
    works.
    """
    if a1.r != r or a2.r != r or a1.d != d or a2.d != d:
        raise ValueError("vanishing sequences must match the (r, d) context")
    equal_at = []
    for j in range(r + 1):
        total = a1[j] + a2[r - j]
        if total > d:
            return None
        if total == d:
            equal_at.append(j)
    if len(equal_at) >= 2:
        return None
    if equal_at:
        return special_bundle(d, a1[equal_at[0]])
    return generic_bundle(d)


def richardson_dim(d: int, a1: VanishingSeq, a2: VanishingSeq) -> int | None:
    """Expected dimension sum_j (d - a1_j - a2_{r-j}) of the genus-0 locus.

    None when the locus is empty (some a1_j + a2_{r-j} > d).  Equals rho of
    the corresponding genus-0 problem whenever defined.
    """
    if a1.r != a2.r or a1.d != d or a2.d != d:
        raise ValueError("vanishing sequences must match the d context")
    r = a1.r
    terms = [d - a1[j] - a2[r - j] for j in range(r + 1)]
    if any(t < 0 for t in terms):
        return None
    return sum(terms)
