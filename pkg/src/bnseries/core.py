"""Ramification sequences and the sharp two-point nonemptiness inequality.

Conventions used throughout the package:

* A ramification sequence of a rank-``r``, degree-``d`` linear series at a
  point is a nondecreasing integer sequence ``alpha_0 <= ... <= alpha_r``
  with values in ``[0, d - r]``.
* The matching vanishing sequence is ``a_j = alpha_j + j``; it is strictly
  increasing with values in ``[0, d]``.
* ``rho`` is the adjusted Brill-Noether number

      rho = (r + 1)(d - r) - r*g - sum(alpha1) - sum(alpha2).

* ``nonempty_criterion`` decides whether a general twice-marked curve of
  genus ``g`` carries a series with ramification at least ``alpha1`` and
  ``alpha2`` at the marked points:

      sum_j max(0, alpha1_j + alpha2_{r-j} + r - d + g)  <=  g.

All arithmetic is exact; every function in this module is pure and safe to
call concurrently.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator


@dataclass(frozen=True)
class RamSeq:
    """Ramification sequence with its (r, d) context; r is len(entries) - 1."""

    entries: tuple[int, ...]
    d: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        object.__setattr__(self, "d", int(self.d))
        if len(self.entries) == 0:
            raise ValueError("ramification sequence must be nonempty")
        r = len(self.entries) - 1
        if not 0 <= r <= self.d:
            raise ValueError(f"need 0 <= r <= d, got r={r}, d={self.d}")
        bound = self.d - r
        for j, a in enumerate(self.entries):
            if not 0 <= a <= bound:
                raise ValueError(
                    f"entry alpha_{j}={a} outside [0, {bound}] for r={r}, d={self.d}"
                )
            if j > 0 and a < self.entries[j - 1]:
                raise ValueError(f"entries not nondecreasing at index {j}")

    @property
    def r(self) -> int:
        return len(self.entries) - 1

    def total(self) -> int:
        return sum(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, j):
        return self.entries[j]


@dataclass(frozen=True)
class VanishingSeq:
    """Strictly increasing vanishing orders a_0 < ... < a_r in [0, d]."""

    entries: tuple[int, ...]
    d: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        object.__setattr__(self, "d", int(self.d))
        if len(self.entries) == 0:
            raise ValueError("vanishing sequence must be nonempty")
        r = len(self.entries) - 1
        if not 0 <= r <= self.d:
            raise ValueError(f"need 0 <= r <= d, got r={r}, d={self.d}")
        for j, a in enumerate(self.entries):
            if not 0 <= a <= self.d:
                raise ValueError(f"entry a_{j}={a} outside [0, {self.d}]")
            if j > 0 and a <= self.entries[j - 1]:
                raise ValueError(f"entries not strictly increasing at index {j}")

    @property
    def r(self) -> int:
        return len(self.entries) - 1

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, j):
        return self.entries[j]


def to_vanishing(alpha: RamSeq) -> VanishingSeq:
    """Convert a ramification sequence to its vanishing sequence a_j = alpha_j + j."""
    return VanishingSeq(tuple(a + j for j, a in enumerate(alpha)), alpha.d)


def from_vanishing(a: VanishingSeq) -> RamSeq:
    """Inverse of to_vanishing: alpha_j = a_j - j."""
    return RamSeq(tuple(x - j for j, x in enumerate(a)), a.d)


@dataclass(frozen=True)
class BNProblem:
    """A two-point problem (g, r, d, alpha1, alpha2).

    ``alpha1`` and ``alpha2`` are the minimal ramification imposed at the two
    marked points; both must be valid in the (r, d) context.
    """

    g: int
    r: int
    d: int
    alpha1: RamSeq
    alpha2: RamSeq

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"genus must be nonnegative, got {self.g}")
        if not 0 <= self.r <= self.d:
            raise ValueError(f"need 0 <= r <= d, got r={self.r}, d={self.d}")
        for name, alpha in (("alpha1", self.alpha1), ("alpha2", self.alpha2)):
            if not isinstance(alpha, RamSeq):
                raise ValueError(f"{name} must be a RamSeq")
            if alpha.d != self.d or alpha.r != self.r:
                raise ValueError(
                    f"{name} has context (r={alpha.r}, d={alpha.d}), "
                    f"expected (r={self.r}, d={self.d})"
                )


def zero_ram(r: int, d: int) -> RamSeq:
    return RamSeq((0,) * (r + 1), d)


def problem(g, r, d, alpha1=None, alpha2=None) -> BNProblem:
    """Build a BNProblem from plain integer sequences (None means all zero)."""
    a1 = zero_ram(r, d) if alpha1 is None else RamSeq(tuple(alpha1), d)
    a2 = zero_ram(r, d) if alpha2 is None else RamSeq(tuple(alpha2), d)
    return BNProblem(g, r, d, a1, a2)


def rho(p: BNProblem) -> int:
    """Adjusted Brill-Noether number; may be negative."""
    return (
        (p.r + 1) * (p.d - p.r)
        - p.r * p.g
        - p.alpha1.total()
        - p.alpha2.total()
    )


def criterion_sum(p: BNProblem) -> int:
    """Total positive part sum_j max(0, alpha1_j + alpha2_{r-j} + r - d + g).

    The summand is positive exactly on the index set of the nonemptiness
    inequality, so the criterion is ``criterion_sum(p) <= g``.
    """
    r, d, g = p.r, p.d, p.g
    total = 0
    for j in range(r + 1):
        s = p.alpha1[j] + p.alpha2[r - j] + r - d + g
        if s > 0:
            total += s
    return total


def nonempty_criterion(p: BNProblem) -> bool:
    """Sharp nonemptiness test for a general twice-marked genus-g curve."""
    return criterion_sum(p) <= p.g


def all_ram_seqs(r: int, d: int) -> Iterator[RamSeq]:
    """All valid ramification sequences for (r, d), in lexicographic order.

    There are C(d+1, r+1) of them.
    """
    for entries in combinations_with_replacement(range(d - r + 1), r + 1):
        yield RamSeq(entries, d)


def all_vanishing_seqs(r: int, d: int) -> Iterator[VanishingSeq]:
    """All valid vanishing sequences for (r, d), in lexicographic order."""
    for alpha in all_ram_seqs(r, d):
        yield to_vanishing(alpha)


def all_problems(g: int, r: int, d: int) -> Iterator[BNProblem]:
    """All two-point problems for fixed (g, r, d), over every (alpha1, alpha2)."""
    seqs = list(all_ram_seqs(r, d))
    for a1 in seqs:
        for a2 in seqs:
            yield BNProblem(g, r, d, a1, a2)
