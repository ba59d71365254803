"""Brute-force verification oracles, independent of the combinatorial formulas.

Two ingredients:

* Flag profiles.  A pair of vanishing flags in an n-dimensional section
  space is recorded by the table h(k1, k2) = dim of the intersection of the
  two steps.  Complementary flags (the genus-0 case) have
  h = max(0, n - k1 - k2); genus-1 profiles follow the Riemann-Roch rule
  h = h^0(L - k1 P1 - k2 P2) for a degree-d bundle L.  Any profile emitted
  here is realized by a coordinate model: each basis vector gets a pair of
  vanishing orders, and both flags become spans of coordinate vectors.

* Point counting.  Subspaces with prescribed vanishing against both flags
  are enumerated exactly over F_q for q in {2, 3, 4}; the dimension of the
  locus is read off from the exact polynomial growth of the counts in q.

The elliptic model supplies the genus-1 generality certificate: a concrete
curve over a prime field with marked points whose difference has known group
order.  Orders above d certify the torsion condition; a small-order pair
reproduces the excluded degeneration where two special bundles coincide.
"""

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .core import BNProblem, to_vanishing
from .elliptic import discriminant, ec_add, ec_neg, is_on_curve, point_order
from .gf import gaussian_binomial, gf, lead_positions, rref_matrices
from .realize import LineBundleDescriptor, generic_bundle, special_bundle

DEFAULT_ENUM_BUDGET = 10**7


class InfeasibleSize(RuntimeError):
    """The requested enumeration exceeds the configured budget."""


class NoFit(RuntimeError):
    """The point counts admit no verified exact polynomial fit."""


@dataclass(frozen=True)
class FlagProfile:
    """Intersection-dimension table of two vanishing flags in dimension n.

    h is an (n+1) x (n+1) tuple of tuples with h[0][0] = n, nonincreasing
    with unit steps in each argument.  (For complementary flags additionally
    h[k][0] = h[0][k] = n - k; the degenerate genus-1 profiles where the
    bundle concentrates at one point keep a one-dimensional tail instead.)
    """

    n: int
    h: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(tuple(row) for row in self.h))
        n, h = self.n, self.h
        if n < 1:
            raise ValueError("profile dimension must be >= 1")
        if len(h) != n + 1 or any(len(row) != n + 1 for row in h):
            raise ValueError(f"profile table must be {n + 1} x {n + 1}")
        if h[0][0] != n:
            raise ValueError("h(0, 0) must equal the ambient dimension")
        for k1 in range(n + 1):
            for k2 in range(n + 1):
                if h[k1][k2] < 0:
                    raise ValueError("profile entries must be nonnegative")
                if k1 < n and h[k1][k2] - h[k1 + 1][k2] not in (0, 1):
                    raise ValueError(f"non-unit step in k1 at ({k1}, {k2})")
                if k2 < n and h[k1][k2] - h[k1][k2 + 1] not in (0, 1):
                    raise ValueError(f"non-unit step in k2 at ({k1}, {k2})")

    def __call__(self, k1: int, k2: int) -> int:
        return self.h[k1][k2]


def profile_complementary(n: int) -> FlagProfile:
    """Profile of two complementary flags: h(k1, k2) = max(0, n - k1 - k2)."""
    table = tuple(
        tuple(max(0, n - k1 - k2) for k2 in range(n + 1)) for k1 in range(n + 1)
    )
    return FlagProfile(n, table)


def profile_g1(bundle: LineBundleDescriptor, diff_order: int | None = None) -> FlagProfile:
    """Genus-1 profile h(k1, k2) = h^0(L - k1 P1 - k2 P2), with n = d.

    The degree-e = d - k1 - k2 twist has h^0 = e for e >= 1 and 0 for e < 0.
    At e = 0 the space is one-dimensional exactly when the twist is the
    trivial class, i.e. when (a - k1)(P1 - P2) vanishes in the Jacobian:
    with ``diff_order = None`` (points in general position) this needs
    a = k1; a finite ``diff_order`` t relaxes it to a = k1 mod t.
    """
    d = bundle.d
    if d < 1:
        raise ValueError("profile needs d >= 1")
    if diff_order is not None and diff_order < 1:
        raise ValueError("diff_order must be a positive integer")
    rows = []
    for k1 in range(d + 1):
        row = []
        for k2 in range(d + 1):
            e = d - k1 - k2
            if e >= 1:
                row.append(e)
            elif e < 0:
                row.append(0)
            elif bundle.a is None:
                row.append(0)
            else:
                delta = bundle.a - k1
                trivial = delta == 0 if diff_order is None else delta % diff_order == 0
                row.append(1 if trivial else 0)
        rows.append(tuple(row))
    return FlagProfile(d, tuple(rows))


def basis_orders(profile: FlagProfile) -> tuple[tuple[int, int], ...]:
    """Vanishing-order pairs (o1, o2) of a coordinate model realizing the profile.

    The multiplicity of the pair (k1, k2) is the second difference of the
    table; it must be nonnegative with total n for the profile to come from
    an actual pair of flags.
    """
    n = profile.n

    def h(k1, k2):
        return profile.h[k1][k2] if k1 <= n and k2 <= n else 0

    orders = []
    for k1 in range(n + 1):
        for k2 in range(n + 1):
            mult = h(k1, k2) - h(k1 + 1, k2) - h(k1, k2 + 1) + h(k1 + 1, k2 + 1)
            if mult < 0:
                raise ValueError(f"profile not realizable: negative mass at ({k1}, {k2})")
            orders.extend([(k1, k2)] * mult)
    if len(orders) != n:
        raise ValueError("profile not realizable: total mass != n")
    return tuple(orders)


def _enum_budget(budget: int | None) -> int:
    if budget is not None:
        return int(budget)
    return int(os.environ.get("BN_ENUM_BUDGET", DEFAULT_ENUM_BUDGET))


_HIST_CACHE: dict = {}


def _subspace_histogram(q: int, profile: FlagProfile, k: int, budget: int) -> dict:
    """Joint tally of vanishing-sequence pairs over all k-subspaces of F_q^n."""
    key = (q, profile.h, k)
    cached = _HIST_CACHE.get(key)
    if cached is not None:
        return cached
    n = profile.n
    size = gaussian_binomial(n, k, q)
    if size > budget:
        raise InfeasibleSize(
            f"enumeration of {size} subspaces exceeds the budget of {budget}"
        )
    orders = basis_orders(profile)
    by1 = sorted(range(n), key=lambda i: orders[i][0])
    o1_of_col = [orders[i][0] for i in by1]
    o2_of_col = [orders[i][1] for i in by1]
    cols_by_o2 = sorted(range(n), key=lambda pos: o2_of_col[pos])
    field = gf(q)
    hist: dict = {}
    for pivots, rows in rref_matrices(q, n, k):
        b1 = tuple(o1_of_col[c] for c in pivots)
        leads = lead_positions(field, rows, cols_by_o2)
        b2 = tuple(o2_of_col[cols_by_o2[pos]] for pos in leads)
        pair = (b1, b2)
        hist[pair] = hist.get(pair, 0) + 1
    _HIST_CACHE[key] = hist
    return hist


def _as_orders(seq, r: int, n: int) -> tuple[int, ...]:
    entries = tuple(int(x) for x in seq)
    if len(entries) != r + 1:
        raise ValueError(f"expected {r + 1} vanishing orders, got {len(entries)}")
    for j, a in enumerate(entries):
        if not 0 <= a <= n:
            raise ValueError(f"vanishing order {a} outside [0, {n}]")
        if j > 0 and a <= entries[j - 1]:
            raise ValueError("vanishing orders must be strictly increasing")
    return entries


def count_series(q, profile: FlagProfile, r, a1, a2, budget: int | None = None) -> int:
    """Number of (r+1)-subspaces of F_q^n with vanishing >= a1, a2 at the flags.

    A subspace qualifies when its vanishing sequence against flag i dominates
    a_i componentwise.  Counting is by exhaustive enumeration of canonical
    bases; a hard budget (default 10^7 subspaces, env BN_ENUM_BUDGET) guards
    the loop and raises InfeasibleSize beyond it.
    """
    if q not in (2, 3, 4):
        raise ValueError("supported field sizes are 2, 3 and 4")
    n = profile.n
    k = r + 1
    want1 = _as_orders(a1, r, n)
    want2 = _as_orders(a2, r, n)
    if k > n:
        return 0
    hist = _subspace_histogram(q, profile, k, _enum_budget(budget))
    total = 0
    for (b1, b2), mult in hist.items():
        if all(b1[j] >= want1[j] for j in range(k)) and all(
            b2[j] >= want2[j] for j in range(k)
        ):
            total += mult
    return total


def _poly_eval(coeffs, x):
    value = 0
    for c in reversed(coeffs):
        value = value * x + c
    return value


def _digit_candidate(points):
    """Coefficients read as base-q digits at the largest q, or None."""
    q_top, n_top = points[-1]
    if n_top <= 0:
        return None
    digits = []
    value = n_top
    while value:
        digits.append(value % q_top)
        value //= q_top
    if all(_poly_eval(digits, q) == n for q, n in points[:-1]):
        return digits
    return None


def _newton_candidate(points):
    """Exact interpolant through all points, if its coefficients are counts."""
    xs = [Fraction(q) for q, _ in points]
    coeffs = [Fraction(n) for _, n in points]
    for level in range(1, len(points)):
        for i in range(len(points) - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * len(points)
    poly[0] = coeffs[-1]
    for i in range(len(points) - 2, -1, -1):
        for j in range(len(points) - 1, 0, -1):
            poly[j] = poly[j - 1] - xs[i] * poly[j]
        poly[0] = coeffs[i] - xs[i] * poly[0]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    if all(c.denominator == 1 and c >= 0 for c in poly):
        return [int(c) for c in poly]
    return None


def dim_fit(counts) -> int | None:
    """Dimension of a locus from exact point counts at >= 3 field sizes.

    Returns None when the counts are identically zero (empty locus).
    Otherwise finds a counting polynomial that reproduces every sample
    exactly, trying both the interpolant through all points and the
    base-q digit expansion at the largest q (which sees degrees beyond the
    sample size as long as coefficients stay below q).  Raises NoFit when no
    candidate fits or the verified candidates disagree on the degree.
    """
    points = sorted((int(q), int(n)) for q, n in counts)
    if len({q for q, _ in points}) != len(points):
        raise ValueError("counts must be at distinct field sizes")
    if len(points) < 3:
        raise ValueError("need counts at >= 3 distinct field sizes")
    if any(n < 0 for _, n in points):
        raise ValueError("counts must be nonnegative")
    if all(n == 0 for _, n in points):
        return None
    degrees = set()
    for candidate in (_digit_candidate(points), _newton_candidate(points)):
        if candidate is not None:
            degrees.add(len(candidate) - 1)
    if len(degrees) != 1:
        raise NoFit(f"counts {points} admit no unambiguous exact polynomial fit")
    return degrees.pop()


@dataclass(frozen=True)
class EllipticModel:
    """A curve y^2 = x^3 + a x + b over F_p with marked points P1, P2.

    ``order_diff`` records the group order of P1 - P2; it is stored with the
    fixture and re-derivable via ec_order_diff.
    """

    p: int
    a: int
    b: int
    p1: tuple[int, int]
    p2: tuple[int, int]
    order_diff: int

    def __post_init__(self):
        object.__setattr__(self, "p1", tuple(self.p1))
        object.__setattr__(self, "p2", tuple(self.p2))
        if self.p < 5 or any(self.p % f == 0 for f in range(2, int(self.p**0.5) + 1)):
            raise ValueError(f"{self.p} is not an odd prime >= 5")
        if discriminant(self.p, self.a, self.b) == 0:
            raise ValueError("curve is singular")
        for pt in (self.p1, self.p2):
            if not is_on_curve(self.p, self.a, self.b, pt):
                raise ValueError(f"point {pt} is not on the curve")


def ec_order_diff(m: EllipticModel) -> int:
    """Exact group order of P1 - P2, by the group law."""
    diff = ec_add(m.p, m.a, m.p1, ec_neg(m.p, m.p2))
    return point_order(m.p, m.a, diff)


def all_descriptors(d: int) -> list[LineBundleDescriptor]:
    """Every bundle class relevant at degree d: generic plus special(0..d)."""
    return [generic_bundle(d)] + [special_bundle(d, a) for a in range(d + 1)]


def ec_descriptor_scan(
    m: EllipticModel,
    p: BNProblem,
    qs=(2, 3, 4),
    budget: int | None = None,
) -> dict:
    """Per-descriptor counting report for a genus-1 problem on the model.

    Uses the model's actual difference order, so a torsion pair makes
    coinciding special bundles (and their degenerate loci) visible.
    """
    if p.g != 1:
        raise ValueError("the descriptor scan is a genus-1 oracle")
    order = ec_order_diff(m)
    if order < 2:
        raise ValueError("marked points must be distinct (ord(P1 - P2) >= 2)")
    a1 = to_vanishing(p.alpha1).entries
    a2 = to_vanishing(p.alpha2).entries
    report = {"order_diff": order, "descriptors": []}
    for bundle in all_descriptors(p.d):
        profile = profile_g1(bundle, diff_order=order)
        counts = [(q, count_series(q, profile, p.r, a1, a2, budget=budget)) for q in qs]
        try:
            fitted = dim_fit(counts)
        except NoFit:
            fitted = "nofit"
        report["descriptors"].append(
            {
                "bundle": "generic" if bundle.a is None else f"special({bundle.a})",
                "a": bundle.a,
                "counts": counts,
                "dim": fitted,
                "nonempty": any(n > 0 for _, n in counts),
            }
        )
    report["nonempty"] = any(entry["nonempty"] for entry in report["descriptors"])
    return report


def ec_g1_nonempty(m: EllipticModel, p: BNProblem, budget: int | None = None) -> bool:
    """Brute-force nonemptiness for g = 1, requiring ord(P1 - P2) > d."""
    if ec_order_diff(m) <= p.d:
        raise ValueError(
            "generality hypothesis violated: ord(P1 - P2) must exceed d"
        )
    return ec_descriptor_scan(m, p, budget=budget)["nonempty"]


def load_fixture(name: str = "general") -> EllipticModel:
    """Load a frozen curve model from the versioned fixture file."""
    text = resources.files(__package__).joinpath("fixtures/elliptic_models.json").read_text()
    data = json.loads(text)
    entry = data["models"][name]
    return EllipticModel(
        entry["p"],
        entry["a"],
        entry["b"],
        tuple(entry["p1"]),
        tuple(entry["p2"]),
        entry["order_diff"],
    )
