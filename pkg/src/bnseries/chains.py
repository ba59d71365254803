"""Witness chains of elliptic components for the two-point nonemptiness criterion.

A problem of genus g >= 1 satisfying the criterion is realized by a chain of
g genus-1 components (a single genus-0 component when g = 0).  Each component
carries a left and right ramification sequence; consecutive components meet in
a node where the sequences are exact complements, the outer ends carry the
imposed alpha1 and alpha2, and every component passes the genus-0/1 base-case
criterion.  Component rho values then add up to rho of the original problem.

``split_once`` peels one genus-1 component off a genus >= 2 problem.  The
closed-form candidate (lower the reversed alpha1 complement by one, raising a
single slot in the equality case) is not always nondecreasing, so we search
the small family of single-raise variants, sorted, and keep the
lexicographically smallest candidate that validates on both sides.
"""

from dataclasses import dataclass

from .core import BNProblem, RamSeq, nonempty_criterion, rho
from .strata import refined_complement


class ConstructionFailed(RuntimeError):
    """No candidate split validates; must not happen when the criterion holds."""


def component_rho(genus: int, left_ram: RamSeq, right_ram: RamSeq) -> int:
    r, d = left_ram.r, left_ram.d
    return (r + 1) * (d - r) - r * genus - left_ram.total() - right_ram.total()


@dataclass(frozen=True)
class ChainComponent:
    """One component of a chain, marked on the left and right.

    Only structural validity is enforced here; the base-case criterion, the
    stored rho value and the node complements are re-checked independently by
    ``verify_chain`` so that tampered witnesses are representable and
    rejected.
    """

    genus: int
    left_ram: RamSeq
    right_ram: RamSeq
    component_rho: int

    def __post_init__(self):
        if self.genus not in (0, 1):
            raise ValueError("chain components have genus 0 or 1")
        if (self.left_ram.r, self.left_ram.d) != (self.right_ram.r, self.right_ram.d):
            raise ValueError("left/right sequences must share the (r, d) context")


def make_component(genus: int, left_ram: RamSeq, right_ram: RamSeq) -> ChainComponent:
    return ChainComponent(genus, left_ram, right_ram, component_rho(genus, left_ram, right_ram))


@dataclass(frozen=True)
class ChainWitness:
    r: int
    d: int
    components: tuple[ChainComponent, ...]
    total_rho: int

    def __post_init__(self):
        if not self.components:
            raise ValueError("a chain needs at least one component")
        for c in self.components:
            if (c.left_ram.r, c.left_ram.d) != (self.r, self.d):
                raise ValueError("component context does not match the chain")


def base_case_ok(genus: int, left_ram: RamSeq, right_ram: RamSeq) -> bool:
    """Genus-0/1 nonemptiness for a component marked with (left, right)."""
    return nonempty_criterion(
        BNProblem(genus, left_ram.r, left_ram.d, left_ram, right_ram)
    )


def _split_candidates(p: BNProblem) -> list[RamSeq]:
    """Candidate node sequences alpha_y, lexicographically ordered.

    Family: per-slot base value d - r - 1 - alpha1[r - k] clamped to >= 0,
    plus the variants with exactly one slot raised to d - r - alpha1[r - k],
    each sorted into nondecreasing order.
    """
    r, d = p.r, p.d
    base = [max(0, d - r - 1 - p.alpha1[r - k]) for k in range(r + 1)]
    family = {tuple(sorted(base))}
    for k in range(r + 1):
        raised = list(base)
        raised[k] = d - r - p.alpha1[r - k]
        family.add(tuple(sorted(raised)))
    return [RamSeq(entries, d) for entries in sorted(family)]


def split_once(p: BNProblem) -> tuple[RamSeq, RamSeq]:
    """Split off one genus-1 component from a genus >= 2 problem.

    Returns node sequences (alpha_y, alpha_z) with alpha_z the refined
    complement of alpha_y, such that the genus-1 problem (alpha1, alpha_y)
    and the residual genus-(g-1) problem (alpha_z, alpha2) both satisfy the
    nonemptiness criterion.
    """
    if p.g < 2:
        raise ValueError("split_once needs genus >= 2")
    if not nonempty_criterion(p):
        raise ValueError("split_once needs a problem satisfying the criterion")
    for alpha_y in _split_candidates(p):
        alpha_z = refined_complement(alpha_y)
        left = BNProblem(1, p.r, p.d, p.alpha1, alpha_y)
        rest = BNProblem(p.g - 1, p.r, p.d, alpha_z, p.alpha2)
        if nonempty_criterion(left) and nonempty_criterion(rest):
            return alpha_y, alpha_z
    raise ConstructionFailed(
        f"no valid split for g={p.g}, r={p.r}, d={p.d}, "
        f"alpha1={p.alpha1.entries}, alpha2={p.alpha2.entries}"
    )


def build_chain(p: BNProblem) -> ChainWitness | None:
    """Construct a verified witness chain, or None when the criterion fails.

    Genus 0 and 1 problems become a single component; larger genus peels off
    genus-1 components by induction via split_once.
    """
    if not nonempty_criterion(p):
        return None
    components = []
    current = p
    while current.g >= 2:
        alpha_y, alpha_z = split_once(current)
        components.append(make_component(1, current.alpha1, alpha_y))
        current = BNProblem(current.g - 1, p.r, p.d, alpha_z, current.alpha2)
    components.append(make_component(current.g, current.alpha1, current.alpha2))
    return ChainWitness(p.r, p.d, tuple(components), rho(p))


def chain_violations(w: ChainWitness, p: BNProblem) -> list[str]:
    """All invariant violations of a witness against a problem; empty means valid.

    Checks are independent of how the witness was built: stored rho values,
    base-case criteria, node complements, endpoints, genus bookkeeping, and
    total rho.
    """
    out = []
    if (w.r, w.d) != (p.r, p.d):
        out.append(f"chain context (r={w.r}, d={w.d}) != problem (r={p.r}, d={p.d})")
        return out
    n = len(w.components)
    for i, c in enumerate(w.components):
        expected = component_rho(c.genus, c.left_ram, c.right_ram)
        if c.component_rho != expected:
            out.append(f"component {i}: stored rho {c.component_rho} != {expected}")
        if not base_case_ok(c.genus, c.left_ram, c.right_ram):
            out.append(f"component {i}: genus-{c.genus} base-case criterion fails")
    for i in range(n - 1):
        right = w.components[i].right_ram
        left = w.components[i + 1].left_ram
        if left != refined_complement(right):
            out.append(f"node {i}: sequences are not exact complements")
    if w.components[0].left_ram != p.alpha1:
        out.append("left endpoint does not carry alpha1")
    if w.components[-1].right_ram != p.alpha2:
        out.append("right endpoint does not carry alpha2")
    genera = [c.genus for c in w.components]
    if p.g == 0:
        if genera != [0]:
            out.append(f"genus-0 problem needs a single genus-0 component, got {genera}")
    else:
        if genera != [1] * p.g:
            out.append(f"expected {p.g} genus-1 components, got {genera}")
    total = sum(c.component_rho for c in w.components)
    if w.total_rho != total:
        out.append(f"stored total rho {w.total_rho} != component sum {total}")
    if total != rho(p):
        out.append(f"component rho sum {total} != problem rho {rho(p)}")
    return out


def verify_chain(w: ChainWitness, p: BNProblem) -> bool:
    return not chain_violations(w, p)


def witness_to_dict(w: ChainWitness) -> dict:
    return {
        "r": w.r,
        "d": w.d,
        "components": [
            {
                "genus": c.genus,
                "left": list(c.left_ram.entries),
                "right": list(c.right_ram.entries),
                "rho": c.component_rho,
            }
            for c in w.components
        ],
        "total_rho": w.total_rho,
    }


def witness_from_dict(data: dict) -> ChainWitness:
    """Parse a serialized witness; raises ValueError on malformed input."""
    try:
        r, d = int(data["r"]), int(data["d"])
        components = tuple(
            ChainComponent(
                int(c["genus"]),
                RamSeq(tuple(c["left"]), d),
                RamSeq(tuple(c["right"]), d),
                int(c["rho"]),
            )
            for c in data["components"]
        )
        return ChainWitness(r, d, components, int(data["total_rho"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed chain witness: {exc}") from exc
