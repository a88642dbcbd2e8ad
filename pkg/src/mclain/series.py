"""Structure theory: central series, the center, and quotients.

Everything here happens at the relation level and is then interpreted
in the group. The lower central series of the group is the bracket
series of the relation; the center is the set of elements supported on
the isolated pairs; quotients by normal subsets are computed by plain
coefficient deletion, which normality makes into a homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elements import GroupElement, McLainGroup
from .relations import (
    Relation,
    SubsetChain,
    difference,
    gamma_series,
    isolated,
    require_valid,
)
from .rings import Ring


@dataclass(frozen=True)
class FactorReport:
    """One lower-central factor: free over the ring on the level's pairs.

    The factor at level k is a restricted direct product of rank copies
    of the additive group of the ring, one copy per pair that lives at
    level k and dies at level k + 1.
    """

    level: int
    support: Relation
    rank: int
    ring: Ring


def lower_central_series(
    delta: Relation, ring: Ring
) -> tuple[SubsetChain, list[FactorReport]]:
    """The bracket series of the whole relation, with factor reports."""
    require_valid(delta)
    chain = gamma_series(delta, delta)
    reports = []
    for level in range(1, len(chain.terms)):
        current = chain.terms[level - 1]
        nxt = chain.terms[level]
        support = Relation(delta.nodes, current.pairs - nxt.pairs)
        if not current.pairs:
            break
        reports.append(FactorReport(level, support, len(support.pairs), ring))
    return chain, reports


def nilpotency_class(chain: SubsetChain) -> int:
    """Number of nonempty terms of a descending chain."""
    return sum(1 for term in chain.terms if term.pairs)


def center_support(delta: Relation) -> Relation:
    """Pairs supporting central elements: exactly the isolated ones."""
    require_valid(delta)
    return isolated(delta)


def upper_central_series(delta: Relation) -> SubsetChain:
    """Ascending chain from the empty subset up to the whole relation.

    Each step adjoins the isolated pairs of what is left; the quotient
    isomorphism is what lets the accumulated union stand in for centers
    of successive quotient groups. The difference call re-checks
    normality of the accumulated subset at every step.
    """
    require_valid(delta)
    zeta = Relation(delta.nodes, frozenset())
    terms = [zeta]
    while zeta.pairs != delta.pairs:
        remaining = difference(delta, zeta)
        step = isolated(remaining)
        if not step.pairs:
            raise AssertionError(
                "upper central series stalled before exhausting the relation"
            )
        zeta = Relation(delta.nodes, zeta.pairs | step.pairs)
        terms.append(zeta)
    return SubsetChain("ascending", tuple(terms))


def quotient_project(g: GroupElement, gamma: Relation) -> GroupElement:
    """Delete the coefficients at a normal subset.

    The result lives in the group over the smaller relation; deletion
    is a surjective homomorphism whose kernel is exactly the elements
    supported inside gamma.
    """
    ambient = g.group.relation
    smaller = difference(ambient, gamma)
    target = McLainGroup(smaller, g.group.ring)
    kept = {
        pair: value
        for pair, value in g.coefficients().items()
        if pair not in gamma.pairs
    }
    return target.element(kept)


def coset_representative(g: GroupElement, gamma: Relation) -> GroupElement:
    """The canonical representative of g modulo the subgroup over gamma.

    Project g into the quotient group, factor the image into generators
    there in increasing pair order, then multiply those same generators
    back inside the ambient group. The result depends only on the coset
    of g, and the defining membership inverse(r) * g in the subgroup is
    checked on every call rather than trusted.
    """
    from .factorization import minimal_closed_support, ordered_factorization

    projected = quotient_project(g, gamma)
    closed = minimal_closed_support(projected)
    order = tuple(sorted(closed.pairs))
    form = ordered_factorization(projected, order)
    representative = g.group.identity()
    for pair in order:
        representative = representative * g.group.generator(
            pair[0], pair[1], form.coefficients[pair]
        )
    leftover = representative.inverse() * g
    if not (leftover.support().pairs <= gamma.pairs):
        raise AssertionError("coset representative failed the membership check")
    return representative


def format_chain_lines(
    chain: SubsetChain, reports: list[FactorReport] | None = None
) -> list[str]:
    """Deterministic report lines, one per chain term.

    Descending chains are numbered from 1 and may carry ranks; the
    ascending chain is numbered from 0 because its first term is the
    trivial subset.
    """
    label = "gamma" if chain.direction == "descending" else "zeta"
    first = 1 if chain.direction == "descending" else 0
    by_level = {report.level: report for report in reports or []}
    lines = []
    for offset, term in enumerate(chain.terms):
        level = first + offset
        body = ",".join(f"({i},{j})" for i, j in sorted(term.pairs))
        line = f"{label} {level}: {{{body}}}"
        report = by_level.get(level)
        if report is not None and chain.direction == "descending":
            line += f" rank {report.rank}"
        lines.append(line)
    return lines
