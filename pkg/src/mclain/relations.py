"""Finite relations on labelled nodes, and the subset calculus built on them.

A relation is a finite set of ordered pairs over an explicit node set.
Two structural axioms make a relation usable as the index set of a group:

  irreflexivity   no pair (i, i) occurs;
  exchange        whenever (i,j), (j,k), (k,l), (i,l) are all present,
                  (i,k) is present exactly when (j,l) is.

Construction does not enforce either axiom, so that defective input can
be loaded and diagnosed; ``check_axioms`` reports every violation. All
group-level code validates before computing.

Subsets of a relation come in two strengths. A subset is closed when it
contains every composite (i,k) of its own pairs that the ambient
relation admits; closed subsets index subgroups. It is normal when it
additionally absorbs composition with ambient pairs on either side;
normal subsets index normal subgroups and quotients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

Pair = tuple[str, str]


class ParseError(ValueError):
    """A text surface failed to parse; the message carries a line number."""


@dataclass(frozen=True)
class ReflexiveViolation:
    pair: Pair

    def __str__(self) -> str:
        return f"reflexive pair ({self.pair[0]},{self.pair[1]})"


@dataclass(frozen=True)
class ExchangeViolation:
    """A quadruple i,j,k,l witnessing failure of the exchange axiom.

    All of (i,j), (j,k), (k,l), (i,l) are present, but exactly one of
    the two cross pairs (i,k), (j,l) is. ``present`` names the one that
    is there and ``absent`` the one that is missing, so the witness can
    be replayed directly against the pair set.
    """

    quadruple: tuple[str, str, str, str]
    present: Pair
    absent: Pair

    def __str__(self) -> str:
        i, j, k, l = self.quadruple
        return (
            f"exchange violation at quadruple ({i},{j},{k},{l}): "
            f"({self.present[0]},{self.present[1]}) present, "
            f"({self.absent[0]},{self.absent[1]}) absent"
        )


@dataclass(frozen=True)
class AxiomReport:
    valid: bool
    violations: tuple[object, ...]


@dataclass(frozen=True)
class Relation:
    """An immutable finite relation with an explicit node set.

    The node set may strictly contain the nodes touched by pairs; keeping
    it explicit lets set difference preserve isolated nodes.
    """

    nodes: frozenset[str]
    pairs: frozenset[Pair]

    def __post_init__(self) -> None:
        for i, j in self.pairs:
            if i not in self.nodes or j not in self.nodes:
                raise ValueError(f"pair ({i},{j}) uses a node outside the node set")

    @cached_property
    def by_first(self) -> dict[str, tuple[Pair, ...]]:
        index: dict[str, list[Pair]] = {}
        for pair in sorted(self.pairs):
            index.setdefault(pair[0], []).append(pair)
        return {k: tuple(v) for k, v in index.items()}

    @cached_property
    def by_second(self) -> dict[str, tuple[Pair, ...]]:
        index: dict[str, list[Pair]] = {}
        for pair in sorted(self.pairs):
            index.setdefault(pair[1], []).append(pair)
        return {k: tuple(v) for k, v in index.items()}

    @cached_property
    def axiom_report(self) -> AxiomReport:
        return check_axioms(self)

    def subset(self, pairs: Iterable[Pair]) -> "Relation":
        """A sub-relation over the same node set."""
        chosen = frozenset(pairs)
        stray = chosen - self.pairs
        if stray:
            raise ValueError(f"pairs not in the relation: {sorted(stray)}")
        return Relation(self.nodes, chosen)

    def __contains__(self, pair: Pair) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(sorted(self.pairs))

    def __repr__(self) -> str:
        return f"Relation({sorted(self.pairs)})"


def spanned_nodes(omega: Relation) -> frozenset[str]:
    """Nodes appearing as a source or target of some pair."""
    out: set[str] = set()
    for i, j in omega.pairs:
        out.add(i)
        out.add(j)
    return frozenset(out)


def check_axioms(delta: Relation) -> AxiomReport:
    """Diagnose both axioms, reporting every violation deterministically.

    The exchange scan walks composable triples (i,j), (j,k), (k,l) with
    (i,l) present, so its cost is the number of length-3 paths rather
    than the fourth power of the pair count.
    """
    violations: list[object] = []
    for pair in sorted(delta.pairs):
        if pair[0] == pair[1]:
            violations.append(ReflexiveViolation(pair))
    seen: set[tuple[str, str, str, str]] = set()
    for i, j in sorted(delta.pairs):
        for _, k in delta.by_first.get(j, ()):
            for _, l in delta.by_first.get(k, ()):
                if (i, l) not in delta.pairs:
                    continue
                has_ik = (i, k) in delta.pairs
                has_jl = (j, l) in delta.pairs
                if has_ik == has_jl:
                    continue
                quad = (i, j, k, l)
                if quad in seen:
                    continue
                seen.add(quad)
                present, absent = ((i, k), (j, l)) if has_ik else ((j, l), (i, k))
                violations.append(ExchangeViolation(quad, present, absent))
    return AxiomReport(not violations, tuple(violations))


def require_valid(delta: Relation) -> None:
    report = delta.axiom_report
    if not report.valid:
        head = "; ".join(str(v) for v in report.violations[:3])
        more = len(report.violations) - 3
        if more > 0:
            head += f"; and {more} more"
        raise ValueError(f"relation violates the structural axioms: {head}")


def _require_subset(sub: Relation, delta: Relation, name: str) -> None:
    stray = sub.pairs - delta.pairs
    if stray:
        raise ValueError(f"{name} is not a subset of the relation: {sorted(stray)}")


def is_closed(sub: Relation, delta: Relation) -> bool:
    """Does sub contain every composite of its own pairs that delta admits?"""
    _require_subset(sub, delta, "subset")
    for i, j in sub.pairs:
        for _, k in sub.by_first.get(j, ()):
            if (i, k) in delta.pairs and (i, k) not in sub.pairs:
                return False
    return True


def is_normal(sub: Relation, delta: Relation) -> bool:
    """Does sub absorb one-sided composition with ambient pairs?

    Two absorption rules: for (i,j) in sub, any ambient (j,k) with
    (i,k) ambient forces (i,k) into sub, and any ambient (k,i) with
    (k,j) ambient forces (k,j) into sub. Normality implies closedness,
    which is asserted rather than trusted.
    """
    _require_subset(sub, delta, "subset")
    for i, j in sub.pairs:
        for _, k in delta.by_first.get(j, ()):
            if (i, k) in delta.pairs and (i, k) not in sub.pairs:
                return False
        for k, _ in delta.by_second.get(i, ()):
            if (k, j) in delta.pairs and (k, j) not in sub.pairs:
                return False
    assert is_closed(sub, delta)
    return True


def closure(omega: Relation, delta: Relation) -> Relation:
    """The smallest closed subset of delta containing omega.

    Saturation under composition; every added pair keeps both endpoints
    among the nodes omega already touches, so the result stays finite
    and inside delta restricted to those nodes.
    """
    _require_subset(omega, delta, "subset")
    pairs: set[Pair] = set(omega.pairs)
    work: list[Pair] = sorted(pairs)
    while work:
        i, j = work.pop()
        for a, b in list(pairs):
            if b == i and (a, j) in delta.pairs and (a, j) not in pairs:
                pairs.add((a, j))
                work.append((a, j))
            if a == j and (i, b) in delta.pairs and (i, b) not in pairs:
                pairs.add((i, b))
                work.append((i, b))
    return Relation(delta.nodes, frozenset(pairs))


def normal_closure(omega: Relation, delta: Relation) -> Relation:
    """The smallest normal subset of delta containing omega."""
    _require_subset(omega, delta, "subset")
    pairs: set[Pair] = set(omega.pairs)
    work: list[Pair] = sorted(pairs)
    while work:
        i, j = work.pop()
        for _, k in delta.by_first.get(j, ()):
            if (i, k) in delta.pairs and (i, k) not in pairs:
                pairs.add((i, k))
                work.append((i, k))
        for k, _ in delta.by_second.get(i, ()):
            if (k, j) in delta.pairs and (k, j) not in pairs:
                pairs.add((k, j))
                work.append((k, j))
    return Relation(delta.nodes, frozenset(pairs))


def bracket(sub1: Relation, sub2: Relation, delta: Relation) -> Relation:
    """All delta pairs obtained by composing one pair from each subset.

    Symmetric in its two arguments: (i,k) belongs to the bracket when
    some middle node j gives (i,j) in one subset and (j,k) in the other.
    """
    _require_subset(sub1, delta, "first subset")
    _require_subset(sub2, delta, "second subset")
    out: set[Pair] = set()
    for left, right in ((sub1, sub2), (sub2, sub1)):
        for i, j in left.pairs:
            for _, k in right.by_first.get(j, ()):
                if (i, k) in delta.pairs:
                    out.add((i, k))
    return Relation(delta.nodes, frozenset(out))


@dataclass(frozen=True)
class SubsetChain:
    """A descending or ascending sequence of subsets of one relation."""

    direction: str
    terms: tuple[Relation, ...]

    def __post_init__(self) -> None:
        if self.direction not in ("descending", "ascending"):
            raise ValueError(f"bad chain direction: {self.direction!r}")

    def __len__(self) -> int:
        return len(self.terms)


def gamma_series(gamma: Relation, delta: Relation) -> SubsetChain:
    """Iterated bracket with gamma, down to the first empty subset.

    Terms are gamma, [gamma, gamma], [[gamma, gamma], gamma], ...; each
    term contains the next because gamma is closed. A closed gamma with
    n pairs dies out within n bracket applications, so the chain has at
    most n + 1 terms including the trailing empty one.
    """
    if not is_closed(gamma, delta):
        raise ValueError("gamma series needs a closed subset")
    terms = [gamma]
    while terms[-1].pairs:
        terms.append(bracket(terms[-1], gamma, delta))
        if len(terms) > len(gamma.pairs) + 1:
            raise AssertionError("bracket series failed to terminate")
    return SubsetChain("descending", tuple(terms))


def isolated(delta: Relation) -> Relation:
    """Pairs that compose with nothing: no right extension (j,k) with
    (i,k) present, and no left extension (l,i) with (l,j) present."""
    out: set[Pair] = set()
    for i, j in delta.pairs:
        blocked = any(
            (i, k) in delta.pairs for _, k in delta.by_first.get(j, ())
        ) or any((l, j) in delta.pairs for l, _ in delta.by_second.get(i, ()))
        if not blocked:
            out.add((i, j))
    return Relation(delta.nodes, frozenset(out))


def difference(delta: Relation, gamma: Relation) -> Relation:
    """Remove a normal subset; the result satisfies both axioms again.

    Normality of gamma is exactly what makes coefficient deletion a
    homomorphism, so it is demanded here rather than assumed.
    """
    _require_subset(gamma, delta, "subset")
    if not is_normal(gamma, delta):
        raise ValueError("can only remove a normal subset")
    return Relation(delta.nodes, delta.pairs - gamma.pairs)


def has_maximal(omega: Relation, delta: Relation) -> bool:
    """Is there a pair (i,j) in omega with no (j,k) in omega such that
    (i,k) lies in delta?"""
    _require_subset(omega, delta, "subset")
    if not omega.pairs:
        raise ValueError("maximality is about nonempty subsets")
    for i, j in omega.pairs:
        if not any((i, k) in delta.pairs for _, k in omega.by_first.get(j, ())):
            return True
    return False


def has_minimal(omega: Relation, delta: Relation) -> bool:
    """Dual of has_maximal: a pair (i,j) in omega with no (k,i) in omega
    such that (k,j) lies in delta."""
    _require_subset(omega, delta, "subset")
    if not omega.pairs:
        raise ValueError("minimality is about nonempty subsets")
    for i, j in omega.pairs:
        if not any((k, j) in delta.pairs for k, _ in omega.by_second.get(i, ())):
            return True
    return False


# ---------------------------------------------------------------------------
# builders


def from_pairs(pairs: Iterable[Pair], nodes: Iterable[str] = ()) -> Relation:
    pair_set = frozenset((str(i), str(j)) for i, j in pairs)
    node_set = set(str(n) for n in nodes)
    for i, j in pair_set:
        node_set.add(i)
        node_set.add(j)
    return Relation(frozenset(node_set), pair_set)


def chain(m: int) -> Relation:
    """All pairs (i, j) with 1 <= i < j <= m: a strict total order."""
    if m < 1:
        raise ValueError("chain needs at least one node")
    nodes = [str(i) for i in range(1, m + 1)]
    pairs = [
        (str(i), str(j)) for i in range(1, m + 1) for j in range(i + 1, m + 1)
    ]
    return from_pairs(pairs, nodes)


def ngon(n: int) -> Relation:
    """Steps of size one and two around a cycle of n nodes.

    The edge pairs (i, i+1) admit no maximal or minimal element, which
    is what the obstruction demonstration exploits. Needs n >= 4; below
    that the two step sizes collide.
    """
    if n < 4:
        raise ValueError("ngon needs at least four nodes")
    nodes = [str(i) for i in range(n)]
    pairs = [(str(i), str((i + 1) % n)) for i in range(n)]
    pairs += [(str(i), str((i + 2) % n)) for i in range(n)]
    return from_pairs(pairs, nodes)


def ngon_edges(n: int) -> tuple[Pair, ...]:
    return tuple((str(i), str((i + 1) % n)) for i in range(n))


def ngon_diagonals(n: int) -> tuple[Pair, ...]:
    return tuple((str(i), str((i + 2) % n)) for i in range(n))


def random_relation(
    seed: int,
    node_count: int,
    density: float,
    max_attempts: int = 1000,
) -> tuple[Relation, int]:
    """Rejection-sample a valid relation; returns it with the rejection count.

    Candidate digraphs draw each non-reflexive pair independently with
    the given density; candidates failing the axioms are rejected. Gives
    up after max_attempts candidates.
    """
    if node_count < 1:
        raise ValueError("need at least one node")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    nodes = [str(i) for i in range(1, node_count + 1)]
    candidates = [(i, j) for i in nodes for j in nodes if i != j]
    candidates.sort()
    rejections = 0
    for _ in range(max_attempts):
        pairs = [p for p in candidates if rng.random() < density]
        candidate = from_pairs(pairs, nodes)
        if candidate.axiom_report.valid:
            return candidate, rejections
        rejections += 1
    raise ValueError(
        f"no valid relation found in {max_attempts} attempts "
        f"(node_count={node_count}, density={density})"
    )


def random_pruned_order(seed: int, node_count: int, density: float) -> Relation:
    """A random strict partial order with a random normal subset removed.

    Strict partial orders satisfy both axioms, and removing a normal
    subset preserves them, so this builder never rejects.
    """
    if node_count < 1:
        raise ValueError("need at least one node")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    nodes = [str(i) for i in range(1, node_count + 1)]
    ranked = list(nodes)
    rng.shuffle(ranked)
    pairs: set[Pair] = set()
    for a in range(node_count):
        for b in range(a + 1, node_count):
            if rng.random() < density:
                pairs.add((ranked[a], ranked[b]))
    # transitive closure turns the sampled edges into a strict order
    changed = True
    while changed:
        changed = False
        for i, j in list(pairs):
            for a, b in list(pairs):
                if a == j and (i, b) not in pairs:
                    pairs.add((i, b))
                    changed = True
    order = from_pairs(pairs, nodes)
    seeds = [p for p in sorted(order.pairs) if rng.random() < 0.3]
    doomed = normal_closure(order.subset(seeds), order)
    return difference(order, doomed)


# ---------------------------------------------------------------------------
# text format
#
#   # comment ............ ignored to end of line
#   i j .................. the pair (i, j)
#   node k ............... declares node k even if no pair touches it
#
# Serialization lists bare nodes first, then pairs, each sorted, so the
# format round-trips byte for byte. The word "node" is reserved and
# cannot start a pair.


def parse_relation_text(text: str) -> Relation:
    nodes: set[str] = set()
    pairs: set[Pair] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "node":
            if len(tokens) != 2:
                raise ParseError(f"line {lineno}: node line needs exactly one label")
            nodes.add(tokens[1])
        elif len(tokens) == 2:
            pairs.add((tokens[0], tokens[1]))
            nodes.update(tokens)
        else:
            raise ParseError(
                f"line {lineno}: expected 'i j' or 'node k', got {raw.strip()!r}"
            )
    return Relation(frozenset(nodes), frozenset(pairs))


def parse_relation_file(path: str) -> Relation:
    with open(path, encoding="utf-8") as handle:
        return parse_relation_text(handle.read())


def format_relation(delta: Relation) -> str:
    touched = spanned_nodes(delta)
    lines = [f"node {n}" for n in sorted(delta.nodes - touched)]
    lines += [f"{i} {j}" for i, j in sorted(delta.pairs)]
    return "\n".join(lines) + ("\n" if lines else "")
