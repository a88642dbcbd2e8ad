"""Factoring group elements into products of generators.

Two factorizations are provided. The unordered one peels coefficients
level by level: modulo the bracket of the support closure, coefficient
maps simply add, so clearing the coefficients outside the bracket
pushes the residual one level deeper, and recursion bottoms out because
every closed set's bracket is strictly smaller.

The ordered one is canonical: given any total order on a closed set
covering the element's support, there is exactly one choice of one
coefficient per pair whose ordered generator product reproduces the
element. It is computed by a level sweep. Before level k the running
product agrees with the target modulo the k-th bracket term; the pairs
at level k are isolated in the quotient that kills level k + 1, so
their generators are central there and their coefficients can be read
straight off the residual, in any position of the order.

The n-gon demonstration shows why the order must be allowed to roam
over the closure rather than just the support: around an n-cycle with
steps of size one and two, the sum of all unit step-one generators is
not a product of step-one generators in any order, so every
factorization of it must borrow step-two pairs.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .elements import Gen, GeneratorWord, GroupElement, McLainGroup
from .relations import (
    Pair,
    Relation,
    bracket,
    closure,
    gamma_series,
    ngon,
    ngon_diagonals,
    ngon_edges,
)
from .rings import IntegersMod, Ring, RingValue


def minimal_closed_support(g: GroupElement) -> Relation:
    """The smallest closed subset containing the support of g."""
    return closure(g.support(), g.group.relation)


def word_factorization(g: GroupElement) -> GeneratorWord:
    """A flat product of generators evaluating back to g.

    Each pass peels the support pairs lying outside the bracket of the
    current closed support, recording one generator per peeled pair;
    what remains is supported strictly deeper, so the passes terminate.
    Evaluating the recorded word left to right reconstructs g exactly.
    """
    tokens: list[Gen] = []
    residual = g
    group = g.group
    while not residual.is_identity():
        gamma = minimal_closed_support(residual)
        deeper = bracket(gamma, gamma, group.relation)
        peel = [p for p in sorted(residual.support().pairs) if p not in deeper.pairs]
        if not peel:
            raise AssertionError("support closure has no top level to peel")
        for source, target in peel:
            value = residual.coefficient(source, target)
            tokens.append(Gen(source, target, value))
            undo = group.generator(source, target, value).inverse()
            residual = undo * residual
    return GeneratorWord(tuple(tokens))


@dataclass(frozen=True, eq=False)
class OrderedForm:
    """Coefficients for an ordered generator product, zeros included.

    ``order`` fixes the factor positions; ``coefficients`` maps every
    pair of the order to its coefficient, and the ordered product of
    the corresponding generators reproduces the factored element.
    """

    group: McLainGroup
    order: tuple[Pair, ...]
    coefficients: dict[Pair, RingValue]

    def product(self) -> GroupElement:
        out = self.group.identity()
        for source, target in self.order:
            out = out * self.group.generator(
                source, target, self.coefficients[(source, target)]
            )
        return out

    def lines(self) -> list[str]:
        return [
            f"({i},{j}) ; {self.coefficients[(i, j)]}" for i, j in self.order
        ]


def ordered_factorization(g: GroupElement, order: tuple[Pair, ...]) -> OrderedForm:
    """The unique coefficients reproducing g as an ordered product.

    The order must list each pair of a closed subset exactly once, and
    that subset must contain the support of g.
    """
    group = g.group
    order = tuple(order)
    if len(set(order)) != len(order):
        raise ValueError("order lists a pair twice, so it is not a total order")
    try:
        gamma = group.relation.subset(order)
    except ValueError as exc:
        raise ValueError(f"order contains pairs outside the relation: {exc}") from exc
    if not (g.support().pairs <= gamma.pairs):
        missing = sorted(g.support().pairs - gamma.pairs)
        raise ValueError(f"order does not cover the support: missing {missing}")
    chain = gamma_series(gamma, group.relation)  # also rejects a non-closed order
    coefficients = {pair: group.ring.zero for pair in order}
    for level in range(1, len(chain.terms)):
        current = chain.terms[level - 1]
        deeper = chain.terms[level]
        partial = _ordered_product(group, order, coefficients)
        residual = partial.inverse() * g
        if not (residual.support().pairs <= current.pairs):
            raise AssertionError("level sweep residual escaped its bracket level")
        for pair in sorted(current.pairs - deeper.pairs):
            coefficients[pair] = coefficients[pair] + residual.coefficient(*pair)
    form = OrderedForm(group, order, coefficients)
    if form.product() != g:
        raise AssertionError("level sweep did not converge to the target")
    return form


def _ordered_product(
    group: McLainGroup, order: tuple[Pair, ...], coefficients: dict[Pair, RingValue]
) -> GroupElement:
    out = group.identity()
    for source, target in order:
        out = out * group.generator(source, target, coefficients[(source, target)])
    return out


@dataclass(frozen=True, eq=False)
class NgonReport:
    """Outcome of the n-gon obstruction demonstration."""

    n: int
    ring: Ring
    orderings_checked: int
    successes: int
    every_failure_has_step_two_term: bool
    unit_coefficients_forced: bool
    mixed_word: GeneratorWord
    mixed_word_matches: bool
    mixed_word_uses_step_two: bool

    def summary(self) -> str:
        return f"{self.orderings_checked} orderings checked, {self.successes} succeed"


def demonstrate_ngon_obstruction(n: int, ring: Ring | None = None) -> NgonReport:
    """Exhaust the single-step factorization attempts around an n-cycle.

    The target is the sum of unit generators on all step-one pairs. Any
    ordered product of step-one generators reproduces its own inputs on
    the step-one coefficients, which is asserted on random inputs and
    forces every candidate coefficient to be the unit. All n! orderings
    of the unit generators are then multiplied out; each one picks up a
    nonzero step-two coefficient wherever (i,i+1) precedes (i+1,i+2),
    and a full cycle of descents is impossible, so none can equal the
    target. A mixed factorization from word_factorization is attached
    to show the target is still a product of generators.
    """
    if not 4 <= n <= 6:
        raise ValueError("the demonstration enumerates n! orderings; use 4 <= n <= 6")
    if ring is None:
        ring = IntegersMod(2)
    delta = ngon(n)
    group = McLainGroup(delta, ring)
    edges = ngon_edges(n)
    step_two = set(ngon_diagonals(n))
    target = group.element({edge: ring.one for edge in edges})

    # Edge coefficients of an ordered edge product are exactly the inputs:
    # matching the all-unit target therefore forces unit coefficients.
    rng = random.Random(20240 + n)
    forced = True
    for _ in range(20):
        values = {edge: ring.sample(rng) for edge in edges}
        shuffled = list(edges)
        rng.shuffle(shuffled)
        product = group.identity()
        for edge in shuffled:
            product = product * group.generator(edge[0], edge[1], values[edge])
        for edge in edges:
            if product.coefficient(*edge) != values[edge]:
                forced = False

    checked = 0
    successes = 0
    all_have_step_two = True
    for ordering in itertools.permutations(edges):
        product = group.identity()
        for edge in ordering:
            product = product * group.generator(edge[0], edge[1], ring.one)
        checked += 1
        if product == target:
            successes += 1
        elif not any(product.coefficient(*pair) for pair in step_two):
            all_have_step_two = False

    mixed = word_factorization(target)
    mixed_matches = group.eval_word(mixed) == target
    mixed_uses_step_two = any(
        isinstance(token, Gen) and (token.source, token.target) in step_two
        for token in mixed.tokens
    )
    return NgonReport(
        n=n,
        ring=ring,
        orderings_checked=checked,
        successes=successes,
        every_failure_has_step_two_term=all_have_step_two,
        unit_coefficients_forced=forced,
        mixed_word=mixed,
        mixed_word_matches=mixed_matches,
        mixed_word_uses_step_two=mixed_uses_step_two,
    )
