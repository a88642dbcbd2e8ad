"""Shared fixtures for the test suite: a zoo of small valid relations
and deterministic random element sampling."""

from __future__ import annotations

import random

from mclain import (
    Integers,
    IntegersMod,
    Matrices2x2Mod,
    McLainGroup,
    chain,
    from_pairs,
    ngon,
    random_pruned_order,
    random_relation,
)


def ring_instances():
    return [Integers(), IntegersMod(5), Matrices2x2Mod(2)]


def relation_zoo():
    """Small valid relations of assorted shapes, at most 8 nodes each."""
    out = [
        ("chain2", chain(2)),
        ("chain3", chain(3)),
        ("chain4", chain(4)),
        ("chain5", chain(5)),
        ("ngon4", ngon(4)),
        ("ngon5", ngon(5)),
        ("ngon6", ngon(6)),
        ("single", from_pairs([("1", "2")])),
        ("path", from_pairs([("1", "2"), ("2", "3")])),
        ("cycle2", from_pairs([("1", "2"), ("2", "1")])),
        ("fan", from_pairs([("1", "2"), ("1", "3"), ("1", "4")])),
        ("vee", from_pairs([("1", "3"), ("2", "3")])),
        ("twochains", from_pairs([("1", "2"), ("3", "4")])),
        (
            "diamond",
            from_pairs([("1", "2"), ("1", "3"), ("2", "4"), ("3", "4"), ("1", "4")]),
        ),
    ]
    for seed in range(6):
        rel, _ = random_relation(seed=100 + seed, node_count=5, density=0.25)
        out.append((f"rand{seed}", rel))
    for seed in range(5):
        rel = random_pruned_order(seed=200 + seed, node_count=6, density=0.4)
        out.append((f"order{seed}", rel))
    return out


def acceptance_relations():
    """At least 20 valid relations with at most 10 pairs each."""
    picked = [(name, rel) for name, rel in relation_zoo() if len(rel.pairs) <= 10]
    assert len(picked) >= 20, f"only {len(picked)} small relations available"
    return picked


def random_element(group: McLainGroup, rng: random.Random, max_terms: int = 6):
    pairs = sorted(group.relation.pairs)
    rng.shuffle(pairs)
    take = rng.randint(0, min(len(pairs), max_terms))
    return group.element({p: group.ring.sample(rng) for p in pairs[:take]})
