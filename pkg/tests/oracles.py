"""Independent oracles used only by the tests.

Nothing here calls into the library's arithmetic beyond constructing
elements and reading coefficients back out, so agreement between the two
routes is meaningful evidence rather than a tautology.

* Dense route: over the full relation i < j on m nodes, group elements
  are exactly the upper unitriangular m-by-m matrices over Z/p, so plain
  matrix arithmetic (with a Gauss-Jordan inverse) predicts products,
  inverses, and commutators.
* Recursive route: an ordered factorization can be found one coefficient
  at a time by peeling a pair from the deepest bracket level, which is
  central, then recursing in the quotient without it.
* Brute force: over a finite ring, simply enumerate every coefficient
  tuple for the given order and multiply out.
* Greedy route: repeatedly peel a pair of the residual's support that
  admits no composite inside that support; each peel fixes one
  coefficient without disturbing the others, and the routine reports
  failure when no such pair exists.
"""

from __future__ import annotations

import itertools

from mclain import GroupElement, McLainGroup, gamma_series, is_closed, quotient_project


def mat_identity(m: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(m)] for i in range(m)]


def mat_mul(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    m = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(m)) % p for j in range(m)]
        for i in range(m)
    ]


def mat_inv(a: list[list[int]], p: int) -> list[list[int]]:
    m = len(a)
    aug = [list(row) + [1 if i == j else 0 for j in range(m)] for i, row in enumerate(a)]
    for col in range(m):
        pivot = next(r for r in range(col, m) if aug[r][col] % p != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = pow(aug[col][col], p - 2, p)
        aug[col] = [(x * scale) % p for x in aug[col]]
        for row in range(m):
            if row != col and aug[row][col] % p != 0:
                factor = aug[row][col]
                aug[row] = [(x - factor * y) % p for x, y in zip(aug[row], aug[col])]
    return [row[m:] for row in aug]


def mat_comm(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    return mat_mul(mat_mul(a, b, p), mat_mul(mat_inv(a, p), mat_inv(b, p), p), p)


def element_to_matrix(g: GroupElement, m: int) -> list[list[int]]:
    """Chain-group element to a dense unitriangular matrix (labels are 1-based)."""
    out = mat_identity(m)
    for (i, j), value in g.coefficients().items():
        out[int(i) - 1][int(j) - 1] = value.payload
    return out


def matrix_to_element(group: McLainGroup, mat: list[list[int]]) -> GroupElement:
    m = len(mat)
    coeffs = {}
    for i in range(m):
        for j in range(i + 1, m):
            if mat[i][j]:
                coeffs[(str(i + 1), str(j + 1))] = group.ring.from_int(mat[i][j])
    return group.element(coeffs)


def recursive_ordered_oracle(g: GroupElement, order) -> dict:
    """Ordered-factorization coefficients found by central peeling.

    Exponential-ish bookkeeping, so keep the order short (six pairs or so).
    """
    group = g.group
    order = tuple(order)
    gamma = group.relation.subset(order)
    assert is_closed(gamma, group.relation)
    assert g.support().pairs <= gamma.pairs
    sub = McLainGroup(gamma, group.ring)
    return _peel(sub.element(g.coefficients()), order)


def _peel(g: GroupElement, order: tuple) -> dict:
    group = g.group
    if not order:
        assert g.is_identity()
        return {}
    levels = gamma_series(group.relation, group.relation).terms
    deepest = [term for term in levels if term.pairs][-1]
    pivot = min(deepest.pairs)
    shrunk = quotient_project(g, group.relation.subset([pivot]))
    coeffs = _peel(shrunk, tuple(p for p in order if p != pivot))
    partial = group.identity()
    for pair in order:
        if pair != pivot:
            partial = partial * group.generator(pair[0], pair[1], coeffs[pair])
    leftover = partial.inverse() * g
    assert leftover.support().pairs <= {pivot}
    return {**coeffs, pivot: leftover.coefficient(*pivot)}


def brute_force_matches(g: GroupElement, order) -> list[dict]:
    """All coefficient tuples whose ordered product equals g (finite rings only)."""
    group = g.group
    order = tuple(order)
    matches = []
    for combo in itertools.product(group.ring.elements(), repeat=len(order)):
        product = group.identity()
        for pair, value in zip(order, combo):
            product = product * group.generator(pair[0], pair[1], value)
        if product == g:
            matches.append(dict(zip(order, combo)))
    return matches


def greedy_peel_factorization(g: GroupElement):
    """Factor g by always peeling a maximal pair of the residual's support.

    Returns the generator list, or None once the residual's support has no
    maximal pair to peel.
    """
    group = g.group
    residual = g
    out = []
    while not residual.is_identity():
        omega = residual.support()
        pick = None
        for i, j in sorted(omega.pairs):
            extends = any(
                (i, k) in group.relation.pairs for _, k in omega.by_first.get(j, ())
            )
            if not extends:
                pick = (i, j)
                break
        if pick is None:
            return None
        value = residual.coefficient(*pick)
        out.append((pick, value))
        residual = group.generator(pick[0], pick[1], value).inverse() * residual
    return out
