"""Products of BTAs and the inverse problem: splitting a pq-element BTA.

Elements of a product are paired as ``(i, j) -> (i-1)q + j``, which is the
index of delta_p^i ⋉ delta_q^j.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .algebra import StructureTriple
from .config import OracleMismatch, oracle_enabled
from .morphism import bounds_fixing_permutations, relabel
from .stp import LogicalMatrix, as_matrix, identity, kron, ones, ones_row, stp, stp_chain, swap_matrix

__all__ = [
    "product",
    "product_componentwise",
    "projections",
    "is_decomposable",
    "decomposition_conditions",
    "decompose",
    "decompose_up_to_iso",
]


def product(a: StructureTriple, b: StructureTriple) -> StructureTriple:
    """Product algebra built from the structure-matrix formulas."""
    if (a.comp is None) != (b.comp is None):
        raise ValueError("complement must be present on both factors or on neither")
    p, q = a.k, b.k
    tail = kron(identity(p), swap_matrix(q, p))
    meet = stp_chain(a.meet, kron(identity(p * p), b.meet), tail)
    join = stp_chain(a.join, kron(identity(p * p), b.join), tail)
    comp = None if a.comp is None else stp(a.comp, kron(identity(p), b.comp))
    out = StructureTriple(p * q, meet, join, comp)
    if oracle_enabled() and out != product_componentwise(a, b):
        raise OracleMismatch("matrix product disagrees with the componentwise product")
    return out


def product_componentwise(a: StructureTriple, b: StructureTriple) -> StructureTriple:
    """Product computed coordinate by coordinate on pairs."""
    p, q = a.k, b.k
    n = p * q

    def split(z):
        return (z - 1) // q + 1, (z - 1) % q + 1

    def both(op_a, op_b):
        out = []
        for x in range(1, n + 1):
            x1, x2 = split(x)
            for y in range(1, n + 1):
                y1, y2 = split(y)
                out.append((op_a.cols[(x1 - 1) * p + y1 - 1] - 1) * q + op_b.cols[(x2 - 1) * q + y2 - 1])
        return LogicalMatrix(n, tuple(out))

    comp = None
    if a.comp is not None and b.comp is not None:
        comp = LogicalMatrix(n, tuple((a.comp.cols[x1 - 1] - 1) * q + b.comp.cols[x2 - 1]
                                      for x1 in range(1, p + 1) for x2 in range(1, q + 1)))
    return StructureTriple(n, both(a.meet, b.meet), both(a.join, b.join), comp)


def projections(p: int, q: int) -> tuple[LogicalMatrix, LogicalMatrix]:
    """Structure matrices ``I_p ⊗ 1_q^T`` and ``1_p^T ⊗ I_q`` of the two coordinate maps."""
    return kron(identity(p), ones_row(q)), kron(ones_row(p), identity(q))


def _check_pq(a: StructureTriple, p: int, q: int) -> None:
    if p < 2 or q < 2:
        raise ValueError("both factor sizes must be at least 2")
    if p * q != a.k:
        raise ValueError(f"p*q = {p * q} does not match carrier size {a.k}")


def _constant_on_fibres(proj: LogicalMatrix, keep, n_in: int) -> bool:
    # proj is indexed by input tuples; keep() maps an input index to the
    # coordinates the value may depend on
    seen: dict = {}
    for j in range(1, n_in + 1):
        key = keep(j)
        v = proj.cols[j - 1]
        if seen.setdefault(key, v) != v:
            return False
    return True


def decomposition_conditions(a: StructureTriple, p: int, q: int) -> dict[str, bool]:
    """Block-constancy form of the six decomposition conditions.

    The first-factor part of ``x ⊓ y`` must depend only on the first-factor
    parts of ``x`` and ``y``, and likewise for the second factor, the join and
    the complement.
    """
    _check_pq(a, p, q)
    n = p * q
    pi1, pi2 = projections(p, q)

    def first(z):
        return (z - 1) // q

    def second(z):
        return (z - 1) % q

    def pair(j, f):
        x, y = (j - 1) // n + 1, (j - 1) % n + 1
        return f(x), f(y)

    out = {
        "meet_first": _constant_on_fibres(stp(pi1, a.meet), lambda j: pair(j, first), n * n),
        "meet_second": _constant_on_fibres(stp(pi2, a.meet), lambda j: pair(j, second), n * n),
        "join_first": _constant_on_fibres(stp(pi1, a.join), lambda j: pair(j, first), n * n),
        "join_second": _constant_on_fibres(stp(pi2, a.join), lambda j: pair(j, second), n * n),
    }
    if a.comp is not None:
        out["comp_first"] = _constant_on_fibres(stp(pi1, a.comp), first, n)
        out["comp_second"] = _constant_on_fibres(stp(pi2, a.comp), second, n)
    return out


def _annihilation_conditions(a: StructureTriple, p: int, q: int) -> dict[str, bool]:
    """The same six conditions as literal matrix identities, scaled to integers.

    ``P M [I - (1/q^2) E] = 0`` is checked as ``q^2 P M - P M E = 0``.
    """
    ip, iq = np.eye(p, dtype=np.int64), np.eye(q, dtype=np.int64)
    jp, jq = np.ones((p, p), dtype=np.int64), np.ones((q, q), dtype=np.int64)
    pi1, pi2 = as_matrix(projections(p, q)[0]), as_matrix(projections(p, q)[1])
    e1 = kron(kron(ip, jq), kron(ip, jq))
    e2 = kron(kron(jp, iq), kron(jp, iq))

    def zero(proj, m, e, scale):
        pm = proj @ as_matrix(m)
        return not (scale * pm - pm @ e).any()

    out = {
        "meet_first": zero(pi1, a.meet, e1, q * q),
        "meet_second": zero(pi2, a.meet, e2, p * p),
        "join_first": zero(pi1, a.join, e1, q * q),
        "join_second": zero(pi2, a.join, e2, p * p),
    }
    if a.comp is not None:
        out["comp_first"] = zero(pi1, a.comp, kron(ip, jq), q)
        out["comp_second"] = zero(pi2, a.comp, kron(jp, iq), p)
    return out


def is_decomposable(a: StructureTriple, p: int, q: int) -> bool:
    """True iff ``a`` equals the product of a p-element and a q-element algebra."""
    cond = decomposition_conditions(a, p, q)
    if oracle_enabled() and cond != _annihilation_conditions(a, p, q):
        raise OracleMismatch("block-constancy and annihilation forms of the conditions disagree")
    return all(cond.values())


def _exact_average(total: np.ndarray, divisor: int) -> LogicalMatrix:
    if (total % divisor).any():
        raise ArithmeticError("extraction sum not divisible; decomposition conditions were violated")
    return LogicalMatrix.from_dense(total // divisor)


def decompose(a: StructureTriple, p: int, q: int) -> Optional[tuple[StructureTriple, StructureTriple]]:
    """Factors ``(a1, a2)`` with ``product(a1, a2) == a``, or None.

    The factor matrices come from the averaging formulas, e.g.
    ``M_c^1 = (1/q^2) (I_p ⊗ 1_q^T) M_c (I_p ⊗ 1_q ⊗ I_p ⊗ 1_q)``, evaluated
    as exact integer sums followed by a checked division.
    """
    if not is_decomposable(a, p, q):
        return None
    ip, iq = np.eye(p, dtype=np.int64), np.eye(q, dtype=np.int64)
    pi1, pi2 = (as_matrix(m) for m in projections(p, q))
    lift1 = kron(kron(ip, ones(q)), kron(ip, ones(q)))
    lift2 = kron(kron(ones(p), iq), kron(ones(p), iq))

    def extract(m, proj, lift, divisor):
        return _exact_average(proj @ as_matrix(m) @ lift, divisor)

    meet1 = extract(a.meet, pi1, lift1, q * q)
    join1 = extract(a.join, pi1, lift1, q * q)
    meet2 = extract(a.meet, pi2, lift2, p * p)
    join2 = extract(a.join, pi2, lift2, p * p)
    comp1 = comp2 = None
    if a.comp is not None:
        comp1 = extract(a.comp, pi1, kron(ip, ones(q)), q)
        comp2 = extract(a.comp, pi2, kron(ones(p), iq), p)
    a1 = StructureTriple(p, meet1, join1, comp1)
    a2 = StructureTriple(q, meet2, join2, comp2)
    if product(a1, a2) != a:
        raise ArithmeticError("extracted factors do not multiply back to the input")
    return a1, a2


def decompose_up_to_iso(a: StructureTriple, fix_bounds: bool = True):
    """Search factor sizes (smallest p first) and relabelings (lexicographic).

    Returns ``(t, (a1, a2))`` where ``t`` is a permutation matrix with
    ``product(a1, a2) == relabel(a, t)``, or None if nothing works.
    """
    n = a.k
    for p in range(2, n):
        if n % p or n // p < 2:
            continue
        q = n // p
        for t in bounds_fixing_permutations(n, fix_bounds):
            factors = decompose(relabel(a, t), p, q)
            if factors is not None:
                return t, factors
    return None
