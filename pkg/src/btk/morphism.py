"""Homomorphisms and isomorphisms between finite BTAs.

A map ``pi: {1..p} -> {1..q}`` is carried by its structure matrix, the logical
``q x p`` matrix with ``pi(x) = M_pi x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .algebra import StructureTriple
from .config import OracleMismatch, oracle_enabled
from .stp import LogicalMatrix, identity, kron, stp

__all__ = [
    "Morphism",
    "is_lattice_hom",
    "is_bta_hom",
    "is_complement_hom",
    "find_isomorphisms",
    "iso_classes",
    "relabel",
    "bounds_fixing_permutations",
    "morphisms_report",
]

KINDS = ("lattice_hom", "bta_hom", "lattice_iso", "bta_iso")


@dataclass(frozen=True)
class Morphism:
    source_k: int
    target_k: int
    map: LogicalMatrix
    kind: str = "lattice_hom"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown morphism kind {self.kind!r}")
        if self.map.shape != (self.target_k, self.source_k):
            raise ValueError(f"map must be {self.target_k}x{self.source_k}, got {self.map.shape}")
        if self.kind.endswith("_iso") and not (self.source_k == self.target_k and self.map.is_permutation()):
            raise ValueError("an isomorphism must be a permutation matrix")

    def __call__(self, x: int) -> int:
        return self.map.cols[x - 1]

    def then(self, other: "Morphism") -> "Morphism":
        """``other ∘ self``: apply this map first."""
        if other.source_k != self.target_k:
            raise ValueError("maps do not compose")
        family = "bta" if self.kind.startswith("bta") and other.kind.startswith("bta") else "lattice"
        shape = "iso" if self.kind.endswith("iso") and other.kind.endswith("iso") else "hom"
        kind = f"{family}_{shape}"
        return Morphism(self.source_k, other.target_k, stp(other.map, self.map), kind)

    def inverse(self) -> "Morphism":
        return Morphism(self.target_k, self.source_k, self.map.inverse(), self.kind)


def _as_map(m) -> LogicalMatrix:
    return m.map if isinstance(m, Morphism) else m


def _check_shape(a: StructureTriple, b: StructureTriple, m: LogicalMatrix) -> None:
    if m.shape != (b.k, a.k):
        raise ValueError(f"map shape {m.shape} does not fit {a.k}-element source and {b.k}-element target")


def _lattice_hom_pointwise(a: StructureTriple, b: StructureTriple, m: LogicalMatrix) -> bool:
    p, q, f = a.k, b.k, m.cols
    ac, ad, bc, bd = a.meet.cols, a.join.cols, b.meet.cols, b.join.cols
    for x, y in product(range(1, p + 1), repeat=2):
        fx, fy = f[x - 1], f[y - 1]
        if f[ac[(x - 1) * p + y - 1] - 1] != bc[(fx - 1) * q + fy - 1]:
            return False
        if f[ad[(x - 1) * p + y - 1] - 1] != bd[(fx - 1) * q + fy - 1]:
            return False
    return f[0] == 1 and f[p - 1] == q


def _lattice_hom_matrix(a: StructureTriple, b: StructureTriple, m: LogicalMatrix) -> bool:
    ipm = kron(identity(a.k), m)
    return (stp(m, a.meet) == stp(stp(b.meet, m), ipm)
            and stp(m, a.join) == stp(stp(b.join, m), ipm)
            and m.col(1) == 1
            and m.col(a.k) == b.k)


def is_lattice_hom(a: StructureTriple, b: StructureTriple, m) -> bool:
    """Both operations intertwined by the map, top sent to top and bottom to bottom."""
    m = _as_map(m)
    _check_shape(a, b, m)
    verdict = _lattice_hom_matrix(a, b, m)
    if oracle_enabled() and verdict != _lattice_hom_pointwise(a, b, m):
        raise OracleMismatch(f"lattice hom verdicts differ for {m}")
    return verdict


def is_complement_hom(m, comp_a: LogicalMatrix, comp_b: LogicalMatrix) -> bool:
    """``M_pi M_n^1 = M_n^2 M_pi``, i.e. the map commutes with the complements."""
    m = _as_map(m)
    verdict = stp(m, comp_a) == stp(comp_b, m)
    if oracle_enabled():
        pw = all(m.cols[comp_a.cols[x] - 1] == comp_b.cols[m.cols[x] - 1] for x in range(comp_a.ncols))
        if pw != verdict:
            raise OracleMismatch(f"complement hom verdicts differ for {m}")
    return verdict


def is_bta_hom(a: StructureTriple, b: StructureTriple, m) -> bool:
    if a.comp is None or b.comp is None:
        raise ValueError("both algebras need a complement")
    return is_lattice_hom(a, b, m) and is_complement_hom(m, a.comp, b.comp)


def bounds_fixing_permutations(k: int, fix_bounds: bool = True) -> list[LogicalMatrix]:
    """Permutation matrices in lexicographic order, optionally fixing 1 and k."""
    if fix_bounds and k >= 2:
        return [LogicalMatrix(k, (1,) + p + (k,)) for p in permutations(range(2, k))]
    return [LogicalMatrix(k, p) for p in permutations(range(1, k + 1))]


def _iso_matrix(a: StructureTriple, b: StructureTriple, t: LogicalMatrix, with_comp: bool) -> bool:
    tt, t2 = t.transpose(), kron(t, t)
    if a.meet != stp(stp(tt, b.meet), t2) or a.join != stp(stp(tt, b.join), t2):
        return False
    return not with_comp or a.comp == stp(stp(tt, b.comp), t)


def find_isomorphisms(a: StructureTriple, b: StructureTriple, fix_bounds: bool = True) -> list[Morphism]:
    """Every permutation T with ``M^1 = T^T M^2 (T ⊗ T)`` (and ``M_n^1 = T^T M_n^2 T``).

    The complement equation is included only when both algebras carry one.
    """
    if a.k != b.k:
        raise ValueError(f"size mismatch: {a.k} vs {b.k}")
    with_comp = a.comp is not None and b.comp is not None
    kind = "bta_iso" if with_comp else "lattice_iso"
    out = []
    for t in bounds_fixing_permutations(a.k, fix_bounds):
        ok = _iso_matrix(a, b, t, with_comp)
        if oracle_enabled():
            pw = _ops_intertwined(a, b, t)
            if with_comp:
                pw = pw and all(t.cols[a.comp.cols[x] - 1] == b.comp.cols[t.cols[x] - 1] for x in range(a.k))
            if pw != ok:
                raise OracleMismatch(f"isomorphism verdicts differ for {t}")
        if ok:
            out.append(Morphism(a.k, b.k, t, kind))
    return out


def _ops_intertwined(a: StructureTriple, b: StructureTriple, t: LogicalMatrix) -> bool:
    k, f = a.k, t.cols
    return all(
        f[op_a[(x - 1) * k + y - 1] - 1] == op_b[(f[x - 1] - 1) * k + f[y - 1] - 1]
        for op_a, op_b in ((a.meet.cols, b.meet.cols), (a.join.cols, b.join.cols))
        for x, y in product(range(1, k + 1), repeat=2)
    )


def iso_classes(algebras: Sequence[StructureTriple], fix_bounds: bool = True) -> list[list[int]]:
    """Partition of ``range(len(algebras))`` into isomorphism classes, each sorted."""
    if not algebras:
        return []
    sizes = {a.k for a in algebras}
    if len(sizes) > 1:
        raise ValueError(f"mixed carrier sizes: {sorted(sizes)}")
    n = len(algebras)
    rows, cols = [], []
    for i in range(n):
        for j in range(i + 1, n):
            if find_isomorphisms(algebras[i], algebras[j], fix_bounds):
                rows.append(i)
                cols.append(j)
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    _, labels = connected_components(graph, directed=False)
    groups: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    return sorted(groups.values())


def relabel(a: StructureTriple, t: LogicalMatrix) -> StructureTriple:
    """The algebra onto which the permutation ``t`` is an isomorphism from ``a``."""
    if not t.is_permutation() or t.rows != a.k:
        raise ValueError("relabeling needs a k x k permutation matrix")
    ti = t.inverse()
    tt = kron(ti, ti)
    comp = None if a.comp is None else stp(stp(t, a.comp), ti)
    return StructureTriple(a.k, stp(stp(t, a.meet), tt), stp(stp(t, a.join), tt), comp)


def morphisms_report(morphisms: Sequence[Morphism]) -> list[dict]:
    return [{"kind": m.kind, "source_k": m.source_k, "target_k": m.target_k, "map": str(m.map)}
            for m in morphisms]
