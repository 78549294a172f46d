"""Catalogs of labeled bounded lattices and their complements.

Labeling is fixed: element 1 is the top and element k the bottom. Lattices
that differ only by relabeling middle elements are listed separately.
"""

from __future__ import annotations

import csv
import io
from itertools import product
from typing import Iterable, Iterator, Sequence

from . import axioms
from .algebra import COMPLEMENT_CLASSES, StructureTriple
from .config import kmax
from .stp import LogicalMatrix

__all__ = [
    "enumerate_lattices",
    "enumerate_complements",
    "iter_complements",
    "enumerate_btas",
    "catalog_csv",
    "normalize_class",
]


def normalize_class(name: str) -> str:
    """Accept ``de-morgan``, ``De Morgan``, ``de_morgan`` and so on."""
    key = name.strip().lower().replace("-", "_").replace(" ", "_")
    if key not in COMPLEMENT_CLASSES:
        raise ValueError(f"unsupported complement class {name!r}; choose from {', '.join(COMPLEMENT_CLASSES)}")
    return key


def _check_k(k: int, cap: int | None) -> None:
    cap = kmax() if cap is None else cap
    if not 2 <= k <= cap:
        raise ValueError(f"k={k} outside the supported range [2, {cap}]")


def _meet_tables(k: int) -> Iterator[list[list[int]]]:
    """Backtrack over the free entries x ⊓ y (1 < x < y < k) of a meet table.

    Fixed entries encode idempotence and the bounds; commutativity is built in
    by filling both halves at once. A partial table is pruned as soon as some
    fully determined instance of associativity fails.
    """
    top, bot = 1, k
    t = [[0] * (k + 1) for _ in range(k + 1)]
    for x in range(1, k + 1):
        t[x][x] = x
        t[top][x] = t[x][top] = x
        t[bot][x] = t[x][bot] = bot
    free = [(x, y) for x in range(2, k) for y in range(x + 1, k)]
    els = range(1, k + 1)

    def consistent() -> bool:
        for x, y, z in product(els, repeat=3):
            xy, yz = t[x][y], t[y][z]
            if not xy or not yz:
                continue
            lhs, rhs = t[xy][z], t[x][yz]
            if lhs and rhs and lhs != rhs:
                return False
        return True

    def go(i: int):
        if i == len(free):
            yield [row[:] for row in t]
            return
        x, y = free[i]
        for v in els:
            t[x][y] = t[y][x] = v
            if consistent():
                yield from go(i + 1)
        t[x][y] = t[y][x] = 0

    yield from go(0)


def _lattice_from_meet(k: int, t: list[list[int]]) -> StructureTriple:
    # x ≤ y iff x ⊓ y = x; the join is the meet of all common upper bounds
    els = range(1, k + 1)
    meet = [t[x][y] for x in els for y in els]
    join = []
    for x in els:
        for y in els:
            lub = 1
            for u in els:
                if t[x][u] == x and t[y][u] == y:
                    lub = t[lub][u]
            join.append(lub)
    return StructureTriple.from_tables(k, meet, join)


def enumerate_lattices(k: int, require_distributive: bool = True, *, cap: int | None = None) -> list[StructureTriple]:
    """All labeled bounded lattices on ``{1..k}`` (1 = top, k = bottom), sorted.

    Each candidate built from a consistent meet table is accepted only after
    the matrix criteria for lattice and bounds (and distributivity when
    requested) confirm it.
    """
    _check_k(k, cap)
    out = []
    for table in _meet_tables(k):
        a = _lattice_from_meet(k, table)
        if not (axioms.is_lattice(a) and axioms.is_bounded(a)):
            continue
        if require_distributive and not axioms.is_distributive(a):
            continue
        out.append(a)
    out.sort(key=StructureTriple.sort_key)
    return out


def _dic_candidates(k: int) -> Iterator[tuple[int, ...]]:
    # involutions of the middle elements, with 1 <-> k
    middle = list(range(2, k))

    def involutions(rest: list[int]) -> Iterator[dict[int, int]]:
        if not rest:
            yield {}
            return
        x, tail = rest[0], rest[1:]
        for m in involutions(tail):
            yield {x: x, **m}
        for i, y in enumerate(tail):
            for m in involutions(tail[:i] + tail[i + 1:]):
                yield {x: y, y: x, **m}

    for m in involutions(middle):
        yield (k,) + tuple(m[x] for x in middle) + (1,)


def iter_complements(lattice: StructureTriple, cls: str) -> Iterator[LogicalMatrix]:
    """Lazily yield every complement of class ``cls``, in lexicographic order."""
    cls = normalize_class(cls)
    k = lattice.k
    lattice = lattice.lattice
    if cls == "free":
        for cols in product(range(1, k + 1), repeat=k):
            yield LogicalMatrix(k, cols)
        return
    if cls in ("pseudo", "stone", "boolean"):
        # at most one candidate: the pseudo complement itself (Boolean ⇒ Stone ⇒ pseudo)
        if not (axioms.is_lattice(lattice) and axioms.is_bounded(lattice)):
            return
        cand = axioms.pseudo_complement(lattice)
        if cand is not None and axioms.classify(lattice.with_comp(cand)).flag(cls):
            yield cand
        return
    source = sorted(_dic_candidates(k)) if cls == "dic" and k >= 2 else product(range(1, k + 1), repeat=k)
    for cols in source:
        n = LogicalMatrix(k, cols)
        if axioms.classify(lattice.with_comp(n)).flag(cls):
            yield n


def enumerate_complements(lattice: StructureTriple, cls: str):
    """Sorted list of complements of class ``cls`` on ``lattice``.

    The free class has k^k members; for k > 4 it is returned as an iterator
    instead of a list.
    """
    if not axioms.is_lattice(lattice):
        raise ValueError("complements are enumerated over lattices only")
    it = iter_complements(lattice, cls)
    if normalize_class(cls) == "free" and lattice.k > 4:
        return it
    return list(it)


def enumerate_btas(k: int, classes: str | Sequence[str], *, require_distributive: bool = True,
                   cap: int | None = None) -> list[StructureTriple]:
    """All (lattice, complement) pairs whose complement is in every class given.

    ``enumerate_btas(5, ("dic", "de_morgan"))`` lists the De Morgan algebras
    built from DICs.
    """
    if isinstance(classes, str):
        classes = (classes,)
    classes = [normalize_class(c) for c in classes]
    if not classes:
        raise ValueError("need at least one complement class")
    first, rest = classes[0], classes[1:]
    out = []
    for lat in enumerate_lattices(k, require_distributive, cap=cap):
        for n in iter_complements(lat, first):
            a = lat.with_comp(n)
            if rest:
                report = axioms.classify(a)
                if not all(report.flag(c) for c in rest):
                    continue
            out.append(a)
    return out


def catalog_csv(algebras: Iterable[StructureTriple]) -> str:
    """One row per algebra: id, k and every report flag (empty when not applicable)."""
    buf = io.StringIO()
    writer = None
    for i, a in enumerate(algebras, start=1):
        flags = axioms.classify(a).as_dict()
        if writer is None:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["id", "k", *flags])
        writer.writerow([i, a.k, *("" if v is None else int(v) for v in flags.values())])
    return buf.getvalue()
