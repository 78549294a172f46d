"""Lattice and complement axioms, decided by structure-matrix identities.

Each criterion has two routes: the matrix identity evaluated with the
semi-tensor product, and a pointwise check over all element pairs/triples.
The public predicates use the matrix route; with the oracle switched on
(``btk.config.oracle``) they also run the pointwise route and raise
``OracleMismatch`` on disagreement.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Optional

from .algebra import AlgebraReport, StructureTriple
from .config import OracleMismatch, oracle_enabled
from .stp import (
    LogicalMatrix,
    delta,
    identity,
    kron,
    ones_row,
    power_reducing,
    stp,
    stp_chain,
    swap_matrix,
)

__all__ = [
    "CRITERIA",
    "is_lattice",
    "is_distributive",
    "is_bounded",
    "classify",
    "classify_complement",
    "pseudo_complement",
    "matrix_verdicts",
    "pointwise_verdicts",
]

# the ten dual-route checks, in report order
CRITERIA = (
    "associativity",
    "commutativity",
    "absorption",
    "distributivity",
    "boundedness",
    "dic",
    "de_morgan",
    "kleene",
    "stone",
    "boolean",
)
_COMPLEMENT_CRITERIA = CRITERIA[5:]


def _pr(k: int) -> LogicalMatrix:
    # PR_1 degenerates to the 1x1 identity
    return identity(1) if k == 1 else power_reducing(k)


# ---------------------------------------------------------------- matrix route


def _associative_m(m: LogicalMatrix, k: int) -> bool:
    return stp(m, m) == stp(m, kron(identity(k), m))


def _commutative_m(m: LogicalMatrix, k: int) -> bool:
    return m == stp(m, swap_matrix(k, k))


def _absorption_m(a: StructureTriple) -> bool:
    k, i_k, pr = a.k, identity(a.k), _pr(a.k)
    rhs = kron(i_k, ones_row(k))
    return (stp_chain(a.meet, kron(i_k, a.join), pr) == rhs
            and stp_chain(a.join, kron(i_k, a.meet), pr) == rhs)


def _distributive_m(a: StructureTriple) -> bool:
    k, i_k = a.k, identity(a.k)
    tail = (kron(i_k, swap_matrix(k, k)), _pr(k))
    ok_meet = stp(a.meet, kron(i_k, a.join)) == stp_chain(
        a.join, a.meet, kron(identity(k * k), a.meet), *tail)
    ok_join = stp(a.join, kron(i_k, a.meet)) == stp_chain(
        a.meet, a.join, kron(identity(k * k), a.join), *tail)
    return ok_meet and ok_join


def _bounded_m(a: StructureTriple) -> bool:
    k = a.k
    return stp(a.meet, delta(k, 1)) == identity(k) and stp(a.join, delta(k, k)) == identity(k)


def _dic_m(a: StructureTriple) -> bool:
    n, k = a.comp, a.k
    return n.col(1) == k and n.col(k) == 1 and stp(n, n) == identity(k)


def _de_morgan_m(a: StructureTriple) -> bool:
    nn = kron(a.comp, a.comp)
    return stp(a.comp, a.join) == stp(a.meet, nn) and stp(a.comp, a.meet) == stp(a.join, nn)


def _kleene_extra_m(a: StructureTriple) -> bool:
    k, i_k, pr = a.k, identity(a.k), _pr(a.k)
    x_meet_xc = stp_chain(a.meet, kron(i_k, a.comp), pr)
    y_join_yc = stp_chain(a.join, kron(i_k, a.comp), pr)
    lhs = stp_chain(a.meet, x_meet_xc, kron(i_k, y_join_yc))
    rhs = stp(x_meet_xc, kron(i_k, ones_row(k)))
    return lhs == rhs


def _stone_extra_m(a: StructureTriple) -> bool:
    k, n = a.k, a.comp
    lhs = stp_chain(a.join, kron(n, stp(n, n)), _pr(k))
    return lhs == kron(ones_row(k), delta(k, 1))


def _boolean_m(a: StructureTriple) -> bool:
    k, i_k, pr = a.k, identity(a.k), _pr(a.k)
    return (stp_chain(a.join, kron(i_k, a.comp), pr) == kron(ones_row(k), delta(k, 1))
            and stp_chain(a.meet, kron(i_k, a.comp), pr) == kron(ones_row(k), delta(k, k)))


def _pseudo_m(a: StructureTriple) -> Optional[LogicalMatrix]:
    """Candidate from the block rule, kept only if it obeys the pseudo-complement law."""
    k = a.k
    bottom = delta(k, k)
    cols = []
    for i in range(1, k + 1):
        block = stp(a.meet, delta(k, i))
        value = bottom
        for j in range(1, k + 1):
            if block.col(j) == k:
                value = stp_chain(a.join, value, delta(k, j))
        cols.append(value.col(1))
    cand = LogicalMatrix(k, tuple(cols))
    return cand if _is_pseudo_law(a, cand) else None


def _is_pseudo_law(a: StructureTriple, cand: LogicalMatrix) -> bool:
    k, mc = a.k, a.meet.cols
    for x in range(1, k + 1):
        xc = cand.cols[x - 1]
        if mc[(x - 1) * k + xc - 1] != k:
            return False
        for y in range(1, k + 1):
            # x ⊓ y = 0 must force y ≤ x'
            if mc[(x - 1) * k + y - 1] == k and mc[(y - 1) * k + xc - 1] != y:
                return False
    return True


def matrix_verdicts(a: StructureTriple) -> dict[str, bool]:
    """Raw verdict of every matrix criterion (complement ones only if ``comp`` is set)."""
    k = a.k
    out = {
        "associativity": _associative_m(a.meet, k) and _associative_m(a.join, k),
        "commutativity": _commutative_m(a.meet, k) and _commutative_m(a.join, k),
        "absorption": _absorption_m(a),
        "distributivity": _distributive_m(a),
        "boundedness": _bounded_m(a),
    }
    if a.comp is not None:
        lattice = out["associativity"] and out["commutativity"] and out["absorption"]
        dm = _de_morgan_m(a)
        pseudo = _pseudo_m(a) if lattice and out["boundedness"] else None
        out.update(
            dic=_dic_m(a),
            de_morgan=dm,
            kleene=dm and _kleene_extra_m(a),
            stone=pseudo is not None and pseudo == a.comp and _stone_extra_m(a),
            boolean=_boolean_m(a),
        )
    return out


# ------------------------------------------------------------- pointwise route


def _ops(a: StructureTriple):
    k, mc, md = a.k, a.meet.cols, a.join.cols

    def meet(x, y):
        return mc[(x - 1) * k + y - 1]

    def join(x, y):
        return md[(x - 1) * k + y - 1]

    return meet, join


def _pw_associative(op: Callable, els) -> bool:
    return all(op(op(x, y), z) == op(x, op(y, z)) for x, y, z in product(els, repeat=3))


def _pw_commutative(op: Callable, els) -> bool:
    return all(op(x, y) == op(y, x) for x, y in product(els, repeat=2))


def _pw_pseudo(a: StructureTriple, meet) -> Optional[tuple[int, ...]]:
    """Greatest y with x ⊓ y = 0, for every x; None if some x has no greatest such y."""
    k = a.k
    out = []
    for x in range(1, k + 1):
        disjoint = [y for y in range(1, k + 1) if meet(x, y) == k]
        top = [y for y in disjoint if all(meet(z, y) == z for z in disjoint)]
        if len(top) != 1:
            return None
        out.append(top[0])
    return tuple(out)


def pointwise_verdicts(a: StructureTriple) -> dict[str, bool]:
    """Same keys as :func:`matrix_verdicts`, decided element by element."""
    k = a.k
    els = range(1, k + 1)
    meet, join = _ops(a)
    pairs = list(product(els, repeat=2))
    triples = list(product(els, repeat=3))
    out = {
        "associativity": _pw_associative(meet, els) and _pw_associative(join, els),
        "commutativity": _pw_commutative(meet, els) and _pw_commutative(join, els),
        "absorption": all(meet(x, join(x, y)) == x and join(x, meet(x, y)) == x for x, y in pairs),
        "distributivity": all(
            meet(x, join(y, z)) == join(meet(x, y), meet(x, z))
            and join(x, meet(y, z)) == meet(join(x, y), join(x, z))
            for x, y, z in triples
        ),
        "boundedness": all(meet(1, x) == x and join(k, x) == x for x in els),
    }
    if a.comp is not None:
        c = a.comp.cols

        def n(x):
            return c[x - 1]

        lattice = out["associativity"] and out["commutativity"] and out["absorption"]
        dm = all(n(join(x, y)) == meet(n(x), n(y)) and n(meet(x, y)) == join(n(x), n(y))
                 for x, y in pairs)
        kleene = dm and all(meet(meet(x, n(x)), join(y, n(y))) == meet(x, n(x)) for x, y in pairs)
        pseudo = _pw_pseudo(a, meet) if lattice and out["boundedness"] else None
        stone = pseudo == c and all(join(n(x), n(n(x))) == 1 for x in els)
        out.update(
            dic=n(1) == k and n(k) == 1 and all(n(n(x)) == x for x in els),
            de_morgan=dm,
            kleene=kleene,
            stone=stone,
            boolean=all(join(x, n(x)) == 1 and meet(x, n(x)) == k for x in els),
        )
    return out


# --------------------------------------------------------------- public API


def _cross(a: StructureTriple, names: tuple[str, ...], verdict: dict[str, bool]) -> None:
    if not oracle_enabled():
        return
    pw = pointwise_verdicts(a)
    bad = [n for n in names if pw[n] != verdict[n]]
    if bad:
        raise OracleMismatch(f"matrix and pointwise verdicts differ on {bad} for {a}")


def is_lattice(a: StructureTriple) -> bool:
    """Associativity, commutativity (both operations) and both absorption laws."""
    k = a.k
    v = {
        "associativity": _associative_m(a.meet, k) and _associative_m(a.join, k),
        "commutativity": _commutative_m(a.meet, k) and _commutative_m(a.join, k),
    }
    v["absorption"] = _absorption_m(a)
    _cross(a, ("associativity", "commutativity", "absorption"), v)
    return all(v.values())


def is_distributive(a: StructureTriple) -> bool:
    v = {"distributivity": _distributive_m(a)}
    _cross(a, ("distributivity",), v)
    return v["distributivity"]


def is_bounded(a: StructureTriple) -> bool:
    """Index 1 is a unit for meet and index k a unit for join."""
    v = {"boundedness": _bounded_m(a)}
    _cross(a, ("boundedness",), v)
    return v["boundedness"]


def pseudo_complement(a: StructureTriple) -> Optional[LogicalMatrix]:
    """Structure matrix of the pseudo complement, or None if the lattice has none."""
    if not (is_lattice(a) and is_bounded(a)):
        raise ValueError("pseudo complement needs a bounded lattice")
    cand = _pseudo_m(a)
    if oracle_enabled():
        pw = _pw_pseudo(a, _ops(a)[0])
        if (cand.cols if cand else None) != pw:
            raise OracleMismatch(f"pseudo complement {cand} disagrees with pointwise {pw} for {a}")
    return cand


def classify(a: StructureTriple) -> AlgebraReport:
    """Full report; complement flags stay None when ``a.comp`` is None.

    A DIC needs bounds, and the boolean flag also needs a distributive
    lattice, so Boolean ⇒ Stone ⇒ pseudo and Kleene ⇒ De Morgan always hold.
    """
    k = a.k
    mc_comm, md_comm = _commutative_m(a.meet, k), _commutative_m(a.join, k)
    mc_assoc, md_assoc = _associative_m(a.meet, k), _associative_m(a.join, k)
    v = matrix_verdicts(a)
    _cross(a, tuple(v), v)
    lattice = v["associativity"] and v["commutativity"] and v["absorption"]
    report = AlgebraReport(
        meet_commutative=mc_comm,
        meet_associative=mc_assoc,
        join_commutative=md_comm,
        join_associative=md_assoc,
        absorption=v["absorption"],
        lattice=lattice,
        distributive=lattice and v["distributivity"],
        bounded=v["boundedness"],
    )
    if a.comp is not None:
        pseudo = lattice and v["boundedness"] and _pseudo_m(a) == a.comp
        report.free = True
        report.dic = v["boundedness"] and v["dic"]
        report.de_morgan = v["de_morgan"]
        report.kleene = v["kleene"]
        report.pseudo = pseudo
        report.stone = v["stone"]
        report.boolean = v["boolean"] and report.distributive
    return report


def classify_complement(a: StructureTriple) -> AlgebraReport:
    if a.comp is None:
        raise ValueError("algebra has no complement to classify")
    return classify(a)
