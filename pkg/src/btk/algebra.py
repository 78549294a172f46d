"""Finite algebras of type (2, 2, 1) given by structure matrices.

Elements are the integers ``1..k``; element ``i`` stands for the basis vector
delta_k^i. Index 1 is the top and index ``k`` the bottom. A binary structure
matrix is ``k x k^2`` and column ``(i-1)k + j`` holds ``op(i, j)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace
from typing import Optional, Sequence

from .stp import LogicalMatrix

__all__ = [
    "StructureTriple",
    "AlgebraReport",
    "AlgebraFormatError",
    "apply_binary",
    "apply_unary",
    "parse_algebra",
    "emit_algebra",
    "algebra_to_doc",
    "algebra_from_doc",
    "parse_catalog",
    "emit_catalog",
    "COMPLEMENT_CLASSES",
]

COMPLEMENT_CLASSES = ("free", "dic", "de_morgan", "kleene", "pseudo", "stone", "boolean")


@dataclass(frozen=True)
class StructureTriple:
    """Carrier size plus meet, join and (optionally) complement structure matrices."""

    k: int
    meet: LogicalMatrix
    join: LogicalMatrix
    comp: Optional[LogicalMatrix] = None

    def __post_init__(self):
        k = self.k
        if k < 1:
            raise ValueError(f"carrier size must be >= 1, got {k}")
        for name in ("meet", "join"):
            m = getattr(self, name)
            if m.shape != (k, k * k):
                raise ValueError(f"{name} must be {k}x{k * k}, got {m.shape[0]}x{m.shape[1]}")
        if self.comp is not None and self.comp.shape != (k, k):
            raise ValueError(f"comp must be {k}x{k}, got {self.comp.shape[0]}x{self.comp.shape[1]}")

    @classmethod
    def from_tables(cls, k: int, meet: Sequence[int], join: Sequence[int],
                    comp: Sequence[int] | None = None) -> "StructureTriple":
        return cls(
            k,
            LogicalMatrix(k, tuple(meet)),
            LogicalMatrix(k, tuple(join)),
            None if comp is None else LogicalMatrix(k, tuple(comp)),
        )

    def with_comp(self, comp: LogicalMatrix | Sequence[int] | None) -> "StructureTriple":
        if comp is not None and not isinstance(comp, LogicalMatrix):
            comp = LogicalMatrix(self.k, tuple(comp))
        return replace(self, comp=comp)

    @property
    def lattice(self) -> "StructureTriple":
        """The same algebra with the complement dropped."""
        return self if self.comp is None else replace(self, comp=None)

    def sort_key(self) -> tuple:
        return self.meet.cols + self.join.cols + (self.comp.cols if self.comp else ())

    def __str__(self) -> str:
        parts = [f"k={self.k}", f"meet={self.meet}", f"join={self.join}"]
        if self.comp is not None:
            parts.append(f"comp={self.comp}")
        return "StructureTriple(" + ", ".join(parts) + ")"


@dataclass
class AlgebraReport:
    """Which axioms hold. Complement flags are ``None`` when no complement is given."""

    meet_commutative: bool
    meet_associative: bool
    join_commutative: bool
    join_associative: bool
    absorption: bool
    lattice: bool
    distributive: bool
    bounded: bool
    free: Optional[bool] = None
    dic: Optional[bool] = None
    de_morgan: Optional[bool] = None
    kleene: Optional[bool] = None
    pseudo: Optional[bool] = None
    stone: Optional[bool] = None
    boolean: Optional[bool] = None

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def flag(self, name: str) -> Optional[bool]:
        return getattr(self, name)


class AlgebraFormatError(ValueError):
    """Bad algebra document. ``position`` is a JSON path or ``line L column C``."""

    def __init__(self, message: str, position: str | None = None):
        self.position = position
        super().__init__(f"{position}: {message}" if position else message)


def _check_index(k: int, x: int, what: str = "element") -> None:
    if not 1 <= x <= k:
        raise IndexError(f"{what} {x} outside [1, {k}]")


def apply_binary(op: LogicalMatrix, x: int, y: int) -> int:
    """Value of ``x op y`` read from column ``(x-1)k + y``."""
    k = op.rows
    _check_index(k, x)
    _check_index(k, y)
    return op.cols[(x - 1) * k + y - 1]


def apply_unary(op: LogicalMatrix, x: int) -> int:
    _check_index(op.ncols, x)
    return op.cols[x - 1]


def algebra_to_doc(a: StructureTriple) -> dict:
    ops = {"meet": list(a.meet.cols), "join": list(a.join.cols)}
    if a.comp is not None:
        ops["comp"] = list(a.comp.cols)
    return {"k": a.k, "ops": ops}


def emit_algebra(a: StructureTriple) -> str:
    """Canonical single-line JSON; keys always in the order k, ops.meet, ops.join, ops.comp."""
    return json.dumps(algebra_to_doc(a), ensure_ascii=False)


def _int_list(value, length: int, k: int, path: str) -> list[int]:
    if not isinstance(value, list):
        raise AlgebraFormatError("expected an array of integers", path)
    if len(value) != length:
        raise AlgebraFormatError(f"length mismatch: expected {length} entries, got {len(value)}", path)
    out = []
    for i, v in enumerate(value):
        if isinstance(v, bool) or not isinstance(v, int):
            raise AlgebraFormatError(f"expected an integer, got {v!r}", f"{path}[{i}]")
        if not 1 <= v <= k:
            raise AlgebraFormatError(f"index {v} out of range [1, {k}]", f"{path}[{i}]")
        out.append(v)
    return out


def algebra_from_doc(doc, where: str = "") -> StructureTriple:
    """Validate an already-decoded algebra document."""
    if not isinstance(doc, dict):
        raise AlgebraFormatError("expected a JSON object", where or "$")
    if "k" not in doc:
        raise AlgebraFormatError("missing field 'k'", where or "$")
    pre = f"{where}." if where else ""
    k = doc["k"]
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise AlgebraFormatError(f"'k' must be an integer >= 1, got {k!r}", f"{pre}k")
    ops = doc.get("ops")
    if ops is None:
        raise AlgebraFormatError("missing field 'ops'", where or "$")
    if not isinstance(ops, dict):
        raise AlgebraFormatError("'ops' must be an object", f"{pre}ops")
    for name in ("meet", "join"):
        if name not in ops:
            raise AlgebraFormatError(f"missing field 'ops.{name}'", f"{pre}ops")
    meet = _int_list(ops["meet"], k * k, k, f"{pre}ops.meet")
    join = _int_list(ops["join"], k * k, k, f"{pre}ops.join")
    comp = None
    if ops.get("comp") is not None:
        comp = _int_list(ops["comp"], k, k, f"{pre}ops.comp")
    return StructureTriple.from_tables(k, meet, join, comp)


def _decode(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(f"malformed JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None


def parse_algebra(text: str) -> StructureTriple:
    """Parse and validate one algebra document."""
    return algebra_from_doc(_decode(text))


def parse_catalog(text: str) -> list[StructureTriple]:
    """Parse a JSON array of algebra documents (or a single document)."""
    doc = _decode(text)
    if isinstance(doc, dict):
        return [algebra_from_doc(doc)]
    if not isinstance(doc, list):
        raise AlgebraFormatError("expected an array of algebra documents", "$")
    return [algebra_from_doc(d, f"[{i}]") for i, d in enumerate(doc)]


def emit_catalog(algebras: Sequence[StructureTriple]) -> str:
    return "[\n" + ",\n".join(emit_algebra(a) for a in algebras) + "\n]" if algebras else "[]"
