"""Runtime switches shared by the checking modules."""

from __future__ import annotations

import os
from contextlib import contextmanager

DEFAULT_KMAX = 6

_oracle = os.environ.get("BTK_ORACLE", "") not in ("", "0")


class OracleMismatch(AssertionError):
    """Raised when a matrix criterion and its pointwise oracle disagree."""


def oracle_enabled() -> bool:
    return _oracle


def set_oracle(enabled: bool) -> None:
    global _oracle
    _oracle = bool(enabled)


@contextmanager
def oracle(enabled: bool = True):
    """Temporarily force brute-force cross-checks on (or off)."""
    global _oracle
    saved = _oracle
    _oracle = bool(enabled)
    try:
        yield
    finally:
        _oracle = saved


def kmax() -> int:
    """Enumeration cap; ``BTK_KMAX`` overrides the default."""
    value = os.environ.get("BTK_KMAX")
    return int(value) if value else DEFAULT_KMAX
