"""Universal generator for finite operations.

On a k-element carrier every operation ``f: B^s -> B`` is a term built from
meet, join (of the canonical k-chain) and unary maps, and every unary map is
a composition of three generators::

    S1 = delta_k[2, 1, 3, ..., k]        (the transposition (1 2))
    S2 = delta_k[2, 3, ..., k, 1]        (the k-cycle)
    T  = delta_k[1, 1, 2, ..., k-1]      (rank k-1)

A word ``[g1, g2, ..., gn]`` denotes the matrix product ``g1 g2 ... gn``, so the
last letter acts first.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Sequence, Union

from .stp import LogicalMatrix, identity, parse_delta, stp

__all__ = [
    "GENERATOR_IDS",
    "GeneratorSet",
    "generator_set",
    "word_matrix",
    "unary_closure",
    "unary_word",
    "indicator",
    "Var",
    "Const",
    "Unary",
    "Meet",
    "Join",
    "Word",
    "synthesize",
    "eval_expr",
    "expand_words",
    "to_sexpr",
    "parse_sexpr",
    "SynthesisError",
]

GENERATOR_IDS = ("S1", "S2", "T")
EXHAUSTIVE_K = 4


class SynthesisError(AssertionError):
    """A synthesized term failed to reproduce its source table."""


class GeneratorSet(NamedTuple):
    sigma1: LogicalMatrix
    sigma2: LogicalMatrix
    theta: LogicalMatrix
    meet: LogicalMatrix
    join: LogicalMatrix


@lru_cache(maxsize=None)
def generator_set(k: int) -> GeneratorSet:
    """The three unary generators plus the k-chain (meet = larger index, join = smaller)."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    sigma1 = LogicalMatrix(k, (2, 1) + tuple(range(3, k + 1)))
    sigma2 = LogicalMatrix(k, tuple(range(2, k + 1)) + (1,))
    theta = LogicalMatrix(k, (1,) + tuple(range(1, k)))
    els = range(1, k + 1)
    meet = LogicalMatrix(k, tuple(max(x, y) for x in els for y in els))
    join = LogicalMatrix(k, tuple(min(x, y) for x in els for y in els))
    return GeneratorSet(sigma1, sigma2, theta, meet, join)


def _generators(k: int) -> dict[str, LogicalMatrix]:
    g = generator_set(k)
    return {"S1": g.sigma1, "S2": g.sigma2, "T": g.theta}


def word_matrix(word: Sequence[str], k: int) -> LogicalMatrix:
    """Product of the generator matrices named by ``word`` (identity when empty)."""
    gens = _generators(k)
    out = identity(k)
    for letter in word:
        out = stp(out, gens[letter])
    return out


@lru_cache(maxsize=None)
def _closure(k: int) -> dict[LogicalMatrix, tuple[str, ...]]:
    gens = _generators(k)
    words: dict[LogicalMatrix, tuple[str, ...]] = {}
    queue: deque = deque()
    for name in GENERATOR_IDS:
        m = gens[name]
        if m not in words:
            words[m] = (name,)
            queue.append(m)
    while queue:
        m = queue.popleft()
        w = words[m]
        for name in GENERATOR_IDS:
            nxt = stp(m, gens[name])
            if nxt not in words:
                words[nxt] = w + (name,)
                queue.append(nxt)
    return words


def unary_closure(k: int, limit: int = EXHAUSTIVE_K) -> dict[LogicalMatrix, tuple[str, ...]]:
    """Every map reachable from the generators, with a shortest word for each.

    Breadth-first, so each recorded word is of minimal length; ties go to the
    word found first with letters ordered S1, S2, T.
    """
    if k > limit:
        raise ValueError(f"exhaustive closure is limited to k <= {limit}, got {k}")
    return dict(_closure(k))


# ------------------------------------------------------ constructive words


def _permutation_word(perm: Sequence[int], k: int) -> list[str]:
    """Word for the permutation ``x -> perm[x-1]`` built from adjacent transpositions.

    ``(i, i+1) = S2^(i-1) S1 S2^(-(i-1))`` and ``S2^(-1) = S2^(k-1)``.
    """
    # bubble sort perm into the identity; record the swaps
    arr = list(perm)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps.append(i + 1)
                changed = True
    # arr = perm ∘ s_1 ∘ ... ∘ s_m = id, so perm = s_m ∘ ... ∘ s_1
    word: list[str] = []
    for i in reversed(swaps):
        word += ["S2"] * (i - 1) + ["S1"] + ["S2"] * ((k - (i - 1)) % k)
    return word


def _collapse_word(src: int, dst: int, k: int) -> list[str]:
    """Word for the map sending ``src`` to ``dst`` and fixing everything else."""
    # T = R ∘ c where c sends 2 -> 1 and R = delta_k[1, k, 2, 3, ..., k-1]
    r_inv = [1] + list(range(3, k + 1)) + [2]
    # conjugate by a permutation P with P(1) = dst, P(2) = src
    rest = [x for x in range(1, k + 1) if x not in (src, dst)]
    p = [dst, src] + rest
    p_inv = [0] * k
    for i, v in enumerate(p, start=1):
        p_inv[v - 1] = i
    return _permutation_word(p, k) + _permutation_word(r_inv, k) + ["T"] + _permutation_word(p_inv, k)


def _constructive_word(target: LogicalMatrix) -> list[str]:
    """Factor ``target`` as a permutation after a run of single-point collapses."""
    k, f = target.rows, target.cols
    reps: dict[int, int] = {}
    for x in range(1, k + 1):
        reps.setdefault(f[x - 1], x)
    # e sends x to the smallest element with the same image
    collapses = [(x, reps[f[x - 1]]) for x in range(1, k + 1) if reps[f[x - 1]] != x]
    # a bijection that agrees with f on representatives
    perm = [0] * k
    used = set()
    for img, rep in reps.items():
        perm[rep - 1] = img
        used.add(img)
    free_imgs = iter(sorted(set(range(1, k + 1)) - used))
    for x in range(1, k + 1):
        if not perm[x - 1]:
            perm[x - 1] = next(free_imgs)
    word = _permutation_word(perm, k)
    for src, dst in collapses:
        word += _collapse_word(src, dst, k)
    if not word:
        word = ["S1", "S1"]
    return word


def unary_word(target: LogicalMatrix) -> list[str]:
    """A word over S1, S2, T evaluating to ``target``.

    Shortest words for k <= 4; a constructive (longer) factorization above.
    """
    k = target.rows
    if target.ncols != k:
        raise ValueError("target must be square")
    if k == 1:
        raise ValueError("the generators need k >= 2")
    if k <= EXHAUSTIVE_K:
        word = list(_closure(k)[target])
    else:
        word = _constructive_word(target)
    if word_matrix(word, k) != target:
        raise SynthesisError(f"word {word} does not evaluate to {target}")
    return word


# ------------------------------------------------------------ expressions


@dataclass(frozen=True)
class Word:
    k: int
    letters: tuple[str, ...]

    @property
    def matrix(self) -> LogicalMatrix:
        return word_matrix(self.letters, self.k)

    def __str__(self) -> str:
        return ".".join(self.letters)


@dataclass(frozen=True)
class Var:
    pos: int


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Unary:
    fn: Union[LogicalMatrix, Word]
    child: "Expr"


@dataclass(frozen=True)
class Meet:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Join:
    left: "Expr"
    right: "Expr"


Expr = Union[Var, Const, Unary, Meet, Join]


def indicator(i: int, k: int) -> LogicalMatrix:
    """Map sending i to the top and every other element to the bottom."""
    return LogicalMatrix(k, tuple(1 if j == i else k for j in range(1, k + 1)))


def eval_expr(e: Expr, inputs: Sequence[int]) -> int:
    """Evaluate over the canonical chain: meet is max of indices, join is min."""
    if isinstance(e, Var):
        if not 1 <= e.pos <= len(inputs):
            raise ValueError(f"unbound variable x{e.pos}")
        return inputs[e.pos - 1]
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Unary):
        m = e.fn.matrix if isinstance(e.fn, Word) else e.fn
        return m.cols[eval_expr(e.child, inputs) - 1]
    if isinstance(e, Meet):
        return max(eval_expr(e.left, inputs), eval_expr(e.right, inputs))
    if isinstance(e, Join):
        return min(eval_expr(e.left, inputs), eval_expr(e.right, inputs))
    raise TypeError(f"not an expression node: {e!r}")


def _fold(cls, items: list):
    out = items[0]
    for item in items[1:]:
        out = cls(out, item)
    return out


def synthesize(f: LogicalMatrix, s: int) -> Expr:
    """Term over meet, join and unary maps that computes ``f: B^s -> B``.

    The table is cut into k^(s-1) blocks of k columns; block ``mu`` is the unary
    map applied to ``x_s`` when ``(x_1, ..., x_{s-1})`` has mixed-radix index
    ``mu``. Indicator maps select that block, and the join over all prefixes
    recovers ``f``. The result is checked on every input tuple.
    """
    k = f.rows
    if s < 1 or f.ncols != k ** s:
        raise ValueError(f"table must have k^s = {k ** s} columns, got {f.ncols}")
    if s == 1:
        expr: Expr = Unary(f, Var(1))
    else:
        terms = []
        for prefix in product(range(1, k + 1), repeat=s - 1):
            mu = 0
            for i in prefix:
                mu = mu * k + (i - 1)
            block = LogicalMatrix(k, f.cols[mu * k:(mu + 1) * k])
            factors = [Unary(indicator(i, k), Var(t)) for t, i in enumerate(prefix, start=1)]
            factors.append(Unary(block, Var(s)))
            terms.append(_fold(Meet, factors))
        expr = _fold(Join, terms)
    _verify(expr, f, s)
    return expr


def _verify(expr: Expr, f: LogicalMatrix, s: int) -> None:
    k = f.rows
    for j, xs in enumerate(product(range(1, k + 1), repeat=s)):
        if eval_expr(expr, xs) != f.cols[j]:
            raise SynthesisError(f"term disagrees with the table at {xs}")


def expand_words(e: Expr) -> Expr:
    """Replace every explicit unary matrix by its generator word."""
    if isinstance(e, Unary):
        fn = e.fn if isinstance(e.fn, Word) else Word(e.fn.rows, tuple(unary_word(e.fn)))
        return Unary(fn, expand_words(e.child))
    if isinstance(e, (Meet, Join)):
        return type(e)(expand_words(e.left), expand_words(e.right))
    return e


def iter_nodes(e: Expr) -> Iterator[Expr]:
    yield e
    if isinstance(e, Unary):
        yield from iter_nodes(e.child)
    elif isinstance(e, (Meet, Join)):
        yield from iter_nodes(e.left)
        yield from iter_nodes(e.right)


# ------------------------------------------------------------ S-expressions


def to_sexpr(e: Expr) -> str:
    """``(MEET a b)``, ``(JOIN a b)``, ``(U:<map> a)``, ``VAR:n``, ``CONST:i``.

    ``<map>`` is delta notation (``d3[1,3,3]``) or a dotted word (``S1.S2.T``).
    """
    if isinstance(e, Var):
        return f"VAR:{e.pos}"
    if isinstance(e, Const):
        return f"CONST:{e.value}"
    if isinstance(e, Unary):
        if isinstance(e.fn, Word):
            tag = str(e.fn) or "I"
        else:
            tag = f"d{e.fn.rows}[{','.join(map(str, e.fn.cols))}]"
        return f"(U:{tag} {to_sexpr(e.child)})"
    name = "MEET" if isinstance(e, Meet) else "JOIN"
    return f"({name} {to_sexpr(e.left)} {to_sexpr(e.right)})"


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_sexpr(text: str, k: int | None = None) -> Expr:
    """Inverse of :func:`to_sexpr`; ``k`` is needed only for word-form maps."""
    tokens = _TOKEN.findall(text)
    pos = 0

    def take() -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of expression")
        tok = tokens[pos]
        pos += 1
        return tok

    def node() -> Expr:
        tok = take()
        if tok.startswith("VAR:"):
            return Var(int(tok[4:]))
        if tok.startswith("CONST:"):
            return Const(int(tok[6:]))
        if tok != "(":
            raise ValueError(f"unexpected token {tok!r}")
        head = take()
        if head in ("MEET", "JOIN"):
            left, right = node(), node()
            out: Expr = Meet(left, right) if head == "MEET" else Join(left, right)
        elif head.startswith("U:"):
            tag = head[2:]
            if "[" in tag:
                fn: Union[LogicalMatrix, Word] = parse_delta(tag)
            else:
                if k is None:
                    raise ValueError("word-form maps need k")
                letters = () if tag == "I" else tuple(tag.split("."))
                bad = [x for x in letters if x not in GENERATOR_IDS]
                if bad:
                    raise ValueError(f"unknown generators {bad}")
                fn = Word(k, letters)
            out = Unary(fn, node())
        else:
            raise ValueError(f"unknown node tag {head!r}")
        if take() != ")":
            raise ValueError("expected ')'")
        return out

    expr = node()
    if pos != len(tokens):
        raise ValueError("trailing tokens after expression")
    return expr
