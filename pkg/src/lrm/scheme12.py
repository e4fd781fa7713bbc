"""The (1,2,n) binary scheme and its constant-weight Gray codes.

Bit ``i`` of a word reads window ``(i, i+1)``: 1 when cell ``i`` is above
cell ``i+1`` (permutation ``(1, 2)``), 0 otherwise. Pushing cell ``j`` to
the top therefore writes ``01`` onto positions ``(j-1, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Sequence

from lrm import core
from lrm.errors import BudgetExceeded, UnsupportedN

BinaryWord = tuple[int, ...]

DEFAULT_SEARCH_BUDGET = 50_000_000

_BIT_TO_PERM = {1: (1, 2), 0: (2, 1)}
_PERM_TO_BIT = {v: k for k, v in _BIT_TO_PERM.items()}


def parse_bits(text: str) -> BinaryWord:
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"not a binary word: {text!r}")
    return tuple(int(ch) for ch in text)


def format_bits(word: Sequence[int]) -> str:
    return "".join(str(b) for b in word)


def to_base_word(word: Sequence[int]) -> core.BaseWord:
    return tuple(_BIT_TO_PERM[b] for b in word)


def from_base_word(base: Sequence[Sequence[int]]) -> BinaryWord:
    return tuple(_PERM_TO_BIT[tuple(p)] for p in base)


def params_for(n: int) -> core.LrmParams:
    return core.LrmParams(1, 2, n)


def is_realizable_12(word: Sequence[int]) -> bool:
    """Membership in S(n): every word except all-zeros and all-ones."""
    return 0 < sum(word) < len(word)


def weight(word: Sequence[int]) -> int:
    return sum(word)


def push_overwrite(word: Sequence[int], j: int) -> BinaryWord:
    """Effect of push-to-the-top on cell ``j``: positions ``(j-1, j)`` become ``01``."""
    n = len(word)
    if not 0 <= j < n:
        raise IndexError(f"position {j} out of range for length {n}")
    out = list(word)
    out[(j - 1) % n] = 0
    out[j] = 1
    return tuple(out)


def is_gray_step(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise ValueError("words have different lengths")
    a, b = tuple(a), tuple(b)
    return a != b and any(push_overwrite(a, j) == b for j in range(len(a)))


@dataclass(frozen=True)
class GrayCode:
    words: tuple[BinaryWord, ...]
    cyclic: bool = False

    def __len__(self):
        return len(self.words)


@dataclass(frozen=True)
class GrayReport:
    """Outcome of :func:`validate_gray`.

    Each failure is ``(index, reason)``; ``index`` is the offending word or,
    for a step, the index of the step's source word.
    """

    size: int
    n: int | None
    cyclic: bool
    weight: int | None
    failures: tuple[tuple[int, str], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures


def validate_gray(code: GrayCode, constant_weight: int | None = None) -> GrayReport:
    words = [tuple(w) for w in code.words]
    failures: list[tuple[int, str]] = []
    lengths = {len(w) for w in words}
    if len(lengths) > 1:
        return GrayReport(len(words), None, code.cyclic, constant_weight,
                          ((0, f"mixed word lengths {sorted(lengths)}"),))
    n = lengths.pop() if lengths else None

    first_seen: dict[BinaryWord, int] = {}
    for i, w in enumerate(words):
        if w in first_seen:
            failures.append((i, f"duplicate of word {first_seen[w]}"))
        else:
            first_seen[w] = i
        if not is_realizable_12(w):
            failures.append((i, "non-realizable word"))
        if constant_weight is not None and weight(w) != constant_weight:
            failures.append((i, f"weight {weight(w)} != {constant_weight}"))

    for i in range(len(words) - 1):
        if not is_gray_step(words[i], words[i + 1]):
            failures.append((i, f"invalid step {i} -> {i + 1}"))
    if code.cyclic and len(words) > 1 and not is_gray_step(words[-1], words[0]):
        failures.append((len(words) - 1, "invalid cyclic closure"))

    failures.sort(key=lambda f: f[0])
    return GrayReport(len(words), n, code.cyclic, constant_weight, tuple(failures))


@dataclass(frozen=True)
class TransitionGraph:
    """Constant-weight Gray steps between all weight-``w`` words of length ``n``."""

    n: int
    w: int
    vertices: tuple[BinaryWord, ...]
    successors: dict[BinaryWord, tuple[BinaryWord, ...]] = field(compare=False)

    @property
    def edges(self) -> list[tuple[BinaryWord, BinaryWord]]:
        return [(v, u) for v in self.vertices for u in self.successors[v]]


def build_graph(n: int, w: int = 2) -> TransitionGraph:
    if n < 4 or not 1 <= w < n:
        raise ValueError(f"need n >= 4 and 1 <= w < n, got n={n}, w={w}")
    vertices = []
    for support in combinations(range(n), w):
        word = [0] * n
        for i in support:
            word[i] = 1
        vertices.append(tuple(word))
    successors = {}
    for v in vertices:
        nxt = {push_overwrite(v, j) for j in range(n)}
        successors[v] = tuple(sorted((u for u in nxt if u != v and weight(u) == w), reverse=True))
    return TransitionGraph(n, w, tuple(vertices), successors)


@dataclass(frozen=True)
class CycleResult:
    length: int
    witness: tuple[BinaryWord, ...]
    nodes: int


def _rotations(word: BinaryWord) -> set[BinaryWord]:
    return {word[k:] + word[:k] for k in range(len(word))}


def longest_cycle(graph: TransitionGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> CycleResult:
    """Exact longest simple directed cycle in ``graph``.

    Edges commute with cyclic rotation, so every cycle is a rotation of one
    through an orbit representative. Representatives are processed in vertex
    order and each finished orbit is deleted from later searches. Branches
    that could not beat the incumbent even by visiting every remaining
    vertex are cut. Raises :class:`BudgetExceeded` after ``budget`` DFS
    expansions instead of returning a partial answer.
    """
    index = {v: i for i, v in enumerate(graph.vertices)}
    adj = [[index[u] for u in graph.successors[v]] for v in graph.vertices]
    alive = [True] * len(adj)
    n_alive = len(adj)
    best: list[int] = []
    nodes = 0

    for start_word in graph.vertices:
        start = index[start_word]
        if not alive[start]:
            continue
        if n_alive <= len(best):
            break
        on_path = [False] * len(adj)
        on_path[start] = True
        path = [start]

        def dfs(u: int, free: int) -> None:
            nonlocal best, nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"longest-cycle search exceeded {budget} nodes")
            for v in adj[u]:
                if v == start:
                    if len(path) > len(best):
                        best = list(path)
                elif alive[v] and not on_path[v] and len(path) + free > len(best):
                    on_path[v] = True
                    path.append(v)
                    dfs(v, free - 1)
                    path.pop()
                    on_path[v] = False

        dfs(start, n_alive - 1)
        for r in _rotations(start_word):
            if alive[index[r]]:
                alive[index[r]] = False
                n_alive -= 1

    return CycleResult(len(best), tuple(graph.vertices[i] for i in best), nodes)


def construct_2n_code(n: int) -> GrayCode:
    """Cyclic weight-2 code of size ``2n``: {i,i+1} -> {i,i+2} -> {i+1,i+2} -> ..."""
    if n < 5:
        raise UnsupportedN(f"the 2n construction needs n >= 5, got {n}")
    words = []
    for i in range(n):
        for gap in (1, 2):
            word = [0] * n
            word[i] = word[(i + gap) % n] = 1
            words.append(tuple(word))
    return GrayCode(tuple(words), cyclic=True)


def upper_bounds(n: int) -> tuple[Fraction, int]:
    """(earlier bound C(n,2) - (n-3)(n-5)/8, the 2n bound) on cyclic weight-2 codes."""
    if n < 4:
        raise ValueError(f"bounds are stated for n >= 4, got {n}")
    return Fraction(comb(n, 2)) - Fraction((n - 3) * (n - 5), 8), 2 * n


def all_words(n: int):
    return product((0, 1), repeat=n)
