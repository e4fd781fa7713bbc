"""Generic (s, t, n) local rank modulation.

Cells ``0..n-1`` sit on a cycle. Window ``i`` covers the ``t`` cells starting
at cell ``i*s`` (indices wrap modulo ``n``). A window is read as a
permutation that lists its 1-based positions from the highest charge down,
so ``(1, 2)`` means the first cell of the window is above the second.

Charge configurations are plain tuples of ints. A base-word is a tuple of
window permutations, one per window.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Iterable, Sequence

from lrm.errors import InconsistentOverlap, NotRealizable, TiedWindow

ChargeConfig = tuple[int, ...]
WindowPermutation = tuple[int, ...]
BaseWord = tuple[WindowPermutation, ...]


@dataclass(frozen=True)
class LrmParams:
    """Scheme parameters: window step ``s``, window size ``t``, cell count ``n``."""

    s: int
    t: int
    n: int

    def __post_init__(self):
        if not 1 <= self.s <= self.t <= self.n:
            raise ValueError(f"need 1 <= s <= t <= n, got ({self.s},{self.t},{self.n})")
        if self.n % self.s:
            raise ValueError(f"s={self.s} does not divide n={self.n}")

    @property
    def num_windows(self) -> int:
        return self.n // self.s

    @cached_property
    def windows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple((i * self.s + k) % self.n for k in range(self.t))
            for i in range(self.num_windows)
        )

    def __str__(self):
        return f"({self.s},{self.t},{self.n})"


def window_cells(params: LrmParams, i: int) -> tuple[int, ...]:
    """Cell indices covered by window ``i``, in window order."""
    if not 0 <= i < params.num_windows:
        raise IndexError(f"window index {i} out of range for {params}")
    return params.windows[i]


def comparable_cells(params: LrmParams, j: int) -> frozenset[int]:
    """Every cell that shares at least one window with cell ``j``."""
    if not 0 <= j < params.n:
        raise IndexError(f"cell index {j} out of range for {params}")
    out = set()
    for cells in params.windows:
        if j in cells:
            out.update(cells)
    out.discard(j)
    return frozenset(out)


def check_levels(params: LrmParams, levels: Sequence[int]) -> ChargeConfig:
    levels = tuple(int(x) for x in levels)
    if len(levels) != params.n:
        raise ValueError(f"expected {params.n} levels, got {len(levels)}")
    return levels


def check_base_word(params: LrmParams, word: Sequence[Sequence[int]]) -> BaseWord:
    """Normalize ``word`` to a tuple of tuples and check its shape.

    Overlap consistency is not checked here; see :func:`is_overlap_consistent`.
    """
    word = tuple(tuple(int(p) for p in perm) for perm in word)
    if len(word) != params.num_windows:
        raise ValueError(f"expected {params.num_windows} window symbols, got {len(word)}")
    full = set(range(1, params.t + 1))
    for i, perm in enumerate(word):
        if len(perm) != params.t or set(perm) != full:
            raise ValueError(f"symbol {i} = {perm} is not a permutation of 1..{params.t}")
    return word


def demodulate(params: LrmParams, levels: Sequence[int]) -> BaseWord:
    """Read every window of ``levels`` as a permutation (highest charge first)."""
    levels = check_levels(params, levels)
    out = []
    for i, cells in enumerate(params.windows):
        vals = [levels[c] for c in cells]
        perm = sorted(range(params.t), key=vals.__getitem__, reverse=True)
        for a, b in zip(perm, perm[1:]):
            if vals[a] == vals[b]:
                raise TiedWindow(i, (cells[min(a, b)], cells[max(a, b)]))
        out.append(tuple(p + 1 for p in perm))
    return tuple(out)


def _pair_orders(params: LrmParams, word: BaseWord):
    """Yield ``(lower_cell, higher_cell)`` for every ordered pair a window asserts."""
    for cells, perm in zip(params.windows, word):
        ranked = [cells[p - 1] for p in perm]
        for i, hi in enumerate(ranked):
            for lo in ranked[i + 1:]:
                yield lo, hi


def is_overlap_consistent(params: LrmParams, word: Sequence[Sequence[int]]) -> bool:
    word = check_base_word(params, word)
    seen = set()
    for lo, hi in _pair_orders(params, word):
        if (hi, lo) in seen:
            return False
        seen.add((lo, hi))
    return True


@dataclass(frozen=True)
class ConstraintGraph:
    """Order constraints on cells; an edge ``u -> v`` asserts ``charge(u) < charge(v)``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def predecessors(self) -> dict[int, set[int]]:
        preds: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for u, v in self.edges:
            preds[v].add(u)
        return preds

    def topological_order(self) -> tuple[int, ...]:
        """Cells from lowest to highest; raises ``graphlib.CycleError`` on a cycle."""
        return tuple(graphlib.TopologicalSorter(self.predecessors()).static_order())

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except graphlib.CycleError:
            return False
        return True


def constraint_graph(params: LrmParams, word: Sequence[Sequence[int]]) -> ConstraintGraph:
    """Chain edges ``lower -> higher`` along each window's total order."""
    word = check_base_word(params, word)
    if not is_overlap_consistent(params, word):
        raise InconsistentOverlap(f"windows of {word} disagree on a shared pair of cells")
    edges = set()
    for cells, perm in zip(params.windows, word):
        ranked = [cells[p - 1] for p in perm]
        edges.update(zip(ranked[1:], ranked))
    return ConstraintGraph(params.n, frozenset(edges))


def is_realizable(params: LrmParams, word: Sequence[Sequence[int]]) -> bool:
    try:
        graph = constraint_graph(params, word)
    except InconsistentOverlap:
        return False
    return graph.is_acyclic()


def realize(params: LrmParams, word: Sequence[Sequence[int]]) -> ChargeConfig:
    """Canonical charges for ``word``: each cell's level is the length of the
    longest constraint path ending at it."""
    try:
        graph = constraint_graph(params, word)
        order = graph.topological_order()
    except (InconsistentOverlap, graphlib.CycleError) as exc:
        raise NotRealizable(f"{word} is not realizable under {params}") from exc
    preds = graph.predecessors()
    level = [0] * params.n
    for v in order:
        level[v] = max((level[u] + 1 for u in preds[v]), default=0)
    return tuple(level)


def push_to_top(params: LrmParams, levels: Sequence[int], j: int) -> ChargeConfig:
    """Raise cell ``j`` to one above the highest cell comparable with it.

    Charge is never lowered: a cell already on top keeps its level.
    """
    levels = check_levels(params, levels)
    others = comparable_cells(params, j)
    if not others:
        return levels
    out = list(levels)
    out[j] = max(levels[j], 1 + max(levels[k] for k in others))
    return tuple(out)


def all_base_words(params: LrmParams) -> Iterable[BaseWord]:
    """Every well-formed base-word (realizable or not); exponential, for tests."""
    perms = list(permutations(range(1, params.t + 1)))
    return product(perms, repeat=params.num_windows)
