"""The (1,3,n) scheme: six window symbols, the ternary codec and legal-word counts.

Adjacent windows share two cells, so the parity of a symbol decides which
three symbols may follow it, and a ternary digit picks one of those three:

    current even (0, 2, 4):  digit 0 -> 0, 1 -> 1, 2 -> 3
    current odd  (1, 3, 5):  digit 0 -> 2, 1 -> 4, 2 -> 5

Digit ``i`` of a codeword is the column linking symbol ``i`` to symbol ``i+1``
(cyclically).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial
from typing import Iterable, Sequence

from lrm import core
from lrm.errors import BudgetExceeded, IllegalCodeword, LrmError, SuccessionViolation

BaseWord13 = tuple[int, ...]
TernaryWord = tuple[int, ...]

# symbol -> window positions, highest charge first
SYMBOLS: tuple[core.WindowPermutation, ...] = (
    (1, 2, 3),
    (1, 3, 2),
    (2, 1, 3),
    (3, 1, 2),
    (2, 3, 1),
    (3, 2, 1),
)
SYMBOL_OF = {perm: sym for sym, perm in enumerate(SYMBOLS)}

EVEN = frozenset({0, 2, 4})
ODD = frozenset({1, 3, 5})
# table rows indexed by parity of the current symbol, columns by digit
NEXT = ((0, 1, 3), (2, 4, 5))
FOLLOWS_EVEN = frozenset(NEXT[0])
FOLLOWS_ODD = frozenset(NEXT[1])

DEFAULT_ORDERS_BUDGET = factorial(10)
DEFAULT_SCAN_BUDGET = 3**14


def params_for(n: int) -> core.LrmParams:
    return core.LrmParams(1, 3, n)


def parity(symbol: int) -> int:
    """0 for even symbols, 1 for odd."""
    return symbol & 1


def next_symbol(current_parity: int, digit: int) -> int:
    return NEXT[current_parity][digit]


def to_base_word(symbols: Sequence[int]) -> core.BaseWord:
    return tuple(SYMBOLS[s] for s in symbols)


def from_base_word(base: Sequence[Sequence[int]]) -> BaseWord13:
    return tuple(SYMBOL_OF[tuple(p)] for p in base)


def parse_ternary(text: str) -> TernaryWord:
    if not text or set(text) - {"0", "1", "2"}:
        raise ValueError(f"not a ternary word: {text!r}")
    return tuple(int(ch) for ch in text)


def format_digits(word: Sequence[int]) -> str:
    return "".join(str(d) for d in word)


def follows(a: int, b: int) -> bool:
    return b in NEXT[parity(a)]


def encode(base: Sequence[int]) -> TernaryWord:
    base = tuple(base)
    n = len(base)
    out = []
    for i, a in enumerate(base):
        b = base[(i + 1) % n]
        row = NEXT[parity(a)]
        if b not in row:
            raise SuccessionViolation(f"symbol {b} at {(i + 1) % n} cannot follow {a}")
        out.append(row.index(b))
    return tuple(out)


def decode(code: Sequence[int]) -> BaseWord13:
    """Recover the unique base-word whose encoding is ``code``.

    Decoding starts at the first digit that is not 1: a 0 there forces the
    next symbol to be even, a 2 forces it odd. The result satisfies the
    succession rule but may still be unrealizable; see :func:`is_legal`.
    """
    code = tuple(code)
    n = len(code)
    anchor = next((i for i, d in enumerate(code) if d != 1), None)
    if anchor is None:
        raise IllegalCodeword("all-ones", "the all-ones codeword is not legal")
    rot = code[anchor:] + code[:anchor]
    assumed = 0 if rot[0] == 0 else 1
    alpha = [0] * n
    p = assumed
    for k in range(1, n):
        alpha[(k + 1) % n] = next_symbol(p, rot[k])
        p = parity(alpha[(k + 1) % n])
    alpha[1] = next_symbol(p, rot[0])
    if parity(alpha[1]) != assumed:
        raise IllegalCodeword("parity-mismatch", f"wrap-around symbol {alpha[1]} has the wrong parity")
    # alpha is indexed in the rotated frame
    return tuple(alpha[(i - anchor) % n] for i in range(n))


def is_legal(code: Sequence[int]) -> bool:
    try:
        alpha = decode(code)
    except IllegalCodeword:
        return False
    return core.is_realizable(params_for(len(alpha)), to_base_word(alpha))


@dataclass(frozen=True)
class CountReport:
    n: int
    method: str
    M: int

    @property
    def rate(self) -> Fraction:
        return Fraction(self.M, 3**self.n)

    @property
    def decimal(self) -> str:
        return f"{float(self.rate):.6f}"


def _check_budget(n: int, cost: int, budget: int, what: str) -> None:
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if cost > budget:
        raise BudgetExceeded(f"{what} at n={n} needs {cost} items, budget is {budget}")


def _map(fn, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*jobs)))


def _orders_with_first(n: int, first: int) -> set[BaseWord13]:
    params = params_for(n)
    rest = [v for v in range(n) if v != first]
    seen = set()
    for tail in permutations(rest):
        seen.add(from_base_word(core.demodulate(params, (first,) + tail)))
    return seen


def count_by_orders(n: int, budget: int = DEFAULT_ORDERS_BUDGET, workers: int = 1) -> CountReport:
    """Count distinct base-words over every total order of the ``n`` cells.

    Work is split by the level given to cell 0.
    """
    _check_budget(n, factorial(n), budget, "order enumeration")
    parts = _map(_orders_with_first, [(n, k) for k in range(n)], workers)
    return CountReport(n, "orders", len(set().union(*parts)))


def _scan_prefix(n: int, prefix: tuple[int, ...]) -> int:
    return sum(is_legal(prefix + tail) for tail in product(range(3), repeat=n - len(prefix)))


def count_by_scan(n: int, budget: int = DEFAULT_SCAN_BUDGET, workers: int = 1) -> CountReport:
    """Count legal words among all ``3**n`` ternary words.

    Work is split by the first two digits; totals do not depend on ``workers``.
    """
    _check_budget(n, 3**n, budget, "ternary scan")
    jobs = [(n, prefix) for prefix in product(range(3), repeat=2)]
    return CountReport(n, "scan", sum(_map(_scan_prefix, jobs, workers)))


def rate_table(
    n_min: int,
    n_max: int,
    method: str = "auto",
    workers: int = 1,
    orders_budget: int = DEFAULT_ORDERS_BUDGET,
    scan_budget: int = DEFAULT_SCAN_BUDGET,
) -> list[CountReport]:
    """One :class:`CountReport` per ``n``.

    ``method`` is ``orders``, ``scan``, ``both`` (cross-checked) or ``auto``
    (whichever enumerates fewer items).
    """
    if method not in ("auto", "orders", "scan", "both"):
        raise ValueError(f"unknown method {method!r}")
    rows = []
    for n in range(n_min, n_max + 1):
        chosen = method
        if method == "auto":
            chosen = "orders" if factorial(n) <= 3**n else "scan"
        if chosen == "orders":
            rows.append(count_by_orders(n, orders_budget, workers))
        elif chosen == "scan":
            rows.append(count_by_scan(n, scan_budget, workers))
        else:
            a = count_by_orders(n, orders_budget, workers)
            b = count_by_scan(n, scan_budget, workers)
            if a.M != b.M:
                raise LrmError(f"methods disagree at n={n}: orders={a.M}, scan={b.M}")
            rows.append(CountReport(n, "both", a.M))
    return rows


def all_codewords(n: int) -> Iterable[TernaryWord]:
    return product(range(3), repeat=n)


def successor_base_words(n: int) -> Iterable[BaseWord13]:
    """Every cyclic symbol sequence that obeys the succession rule."""

    def extend(prefix):
        if len(prefix) == n:
            if follows(prefix[-1], prefix[0]):
                yield tuple(prefix)
            return
        for b in NEXT[parity(prefix[-1])]:
            yield from extend(prefix + [b])

    for a in range(6):
        yield from extend([a])
