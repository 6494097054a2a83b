"""
Exhaustive codeword enumeration.

The message space is split as (table symbols | walk symbols | partition
symbols). All combinations of the first rows are materialised once as a
packed table; a modular q-ary Gray walk over the walk symbols then moves an
offset codeword by one scalar multiple of one generator row per step, and
every step scores the whole table against the offset with bitplane
popcounts. Each value of the partition symbols is an independent job, so
jobs run on a thread pool and merge by exact addition.
"""

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from codes.linear_code import LinearCode
from codes.weight_enumerator import WeightEnumerator
from fields import bitplanes
from fields.galois_fields import add_table, neg_table

DEFAULT_BUDGET = 2 ** 31
TABLE_ROWS_LOG2 = 16


class BudgetExceededError(RuntimeError):
    """Raised when q^k codewords exceed the configured enumeration budget."""

    def __init__(self, size: int, budget: int, label: str = "code"):
        super().__init__(f"Enumerating {label} needs {size} codewords, budget is {budget}")
        self.size = size
        self.budget = budget


@dataclass
class GrayStep:
    """One move of the modular Gray walk: digit ``position`` goes from ``old`` to ``new``."""

    position: int
    old: int
    new: int


def gray_walk(length: int, q: int) -> Iterator[GrayStep]:
    """
    Modular q-ary Gray walk over all q^length digit tuples, starting at zero.

    Step s changes the digit j given by the largest power q^j dividing s, and
    that digit advances by one modulo q. Yields q^length - 1 steps.
    """
    digits = [0] * length
    for s in range(1, q ** length):
        position = 0
        while s % q == 0:
            s //= q
            position += 1
        old = digits[position]
        new = (old + 1) % q
        digits[position] = new
        yield GrayStep(position, old, new)


@dataclass
class EnumerationPlan:
    table: np.ndarray
    walk_multiples: np.ndarray
    fixed_multiples: np.ndarray
    prefixes: List[Tuple[int, ...]]


@dataclass
class ScanResult:
    enumerator: WeightEnumerator
    words: Dict[int, np.ndarray]
    overflow: List[int]


class CodewordEnumerator:
    """Visits every codeword of a code exactly once, in parallel jobs."""

    def __init__(self, code: LinearCode, config: Optional[Dict[str, Any]] = None):
        """
        Args:
            code: Code to enumerate
            config: ``budget``, ``threads``, ``table_symbols``,
                ``partition_symbols`` and ``show_progress``
        """
        config = config or {}
        self.code = code
        self.tag = code.tag
        self.q = code.tag.order
        self.budget = int(config.get("budget") if config.get("budget") is not None else DEFAULT_BUDGET)
        self.threads = max(1, int(config.get("threads") or 1))
        self.table_symbols = config.get("table_symbols")
        self.partition_symbols = config.get("partition_symbols")
        self.show_progress = config.get("show_progress", False)
        self.logger = logging.getLogger("codes.enumeration")

        self._rows = bitplanes.pack(self.tag, code.generator_ints.reshape(code.k, code.n))
        self._sub = add_table(self.tag)[:, neg_table(self.tag)]

    @property
    def size(self) -> int:
        return self.q ** self.code.k

    def fits_budget(self) -> bool:
        return self.size <= self.budget

    def check_budget(self) -> None:
        if not self.fits_budget():
            raise BudgetExceededError(self.size, self.budget, self.code.describe())

    def _multiples(self, rows: np.ndarray) -> np.ndarray:
        return np.stack([bitplanes.scale(self.tag, c, rows) for c in range(self.q)], axis=1)

    def _plan(self) -> EnumerationPlan:
        k = self.code.k
        if self.table_symbols is not None:
            k1 = min(k, int(self.table_symbols))
        else:
            k1 = min(k, int(TABLE_ROWS_LOG2 // math.log2(self.q)))
        k2 = k - k1

        if self.partition_symbols is not None:
            t = int(self.partition_symbols)
        elif self.threads == 1:
            t = 0
        else:
            t = 0
            while self.q ** t < 4 * self.threads:
                t += 1
        t = max(0, min(t, k2))

        table = np.zeros((1,) + self._rows.shape[1:], dtype=np.uint64)
        for row in self._rows[:k1]:
            table = np.concatenate([bitplanes.add(self.tag, table, bitplanes.scale(self.tag, c, row)) for c in range(self.q)])

        outer = self._rows[k1:]
        return EnumerationPlan(
            table=table,
            walk_multiples=self._multiples(outer[: k2 - t]),
            fixed_multiples=self._multiples(outer[k2 - t :]),
            prefixes=list(itertools.product(range(self.q), repeat=t)),
        )

    def _walk(self, plan: EnumerationPlan, prefix: Tuple[int, ...], consume: Callable[[np.ndarray], None]) -> None:
        offset = np.zeros(plan.table.shape[1:], dtype=np.uint64)
        for i, c in enumerate(prefix):
            offset = bitplanes.add(self.tag, offset, plan.fixed_multiples[i, c])
        consume(bitplanes.add(self.tag, plan.table, offset))
        for step in gray_walk(plan.walk_multiples.shape[0], self.q):
            delta = self._sub[step.new, step.old]
            offset = bitplanes.add(self.tag, offset, plan.walk_multiples[step.position, delta])
            consume(bitplanes.add(self.tag, plan.table, offset))

    def _execute(self, job: Callable[[Tuple[int, ...]], Any], prefixes: List[Tuple[int, ...]], desc: str) -> List[Any]:
        disable = not self.show_progress
        if self.threads == 1 or len(prefixes) == 1:
            return [job(prefix) for prefix in tqdm(prefixes, desc=desc, disable=disable)]

        results = []
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            futures = {executor.submit(job, prefix): prefix for prefix in prefixes}
            for future in tqdm(as_completed(futures), total=len(futures), desc=desc, disable=disable):
                results.append(future.result())
        return results

    def scan(self, targets: Iterable[int] = (), limit: Optional[int] = None) -> "ScanResult":
        """
        One pass over all q^k codewords.

        Args:
            targets: Weights whose codewords should be kept
            limit: Stop keeping a weight once more than this many words have it

        Returns:
            ScanResult with the exact enumerator and the kept words
        """
        self.check_budget()
        n = self.code.n
        plan = self._plan()
        wanted = np.array(sorted(set(int(w) for w in targets if 0 <= int(w) <= n)), dtype=np.int64)
        self.logger.info(f"Enumerating {self.size} codewords of {self.code.describe()} in {len(plan.prefixes)} jobs")

        def job(prefix):
            hist = np.zeros(n + 1, dtype=np.int64)
            kept = np.zeros(n + 1, dtype=np.int64)
            found: List[np.ndarray] = []
            state = {"open": wanted}

            def consume(words):
                word_weights = bitplanes.weights(words)
                np.add(hist, np.bincount(word_weights, minlength=n + 1), out=hist)
                if not state["open"].size:
                    return
                mask = np.isin(word_weights, state["open"])
                if mask.any():
                    found.append(words[mask])
                    if limit is not None:
                        np.add(kept, np.bincount(word_weights[mask], minlength=n + 1), out=kept)
                        # a weight over the limit here is over it globally too
                        state["open"] = state["open"][kept[state["open"]] <= limit]

            self._walk(plan, prefix, consume)
            return hist, found

        totals = [0] * (n + 1)
        chunks: List[np.ndarray] = []
        for hist, found in self._execute(job, plan.prefixes, "enumerate"):
            for weight, count in enumerate(hist.tolist()):
                totals[weight] += count
            chunks.extend(found)
        enumerator = WeightEnumerator(self.tag, n, totals)

        words: Dict[int, np.ndarray] = {}
        overflow = [int(w) for w in wanted if limit is not None and totals[w] > limit]
        if wanted.size:
            planes = np.concatenate(chunks) if chunks else np.zeros((0, 2, bitplanes.word_count(n)), dtype=np.uint64)
            row_weights = bitplanes.weights(planes)
            for weight in wanted.tolist():
                if weight in overflow:
                    continue
                rows = bitplanes.unpack(self.tag, planes[row_weights == weight], n)
                if rows.shape[0]:
                    rows = rows[np.lexsort(rows.T[::-1])]
                words[weight] = rows
        if overflow:
            self.logger.warning(f"{self.code.describe()}: too many words to keep at weights {overflow}")
        return ScanResult(enumerator, words, overflow)

    def weight_enumerator(self) -> WeightEnumerator:
        """Exact counts over all q^k codewords."""
        return self.scan().enumerator

    def words_of_weights(self, targets: Iterable[int]) -> Dict[int, np.ndarray]:
        """All codewords whose weight is in ``targets``, as sorted int matrices."""
        return self.scan(targets).words

    def words_of_weight(self, weight: int) -> np.ndarray:
        return self.words_of_weights([weight]).get(weight, np.zeros((0, self.code.n), dtype=np.int64))


def weight_enumerator_full(code: LinearCode, config: Optional[Dict[str, Any]] = None) -> WeightEnumerator:
    """Exact weight enumerator by full enumeration; raises BudgetExceededError past the budget."""
    return CodewordEnumerator(code, config).weight_enumerator()


def words_of_weight(code: LinearCode, weight: int, config: Optional[Dict[str, Any]] = None) -> np.ndarray:
    return CodewordEnumerator(code, config).words_of_weight(weight)
