"""
Bounded low-weight codeword counting with information sets.

Each information set I_i gives a systematic generator, so a codeword is
reached from I_i with message weight wt(c restricted to I_i). After all
messages of weight <= w have been tried on every set, any codeword not yet
seen has weight at least

    L(w) = sum_i max(0, w + 1 - (k - r_i))

where r_i counts the columns of I_i not covered by the earlier sets. Counts
below L(w) are therefore exact; counts in [L(w), w_max] are lower bounds.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from codes.linear_code import LinearCode
from codes.weight_enumerator import WeightEnumerator
from fields import bitplanes
from fields.galois_fields import FieldTag, nonzero_elements, scale_array, to_int_array


@dataclass
class InformationSet:
    columns: Tuple[int, ...]
    generator: np.ndarray
    new_columns: int


@dataclass
class LowWeightResult:
    """Partial enumerator plus the certificate that bounds it."""

    tag: FieldTag
    n: int
    w_max: int
    counts: Dict[int, int]
    exact_below: int
    message_weight: int
    information_sets: int
    min_weight: Optional[int] = None
    min_weight_certified: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        """True when every count up to w_max is exact."""
        return self.exact_below > self.w_max

    @property
    def lower_bound_only(self) -> List[int]:
        return list(range(self.exact_below, self.w_max + 1))

    @property
    def min_weight_lower_bound(self) -> int:
        if self.min_weight_certified:
            return self.min_weight
        found = self.min_weight if self.min_weight is not None else self.w_max + 1
        return min(self.exact_below, found)

    def count(self, weight: int) -> int:
        return self.counts.get(weight, 0)

    def enumerator(self) -> WeightEnumerator:
        return WeightEnumerator(self.tag, self.n, self.counts)

    def to_json(self) -> Dict[str, Any]:
        return {
            "field": self.tag.value,
            "n": self.n,
            "w_max": self.w_max,
            "counts": [[w, str(c)] for w, c in sorted(self.counts.items()) if c],
            "exact_below": self.exact_below,
            "lower_bound_only": self.lower_bound_only,
            "min_weight": self.min_weight,
            "min_weight_certified": self.min_weight_certified,
            "message_weight": self.message_weight,
            "information_sets": self.information_sets,
        }


class LowWeightCounter:
    """Counts codewords of weight <= w_max without enumerating the whole code."""

    def __init__(self, code: LinearCode, config: Optional[Dict[str, Any]] = None):
        config = config or {}
        self.code = code
        self.tag = code.tag
        self.max_message_weight = int(config.get("max_message_weight", 6))
        self.max_info_sets = int(config.get("max_info_sets", 8))
        self.chunk_words = int(config.get("chunk_words", 2 ** 20))
        self.logger = logging.getLogger("codes.low_weight")

    def information_sets(self) -> List[InformationSet]:
        """Greedy information sets, each preferring columns no earlier set used."""
        code = self.code
        G = code.generator_ints
        used = set()
        sets: List[InformationSet] = []
        for _ in range(self.max_info_sets):
            order = [c for c in range(code.n) if c not in used] + [c for c in range(code.n) if c in used]
            reduced = to_int_array(code.field(G[:, order]).row_reduce())
            columns = tuple(order[int(np.flatnonzero(row)[0])] for row in reduced)
            new = sum(1 for c in columns if c not in used)
            if new == 0:
                break
            systematic = np.empty_like(reduced)
            systematic[:, order] = reduced
            sets.append(InformationSet(columns, systematic, new))
            used.update(columns)
        return sets

    def bound(self, sets: List[InformationSet], w: int) -> int:
        k = self.code.k
        return sum(max(0, w + 1 - (k - s.new_columns)) for s in sets)

    def cost(self, w_max: int) -> Tuple[int, bool]:
        """
        Codewords that count(w_max) would generate, and whether it would certify them.
        """
        code = self.code
        sets = self.information_sets()
        if not sets:
            return 1, True
        total = 0
        for w in range(0, min(code.k, self.max_message_weight) + 1):
            total += len(sets) * math.comb(code.k, w) * (self.tag.order - 1) ** w
            exact_below = code.n + 1 if w == code.k else self.bound(sets, w)
            if exact_below > w_max:
                return total, True
        return total, False

    def _words(self, info: InformationSet, w: int, w_max: int) -> List[np.ndarray]:
        q = self.tag.order
        multiples = np.stack(
            [bitplanes.pack(self.tag, scale_array(self.tag, c, info.generator)) for c in range(q)], axis=1
        )
        # w == 0 gives one empty support and one empty pattern: the zero word
        combs = list(itertools.combinations(range(self.code.k), w))
        supports = np.array(combs, dtype=np.int64).reshape(len(combs), w)
        scalars = list(itertools.product(nonzero_elements(self.tag), repeat=w))
        patterns = np.array(scalars, dtype=np.int64).reshape(len(scalars), w)
        plane_shape = multiples.shape[2:]
        per_chunk = max(1, self.chunk_words // len(patterns))

        kept = []
        for start in range(0, len(supports), per_chunk):
            block = supports[start : start + per_chunk]
            words = np.zeros((len(block), len(patterns)) + plane_shape, dtype=np.uint64)
            for j in range(w):
                words = bitplanes.add(self.tag, words, multiples[block[:, j][:, None], patterns[None, :, j]])
            words = words.reshape((-1,) + plane_shape)
            keep = bitplanes.weights(words) <= w_max
            if keep.any():
                kept.append(words[keep].reshape(int(keep.sum()), -1))
        return kept

    def count(self, w_max: int) -> LowWeightResult:
        code = self.code
        w_max = max(0, min(int(w_max), code.n))
        sets = self.information_sets()
        self.logger.info(f"Counting weights <= {w_max} of {code.describe()} with {len(sets)} information sets")

        found: List[np.ndarray] = []
        exact_below = 0
        message_weight = 0
        top = min(code.k, self.max_message_weight)
        for w in range(0, top + 1):
            for info in sets:
                found.extend(self._words(info, w, w_max))
            message_weight = w
            exact_below = code.n + 1 if w == code.k else self.bound(sets, w)
            self.logger.debug(f"Message weight {w}: counts exact below weight {exact_below}")
            if exact_below > w_max:
                break
        if not sets:
            exact_below = code.n + 1
            found.append(np.zeros((1, 2 * bitplanes.word_count(code.n)), dtype=np.uint64))

        unique = np.unique(np.concatenate(found), axis=0)
        planes = unique.reshape(len(unique), 2, -1)
        hist = np.bincount(bitplanes.weights(planes), minlength=w_max + 1)
        counts = {w: int(hist[w]) for w in range(w_max + 1)}

        result = LowWeightResult(
            tag=self.tag,
            n=code.n,
            w_max=w_max,
            counts=counts,
            exact_below=exact_below,
            message_weight=message_weight,
            information_sets=len(sets),
        )
        positive = [w for w in range(1, w_max + 1) if counts[w]]
        if positive:
            result.min_weight = positive[0]
            result.min_weight_certified = positive[0] <= exact_below
        if not result.certified:
            result.notes.append(f"weights {exact_below}..{w_max} are lower bounds only")
            self.logger.warning(
                f"{code.describe()}: stopped at message weight {message_weight}, counts exact only below {exact_below}"
            )
        return result


def count_low_weight(code: LinearCode, w_max: int, config: Optional[Dict[str, Any]] = None) -> LowWeightResult:
    return LowWeightCounter(code, config).count(w_max)
