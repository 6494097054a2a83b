"""
Exact weight enumerators.
"""

from typing import Any, Dict, Iterable, List, Mapping, Optional, Union

from fields.galois_fields import FieldTag


class WeightEnumerator:
    """Map weight -> exact codeword count for a code of length n."""

    def __init__(self, tag: Union[str, FieldTag], n: int, counts: Union[Mapping[int, int], Iterable[int], None] = None):
        self.tag = FieldTag.parse(tag)
        self.n = int(n)
        self.counts: List[int] = [0] * (self.n + 1)
        if counts is None:
            return
        items = counts.items() if isinstance(counts, Mapping) else enumerate(counts)
        for weight, count in items:
            weight, count = int(weight), int(count)
            if not 0 <= weight <= self.n:
                raise ValueError(f"Weight {weight} outside 0..{self.n}")
            if count < 0:
                raise ValueError(f"Negative count {count} at weight {weight}")
            self.counts[weight] = count

    def __getitem__(self, weight: int) -> int:
        return self.counts[weight] if 0 <= weight <= self.n else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        return self.tag is other.tag and self.n == other.n and self.counts == other.counts

    __hash__ = None

    def __repr__(self) -> str:
        return f"WeightEnumerator({self.tag.value}, n={self.n}, {self.nonzero()})"

    def total(self) -> int:
        return sum(self.counts)

    def nonzero(self) -> Dict[int, int]:
        return {w: c for w, c in enumerate(self.counts) if c}

    def min_weight(self) -> Optional[int]:
        """Smallest positive weight carried by a codeword, or None for the zero code."""
        for weight in range(1, self.n + 1):
            if self.counts[weight]:
                return weight
        return None

    def divisibility_violations(self) -> List[int]:
        """Weights that a self-dual code of this field may not carry but this one does."""
        step = 3 if self.tag is FieldTag.F3 else 2
        return [w for w, c in enumerate(self.counts) if c and w % step]

    def merge(self, other: "WeightEnumerator") -> "WeightEnumerator":
        """Coefficient-wise sum, used to join partial enumerations."""
        if self.tag is not other.tag or self.n != other.n:
            raise ValueError("Cannot merge enumerators of different codes")
        return WeightEnumerator(self.tag, self.n, [a + b for a, b in zip(self.counts, other.counts)])

    def product(self, other: "WeightEnumerator") -> "WeightEnumerator":
        """Enumerator of a direct sum: polynomial product of the parts."""
        if self.tag is not other.tag:
            raise ValueError("Cannot multiply enumerators over different fields")
        result = [0] * (self.n + other.n + 1)
        for i, a in enumerate(self.counts):
            if a:
                for j, b in enumerate(other.counts):
                    result[i + j] += a * b
        return WeightEnumerator(self.tag, self.n + other.n, result)

    def to_json(self) -> Dict[str, Any]:
        return {
            "field": self.tag.value,
            "n": self.n,
            "counts": [[w, str(c)] for w, c in enumerate(self.counts) if c],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "WeightEnumerator":
        return cls(data["field"], data["n"], {int(w): int(c) for w, c in data["counts"]})
