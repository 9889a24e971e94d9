"""Formal graded quantization spaces.

Each degree holds a pair ``(finite, smooth)``: a complex vector space of
dimension ``finite`` plus ``smooth`` copies of C^oo(R; C). Infinite
dimensional summands are only ever counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class GradedQuant:
    parts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        parts = [tuple(int(c) for c in p) for p in self.parts]
        for f, s in parts:
            if f < 0 or s < 0:
                raise ValueError("ranks must be nonnegative")
        while parts and parts[-1] == (0, 0):
            parts.pop()
        object.__setattr__(self, "parts", tuple(parts))

    @classmethod
    def of(cls, by_degree: Mapping[int, tuple[int, int]]) -> "GradedQuant":
        if not by_degree:
            return cls()
        top = max(by_degree)
        return cls(tuple(tuple(by_degree.get(d, (0, 0))) for d in range(top + 1)))

    @classmethod
    def zero(cls) -> "GradedQuant":
        return cls()

    def __getitem__(self, degree: int) -> tuple[int, int]:
        return self.parts[degree] if 0 <= degree < len(self.parts) else (0, 0)

    def finite(self, degree: int) -> int:
        return self[degree][0]

    def smooth(self, degree: int) -> int:
        return self[degree][1]

    @property
    def top(self) -> int:
        return len(self.parts) - 1

    def __add__(self, other: "GradedQuant") -> "GradedQuant":
        """Direct sum."""
        n = max(len(self.parts), len(other.parts))
        return GradedQuant(tuple(
            (self.finite(d) + other.finite(d), self.smooth(d) + other.smooth(d)) for d in range(n)
        ))

    @property
    def is_zero(self) -> bool:
        return not self.parts

    def total(self) -> tuple[int, int]:
        """Ungraded (finite, smooth) counts."""
        return sum(f for f, _ in self.parts), sum(s for _, s in self.parts)

    def to_json(self, min_top: int = 2) -> dict:
        return {str(d): list(self[d]) for d in range(max(min_top, self.top) + 1)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "GradedQuant":
        return cls.of({int(k): (int(v[0]), int(v[1])) for k, v in obj.items()})

    def __str__(self):
        terms = []
        for d, (f, s) in enumerate(self.parts):
            if f:
                terms.append(f"H{d}: C^{f}")
            if s:
                terms.append(f"H{d}: {s} x C^oo(R;C)")
        return " + ".join(terms) or "0"
