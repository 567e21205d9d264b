"""One period of a sequence over GF(q) with period p^n, plus text I/O.

Text format: decimal element indices separated by commas and/or whitespace.
Lines whose first non-blank character is ``#`` are comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import LengthMismatch, MalformedToken, TokenOutOfRange
from .field import Field

__all__ = [
    "Sequence",
    "parse_sequence",
    "serialize_sequence",
    "read_sequence",
    "write_sequence",
    "hamming_weight",
    "random_sequence",
]

_SPLIT = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class Sequence:
    field: Field
    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise LengthMismatch(f"level exponent must be >= 1, got {self.n}")
        expected = self.field.p**self.n
        if len(self.elements) != expected:
            raise LengthMismatch(f"expected {expected} elements, got {len(self.elements)}")
        bad = [a for a in self.elements if not 0 <= a < self.field.q]
        if bad:
            raise TokenOutOfRange(f"element {bad[0]} not in [0, {self.field.q})")

    @classmethod
    def from_iterable(cls, field: Field, values, n: int | None = None) -> "Sequence":
        """Build from any iterable of ints; ``n`` is inferred from the length if omitted."""
        elems = tuple(int(v) for v in values)
        if n is None:
            n, size = 0, 1
            while size < len(elems):
                size *= field.p
                n += 1
        return cls(field, n, elems)

    @property
    def N(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def as_array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64)


def parse_sequence(text: str, field: Field, n: int) -> Sequence:
    tokens = []
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        tokens.extend(t for t in _SPLIT.split(line) if t)
    values = []
    for tok in tokens:
        if not tok.isdigit():
            raise MalformedToken(f"not a decimal element index: {tok!r}")
        value = int(tok)
        if value >= field.q:
            raise TokenOutOfRange(f"element {value} not in [0, {field.q})")
        values.append(value)
    expected = field.p**n
    if len(values) != expected:
        raise LengthMismatch(f"got {len(values)} tokens, period p^n = {expected} required")
    return Sequence(field, n, tuple(values))


def serialize_sequence(s: Sequence) -> str:
    return ",".join(str(a) for a in s.elements)


def read_sequence(path, field: Field, n: int) -> Sequence:
    return parse_sequence(Path(path).read_text(), field, n)


def write_sequence(path, s: Sequence) -> None:
    Path(path).write_text(serialize_sequence(s) + "\n")


def hamming_weight(s: Sequence) -> int:
    return sum(1 for a in s.elements if a)


def random_sequence(field: Field, n: int, seed: int) -> Sequence:
    """Uniform random period drawn with ``numpy.random.default_rng(seed)`` (PCG64).

    The draw is ``rng.integers(0, q, size=p**n)``, so the output is a fixed
    function of ``(field, n, seed)`` for a given numpy release series.
    """
    rng = np.random.default_rng(seed)
    values = rng.integers(0, field.q, size=field.p**n)
    return Sequence(field, n, tuple(int(v) for v in values))
