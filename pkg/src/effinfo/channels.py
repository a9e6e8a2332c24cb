"""Finite alphabets, probability vectors, and row-stochastic channels.

All values are immutable after construction: numpy buffers are copied in
and flagged read-only, so instances can be shared freely across threads.
Probability data is validated at construction (nonnegativity, normalization
within ``ATOL``) and never silently renormalized.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

# Absolute tolerance for normalization / stochasticity checks.
ATOL = 1e-9


def _frozen_array(values, ndim=1) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.ndim != ndim:
        raise ValidationError(f"expected a {ndim}-d probability array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("probabilities must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Alphabet:
    """An ordered, indexable set of distinct symbol names."""

    labels: tuple[str, ...]

    def __init__(self, labels):
        labels = tuple(str(s) for s in labels)
        if not labels:
            raise ValidationError("alphabet must contain at least one symbol")
        if len(set(labels)) != len(labels):
            dupes = sorted({s for s in labels if labels.count(s) > 1})
            raise ValidationError(f"alphabet symbols must be distinct, repeated: {dupes}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(labels)})

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValidationError(f"unknown symbol {symbol!r}, expected one of {list(self.labels)}") from None

    def primed(self) -> "Alphabet":
        """An isomorphic copy with every label suffixed by an apostrophe."""
        return Alphabet(s + "'" for s in self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)


@dataclass(frozen=True, eq=False)
class Distribution:
    """A probability vector over an :class:`Alphabet`."""

    alphabet: Alphabet
    probs: np.ndarray = field(repr=False)

    def __init__(self, alphabet: Alphabet, probs):
        probs = _frozen_array(probs)
        if probs.shape[0] != alphabet.size:
            raise ValidationError(
                f"distribution has {probs.shape[0]} entries for {alphabet.size} symbols")
        if np.any(probs < 0.0):
            bad = alphabet.labels[int(np.argmin(probs))]
            raise ValidationError(f"negative probability at symbol {bad!r}")
        total = float(probs.sum())
        if abs(total - 1.0) > ATOL:
            raise ValidationError(f"probabilities sum to {total!r}, expected 1 within {ATOL}")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "probs", probs)

    @classmethod
    def uniform(cls, alphabet: Alphabet) -> "Distribution":
        """The maximum-entropy (potential-repertoire) distribution."""
        n = alphabet.size
        return cls(alphabet, np.full(n, 1.0 / n))

    @classmethod
    def point_mass(cls, alphabet: Alphabet, symbol: str) -> "Distribution":
        probs = np.zeros(alphabet.size)
        probs[alphabet.index(symbol)] = 1.0
        return cls(alphabet, probs)

    def prob(self, symbol: str) -> float:
        return float(self.probs[self.alphabet.index(symbol)])

    def support(self) -> tuple[str, ...]:
        """Symbols with strictly positive probability, in alphabet order."""
        return tuple(s for s, p in zip(self.alphabet.labels, self.probs) if p > 0.0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Distribution)
                and self.alphabet == other.alphabet
                and np.array_equal(self.probs, other.probs))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class Channel:
    """A memoryless system: a row-stochastic matrix p(y|x).

    Intervening to set the input to x (Pearl's do(x)) means reading row x;
    there is no further causal structure in a single input->output arrow.
    """

    input: Alphabet
    output: Alphabet
    matrix: np.ndarray = field(repr=False)

    def __init__(self, input: Alphabet, output: Alphabet, matrix):
        matrix = _frozen_array(matrix, ndim=2)
        if matrix.shape != (input.size, output.size):
            raise ValidationError(
                f"matrix shape {matrix.shape} does not match "
                f"{input.size} inputs x {output.size} outputs")
        if np.any(matrix < 0.0):
            x, y = np.unravel_index(int(np.argmin(matrix)), matrix.shape)
            raise ValidationError(
                f"negative entry at p({output.labels[y]!r} | {input.labels[x]!r})")
        row_sums = matrix.sum(axis=1)
        bad = np.nonzero(np.abs(row_sums - 1.0) > ATOL)[0]
        if bad.size:
            x = int(bad[0])
            raise ValidationError(
                f"row for input {input.labels[x]!r} sums to {row_sums[x]!r}, "
                f"expected 1 within {ATOL}")
        object.__setattr__(self, "input", input)
        object.__setattr__(self, "output", output)
        object.__setattr__(self, "matrix", matrix)

    def do(self, symbol: str) -> Distribution:
        """The output distribution after the intervention do(input = symbol)."""
        return Distribution(self.output, self.matrix[self.input.index(symbol)])

    def prob(self, y: str, given: str) -> float:
        return float(self.matrix[self.input.index(given), self.output.index(y)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Channel)
                and self.input == other.input
                and self.output == other.output
                and np.array_equal(self.matrix, other.matrix))

    __hash__ = None


def copy_channel(alphabet: Alphabet) -> Channel:
    """The deterministic system that copies its input, x_k -> x_k'."""
    return Channel(alphabet, alphabet.primed(), np.eye(alphabet.size))
