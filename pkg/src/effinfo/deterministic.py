"""Deterministic maps as physical systems.

A total function table f: X -> Y categorizes inputs by output; the category
for y is the pre-image f^-1(y). The actual repertoire is uniform on that
pre-image and effective information has the closed form
log2|X| - log2|f^-1(y)|, so ei(f, y) = -log2 of the effective probability
|f^-1(y)| / |X|. Pre-image counts are kept as exact integers and exposed as
exact rationals; log2 happens only at the boundary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .channels import Alphabet, Channel, Distribution
from .errors import UndefinedOutputError, ValidationError


@dataclass(frozen=True)
class DeterministicMap:
    """A total function table assigning one output symbol to each input symbol."""

    input: Alphabet
    output: Alphabet
    table: tuple[str, ...]

    def __init__(self, input: Alphabet, output: Alphabet, table):
        table = tuple(str(s) for s in table)
        if len(table) != input.size:
            raise ValidationError(
                f"table assigns {len(table)} outputs for {input.size} inputs")
        for x, y in zip(input.labels, table):
            if y not in output:
                raise ValidationError(
                    f"table sends {x!r} to {y!r}, which is not an output symbol")
        object.__setattr__(self, "input", input)
        object.__setattr__(self, "output", output)
        object.__setattr__(self, "table", table)

    def __call__(self, x: str) -> str:
        return self.table[self.input.index(x)]


def preimage(f: DeterministicMap, y: str) -> frozenset[str]:
    """The exact set {x : f(x) = y}; empty when y is unreachable."""
    f.output.index(y)
    return frozenset(x for x, fx in zip(f.input.labels, f.table) if fx == y)


def channel_of_map(f: DeterministicMap) -> Channel:
    """Embed the map into the channel pipeline as a 0/1 row-stochastic matrix."""
    matrix = np.zeros((f.input.size, f.output.size))
    for i, y in enumerate(f.table):
        matrix[i, f.output.index(y)] = 1.0
    return Channel(f.input, f.output, matrix)


def effective_probability(f: DeterministicMap, y: str) -> Fraction:
    """|f^-1(y)| / |X| for reachable y, else 0; the push-forward of the uniform prior."""
    return Fraction(len(preimage(f, y)), f.input.size)


def ei_deterministic(f: DeterministicMap, y: str) -> float:
    """Closed form log2|X| - log2|f^-1(y)|, in bits."""
    count = len(preimage(f, y))
    if count == 0:
        raise UndefinedOutputError(
            f"output {y!r} is unreachable; effective information is undefined")
    return math.log2(f.input.size) - math.log2(count)


def actual_repertoire_det(f: DeterministicMap, y: str) -> Distribution:
    """Uniform distribution on the pre-image of y."""
    pre = preimage(f, y)
    if not pre:
        raise UndefinedOutputError(
            f"output {y!r} is unreachable; the actual repertoire is undefined")
    probs = np.array([1.0 / len(pre) if x in pre else 0.0 for x in f.input.labels])
    return Distribution(f.input, probs)
