"""Deterministic batch iteration."""

from __future__ import annotations

from typing import Iterator, Sequence, TypeVar

import numpy as np

from ..exceptions import ConfigError

T = TypeVar("T")


def make_batches(records: Sequence[T], batch_size: int, seed: int) -> list[list[T]]:
    """One shuffled pass over the records; the last batch may be short.

    The same seed always yields the same order.
    """
    if batch_size < 1:
        raise ConfigError(f"batch_size must be >= 1, got {batch_size}")
    order = np.random.RandomState(seed).permutation(len(records))
    shuffled = [records[i] for i in order]
    return [shuffled[i : i + batch_size] for i in range(0, len(shuffled), batch_size)]


def batch_stream(records: Sequence[T], batch_size: int, seed: int) -> Iterator[list[T]]:
    """Endless stream of shuffled passes, reseeded per epoch from the base seed."""
    epoch = 0
    while True:
        for batch in make_batches(records, batch_size, seed + epoch):
            yield batch
        epoch += 1
