"""Operations on n-words: convolution, componentwise algebra, enumeration."""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from mta.core import PAD


class PaddingError(ValueError):
    """A padded word has a symbol after padding on some track."""

    def __init__(self, track: int, column: int):
        super().__init__(f"ill-formed padding: symbol after '{PAD}' on track {track}, column {column}")
        self.track = track
        self.column = column


def convolve(x: Sequence[str]) -> tuple[tuple[str, ...], ...]:
    """Stack ``x`` into columns, padding short components with ``_``."""
    width = max((len(w) for w in x), default=0)
    return tuple(
        tuple(w[h] if h < len(w) else PAD for w in x)
        for h in range(width)
    )


def deconvolve(columns: Sequence[Sequence[str]], arity: int | None = None) -> tuple[str, ...]:
    """Inverse of :func:`convolve`.

    Raises :class:`PaddingError` (tracks and columns are 1-based) when a
    track has a symbol after a pad, and ``ValueError`` for an all-pad column.
    ``arity`` is needed only for the empty word.
    """
    columns = [tuple(c) for c in columns]
    if not columns:
        if arity is None:
            raise ValueError("arity required to deconvolve the empty word")
        return ("",) * arity
    n = len(columns[0])
    if arity is not None and arity != n:
        raise ValueError(f"columns have {n} tracks, expected {arity}")
    words = [[] for _ in range(n)]
    ended = [False] * n
    for h, col in enumerate(columns, start=1):
        if len(col) != n:
            raise ValueError(f"column {h} has {len(col)} tracks, expected {n}")
        if all(c == PAD for c in col):
            raise ValueError(f"column {h} is all padding")
        for k, c in enumerate(col):
            if c == PAD:
                ended[k] = True
            elif ended[k]:
                raise PaddingError(k + 1, h)
            else:
                words[k].append(c)
    return tuple("".join(w) for w in words)


def parse_columns(text: Sequence[str]) -> tuple[tuple[str, ...], ...]:
    """Columns written as strings, one character per track (``"a_"``)."""
    return tuple(tuple(col) for col in text)


def concat(x: Sequence[str], y: Sequence[str]) -> tuple[str, ...]:
    return tuple(a + b for a, b in zip(x, y))


def reverse(x: Sequence[str]) -> tuple[str, ...]:
    return tuple(w[::-1] for w in x)


def drop_component(x: Sequence[str], k: int) -> tuple[str, ...]:
    """Remove the ``k``-th component (1-based)."""
    return tuple(x[: k - 1]) + tuple(x[k:])


def insert_component(x: Sequence[str], k: int, y: str) -> tuple[str, ...]:
    """Insert ``y`` as the ``k``-th component (1-based)."""
    return tuple(x[: k - 1]) + (y,) + tuple(x[k - 1:])


def words_upto(alphabet: Sequence[str], max_len: int) -> Iterator[str]:
    """Shortlex enumeration of words of length at most ``max_len``."""
    for length in range(max_len + 1):
        for letters in itertools.product(alphabet, repeat=length):
            yield "".join(letters)


def enumerate_nwords(alphabet: Sequence[str], n: int, max_len: int) -> Iterator[tuple[str, ...]]:
    """Every n-tuple of words with components of length at most ``max_len``.

    Components follow shortlex order; tuples are ordered lexicographically
    by component position (the last component varies fastest).
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    words = list(words_upto(list(alphabet), max_len))
    return itertools.product(words, repeat=n)


def count_nwords(alphabet_size: int, n: int, max_len: int) -> int:
    return sum(alphabet_size ** i for i in range(max_len + 1)) ** n
