"""Zipper composition pairs into binary words and build the tensors T[k,i].

The zipper of a row header A and a column header B is the word
0^a1 1^b1 0^a2 1^b2 ... 0^ai 1^bi of length 2k+1.  The tensor entry for
(A, B) is 1 exactly when every prefix partial sum of (a_j - b_j) stays
positive, which happens exactly when the zipper word codes an ordered tree.
Words are plain strings, leftmost symbol first, so printed tables compare
directly.
"""
from dataclasses import dataclass
from itertools import groupby

import numpy as np

from .capacity import WORD_LIMIT, effective_limit, ensure_within
from .compositions import Composition, p_set, q_set
from .errors import DomainError, MalformedWordError


def _check_pair(a: Composition, b: Composition) -> None:
    if len(a) != len(b):
        raise DomainError(f"length mismatch: {len(a)} vs {len(b)} parts")
    if any(part < 1 for part in a) or any(part < 1 for part in b):
        raise DomainError("composition parts must be positive")
    if sum(a) != sum(b) + 1:
        raise DomainError(
            f"sums must differ by one: sum{a} = {sum(a)}, sum{b} = {sum(b)}")


def _check_binary(w: str) -> None:
    if not w or set(w) - {"0", "1"}:
        raise MalformedWordError(f"not a nonempty binary word: {w!r}")


def zipper(a: Composition, b: Composition, limit: int | None = None) -> str:
    """Interleave a and b as runs: a_j zeros then b_j ones, left to right."""
    _check_pair(a, b)
    ensure_within(sum(b), effective_limit(limit, WORD_LIMIT), "zipper words")
    return "".join("0" * x + "1" * y for x, y in zip(a, b))


def unzip(w: str) -> tuple[Composition, Composition]:
    """Run-length decode w back into its zero-run and one-run lengths."""
    _check_binary(w)
    if w[0] != "0" or w[-1] != "1":
        raise MalformedWordError(
            f"expected a word starting with 0 and ending with 1: {w!r}")
    runs = [(ch, sum(1 for _ in grp)) for ch, grp in groupby(w)]
    return (tuple(n for ch, n in runs if ch == "0"),
            tuple(n for ch, n in runs if ch == "1"))


def tensor_entry(a: Composition, b: Composition) -> int:
    """1 iff every prefix partial sum of (a_j - b_j) is positive, else 0."""
    _check_pair(a, b)
    total = 0
    for x, y in zip(a, b):
        total += x - y
        if total <= 0:
            return 0
    return 1


def is_tree_word(w: str) -> bool:
    """True iff w is a 0 followed by a balanced Dyck word (0 down, 1 up).

    Reading 0 as +1 and 1 as -1, the running sum must stay >= 1 from the
    second position on and finish at 1.  Words of even length or with the
    wrong weight are rejected outright rather than classified.
    """
    _check_binary(w)
    if len(w) % 2 == 0:
        raise MalformedWordError(f"tree words have odd length, got {len(w)}")
    k = len(w) // 2
    if w.count("1") != k:
        raise MalformedWordError(
            f"expected {k} ones in a word of length {2 * k + 1}, "
            f"got {w.count('1')}")
    height = 0
    for pos, ch in enumerate(w):
        height += 1 if ch == "0" else -1
        if pos >= 1 and height < 1:
            return False
    return height == 1


@dataclass(eq=False)
class Tensor:
    """Square 0/1 matrix T[k,i] together with its row and column headers."""
    k: int
    i: int
    rows: list[Composition]
    cols: list[Composition]
    entries: np.ndarray

    @property
    def n(self) -> int:
        return len(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.k == other.k and self.i == other.i
                and self.rows == other.rows and self.cols == other.cols
                and np.array_equal(self.entries, other.entries))


def build_tensor(k: int, i: int, limit: int | None = None) -> Tensor:
    """Evaluate the partial-sum rule on all of p_set(k,i) x q_set(k,i)."""
    ensure_within(k, effective_limit(limit, WORD_LIMIT), "tensors")
    rows = p_set(k, i)
    cols = q_set(k, i)
    row_sums = np.asarray(rows, dtype=np.int64).cumsum(axis=1)
    col_sums = np.asarray(cols, dtype=np.int64).cumsum(axis=1)
    entries = (row_sums[:, None, :] > col_sums[None, :, :]).all(axis=2)
    return Tensor(k, i, rows, cols, entries.astype(np.uint8))
