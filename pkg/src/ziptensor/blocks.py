"""Strip, block, and staircase structure of the tensor grids.

For a grid with headers of length i, the q-strips (q = 1..i-1) are the
maximal runs of consecutive rows or columns whose headers agree on their
first i-q-1 parts.  Longer prefixes refine shorter ones, so strips nest as
q grows; a q-block is the intersection of a horizontal and a vertical
q-strip, and blocks across all levels form a laminar family.

Every block B of height h carries a descending staircase: the cells of B
strictly below the diagonal through its top-left corner, a triangular set of
side h-1 anchored at B's lower-left corner.  The union of all staircases is
exactly the zero set of the tensor, and keeping only the staircases not
swallowed by enclosing blocks' staircases turns the union into a disjoint
cover.
"""
from dataclasses import dataclass
from math import comb

import numpy as np

from .compositions import Composition, p_set, q_set
from .errors import DomainError, StructureViolationError
from .zippering import Tensor, build_tensor

AXES = ("horizontal", "vertical")


def sigma(p: int, q: int) -> int:
    """C(p+q-1, q): the size of the p-th q-strip profile entry."""
    return comb(p + q - 1, q)


@dataclass(frozen=True)
class Strip:
    """A maximal run of rows or columns sharing their first i-q-1 parts."""
    axis: str
    q: int
    start: int
    stop: int  # exclusive
    prefix: Composition

    @property
    def size(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class Block:
    """Intersection of a horizontal and a vertical q-strip."""
    q: int
    row_start: int
    row_stop: int
    col_start: int
    col_stop: int

    @property
    def height(self) -> int:
        return self.row_stop - self.row_start

    @property
    def width(self) -> int:
        return self.col_stop - self.col_start

    @property
    def rectangle(self) -> tuple[int, int, int, int]:
        return (self.row_start, self.row_stop, self.col_start, self.col_stop)

    def contains(self, other: "Block") -> bool:
        """True iff other's cell rectangle lies strictly inside this one."""
        return (self.row_start <= other.row_start
                and other.row_stop <= self.row_stop
                and self.col_start <= other.col_start
                and other.col_stop <= self.col_stop
                and self.rectangle != other.rectangle)


@dataclass(frozen=True)
class Staircase:
    """Cells of a block strictly below its top-left diagonal."""
    block: Block
    cells: frozenset[tuple[int, int]]
    side: int


def strips(k: int, i: int, q: int, axis: str) -> list[Strip]:
    """Maximal header runs sharing their first i-q-1 parts, in grid order."""
    if axis not in AXES:
        raise DomainError(f"axis must be one of {AXES}, got {axis!r}")
    if not 1 <= q <= i - 1:
        raise DomainError(f"strip level q = {q} out of range 1..{i - 1}")
    headers = p_set(k, i) if axis == "horizontal" else q_set(k, i)
    keep = i - q - 1
    out = []
    start = 0
    while start < len(headers):
        prefix = headers[start][:keep]
        stop = start
        while stop < len(headers) and headers[stop][:keep] == prefix:
            stop += 1
        out.append(Strip(axis, q, start, stop, prefix))
        start = stop
    return out


def blocks(k: int, i: int, q: int) -> list[Block]:
    """All q-strip intersections; they tile the grid."""
    horizontal = strips(k, i, q, "horizontal")
    vertical = strips(k, i, q, "vertical")
    return [Block(q, h.start, h.stop, v.start, v.stop)
            for h in horizontal for v in vertical]


def staircase(b: Block) -> Staircase:
    """The descending staircase of b; empty when the block has height 1."""
    cells = frozenset(
        (r, c)
        for r in range(b.row_start, b.row_stop)
        for c in range(b.col_start, b.col_stop)
        if r - b.row_start > c - b.col_start)
    return Staircase(b, cells, b.height - 1)


def predicted_zeros(k: int, i: int) -> frozenset[tuple[int, int]]:
    """Union of every q-block staircase, q = 1..i-1; empty for i in {1, k}."""
    out: set[tuple[int, int]] = set()
    for q in range(1, i):
        for b in blocks(k, i, q):
            out |= staircase(b).cells
    return frozenset(out)


def _strip_lookup(strip_list: list[Strip], length: int) -> list[Strip]:
    """Index -> enclosing strip, as a dense table."""
    table: list[Strip] = [None] * length  # type: ignore[list-item]
    for s in strip_list:
        for idx in range(s.start, s.stop):
            table[idx] = s
    return table


def disjoint_staircases(k: int, i: int) -> list[Staircase]:
    """The staircases retained for the disjoint cover of the zero set.

    A staircase is discarded when it is wholly contained in the union of the
    staircases of blocks strictly containing its block.  Strips nest level
    by level, so those enclosing blocks are exactly the higher-level blocks
    through the same corner; a cell sits in an enclosing staircase iff it is
    below that block's own diagonal.  The survivors are verified to be
    pairwise disjoint and to cover predicted_zeros before being returned.
    """
    n = len(p_set(k, i))
    row_at = {q: _strip_lookup(strips(k, i, q, "horizontal"), n)
              for q in range(1, i)}
    col_at = {q: _strip_lookup(strips(k, i, q, "vertical"), n)
              for q in range(1, i)}

    retained = []
    for q in range(1, i):
        for b in blocks(k, i, q):
            cells = staircase(b).cells
            if not cells:
                continue
            enclosing = []
            for higher in range(q + 1, i):
                h = row_at[higher][b.row_start]
                v = col_at[higher][b.col_start]
                anc = Block(higher, h.start, h.stop, v.start, v.stop)
                if anc.rectangle != b.rectangle:
                    enclosing.append(anc)
            if all(any(r - a.row_start > c - a.col_start for a in enclosing)
                   for r, c in cells):
                continue
            retained.append(staircase(b))

    union: set[tuple[int, int]] = set()
    for st in retained:
        if union & st.cells:
            raise StructureViolationError(
                f"overlapping retained staircases in grid ({k},{i})")
        union |= st.cells
    if union != predicted_zeros(k, i):
        raise StructureViolationError(
            f"retained staircases do not cover the zero set of grid ({k},{i})")
    return retained


def anti_transpose(t: Tensor) -> Tensor:
    """Reflect across the anti-diagonal; pairs T[k,i] with T[k,k+1-i].

    The reflected matrix is labeled with the headers of the complementary
    tensor T[k,k+1-i], which has the same side length, so applying the map
    twice restores the original tensor exactly.
    """
    flipped = t.entries[::-1, ::-1].T.copy()
    j = t.k + 1 - t.i
    return Tensor(t.k, j, p_set(t.k, j), q_set(t.k, j), flipped)


def upper_unitriangular(n: int) -> np.ndarray:
    """The matrix with ones on and above the main diagonal."""
    return np.triu(np.ones((n, n), dtype=np.uint8))


def blocks_laminar(block_list: list[Block]) -> bool:
    """True iff every pair of blocks is disjoint or nested."""
    rect = np.asarray([b.rectangle for b in block_list], dtype=np.int64)
    rs, re, cs, ce = rect[:, 0], rect[:, 1], rect[:, 2], rect[:, 3]
    row_disjoint = (rs[:, None] >= re[None, :]) | (rs[None, :] >= re[:, None])
    col_disjoint = (cs[:, None] >= ce[None, :]) | (cs[None, :] >= ce[:, None])
    nested = ((rs[:, None] <= rs[None, :]) & (re[None, :] <= re[:, None])
              & (cs[:, None] <= cs[None, :]) & (ce[None, :] <= ce[:, None]))
    ok = row_disjoint | col_disjoint | nested | nested.T
    return bool(ok.all())


@dataclass
class GridDecomposition:
    """Everything the renderer and the reports need about one grid."""
    k: int
    i: int
    n: int
    rows: list[Composition]
    cols: list[Composition]
    strips: dict[tuple[int, str], list[Strip]]
    blocks: dict[int, list[Block]]
    staircases: list[Staircase]
    zeros: frozenset[tuple[int, int]]


def grid_decomposition(k: int, i: int) -> GridDecomposition:
    """Full strip/block/staircase analysis of the (k,i) grid.

    Degenerate lengths decompose trivially: i = 1 has no strip levels and
    i = k only 1x1 blocks, so both yield an empty zero set.
    """
    rows = p_set(k, i)
    cols = q_set(k, i)
    strip_table = {(q, axis): strips(k, i, q, axis)
                   for q in range(1, i) for axis in AXES}
    block_table = {q: blocks(k, i, q) for q in range(1, i)}
    return GridDecomposition(k, i, len(rows), rows, cols, strip_table,
                             block_table, disjoint_staircases(k, i),
                             predicted_zeros(k, i))


def decomposition_report(k: int, i: int) -> dict:
    """JSON-ready decomposition with a conformance boolean per invariant.

    Index ranges and cells are 1-based inclusive, matching the printed
    tables; internal structures stay 0-based.
    """
    d = grid_decomposition(k, i)
    t = build_tensor(k, i)
    actual_zeros = {(int(r), int(c)) for r, c in zip(*np.nonzero(t.entries == 0))}
    covered: set[tuple[int, int]] = set()
    overlap_free = True
    for st in d.staircases:
        if covered & st.cells:
            overlap_free = False
        covered |= st.cells
    every_block = [b for q in d.blocks for b in d.blocks[q]]
    conformance = {
        "zero_set_matches_tensor": set(d.zeros) == actual_zeros,
        "staircases_pairwise_disjoint": overlap_free,
        "staircase_union_covers_zeros": covered == set(d.zeros),
        "height_at_most_width": all(
            st.block.height <= st.block.width for st in d.staircases),
        "blocks_laminar": blocks_laminar(every_block) if every_block else True,
    }
    return {
        "k": k,
        "i": i,
        "n": d.n,
        "strips": [
            {"q": s.q, "axis": s.axis, "first": s.start + 1, "last": s.stop,
             "prefix": list(s.prefix)}
            for key in sorted(d.strips) for s in d.strips[key]],
        "blocks": [
            {"q": b.q, "rows": [b.row_start + 1, b.row_stop],
             "cols": [b.col_start + 1, b.col_stop]}
            for q in sorted(d.blocks) for b in d.blocks[q]],
        "staircases": [
            {"q": st.block.q, "rows": [st.block.row_start + 1, st.block.row_stop],
             "cols": [st.block.col_start + 1, st.block.col_stop],
             "side": st.side,
             "cells": sorted([r + 1, c + 1] for r, c in st.cells)}
            for st in d.staircases],
        "conformance": conformance,
    }
