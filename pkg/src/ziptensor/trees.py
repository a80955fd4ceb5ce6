"""Ordered rooted plane trees and their word codes.

A tree word (0 followed by a balanced Dyck word) codes a k-edge plane tree:
after the leading 0 seats the root, each 0 descends to a newly created
rightmost child and each 1 ascends to the parent.  Trees are stored as
preorder child-count sequences; their canonical serialization is the
balanced-parentheses word of length 2k.
"""
from dataclasses import dataclass
from math import comb

from .capacity import COUNT_LIMIT, effective_limit, ensure_within
from .errors import DomainError, ParseError
from .zippering import build_tensor, is_tree_word, zipper

_PARENS_TO_BITS = str.maketrans("()", "01")
_BITS_TO_PARENS = str.maketrans("01", "()")


@dataclass(frozen=True)
class OrderedTree:
    """Plane tree as preorder child counts; children keep left-to-right order."""
    child_counts: tuple[int, ...]

    def __post_init__(self):
        # Lukasiewicz condition: the walk 1 + sum(c_j - 1) stays positive
        # until the last vertex and ends at zero.
        walk = 1
        last = len(self.child_counts) - 1
        for pos, count in enumerate(self.child_counts):
            if count < 0:
                raise DomainError(f"negative child count at vertex {pos}")
            walk += count - 1
            if walk <= 0 and pos < last:
                raise DomainError("child counts close the tree early")
        if walk != 0:
            raise DomainError("child counts do not close the tree")

    @property
    def edge_count(self) -> int:
        return len(self.child_counts) - 1

    def to_parens(self) -> str:
        """Balanced-parentheses serialization, one (...) per subtree."""
        counts = self.child_counts
        out: list[str] = []
        pos = 1
        pending = [counts[0]]  # children still to open, per active vertex
        while pending:
            if pending[-1]:
                pending[-1] -= 1
                out.append("(")
                pending.append(counts[pos])
                pos += 1
            else:
                pending.pop()
                if pending:
                    out.append(")")
        return "".join(out)

    @classmethod
    def from_parens(cls, s: str) -> "OrderedTree":
        """Parse a balanced-parentheses word back into a tree."""
        counts = [0]
        path = [0]
        for pos, ch in enumerate(s):
            if ch == "(":
                counts[path[-1]] += 1
                path.append(len(counts))
                counts.append(0)
            elif ch == ")":
                path.pop()
                if not path:
                    raise ParseError(f"unmatched ')' at position {pos}")
            else:
                raise ParseError(f"unexpected {ch!r} at position {pos}")
        if len(path) != 1:
            raise ParseError("unclosed '(' at end of input")
        return cls(tuple(counts))


def decode(w: str) -> OrderedTree:
    """Read w as a root-seating 0 then preorder descend(0)/ascend(1) moves."""
    if not is_tree_word(w):
        raise DomainError(f"not a tree word: {w}")
    counts = [0]
    path = [0]
    for ch in w[1:]:
        if ch == "0":
            counts[path[-1]] += 1
            path.append(len(counts))
            counts.append(0)
        else:
            path.pop()
    return OrderedTree(tuple(counts))


def encode(t: OrderedTree) -> str:
    """Inverse of decode: a 0 prepended to the descend/ascend preorder word."""
    return "0" + t.to_parens().translate(_PARENS_TO_BITS)


def catalan(k: int) -> int:
    """C(2k, k) / (k + 1)."""
    return comb(2 * k, k) // (k + 1)


def narayana(k: int, i: int) -> int:
    """(1/k) C(k,i) C(k,i-1): k-edge trees whose code has i descent runs."""
    if not 1 <= i <= k:
        return 0
    return comb(k, i) * comb(k, i - 1) // k


def count_trees_by_length(k: int, i: int, limit: int | None = None) -> int:
    """Unit entries of T[k,i], by direct census of the partial-sum rule."""
    ensure_within(k, effective_limit(limit, COUNT_LIMIT), "tree censuses")
    return int(build_tensor(k, i, limit=limit).entries.sum())


def count_trees(k: int, limit: int | None = None) -> int:
    """Total unit entries across T[k,1] .. T[k,k]."""
    ensure_within(k, effective_limit(limit, COUNT_LIMIT), "tree censuses")
    return sum(count_trees_by_length(k, i, limit=limit) for i in range(1, k + 1))


def tree_words(k: int, limit: int | None = None) -> list[str]:
    """All k-edge tree words, in (i, row, col) tensor order."""
    ensure_within(k, effective_limit(limit, COUNT_LIMIT), "tree listings")
    out = []
    for i in range(1, k + 1):
        t = build_tensor(k, i, limit=limit)
        for p, a in enumerate(t.rows):
            for q, b in enumerate(t.cols):
                if t.entries[p, q]:
                    out.append(zipper(a, b, limit=limit))
    return out


def to_dot(t: OrderedTree, name: str = "tree") -> str:
    """DOT digraph with parent->child edges in preorder."""
    counts = t.child_counts
    edges = []
    pos = 1
    pending = [(0, counts[0])]
    while pending:
        vertex, remaining = pending[-1]
        if remaining:
            pending[-1] = (vertex, remaining - 1)
            edges.append((vertex, pos))
            pending.append((pos, counts[pos]))
            pos += 1
        else:
            pending.pop()
    lines = [f"digraph {name} {{"]
    if not edges:
        lines.append("  0;")
    lines.extend(f"  {a} -> {b};" for a, b in edges)
    lines.append("}")
    return "\n".join(lines)
