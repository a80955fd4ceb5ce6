"""Integer compositions in descending lexicographic order.

A composition is an ordered tuple of positive integers.  Two families index
the tensors: Q(k,i), all compositions of k into i parts, and P(k,i), the
compositions of k+1 into i parts whose first part is at least 2.  Both are
listed descending-lexicographically (componentwise-larger tuples first) and
both have C(k-1, i-1) members.
"""
from math import comb

from .errors import DomainError, ParseError

Composition = tuple[int, ...]


def compositions_desc_lex(n: int, parts: int) -> list[Composition]:
    """All compositions of n into `parts` positive parts, largest first.

    Generated directly in order: the leading part runs from its maximum down
    to 1, recursing on the remainder, so no sort pass is needed.
    """
    if parts < 1 or parts > n:
        raise DomainError(f"no compositions of {n} into {parts} positive parts")
    out: list[Composition] = []

    def extend(prefix: Composition, remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for first in range(remaining - slots + 1, 0, -1):
            extend(prefix + (first,), remaining - first, slots - 1)

    extend((), n, parts)
    return out


def _check_range(k: int, i: int) -> None:
    if k < 2:
        raise DomainError(f"edge count k must be at least 2, got {k}")
    if not 1 <= i <= k:
        raise DomainError(f"length i = {i} out of range 1..{k}")


def q_set(k: int, i: int) -> list[Composition]:
    """Column headers: compositions of k into i parts, descending lex."""
    _check_range(k, i)
    return compositions_desc_lex(k, i)


def p_set(k: int, i: int) -> list[Composition]:
    """Row headers: compositions of k+1 into i parts with first part >= 2."""
    _check_range(k, i)
    if i == 1:
        return [(k + 1,)]
    return [(first,) + rest
            for first in range(k + 2 - i, 1, -1)
            for rest in compositions_desc_lex(k + 1 - first, i - 1)]


def rank_desc_lex(c: Composition, n: int) -> int:
    """Zero-based position of c within compositions_desc_lex(n, len(c)).

    Counts the compositions strictly greater than c: with prefix c[:j] fixed
    and a larger part at slot j there are C(rem-v-1, slots-2) completions for
    each larger value v, which telescopes to a single binomial per slot.

    Rows of P(k,i) rank consistently too: compositions led by 1 sort after
    every first-part>=2 row, so the P index of such a row coincides with its
    rank among all compositions of k+1.
    """
    if not c or any(part < 1 for part in c) or sum(c) != n:
        raise DomainError(f"{c!r} is not a composition of {n}")
    rank = 0
    remaining, slots = n, len(c)
    for part in c[:-1]:
        rank += comb(remaining - part - 1, slots - 1)
        remaining -= part
        slots -= 1
    return rank


def format_composition(c: Composition) -> str:
    """Digit string when every part is a single digit, else comma-separated."""
    if all(part <= 9 for part in c):
        return "".join(str(part) for part in c)
    return ",".join(str(part) for part in c)


def parse_composition(s: str, parts: int | None = None) -> Composition:
    """Inverse of format_composition.

    A bare digit string reads one part per digit ("2111" -> (2,1,1,1)); that
    leaves a lone part above 9 ambiguous, so callers that know the expected
    length pass `parts` to disambiguate.
    """
    if not s:
        raise ParseError("empty composition string")
    if "," in s:
        chunks = s.split(",")
    elif parts == 1:
        chunks = [s]
    else:
        chunks = list(s)
    out = []
    for pos, chunk in enumerate(chunks):
        if not chunk.isdigit() or int(chunk) < 1:
            raise ParseError(f"bad part {chunk!r} at position {pos} in {s!r}")
        out.append(int(chunk))
    if parts is not None and len(out) != parts:
        raise ParseError(f"expected {parts} parts, got {len(out)} in {s!r}")
    return tuple(out)
