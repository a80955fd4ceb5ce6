"""Dihedral action on middle-level words.

The middle words of order k are the binary words of length 2k+1 with weight
k or k+1.  The group generated by cyclic translation and complemented
reversal (reverse, then flip every bit) acts on them; every orbit has the
full 2(2k+1) members and contains exactly one tree word, which makes orbits
and k-edge trees equinumerous.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .capacity import ORBIT_LIMIT, effective_limit, ensure_within
from .errors import MalformedWordError, StructureViolationError
from .zippering import is_tree_word

_COMPLEMENT = str.maketrans("01", "10")


def rotate(w: str, t: int) -> str:
    """Cyclic translation: output[j] = w[(j + t) mod len(w)]."""
    t %= len(w)
    return w[t:] + w[:t]


def comp_reverse(w: str) -> str:
    """Reverse then complement; an involution swapping weights k and k+1."""
    return w[::-1].translate(_COMPLEMENT)


def check_middle_word(w: str) -> int:
    """Validate odd length and weight in {k, k+1}; return k."""
    if not w or set(w) - {"0", "1"}:
        raise MalformedWordError(f"not a nonempty binary word: {w!r}")
    if len(w) % 2 == 0:
        raise MalformedWordError(f"middle words have odd length, got {len(w)}")
    k = len(w) // 2
    weight = w.count("1")
    if weight not in (k, k + 1):
        raise MalformedWordError(
            f"weight {weight} not in {{{k}, {k + 1}}} for length {len(w)}")
    return k


def orbit(w: str) -> frozenset[str]:
    """Closure of {w} under rotation and complemented reversal."""
    check_middle_word(w)
    seen = {w}
    frontier = [w]
    while frontier:
        v = frontier.pop()
        for u in (rotate(v, 1), comp_reverse(v)):
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return frozenset(seen)


def _unique_tree_word(members: frozenset[str], k: int) -> str:
    hits = [v for v in members if v.count("1") == k and is_tree_word(v)]
    if len(hits) != 1:
        raise StructureViolationError(
            f"orbit contains {len(hits)} tree words, expected exactly 1: "
            f"{sorted(members)[0]} ...")
    return hits[0]


def canonical_tree_word(w: str) -> str:
    """The unique member of w's orbit that is a tree word."""
    k = check_middle_word(w)
    return _unique_tree_word(orbit(w), k)


@dataclass(frozen=True)
class OrbitClass:
    """One dihedral orbit, named by its unique tree word."""
    canonical: str
    members: frozenset[str]

    @property
    def size(self) -> int:
        return len(self.members)


def middle_words(k: int) -> Iterator[str]:
    """All binary words of length 2k+1 with weight k or k+1."""
    n = 2 * k + 1
    for weight in (k, k + 1):
        for ones in combinations(range(n), weight):
            chars = ["0"] * n
            for j in ones:
                chars[j] = "1"
            yield "".join(chars)


def enumerate_orbits(k: int, limit: int | None = None) -> list[OrbitClass]:
    """Partition all middle words into orbits, sorted by canonical word."""
    ensure_within(k, effective_limit(limit, ORBIT_LIMIT), "orbit enumeration")
    seen: set[str] = set()
    classes = []
    for w in middle_words(k):
        if w in seen:
            continue
        members = orbit(w)
        seen |= members
        classes.append(OrbitClass(_unique_tree_word(members, k), members))
    classes.sort(key=lambda c: c.canonical)
    return classes


def orbit_summary(k: int, classes: list[OrbitClass] | None = None) -> dict:
    """JSON-ready digest of enumerate_orbits."""
    if classes is None:
        classes = enumerate_orbits(k)
    return {
        "k": k,
        "orbit_count": len(classes),
        "orbits": [{"canonical": c.canonical, "size": c.size} for c in classes],
    }
