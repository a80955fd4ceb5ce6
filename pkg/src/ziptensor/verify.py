"""Invariant suites behind the `verify` and `report` commands.

Each check scans k = 2..max_k (structural checks skip degenerate widths),
stops at the first violation, and reports it as a minimal counterexample.
Checks are independent and may run in separate worker processes; records
are re-ordered after collection so output never depends on scheduling.
"""
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb

import numpy as np

from .blocks import (AXES, anti_transpose, blocks, blocks_laminar,
                     predicted_zeros, sigma, strips, upper_unitriangular)
from .compositions import p_set, q_set
from .dihedral import enumerate_orbits
from .errors import DomainError, StructureViolationError
from .trees import (catalan, count_trees_by_length, decode, encode, narayana,
                    tree_words)
from .zippering import build_tensor, unzip, zipper

DEFAULT_MAX_K = {
    "counts": 12,
    "catalan": 12,
    "narayana": 12,
    "zeros": 10,
    "strips": 10,
    "laminar": 10,
    "antitranspose": 10,
    "dihedral": 9,
    "roundtrip": 10,
    "boundary": 10,
}
CHECK_ORDER = tuple(DEFAULT_MAX_K)


def _check_counts(max_k):
    """Header families: sizes C(k-1,i-1), total 2^(k-1), descending order."""
    for k in range(2, max_k + 1):
        total = 0
        for i in range(1, k + 1):
            rows, cols = p_set(k, i), q_set(k, i)
            expected = comb(k - 1, i - 1)
            if len(rows) != expected or len(cols) != expected:
                return {"k": k, "i": i, "expected": expected,
                        "rows": len(rows), "cols": len(cols)}
            if rows != sorted(set(rows), reverse=True):
                return {"k": k, "i": i, "detail": "row order"}
            if cols != sorted(set(cols), reverse=True):
                return {"k": k, "i": i, "detail": "column order"}
            if any(a[0] < 2 for a in rows):
                return {"k": k, "i": i, "detail": "row first part < 2"}
            total += len(rows)
        if total != 2 ** (k - 1):
            return {"k": k, "expected": 2 ** (k - 1), "actual": total}
    return None


def _check_catalan(max_k):
    for k in range(2, max_k + 1):
        total = sum(count_trees_by_length(k, i) for i in range(1, k + 1))
        if total != catalan(k):
            return {"k": k, "expected": catalan(k), "actual": total}
    return None


def _check_narayana(max_k):
    for k in range(2, max_k + 1):
        for i in range(1, k + 1):
            actual = count_trees_by_length(k, i)
            if actual != narayana(k, i):
                return {"k": k, "i": i, "expected": narayana(k, i),
                        "actual": actual}
    return None


def _check_zeros(max_k):
    for k in range(3, max_k + 1):
        for i in range(2, k):
            actual = {(int(r), int(c)) for r, c in
                      zip(*np.nonzero(build_tensor(k, i).entries == 0))}
            predicted = set(predicted_zeros(k, i))
            if predicted != actual:
                cell = min(predicted ^ actual)
                return {"k": k, "i": i, "cell": list(cell),
                        "predicted": cell in predicted}
    return None


def _trailing_ones(header):
    count = 0
    for part in reversed(header):
        if part != 1:
            break
        count += 1
    return count


def _check_strips(max_k):
    for p in range(1, 13):
        for q in range(1, 13):
            if sum(sigma(t, q) for t in range(1, p + 1)) != sigma(p, q + 1):
                return {"identity": "hockey-stick", "p": p, "q": q}
    for k in range(3, max_k + 1):
        for i in range(2, k + 1):
            per_level = {}
            for q in range(1, i):
                horizontal = strips(k, i, q, "horizontal")
                vertical = strips(k, i, q, "vertical")
                if [s.size for s in horizontal] != [s.size for s in vertical]:
                    return {"k": k, "i": i, "q": q,
                            "detail": "height/width sequences differ"}
                for axis, layer in (("horizontal", horizontal),
                                    ("vertical", vertical)):
                    headers = p_set(k, i) if axis == "horizontal" else q_set(k, i)
                    for s in layer:
                        if _trailing_ones(headers[s.start]) < q:
                            return {"k": k, "i": i, "q": q, "axis": axis,
                                    "start": s.start,
                                    "detail": "leading header lacks trailing ones"}
                per_level[q] = horizontal
            top = strips(k, i, i - 1, "horizontal")
            if len(top) != 1 or top[0].size != comb(k - 1, i - 1):
                return {"k": k, "i": i, "detail": "top strip size"}
            for q in range(1, i - 1):
                for outer in per_level[q + 1]:
                    inner = [s.size for s in per_level[q]
                             if outer.start <= s.start and s.stop <= outer.stop]
                    t = len(inner)
                    if inner != [sigma(j, q) for j in range(1, t + 1)] \
                            or sigma(t, q + 1) != outer.size:
                        return {"k": k, "i": i, "q": q,
                                "outer": [outer.start + 1, outer.stop],
                                "sizes": inner}
    return None


def _check_laminar(max_k):
    for k in range(3, max_k + 1):
        for i in range(2, k + 1):
            family = [b for q in range(1, i) for b in blocks(k, i, q)]
            if family and not blocks_laminar(family):
                return {"k": k, "i": i}
    return None


def _check_antitranspose(max_k):
    for k in range(2, max_k + 1):
        for i in range(1, k + 1):
            image = anti_transpose(build_tensor(k, i))
            if image != build_tensor(k, k + 1 - i):
                return {"k": k, "i": i, "partner": k + 1 - i}
            if 2 * i == k + 1 and image != build_tensor(k, i):
                return {"k": k, "i": i, "detail": "not self-anti-transpose"}
    return None


def _check_dihedral(max_k):
    for k in range(2, max_k + 1):
        try:
            classes = enumerate_orbits(k, limit=max_k)
        except StructureViolationError as exc:
            return {"k": k, "detail": str(exc)}
        if len(classes) != catalan(k):
            return {"k": k, "expected": catalan(k), "actual": len(classes)}
        for cls in classes:
            if cls.size != 2 * (2 * k + 1):
                return {"k": k, "word": cls.canonical, "size": cls.size}
        if {cls.canonical for cls in classes} != set(tree_words(k)):
            return {"k": k, "detail": "canonical words differ from tree words"}
    return None


def _check_roundtrip(max_k):
    for k in range(2, max_k + 1):
        for i in range(1, k + 1):
            for a in p_set(k, i):
                for b in q_set(k, i):
                    if unzip(zipper(a, b)) != (a, b):
                        return {"k": k, "pair": [list(a), list(b)]}
        for w in tree_words(k, limit=max_k):
            if encode(decode(w)) != w:
                return {"k": k, "word": w}
    return None


def _check_boundary(max_k):
    one = np.ones((1, 1), dtype=np.uint8)
    for k in range(3, max_k + 1):
        for i in (1, k):
            if not np.array_equal(build_tensor(k, i).entries, one):
                return {"k": k, "i": i}
        expected = upper_unitriangular(k - 1)
        for i in (2, k - 1):
            if not np.array_equal(build_tensor(k, i).entries, expected):
                return {"k": k, "i": i}
    return None


_CHECKS = {
    "counts": _check_counts,
    "catalan": _check_catalan,
    "narayana": _check_narayana,
    "zeros": _check_zeros,
    "strips": _check_strips,
    "laminar": _check_laminar,
    "antitranspose": _check_antitranspose,
    "dihedral": _check_dihedral,
    "roundtrip": _check_roundtrip,
    "boundary": _check_boundary,
}


def run_check(name: str, max_k: int | None = None) -> dict:
    """Run one named suite and wrap the outcome in a report record."""
    if name not in _CHECKS:
        raise DomainError(
            f"unknown check {name!r}; valid: {', '.join(CHECK_ORDER)}")
    bound = max_k if max_k is not None else DEFAULT_MAX_K[name]
    start = time.perf_counter()
    counterexample = _CHECKS[name](bound)
    return {
        "check": name,
        "max_k": bound,
        "passed": counterexample is None,
        "counterexample": counterexample,
        "elapsed_seconds": round(time.perf_counter() - start, 3),
    }


def run_checks(names=None, max_k: int | None = None, jobs: int = 1) -> dict:
    """Run the selected suites and aggregate a conformance report."""
    selected = list(names) if names is not None else list(CHECK_ORDER)
    for name in selected:
        if name not in _CHECKS:
            raise DomainError(
                f"unknown check {name!r}; valid: {', '.join(CHECK_ORDER)}")
    start = time.perf_counter()
    if jobs > 1 and len(selected) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_check, name, max_k)
                       for name in selected]
            records = [f.result() for f in futures]
    else:
        records = [run_check(name, max_k) for name in selected]
    from ziptensor import __version__
    return {
        "tool": "ziptensor",
        "version": __version__,
        "checks": records,
        "passed": all(r["passed"] for r in records),
        "elapsed_seconds": round(time.perf_counter() - start, 3),
    }
