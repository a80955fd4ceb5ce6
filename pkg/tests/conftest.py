from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent / "golden"

# every (k, i) with a checked-in digit matrix
GOLDEN_KEYS = [
    (3, 1), (3, 2), (3, 3),
    (4, 1), (4, 2), (4, 3), (4, 4),
    (5, 1), (5, 2), (5, 3), (5, 4), (5, 5),
    (6, 3), (6, 4),
    (7, 3), (7, 4), (7, 5),
    (8, 3), (8, 4),
    (9, 4),
]


def load_golden(k: int, i: int) -> str:
    return (GOLDEN_DIR / f"t{k}_{i}.txt").read_text(encoding="utf-8")


@pytest.fixture
def golden():
    return load_golden
