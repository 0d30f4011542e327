"""Exact predicates for the combinatorial inequalities behind the criteria,
plus brute-force sweeps over finite grids.

All fractions are cleared by fixed integer factors, so every comparison is
between Python ints.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np


class InvalidInput(ValueError):
    pass


@dataclass(frozen=True)
class MultiplicityVector:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise InvalidInput("multiplicity vector must be non-empty")
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise InvalidInput(f"multiplicities must be non-increasing, got {vals}")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def _vector(n) -> tuple[int, ...]:
    if isinstance(n, MultiplicityVector):
        return n.values
    return MultiplicityVector(tuple(n)).values


class LemmaOutcome(Enum):
    HOLDS_STRICT = "HoldsStrict"
    HOLDS_EQUALITY = "HoldsEquality"
    EXCLUDED = "Excluded"
    VIOLATED = "Violated"


def lemma_key_sides(m: Sequence[int], n: Sequence[int]) -> tuple[int, int]:
    """``((r+3) a (b - n_r), (r+2) c^2)`` with ``a = sum m^2``, ``b = sum n^2``,
    ``c = sum m n``."""
    r = len(n)
    a = sum(x * x for x in m)
    b = sum(x * x for x in n)
    c = sum(x * y for x, y in zip(m, n))
    return (r + 3) * a * (b - n[-1]), (r + 2) * c * c


def lemma_key(m: Sequence[int], n) -> LemmaOutcome:
    """Classify ``(r+3)/(r+2) (sum m_i^2)(sum n_i^2 - n_r) >= (sum m_i n_i)^2``.

    ``m`` is any vector of non-negative integers, ``n`` is non-increasing
    with ``n_r > 0`` and ``n_1 >= 2``.  The case ``r = 2, n = (2, 2)`` is
    outside the statement and reported as EXCLUDED.
    """
    n = _vector(n)
    m = tuple(int(x) for x in m)
    r = len(n)
    if r < 2:
        raise InvalidInput("need r >= 2")
    if len(m) != r:
        raise InvalidInput(f"length mismatch: {len(m)} vs {r}")
    if n[-1] <= 0 or n[0] < 2:
        raise InvalidInput(f"need n_r > 0 and n_1 >= 2, got {n}")
    if any(x < 0 for x in m):
        raise InvalidInput(f"m must be non-negative, got {m}")
    if r == 2 and n == (2, 2):
        return LemmaOutcome.EXCLUDED
    lhs, rhs = lemma_key_sides(m, n)
    if lhs > rhs:
        return LemmaOutcome.HOLDS_STRICT
    if lhs == rhs:
        return LemmaOutcome.HOLDS_EQUALITY
    return LemmaOutcome.VIOLATED


def lemma_key2_sides(n: Sequence[int]) -> tuple[int, int]:
    r = len(n)
    a = sum(x * x for x in n)
    b = sum(n)
    return r * (3 * r + 40) * (a - n[-1]), (3 * r + 39) * b * b


def lemma_key2(n) -> bool:
    """``(3r+40) r / (3r+39) (sum n_i^2 - n_r) > (sum n_i)^2`` for r >= 9,
    ``n_r >= 3`` and ``n_1 >= 12``."""
    n = _vector(n)
    if len(n) < 9 or n[-1] < 3 or n[0] <= 11:
        raise InvalidInput(f"need r >= 9, n_r >= 3, n_1 > 11; got {n}")
    lhs, rhs = lemma_key2_sides(n)
    return lhs > rhs


def lemma_key1_sides(n: Sequence[int]) -> tuple[int, int]:
    # both sides of (r+3) r/(r+2) (a - 1) > (b + 1/2)^2 multiplied by 4 (r+2)
    r = len(n)
    a = sum(x * x for x in n)
    b = sum(n)
    return 4 * r * (r + 3) * (a - 1), (r + 2) * (2 * b + 1) ** 2


def lemma_key1(n) -> bool:
    """``(r+3) r / (r+2) (sum n_i^2 - 1) > (sum n_i + 1/2)^2`` for r >= 2,
    ``n_r > 0`` and ``n_1 >= 12``."""
    n = _vector(n)
    if len(n) < 2 or n[-1] <= 0 or n[0] < 12:
        raise InvalidInput(f"need r >= 2, n_r > 0, n_1 >= 12; got {n}")
    lhs, rhs = lemma_key1_sides(n)
    return lhs > rhs


def xu_lower_bound(e: int, n: Sequence[int]) -> bool:
    """Degree bound ``e^2 >= sum n_i^2 - n_s`` for an irreducible curve through
    general points, ``n_s`` the last non-zero entry.  Necessary only."""
    n = tuple(int(x) for x in n)
    if e < 1:
        raise InvalidInput(f"need e >= 1, got {e}")
    positive = [x for x in n if x > 0]
    if not positive:
        raise InvalidInput("need at least one positive multiplicity")
    n_s = [x for x in n if x != 0][-1]
    return e * e >= sum(x * x for x in n) - n_s


# -- sweeps -------------------------------------------------------------


def nonincreasing(length: int, lo: int, hi: int) -> Iterable[tuple[int, ...]]:
    """All non-increasing tuples with entries in [lo, hi]."""
    for combo in itertools.combinations_with_replacement(range(hi, lo - 1, -1), length):
        yield combo


def _is_stated_equality_family(n: tuple[int, ...]) -> bool:
    r = len(n)
    return n == (2,) + (1,) * (r - 1) or (r == 3 and n == (2, 2, 2))


def sweep_lemma_key(r_values=range(2, 7), m_max: int = 4, n_max: int = 5) -> dict:
    """Exhaustive check over m in [0, m_max]^r and non-increasing n in
    [1, n_max]^r with n_1 >= 2 (r = 2, n = (2, 2) skipped).

    Evaluated with numpy int64, exact at this size; ``equality_cases`` counts
    the equalities with m != 0, and ``unexpected_equalities`` those outside
    the two stated families.
    """
    cases = violations = equalities = unexpected = 0
    for r in r_values:
        M = np.array(list(itertools.product(range(m_max + 1), repeat=r)), dtype=np.int64)
        a = (M * M).sum(axis=1)
        nonzero = a > 0
        for n in nonincreasing(r, 1, n_max):
            if n[0] < 2 or (r == 2 and n == (2, 2)):
                continue
            nv = np.array(n, dtype=np.int64)
            b = int((nv * nv).sum())
            c = M @ nv
            lhs = (r + 3) * a * (b - n[-1])
            rhs = (r + 2) * c * c
            cases += len(M)
            violations += int((lhs < rhs).sum())
            eq = (lhs == rhs) & nonzero
            k = int(eq.sum())
            equalities += k
            if k and not _is_stated_equality_family(n):
                unexpected += k
    return {"cases": cases, "violations": violations,
            "equality_cases": equalities, "unexpected_equalities": unexpected}


def sweep_lemma_key2(n1_values=range(12, 16), random_samples: int = 20000, seed: int = 0) -> dict:
    """r = 9 exhaustively; r = 10, 11 by random non-increasing samples."""
    cases = violations = 0
    for n1 in n1_values:
        for tail in nonincreasing(8, 3, n1):
            cases += 1
            violations += not lemma_key2((n1,) + tail)
    rng = random.Random(seed)
    for r in (10, 11):
        for _ in range(random_samples):
            n1 = rng.choice(list(n1_values))
            tail = sorted((rng.randint(3, n1) for _ in range(r - 1)), reverse=True)
            cases += 1
            violations += not lemma_key2((n1, *tail))
    return {"cases": cases, "violations": violations, "equality_cases": 0}


def sweep_lemma_key1(r_values=range(2, 7), n1_values=range(12, 16)) -> dict:
    cases = violations = 0
    for r in r_values:
        for n1 in n1_values:
            for tail in nonincreasing(r - 1, 1, n1):
                cases += 1
                violations += not lemma_key1((n1,) + tail)
    return {"cases": cases, "violations": violations, "equality_cases": 0}
