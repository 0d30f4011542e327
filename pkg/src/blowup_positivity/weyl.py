"""Cremona/Weyl group action on the Picard lattice.

The group ``W_r`` is generated by the Cremona reflection in
``s0 = H - E1 - E2 - E3`` and the transpositions in ``s_i = E_i - E_{i+1}``.
Exceptional ((-1)-) classes form a single orbit, the orbit of ``E_r``, which
lies in the fundamental domain ``{A : A.s >= 0 for every simple root s}``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Optional, Sequence

from .lattice import (
    DivisorClass,
    intersect,
    is_minus_one_class,
    normalize,
)

#: default degree cap for (-1)-class searches when the orbit is infinite (r >= 9)
DEFAULT_DEGREE_CAP = 32


class NotApplicable(ValueError):
    """The operation is undefined for this number of points."""


@dataclass(frozen=True)
class Root:
    """A simple root; ``index`` 0 is the Cremona root, ``i >= 1`` is ``E_i - E_{i+1}``."""
    index: int
    r: int

    def __post_init__(self):
        if self.index == 0:
            if self.r < 3:
                raise NotApplicable(f"Cremona root needs r >= 3, got r={self.r}")
        elif not 1 <= self.index <= self.r - 1:
            raise ValueError(f"no simple root s_{self.index} for r={self.r}")

    @property
    def kind(self) -> str:
        return "cremona" if self.index == 0 else "swap"

    @property
    def as_class(self) -> DivisorClass:
        mults = [0] * self.r
        if self.index == 0:
            mults[:3] = [1, 1, 1]
            return DivisorClass(1, tuple(mults))
        mults[self.index - 1] = -1
        mults[self.index] = 1
        return DivisorClass(0, tuple(mults))


def simple_roots(r: int) -> list[Root]:
    roots = [Root(0, r)] if r >= 3 else []
    return roots + [Root(i, r) for i in range(1, r)]


def reflect(A: DivisorClass, s: Root) -> DivisorClass:
    """``A + (A.s) s``; an involution preserving the intersection form and K."""
    if A.r != s.r:
        raise ValueError(f"r mismatch: class has r={A.r}, root has r={s.r}")
    return _apply(A, s.index)


def _apply(A: DivisorClass, i: int) -> DivisorClass:
    # generator gamma_i written out directly; same as A + (A.s_i) s_i
    n = list(A.mults)
    if i == 0:
        t = A.degree - n[0] - n[1] - n[2]
        n[0] += t
        n[1] += t
        n[2] += t
        return DivisorClass(A.degree + t, tuple(n))
    n[i - 1], n[i] = n[i], n[i - 1]
    return DivisorClass(A.degree, tuple(n))


@dataclass(frozen=True)
class ReductionTrace:
    start: DivisorClass
    end: DivisorClass
    steps: tuple[int, ...]
    non_effective: bool = False

    @property
    def cremona_steps(self) -> int:
        return sum(1 for s in self.steps if s == 0)

    def replay(self) -> DivisorClass:
        A = self.start
        for i in self.steps:
            A = _apply(A, i)
        return A

    def to_json(self) -> str:
        return json.dumps(list(self.steps))


def in_fundamental_domain(A: DivisorClass) -> bool:
    n = A.mults
    if any(a < b for a, b in zip(n, n[1:])):
        return False
    return A.r < 3 or A.degree - n[0] - n[1] - n[2] >= 0


def reduce_to_fundamental(A: DivisorClass) -> ReductionTrace:
    """Alternate sorting and Cremona steps until ``A`` meets every simple root
    non-negatively, or its degree drops below zero.

    Sorting is done by adjacent transpositions so every swap appears in the
    trace.  Each Cremona step is applied only when ``A.s0 < 0`` and lowers the
    degree by exactly that amount, which bounds the loop.
    """
    if A.r < 3:
        raise NotApplicable(f"reduction needs r >= 3, got r={A.r}")
    steps: list[int] = []
    cur = A
    while True:
        n = list(cur.mults)
        # insertion sort, recording each adjacent swap as generator index j+1
        for k in range(1, len(n)):
            j = k - 1
            while j >= 0 and n[j] < n[j + 1]:
                n[j], n[j + 1] = n[j + 1], n[j]
                steps.append(j + 1)
                j -= 1
        cur = DivisorClass(cur.degree, tuple(n))
        if cur.degree < 0:
            return ReductionTrace(A, cur, tuple(steps), non_effective=True)
        if cur.degree - n[0] - n[1] - n[2] >= 0:
            return ReductionTrace(A, cur, tuple(steps))
        cur = _apply(cur, 0)
        steps.append(0)


def _er_pattern(r: int) -> DivisorClass:
    return DivisorClass(0, (0,) * (r - 1) + (-1,))


def _small_r_exceptionals(r: int) -> list[DivisorClass]:
    if r == 1:
        return [DivisorClass(0, (-1,))]
    return [DivisorClass(0, (-1, 0)), DivisorClass(0, (0, -1)), DivisorClass(1, (1, 1))]


def is_exceptional_class(A: DivisorClass) -> tuple[bool, Optional[ReductionTrace]]:
    """Decide whether ``A`` lies in the W_r-orbit of ``E_r``.

    Returns the verdict together with the reduction trace witnessing it (None
    when the numerical short-circuit fires or r <= 2, where the finite list is
    used).
    """
    if A.r <= 2:
        return A in _small_r_exceptionals(A.r), None
    if not is_minus_one_class(A):
        return False, None
    trace = reduce_to_fundamental(A)
    return trace.end == _er_pattern(A.r), trace


def _upward_neighbours(d: int, mults: tuple[int, ...], cap: Optional[int]):
    """Degree-raising Cremona images of a sorted class, as sorted raw tuples.

    A positive-degree (-1)-class always has ``e < n1 + n2 + n3``, so the
    Cremona step at its three largest points lowers the degree.  Reversing
    that, the whole orbit below a cap is reached from ``E_r`` using only
    moves that raise the degree.
    """
    vals: list[int] = []
    cnts: list[int] = []
    for n in mults:
        if vals and vals[-1] == n:
            cnts[-1] += 1
        else:
            vals.append(n)
            cnts.append(1)
    k = len(vals)
    for x in range(k):
        a = vals[x]
        for y in range(x, k):
            b = vals[y]
            if y == x and cnts[x] < 2:
                continue
            for z in range(y, k):
                c = vals[z]
                t = d - a - b - c
                if t <= 0:
                    # later c only get smaller, so t only grows; keep scanning
                    continue
                if cap is not None and d + t > cap:
                    break
                if z == y and cnts[y] < (3 if y == x else 2):
                    continue
                rest = list(mults)
                rest.remove(a)
                rest.remove(b)
                rest.remove(c)
                rest += (a + t, b + t, c + t)
                rest.sort(reverse=True)
                yield d + t, tuple(rest)


@lru_cache(maxsize=None)
def exceptional_patterns(r: int, max_degree: Optional[int] = None) -> tuple[DivisorClass, ...]:
    """Normalized representatives of the (-1)-classes of degree <= max_degree.

    Search over normalized forms starting at ``E_r``, see
    ``_upward_neighbours`` for why degree-raising moves suffice.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if r <= 2:
        pats = {normalize(c) for c in _small_r_exceptionals(r)}
        return tuple(sorted(c for c in pats if max_degree is None or c.degree <= max_degree))
    if max_degree is None and r >= 9:
        raise NotApplicable(f"the (-1)-orbit is infinite for r={r}; pass a finite max_degree")
    start = (0, (0,) * (r - 1) + (-1,))
    seen = {start}
    queue = deque([start])
    while queue:
        d, mults = queue.popleft()
        for nxt in _upward_neighbours(d, mults, max_degree):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return tuple(sorted(DivisorClass(d, m) for d, m in seen))


def _distinct_permutations(values: Sequence[int]):
    # multiset permutations without the factorial blow-up of itertools.permutations
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts)
    n = len(values)
    buf = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(buf)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                buf[pos] = k
                yield from rec(pos + 1)
                counts[k] += 1

    yield from rec(0)


def enumerate_exceptional_classes(r: int, max_degree: Optional[int] = None) -> list[DivisorClass]:
    """All (-1)-classes of degree <= max_degree, every ordering of the points
    listed separately, sorted by (degree, mults)."""
    out = []
    for pat in exceptional_patterns(r, max_degree):
        out.extend(DivisorClass(pat.degree, p) for p in _distinct_permutations(pat.mults))
    return sorted(out)


def worst_arrangement(C: DivisorClass, A: DivisorClass) -> DivisorClass:
    """The permutation of ``C`` minimizing ``A.C``: pair the largest entries of
    ``C`` with the largest multiplicities of ``A`` (rearrangement inequality)."""
    order = sorted(range(A.r), key=lambda i: -A.mults[i])
    vals = sorted(C.mults, reverse=True)
    n = [0] * A.r
    for pos, v in zip(order, vals):
        n[pos] = v
    return DivisorClass(C.degree, tuple(n))


class NefStatus(Enum):
    NEF = "Nef"
    NOT_NEF = "NotNef"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class NefResult:
    status: NefStatus
    witness: Optional[DivisorClass] = None
    trace: Optional[ReductionTrace] = None
    checked: list = field(default_factory=list, compare=False, repr=False)

    def __bool__(self) -> bool:
        return self.status is NefStatus.NEF


def most_negative_exceptional(A: DivisorClass, max_degree: Optional[int] = None):
    """(-1)-class minimizing ``A.C`` among classes of degree <= max_degree, with
    the value; ties go to the lowest degree."""
    best = None
    for pat in exceptional_patterns(A.r, max_degree):
        C = worst_arrangement(pat, A)
        v = intersect(A, C)
        if best is None or v < best[1]:
            best = (C, v)
    return best


def certify_nef(A: DivisorClass, cap: int = DEFAULT_DEGREE_CAP) -> NefResult:
    """Tri-state nefness test.

    For r <= 8 the cone of curves is spanned by the finitely many (-1)-curves
    (plus ``H - E1`` when r = 1), so the answer is exact.  For r >= 9 nefness is
    only certified by reducing ``A`` to a non-negative multiple of ``H``;
    non-nefness by a (-1)-class of degree <= ``cap`` meeting ``A`` negatively.
    """
    r = A.r
    if r <= 8:
        C, v = most_negative_exceptional(A)
        if v < 0:
            return NefResult(NefStatus.NOT_NEF, C)
        if r == 1 and A.degree - A.mults[0] < 0:
            return NefResult(NefStatus.NOT_NEF, DivisorClass(1, (1,)))
        if A.degree < 0:
            return NefResult(NefStatus.NOT_NEF, DivisorClass.line(r))
        if intersect(A, A) < 0:
            # cannot happen when the cone is spanned by the (-1)-curves; kept as a guard
            return NefResult(NefStatus.NOT_NEF, A)
        return NefResult(NefStatus.NEF)
    trace = reduce_to_fundamental(A)
    end = trace.end
    if not trace.non_effective and end.degree >= 0 and all(n == 0 for n in end.mults):
        return NefResult(NefStatus.NEF, trace=trace)
    C, v = most_negative_exceptional(A, cap)
    if v < 0:
        return NefResult(NefStatus.NOT_NEF, C, trace=trace)
    return NefResult(NefStatus.UNKNOWN, trace=trace)


def simple_root_coordinates(C: DivisorClass) -> tuple[int, ...]:
    """Coefficients ``a_0..a_{r-1}`` with ``C = sum a_i s_i + E_r``.

    Exists for every class in the orbit of ``E_r`` (the difference lies in the
    root lattice).  Non-negativity of the coefficients is reported by the
    caller, not guaranteed here.
    """
    r = C.r
    if r < 3:
        raise NotApplicable("simple root coordinates need r >= 3")
    v = C - _er_pattern(r)
    nu = v.mults
    # s0 adds a_0 to n_1..n_3; s_i moves a_i from n_i to n_{i+1}
    a = [v.degree] + [0] * (r - 1)
    for k in range(1, r):
        a[k] = (a[0] if k <= 3 else 0) + (a[k - 1] if k >= 2 else 0) - nu[k - 1]
    if nu[r - 1] != (a[0] if r <= 3 else 0) + a[r - 1]:
        raise ValueError(f"{C} - E_r is not in the root lattice")
    return tuple(a)


__all__ = [
    "DEFAULT_DEGREE_CAP", "NefResult", "NefStatus", "NotApplicable", "ReductionTrace",
    "Root", "certify_nef", "enumerate_exceptional_classes", "exceptional_patterns",
    "in_fundamental_domain", "is_exceptional_class", "most_negative_exceptional",
    "reduce_to_fundamental", "reflect", "simple_root_coordinates", "simple_roots",
    "worst_arrangement",
]
