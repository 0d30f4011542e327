"""Dimension of linear systems of plane curves with fat points, over F_p.

Degree-e curves with multiplicity >= n_i at r random points of the affine
plane over a large prime field.  A point of multiplicity n imposes the
vanishing of every partial derivative of order < n; the projective dimension
of the system is ``#monomials - 1 - rank``.  Random points can only make the
rank drop, so the result is an upper bound for the general-point dimension
that is sharp with high probability.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .lattice import DivisorClass, intersect, normalize, profile
from .weyl import exceptional_patterns, worst_arrangement

#: largest prime below 2^31; products of two residues fit in int64
DEFAULT_PRIME = 2_147_483_647
DEFAULT_SEED = 0
DEFAULT_TRIALS = 3
MAX_POINT_RETRIES = 100


class InvalidPrime(ValueError):
    pass


class RetryExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class SystemDimensionReport:
    system: DivisorClass
    expected_dim: int
    actual_dim: int
    special: bool
    prime: int
    seed: int
    matrix_shape: tuple[int, int]

    def to_dict(self) -> dict:
        out = asdict(self)
        out["system"] = str(self.system)
        out["matrix_shape"] = list(self.matrix_shape)
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def monomial_exponents(e: int) -> np.ndarray:
    """Exponent pairs (a, b) of x^a y^b, a + b <= e (dehomogenized at z = 1)."""
    return np.array([(a, b) for a in range(e + 1) for b in range(e + 1 - a)], dtype=np.int64)


def _falling(e: int, p: int) -> np.ndarray:
    # F[a, i] = a (a-1) ... (a-i+1) mod p
    F = np.zeros((e + 1, e + 1), dtype=np.int64)
    for a in range(e + 1):
        acc = 1
        for i in range(a + 1):
            F[a, i] = acc
            acc = acc * (a - i) % p
    return F


def _powers(x: int, e: int, p: int) -> np.ndarray:
    out = np.empty(e + 1, dtype=np.int64)
    acc = 1
    for k in range(e + 1):
        out[k] = acc
        acc = acc * x % p
    return out


def random_points(r: int, prime: int, seed: int) -> list[tuple[int, int]]:
    rng = np.random.default_rng(seed)
    pts: list[tuple[int, int]] = []
    retries = 0
    while len(pts) < r:
        x, y = (int(v) for v in rng.integers(0, prime, size=2))
        if (x, y) in pts:
            retries += 1
            if retries > MAX_POINT_RETRIES:
                raise RetryExhausted("could not draw distinct points")
            continue
        pts.append((x, y))
    return pts


def condition_matrix(system: DivisorClass, points, prime: int) -> np.ndarray:
    """Rows: ``d^{i+j}/dx^i dy^j f (p_k) = 0`` for ``i + j < n_k``.
    Columns: the monomials of degree <= e in x, y."""
    e = system.degree
    mono = monomial_exponents(e)
    A, B = mono[:, 0], mono[:, 1]
    F = _falling(e, prime)
    rows = []
    for n, (x, y) in zip(system.mults, points):
        if n <= 0:
            continue
        px, py = _powers(x, e, prime), _powers(y, e, prime)
        for i in range(n):
            for j in range(n - i):
                ok = (A >= i) & (B >= j)
                ai = np.where(ok, A - i, 0)
                bj = np.where(ok, B - j, 0)
                v = F[A, np.minimum(i, A)] * F[B, np.minimum(j, B)] % prime
                v = v * px[ai] % prime * py[bj] % prime
                rows.append(np.where(ok, v, 0))
    if not rows:
        return np.zeros((0, len(mono)), dtype=np.int64)
    return np.vstack(rows)


def rank_mod_p(M: np.ndarray, prime: int) -> int:
    """Rank over F_p by Gaussian elimination; entries must lie in [0, p)."""
    M = M.copy() % prime
    rows, cols = M.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(M[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            M[[rank, piv]] = M[[piv, rank]]
        inv = pow(int(M[rank, c]), -1, prime)
        M[rank, c:] = M[rank, c:] * inv % prime
        below = M[rank + 1:, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = rank + 1 + hit
            f = M[idx, c][:, None]
            M[idx, c:] = (M[idx, c:] - f * M[rank, c:] % prime) % prime
        rank += 1
    return rank


def actual_dimension(system: DivisorClass, prime: int = DEFAULT_PRIME,
                     seed: int = DEFAULT_SEED) -> SystemDimensionReport:
    e = system.degree
    if e < 1:
        raise ValueError(f"degree must be >= 1, got {e}")
    if any(n < 0 for n in system.mults):
        raise ValueError("multiplicities must be non-negative")
    if prime <= e:
        raise InvalidPrime(f"prime {prime} must exceed the degree {e}")
    pts = random_points(system.r, prime, seed)
    M = condition_matrix(system, pts, prime)
    cols = (e + 1) * (e + 2) // 2
    rank = rank_mod_p(M, prime) if M.shape[0] else 0
    actual = cols - 1 - rank
    expected = profile(system).expected_dim
    return SystemDimensionReport(system, expected, actual, actual > expected, prime, seed,
                                 (M.shape[0], cols))


def _best_of(system, trials, prime, seed) -> SystemDimensionReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    best = None
    for t in range(trials):
        rep = actual_dimension(system, prime, seed + t)
        if best is None or rep.actual_dim < best.actual_dim:
            best = rep
        if best.actual_dim == best.expected_dim:
            # the expected dimension is a floor; no further trial can go lower
            break
    return best


def is_special(system: DivisorClass, trials: int = DEFAULT_TRIALS,
               prime: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED) -> bool:
    """Speciality of the smallest dimension seen over ``trials`` point sets."""
    return _best_of(system, trials, prime, seed).special


def curve_class_effective(system: DivisorClass, trials: int = DEFAULT_TRIALS,
                          prime: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED) -> bool:
    return _best_of(system, trials, prime, seed).actual_dim >= 0


def predicted_dimension(system: DivisorClass, cap: Optional[int] = None) -> int:
    """Dimension predicted by peeling off (-1)-curves in the base locus.

    While some (-1)-class ``C`` has ``L.C = -t < 0``, replace ``L`` by
    ``L - tC``; then report ``max(chi - 1, -1)`` of what remains, or -1 if its
    degree went negative.  For r <= 8 general points the residual system is
    nef and this is the true dimension; beyond that it is the SHGH prediction
    restricted to (-1)-classes of degree <= ``cap``.
    """
    L = normalize(system)
    limit = None if L.r <= 8 else (cap if cap is not None else 32)
    pats = exceptional_patterns(L.r, limit)
    while True:
        if L.degree < 0:
            return -1
        worst = None
        for P in pats:
            C = worst_arrangement(P, L)
            v = intersect(L, C)
            if v < 0 and (worst is None or v < worst[1]):
                worst = (C, v)
        if worst is None:
            break
        C, v = worst
        L = normalize(L - (-v) * C)
    return max(profile(L).chi - 1, -1)
