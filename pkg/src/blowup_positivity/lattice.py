"""Picard lattice of the blow-up of P^2 at r points.

A class ``dH - sum(n_i E_i)`` is stored as the degree ``d`` together with the
tuple ``(n_1, ..., n_r)``.  With this sign convention the exceptional divisor
``E_i`` itself has ``n_i = -1``.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DimensionMismatch(ValueError):
    """Two classes live on blow-ups at different numbers of points."""


@dataclass(frozen=True, order=True)
class DivisorClass:
    degree: int
    mults: tuple[int, ...]

    def __post_init__(self):
        mults = tuple(int(n) for n in self.mults)
        if not mults:
            raise ValueError("a class needs at least one blown-up point (r >= 1)")
        object.__setattr__(self, "mults", mults)
        object.__setattr__(self, "degree", int(self.degree))

    @property
    def r(self) -> int:
        return len(self.mults)

    # -- constructors ----------------------------------------------------

    @classmethod
    def line(cls, r: int) -> "DivisorClass":
        """The pull-back ``H`` of a line."""
        return cls(1, (0,) * r)

    @classmethod
    def exceptional(cls, i: int, r: int) -> "DivisorClass":
        """``E_i`` with 1-based index ``i``."""
        if not 1 <= i <= r:
            raise ValueError(f"index {i} out of range for r={r}")
        mults = [0] * r
        mults[i - 1] = -1
        return cls(0, tuple(mults))

    @classmethod
    def uniform(cls, d: int, r: int, m: int) -> "DivisorClass":
        return cls(d, (m,) * r)

    @classmethod
    def parse(cls, text: str) -> "DivisorClass":
        """Parse the ``"d; n1 n2 ... nr"`` encoding."""
        head, sep, tail = text.partition(";")
        if not sep:
            raise ValueError(f"malformed class {text!r}: expected 'd; n1 ... nr'")
        try:
            degree = int(head.strip())
            mults = tuple(int(tok) for tok in tail.split())
        except ValueError:
            raise ValueError(f"malformed class {text!r}: non-integer entry") from None
        if not mults:
            raise ValueError(f"malformed class {text!r}: no multiplicities")
        return cls(degree, mults)

    def __str__(self) -> str:
        return f"{self.degree}; " + " ".join(str(n) for n in self.mults)

    def pretty(self) -> str:
        """Human readable ``6H - 3E1 - 2E2 ...`` form."""
        head = {0: None, 1: "H", -1: "-H"}.get(self.degree, f"{self.degree}H")
        parts = [] if head is None else [head]
        for i, n in enumerate(self.mults, 1):
            if n == 0:
                continue
            coef = -n
            sign = "+" if coef > 0 else "-"
            mag = "" if abs(coef) == 1 else str(abs(coef))
            parts.append(f"{sign} {mag}E{i}")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    # -- group structure ---------------------------------------------------

    def _check(self, other: "DivisorClass"):
        if self.r != other.r:
            raise DimensionMismatch(f"r mismatch: {self.r} vs {other.r}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.degree + other.degree,
                            tuple(a + b for a, b in zip(self.mults, other.mults)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.degree - other.degree,
                            tuple(a - b for a, b in zip(self.mults, other.mults)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.degree, tuple(-n for n in self.mults))

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.degree, tuple(k * n for n in self.mults))

    __rmul__ = __mul__

    def padded(self, r: int) -> "DivisorClass":
        """Same class viewed on a blow-up at ``r >= self.r`` points."""
        if r < self.r:
            raise ValueError(f"cannot pad r={self.r} down to {r}")
        return DivisorClass(self.degree, self.mults + (0,) * (r - self.r))

    def is_normalized(self) -> bool:
        return all(a >= b for a, b in zip(self.mults, self.mults[1:]))

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)


@dataclass(frozen=True)
class NumericalProfile:
    self_int: int
    k_degree: int
    chi: int
    expected_dim: int
    raw_virtual_dim: int


def sort_permutation(A: DivisorClass) -> tuple[int, ...]:
    """Stable permutation ``p`` with ``normalize(A).mults[j] == A.mults[p[j]]``."""
    return tuple(sorted(range(A.r), key=lambda i: -A.mults[i]))


def normalize(A: DivisorClass) -> DivisorClass:
    """Sort the multiplicities into non-increasing order."""
    return DivisorClass(A.degree, tuple(sorted(A.mults, reverse=True)))


def intersect(A: DivisorClass, B: DivisorClass) -> int:
    """Intersection form of signature (1, -1^r)."""
    if A.r != B.r:
        raise DimensionMismatch(f"r mismatch: {A.r} vs {B.r}")
    return A.degree * B.degree - sum(a * b for a, b in zip(A.mults, B.mults))


def canonical_class(r: int) -> DivisorClass:
    """``K = -3H + sum E_i``."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return DivisorClass(-3, (-1,) * r)


def k_degree(A: DivisorClass) -> int:
    # A.K = -3d + sum(n_i), no need to build K
    return -3 * A.degree + sum(A.mults)


def _binom2(n: int) -> int:
    # C(n, 2) as a count of conditions / monomials; zero for n < 2
    return n * (n - 1) // 2 if n >= 2 else 0


def raw_virtual_dim(A: DivisorClass) -> int:
    """``C(d+2, 2) - 1 - sum C(n_i+1, 2)`` without clamping.

    Only positive multiplicities impose conditions, and a negative degree
    contributes no monomials.
    """
    return _binom2(A.degree + 2) - 1 - sum(_binom2(n + 1) for n in A.mults if n > 0)


def profile(A: DivisorClass) -> NumericalProfile:
    s = intersect(A, A)
    k = k_degree(A)
    raw = raw_virtual_dim(A)
    return NumericalProfile(
        self_int=s,
        k_degree=k,
        chi=(s - k) // 2 + 1,
        expected_dim=max(raw, -1),
        raw_virtual_dim=raw,
    )


def is_minus_one_class(A: DivisorClass) -> bool:
    """Numerical test ``A^2 = A.K = -1``; says nothing about irreducibility."""
    return intersect(A, A) == -1 and k_degree(A) == -1


def adjoint_twist(L: DivisorClass) -> DivisorClass:
    """``N = L - K``, so that ``L = K + N``."""
    return DivisorClass(L.degree + 3, tuple(n + 1 for n in L.mults))


def support(L: DivisorClass) -> DivisorClass:
    """Drop zero multiplicities (after sorting), keeping at least one entry."""
    mults = [n for n in sorted(L.mults, reverse=True) if n != 0]
    return DivisorClass(L.degree, tuple(mults) if mults else (0,))


def format_classes(classes: Iterable[DivisorClass]) -> str:
    return "\n".join(str(c) for c in classes)


def parse_mults(text: str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(text, str):
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    return tuple(int(n) for n in text)
