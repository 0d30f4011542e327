"""Certifiers for ampleness, global generation and very ampleness of
``L = dH - sum m_i E_i`` on the blow-up of P^2 at r general points.

Every certifier returns a :class:`Verdict` carrying one record per
hypothesis.  A record keeps both sides of its inequality as integers, with
all denominators and square roots cleared, so a certificate can be
re-checked by hand.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .lattice import DivisorClass, intersect, normalize
from .weyl import (
    DEFAULT_DEGREE_CAP,
    NefStatus,
    certify_nef,
    exceptional_patterns,
    most_negative_exceptional,
    worst_arrangement,
)

SCHEMA_VERSION = 1


class Property(Enum):
    AMPLE = "Ample"
    GLOBALLY_GENERATED = "GloballyGenerated"
    VERY_AMPLE = "VeryAmple"


class Outcome(Enum):
    CERTIFIED = "Certified"
    NOT_CERTIFIED = "NotCertified"
    CONDITIONAL = "Conditional"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class Hypothesis:
    label: str
    lhs: int
    rhs: int
    relation: str  # ">" or ">="

    @property
    def passed(self) -> bool:
        return self.lhs > self.rhs if self.relation == ">" else self.lhs >= self.rhs

    def __str__(self):
        mark = "ok" if self.passed else "FAIL"
        return f"{self.label}: {self.lhs} {self.relation} {self.rhs} [{mark}]"

    def to_dict(self) -> dict:
        return {"label": self.label, "lhs": self.lhs, "rhs": self.rhs,
                "relation": self.relation, "pass": self.passed}


@dataclass
class Verdict:
    property: Property
    outcome: Outcome
    criterion: str
    hypotheses: list[Hypothesis] = field(default_factory=list)
    witnesses: list[DivisorClass] = field(default_factory=list)
    conjecture: Optional[str] = None
    notes: dict = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.outcome is Outcome.CERTIFIED

    def failed(self) -> list[Hypothesis]:
        return [h for h in self.hypotheses if not h.passed]

    def record(self, label: str) -> Hypothesis:
        for h in self.hypotheses:
            if h.label == label:
                return h
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "property": self.property.value,
            "criterion": self.criterion,
            "outcome": self.outcome.value,
            "conjecture": self.conjecture,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "witnesses": [str(w) for w in self.witnesses],
            "notes": self.notes,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def __str__(self):
        head = f"{self.criterion}: {self.property.value} {self.outcome.value}"
        if self.conjecture:
            head += f" ({self.conjecture})"
        return "\n".join([head] + ["  " + str(h) for h in self.hypotheses])


@dataclass(frozen=True)
class UniformBundle:
    """``dH - m (E_1 + ... + E_r)``."""
    d: int
    r: int
    m: int

    def as_class(self) -> DivisorClass:
        return DivisorClass.uniform(self.d, self.r, self.m)

    @classmethod
    def from_class(cls, L: DivisorClass) -> "UniformBundle":
        if len(set(L.mults)) != 1:
            raise ValueError(f"{L} is not uniform")
        return cls(L.degree, L.r, L.mults[0])

    def __str__(self):
        return f"d={self.d} r={self.r} m={self.m}"


def _finish(prop: Property, criterion: str, records: list[Hypothesis],
            witnesses=(), notes=None) -> Verdict:
    ok = all(h.passed for h in records)
    return Verdict(prop, Outcome.CERTIFIED if ok else Outcome.NOT_CERTIFIED, criterion,
                   records, list(witnesses), notes=dict(notes or {}))


def _not_applicable(prop: Property, criterion: str, reason: str) -> Verdict:
    return Verdict(prop, Outcome.NOT_APPLICABLE, criterion, notes={"reason": reason})


def _pad(mults: Sequence[int], k: int) -> list[int]:
    return list(mults[:k]) + [0] * max(0, k - len(mults))


def _low_degree_records(d: int, m: Sequence[int], shift: int = 0) -> list[Hypothesis]:
    """The line / conic / nodal cubic hypotheses.  With ``shift = 1`` they are
    the versions written for the adjoint twist ``(d+3; m_i+1)``."""
    p = _pad(m, 7)
    dd = d + 3 * shift
    return [
        Hypothesis("(1)", dd, p[0] + p[1] + 2 * shift, ">"),
        Hypothesis("(2)", 2 * dd, sum(p[:5]) + 5 * shift, ">"),
        Hypothesis("(3)", 3 * dd, 2 * p[0] + sum(p[1:7]) + 8 * shift, ">"),
    ]


def _partial_square_records(dd: int, m: Sequence[int], s_range) -> list[Hypothesis]:
    # dd^2 (s+2) >= (s+3) sum_{i<=s} m_i^2
    out = []
    acc = 0
    sq = [x * x for x in m]
    for s in range(1, len(m) + 1):
        acc += sq[s - 1]
        if s in s_range:
            out.append(Hypothesis(f"(4) s={s}", dd * dd * (s + 2), (s + 3) * acc, ">="))
    return out


def _worst_s(records: list[Hypothesis]) -> Optional[int]:
    fam = [h for h in records if h.label.startswith("(4)")]
    if not fam:
        return None
    worst = min(fam, key=lambda h: Fraction(h.lhs, h.rhs) if h.rhs else math.inf)
    return int(worst.label.split("=")[1])


# -- ampleness ------------------------------------------------------------


def ample_general(L: DivisorClass) -> Verdict:
    """Ampleness for arbitrary multiplicities ``m_1 >= ... >= m_r > 0``.

    Hypotheses: ``d > m1+m2``, ``2d > m1+...+m5``, ``3d > 2m1+m2+...+m7`` and
    ``d^2 (s+2) >= (s+3) sum_{i<=s} m_i^2`` for every ``2 <= s <= r``, with
    ``m_j = 0`` past ``r``.  Points of multiplicity zero are dropped first and
    the certificate is for the blow-up at the remaining points; r = 1 is
    decided directly (``d > m1``).
    """
    prop, name = Property.AMPLE, "ample_general"
    L = normalize(L)
    d = L.degree
    if d <= 0:
        return _not_applicable(prop, name, "degree must be positive")
    if any(n < 0 for n in L.mults):
        return _not_applicable(prop, name, "negative multiplicity")
    m = [n for n in L.mults if n > 0]
    if not m:
        return _not_applicable(prop, name, "no positive multiplicity")
    notes = {}
    if len(m) < L.r:
        notes["support_r"] = len(m)
        notes["dropped_zero_points"] = L.r - len(m)
    if len(m) == 1:
        return _finish(prop, name, [Hypothesis("(r=1) d > m1", d, m[0], ">")], notes=notes)
    records = _low_degree_records(d, m)
    records += _partial_square_records(d, m, range(2, len(m) + 1))
    notes["worst_s"] = _worst_s(records)
    return _finish(prop, name, records, notes=notes)


#: exceptional classes of degree 4, 5, 6 on eight points
R9_EXTRA_CLASSES = (
    DivisorClass(4, (2, 2, 2, 1, 1, 1, 1, 1)),
    DivisorClass(5, (2, 2, 2, 2, 2, 2, 1, 1)),
    DivisorClass(6, (3, 2, 2, 2, 2, 2, 2, 2)),
)


def ample_r9(L: DivisorClass) -> Verdict:
    """Variant for r >= 9: the partial-sum hypothesis is only needed for
    ``s >= 9`` once ``L`` meets the three degree 4-6 exceptional classes
    positively."""
    prop, name = Property.AMPLE, "ample_r9"
    L = normalize(L)
    if L.r < 9:
        return _not_applicable(prop, name, "needs r >= 9")
    if L.degree <= 0:
        return _not_applicable(prop, name, "degree must be positive")
    if L.mults[-1] <= 0:
        return _not_applicable(prop, name, "all multiplicities must be positive")
    d, m = L.degree, L.mults
    records = _low_degree_records(d, m)
    records += _partial_square_records(d, m, range(9, L.r + 1))
    witnesses = []
    for E in R9_EXTRA_CLASSES:
        E = E.padded(L.r)
        h = Hypothesis(f"(5) L.({E.pretty()}) > 0", intersect(L, E), 0, ">")
        records.append(h)
        if not h.passed:
            witnesses.append(E)
    return _finish(prop, name, records, witnesses, {"worst_s": _worst_s(records)})


def lambda_r(r: int) -> float:
    """Display value of the uniform threshold; comparisons never use it."""
    if r in (2, 3):
        return 2.0
    if r == 5:
        return 2.5
    return math.sqrt(r * (r + 3) / (r + 2))


def ample_uniform_lambda(U: UniformBundle) -> Verdict:
    """``d > lambda_r m`` with ``lambda_2 = lambda_3 = 2``, ``lambda_5 = 5/2``
    and ``lambda_r = sqrt(r(r+3)/(r+2))`` otherwise."""
    prop, name = Property.AMPLE, "ample_uniform_lambda"
    d, r, m = U.d, U.r, U.m
    if r < 2:
        return _not_applicable(prop, name, "needs r >= 2")
    if m <= 0:
        return _not_applicable(prop, name, "needs m > 0")
    if r in (2, 3):
        rec = Hypothesis("d > 2m", d, 2 * m, ">")
    elif r == 5:
        rec = Hypothesis("2d > 5m", 2 * d, 5 * m, ">")
    else:
        rec = Hypothesis("d^2 (r+2) > r(r+3) m^2", d * d * (r + 2), r * (r + 3) * m * m, ">")
    if d <= 0:
        rec = Hypothesis("d > 0", d, 0, ">")
    notes = {"lambda_r": round(lambda_r(r), 4), "lambda_r_times_m": round(lambda_r(r) * m, 4)}
    return _finish(prop, name, [rec], notes=notes)


def exceptional_ratio_bound(r: int) -> Optional[tuple[DivisorClass, Fraction]]:
    """For r <= 8, the exceptional class of positive degree maximizing
    ``sum(n_i)/e``, with that ratio."""
    if r > 8:
        raise ValueError("only finitely many exceptional classes for r <= 8")
    best = None
    for C in exceptional_patterns(r):
        if C.degree <= 0:
            continue
        q = Fraction(sum(C.mults), C.degree)
        if best is None or q > best[1]:
            best = (C, q)
    return best


def ample_uniform(U: UniformBundle) -> Verdict:
    """Uniform ampleness: ``32d > 95m`` and ``d^2 (3r+39) >= r(3r+40) m^2``.

    For r <= 8 the first hypothesis is replaced by the exact condition that
    ``L`` meets every exceptional class of positive degree positively, i.e.
    ``d/m`` exceeds the largest ratio ``sum(n_i)/e`` over the finite list.
    """
    prop, name = Property.AMPLE, "ample_uniform"
    d, r, m = U.d, U.r, U.m
    if r < 1 or m <= 0:
        return _not_applicable(prop, name, "needs r >= 1 and m > 0")
    records = []
    notes = {}
    if d <= 0:
        records.append(Hypothesis("d > 0", d, 0, ">"))
    if r >= 9:
        records.append(Hypothesis("(1) 32d > 95m", 32 * d, 95 * m, ">"))
    else:
        worst = exceptional_ratio_bound(r)
        if worst is not None:
            C, q = worst
            records.append(Hypothesis(f"(1') d e > m sum(n) for C = {C.pretty()}",
                                      d * C.degree, m * sum(C.mults), ">"))
            notes["refined_ratio"] = f"{q.numerator}/{q.denominator}"
    records.append(Hypothesis("(2) d^2 (3r+39) >= r(3r+40) m^2",
                              d * d * (3 * r + 39), r * (3 * r + 40) * m * m, ">="))
    return _finish(prop, name, records, notes=notes)


def ample_nagata_conditional(U: UniformBundle) -> Verdict:
    """For r >= 9, Nagata's conjecture makes ``L^2 > 0`` sufficient."""
    prop, name = Property.AMPLE, "ample_nagata_conditional"
    d, r, m = U.d, U.r, U.m
    if r < 9:
        return _not_applicable(prop, name, "needs r >= 9")
    rec = Hypothesis("L^2 > 0: d^2 > r m^2", d * d, r * m * m, ">")
    notes = {}
    if math.isqrt(r) ** 2 == r:
        notes["nagata_known_for_square_r"] = True
    if rec.passed and d > 0:
        return Verdict(prop, Outcome.CONDITIONAL, name, [rec], conjecture="Nagata", notes=notes)
    if d * d < r * m * m:
        notes["not_ample"] = "L^2 < 0"
    return Verdict(prop, Outcome.NOT_CERTIFIED, name, [rec], notes=notes)


def ample_by_nef_decomposition(L: DivisorClass, F: DivisorClass,
                               cap: int = DEFAULT_DEGREE_CAP) -> Verdict:
    """Certify ``L = kF + aH`` with ``F`` nef, ``k >= 1``, ``a >= 1``.

    Then ``L.C >= aH.C > 0`` for every curve of positive degree, and
    ``L.E_i = m_i > 0`` handles the rest.
    """
    prop, name = Property.AMPLE, "ample_by_nef_decomposition"
    if L.r != F.r:
        return _not_applicable(prop, name, "L and F live on different blow-ups")
    if any(n <= 0 for n in L.mults):
        return _not_applicable(prop, name, "all multiplicities of L must be positive")
    nef = certify_nef(F, cap)
    records = [Hypothesis(f"F nef ({nef.status.value})",
                          int(nef.status is NefStatus.NEF), 1, ">=")]
    notes: dict = {"nef_status": nef.status.value}
    witnesses = [F]
    if nef.witness is not None:
        witnesses.append(nef.witness)
        notes["nef_witness"] = str(nef.witness)
    found = None
    for k in range(1, max(1, L.degree) + 1):
        if all(a == k * b for a, b in zip(L.mults, F.mults)):
            a = L.degree - k * F.degree
            if found is None or (found[1] < 1 <= a):
                found = (k, a)
            if a >= 1:
                break
    if found is None:
        records.append(Hypothesis("L - kF = aH with a >= 1", 0, 1, ">="))
        notes["reason"] = "no-decomposition"
    else:
        k, a = found
        records.append(Hypothesis(f"L - {k}F = {a}H with a >= 1", a, 1, ">="))
        notes["k"] = k
        notes["a"] = a
    return _finish(prop, name, records, witnesses, notes)


# -- global generation and very ampleness -------------------------------


def gg_general(L: DivisorClass, permissive: bool = False) -> Verdict:
    """Global generation from ampleness of the adjoint twist ``N = L - K``.

    Requires r >= 5 and every ``m_i >= 2``.  Points with ``m_i = 0`` are
    dropped (a pull-back of a globally generated bundle stays globally
    generated).  ``permissive=True`` lets multiplicity-one points through and
    marks the certificate accordingly.
    """
    prop, name = Property.GLOBALLY_GENERATED, "gg_general"
    L = normalize(L)
    if L.degree <= 0:
        return _not_applicable(prop, name, "degree must be positive")
    if any(n < 0 for n in L.mults):
        return _not_applicable(prop, name, "negative multiplicity")
    m = [n for n in L.mults if n > 0]
    notes: dict = {"mode": "permissive" if permissive else "strict"}
    if len(m) < L.r:
        notes["support_r"] = len(m)
        notes["dropped_zero_points"] = L.r - len(m)
    if len(m) < 5:
        return _not_applicable(prop, name, "needs r >= 5 points of positive multiplicity")
    if m[-1] < 2:
        if not permissive:
            return _not_applicable(prop, name, "needs m_i >= 2 (use permissive mode)")
        notes["outside_stated_hypotheses"] = "multiplicity-one points present"
    d = L.degree
    records = _low_degree_records(d, m, shift=1)
    records += _partial_square_records(d + 3, [x + 1 for x in m], range(2, len(m) + 1))
    notes["worst_s"] = _worst_s(records)
    return _finish(prop, name, records, notes=notes)


def gg_uniform(U: UniformBundle) -> Verdict:
    """``32d >= 95m`` and ``(d+3)^2 (3r+4) >= r(3r+5)(m+1)^2``; r >= 2, m >= 6."""
    prop, name = Property.GLOBALLY_GENERATED, "gg_uniform"
    d, r, m = U.d, U.r, U.m
    if r < 2 or m < 6:
        return _not_applicable(prop, name, "needs r >= 2 and m >= 6")
    records = [
        Hypothesis("(1) 32d >= 95m", 32 * d, 95 * m, ">="),
        Hypothesis("(2) (d+3)^2 (3r+4) >= r(3r+5)(m+1)^2",
                   (d + 3) ** 2 * (3 * r + 4), r * (3 * r + 5) * (m + 1) ** 2, ">="),
    ]
    return _finish(prop, name, records)


def va_uniform(U: UniformBundle) -> Verdict:
    """``d >= 3m`` and ``(d+3)^2 (r+2) >= r(r+3)(m+1)^2``; r >= 3, m >= 4."""
    prop, name = Property.VERY_AMPLE, "va_uniform"
    d, r, m = U.d, U.r, U.m
    if r < 3 or m < 4:
        return _not_applicable(prop, name, "needs r >= 3 and m >= 4")
    records = [
        Hypothesis("(1) d >= 3m", d, 3 * m, ">="),
        Hypothesis("(2) (d+3)^2 (r+2) >= r(r+3)(m+1)^2",
                   (d + 3) ** 2 * (r + 2), r * (r + 3) * (m + 1) ** 2, ">="),
    ]
    return _finish(prop, name, records)


def st_criterion(U: UniformBundle, property: Property = Property.AMPLE) -> Verdict:
    """The earlier uniform bounds used for comparison: ``d >= 3m+1`` together
    with ``d^2 >= (r+1) m^2`` (ample) or ``(d+3)^2 >= (r+1)(m+1)^2``
    (globally generated)."""
    name = "st_ample" if property is Property.AMPLE else "st_gg"
    d, r, m = U.d, U.r, U.m
    if property is Property.VERY_AMPLE:
        raise ValueError("no very-ampleness comparison bound")
    if m < 2:
        return _not_applicable(property, name, "needs m >= 2")
    records = [Hypothesis("d >= 3m+1", d, 3 * m + 1, ">=")]
    if property is Property.AMPLE:
        records.append(Hypothesis("d^2 >= (r+1) m^2", d * d, (r + 1) * m * m, ">="))
    else:
        records.append(Hypothesis("(d+3)^2 >= (r+1)(m+1)^2",
                                  (d + 3) ** 2, (r + 1) * (m + 1) ** 2, ">="))
    return _finish(property, name, records)


# -- necessary side -----------------------------------------------------


def necessary_obstructions(L: DivisorClass, cap: int = DEFAULT_DEGREE_CAP
                           ) -> list[tuple[DivisorClass, int]]:
    """Classes proving ``L`` is not ample, with their intersection numbers.

    ``L`` itself is reported when ``L^2 <= 0``.  Exceptional classes are
    searched in full for r <= 8 and up to degree ``cap`` otherwise; each
    orbit under permuting the points is reported once, in the arrangement
    that pairs with ``L`` worst.  An empty list proves nothing.
    """
    L = normalize(L)
    out = []
    self_int = intersect(L, L)
    if self_int <= 0:
        out.append((L, self_int))
    for pat in exceptional_patterns(L.r, None if L.r <= 8 else cap):
        C = worst_arrangement(pat, L)
        v = intersect(L, C)
        if v <= 0:
            out.append((C, v))
    return out


# -- registry, minimum degree, dispatch -----------------------------------


def _st_ample(U):
    return st_criterion(U, Property.AMPLE)


def _st_gg(U):
    return st_criterion(U, Property.GLOBALLY_GENERATED)


#: certifier id -> (function, takes "general" class or "uniform" bundle)
CERTIFIERS: dict[str, tuple[Callable[..., Verdict], str]] = {
    "ample_general": (ample_general, "general"),
    "ample_r9": (ample_r9, "general"),
    "gg_general": (gg_general, "general"),
    "ample_uniform": (ample_uniform, "uniform"),
    "ample_uniform_lambda": (ample_uniform_lambda, "uniform"),
    "gg_uniform": (gg_uniform, "uniform"),
    "va_uniform": (va_uniform, "uniform"),
    "st_ample": (_st_ample, "uniform"),
    "st_gg": (_st_gg, "uniform"),
}


def run_certifier(criterion: str, d: int, mults: Optional[Sequence[int]] = None,
                  r: Optional[int] = None, m: Optional[int] = None, **kw) -> Verdict:
    fn, kind = CERTIFIERS[criterion]
    if kind == "general":
        if mults is None:
            mults = (m,) * r
        return fn(DivisorClass(d, tuple(mults)), **kw)
    if mults is not None:
        if len(set(mults)) != 1:
            raise ValueError(f"{criterion} needs uniform multiplicities")
        r, m = len(mults), mults[0]
    return fn(UniformBundle(d, r, m), **kw)


def min_degree(criterion: Union[str, Callable], mults: Optional[Sequence[int]] = None,
               r: Optional[int] = None, m: Optional[int] = None,
               limit: int = 1 << 40, **kw) -> int:
    """Smallest ``d >= 1`` certified by ``criterion``.

    Each hypothesis is monotone in ``d``, so doubling followed by bisection
    finds it.  Raises ``ValueError`` when the multiplicity data violates the
    certifier's preconditions.
    """
    if callable(criterion):
        name = next(k for k, (f, _) in CERTIFIERS.items() if f is criterion)
    else:
        name = criterion
    if name not in CERTIFIERS:
        raise ValueError(f"unknown certifier {name!r}")

    def status(d):
        v = run_certifier(name, d, mults, r, m, **kw)
        if v.outcome is Outcome.NOT_APPLICABLE:
            raise ValueError(f"{name} not applicable: {v.notes.get('reason')}")
        return v.certified

    lo, hi = 0, 1
    while not status(hi):
        lo, hi = hi, hi * 2
        if hi > limit:
            raise ValueError(f"{name}: no certified degree below {limit}")
    # invariant: status(hi) and not status(lo) (lo = 0 is never certified)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if status(mid):
            hi = mid
        else:
            lo = mid
    return hi


def is_uniform(L: DivisorClass) -> bool:
    return len(set(L.mults)) == 1 and L.mults[0] > 0


def certify(property: Property, target: Union[DivisorClass, UniformBundle],
            mode: str = "auto", permissive: bool = False, conditional: bool = False,
            cap: int = DEFAULT_DEGREE_CAP) -> Verdict:
    """Run the certifiers for ``property`` in order of sharpness and return
    the first certificate; otherwise the most informative failure.

    Order for ampleness: uniform input tries ``ample_uniform``,
    ``ample_uniform_lambda``, ``ample_general``; general input tries
    ``ample_general`` then ``ample_r9``.  Global generation tries
    ``gg_uniform`` then ``gg_general``; very ampleness ``va_uniform``.  With
    ``conditional`` the Nagata-conditional certifier is consulted last.
    A failed ampleness verdict gets the necessary obstructions attached.
    """
    if isinstance(target, UniformBundle):
        U, L = target, target.as_class()
    else:
        L = target
        U = UniformBundle.from_class(L) if is_uniform(L) else None

    if mode != "auto":
        fn, kind = CERTIFIERS[mode]
        kw = {"permissive": permissive} if mode == "gg_general" else {}
        if kind == "uniform":
            if U is None:
                return _not_applicable(property, mode, "needs a uniform bundle")
            return fn(U)
        return fn(L, **kw)

    runs: list[Callable[[], Verdict]] = []
    if property is Property.AMPLE:
        if isinstance(target, UniformBundle):
            runs += [lambda: ample_uniform(U), lambda: ample_uniform_lambda(U),
                     lambda: ample_general(L)]
            if U.r >= 9:
                runs.append(lambda: ample_r9(L))
        else:
            runs += [lambda: ample_general(L), lambda: ample_r9(L)]
    elif property is Property.GLOBALLY_GENERATED:
        if U is not None:
            runs.append(lambda: gg_uniform(U))
        runs.append(lambda: gg_general(L, permissive=permissive))
    else:
        if U is not None:
            runs.append(lambda: va_uniform(U))
        else:
            return _not_applicable(property, "va_uniform", "needs a uniform bundle")

    verdicts = []
    for run in runs:
        v = run()
        if v.certified:
            return v
        verdicts.append(v)

    if conditional and property is Property.AMPLE and U is not None and U.r >= 9:
        v = ample_nagata_conditional(U)
        if v.outcome is Outcome.CONDITIONAL:
            return v
        verdicts.append(v)

    failures = [v for v in verdicts if v.outcome is Outcome.NOT_CERTIFIED]
    best = failures[0] if failures else verdicts[0]
    if property is Property.AMPLE and all(n >= 0 for n in L.mults):
        obstructions = necessary_obstructions(L, cap)
        best.witnesses.extend(C for C, _ in obstructions)
        best.notes["obstructions"] = [[str(C), v] for C, v in obstructions]
    return best


__all__ = [
    "CERTIFIERS", "Hypothesis", "Outcome", "Property", "UniformBundle", "Verdict",
    "ample_by_nef_decomposition", "ample_general", "ample_nagata_conditional", "ample_r9",
    "ample_uniform", "ample_uniform_lambda", "certify", "exceptional_ratio_bound",
    "gg_general", "gg_uniform", "lambda_r", "min_degree", "most_negative_exceptional",
    "necessary_obstructions", "run_certifier", "st_criterion", "va_uniform",
]
