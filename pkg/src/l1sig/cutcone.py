"""Cuts, cut metrics and exact membership in the cut cone CUT_n.

A cut {C, V_n - C} is stored by its canonical side, the one containing
vertex 1. Canonical cuts are indexed by a bitmask ``k`` over {2, ..., n}:
vertex ``v`` belongs to the cut iff bit ``v - 2`` of ``k`` is set. The
nontrivial cuts are ``k = 0 .. 2^(n-1) - 2`` (``k = 2^(n-1) - 1`` would be
all of V_n) and are enumerated in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence

from . import lp
from .errors import FormatError, ResourceLimitError
from .metric import (
    FiniteMetric,
    _ints,
    _lines,
    format_rational,
    num_pairs,
    pair_index,
    pairs,
    parse_rational,
    require,
)

DEFAULT_MAX_N = 14


@dataclass(frozen=True, order=True)
class Cut:
    """Canonical side of a cut of V_n: contains 1 and is a proper subset."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        if self.n < 2:
            raise ValueError("cuts need n >= 2")
        if not members or members[0] != 1 or len(members) == self.n or members[-1] > self.n:
            raise ValueError(f"not a canonical nontrivial cut of V_{self.n}: {members}")

    @classmethod
    def canonical(cls, n: int, side: Iterable[int]) -> Cut:
        """Canonical representative of the partition {side, V_n - side}."""
        side = set(side)
        if not side <= set(range(1, n + 1)) or not side or len(side) == n:
            raise ValueError(f"{sorted(side)} is not a nontrivial cut of V_{n}")
        if 1 not in side:
            side = set(range(1, n + 1)) - side
        return cls(n, tuple(side))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Cut:
        return cls(n, (1,) + tuple(v for v in range(2, n + 1) if mask >> (v - 2) & 1))

    @property
    def mask(self) -> int:
        return sum(1 << (v - 2) for v in self.members[1:])

    def separates(self, i: int, j: int) -> bool:
        return (i in self.members) != (j in self.members)

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


def num_cuts(n: int) -> int:
    return 2 ** (n - 1) - 1


def enumerate_cuts(n: int) -> Iterator[Cut]:
    """All canonical nontrivial cuts of V_n, in ascending bitmask order."""
    if n < 2:
        raise ValueError("need n >= 2")
    for mask in range(num_cuts(n)):
        yield Cut.from_mask(n, mask)


def cut_metric(C: Cut) -> FiniteMetric:
    """delta_C: 1 on pairs split by the cut, 0 otherwise."""
    if not isinstance(C, Cut):
        raise TypeError("cut_metric expects a canonical Cut")
    return FiniteMetric.from_function(C.n, lambda i, j: int(C.separates(i, j)))


def _separated_pairs(n: int, mask: int) -> tuple[int, ...]:
    """Row indices (pair positions) of the pairs split by cut ``mask``."""
    inside = [True] + [bool(mask >> (v - 2) & 1) for v in range(2, n + 1)]
    return tuple(
        idx for idx, (i, j) in enumerate(pairs(n)) if inside[i - 1] != inside[j - 1]
    )


@dataclass(frozen=True)
class CutDecomposition:
    """A point sum(w_C * delta_C) of the cut cone, with w_C > 0."""

    n: int
    terms: tuple[tuple[Cut, Fraction], ...]

    def __post_init__(self):
        terms = tuple(sorted((c, Fraction(w)) for c, w in self.terms))
        seen = set()
        for c, w in terms:
            if c.n != self.n:
                raise ValueError("cut on a different vertex set")
            if w <= 0:
                raise ValueError(f"weight of {c} must be positive, got {w}")
            if c in seen:
                raise ValueError(f"cut {c} appears twice")
            seen.add(c)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_weights(cls, n: int, weights: dict[Cut, object]) -> CutDecomposition:
        return cls(n, tuple((c, Fraction(w)) for c, w in weights.items() if Fraction(w) != 0))

    def metric(self) -> FiniteMetric:
        vals = [Fraction(0)] * num_pairs(self.n)
        for c, w in self.terms:
            for idx in _separated_pairs(self.n, c.mask):
                vals[idx] += w
        return FiniteMetric(self.n, tuple(vals))

    def scaled(self, factor) -> CutDecomposition:
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return CutDecomposition(self.n, tuple((c, factor * w) for c, w in self.terms))

    def merged(self, other: CutDecomposition) -> CutDecomposition:
        """Decomposition of the sum of the two represented metrics."""
        if other.n != self.n:
            raise ValueError("cannot merge decompositions on different vertex sets")
        acc: dict[Cut, Fraction] = {}
        for c, w in self.terms + other.terms:
            acc[c] = acc.get(c, Fraction(0)) + w
        return CutDecomposition.from_weights(self.n, acc)

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class FarkasCertificate:
    """Integer functional y on pairs with <y, delta_C> <= 0 for every cut."""

    n: int
    y: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.y) != num_pairs(self.n):
            raise ValueError(f"expected {num_pairs(self.n)} entries, got {len(self.y)}")
        object.__setattr__(self, "y", tuple(Fraction(v) for v in self.y))

    @classmethod
    def normalized(cls, n: int, y: Sequence) -> FarkasCertificate:
        """Scale a rational vector to coprime integers, keeping its direction."""
        y = [Fraction(v) for v in y]
        scale = lcm(1, *(v.denominator for v in y))
        ints = [int(v * scale) for v in y]
        g = reduce(gcd, ints, 0) or 1
        return cls(n, tuple(v // g for v in ints))

    def __call__(self, i: int, j: int) -> Fraction:
        return self.y[pair_index(self.n, i, j)]

    def pairing(self, d: FiniteMetric) -> Fraction:
        return sum((a * b for a, b in zip(self.y, d.entries)), Fraction(0))


@dataclass(frozen=True)
class Feasible:
    decomposition: CutDecomposition


@dataclass(frozen=True)
class Infeasible:
    certificate: FarkasCertificate


MembershipResult = Feasible | Infeasible


def cut_columns(n: int) -> list[lp.Column]:
    """LP columns of all canonical cuts: indicator of separated pairs."""
    return [
        (rows, (1,) * len(rows))
        for rows in (_separated_pairs(n, mask) for mask in range(num_cuts(n)))
    ]


def cutcone_membership(
    d: FiniteMetric,
    *,
    max_n: int = DEFAULT_MAX_N,
    max_pivots: int | None = None,
) -> MembershipResult:
    """Decide d in CUT_n by exact phase-one simplex over all cut weights.

    Returns :class:`Feasible` with a basic decomposition (at most n(n-1)/2
    terms) or :class:`Infeasible` with a coprime integer Farkas vector. Both
    are checked before being returned.
    """
    require(d, "semimetric")
    if d.n > max_n:
        raise ResourceLimitError(
            f"cut-cone LP for n={d.n} has {num_cuts(d.n)} columns; limit is n <= {max_n}"
        )
    n = d.n
    res = lp.solve(cut_columns(n), d.entries, max_pivots=max_pivots)
    if res.status == lp.INFEASIBLE:
        cert = FarkasCertificate.normalized(n, res.farkas)
        if not verify_farkas(d, cert):
            raise AssertionError("solver produced an invalid Farkas certificate")
        return Infeasible(cert)
    weights = {Cut.from_mask(n, k): w for k, w in enumerate(res.x) if w}
    dec = CutDecomposition.from_weights(n, weights)
    if not verify_decomposition(d, dec):
        raise AssertionError("solver produced an invalid decomposition")
    return Feasible(dec)


def verify_decomposition(d: FiniteMetric, dec: CutDecomposition) -> bool:
    if d.n != dec.n:
        return False
    return dec.metric() == d


def verify_farkas(d: FiniteMetric, cert: FarkasCertificate) -> bool:
    """<y, delta_C> <= 0 for all 2^(n-1) - 1 cuts, and <y, d> > 0."""
    if d.n != cert.n:
        return False
    if cert.pairing(d) <= 0:
        return False
    y = cert.y
    for mask in range(num_cuts(d.n)):
        if sum(y[idx] for idx in _separated_pairs(d.n, mask)) > 0:
            return False
    return True


# -- file formats -------------------------------------------------------------


def format_decomposition(dec: CutDecomposition) -> str:
    out = [f"{dec.n} {len(dec.terms)}"]
    for c, w in dec.terms:
        out.append(f"{format_rational(w)} : {' '.join(map(str, c.members))}")
    return "\n".join(out) + "\n"


def parse_decomposition(text: str) -> CutDecomposition:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty decomposition file")
    n, k = _ints(lines[0], 2, "decomposition header")
    if len(lines) != k + 1:
        raise FormatError(f"expected {k} terms, got {len(lines) - 1}")
    terms = []
    for ln in lines[1:]:
        if ":" not in ln:
            raise FormatError(f"term line lacks ':': {ln!r}")
        w, members = ln.split(":", 1)
        try:
            cut = Cut(n, tuple(int(t) for t in members.split()))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        terms.append((cut, parse_rational(w.strip())))
    try:
        return CutDecomposition(n, tuple(terms))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_farkas(cert: FarkasCertificate) -> str:
    return f"{cert.n}\n{' '.join(str(int(v)) for v in cert.y)}\n"


def parse_farkas(text: str) -> FarkasCertificate:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty certificate file")
    (n,) = _ints(lines[0], 1, "certificate header")
    if n < 2:
        raise FormatError("certificate needs n >= 2")
    tokens = " ".join(lines[1:])
    return FarkasCertificate(n, tuple(_ints(tokens, num_pairs(n), "certificate entries")))
