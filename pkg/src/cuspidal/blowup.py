"""Cuspidal sequences of blow-ups as exact symbolic data.

The sequence attached to a coprime pair is the Euclid recursion
(n, m) -> (n, m-n) while m >= 2n (a free step, substitution x = x1,
y = x1 y1) and (n, m) -> (m-n, n) otherwise (a corner step, y = x1 y1,
x = y1), ending at (1, 1).  On logarithmic clouds each step acts by the
unimodular map Psi and a linear coefficient map, so everything here is
integer linear algebra; no series are touched.

The total-dicriticalness test runs both characterizations independently:
the combinatorial one (pre-basic and resonant) and the geometric one
(push the cloud down the whole sequence, factoring the exceptional
multiplicity at every step, and inspect the weight-zero slice in the
terminal chart).  Disagreement is an internal bug, not a data error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, InternalDisagreement
from .forms import OneForm, is_prebasic, is_resonant
from .semigroup import PuiseuxPair

__all__ = [
    "CuspidalSequence", "DicriticalVerdict", "build_sequence",
    "transform_form", "is_totally_dicritical",
]

FREE = "free"
CORNER = "corner"


@dataclass(frozen=True)
class CuspidalSequence:
    """The pair chain (length N, ending at (1,1)) and the N-1 step kinds."""

    pairs: tuple
    kinds: tuple

    @property
    def length(self) -> int:
        return len(self.pairs)

    @property
    def freeness_index(self) -> int:
        """Number of leading free blow-ups; the first one is always free."""
        if self.length == 1:
            return 0
        first = self.pairs[0]
        return first.m // first.n

    def __repr__(self):
        bits = []
        for i, p in enumerate(self.pairs):
            bits.append("(%d,%d)" % (p.n, p.m))
            if i < len(self.kinds):
                bits.append("-%s->" % self.kinds[i])
        return "".join(bits)


def build_sequence(pair: PuiseuxPair) -> CuspidalSequence:
    pairs = [pair]
    kinds = []
    n, m = pair.n, pair.m
    while (n, m) != (1, 1):
        if m >= 2 * n:
            kinds.append(FREE)
            m = m - n
        else:
            kinds.append(CORNER)
            n, m = m - n, n
        pairs.append(PuiseuxPair(n, m))
    return CuspidalSequence(tuple(pairs), tuple(kinds))


def _map_point(kind: str, point):
    a, b = point
    return (a + b, b) if kind == FREE else (b, a + b)


def _map_coeffs(kind: str, mu, zeta):
    return (mu + zeta, zeta) if kind == FREE else (zeta, mu + zeta)


def _transform_cloud(kind: str, cloud: dict) -> dict:
    # Psi is injective and the coefficient map never sends a nonzero pair
    # to (0, 0), so the cloud neither merges nor loses points.
    return {_map_point(kind, p): _map_coeffs(kind, mu, zeta)
            for p, (mu, zeta) in cloud.items()}


def transform_form(seq: CuspidalSequence, omega: OneForm, step: int) -> OneForm:
    """Full single-step pullback of omega into the next chart.

    The cloud becomes Psi(cloud); the exceptional factor is visible as
    the common x1 (free) or y1 (corner) content and is deliberately not
    divided out here.
    """
    if not 0 <= step <= seq.length - 2:
        raise IndexOutOfRange("step %d outside 0..%d" % (step, seq.length - 2))
    if omega.pair != seq.pairs[step]:
        raise ValueError("form lives at pair %r, not %r"
                         % (omega.pair, seq.pairs[step]))
    cloud = _transform_cloud(seq.kinds[step], omega.cloud)
    return OneForm.from_cloud(seq.pairs[step + 1], cloud)


@dataclass(frozen=True)
class DicriticalVerdict:
    """Shared result of the two total-dicriticalness characterizations.

    multiplicities: the exceptional order factored at each step of the
    geometric walk (empty when the sequence has length 1).
    """

    combinatorial: bool
    geometric: bool
    vertex: object
    multiplicities: tuple

    def __bool__(self) -> bool:
        return self.combinatorial


def _geometric_walk(seq: CuspidalSequence, cloud: dict):
    """Strip-and-transform down to the terminal chart.

    Free steps factor x1^r and corner steps y1^r with r = min(alpha+beta)
    of the incoming cloud, matching the per-step exceptional multiplicity.
    Returns the final cloud (gcd-stripped) and the multiplicity trail.
    """
    trail = []
    for kind in seq.kinds:
        r = min(a + b for (a, b) in cloud)
        trail.append(r)
        moved = _transform_cloud(kind, cloud)
        if kind == FREE:
            cloud = {(a - r, b): c for (a, b), c in moved.items()}
        else:
            cloud = {(a, b - r): c for (a, b), c in moved.items()}
    # final normalization in the (1,1) chart: pull out the gcd monomial
    a0 = min(a for (a, b) in cloud)
    b0 = min(b for (a, b) in cloud)
    cloud = {(a - a0, b - b0): c for (a, b), c in cloud.items()}
    return cloud, tuple(trail)


def _terminal_condition(cloud: dict) -> bool:
    """Weight-zero slice must be exactly mu (dx/x - dy/y), mu != 0."""
    if (0, 0) not in cloud:
        return False
    mu, zeta = cloud[(0, 0)]
    return mu != 0 and zeta == -mu


def is_totally_dicritical(omega: OneForm, pair: PuiseuxPair) -> DicriticalVerdict:
    """Both characterizations of total dicriticalness, cross-checked.

    Combinatorial: omega is pre-basic and its vertex is resonant.
    Geometric: after the full blow-up sequence with exceptional factors
    removed, the weight-zero part in the terminal chart is a nonzero
    multiple of dx/x - dy/y.
    """
    if omega.pair != pair:
        raise ValueError("form carries pair %r, expected %r"
                         % (omega.pair, pair))
    vertex = is_prebasic(omega)
    combinatorial = vertex is not None and is_resonant(omega)
    seq = build_sequence(pair)
    final_cloud, trail = _geometric_walk(seq, dict(omega.cloud))
    geometric = _terminal_condition(final_cloud)
    if combinatorial != geometric:
        raise InternalDisagreement(
            "dicriticalness checks disagree: combinatorial=%s geometric=%s"
            % (combinatorial, geometric))
    return DicriticalVerdict(combinatorial, geometric, vertex, trail)
