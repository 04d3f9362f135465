"""Numerical semigroup of a cusp with a single characteristic pair.

A branch (t^n, a t^m + ...) with gcd(n, m) = 1 has value semigroup
Gamma = <n, m> = {a*n + b*m : a, b >= 0}.  This module holds the pair
itself, membership and representation queries answered through per-residue
minima (no enumeration), and the co-pair (b, d) with d*n - b*m = 1 that
drives the region geometry used by the 1-form modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import NotInSemigroup, NotUniqueRange


@dataclass(frozen=True)
class PuiseuxPair:
    """A coprime pair (n, m) with 1 <= n <= m.

    n = 1 is legal here (the blow-up chain walks down to (1, 1)); modules
    that genuinely need a singular branch check n >= 2 at their own door.
    """

    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise TypeError("pair entries must be ints")
        if not 1 <= self.n <= self.m:
            raise ValueError("need 1 <= n <= m, got (%d, %d)" % (self.n, self.m))
        if math.gcd(self.n, self.m) != 1:
            raise ValueError("pair (%d, %d) is not coprime" % (self.n, self.m))

    @property
    def conductor(self) -> int:
        """Conductor (n-1)(m-1) of <n, m>: least c with [c, oo) inside the semigroup."""
        return (self.n - 1) * (self.m - 1)

    @property
    def m_inverse_mod_n(self) -> int:
        """m^-1 mod n (0 when n = 1, where every residue is 0 anyway)."""
        return pow(self.m, -1, self.n) if self.n > 1 else 0


@dataclass(frozen=True)
class GammaRepresentation:
    """Witness p = a*n + b*m with a, b >= 0."""

    p: int
    a: int
    b: int


@dataclass(frozen=True)
class CuspSemigroup:
    """Gamma = <n, m> with an Apery-style table of per-residue minima.

    apery[r] is the least member congruent to r mod n, namely b*m with
    b = r * (m^-1 mod n) mod n.  Membership of p is then a single lookup:
    p is a member iff p >= apery[p mod n].
    """

    pair: PuiseuxPair
    apery: tuple = field(init=False, repr=False)

    def __post_init__(self):
        n, m = self.pair.n, self.pair.m
        minv = self.pair.m_inverse_mod_n
        table = tuple(((r * minv) % n) * m for r in range(n))
        object.__setattr__(self, "apery", table)

    @property
    def conductor(self) -> int:
        return self.pair.conductor


def contains(gamma: CuspSemigroup, p: int) -> bool:
    """Membership p in <n, m>, answered by the residue table.

    Examples: 16 in <5, 11>; 0 in <5, 11>; 39 not in <5, 11>.
    """
    if p < 0:
        return False
    return p >= gamma.apery[p % gamma.pair.n]


def represent(gamma: CuspSemigroup, p: int) -> GammaRepresentation:
    """The unique (a, b) with p = a*n + b*m, valid for members p < n*m.

    Raises NotUniqueRange for p >= n*m (several representations exist
    there) and NotInSemigroup for non-members.
    """
    n, m = gamma.pair.n, gamma.pair.m
    if p >= n * m:
        raise NotUniqueRange("representation of %d >= %d is not unique" % (p, n * m))
    if not contains(gamma, p):
        raise NotInSemigroup("%d is not in <%d, %d>" % (p, n, m))
    b = (p * gamma.pair.m_inverse_mod_n) % n
    a = (p - b * m) // n
    return GammaRepresentation(p, a, b)


def minimal_b_representation(gamma: CuspSemigroup, p: int) -> GammaRepresentation:
    """Representation of any member with the least possible b (a as large as needed).

    Unlike represent() this works above n*m; used by the greedy
    integration step where orders run past the conductor.
    """
    n, m = gamma.pair.n, gamma.pair.m
    if not contains(gamma, p):
        raise NotInSemigroup("%d is not in <%d, %d>" % (p, n, m))
    b = (p * gamma.pair.m_inverse_mod_n) % n
    a = (p - b * m) // n
    return GammaRepresentation(p, a, b)


def copair(pair: PuiseuxPair) -> tuple:
    """The co-pair (b, d) with d*n - b*m = 1, 0 <= b < n and 0 < d <= m.

    copair((5, 11)) = (4, 9); copair((4, 9)) = (3, 7); copair((1, 1)) = (0, 1).
    """
    n, m = pair.n, pair.m
    if m == 1:
        # then n == 1 and the only admissible solution is d = 1, b = 0
        return (0, 1)
    d = pow(n, -1, m)
    b = (d * n - 1) // m
    assert d * n - b * m == 1 and 0 <= b < n and 0 < d <= m
    return (b, d)
