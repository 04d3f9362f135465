"""Gamma-semimodules: sets closed under addition by <n, m>.

A semimodule Lambda = Gamma(lambda_-1, ..., lambda_s) is the union of the
translated semigroups lambda_j + Gamma.  The library works with the unique
minimal system of generators, ordered increasingly; generators are then
automatically pairwise non-congruent mod n, so a semimodule of a cusp has
at most n of them.

Everything here is exact residue-class arithmetic.  Each lambda_j + Gamma
meets a residue class r mod n in a full arithmetic ray of step n, so a
semimodule is described completely by the n starting points of those rays
(the per-class minima).  Axes, limits, conductors and level sets all come
out of these tables with no unbounded search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, IndexOutOfRange
from .semigroup import CuspSemigroup, PuiseuxPair


def _as_semigroup(gamma) -> CuspSemigroup:
    if isinstance(gamma, PuiseuxPair):
        return CuspSemigroup(gamma)
    return gamma


def _ray_start(gamma: CuspSemigroup, lam: int, r: int) -> int:
    """Least element of lam + Gamma congruent to r mod n."""
    n, m = gamma.pair.n, gamma.pair.m
    b = ((r - lam) * gamma.pair.m_inverse_mod_n) % n
    return lam + b * m


class GammaSemimodule:
    """A Gamma-semimodule presented by its minimal basis.

    The constructor validates minimality (each generator must lie outside
    the semimodule spanned by the earlier ones) and rejects unsorted or
    redundant systems; use minimal_basis() to normalize arbitrary
    generators first.

    Attributes
    ----------
    gamma : CuspSemigroup
    basis : tuple of int, the generators lambda_-1 < lambda_0 < ... < lambda_s
    axes : tuple of int, (u_0, ..., u_{s+1}) where u_0 = lambda_-1 and
        u_i = min of Lambda_{i-2} intersected with (lambda_{i-1} + Gamma)
    critical_orders : tuple of int or None, (t_-1, ..., t_{s+1}) defined by
        t_-1 = n, t_0 = m, t_i = t_{i-1} + u_i - lambda_{i-1}; present only
        when the basis starts with (n, m)
    conductor : int, least c with [c, oo) contained in the semimodule
    """

    __slots__ = ("gamma", "basis", "axes", "critical_orders", "conductor",
                 "_prefix_tables")

    def __init__(self, gamma: CuspSemigroup, basis):
        gamma = _as_semigroup(gamma)
        basis = tuple(int(b) for b in basis)
        if not basis:
            raise ValueError("empty generator system")
        if any(b < 0 for b in basis):
            raise ValueError("generators must be non-negative")
        if any(x >= y for x, y in zip(basis, basis[1:])):
            raise ValueError("generators must be strictly increasing; "
                             "call minimal_basis() to normalize")
        n = gamma.pair.n
        tables = []
        current = None
        for j, lam in enumerate(basis):
            if current is not None and lam >= current[lam % n]:
                raise ValueError("generator %d is redundant: already in the "
                                 "semimodule of the previous ones" % lam)
            ray = [_ray_start(gamma, lam, r) for r in range(n)]
            current = ray if current is None else \
                [min(a, b) for a, b in zip(current, ray)]
            tables.append(tuple(current))
        self.gamma = gamma
        self.basis = basis
        self._prefix_tables = tuple(tables)
        self.conductor = max(0, max(current) - n + 1)

        axes = [basis[0]]
        for i in range(1, len(basis)):
            # Lambda_{i-2} and lambda_{i-1} + Gamma are both unions of
            # per-class rays of step n, so their intersection in class r is
            # the ray starting at the larger of the two starts.
            prev = tables[i - 1]
            lam = basis[i]
            axes.append(min(max(prev[r], _ray_start(gamma, lam, r))
                            for r in range(n)))
        self.axes = tuple(axes)

        self.critical_orders = None
        if len(basis) >= 2 and basis[0] == n and basis[1] == gamma.pair.m:
            t = [n, gamma.pair.m]
            for i in range(1, len(basis)):
                t.append(t[-1] + self.axes[i] - basis[i])
            self.critical_orders = tuple(t)

    # s in the lambda_-1 .. lambda_s indexing
    @property
    def s_index(self) -> int:
        return len(self.basis) - 2

    def contains(self, p: int) -> bool:
        if p < 0:
            return False
        return p >= self._prefix_tables[-1][p % self.gamma.pair.n]

    def prefix_contains(self, k: int, p: int) -> bool:
        """Membership in Lambda_k = Gamma(lambda_-1 .. lambda_k), -1 <= k <= s."""
        if p < 0:
            return False
        return p >= self._prefix_tables[k + 1][p % self.gamma.pair.n]

    def prefix_conductor(self, k: int) -> int:
        table = self._prefix_tables[k + 1]
        return max(0, max(table) - self.gamma.pair.n + 1)

    def truncated(self, k: int) -> "GammaSemimodule":
        """The semimodule of the first k+2 generators (indices -1 .. k)."""
        return GammaSemimodule(self.gamma, self.basis[:k + 2])

    def __eq__(self, other):
        return (isinstance(other, GammaSemimodule)
                and self.gamma.pair == other.gamma.pair
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.gamma.pair, self.basis))

    def __repr__(self):
        return "GammaSemimodule(<%d,%d>; %s)" % (
            self.gamma.pair.n, self.gamma.pair.m, list(self.basis))


@dataclass(frozen=True)
class Limits:
    """ell1 = min{p >= 1 : n p + lambda_i in Lambda_{i-1}}, ell2 likewise with m."""

    ell1: int
    ell2: int

    def __iter__(self):
        return iter((self.ell1, self.ell2))


@dataclass(frozen=True)
class LevelSet:
    """Indices (via k -> k*m mod n) of the members found in I_q = [nq, nq+n-1]."""

    q: int
    members: frozenset


@dataclass(frozen=True)
class Tops:
    q1: int
    q2: int
    main: int


def minimal_basis(gamma: CuspSemigroup, generators) -> tuple:
    """The minimal generator system of the semimodule spanned by `generators`.

    Scans the generators in increasing order and keeps those outside the
    semimodule of the ones already kept; the smallest element of the
    complement is always a generator, so this greedy pass is exact.

    minimal_basis(<5,11>, {5, 11, 16, 17}) == (5, 11, 17)
    minimal_basis(<5,11>, {5}) == (5,)
    """
    gamma = _as_semigroup(gamma)
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise ValueError("empty generator system")
    if gens[0] < 0:
        raise ValueError("generators must be non-negative")
    n = gamma.pair.n
    kept = []
    table = None
    for g in gens:
        if table is not None and g >= table[g % n]:
            continue
        ray = [_ray_start(gamma, g, r) for r in range(n)]
        table = ray if table is None else [min(a, b) for a, b in zip(table, ray)]
        kept.append(g)
    return tuple(kept)


def axes(sm: GammaSemimodule) -> tuple:
    """(u_0, ..., u_{s+1}); computed eagerly at construction."""
    return sm.axes


def limits(sm: GammaSemimodule, i: int) -> Limits:
    """Limits of the truncation Lambda_i, for 0 <= i <= s.

    Scans p = 1, 2, ... for the first multiple with n p + lambda_i (resp.
    m p + lambda_i) inside Lambda_{i-1}.  The scan is bounded by the
    prefix conductor; running past the library-wide cap means a bug.
    """
    if not 0 <= i <= sm.s_index:
        raise IndexOutOfRange("limits index %d outside 0..%d" % (i, sm.s_index))
    n, m = sm.gamma.pair.n, sm.gamma.pair.m
    lam = sm.basis[i + 1]
    cap = sm.gamma.conductor + sm.basis[-1] + n * m

    def first(step: int) -> int:
        p = 1
        while not sm.prefix_contains(i - 1, step * p + lam):
            p += 1
            if step * p + lam > cap:
                raise CapExceeded("limit scan passed the proven bound")
        return p

    return Limits(first(n), first(m))


def critical_orders(sm: GammaSemimodule) -> tuple:
    """(t_-1, ..., t_{s+1}); requires a basis starting with (n, m)."""
    if sm.critical_orders is None:
        raise ValueError("critical orders need lambda_-1 = n and lambda_0 = m")
    return sm.critical_orders


def is_increasing(sm: GammaSemimodule) -> bool:
    """Whether lambda_i > u_i for every 0 <= i <= s."""
    return all(sm.basis[i + 1] > sm.axes[i] for i in range(len(sm.basis) - 1))


def level_set(sm: GammaSemimodule, q: int) -> LevelSet:
    """Classes hit by the semimodule inside the window I_q = [nq, n(q+1)-1].

    Classes are indexed by k -> the class of k*m, which straightens the
    members into the circular-interval picture.
    """
    if q < 0:
        raise ValueError("level index must be >= 0")
    n = sm.gamma.pair.n
    minv = sm.gamma.pair.m_inverse_mod_n
    hits = frozenset((p * minv) % n
                     for p in range(n * q, n * q + n) if sm.contains(p))
    return LevelSet(q, hits)


def ray_level_set(gamma: CuspSemigroup, mu: int, q: int) -> frozenset:
    """Level set of the single ray mu + Gamma (same indexing as level_set)."""
    gamma = _as_semigroup(gamma)
    n = gamma.pair.n
    minv = gamma.pair.m_inverse_mod_n
    start = [_ray_start(gamma, mu, r) for r in range(n)]
    return frozenset((p * minv) % n
                     for p in range(n * q, n * q + n) if p >= start[p % n])


def is_circular_interval(members, n: int) -> bool:
    """True when the subset of Z/n is empty, full, or one contiguous cyclic arc."""
    transitions = sum(1 for r in range(n)
                      if (r in members) != ((r + 1) % n in members))
    return transitions in (0, 2)


def tops(sm: GammaSemimodule) -> Tops:
    """Window indices of the two limit multiples of the last generator.

    q1 carries lambda_s + n*ell1, q2 carries lambda_s + m*ell2; the main
    top is the larger.  Level sets are circular intervals from the window
    of u_{s+1} on, and the conductor sits below n*(main - 1) for
    increasing semimodules whose first generator is a multiple of n.
    """
    if len(sm.basis) < 2:
        raise IndexOutOfRange("tops need at least two generators")
    lim = limits(sm, sm.s_index)
    n, m = sm.gamma.pair.n, sm.gamma.pair.m
    lam = sm.basis[-1]
    q1 = (lam + n * lim.ell1) // n
    q2 = (lam + m * lim.ell2) // n
    return Tops(q1, q2, max(q1, q2))


def semimodule_conductor(sm: GammaSemimodule) -> int:
    """Least c with [c, oo) inside the semimodule (0 when the whole of N is)."""
    return sm.conductor
