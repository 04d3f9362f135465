"""Polynomial 1-forms in adapted coordinates.

A form omega = A dx + B dy is stored in the plain view (two sparse
coefficient maps).  All order theory happens in the logarithmic view
omega = sum x^alpha y^beta (mu dx/x + zeta dy/y): the set of (alpha, beta)
carrying a nonzero (mu, zeta) is the cloud, the divisorial order nu_E is
the least n*alpha + m*beta over it, and the basic / pre-basic / resonant
predicates are conditions on the cloud's shape around its vertex.

The translation between the views is a shift by one in the differential
variable: mu at (alpha, beta) is the A-coefficient of x^(alpha-1) y^beta,
zeta the B-coefficient of x^alpha y^(beta-1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (NotPreBasic, QAboveOrder, ZeroForm, ZeroPolynomial)
from .rationals import ZERO, rat
from .semigroup import PuiseuxPair, copair

__all__ = [
    "BivariatePolynomial", "OneForm", "Region", "InitialPart", "ReduceStep",
    "nu_E_form", "nu_E_function", "initial_part", "initial_part_data",
    "rdo", "is_basic", "is_prebasic", "is_resonant", "reduce_step",
    "differential",
]


def _clean(coeffs) -> dict:
    return {k: v for k, v in coeffs.items() if v != 0}


def _fmt_monomial(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("x" if a == 1 else "x^%d" % a)
    if b:
        parts.append("y" if b == 1 else "y^%d" % b)
    return "*".join(parts)


def _fmt_poly(coeffs: dict) -> str:
    if not coeffs:
        return "0"
    chunks = []
    for (a, b) in sorted(coeffs):
        c = coeffs[(a, b)]
        mono = _fmt_monomial(a, b)
        body = str(c) if not mono else (mono if c == 1 else
                                        "-" + mono if c == -1 else
                                        "%s*%s" % (c, mono))
        if chunks and not body.startswith("-"):
            chunks.append("+" + body)
        else:
            chunks.append(body)
    return "".join(chunks)


class BivariatePolynomial:
    """Sparse rational polynomial in x and y."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = _clean(dict(coeffs) if coeffs else {})

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "BivariatePolynomial":
        return cls({(a, b): rat(c)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return self.coeffs.items()

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, ZERO) + v
        return BivariatePolynomial(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, ZERO) - v
        return BivariatePolynomial(out)

    def __neg__(self):
        return BivariatePolynomial({k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, BivariatePolynomial):
            out = {}
            for (a1, b1), c1 in self.coeffs.items():
                for (a2, b2), c2 in other.coeffs.items():
                    k = (a1 + a2, b1 + b2)
                    out[k] = out.get(k, ZERO) + c1 * c2
            return BivariatePolynomial(out)
        c = rat(other)
        return BivariatePolynomial({k: c * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BivariatePolynomial) and \
            self.coeffs == other.coeffs

    def __repr__(self):
        return _fmt_poly(self.coeffs)


class OneForm:
    """omega = A dx + B dy with exact rational sparse coefficients."""

    __slots__ = ("pair", "A", "B", "_cloud")

    def __init__(self, pair: PuiseuxPair, A=None, B=None):
        self.pair = pair
        self.A = _clean(dict(A) if A else {})
        self.B = _clean(dict(B) if B else {})
        self._cloud = None

    @classmethod
    def zero(cls, pair: PuiseuxPair) -> "OneForm":
        return cls(pair)

    @classmethod
    def from_cloud(cls, pair: PuiseuxPair, cloud) -> "OneForm":
        """Build from {(alpha, beta): (mu, zeta)}; needs alpha >= 1 where
        mu != 0 and beta >= 1 where zeta != 0 (else the plain view would
        have a pole)."""
        A, B = {}, {}
        for (alpha, beta), (mu, zeta) in cloud.items():
            if mu != 0:
                if alpha < 1:
                    raise ValueError("mu at alpha=0 is not a regular form")
                A[(alpha - 1, beta)] = A.get((alpha - 1, beta), ZERO) + mu
            if zeta != 0:
                if beta < 1:
                    raise ValueError("zeta at beta=0 is not a regular form")
                B[(alpha, beta - 1)] = B.get((alpha, beta - 1), ZERO) + zeta
        return cls(pair, A, B)

    @property
    def cloud(self) -> dict:
        """{(alpha, beta): (mu, zeta)}, cached once."""
        if self._cloud is None:
            pts = {}
            for (a, b), c in self.A.items():
                pts[(a + 1, b)] = (c, ZERO)
            for (a, b), c in self.B.items():
                mu = pts.get((a, b + 1), (ZERO, ZERO))[0]
                pts[(a, b + 1)] = (mu, c)
            self._cloud = pts
        return self._cloud

    def is_zero(self) -> bool:
        return not self.A and not self.B

    def __add__(self, other):
        A = dict(self.A)
        for k, v in other.A.items():
            A[k] = A.get(k, ZERO) + v
        B = dict(self.B)
        for k, v in other.B.items():
            B[k] = B.get(k, ZERO) + v
        return OneForm(self.pair, A, B)

    def __sub__(self, other):
        A = dict(self.A)
        for k, v in other.A.items():
            A[k] = A.get(k, ZERO) - v
        B = dict(self.B)
        for k, v in other.B.items():
            B[k] = B.get(k, ZERO) - v
        return OneForm(self.pair, A, B)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c) -> "OneForm":
        c = rat(c)
        return OneForm(self.pair,
                       {k: c * v for k, v in self.A.items()},
                       {k: c * v for k, v in self.B.items()})

    def times_monomial(self, a: int, b: int, c=1) -> "OneForm":
        c = rat(c)
        return OneForm(self.pair,
                       {(k[0] + a, k[1] + b): c * v for k, v in self.A.items()},
                       {(k[0] + a, k[1] + b): c * v for k, v in self.B.items()})

    def times_polynomial(self, h: BivariatePolynomial) -> "OneForm":
        out = OneForm.zero(self.pair)
        for (a, b), c in h.items():
            out = out + self.times_monomial(a, b, c)
        return out

    def truncate_weight(self, top: int) -> "OneForm":
        """Drop every cloud point of weight > top (sound whenever decisions
        happen at or below weight top)."""
        n, m = self.pair.n, self.pair.m
        A = {k: v for k, v in self.A.items()
             if n * (k[0] + 1) + m * k[1] <= top}
        B = {k: v for k, v in self.B.items()
             if n * k[0] + m * (k[1] + 1) <= top}
        return OneForm(self.pair, A, B)

    def __eq__(self, other):
        return (isinstance(other, OneForm) and self.pair == other.pair
                and self.A == other.A and self.B == other.B)

    def __repr__(self):
        return "(%s)dx + (%s)dy" % (_fmt_poly(self.A), _fmt_poly(self.B))


class Region:
    """R^{n,m}(a0, b0): intersection of the two co-pair halfplanes.

    (alpha, beta) belongs iff (n-b)(alpha-a0) + (m-d)(beta-b0) >= 0 and
    b(alpha-a0) + d(beta-b0) >= 0, where (b, d) is the co-pair.  The two
    linear forms add up to the weight form n*alpha + m*beta (shifted), so
    the base point is the strict weight minimum of its region.
    """

    __slots__ = ("pair", "base", "b", "d")

    def __init__(self, pair: PuiseuxPair, base):
        self.pair = pair
        self.base = (int(base[0]), int(base[1]))
        self.b, self.d = copair(pair)

    def contains(self, point) -> bool:
        n, m = self.pair.n, self.pair.m
        da = point[0] - self.base[0]
        db = point[1] - self.base[1]
        return ((n - self.b) * da + (m - self.d) * db >= 0
                and self.b * da + self.d * db >= 0)

    def __eq__(self, other):
        return (isinstance(other, Region) and self.pair == other.pair
                and self.base == other.base)

    def __repr__(self):
        return "R^{%d,%d}%s" % (self.pair.n, self.pair.m, self.base)


@dataclass(frozen=True)
class InitialPart:
    """x^a y^b (mu dx/x + zeta dy/y), the weight-minimal slice at the vertex."""

    vertex: tuple
    mu: object
    zeta: object


@dataclass(frozen=True)
class ReduceStep:
    """Witness of one reachability reduction: result = omega - mu x^a y^b by."""

    mu: object
    a: int
    b: int
    result: OneForm


def _weight(pair: PuiseuxPair, point) -> int:
    return pair.n * point[0] + pair.m * point[1]


def nu_E_form(omega: OneForm) -> int:
    """Divisorial order: min of n*alpha + m*beta over the cloud."""
    if omega.is_zero():
        raise ZeroForm("nu_E of the zero form")
    return min(_weight(omega.pair, p) for p in omega.cloud)


def nu_E_function(h, pair: PuiseuxPair) -> int:
    """Weighted order of a polynomial: min of n*a + m*b over its support.

    Satisfies nu_E(dh) = nu_E(h): the differential shifts each monomial
    into the cloud point of the same weight.
    """
    coeffs = h.coeffs if isinstance(h, BivariatePolynomial) else _clean(h)
    if not coeffs:
        raise ZeroPolynomial("nu_E of the zero polynomial")
    return min(pair.n * a + pair.m * b for (a, b) in coeffs)


def initial_part(omega: OneForm, q: int) -> OneForm:
    """The sub-form supported on cloud points of weight exactly q.

    Zero when q < nu_E(omega); rejects q above the order, where the slice
    is not meaningful.
    """
    nu = nu_E_form(omega)
    if q > nu:
        raise QAboveOrder("initial part at %d above nu_E = %d" % (q, nu))
    pair = omega.pair
    keep = {p: c for p, c in omega.cloud.items() if _weight(pair, p) == q}
    return OneForm.from_cloud(pair, keep)


def rdo(omega: OneForm) -> int:
    """Reduced divisorial order: nu_E after stripping the cloud's gcd monomial.

    The stripped monomial is x^a y^b with a = min alpha, b = min beta over
    the cloud; stripping translates the cloud to touch both axes.
    """
    if omega.is_zero():
        raise ZeroForm("rdo of the zero form")
    nu = nu_E_form(omega)
    a = min(p[0] for p in omega.cloud)
    b = min(p[1] for p in omega.cloud)
    return nu - omega.pair.n * a - omega.pair.m * b


def is_basic(omega: OneForm) -> bool:
    return rdo(omega) < omega.pair.n * omega.pair.m


def is_prebasic(omega: OneForm):
    """The vertex (a, b) with cloud contained in R^{n,m}(a, b), or None.

    Only the weight-minimal cloud point can work (the base point is the
    strict weight minimum of its region), so a weight tie already rules
    the form out.
    """
    if omega.is_zero():
        raise ZeroForm("pre-basic test on the zero form")
    pair = omega.pair
    best = None
    tie = False
    for p in omega.cloud:
        w = _weight(pair, p)
        if best is None or w < best[0]:
            best, tie = (w, p), False
        elif w == best[0]:
            tie = True
    if tie:
        return None
    vertex = best[1]
    region = Region(pair, vertex)
    if all(region.contains(p) for p in omega.cloud):
        return vertex
    return None


def initial_part_data(omega: OneForm) -> InitialPart:
    """Vertex and its logarithmic coefficients, for pre-basic forms."""
    vertex = is_prebasic(omega)
    if vertex is None:
        raise NotPreBasic("form has no region vertex")
    mu, zeta = omega.cloud[vertex]
    return InitialPart(vertex, mu, zeta)


def is_resonant(omega: OneForm) -> bool:
    """Whether n*mu + m*zeta = 0 at the vertex; needs a pre-basic form."""
    data = initial_part_data(omega)
    pair = omega.pair
    return pair.n * data.mu + pair.m * data.zeta == 0


def reduce_step(omega: OneForm, by: OneForm):
    """One reachability reduction of omega by a monomial multiple of `by`.

    Both forms must be basic and resonant.  Fires only when the vertex of
    `by` is componentwise at most the vertex of omega; then the monomial
    x^a y^b and the scalar mu are forced, and the result has strictly
    larger nu_E (or vanishes).  Returns None when the vertices do not
    align.
    """
    for f in (omega, by):
        if not is_basic(f) or not is_resonant(f):
            raise ValueError("reduce_step needs basic resonant forms")
    iw = initial_part_data(omega)
    ib = initial_part_data(by)
    a = iw.vertex[0] - ib.vertex[0]
    b = iw.vertex[1] - ib.vertex[1]
    if a < 0 or b < 0:
        return None
    # resonant initial coefficients are proportional to (m, -n), so the
    # ratio of the mu components already matches the zeta components
    mu = iw.mu / ib.mu
    result = omega - by.times_monomial(a, b, mu)
    if not result.is_zero():
        assert nu_E_form(result) > nu_E_form(omega)
    return ReduceStep(mu, a, b, result)


def differential(h, pair: PuiseuxPair) -> OneForm:
    """dh as a OneForm; nu_E is preserved, monomial by monomial."""
    coeffs = h.coeffs if isinstance(h, BivariatePolynomial) else _clean(h)
    A, B = {}, {}
    for (a, b), c in coeffs.items():
        if a:
            A[(a - 1, b)] = A.get((a - 1, b), ZERO) + a * c
        if b:
            B[(a, b - 1)] = B.get((a, b - 1), ZERO) + b * c
    return OneForm(pair, A, B)
