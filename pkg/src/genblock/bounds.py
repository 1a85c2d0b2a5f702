"""Closed-form bounds on blocking sets and projective systems, in exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from .errors import DimensionError, DomainError
from .geometry import gbin, point_count


def _gb(a, b, q):
    """Gaussian binomial that is 0 outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return gbin(a, b, q)


@dataclass
class BoundReport:
    name: str
    params: dict
    exact: Fraction
    direction: str  # "lower" or "upper"
    trace: dict = field(default_factory=dict)

    @property
    def value(self):
        """Integer bound: ceiling of a lower bound, floor of an upper bound."""
        return ceil(self.exact) if self.direction == "lower" else floor(self.exact)

    def __int__(self):
        return self.value

    def summary(self):
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        sign = ">=" if self.direction == "lower" else "<="
        return f"{self.name}({args}): {sign} {self.value} (exact {self.exact})"


def _direction(direction):
    if direction not in ("lower", "upper"):
        raise DomainError(f"direction must be 'lower' or 'upper', not {direction!r}")
    return direction


def counting_bound(q, r, h, f, s, direction="lower"):
    """``s * gbin(r, f) / gbin(r - h, f)``: every codim-f space counted once per member.

    Lower bound on the size of an s-fold blocking set, upper bound on the
    size of a projective system.
    """
    if h + f > r:
        raise DimensionError("need h + f <= r")
    num, den = gbin(r, f, q), gbin(r - h, f, q)
    return BoundReport(
        "counting",
        dict(q=q, r=r, h=h, f=f, s=s),
        Fraction(s * num, den),
        _direction(direction),
        dict(codim_spaces=num, per_member=den),
    )


@dataclass(frozen=True)
class DoubleCountCoeffs:
    """Coefficients of the double count over codim-f spaces through / missing a fixed line."""

    q: int
    r: int
    f: int

    @property
    def alpha1(self):
        return _gb(self.r - 2, self.f, self.q)

    @property
    def alpha2(self):
        return self.q ** (2 * (self.r - self.f)) * _gb(self.r - 2, self.r - self.f, self.q)

    @property
    def beta11(self):
        return _gb(self.r - 2, self.f, self.q)

    @property
    def beta21(self):
        return _gb(self.r - 3, self.f, self.q)

    @property
    def beta31(self):
        return _gb(self.r - 4, self.f, self.q)

    @property
    def beta32(self):
        return self.q ** (2 * (self.r - self.f - 2)) * _gb(self.r - 4, self.f - 2, self.q)

    @property
    def t(self):
        return Fraction(self.beta21 - self.beta31, self.beta32)

    def as_dict(self):
        return dict(
            alpha1=self.alpha1,
            alpha2=self.alpha2,
            beta11=self.beta11,
            beta21=self.beta21,
            beta31=self.beta31,
            beta32=self.beta32,
            t=self.t,
        )


def double_count_bound(q, r, f, s, mult_L=0, direction="lower"):
    """Size bound for line multisets w.r.t. codim-f spaces of PG(r-1, q), given a line of multiplicity ``mult_L``.

    ``|B| >= ((alpha1 + t alpha2) s - (beta11 - beta21) mult_L) / beta21`` for
    s-fold blocking sets; the same expression bounds projective systems from
    above.  In PG(4, q) w.r.t. planes it reads ``(q^4+q^2+q+1) s - q(q+1) mult_L``.
    """
    direction = _direction(direction)
    params = dict(q=q, r=r, f=f, s=s, mult_L=mult_L)
    if r < f + 2:
        raise DimensionError("need r >= f + 2")
    if r == f + 2:
        # the codim-f spaces are the lines themselves
        n = gbin(r, 2, q)
        return BoundReport("double-count", params, Fraction(s * n), direction, dict(lines=n))
    if f < 2:
        raise DomainError("the double count needs f >= 2")
    c = DoubleCountCoeffs(q, r, f)
    exact = ((c.alpha1 + c.t * c.alpha2) * s - (c.beta11 - c.beta21) * mult_L) / c.beta21
    return BoundReport("double-count", params, exact, direction, c.as_dict())


def line_system_bound_pg(q, n, s, mult_L=0):
    """Upper bound on line multisets of PG(n, q) with at most ``s`` lines per plane, written in the
    closed form ``(q^4 (q^(n-1)-1)(q^(n-2)-1) / ((q^3-1)(q^2-1)) + [n-1]) s - q [n-2] mult_L``."""
    if n < 4:
        raise DimensionError("need n >= 4")
    lead = Fraction(q**4 * (q ** (n - 1) - 1) * (q ** (n - 2) - 1), (q**3 - 1) * (q**2 - 1))
    exact = (lead + point_count(n - 1, q)) * s - q * point_count(n - 2, q) * mult_L
    return BoundReport("line-system-pg", dict(q=q, n=n, s=s, mult_L=mult_L), exact, "upper")


def anticode_bound(q, v, k, delta):
    """Upper bound ``gbin(v, k-delta+1) / gbin(k, k-delta+1)`` on k-dim codes of subspace distance 2*delta."""
    if v < 2 * k:
        raise DimensionError("need v >= 2k")
    if not 1 <= delta <= k:
        raise DomainError("need 1 <= delta <= k")
    m = k - delta + 1
    num, den = gbin(v, m, q), gbin(k, m, q)
    return BoundReport("anticode", dict(q=q, v=v, k=k, delta=delta), Fraction(num, den), "upper")


def griesmer(q, k, d):
    """Minimum length allowed by the Griesmer bound for a linear ``[n, k, d]_q`` code."""
    if k < 1 or d < 1:
        raise DomainError("need k >= 1 and d >= 1")
    return sum(-(-d // q**i) for i in range(k))


def griesmer_decompose(q, k, d):
    """Write ``d = sigma q^(k-1) - sum eps_i q^(i-1)`` with ``0 <= eps_i < q``.

    Returns ``(sigma, eps, n)`` with ``eps = (eps_1, ..., eps_{k-1})`` and
    ``n = sigma [k]_q - sum eps_i [i]_q``, the Griesmer length.
    """
    if k < 1 or d < 1:
        raise DomainError("need k >= 1 and d >= 1")
    top = q ** (k - 1)
    sigma = -(-d // top)
    rest = sigma * top - d
    eps = []
    for _ in range(k - 1):
        rest, digit = divmod(rest, q)
        eps.append(digit)
    assert rest == 0
    n = sigma * point_count(k, q) - sum(e * point_count(i + 1, q) for i, e in enumerate(eps))
    assert d == sigma * top - sum(e * q**i for i, e in enumerate(eps))
    return sigma, tuple(eps), n


def additive_griesmer(q, h, r, d):
    """Length lower bound for an additive code of GF(q)-dimension ``r`` over GF(q^h)."""
    if h < 1:
        raise DomainError("need h >= 1")
    return d + -(-(griesmer(q, r - h + 1, d) - d) // point_count(h, q))


def ghw_griesmer(q, k, f, d_f):
    """Length lower bound from the f-th generalized Hamming weight ``d_f``."""
    if not 1 <= f <= k:
        raise DomainError("need 1 <= f <= k")
    w = point_count(f, q)
    return d_f + sum(-(-d_f // (w * q**j)) for j in range(1, k - f + 1))


def griesmer_system_bound(q, r, h, s):
    """Largest ``n`` with ``[h]_q n >= g_q(r, (n - s) q^(h-1))``: an upper bound on projective
    systems w.r.t. hyperplanes."""
    w = point_count(h, q)
    n = s + 1
    while w * n >= griesmer(q, r, (n - s) * q ** (h - 1)):
        n += 1
    return n - 1


# ---------------------------------------------------------------------------
# periodic tables in PG(4, q)
# ---------------------------------------------------------------------------


def workhorse_applies(q, s, b):
    """Whether ``b <= (q^4+q^2+q+1) s``, the hypothesis that makes a base value periodic."""
    return b <= (q**4 + q**2 + q + 1) * s


class PeriodicTable(dict):
    """``s -> b`` values with a ``justification`` mapping ``s -> str``."""

    def __init__(self, *args, **kw):
        super().__init__(*args, **kw)
        self.justification = {}


def extend_periodic_table(q, base, check=True, max_s=None):
    """Extend ``base`` (values for ``1 <= s <= [3]_q``) by ``b(s + t[3]_q) = b(s) + t gbin(5,2,q)``.

    With ``check`` each cell is labelled ``"workhorse"`` when its base value
    satisfies the periodicity hypothesis and ``"ad-hoc/ILP"`` otherwise (the
    extension then rests on a separate argument).
    """
    period = point_count(3, q)
    missing = [s for s in range(1, period + 1) if s not in base]
    if missing:
        raise DomainError(f"base is missing s = {missing}")
    max_s = period * 4 if max_s is None else max_s
    lines = gbin(5, 2, q)
    out = PeriodicTable()
    for s in range(1, max_s + 1):
        t, s0 = divmod(s - 1, period)
        s0 += 1
        out[s] = base[s0] + t * lines
        if check:
            ok = workhorse_applies(q, s0, base[s0])
            tag = "workhorse" if ok else "ad-hoc/ILP"
            out.justification[s] = tag if t else ("base" if ok else "base (ad-hoc/ILP)")
    return out


def duality_transfer(q, m, b_value):
    """Size of the complement of a blocking set inside ``m`` copies of all lines of PG(4, q)."""
    if m < 1:
        raise DomainError("need m >= 1")
    total = m * gbin(5, 2, q)
    if b_value > total:
        raise DomainError(f"b={b_value} exceeds m * gbin(5,2,q) = {total}")
    return total - b_value
