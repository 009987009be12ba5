"""Power series with constant term 1, under the lambda-ring operations.

Addition is the series product, negation the reciprocal, and multiplication
is carried out componentwise on ghost components:
z(f) = -t f'/f written as sum a_i (-t)^i.
``enr`` writes f uniquely as prod (1 - (-t)^i)^{x_i}.
"""

from .errors import HorizonExceeded, InternalDisagreement, ParseError
from .ghost import GhostVec
from .necklace import NeckVec, phi_inv
from .numeric import (
    ZZ,
    div_exact,
    format_scalar,
    join_rings,
    parse_scalar,
    q_lift,
    ring_of,
    scalar_text,
)


class LambdaSeries:
    """1 + c_1 t + ... + c_N t^N, known up to order N."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs, ring=None):
        coeffs = tuple(coeffs)
        if not coeffs or coeffs[0] != 1:
            raise ValueError("lambda series must start with constant term 1")
        if ring is None:
            ring = join_rings(ring_of(c) for c in coeffs)
        self.ring = ring
        self.coeffs = tuple(ring.coerce(c) for c in coeffs)

    @classmethod
    def _raw(cls, coeffs, ring):
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.ring = ring
        return obj

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        if i > self.order:
            raise HorizonExceeded(f"coefficient {i} beyond order {self.order}")
        return self.coeffs[i]

    def truncate(self, N):
        if N > self.order:
            raise HorizonExceeded(f"cannot extend order {self.order} to {N}")
        return LambdaSeries._raw(self.coeffs[: N + 1], self.ring)

    def map_ring(self, ring):
        if ring == self.ring:
            return self
        return LambdaSeries._raw([ring.coerce(c) for c in self.coeffs], ring)

    def map(self, hom):
        ring = hom.codomain(self.ring)
        return LambdaSeries._raw([hom.apply(c, self.ring) for c in self.coeffs], ring)

    def __add__(self, other):
        return lam_add(self, other)

    def __neg__(self):
        return lam_neg(self)

    def __sub__(self, other):
        return lam_add(self, lam_neg(other))

    def __mul__(self, other):
        return lam_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return f"LambdaSeries({series_text(self)}, order {self.order}, {self.ring})"

    def to_json(self):
        return {"ring": self.ring.to_json(), "coeffs": [format_scalar(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj):
        try:
            return LambdaSeries([parse_scalar(c) for c in obj["coeffs"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad series: {exc}") from None


def one(order, ring=ZZ) -> LambdaSeries:
    """The additive unit 1."""
    return LambdaSeries._raw([ring.one()] + [ring.zero()] * order, ring)


def _common(f, g):
    ring = f.ring.join(g.ring)
    N = min(f.order, g.order)
    return ring, N, f.map_ring(ring).coeffs[: N + 1], g.map_ring(ring).coeffs[: N + 1]


def _series_mul(a, b, N, zero):
    out = [zero] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if x:
            for j in range(min(len(b), N + 1 - i)):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def lam_add(f: LambdaSeries, g: LambdaSeries) -> LambdaSeries:
    ring, N, a, b = _common(f, g)
    return LambdaSeries._raw(_series_mul(a, b, N, ring.zero()), ring)


def lam_neg(f: LambdaSeries) -> LambdaSeries:
    """Reciprocal series (no division needed since c_0 = 1)."""
    c = f.coeffs
    out = [f.ring.one()]
    for n in range(1, f.order + 1):
        s = f.ring.zero()
        for i in range(1, n + 1):
            if c[i]:
                s += c[i] * out[n - i]
        out.append(-s)
    return LambdaSeries._raw(out, f.ring)


def z(f: LambdaSeries) -> GhostVec:
    """Ghost components a_1..a_N of f, from t f' = -f * sum a_i (-t)^i."""
    if f.order < 1:
        raise HorizonExceeded("ghost components need order >= 1")
    c = f.coeffs
    a = [None]
    for n in range(1, f.order + 1):
        s = n * c[n]
        for i in range(1, n):
            if a[i] and c[n - i]:
                t = a[i] * c[n - i]
                s = s - t if i % 2 else s + t
        a.append(s if n % 2 else -s)
    return GhostVec._raw(tuple(a[1:]), None, f.order, f.ring)


def z_inv(a: GhostVec, order: int, ring=None) -> LambdaSeries:
    """The series with ghost components a_1..a_order.

    The recursion divides by n, so it runs over a Q-algebra; when the result
    ring (``ring``, default the ghost ring) is Z the coefficients are checked
    to be integers.
    """
    target = ring or a.ring
    work = q_lift(a.ring.join(target))
    vals = [None] + [work.coerce(a[n]) for n in range(1, order + 1)]
    c = [work.one()]
    for n in range(1, order + 1):
        # n c_n = -sum_{i=1..n} (-1)^i a_i c_{n-i}
        s = work.zero()
        for i in range(1, n + 1):
            if vals[i] and c[n - i]:
                t = vals[i] * c[n - i]
                s = s + t if i % 2 else s - t
        c.append(div_exact(s, n, work))
    return LambdaSeries._raw([target.coerce(x) for x in c], target)


def lam_mul(f: LambdaSeries, g: LambdaSeries) -> LambdaSeries:
    """Lambda-ring product: ghost components multiply componentwise."""
    ring = f.ring.join(g.ring)
    N = min(f.order, g.order)
    if N == 0:
        return one(0, ring)
    return z_inv(z(f) * z(g), N, ring)


def _binomial_power(e, d, N, ring):
    """Coefficients of (1 - (-t)^d)^e to order N, e any ring element."""
    out = [ring.zero()] * (N + 1)
    out[0] = ring.one()
    sign = 1 if d % 2 else -1  # 1 - (-t)^d = 1 + sign * t^d
    coef = ring.one()
    k = 1
    while d * k <= N:
        coef = div_exact(coef * (e - (k - 1)), k, ring)
        out[d * k] = coef if sign == 1 or k % 2 == 0 else -coef
        k += 1
    return out


def enr(f: LambdaSeries, crosscheck=False) -> NeckVec:
    """Exponents x_1..x_N with f = prod (1 - (-t)^i)^{x_i} to order N.

    Peels one factor per degree.  ``crosscheck`` also computes the answer as
    phi_inv(z(f)) over a Q-algebra and insists they match.
    """
    N = f.order
    if N < 1:
        raise HorizonExceeded("product exponents need order >= 1")
    ring = f.ring
    rem = list(f.coeffs)
    xs = []
    for i in range(1, N + 1):
        x = rem[i] if i % 2 else -rem[i]
        xs.append(x)
        if x:
            rem = _series_mul(rem, _binomial_power(-x, i, N, ring), N, ring.zero())
    result = NeckVec._trunc(xs, ring)
    if crosscheck:
        work = q_lift(ring)
        other = phi_inv(z(f).map_ring(work), horizon=N)
        if other.values != result.values:
            raise InternalDisagreement(f"peeling gave {result}, ghost route gave {other}")
    return result


def enr_inv(x: NeckVec, order: int) -> LambdaSeries:
    """prod_{i <= order} (1 - (-t)^i)^{x_i}, truncated to the given order."""
    ring = x.ring
    if not x.is_sparse and x.horizon < order:
        raise HorizonExceeded(f"need exponents up to {order}, have {x.horizon}")
    out = [ring.one()] + [ring.zero()] * order
    for i, e in x._nonzero(order):
        out = _series_mul(out, _binomial_power(e, i, order, ring), order, ring.zero())
    return LambdaSeries._raw(out, ring)


# -- text --------------------------------------------------------------------

def _factor_text(d, e):
    base = "(1+t)" if d == 1 else (f"(1-t^{d})" if d % 2 == 0 else f"(1+t^{d})")
    return f"{base}^{scalar_text(e)}"


def product_form(x) -> str:
    """Render exponents as (1+t)^a (1-t^2)^b (1+t^3)^c ...; "1" if all vanish.

    Accepts a necklace vector or a mapping {d: exponent}.
    """
    items = x._nonzero() if isinstance(x, NeckVec) else sorted(
        (d, e) for d, e in dict(x).items() if e)
    if not items:
        return "1"
    return " ".join(_factor_text(d, e) for d, e in items)


def series_text(f: LambdaSeries) -> str:
    """1 + c1*t + c2*t^2 + ... with zero terms dropped."""
    text = "1"
    for i, c in enumerate(f.coeffs[1:], 1):
        if not c:
            continue
        mono = "t" if i == 1 else f"t^{i}"
        neg = not hasattr(c, "coords") and c < 0
        body = scalar_text(-c if neg else c)
        term = mono if body == "1" else f"{body}*{mono}"
        text += (" - " if neg else " + ") + term
    return text


def from_product(exponents: dict, order: int, ring=None) -> LambdaSeries:
    """Convenience: expand prod (1 - (-t)^d)^{e_d} for a mapping d -> e_d."""
    ring = ring or join_rings((ring_of(e) for e in exponents.values()), ZZ)
    return enr_inv(NeckVec(dict(exponents), ring=ring), order)

