"""Necklace vectors with the gcd/lcm convolution product.

Sparse vectors are exact everywhere (zero off the support); truncated vectors
only know entries 1..N.  The ghost map ``phi`` sends x to a_n = sum_{d|n} d x_d.
"""

from math import gcd, lcm

from .errors import (
    CertificateViolation,
    HorizonExceeded,
    InternalDisagreement,
    NotTShaped,
    ParseError,
    QAlgebraRequired,
    UnknownSupport,
)
from .ghost import GhostVec
from .numeric import (
    ZZ,
    div_exact,
    divisors,
    factorize,
    format_scalar,
    join_rings,
    mobius,
    parse_scalar,
    ring_of,
    scalar_text,
)


class NeckVec:
    __slots__ = ("ring", "entries", "values", "horizon")

    def __init__(self, entries=None, *, values=None, ring=None):
        if (entries is None) == (values is None):
            raise ValueError("give exactly one of entries or values=")
        if entries is not None:
            entries = dict(entries)
            for n in entries:
                if not isinstance(n, int) or n < 1:
                    raise ValueError(f"necklace index must be a positive integer, got {n!r}")
            if ring is None:
                ring = join_rings(ring_of(v) for v in entries.values())
            self.entries = {n: ring.coerce(v) for n, v in sorted(entries.items()) if v}
            self.values = None
            self.horizon = None
        else:
            values = tuple(values)
            if not values:
                raise HorizonExceeded("truncated necklace vector needs horizon >= 1")
            if ring is None:
                ring = join_rings(ring_of(v) for v in values)
            self.values = tuple(ring.coerce(v) for v in values)
            self.horizon = len(values)
            self.entries = None
        self.ring = ring

    @classmethod
    def _sparse(cls, entries, ring):
        obj = object.__new__(cls)
        obj.entries = {n: entries[n] for n in sorted(entries) if entries[n]}
        obj.values = None
        obj.horizon = None
        obj.ring = ring
        return obj

    @classmethod
    def _trunc(cls, values, ring):
        if not values:
            raise HorizonExceeded("truncated necklace vector needs horizon >= 1")
        obj = object.__new__(cls)
        obj.entries = None
        obj.values = tuple(values)
        obj.horizon = len(values)
        obj.ring = ring
        return obj

    @property
    def is_sparse(self):
        return self.entries is not None

    def get(self, n):
        if n < 1:
            raise IndexError("necklace indices start at 1")
        if self.entries is not None:
            return self.entries.get(n, self.ring.zero())
        if n > self.horizon:
            raise HorizonExceeded(f"index {n} beyond horizon {self.horizon}")
        return self.values[n - 1]

    __getitem__ = get

    def window(self, N):
        return [self.get(n) for n in range(1, N + 1)]

    def _nonzero(self, upto=None):
        if self.entries is not None:
            if upto is None:
                return list(self.entries.items())
            return [(n, v) for n, v in self.entries.items() if n <= upto]
        stop = self.horizon if upto is None else min(upto, self.horizon)
        return [(n, v) for n, v in enumerate(self.values[:stop], 1) if v]

    def support(self):
        if self.entries is None:
            raise UnknownSupport("support of a truncated vector is unknown")
        return set(self.entries)

    def is_T_image(self, r) -> bool:
        """Is the support contained in the divisors of r?"""
        return all(r % n == 0 for n in self.support())

    # -- ring structure --

    def _common(self, other):
        ring = self.ring.join(other.ring)
        a = self if self.ring == ring else self.map_ring(ring)
        b = other if other.ring == ring else other.map_ring(ring)
        return ring, a, b

    def _horizon_with(self, other):
        return min(h for h in (self.horizon, other.horizon) if h is not None)

    def __add__(self, other):
        if not isinstance(other, NeckVec):
            return NotImplemented
        ring, a, b = self._common(other)
        if a.is_sparse and b.is_sparse:
            out = dict(a.entries)
            for n, v in b.entries.items():
                out[n] = out[n] + v if n in out else v
            return NeckVec._sparse(out, ring)
        N = a._horizon_with(b)
        return NeckVec._trunc([a.get(n) + b.get(n) for n in range(1, N + 1)], ring)

    def __neg__(self):
        if self.is_sparse:
            return NeckVec._sparse({n: -v for n, v in self.entries.items()}, self.ring)
        return NeckVec._trunc([-v for v in self.values], self.ring)

    def __sub__(self, other):
        if not isinstance(other, NeckVec):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, NeckVec):
            return self.scale(other)
        ring, a, b = self._common(other)
        if a.is_sparse and b.is_sparse:
            out = {}
            for i, xi in a.entries.items():
                for j, yj in b.entries.items():
                    g = gcd(i, j)
                    n = i // g * j
                    t = g * xi * yj
                    out[n] = out[n] + t if n in out else t
            return NeckVec._sparse(out, ring)
        N = a._horizon_with(b)
        vals = [ring.zero()] * N
        ys = b._nonzero(N)
        for i, xi in a._nonzero(N):
            for j, yj in ys:
                g = gcd(i, j)
                n = i // g * j
                if n <= N:
                    vals[n - 1] += g * xi * yj
        return NeckVec._trunc(vals, ring)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        ring = self.ring.join(ring_of(c))
        c = ring.coerce(c)
        a = self.map_ring(ring)
        if a.is_sparse:
            return NeckVec._sparse({n: c * v for n, v in a.entries.items()}, ring)
        return NeckVec._trunc([c * v for v in a.values], ring)

    def map_ring(self, ring):
        """The same vector with coefficients read in another ring."""
        if ring == self.ring:
            return self
        if self.is_sparse:
            return NeckVec._sparse({n: ring.coerce(v) for n, v in self.entries.items()}, ring)
        return NeckVec._trunc([ring.coerce(v) for v in self.values], ring)

    def map(self, hom):
        ring = hom.codomain(self.ring)
        if self.is_sparse:
            return NeckVec._sparse(
                {n: hom.apply(v, self.ring) for n, v in self.entries.items()}, ring)
        return NeckVec._trunc([hom.apply(v, self.ring) for v in self.values], ring)

    # -- operators --

    def V(self, r):
        """Index shift n -> nr with no scalar factor."""
        _check_index(r)
        if self.is_sparse:
            return NeckVec._sparse({n * r: v for n, v in self.entries.items()}, self.ring)
        zero = self.ring.zero()
        return NeckVec._trunc(
            [self.values[n // r - 1] if n % r == 0 else zero
             for n in range(1, self.horizon * r + 1)], self.ring)

    def Vdiv(self, r):
        """V_r followed by division by r (exact division over Z)."""
        _check_index(r)
        shifted = self.V(r)
        if r == 1:
            return shifted
        ring = self.ring
        if shifted.is_sparse:
            return NeckVec._sparse(
                {n: div_exact(v, r, ring) for n, v in shifted.entries.items()}, ring)
        return NeckVec._trunc([div_exact(v, r, ring) for v in shifted.values], ring)

    def F(self, r):
        """Frobenius: sends u*delta_n to gcd(n, r)*u*delta_{n/gcd(n, r)}."""
        _check_index(r)
        if self.is_sparse:
            out = {}
            for n, v in self.entries.items():
                g = gcd(n, r)
                k = n // g
                out[k] = out[k] + g * v if k in out else g * v
            return NeckVec._sparse(out, self.ring)
        M = self.horizon // r
        if M < 1:
            raise HorizonExceeded(f"F_{r} of a vector with horizon {self.horizon} is empty")
        vals = [self.ring.zero()] * M
        for n, v in self._nonzero():
            g = gcd(n, r)
            k = n // g
            if k <= M:
                vals[k - 1] += g * v
        return NeckVec._trunc(vals, self.ring)

    def T(self, r):
        """Keep only the indices dividing r."""
        _check_index(r)
        if self.is_sparse:
            return NeckVec._sparse(
                {n: v for n, v in self.entries.items() if r % n == 0}, self.ring)
        if self.horizon >= r:
            return NeckVec._sparse({n: self.values[n - 1] for n in divisors(r)}, self.ring)
        zero = self.ring.zero()
        return NeckVec._trunc(
            [v if r % n == 0 else zero for n, v in enumerate(self.values, 1)], self.ring)

    def W(self, r):
        return self.F(r).Vdiv(r)

    def apply(self, op, r):
        """Apply an operator by name: one of V, Vdiv, F, T, W."""
        if op not in ("V", "Vdiv", "F", "T", "W"):
            raise ValueError(f"unknown operator {op!r}")
        return getattr(self, op)(r)

    # -- comparison / display --

    def __eq__(self, other):
        if not isinstance(other, NeckVec):
            return NotImplemented
        if self.is_sparse and other.is_sparse:
            return self.entries == other.entries
        if not self.is_sparse and not other.is_sparse:
            return self.horizon == other.horizon and self.values == other.values
        return False

    __hash__ = None

    def __repr__(self):
        if self.is_sparse:
            return f"NeckVec({format_entries(self)}, {self.ring})"
        body = ", ".join(scalar_text(v) for v in self.values)
        return f"NeckVec(truncated {self.horizon}: [{body}], {self.ring})"

    def to_json(self):
        if self.is_sparse:
            return {"repr": "sparse",
                    "entries": {str(n): format_scalar(v) for n, v in self.entries.items()}}
        return {"repr": "truncated", "horizon": self.horizon,
                "values": [format_scalar(v) for v in self.values]}

    @staticmethod
    def from_json(obj, ring=None):
        try:
            kind = obj["repr"]
            if kind == "sparse":
                entries = {int(k): parse_scalar(v) for k, v in obj["entries"].items()}
                return NeckVec(entries, ring=ring or (None if entries else ZZ))
            if kind == "truncated":
                values = [parse_scalar(v) for v in obj["values"]]
                if len(values) != obj["horizon"]:
                    raise ValueError("horizon does not match the number of values")
                return NeckVec(values=values, ring=ring)
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ParseError(f"bad necklace vector: {exc}") from None
        raise ParseError(f"unknown necklace repr {kind!r}")


def sparse(entries, ring=None) -> NeckVec:
    entries = dict(entries)
    if ring is None and not entries:
        ring = ZZ
    return NeckVec(entries, ring=ring)


def truncated(values, ring=None) -> NeckVec:
    return NeckVec(values=list(values), ring=ring)


def delta(u, n, ring=None) -> NeckVec:
    """u times the n-th basis vector."""
    _check_index(n)
    ring = ring or ring_of(u)
    return NeckVec({n: u}, ring=ring)


def format_entries(x: NeckVec) -> str:
    """Sparse vector as {n:v, ...}."""
    return "{" + ", ".join(f"{n}:{scalar_text(v)}" for n, v in x.entries.items()) + "}"


def _check_index(r):
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"index must be a positive integer, got {r!r}")


# -- ghost map ---------------------------------------------------------------

def phi(x: NeckVec) -> GhostVec:
    """Ghost components a_n = sum over d | n of d * x_d."""
    ring = x.ring
    if x.is_sparse:
        size = 1
        for n in x.entries:
            size = lcm(size, n)
    else:
        size = x.horizon
    vals = [ring.zero()] * size
    for d, v in x._nonzero():
        w = d * v
        for n in range(d, size + 1, d):
            vals[n - 1] += w
    if x.is_sparse:
        return GhostVec._raw(tuple(vals), size, None, ring)
    return GhostVec._raw(tuple(vals), None, size, ring)


def _moebius_entry(a, n, ring):
    total = ring.zero()
    for d in divisors(n):
        mu = mobius(n // d)
        if mu:
            total += mu * a[d]
    return div_exact(total, n, ring)


def phi_inv(a: GhostVec, horizon=None) -> NeckVec:
    """Invert the ghost map.

    Without ``horizon`` the input has to be periodic with period c and satisfy
    a_n = a_{gcd(n, c)}; the answer is then sparse on the divisors of c.
    With ``horizon`` the answer is the truncated vector of entries 1..horizon.
    """
    ring = a.ring
    if not ring.is_q_algebra:
        raise QAlgebraRequired(f"inverting the ghost map needs a Q-algebra, ring is {ring}")
    if horizon is None:
        if not a.is_periodic:
            raise NotTShaped("exact inversion needs a periodic ghost vector")
        c = a.period
        if not a.is_T_image(c):
            raise NotTShaped(f"ghost vector is not of the form a_n = a_gcd(n,{c})")
        return NeckVec._sparse({n: _moebius_entry(a, n, ring) for n in divisors(c)}, ring)
    return NeckVec._trunc([_moebius_entry(a, n, ring) for n in range(1, horizon + 1)], ring)


def necklace_M(l, horizon=None, modulus=None) -> NeckVec:
    """Necklace polynomial vector m_n = (1/n) sum_{d|n} mu(n/d) l^d.

    ``horizon=h`` gives entries 1..h; ``modulus=c`` gives the exact vector
    restricted to the divisors of c.
    """
    if (horizon is None) == (modulus is None):
        raise ValueError("give exactly one of horizon= or modulus=")
    ring = ring_of(l)
    powers = {}

    def entry(n):
        total = ring.zero()
        for d in divisors(n):
            mu = mobius(n // d)
            if mu:
                if d not in powers:
                    powers[d] = l ** d
                total += mu * powers[d]
        return div_exact(total, n, ring)

    if modulus is not None:
        return NeckVec._sparse({n: entry(n) for n in divisors(modulus)}, ring)
    return NeckVec._trunc([entry(n) for n in range(1, horizon + 1)], ring)


def finite_support_certificate(x: NeckVec) -> int:
    """Return the minimal ghost period c of x after checking supp(x) | c."""
    supp = x.support()
    c = phi(x).minimal_period()
    bad = [n for n in supp if c % n]
    if bad:
        raise CertificateViolation(
            f"support {sorted(supp)} not inside the divisors of the ghost period {c}")
    return c


# -- truncated products ------------------------------------------------------

def split_pair(r: int, s: int):
    """Factor r = a1*a2*a3 and s = b1*b2*b3 prime by prime.

    Primes where r has the larger exponent go to (a1, b1), equal exponents to
    a2 = b2, and primes where s has the larger exponent go to (a3, b3).
    """
    a1 = a2 = a3 = b1 = b3 = 1
    fr, fs = factorize(r), factorize(s)
    for p in set(fr) | set(fs):
        al, be = fr.get(p, 0), fs.get(p, 0)
        if al > be:
            a1 *= p ** al
            b1 *= p ** be
        elif al == be:
            a2 *= p ** al
        else:
            a3 *= p ** al
            b3 *= p ** be
    return a1, a2, a3, b1, a2, b3


def frobenius_entry(x: NeckVec, m: int, k: int):
    """(F_m x)_k for a sparse x, without building F_m x."""
    total = x.ring.zero()
    for j, v in x.entries.items():
        g = gcd(j, m)
        if j == k * g:
            total += g * v
    return total


def direct_product_entry(x: NeckVec, y: NeckVec, r: int, s: int):
    """(T_r x * T_s y) at index lcm(r, s), by plain convolution."""
    return (x.T(r) * y.T(s)).get(lcm(r, s))


def trunc_product_entry(x: NeckVec, y: NeckVec, r: int, s: int, crosscheck=False):
    """(T_r x * T_s y) at index lcm(r, s) from Frobenius entries of x and y.

    With r = a1 a2 a3, s = b1 a2 b3 as in :func:`split_pair` the entry is
    (1/a2) sum_{d | a2} mu(a2/d) (F_{a3 d} x)_{a1} (F_{b1 d} y)_{b3}.
    """
    x.support()
    y.support()
    ring = x.ring.join(y.ring)
    # only entries on the divisors of r (resp. s) can contribute
    x, y = x.map_ring(ring).T(r), y.map_ring(ring).T(s)
    a1, a2, a3, b1, _, b3 = split_pair(r, s)
    if a2 > 1 and not ring.is_q_algebra:
        raise QAlgebraRequired(f"entry needs division by {a2}, ring is {ring}")
    total = ring.zero()
    for d in divisors(a2):
        mu = mobius(a2 // d)
        if mu:
            total += mu * frobenius_entry(x, a3 * d, a1) * frobenius_entry(y, b1 * d, b3)
    result = div_exact(total, a2, ring)
    if crosscheck:
        expected = direct_product_entry(x, y, r, s)
        if expected != result:
            raise InternalDisagreement(
                f"factorized entry {result} != direct entry {expected} for r={r}, s={s}")
    return result
