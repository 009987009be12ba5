"""Ghost vectors: infinite sequences with componentwise arithmetic.

A vector is either periodic (entry n is ``values[(n-1) % c]``) and therefore
known exactly, or truncated to a horizon N past which reading is an error.
"""

from dataclasses import dataclass
from math import gcd, lcm

from .errors import HorizonExceeded, ParseError, QAlgebraRequired
from .numeric import Ring, factorize, format_scalar, join_rings, parse_scalar, ring_of, scalar_text


@dataclass(frozen=True)
class Verdict:
    """Boolean answer that remembers whether it only covers a finite prefix."""

    holds: bool
    partial: bool = False

    def __bool__(self):
        return self.holds


class GhostVec:
    __slots__ = ("ring", "values", "period", "horizon")

    def __init__(self, values, *, period=None, horizon=None, ring=None):
        values = tuple(values)
        if (period is None) == (horizon is None):
            raise ValueError("give exactly one of period= or horizon=")
        size = period if period is not None else horizon
        if size < 1:
            raise HorizonExceeded(f"ghost vector needs length >= 1, got {size}")
        if len(values) != size:
            raise ValueError(f"expected {size} values, got {len(values)}")
        if ring is None:
            ring = join_rings(ring_of(v) for v in values)
        self.ring = ring
        self.values = tuple(ring.coerce(v) for v in values)
        self.period = period
        self.horizon = horizon

    @classmethod
    def _raw(cls, values, period, horizon, ring):
        obj = object.__new__(cls)
        obj.values = values
        obj.period = period
        obj.horizon = horizon
        obj.ring = ring
        return obj

    @property
    def is_periodic(self):
        return self.period is not None

    def __getitem__(self, n):
        if n < 1:
            raise IndexError("ghost indices start at 1")
        if self.period is not None:
            return self.values[(n - 1) % self.period]
        if n > self.horizon:
            raise HorizonExceeded(f"index {n} beyond horizon {self.horizon}")
        return self.values[n - 1]

    get = __getitem__

    def window(self, N):
        """Entries 1..N as a list."""
        return list(self._expanded(N))

    def _expanded(self, size):
        # entries 1..size as a tuple, repeating the period block as needed
        if self.period is None:
            if size > self.horizon:
                raise HorizonExceeded(f"index {size} beyond horizon {self.horizon}")
            return self.values[:size]
        reps, rest = divmod(size, self.period)
        return self.values * reps + self.values[:rest]

    def _build(self, size, fn, periodic, ring=None):
        ring = ring or self.ring
        values = tuple(fn(n) for n in range(1, size + 1))
        if periodic:
            return GhostVec._raw(values, size, None, ring)
        return GhostVec._raw(values, None, size, ring)

    # -- componentwise arithmetic --

    def _pointwise(self, other, op):
        if not isinstance(other, GhostVec):
            return NotImplemented
        ring = self.ring.join(other.ring)
        a = self if ring == self.ring else self.map_ring(ring)
        b = other if ring == other.ring else other.map_ring(ring)
        if a.is_periodic and b.is_periodic:
            size, periodic = lcm(a.period, b.period), True
        else:
            size = min(h for h in (a.horizon, b.horizon) if h is not None)
            periodic = False
        return GhostVec._raw(
            tuple(map(op, a._expanded(size), b._expanded(size))),
            size if periodic else None, None if periodic else size, ring)

    def __add__(self, other):
        return self._pointwise(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._pointwise(other, lambda x, y: x - y)

    def __mul__(self, other):
        if isinstance(other, GhostVec):
            return self._pointwise(other, lambda x, y: x * y)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __neg__(self):
        return GhostVec._raw(tuple(-v for v in self.values), self.period, self.horizon, self.ring)

    def scale(self, c):
        ring = self.ring.join(ring_of(c))
        c = ring.coerce(c)
        return GhostVec._raw(tuple(c * ring.coerce(v) for v in self.values),
                             self.period, self.horizon, ring)

    def map_ring(self, ring: Ring):
        return GhostVec._raw(tuple(ring.coerce(v) for v in self.values),
                             self.period, self.horizon, ring)

    def map(self, hom):
        ring = hom.codomain(self.ring)
        return GhostVec._raw(tuple(hom.apply(v, self.ring) for v in self.values),
                             self.period, self.horizon, ring)

    # -- operators --

    def V(self, r):
        """Verschiebung: r * a_{n/r} at multiples of r, zero elsewhere."""
        _check_index(r)
        zero = self.ring.zero()
        fn = lambda n: r * self[n // r] if n % r == 0 else zero
        if self.is_periodic:
            return self._build(self.period * r, fn, True)
        return self._build(self.horizon * r, fn, False)

    def Vdiv(self, r):
        """Divided Verschiebung V_r / r."""
        _check_index(r)
        _need_q_algebra(self.ring, r, "Vdiv")
        zero = self.ring.zero()
        fn = lambda n: self[n // r] if n % r == 0 else zero
        if self.is_periodic:
            return self._build(self.period * r, fn, True)
        return self._build(self.horizon * r, fn, False)

    def F(self, r):
        """Frobenius: a_n -> a_{nr}."""
        _check_index(r)
        fn = lambda n: self[n * r]
        if self.is_periodic:
            return self._build(self.period // gcd(self.period, r), fn, True)
        if self.horizon // r < 1:
            raise HorizonExceeded(f"F_{r} of a vector with horizon {self.horizon} is empty")
        return self._build(self.horizon // r, fn, False)

    def T(self, r):
        """Truncation: a_n -> a_{gcd(n, r)}."""
        _check_index(r)
        fn = lambda n: self[gcd(n, r)]
        if self.is_periodic or self.horizon >= r:
            return self._build(r, fn, True)
        return self._build(self.horizon, fn, False)

    def W(self, r):
        """Keep entries at multiples of r."""
        _check_index(r)
        _need_q_algebra(self.ring, r, "W")
        zero = self.ring.zero()
        fn = lambda n: self[n] if n % r == 0 else zero
        if self.is_periodic:
            return self._build(lcm(self.period, r), fn, True)
        return self._build(self.horizon, fn, False)

    def apply(self, op, r):
        """Apply an operator by name: one of V, Vdiv, F, T, W."""
        if op not in OPERATORS:
            raise ValueError(f"unknown operator {op!r}")
        return getattr(self, op)(r)

    # -- shape queries --

    def is_T_image(self, r) -> Verdict:
        """Does a_n == a_{gcd(n, r)} hold (on every index, or on the known prefix)?"""
        _check_index(r)
        if self.is_periodic:
            bound, partial = lcm(self.period, r), False
        else:
            bound, partial = self.horizon, True
        holds = all(self[n] == self[gcd(n, r)] for n in range(1, bound + 1))
        return Verdict(holds, partial)

    def has_period(self, c) -> bool:
        if not self.is_periodic:
            raise HorizonExceeded("period of a truncated vector is unknown")
        L = lcm(self.period, c)
        return self._expanded(L) == self._expanded(L + c)[c:]

    def minimal_period(self) -> int:
        """Smallest c dividing the stored period with a_{n+c} = a_n."""
        c = self.period
        if c is None:
            raise HorizonExceeded("period of a truncated vector is unknown")
        vals = self.values
        for p in factorize(c):
            while c % p == 0:
                d = c // p
                if vals[: len(vals) - d] != vals[d:]:
                    break
                c = d
        return c

    # -- comparison / display --

    def __eq__(self, other):
        if not isinstance(other, GhostVec):
            return NotImplemented
        if self.is_periodic and other.is_periodic:
            L = lcm(self.period, other.period)
            return self._expanded(L) == other._expanded(L)
        if not self.is_periodic and not other.is_periodic:
            return self.horizon == other.horizon and self.values == other.values
        return False

    __hash__ = None

    def __repr__(self):
        body = ", ".join(scalar_text(v) for v in self.values)
        if self.is_periodic:
            return f"GhostVec(periodic {self.period}: [{body}], {self.ring})"
        return f"GhostVec(truncated {self.horizon}: [{body}], {self.ring})"

    def to_json(self):
        vals = [format_scalar(v) for v in self.values]
        if self.is_periodic:
            return {"repr": "periodic", "period": self.period, "values": vals}
        return {"repr": "truncated", "horizon": self.horizon, "values": vals}

    @staticmethod
    def from_json(obj, ring=None):
        try:
            kind = obj["repr"]
            values = [parse_scalar(v) for v in obj["values"]]
            if kind == "periodic":
                return GhostVec(values, period=obj["period"], ring=ring)
            if kind == "truncated":
                return GhostVec(values, horizon=obj["horizon"], ring=ring)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad ghost vector: {exc}") from None
        raise ParseError(f"unknown ghost repr {kind!r}")


OPERATORS = ("V", "Vdiv", "F", "T", "W")


def periodic(values, ring=None) -> GhostVec:
    values = list(values)
    return GhostVec(values, period=len(values), ring=ring)


def truncated(values, ring=None) -> GhostVec:
    values = list(values)
    return GhostVec(values, horizon=len(values), ring=ring)


def constant(c, ring=None) -> GhostVec:
    return GhostVec([c], period=1, ring=ring)


def _check_index(r):
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"operator index must be a positive integer, got {r!r}")


def _need_q_algebra(ring, r, name):
    if r != 1 and not ring.is_q_algebra:
        raise QAlgebraRequired(f"{name}_{r} needs a Q-algebra, ring is {ring}")
