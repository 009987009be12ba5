"""Exact scalars and the elementary number theory everything else leans on.

Scalars are plain ``int`` for the integers, ``fractions.Fraction`` for the
rationals and :class:`Cyclotomic` for elements of Q(zeta_m).  A :class:`Ring`
tag records which of these a container holds.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import (
    IntegralityViolation,
    InvalidHom,
    NonDivisible,
    ParseError,
    RingMismatch,
)


# -- number theory -----------------------------------------------------------

@lru_cache(maxsize=8192)
def factorize(n: int) -> dict:
    """Prime factorization {p: e} by trial division."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    f = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            f[p] = f.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        f[n] = f.get(n, 0) + 1
    return f


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=8192)
def divisors(n: int) -> tuple:
    """Divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return tuple(small + large[::-1])


def euler_phi(n: int) -> int:
    out = n
    for p in factorize(n):
        out -= out // p
    return out


def valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def coprime_part(n: int, k: int) -> int:
    """Largest divisor of k that is coprime to n."""
    if n < 1 or k < 1:
        raise ValueError("coprime_part needs positive arguments")
    g = gcd(k, n)
    while g > 1:
        k //= g
        g = gcd(k, n)
    return k


def _poly_exact_div(num, den):
    # den is monic; the division must leave no remainder
    num = list(num)
    dl = len(den)
    q = [0] * (len(num) - dl + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dl - 1]
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Integer coefficients of Phi_m, constant term first."""
    if m < 1:
        raise ValueError(f"cyclotomic_polynomial needs m >= 1, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        num = _poly_exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(m):
    # coordinates of u^j mod Phi_m for j = 0..m-1
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


# -- cyclotomic field elements -----------------------------------------------

_ZERO = Fraction(0)


class Cyclotomic:
    """Element of Q(zeta_m) in the power basis 1, u, ..., u^(d-1), d = phi(m).

    Values with different m compare and combine by lifting to the lcm.
    """

    __slots__ = ("m", "coords")

    def __init__(self, m: int, coords):
        if m < 1:
            raise ValueError("cyclotomic order must be positive")
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != euler_phi(m):
            raise ValueError(
                f"Q(zeta_{m}) needs {euler_phi(m)} coordinates, got {len(coords)}")
        self.m = m
        self.coords = coords

    @classmethod
    def _raw(cls, m, coords):
        obj = object.__new__(cls)
        obj.m = m
        obj.coords = coords
        return obj

    @classmethod
    def from_terms(cls, m, terms):
        """Reduce sum c * u^j over (j, c) pairs modulo Phi_m."""
        table = _power_table(m)
        out = [_ZERO] * len(table[0])
        for j, c in terms:
            if c:
                for i, r in enumerate(table[j % m]):
                    if r:
                        out[i] += c * r
        return cls._raw(m, tuple(out))

    @classmethod
    def zeta(cls, m, j=1):
        return cls.from_terms(m, [(j, Fraction(1))])

    @classmethod
    def from_rational(cls, m, q):
        coords = [_ZERO] * euler_phi(m)
        coords[0] = Fraction(q)
        return cls._raw(m, tuple(coords))

    def lift(self, m2):
        """Same value viewed in Q(zeta_m2); m must divide m2."""
        if m2 == self.m:
            return self
        if m2 % self.m:
            raise RingMismatch(f"cannot embed Q(zeta_{self.m}) in Q(zeta_{m2})")
        step = m2 // self.m
        return Cyclotomic.from_terms(m2, ((i * step, c) for i, c in enumerate(self.coords)))

    def galois(self, k):
        """Apply u -> u^k (k coprime to m)."""
        if gcd(k, self.m) != 1:
            raise InvalidHom(f"u -> u^{k} is not an automorphism of Q(zeta_{self.m})")
        return Cyclotomic.from_terms(self.m, ((i * k, c) for i, c in enumerate(self.coords)))

    def is_rational(self):
        return not any(self.coords[1:])

    def to_rational(self):
        if not self.is_rational():
            raise RingMismatch(f"{self!r} is not rational")
        return self.coords[0]

    def _align(self, other):
        if isinstance(other, Cyclotomic):
            if other.m == self.m:
                return self.m, self.coords, other.coords
            m = lcm(self.m, other.m)
            return m, self.lift(m).coords, other.lift(m).coords
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.m, self.coords, (Fraction(other),) + (_ZERO,) * (len(self.coords) - 1)
        return None

    def __add__(self, other):
        al = self._align(other)
        if al is None:
            return NotImplemented
        m, a, b = al
        return Cyclotomic._raw(m, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.m, tuple(-c for c in self.coords))

    def __sub__(self, other):
        al = self._align(other)
        if al is None:
            return NotImplemented
        m, a, b = al
        return Cyclotomic._raw(m, tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Cyclotomic._raw(self.m, tuple(c * other for c in self.coords))
        al = self._align(other)
        if al is None:
            return NotImplemented
        m, a, b = al
        prod = {}
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = prod.get(i + j, _ZERO) + x * y
        return Cyclotomic.from_terms(m, prod.items())

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic) and other.is_rational():
            other = other.coords[0]
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic._raw(self.m, tuple(c / other for c in self.coords))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Cyclotomic.from_rational(self.m, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        al = self._align(other)
        if al is None:
            return NotImplemented
        return al[1] == al[2]

    def __hash__(self):
        # the Galois-averaged trace does not depend on which Q(zeta_m)
        # the value is written in, and equals the value when it is rational
        if self.is_rational():
            return hash(self.coords[0])
        m = self.m
        t = _ZERO
        for j, c in enumerate(self.coords):
            if c:
                q = m // gcd(j, m)
                t += c * Fraction(mobius(q), euler_phi(q))
        return hash(("cyclotomic", t))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"Cyclotomic({self.m}, [{', '.join(str(c) for c in self.coords)}])"

    def __str__(self):
        return scalar_text(self)


# -- rings ---------------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    """Coefficient ring tag: Z, Q or Q(zeta_m)."""

    kind: str
    m: int = 1

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "cyclotomic"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "cyclotomic" and self.m < 1:
            raise ValueError("cyclotomic order must be positive")

    @property
    def is_q_algebra(self):
        return self.kind != "Z"

    def __str__(self):
        if self.kind == "cyclotomic":
            return f"Q(zeta_{self.m})"
        return self.kind

    def join(self, other: "Ring") -> "Ring":
        """Smallest supported ring containing both."""
        if self == other:
            return self
        if self.kind == "cyclotomic" or other.kind == "cyclotomic":
            m1 = self.m if self.kind == "cyclotomic" else 1
            m2 = other.m if other.kind == "cyclotomic" else 1
            return Ring("cyclotomic", lcm(m1, m2))
        return QQ

    def contains(self, other: "Ring") -> bool:
        return self.join(other) == self

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def coerce(self, x):
        """Return x as a canonical element of this ring."""
        kind = self.kind
        if kind == "Z":
            if type(x) is int:
                return x
            if isinstance(x, Cyclotomic):
                x = x.to_rational()
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise IntegralityViolation(f"{x} is not an integer")
                return x.numerator
            if isinstance(x, int) and not isinstance(x, bool):
                return int(x)
        elif kind == "Q":
            if type(x) is Fraction:
                return x
            if isinstance(x, Cyclotomic):
                return x.to_rational()
            if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
                return Fraction(x)
        else:
            if isinstance(x, Cyclotomic):
                if x.m == self.m:
                    return x
                if self.m % x.m == 0:
                    return x.lift(self.m)
                if x.is_rational():
                    return Cyclotomic.from_rational(self.m, x.coords[0])
                raise RingMismatch(f"{x!r} does not lie in Q(zeta_{self.m})")
            if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
                return Cyclotomic.from_rational(self.m, x)
        raise RingMismatch(f"cannot read {x!r} as an element of {self}")

    def to_json(self):
        if self.kind == "cyclotomic":
            return {"cyclotomic": self.m}
        return self.kind

    @staticmethod
    def from_json(obj):
        if obj in ("Z", "Q"):
            return ZZ if obj == "Z" else QQ
        if isinstance(obj, dict) and set(obj) == {"cyclotomic"}:
            m = obj["cyclotomic"]
            if isinstance(m, int) and not isinstance(m, bool) and m >= 1:
                return cyclotomic_ring(m)
        raise ParseError(f"bad ring descriptor {obj!r}")


ZZ = Ring("Z")
QQ = Ring("Q")


def cyclotomic_ring(m: int) -> Ring:
    return Ring("cyclotomic", m)


def ring_of(x) -> Ring:
    if isinstance(x, bool):
        raise RingMismatch("booleans are not scalars")
    if isinstance(x, int):
        return ZZ
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, Cyclotomic):
        return cyclotomic_ring(x.m)
    raise RingMismatch(f"{x!r} is not an exact scalar")


def join_rings(rings, start=ZZ) -> Ring:
    out = start
    for r in rings:
        out = out.join(r)
    return out


def q_lift(ring: Ring) -> Ring:
    """The ring itself if it is a Q-algebra, else Q."""
    return ring if ring.is_q_algebra else QQ


def is_rational_integer(x) -> bool:
    if isinstance(x, Cyclotomic):
        return x.is_rational() and x.coords[0].denominator == 1
    if isinstance(x, Fraction):
        return x.denominator == 1
    return isinstance(x, int) and not isinstance(x, bool)


def div_exact(x, n: int, ring: Ring):
    """x / n inside ring; over Z the division has to be exact."""
    if n == 0:
        raise ZeroDivisionError("division by zero")
    if ring.kind == "Z":
        if x % n:
            raise NonDivisible(f"{x} is not divisible by {n}")
        return x // n
    if ring.kind == "Q":
        return Fraction(x) / n
    return x / n


def scalar_arith(a, b, op: str):
    """Binary arithmetic on exact scalars after lifting both to a common ring."""
    if op == "div_by_integer":
        if not isinstance(b, int) or isinstance(b, bool):
            raise RingMismatch("div_by_integer needs an integer divisor")
        ring = ring_of(a)
        return div_exact(ring.coerce(a), b, ring)
    ring = ring_of(a).join(ring_of(b))
    a, b = ring.coerce(a), ring.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")


# -- ring homomorphisms --------------------------------------------------------

@dataclass(frozen=True)
class Hom:
    """Coefficient map: identity, an inclusion, or u -> u^k on Q(zeta_m)."""

    kind: str = "identity"
    target: Ring = None
    k: int = 1

    def codomain(self, ring: Ring) -> Ring:
        if self.kind == "identity":
            return ring
        if self.kind == "embed":
            if self.target is None or not self.target.contains(ring):
                raise InvalidHom(f"no inclusion {ring} -> {self.target}")
            return self.target
        if self.kind == "galois":
            if ring.kind != "cyclotomic" or gcd(self.k, ring.m) != 1:
                raise InvalidHom(f"u -> u^{self.k} is not an automorphism of {ring}")
            return ring
        raise InvalidHom(f"unknown hom kind {self.kind!r}")

    def apply(self, x, ring: Ring):
        """Image of x (an element of ring)."""
        target = self.codomain(ring)
        if self.kind == "galois":
            return ring.coerce(x).galois(self.k)
        return target.coerce(x)


def identity_hom():
    return Hom("identity")


def embed_hom(target: Ring):
    return Hom("embed", target)


def galois_hom(k: int):
    return Hom("galois", None, k)


# -- text formats --------------------------------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_scalar(obj):
    """Read a scalar from its JSON form: "-3", "p/q", or {"m":..,"coords":[..]}."""
    if isinstance(obj, bool):
        raise ParseError("booleans are not scalars")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, str):
        s = obj.strip().replace("−", "-")
        if not _RATIONAL_RE.match(s):
            raise ParseError(f"not an exact scalar: {obj!r}")
        try:
            q = Fraction(s)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {obj!r}") from None
        return q.numerator if q.denominator == 1 else q
    if isinstance(obj, dict):
        if set(obj) != {"m", "coords"}:
            raise ParseError(f"cyclotomic scalar needs keys m and coords: {obj!r}")
        m = obj["m"]
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ParseError(f"bad cyclotomic order {m!r}")
        coords = obj["coords"]
        if not isinstance(coords, list) or len(coords) != euler_phi(m):
            raise ParseError(f"Q(zeta_{m}) needs {euler_phi(m)} coordinates")
        parsed = []
        for c in coords:
            c = parse_scalar(c)
            if isinstance(c, Cyclotomic):
                raise ParseError("cyclotomic coordinates must be rational")
            parsed.append(c)
        return Cyclotomic(m, parsed)
    raise ParseError(f"not an exact scalar: {obj!r}")


def _rational_text(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x):
    """JSON form of a scalar."""
    if isinstance(x, Cyclotomic):
        return {"m": x.m, "coords": [_rational_text(c) for c in x.coords]}
    return _rational_text(x)


def scalar_text(x) -> str:
    """Short human-readable form; cyclotomic values print as polynomials in z<m>."""
    if not isinstance(x, Cyclotomic):
        return _rational_text(x)
    if x.is_rational():
        return _rational_text(x.coords[0])
    parts = []
    for j, c in enumerate(x.coords):
        if not c:
            continue
        mono = "" if j == 0 else (f"z{x.m}" if j == 1 else f"z{x.m}^{j}")
        if not mono:
            body = _rational_text(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{_rational_text(abs(c))}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return f"({text})"
