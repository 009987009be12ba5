"""Finite groups as power-map tables, and class functions on them.

A group is described only by its conjugacy classes, the order of each class
and, for each class c and k in 0..o_c-1, the class of g^k for g in c.  That is
all Adams operations, restriction to cyclic subgroups and products need.
"""

from dataclasses import dataclass
from math import gcd, lcm
from typing import NamedTuple

from .errors import (
    InternalDisagreement,
    LengthMismatch,
    NotIntegerValued,
    ParseError,
)
from .ghost import GhostVec
from .necklace import NeckVec, phi_inv
from .numeric import (
    ZZ,
    Ring,
    divisors,
    format_scalar,
    is_rational_integer,
    join_rings,
    parse_scalar,
    q_lift,
    ring_of,
    scalar_text,
)
from .series import LambdaSeries, z_inv


class PowerGroup:
    """Conjugacy classes with their orders and power maps."""

    def __init__(self, orders, power_maps, labels=None, descriptor=None, cycle_types=None):
        self.orders = tuple(orders)
        self.power_maps = tuple(tuple(p) for p in power_maps)
        self.labels = tuple(labels) if labels else tuple(str(i) for i in range(len(self.orders)))
        self.descriptor = descriptor
        self.cycle_types = tuple(cycle_types) if cycle_types else None
        self._check()

    def _check(self):
        if len(self.power_maps) != len(self.orders) or len(self.labels) != len(self.orders):
            raise ValueError("orders, power maps and labels must have one entry per class")
        for c, (o, pm) in enumerate(zip(self.orders, self.power_maps)):
            if len(pm) != o or pm[1 % o] != c:
                raise ValueError(f"bad power map for class {c}")
            for k, d in enumerate(pm):
                if self.orders[d] != o // gcd(o, k):
                    raise ValueError(f"class {c} to the power {k} has the wrong order")

    @property
    def class_count(self):
        return len(self.orders)

    @property
    def exponent(self):
        e = 1
        for o in self.orders:
            e = lcm(e, o)
        return e

    @property
    def identity_class(self):
        return self.power_maps[0][0]

    def power(self, c, k):
        """Class of g^k for g in class c."""
        return self.power_maps[c][k % self.orders[c]]

    def class_index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no class labelled {label!r}") from None

    def __eq__(self, other):
        if not isinstance(other, PowerGroup):
            return NotImplemented
        return self.orders == other.orders and self.power_maps == other.power_maps

    __hash__ = None

    def __repr__(self):
        return f"PowerGroup({self.descriptor or self.class_count})"

    def to_json(self):
        return self.descriptor

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ParseError(f"bad group descriptor {obj!r}")
        kind = obj["kind"]
        if kind in ("cyclic", "symmetric"):
            n = obj.get("n")
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise ParseError(f"bad group size {n!r}")
            if kind == "symmetric" and n > 12:
                raise ParseError("symmetric groups are limited to n <= 12")
            return cyclic_group(n) if kind == "cyclic" else symmetric_group(n)
        if kind == "product":
            factors = obj.get("factors")
            if not isinstance(factors, list) or not factors:
                raise ParseError("product group needs a nonempty factor list")
            groups = [PowerGroup.from_json(f) for f in factors]
            out = groups[0]
            for g in groups[1:]:
                out = product_group(out, g)
            out.descriptor = {"kind": "product", "factors": [g.descriptor for g in groups]}
            return out
        raise ParseError(f"unknown group kind {kind!r}")


def cyclic_group(n: int) -> PowerGroup:
    """Z/n with classes g^0, ..., g^(n-1)."""
    orders, maps = [], []
    for j in range(n):
        o = n // gcd(n, j)
        orders.append(o)
        maps.append([(j * k) % n for k in range(o)])
    labels = ["1" if j == 0 else ("g" if j == 1 else f"g^{j}") for j in range(n)]
    return PowerGroup(orders, maps, labels, {"kind": "cyclic", "n": n})


def partitions(n: int):
    """Partitions of n as ascending tuples, in lexicographic order ((1,...,1) first)."""
    def rec(rest, smallest):
        if rest == 0:
            yield ()
            return
        for p in range(smallest, rest + 1):
            if rest - p == 0 or rest - p >= p:
                for tail in rec(rest - p, p):
                    yield (p,) + tail

    return sorted(rec(n, 1))


def power_type(parts, k):
    """Cycle type of sigma^k: each part l splits into gcd(l, k) parts of l/gcd(l, k)."""
    out = []
    for l in parts:
        g = gcd(l, k)
        out.extend([l // g] * g)
    return tuple(sorted(out))


def partition_label(parts):
    return "[" + ",".join(str(p) for p in sorted(parts, reverse=True)) + "]"


def symmetric_group(n: int) -> PowerGroup:
    """S_n with one class per cycle type."""
    if not 1 <= n <= 12:
        raise ValueError("symmetric groups are limited to 1 <= n <= 12")
    types = partitions(n)
    index = {t: i for i, t in enumerate(types)}
    orders, maps = [], []
    for t in types:
        o = 1
        for p in t:
            o = lcm(o, p)
        orders.append(o)
        maps.append([index[power_type(t, k)] for k in range(o)])
    labels = [partition_label(t) for t in types]
    return PowerGroup(orders, maps, labels, {"kind": "symmetric", "n": n}, cycle_types=types)


def product_group(G1: PowerGroup, G2: PowerGroup) -> PowerGroup:
    """G1 x G2; class (c1, c2) has index c1 * |classes of G2| + c2."""
    m2 = G2.class_count
    orders, maps, labels = [], [], []
    for c1 in range(G1.class_count):
        for c2 in range(m2):
            o = lcm(G1.orders[c1], G2.orders[c2])
            orders.append(o)
            maps.append([G1.power(c1, k) * m2 + G2.power(c2, k) for k in range(o)])
            labels.append(f"({G1.labels[c1]},{G2.labels[c2]})")
    desc = None
    if G1.descriptor and G2.descriptor:
        desc = {"kind": "product", "factors": [G1.descriptor, G2.descriptor]}
    return PowerGroup(orders, maps, labels, desc)


class NecklaceAt(NamedTuple):
    """Product exponents of lambda_t(chi)(g); ``exact`` is False when the
    vector has infinite support and only a truncation is returned."""

    vector: NeckVec
    exact: bool


@dataclass(frozen=True)
class IntegralityVerdict:
    value: bool
    agree: bool
    by_values: bool
    by_adams: bool
    by_support: bool


class ClassFunction:
    __slots__ = ("group", "ring", "values")

    def __init__(self, group: PowerGroup, values, ring: Ring = None):
        values = tuple(values)
        if len(values) != group.class_count:
            raise LengthMismatch(
                f"{group.class_count} classes but {len(values)} values")
        if ring is None:
            ring = join_rings(ring_of(v) for v in values)
        self.group = group
        self.ring = ring
        self.values = tuple(ring.coerce(v) for v in values)

    def __getitem__(self, c):
        return self.values[c]

    def _combine(self, other, op):
        if isinstance(other, ClassFunction):
            if other.group != self.group:
                raise ValueError("class functions live on different groups")
            ring = self.ring.join(other.ring)
            return ClassFunction(self.group, [op(ring.coerce(a), ring.coerce(b))
                                              for a, b in zip(self.values, other.values)], ring)
        ring = self.ring.join(ring_of(other))
        c = ring.coerce(other)
        return ClassFunction(self.group, [op(ring.coerce(a), c) for a in self.values], ring)

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return ClassFunction(self.group, [-v for v in self.values], self.ring)

    def __eq__(self, other):
        if isinstance(other, ClassFunction):
            return self.group == other.group and self.values == other.values
        if isinstance(other, (list, tuple)):
            return list(self.values) == list(other)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return "ClassFunction(" + ", ".join(scalar_text(v) for v in self.values) + ")"

    def to_json(self):
        return {"ring": self.ring.to_json(), "values": [format_scalar(v) for v in self.values]}

    # -- operations --

    def adams(self, n: int) -> "ClassFunction":
        """psi^n: value at g is chi(g^n)."""
        if n < 1:
            raise ValueError("Adams operations are indexed by n >= 1")
        G = self.group
        return ClassFunction(G, [self.values[G.power(c, n)] for c in range(G.class_count)],
                             self.ring)

    def ghost_at(self, c) -> GhostVec:
        """Periodic ghost vector n -> chi(g^n) for g in class c."""
        G = self.group
        o = G.orders[c]
        return GhostVec._raw(tuple(self.values[G.power(c, n)] for n in range(1, o + 1)),
                             o, None, self.ring)

    def lambda_series_at(self, c, order: int) -> LambdaSeries:
        """lambda_t(chi)(g) to the given order, for g in class c."""
        if order == 0:
            return LambdaSeries([1], ring=self.ring)
        f = z_inv(self.ghost_at(c), order, ring=q_lift(self.ring))
        if self.ring == ZZ and all(is_rational_integer(x) for x in f.coeffs):
            f = f.map_ring(ZZ)
        return f

    def lambda_powers(self, max_i: int):
        """[lambda^0, ..., lambda^max_i] as class functions."""
        per_class = [self.lambda_series_at(c, max_i) for c in range(self.group.class_count)]
        ring = join_rings((f.ring for f in per_class), ZZ)
        return [ClassFunction(self.group, [f.coeffs[i] for f in per_class], ring)
                for i in range(max_i + 1)]

    def necklace_at(self, c, horizon: int = 40) -> NecklaceAt:
        """Exponents of lambda_t(chi)(g) in the basis prod (1 - (-t)^d)^{x_d}.

        Exact and sparse on the divisors of the order of g when the ghost
        vector chi(g^n) only depends on gcd(n, order); otherwise truncated to
        ``horizon``.
        """
        a = self.ghost_at(c)
        ints = all(is_rational_integer(v) for v in a.values)
        a = a.map_ring(q_lift(self.ring))
        if a.is_T_image(a.period):
            x = phi_inv(a)
            if ints:
                x = x.map_ring(ZZ)
            return NecklaceAt(x, True)
        return NecklaceAt(phi_inv(a, horizon=horizon), False)

    def necklace_global(self) -> dict:
        """{d: alpha_d} over the divisors d of the exponent, where
        lambda_t(chi) = prod_d (1 - (-t)^d)^{alpha_d} as class functions."""
        if not all(is_rational_integer(v) for v in self.values):
            raise NotIntegerValued("the character takes non-integer values")
        G = self.group
        per_class = [self.necklace_at(c).vector for c in range(G.class_count)]
        return {d: ClassFunction(G, [x.get(d) for x in per_class], ZZ)
                for d in divisors(G.exponent)}

    def is_integer_valued(self, strict=True) -> IntegralityVerdict:
        """Run three independent tests of integer-valuedness.

        (a) every value is a rational integer; (b) psi^n = psi^gcd(n, e) on a
        full residue sweep plus extra n coprime to e; (c) every per-class
        product exponent vector is finitely supported.  With ``strict`` a
        disagreement raises InternalDisagreement.
        """
        G = self.group
        e = G.exponent
        by_values = all(is_rational_integer(v) for v in self.values)
        by_adams = all(self.adams(n) == self.adams(gcd(n, e)) for n in range(1, e + 1))
        if by_adams:
            psi1 = self.adams(1)
            by_adams = all(self.adams(n) == psi1
                           for n in range(e + 1, 3 * e + 1) if gcd(n, e) == 1)
        by_support = all(self.necklace_at(c, horizon=1).exact for c in range(G.class_count))
        agree = by_values == by_adams == by_support
        if strict and not agree:
            raise InternalDisagreement(
                f"integer-valued tests disagree: values={by_values}, "
                f"adams={by_adams}, support={by_support}")
        return IntegralityVerdict(by_values, agree, by_values, by_adams, by_support)

    def restrict_cyclic(self, c) -> "ClassFunction":
        """Restriction to the cyclic subgroup generated by an element of class c."""
        G = self.group
        o = G.orders[c]
        return ClassFunction(cyclic_group(o), [self.values[G.power(c, j)] for j in range(o)],
                             self.ring)


def class_function(group: PowerGroup, values, ring: Ring = None) -> ClassFunction:
    """Build a class function from parsed or JSON-form values."""
    parsed = [v if not isinstance(v, (str, dict)) else parse_scalar(v) for v in values]
    if len(parsed) != group.class_count:
        raise LengthMismatch(f"{group.class_count} classes but {len(parsed)} values")
    return ClassFunction(group, parsed, ring)


def character_from_json(group: PowerGroup, obj) -> ClassFunction:
    if not isinstance(obj, dict) or "values" not in obj:
        raise ParseError("character needs a values list")
    ring = Ring.from_json(obj["ring"]) if "ring" in obj else None
    if not isinstance(obj["values"], list):
        raise ParseError("character values must be a list")
    return class_function(group, obj["values"], ring)


def product_character(chi1: ClassFunction, chi2: ClassFunction) -> ClassFunction:
    """chi1 x chi2 on the product group."""
    G = product_group(chi1.group, chi2.group)
    ring = chi1.ring.join(chi2.ring)
    vals = [ring.coerce(a) * ring.coerce(b) for a in chi1.values for b in chi2.values]
    return ClassFunction(G, vals, ring)


def trivial_character(group: PowerGroup) -> ClassFunction:
    return ClassFunction(group, [1] * group.class_count, ZZ)


def permutation_character(n: int) -> ClassFunction:
    """Number of fixed points on {1..n}, as a class function of S_n."""
    G = symmetric_group(n)
    return ClassFunction(G, [t.count(1) for t in G.cycle_types], ZZ)


def sign_character(n: int) -> ClassFunction:
    G = symmetric_group(n)
    return ClassFunction(G, [(-1) ** (n - len(t)) for t in G.cycle_types], ZZ)
