"""Braided-swap representations of S_n on (K^k)^{tensor n}.

A k x k matrix Q with q_ij q_ji = 1 gives the swap F(v_i x v_j) = q_ij v_j x v_i
and a representation of S_n sending the transposition (i i+1) to F acting on
tensor positions i, i+1.  Its character is k^(#odd cycles) * Tr(Q)^(#even
cycles), and the product exponents of lambda_t at a full cycle have a closed
form in terms of necklace polynomial vectors.
"""

import re
from dataclasses import dataclass, field
from math import lcm

from .characters import power_type
from .errors import NotDivisor, NotMAS, ParseError, SizeLimit
from .ghost import GhostVec
from .matrices import Matrix, det_coefficients, kron_all
from .necklace import NeckVec, delta, phi_inv
from .numeric import (
    QQ,
    ZZ,
    format_scalar,
    is_rational_integer,
    join_rings,
    parse_scalar,
    ring_of,
    valuation,
)
from .series import LambdaSeries, enr_inv, lam_mul

MAX_DIM = 4096


class MASMatrix:
    """k x k matrix with q_ij * q_ji = 1 (checked unless check=False)."""

    def __init__(self, entries, check=True):
        rows = [[parse_scalar(v) if isinstance(v, (str, dict)) else v for v in r]
                for r in entries]
        k = len(rows)
        if k < 1 or any(len(r) != k for r in rows):
            raise ParseError("matrix must be square and nonempty")
        self.ring = join_rings((ring_of(v) for r in rows for v in r), ZZ)
        self.k = k
        self.entries = tuple(tuple(self.ring.coerce(v) for v in r) for r in rows)
        if check:
            for i in range(k):
                for j in range(i, k):
                    if self.entries[i][j] * self.entries[j][i] != 1:
                        raise NotMAS(f"q[{i + 1}][{j + 1}] * q[{j + 1}][{i + 1}] != 1")

    def q(self, i, j):
        return self.entries[i][j]

    @property
    def trace(self):
        t = sum((self.entries[i][i] for i in range(self.k)), 0)
        return ZZ.coerce(t) if is_rational_integer(t) else t

    def to_json(self):
        return {"k": self.k, "entries": [[format_scalar(v) for v in r] for r in self.entries]}

    @staticmethod
    def from_json(obj, check=True):
        if not isinstance(obj, dict) or "entries" not in obj:
            raise ParseError("matrix needs an entries list")
        entries = obj["entries"]
        if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
            raise ParseError("matrix entries must be a list of rows")
        if "k" in obj and obj["k"] != len(entries):
            raise ParseError("k does not match the number of rows")
        return MASMatrix(entries, check=check)


# -- permutations ------------------------------------------------------------

class Permutation:
    """Bijection of {1..n}; products compose right to left."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a permutation")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles, n):
        img = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if a in seen:
                    raise ParseError(f"letter {a} repeated")
                if not 1 <= a <= n:
                    raise ParseError(f"letter {a} outside 1..{n}")
                seen.add(a)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(img)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        return Permutation(self(other(i)) for i in range(1, self.n + 1))

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(inv)

    def power(self, k):
        out = Permutation.identity(self.n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def cycles(self):
        """All cycles including fixed points, each starting at its smallest letter."""
        seen, out = set(), []
        for i in range(1, self.n + 1):
            if i not in seen:
                cyc = [i]
                seen.add(i)
                j = self(i)
                while j != i:
                    cyc.append(j)
                    seen.add(j)
                    j = self(j)
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self):
        o = 1
        for c in self.cycles():
            o = lcm(o, len(c))
        return o

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    __repr__ = __str__


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int = None) -> Permutation:
    """Read disjoint-cycle notation such as "(1 2 3)(4 5)" or "()"."""
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise ParseError(f"malformed permutation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        parts = body.replace(",", " ").split()
        try:
            cyc = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"malformed permutation {text!r}") from None
        if cyc:
            cycles.append(cyc)
    if n is None:
        n = max((a for c in cycles for a in c), default=1)
    return Permutation.from_cycles(cycles, n)


def perm_power_type(parts, k):
    """Cycle type of sigma^k from the cycle type of sigma (descending)."""
    return tuple(sorted(power_type(parts, k), reverse=True))


def consecutive_permutation(parts) -> Permutation:
    """(1 .. l1)(l1+1 .. l1+l2)... for a cycle type (l1, l2, ...)."""
    cycles, start = [], 1
    for l in parts:
        cycles.append(list(range(start, start + l)))
        start += l
    return Permutation.from_cycles(cycles, start - 1)


def reduced_word(sigma: Permutation, side="right"):
    """Indices i_1..i_m with sigma = s_{i_1} ... s_{i_m}, s_i = (i i+1).

    ``side="right"`` bubble-sorts positions, ``side="left"`` sorts values;
    both give words of minimal length but generally different ones.
    """
    w = list(sigma.images)
    swaps = []
    if side == "right":
        # sigma * s_i swaps positions i, i+1 of the one-line notation
        changed = True
        while changed:
            changed = False
            for p in range(len(w) - 1):
                if w[p] > w[p + 1]:
                    w[p], w[p + 1] = w[p + 1], w[p]
                    swaps.append(p + 1)
                    changed = True
        return swaps[::-1]
    if side == "left":
        # s_i * sigma swaps the values i and i+1
        pos = {v: p for p, v in enumerate(w)}
        changed = True
        while changed:
            changed = False
            for i in range(1, len(w)):
                if pos[i] > pos[i + 1]:
                    pos[i], pos[i + 1] = pos[i + 1], pos[i]
                    swaps.append(i)
                    changed = True
        return swaps
    raise ValueError(f"unknown side {side!r}")


# -- matrices ----------------------------------------------------------------

def _check_dim(k, n):
    if k ** n > MAX_DIM:
        raise SizeLimit(f"{k}^{n} = {k ** n} exceeds the matrix cap {MAX_DIM}")


def swap_matrix(Q: MASMatrix) -> Matrix:
    """F on V x V in the basis v_a x v_b (index a*k + b)."""
    k = Q.k
    rows = []
    for a in range(k):
        for b in range(k):
            rows.append({b * k + a: Q.q(b, a)})
    return Matrix(k * k, rows)


def p_matrix(Q: MASMatrix, l: int) -> Matrix:
    """P(Q, l) assembled from the block matrices F_{l,j,i}.

    F_{0,j,i} is the 1x1 matrix [j == i]; F_{l,j,i} has block row j equal to
    q_ji * (F_{l-1,1,i} ... F_{l-1,k,i}) and zeros elsewhere; P(Q, l) has
    F_{l-1,j,i} as its (i, j) block.
    """
    if l < 1:
        raise ValueError("P(Q, l) needs l >= 1")
    k = Q.k
    _check_dim(k, l)
    F = {(j, i): Matrix(1, [{0: 1}] if j == i else [{}]) for j in range(k) for i in range(k)}
    for level in range(1, l):
        s = k ** (level - 1)
        nxt = {}
        for j in range(k):
            for i in range(k):
                q = Q.q(j, i)
                rows = [{} for _ in range(k * s)]
                for r in range(s):
                    rows[j * s + r] = {c * s + col: q * v
                                       for c in range(k)
                                       for col, v in F[(c, i)].rows[r].items()}
                nxt[(j, i)] = Matrix(k * s, rows)
        F = nxt
    s = k ** (l - 1)
    rows = []
    for i in range(k):
        for r in range(s):
            rows.append({j * s + col: v for j in range(k) for col, v in F[(j, i)].rows[r].items()})
    return Matrix(k * s, rows)


def generator_matrix(Q: MASMatrix, n: int, i: int) -> Matrix:
    """Image of (i i+1): identity on all tensor factors except i, i+1."""
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} outside 1..{n - 1}")
    _check_dim(Q.k, n)
    k = Q.k
    return Matrix.identity(k ** (i - 1)).kron(swap_matrix(Q)).kron(Matrix.identity(k ** (n - i - 1)))


def rep_matrix(Q: MASMatrix, n: int, sigma: Permutation, side="right") -> Matrix:
    """Representation matrix of sigma as a product over a reduced word."""
    if sigma.n != n:
        raise ValueError(f"permutation acts on {sigma.n} letters, expected {n}")
    _check_dim(Q.k, n)
    gens = {}
    out = Matrix.identity(Q.k ** n)
    for i in reduced_word(sigma, side):
        if i not in gens:
            gens[i] = generator_matrix(Q, n, i)
        out = out @ gens[i]
    return out


def kronecker_oracle(Q: MASMatrix, parts) -> Matrix:
    """P(Q, l1) x P(Q, l2) x ... for the permutation (1..l1)(l1+1..l1+l2)..."""
    _check_dim(Q.k, sum(parts))
    return kron_all([p_matrix(Q, l) for l in parts])


def det_series(A: Matrix, order: int) -> LambdaSeries:
    """det(I + tA) to order min(order, dim)."""
    coeffs, ring = det_coefficients(A, order)
    return LambdaSeries._raw(coeffs, ring)


# -- closed forms ------------------------------------------------------------

def _cycle_type(sigma_or_type):
    if isinstance(sigma_or_type, Permutation):
        return sigma_or_type.cycle_type()
    return tuple(sigma_or_type)


def chi_closed(Q: MASMatrix, sigma_or_type):
    """k^(#odd cycles) * Tr(Q)^(#even cycles)."""
    parts = _cycle_type(sigma_or_type)
    odd = sum(1 for p in parts if p % 2)
    even = len(parts) - odd
    return Q.k ** odd * Q.trace ** even


def _closed_form(k, tr, m, c):
    # T_m( M(tr) + W_{2^c}( M(k) - M(tr) ) ), evaluated on ghost components
    ring = join_rings((ring_of(k), ring_of(tr)), QQ)
    g_tr = GhostVec._raw(tuple(ring.coerce(tr ** d) for d in range(1, m + 1)), None, m, ring)
    g_k = GhostVec._raw(tuple(ring.coerce(k ** d) for d in range(1, m + 1)), None, m, ring)
    ghost = (g_tr + (g_k - g_tr).W(2 ** c)).T(m)
    x = phi_inv(ghost)
    if all(is_rational_integer(v) for v in x.entries.values()):
        x = x.map_ring(ZZ)
    return x


def enr_full_cycle(Q: MASMatrix, n: int) -> NeckVec:
    """Product exponents of lambda_t(chi_{Q,n}) at the n-cycle (1 2 ... n).

    T_n(M(Tr Q) + W_{2^c}(M(k) - M(Tr Q))) with 2^c the exact power of 2
    dividing n (c = 0 for odd n, where W_1 is the identity).
    """
    if n < 1:
        raise ValueError("cycle length must be positive")
    return _closed_form(Q.k, Q.trace, n, valuation(n, 2))


def enr_cycle_power(Q: MASMatrix, n: int, r: int) -> NeckVec:
    """Product exponents at the r-th power of the n-cycle (r | n).

    Equal to F_r of :func:`enr_full_cycle`: T_{n/r}(M(Tr^r) + W_{2^b}(M(k^r) - M(Tr^r)))
    where 2^b exactly divides n/r.
    """
    if r < 1 or n % r:
        raise NotDivisor(f"{r} does not divide {n}")
    m = n // r
    return _closed_form(Q.k ** r, Q.trace ** r, m, valuation(n, 2) - valuation(r, 2))


def lam_series_sigma(Q: MASMatrix, sigma_or_type, order: int, with_necklace=False):
    """lambda_t(chi_{Q,n})(sigma) as a lambda-ring product over the cycles of sigma.

    With ``with_necklace`` also return the exact product exponents, i.e. the
    necklace-ring product of the per-cycle vectors.
    """
    parts = _cycle_type(sigma_or_type)
    series = LambdaSeries._raw([1, 1] + [0] * (order - 1), ZZ) if order >= 1 else None
    neck = delta(1, 1)
    for l in parts:
        x = enr_full_cycle(Q, l)
        neck = neck * x
        if series is not None:
            series = lam_mul(series, enr_inv(x, order))
    if series is None:
        series = LambdaSeries([1], ring=neck.ring)
    if with_necklace:
        return series, neck
    return series


# -- relations ---------------------------------------------------------------

@dataclass
class RelationReport:
    results: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.results.values())

    def failed(self):
        return [name for name, good in self.results.items() if not good]


def relations_check(Q: MASMatrix, n: int) -> RelationReport:
    """Check F^2 = 1, Yang-Baxter and the Coxeter relations of S_n."""
    k = Q.k
    _check_dim(k, max(n, 3))
    report = RelationReport()
    F = swap_matrix(Q)
    I1 = Matrix.identity(k)
    report.results["F^2 = id"] = F @ F == Matrix.identity(k * k)
    A, B = F.kron(I1), I1.kron(F)
    report.results["Yang-Baxter"] = A @ B @ A == B @ A @ B
    if n >= 2:
        gens = [generator_matrix(Q, n, i) for i in range(1, n)]
        one = Matrix.identity(k ** n)
        for i, s in enumerate(gens, 1):
            report.results[f"s{i}^2 = 1"] = s @ s == one
        for i in range(1, n - 1):
            st = gens[i - 1] @ gens[i]
            report.results[f"(s{i} s{i + 1})^3 = 1"] = st @ st @ st == one
        for i in range(1, n):
            for j in range(i + 2, n):
                st = gens[i - 1] @ gens[j - 1]
                report.results[f"(s{i} s{j})^2 = 1"] = st @ st == one
    return report
