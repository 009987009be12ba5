"""Randomized property suites behind ``nrlambda verify``.

Each suite draws ``cases`` independent cases from a generator seeded with
``seed`` and returns a report listing every failed check.  Reports are plain
data, so the same seed always prints the same text.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .characters import (
    ClassFunction,
    cyclic_group,
    permutation_character,
    product_character,
    sign_character,
    symmetric_group,
)
from .ghost import GhostVec
from .necklace import (
    NeckVec,
    phi,
    phi_inv,
    trunc_product_entry,
    direct_product_entry,
)
from .numeric import QQ, ZZ, Cyclotomic, cyclotomic_ring, divisors, is_rational_integer
from .series import LambdaSeries, enr, enr_inv, z
from .symrep import (
    MASMatrix,
    Permutation,
    chi_closed,
    det_series,
    enr_cycle_power,
    enr_full_cycle,
    lam_series_sigma,
    perm_power_type,
    relations_check,
    rep_matrix,
)
from .characters import partitions


# -- random objects ----------------------------------------------------------

def random_sparse(rng, ring=ZZ, max_index=12, max_terms=4, lo=-9, hi=9):
    entries = {}
    for _ in range(rng.randint(0, max_terms)):
        entries[rng.randint(1, max_index)] = rng.randint(lo, hi)
    return NeckVec(entries, ring=ring)


def random_periodic(rng, ring=QQ, max_period=4, lo=-9, hi=9):
    c = rng.randint(1, max_period)
    return GhostVec([rng.randint(lo, hi) for _ in range(c)], period=c, ring=ring)


def random_rational(rng, lo=-5, hi=5, max_den=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_series(rng, order, rational=False):
    if rational:
        coeffs = [1] + [random_rational(rng, -3, 3, 3) for _ in range(order)]
        return LambdaSeries(coeffs, ring=QQ)
    return LambdaSeries([1] + [rng.randint(-3, 3) for _ in range(order)], ring=ZZ)


def random_mas(rng, k):
    """Random multiplicative anti-symmetric k x k matrix with rational entries."""
    q = [[None] * k for _ in range(k)]
    for i in range(k):
        q[i][i] = rng.choice((1, -1))
        for j in range(i + 1, k):
            v = Fraction(rng.choice((-1, 1)) * rng.randint(1, 5), rng.randint(1, 5))
            q[i][j], q[j][i] = v, 1 / v
    return MASMatrix(q)


def random_permutation(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


def cyclic_linear_character(n, j):
    """g^k -> zeta_n^(jk) on Z/n."""
    G = cyclic_group(n)
    return ClassFunction(G, [Cyclotomic.zeta(n, (j * k) % n) for k in range(n)],
                         cyclotomic_ring(n))


def random_cyclic_character(rng, n, galois_stable):
    """Random Z-combination of the linear characters of Z/n.

    With ``galois_stable`` the coefficients only depend on gcd(j, n), which
    makes the character integer-valued.
    """
    by_gcd = {}
    total = None
    for j in range(n):
        g = gcd(j, n)
        if galois_stable:
            c = by_gcd.setdefault(g, rng.randint(-2, 2))
        else:
            c = rng.randint(-2, 2)
        term = cyclic_linear_character(n, j) * c
        total = term if total is None else total + term
    return total


# -- reporting ---------------------------------------------------------------

@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: int
    failures: list = field(default_factory=list)
    checks: int = 0
    failed_cases: int = 0

    @property
    def ok(self):
        return not self.failures

    def lines(self, limit=20):
        out = [f"suite {self.suite}: seed {self.seed}, {self.cases} cases, {self.checks} checks",
               f"passed {self.cases - self.failed_cases}/{self.cases} cases"]
        for f in self.failures[:limit]:
            out.append(f"FAIL {f}")
        if len(self.failures) > limit:
            out.append(f"... {len(self.failures) - limit} more failures")
        return out

    def to_json(self):
        return {"suite": self.suite, "seed": self.seed, "cases": self.cases,
                "checks": self.checks, "failed_cases": self.failed_cases,
                "failures": list(self.failures), "ok": self.ok}


class _Case:
    def __init__(self, report, index):
        self.report = report
        self.index = index
        self.bad = False

    def check(self, cond, label):
        self.report.checks += 1
        if not cond:
            self.bad = True
            self.report.failures.append(f"case {self.index}: {label}")


def _run(name, seed, cases, body):
    report = SuiteReport(name, seed, cases)
    rng = random.Random(f"{name}:{seed}")
    for i in range(cases):
        case = _Case(report, i)
        try:
            body(rng, case)
        except Exception as exc:  # a crash is a failed case, not a crashed suite
            case.check(False, f"raised {type(exc).__name__}: {exc}")
        if case.bad:
            report.failed_cases += 1
    return report


# -- suites ------------------------------------------------------------------

def _ring_case(rng, case):
    x, y, w = (random_sparse(rng) for _ in range(3))
    one = NeckVec({1: 1}, ring=ZZ)
    zero = NeckVec({}, ring=ZZ)
    case.check((x + y) + w == x + (y + w), "Nr addition associative")
    case.check(x + y == y + x, "Nr addition commutative")
    case.check(x + zero == x and x + (-x) == zero, "Nr additive unit and inverse")
    case.check((x * y) * w == x * (y * w), "Nr multiplication associative")
    case.check(x * y == y * x, "Nr multiplication commutative")
    case.check(x * (y + w) == x * y + x * w, "Nr distributive")
    case.check(one * x == x, "Nr unit is delta_1")
    case.check(phi(x + y) == phi(x) + phi(y), "phi additive")
    case.check(phi(x * y) == phi(x) * phi(y), "phi multiplicative")
    case.check(phi(one) == GhostVec([1], period=1, ring=ZZ), "phi(1) = 1")
    case.check(phi_inv(phi(x).map_ring(QQ)).map_ring(ZZ) == x, "phi injective on Sparse")
    a, b, c = (random_periodic(rng) for _ in range(3))
    case.check((a + b) + c == a + (b + c) and (a * b) * c == a * (b * c), "Gh associative")
    case.check(a * (b + c) == a * b + a * c, "Gh distributive")
    m = rng.choice((3, 4, 5, 6, 8, 12))
    p, q, s = (Cyclotomic(m, [random_rational(rng) for _ in range(len(Cyclotomic.zeta(m).coords))])
               for _ in range(3))
    case.check((p + q) * s == p * s + q * s and (p * q) * s == p * (q * s),
               f"Q(zeta_{m}) axioms")


def ring_suite(seed=0, cases=200):
    """Ring axioms of Nr and Gh, and phi as a ring homomorphism."""
    return _run("ring", seed, cases, _ring_case)


def _zero_like(v):
    if isinstance(v, NeckVec):
        return NeckVec._sparse({}, v.ring)
    return GhostVec._raw((v.ring.zero(),), 1, None, v.ring)


def operator_identities(v, r, s):
    """(label, holds) for every operator identity at (r, s) on one vector."""
    g = gcd(r, s)
    zero = _zero_like(v)
    out = [
        ("V_r V_s = V_rs", v.V(s).V(r) == v.V(r * s)),
        ("F_r F_s = F_rs", v.F(s).F(r) == v.F(r * s)),
        ("F_r V_s = (r,s) F_{r/(r,s)} V_{s/(r,s)}",
         v.V(s).F(r) == v.V(s // g).F(r // g).scale(g)),
        ("V'_r V'_s = V'_rs", v.Vdiv(s).Vdiv(r) == v.Vdiv(r * s)),
        ("T_r T_s = T_(r,s)", v.T(s).T(r) == v.T(g)),
        ("F_r T_s = T_{s/(r,s)} F_(r,s)", v.T(s).F(r) == v.F(g).T(s // g)),
        ("F_r W_s = W_{s/(r,s)} F_r", v.W(s).F(r) == v.F(r).W(s // g)),
    ]
    if g == 1:
        out.append(("F_r V_s = V_s F_r for coprime r, s", v.V(s).F(r) == v.F(r).V(s)))
    if r % s == 0:
        out.append(("T_r V_s = V_s T_{r/s}", v.V(s).T(r) == v.T(r // s).V(s)))
    else:
        out.append(("T_r V_s = 0", v.V(s).T(r) == zero))
        out.append(("T_r W_s = 0", v.W(s).T(r) == zero))
    if r == s:
        out.append(("F_r V_r = r", v.V(r).F(r) == v.scale(r)))
        out.append(("F_r V'_r = id", v.Vdiv(r).F(r) == v))
        out.append(("W_r W_r = W_r", v.W(r).W(r) == v.W(r)))
    return out


def _vft_case(rng, case, max_rs=12):
    x = random_sparse(rng, ring=QQ)
    y = random_sparse(rng, ring=QQ)
    a = random_periodic(rng)
    b = random_periodic(rng)
    for r in range(1, max_rs + 1):
        case.check((x * y).F(r) == x.F(r) * y.F(r), f"Nr F_{r} multiplicative")
        case.check((a * b).F(r) == a.F(r) * b.F(r), f"Gh F_{r} multiplicative")
        for op in ("V", "Vdiv", "F", "T", "W"):
            case.check(phi(x.apply(op, r)) == phi(x).apply(op, r), f"phi commutes with {op}_{r}")
        for s in range(1, max_rs + 1):
            for label, ok in operator_identities(x, r, s):
                case.check(ok, f"Nr {label} (r={r}, s={s})")
            for label, ok in operator_identities(a, r, s):
                case.check(ok, f"Gh {label} (r={r}, s={s})")


def vft_suite(seed=0, cases=50, max_rs=12):
    """Operator identities on necklace and ghost vectors for all r, s <= max_rs."""
    return _run("vft", seed, cases, lambda rng, case: _vft_case(rng, case, max_rs))


def _enr_case(rng, case, order):
    f = random_series(rng, order, rational=(case.index % 2 == 1))
    x = enr(f, crosscheck=True)
    case.check(phi(x) == z(f), "phi(E(f)) = z(f)")
    case.check(enr_inv(x, order) == f, "E^-1(E(f)) = f")
    y = random_sparse(rng, ring=f.ring)
    case.check(enr(enr_inv(y, order)).values == tuple(y.window(order)), "E(E^-1(x)) = x")


def enr_suite(seed=0, cases=200, order=40):
    """phi o E = z and the E / E^-1 round trips."""
    return _run("enr", seed, cases, lambda rng, case: _enr_case(rng, case, order))


def _dense_random(rng, size, ring=QQ):
    return NeckVec({n: rng.randint(-9, 9) for n in range(1, size + 1) if rng.random() < 0.6},
                   ring=ring)


def _thm322_case(rng, case, bound):
    x = _dense_random(rng, bound)
    y = _dense_random(rng, bound)
    for r in range(1, bound + 1):
        for s in range(1, bound + 1):
            got = trunc_product_entry(x, y, r, s)
            case.check(got == direct_product_entry(x, y, r, s), f"factorized entry r={r}, s={s}")


def thm322_suite(seed=0, cases=5, bound=60):
    """Factorized truncated product entry against direct convolution, all r, s <= bound."""
    return _run("thm322", seed, cases, lambda rng, case: _thm322_case(rng, case, bound))


def _random_character(rng, index):
    kind = index % 4
    if kind == 0:
        n = rng.randint(1, 12)
        return random_cyclic_character(rng, n, galois_stable=rng.random() < 0.5)
    if kind == 1:
        n = rng.randint(1, 5)
        powers = permutation_character(n).lambda_powers(n)
        chi = sign_character(n) * rng.randint(-2, 2)
        for lam in powers:
            chi = chi + lam * rng.randint(-2, 2)
        return chi
    if kind == 2:
        n = rng.randint(2, 6)
        return cyclic_linear_character(n, rng.randint(0, n - 1))
    n = rng.randint(2, 4)
    return product_character(permutation_character(3), random_cyclic_character(
        rng, n, galois_stable=rng.random() < 0.5))


def _intval_case(rng, case):
    chi = _random_character(rng, case.index)
    verdict = chi.is_integer_valued(strict=False)
    case.check(verdict.agree, f"detectors disagree on {chi}: {verdict}")
    if not verdict.value:
        return
    e = chi.group.exponent
    for lam in chi.lambda_powers(min(2 * e, 12)):
        case.check(all(is_rational_integer(v) for v in lam.values),
                   f"lambda power of {chi} not integer-valued")
    alpha = chi.necklace_global()
    for c in range(chi.group.class_count):
        x = NeckVec({d: alpha[d][c] for d in alpha}, ring=ZZ)
        case.check(enr_inv(x, 2 * e) == chi.lambda_series_at(c, 2 * e),
                   f"global product form at class {c} of {chi}")


def intval_suite(seed=0, cases=100):
    """Agreement of the three integer-valued tests on random virtual characters."""
    return _run("intval", seed, cases, _intval_case)


def _class_of(G, parts):
    return G.cycle_types.index(tuple(sorted(parts)))


def _symrep_case(rng, case):
    k = rng.randint(1, 3)
    n = rng.randint(1, 5)
    Q = random_mas(rng, k)
    sigma = random_permutation(rng, n)
    A = rep_matrix(Q, n, sigma)
    case.check(chi_closed(Q, sigma) == A.trace(), f"character at {sigma} (k={k})")
    case.check(A == rep_matrix(Q, n, sigma, side="left"), f"word independence at {sigma}")
    G = symmetric_group(n)
    chi = ClassFunction(G, [chi_closed(Q, t) for t in G.cycle_types], ZZ)
    order = min(8, k ** n)
    case.check(det_series(A, 8) == chi.lambda_series_at(_class_of(G, sigma.cycle_type()), order),
               f"det(I + tA) at {sigma} (k={k})")
    case.check(relations_check(Q, min(n, 4)).ok, f"relations for k={k}")
    m = rng.randint(1, 8)
    Gm = symmetric_group(m)
    chi_m = ClassFunction(Gm, [chi_closed(Q, t) for t in Gm.cycle_types], ZZ)
    generic = chi_m.necklace_at(_class_of(Gm, (m,))).vector
    case.check(enr_full_cycle(Q, m) == generic, f"full {m}-cycle closed form (k={k})")
    for r in divisors(m):
        want = chi_m.necklace_at(_class_of(Gm, perm_power_type((m,), r))).vector
        case.check(enr_cycle_power(Q, m, r) == want, f"{m}-cycle to the power {r} (k={k})")
    parts = rng.choice(partitions(m))
    c = _class_of(Gm, parts)
    series, neck = lam_series_sigma(Q, parts, 12, with_necklace=True)
    case.check(series == chi_m.lambda_series_at(c, 12), f"lambda series at type {parts}")
    case.check(neck == chi_m.necklace_at(c).vector, f"product exponents at type {parts}")


def symrep_suite(seed=0, cases=30):
    """Closed forms of the braided-swap representation against generic paths."""
    return _run("symrep", seed, cases, _symrep_case)


SUITES = {
    "ring": ring_suite,
    "vft": vft_suite,
    "enr": enr_suite,
    "thm322": thm322_suite,
    "intval": intval_suite,
    "symrep": symrep_suite,
}


def run_suite(name, seed=0, cases=None):
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    return fn(seed) if cases is None else fn(seed, cases)
