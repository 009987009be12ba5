"""Two ways to multiply necklace vectors, timed against each other.

``direct`` convolves the supports pair by pair.  ``ghost`` truncates both
factors at the size bound, maps them to ghost components, multiplies
componentwise and inverts the ghost map, all over Q.
"""

import random
import time
from dataclasses import dataclass

from .errors import SizeLimit
from .necklace import NeckVec, phi, phi_inv
from .numeric import QQ

MAX_SIZE = 10 ** 5
IMPLS = ("direct", "ghost", "both")


def bench_inputs(size, seed=0, terms=None):
    """Two random sparse vectors over Q supported in [1, size]."""
    rng = random.Random(f"bench:{seed}:{size}")
    terms = terms or min(size, 200)
    def draw():
        return NeckVec({rng.randint(1, size): rng.randint(-9, 9) for _ in range(terms)}, ring=QQ)
    return draw(), draw()


def direct_mul(x, y, size):
    """Entries 1..size of x*y by convolving supports."""
    return (x * y).window(size)


def ghost_mul(x, y, size):
    """Entries 1..size of x*y through truncated ghost components."""
    tx = NeckVec._trunc(x.window(size), x.ring)
    ty = NeckVec._trunc(y.window(size), y.ring)
    return list(phi_inv(phi(tx) * phi(ty), horizon=size).values)


@dataclass
class BenchResult:
    size: int
    timings: dict
    agree: object  # True / False, or None when only one strategy ran

    def lines(self):
        out = [f"size {self.size}"]
        out += [f"{name}: {secs:.6f} s" for name, secs in self.timings.items()]
        if self.agree is not None:
            out.append("AGREE" if self.agree else "DISAGREE")
        return out

    def to_json(self):
        return {"size": self.size, "timings": dict(self.timings), "agree": self.agree}


def run_bench(impl="both", size=2000, seed=0, strategies=None):
    """Time the requested strategies; with both, compare entries 1..size exactly."""
    if impl not in IMPLS:
        raise ValueError(f"unknown implementation {impl!r}")
    if not 1 <= size <= MAX_SIZE:
        raise SizeLimit(f"size {size} outside 1..{MAX_SIZE}")
    strategies = strategies or {"direct": direct_mul, "ghost": ghost_mul}
    names = ("direct", "ghost") if impl == "both" else (impl,)
    x, y = bench_inputs(size, seed)
    timings, results = {}, {}
    for name in names:
        start = time.perf_counter()
        results[name] = strategies[name](x, y, size)
        timings[name] = time.perf_counter() - start
    agree = results["direct"] == results["ghost"] if impl == "both" else None
    return BenchResult(size, timings, agree)
