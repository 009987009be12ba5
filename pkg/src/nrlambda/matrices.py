"""Square matrices over exact scalars, stored row-wise as {column: value} dicts.

Representation matrices of permutation-like actions have one nonzero per row,
so a sparse layout keeps products linear in the dimension.
"""

from .numeric import ZZ, div_exact, join_rings, q_lift, ring_of, scalar_text


class Matrix:
    __slots__ = ("dim", "rows")

    def __init__(self, dim, rows):
        self.dim = dim
        self.rows = tuple(rows)

    @classmethod
    def identity(cls, dim):
        return cls(dim, ({i: 1} for i in range(dim)))

    @classmethod
    def from_dense(cls, entries):
        entries = [list(r) for r in entries]
        dim = len(entries)
        if any(len(r) != dim for r in entries):
            raise ValueError("matrix must be square")
        return cls(dim, ({j: v for j, v in enumerate(r) if v} for r in entries))

    def to_dense(self):
        return [[row.get(j, 0) for j in range(self.dim)] for row in self.rows]

    def __matmul__(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = []
        orows = other.rows
        for row in self.rows:
            acc = {}
            for k, a in row.items():
                for j, b in orows[k].items():
                    acc[j] = acc[j] + a * b if j in acc else a * b
            out.append({j: v for j, v in acc.items() if v})
        return Matrix(self.dim, out)

    def __add__(self, other):
        out = []
        for r1, r2 in zip(self.rows, other.rows):
            acc = dict(r1)
            for j, v in r2.items():
                acc[j] = acc[j] + v if j in acc else v
            out.append({j: v for j, v in acc.items() if v})
        return Matrix(self.dim, out)

    def scale(self, c):
        return Matrix(self.dim, ({j: c * v for j, v in r.items() if c * v} for r in self.rows))

    def add_scalar(self, c):
        """self + c * I."""
        out = []
        for i, r in enumerate(self.rows):
            acc = dict(r)
            acc[i] = acc[i] + c if i in acc else c
            out.append({j: v for j, v in acc.items() if v})
        return Matrix(self.dim, out)

    def trace(self):
        t = 0
        for i, r in enumerate(self.rows):
            if i in r:
                t = t + r[i]
        return t

    def kron(self, other):
        """Kronecker product; the left factor indexes the coarse blocks."""
        d2 = other.dim
        out = []
        for r1 in self.rows:
            for r2 in other.rows:
                out.append({j1 * d2 + j2: a * b for j1, a in r1.items() for j2, b in r2.items()})
        return Matrix(self.dim * d2, out)

    def ring(self):
        return join_rings((ring_of(v) for r in self.rows for v in r.values()), ZZ)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        if self.dim <= 8:
            body = "; ".join(" ".join(scalar_text(v) for v in r) for r in self.to_dense())
            return f"Matrix([{body}])"
        return f"Matrix(dim {self.dim})"


def kron_all(mats):
    out = mats[0]
    for m in mats[1:]:
        out = out.kron(m)
    return out


def det_coefficients(A: Matrix, order: int):
    """Coefficients e_0..e_N of det(I + tA), N = min(order, dim), and their ring.

    Faddeev-LeVerrier: with M_1 = I and p(x) = sum c_k x^k the characteristic
    polynomial, c_{n-k} = -tr(A M_k) / k and M_{k+1} = A M_k + c_{n-k} I;
    then e_k = (-1)^k c_{n-k}.
    """
    base = A.ring()
    work = q_lift(base)
    out = [work.one()]
    M = Matrix.identity(A.dim)
    for k in range(1, min(order, A.dim) + 1):
        AM = A @ M
        c = div_exact(-work.coerce(AM.trace()), k, work)
        out.append(c if k % 2 == 0 else -c)
        M = AM.add_scalar(c)
    return [base.coerce(e) for e in out], base
