"""Exact integer linear algebra: Smith normal form, Bareiss determinants, cokernels.

All arithmetic uses Python integers, so nothing overflows. Matrices are small
(tens of rows) in every use inside the package, so dense list-of-rows storage
is plenty.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Sequence

from .errors import GuardError, InputError

CHAR_POLY_MAX_DIM = 12


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise InputError(f"matrix data does not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(tuple(values[i] if i == j else 0 for j in range(n))
                               for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.data[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ocols = other.T.data
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in ocols)
                               for r in self.data))

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.cols:
            raise InputError(f"vector length {len(x)} does not match {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(r, x)) for r in self.data)

    def delete(self, row: int, col: int | None = None) -> "IntMatrix":
        """Drop one row and one column (the same index unless ``col`` is given)."""
        col = row if col is None else col
        return IntMatrix(self.rows - 1, self.cols - 1,
                         tuple(tuple(x for j, x in enumerate(r) if j != col)
                               for i, r in enumerate(self.data) if i != row))

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "IntMatrix":
        """Row i of the result is row ``row_perm[i]`` of self (same for columns)."""
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(self.data[i][j] for j in col_perm) for i in row_perm))

    def is_symmetric(self) -> bool:
        return self.is_square and self.data == self.T.data


def _as_matrix(M) -> IntMatrix:
    return M if isinstance(M, IntMatrix) else IntMatrix.from_rows(M)


# -- abelian groups -----------------------------------------------------------

@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z/d1 x ... x Z/dk x Z^r`` with d1 | d2 | ..."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in t):
            raise InputError(f"invariant factors must be >= 2, got {t}")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise InputError(f"invariant factors {t} do not form a divisibility chain")
        if self.free_rank < 0:
            raise InputError("free rank must be nonnegative")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_cyclic_factors(cls, orders: Iterable[int], free_rank: int = 0) -> "AbelianGroup":
        """Canonical form of a product of cyclic groups ``Z/o`` (o = 0 means Z)."""
        orders = [abs(int(o)) for o in orders]
        if not orders:
            return cls((), free_rank)
        g = cokernel_group(IntMatrix.diagonal(orders))
        return cls(g.torsion, g.free_rank + free_rank)

    @classmethod
    def cyclic(cls, order: int) -> "AbelianGroup":
        return cls.from_cyclic_factors([order])

    def __mul__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_cyclic_factors(self.torsion + other.torsion,
                                                self.free_rank + other.free_rank)

    @property
    def order(self) -> int | None:
        """Group order, or None for infinite groups."""
        return prod(self.torsion) if self.free_rank == 0 else None

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion)

    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def is_cyclic(self) -> bool:
        return len(self.torsion) + self.free_rank <= 1

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "trivial"


# -- Smith normal form --------------------------------------------------------

def _smith(M: IntMatrix, track: bool):
    """Diagonalize ``M`` in place on a copy; returns (diagonal, U, V) with U M V = D."""
    A = M.tolist()
    m, n = M.rows, M.cols
    U = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if track else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if track:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        if track:
            for r in V:
                r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        if track:
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):  # col_dst += q * col_src
        for r in A:
            r[dst] += q * r[src]
        if track:
            for r in V:
                r[dst] += q * r[src]

    diag = []
    for t in range(min(m, n)):
        while True:
            # smallest nonzero entry of the trailing block becomes the pivot
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    a = A[i][j]
                    if a and (best is None or abs(a) < best[0]):
                        best = (abs(a), i, j)
            if best is None:
                break
            _, i, j = best
            swap_rows(t, i)
            swap_cols(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            # divisibility repair: fold a row with a non-multiple into row t
            bad = next((i for i in range(t + 1, m)
                        for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(bad, t, 1)
        if best is None:
            break
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            if track:
                U[t] = [-a for a in U[t]]
        diag.append(A[t][t])
    diag += [0] * (min(m, n) - len(diag))
    return diag, U, V


def smith_normal_form(M) -> list[int]:
    """Invariant factors of ``M``: nonnegative, nonzero ones form a divisibility chain."""
    return _smith(_as_matrix(M), False)[0]


def smith_form_with_transforms(M) -> tuple[list[int], IntMatrix, IntMatrix]:
    """Return ``(diag, U, V)`` with ``U @ M @ V`` diagonal and U, V unimodular."""
    M = _as_matrix(M)
    diag, U, V = _smith(M, True)
    return diag, IntMatrix.from_rows(U, M.rows), IntMatrix.from_rows(V, M.cols)


def rank(M) -> int:
    return sum(1 for d in smith_normal_form(M) if d)


def cokernel_group(M) -> AbelianGroup:
    """``Z^rows / image(M)`` in invariant-factor form."""
    M = _as_matrix(M)
    diag = smith_normal_form(M)
    nonzero = [d for d in diag if d]
    return AbelianGroup(tuple(d for d in nonzero if d != 1), M.rows - len(nonzero))


def in_image(M, b: Sequence[int]) -> bool:
    """True iff ``M x = b`` has an integer solution ``x``."""
    M = _as_matrix(M)
    if len(b) != M.rows:
        raise InputError(f"right-hand side has length {len(b)}, matrix has {M.rows} rows")
    diag, U, _ = smith_form_with_transforms(M)
    c = U.apply(b)
    for i, ci in enumerate(c):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if ci:
                return False
        elif ci % d:
            return False
    return True


# -- determinants and friends -------------------------------------------------

def determinant(M) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    M = _as_matrix(M)
    if not M.is_square:
        raise InputError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return 1
    A = M.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def leading_principal_minors(M) -> list[int]:
    M = _as_matrix(M)
    if not M.is_square:
        raise InputError("leading principal minors need a square matrix")
    return [determinant(IntMatrix.from_rows([r[:k] for r in M.data[:k]], k))
            for k in range(1, M.rows + 1)]


def char_poly(M, max_dim: int = CHAR_POLY_MAX_DIM) -> list[int]:
    """Coefficients of ``det(xI - M)``, leading coefficient first (Faddeev-LeVerrier)."""
    M = _as_matrix(M)
    if not M.is_square:
        raise InputError("characteristic polynomial needs a square matrix")
    n = M.rows
    if n > max_dim:
        raise GuardError(f"characteristic polynomial limited to dimension {max_dim}")
    A = M.tolist()
    coeffs = [1]
    Mk = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # Mk <- A Mk + c I, then c_{n-k} = -tr(A Mk) / k (always exact)
        Mk = [[sum(A[i][t] * Mk[t][j] for t in range(n)) + (c if i == j else 0)
               for j in range(n)] for i in range(n)]
        tr = sum(sum(A[i][t] * Mk[t][i] for t in range(n)) for i in range(n))
        c = -tr // k
        coeffs.append(c)
    return coeffs


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


# -- text format --------------------------------------------------------------

def parse_matrix(text: str) -> IntMatrix:
    """First line ``rows cols``, then whitespace-separated integer rows."""
    tokens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        tokens += line.split()
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise InputError(f"matrix file contains a non-integer token: {exc}") from None
    if len(values) < 2:
        raise InputError("matrix file needs a 'rows cols' header")
    rows, cols = values[0], values[1]
    if rows < 0 or cols < 0:
        raise InputError("matrix dimensions must be nonnegative")
    body = values[2:]
    if len(body) != rows * cols:
        raise InputError(f"expected {rows * cols} entries, found {len(body)}")
    return IntMatrix.from_rows([body[i * cols:(i + 1) * cols] for i in range(rows)], cols)


def format_matrix(M: IntMatrix) -> str:
    lines = [f"{M.rows} {M.cols}"] + [" ".join(str(x) for x in r) for r in M.data]
    return "\n".join(lines) + "\n"
