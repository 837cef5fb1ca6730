"""Exact integer linear algebra: Smith normal form and cokernel invariants.

Everything here runs on plain Python integers, so entries may grow without
bound and results are always exact.  The pivoting strategy is
smallest-nonzero-absolute-value with alternating row/column reduction, which
is simple and fast enough for matrices at desk scale (a few hundred rows).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: list[list[int]] | tuple) -> "IntMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(nrows, ncols, tuple(int(v) for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        orows = other.to_lists()
        for i in range(self.rows):
            srow = self.row(i)
            acc = [0] * other.cols
            for t, a in enumerate(srow):
                if a:
                    orow = orows[t]
                    for j in range(other.cols):
                        acc[j] += a * orow[j]
            out.extend(acc)
        return IntMatrix(self.rows, other.cols, tuple(out))

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.at(i, i) for i in range(min(self.rows, self.cols)))

    def determinant(self) -> int:
        """Exact determinant via fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant requires a square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_lists()
        sign = 1
        prev = 1
        for t in range(n - 1):
            if a[t][t] == 0:
                for i in range(t + 1, n):
                    if a[i][t] != 0:
                        a[t], a[i] = a[i], a[t]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
                a[i][t] = 0
            prev = a[t][t]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """Decomposition U @ M @ V == S with U, V unimodular and S diagonal.

    Diagonal entries are non-negative and each divides the next; zeros trail.
    """

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix

    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.S.diagonal() if d != 0)


def _smallest_pivot(a: list[list[int]], start: int, rows: int, cols: int):
    best = None
    best_pos = None
    for i in range(start, rows):
        ai = a[i]
        for j in range(start, cols):
            v = ai[j]
            if v != 0 and (best is None or abs(v) < best):
                best = abs(v)
                best_pos = (i, j)
                if best == 1:
                    return best_pos
    return best_pos


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Diagonalize ``m`` over the integers by unimodular row/column operations.

    Total on all integer matrices, including empty ones.  Signs of det(U) and
    det(V) are not normalized; only |det| = 1 is guaranteed.
    """
    rows, cols = m.rows, m.cols
    a = m.to_lists()
    u = IntMatrix.identity(rows).to_lists()
    v = IntMatrix.identity(cols).to_lists()

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):
        # row[dst] -= q * row[src]
        if q:
            asrc, adst = a[src], a[dst]
            for c in range(cols):
                adst[c] -= q * asrc[c]
            usrc, udst = u[src], u[dst]
            for c in range(rows):
                udst[c] -= q * usrc[c]

    def add_col(src, dst, q):
        # col[dst] -= q * col[src]
        if q:
            for r in a:
                r[dst] -= q * r[src]
            for r in v:
                r[dst] -= q * r[src]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        pos = _smallest_pivot(a, t, rows, cols)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            # clear column t below/above the pivot
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, q)
                    if a[i][t]:
                        # remainder became the smaller pivot
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the submatrix for the chain
            offender = None
            for i in range(t + 1, rows):
                ai = a[i]
                for j in range(t + 1, cols):
                    if ai[j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, -1)  # row[t] += row[offender]
        t += 1

    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            for c in range(cols):
                a[i][c] = -a[i][c]
            for c in range(rows):
                u[i][c] = -u[i][c]

    return SmithForm(
        S=IntMatrix.from_rows(a) if rows else IntMatrix(0, cols, ()),
        U=IntMatrix.from_rows(u) if rows else IntMatrix(0, 0, ()),
        V=IntMatrix.from_rows(v) if cols else IntMatrix(0, 0, ()),
    )


def cokernel_invariants(m: IntMatrix) -> tuple[int, list[int]]:
    """Invariant factors of Z^rows / (column span of ``m``).

    Returns ``(free_rank, torsion)`` where torsion lists the invariant
    factors larger than 1 in divisibility order.
    """
    snf = smith_normal_form(m)
    nonzero = snf.invariant_factors()
    free_rank = m.rows - len(nonzero)
    torsion = [d for d in nonzero if d > 1]
    return free_rank, torsion
