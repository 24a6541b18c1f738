"""Exact linear algebra over the integers and rationals.

This module provides the arithmetic substrate for the lattice computations in
the rest of the package:

* ``RationalMatrix`` — a dense matrix of ``fractions.Fraction`` entries with
  exact Gaussian elimination (inverse, determinant, nullspace, rank) and a
  Faddeev–LeVerrier characteristic polynomial.
* Integer matrix normal forms — Smith normal form with unimodular transforms
  ``D = P A Q`` and a canonical Hermite row basis for integer row lattices.
* Lattice utilities — intersections of integer row lattices and bases for
  lattices spanned by rational vectors.
* Polynomial helpers — exact rational-root extraction and a splitter for
  palindromic products of factors ``x^2 - t x + 1`` (the shape produced by
  form-preserving involution products).

Everything is exact; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

IntMatrix = List[List[int]]
FracVector = List[Fraction]


def _as_fraction_rows(rows: Iterable[Iterable]) -> List[FracVector]:
    return [[Fraction(x) for x in row] for row in rows]


class RationalMatrix:
    """Dense matrix with exact rational entries.

    The class is deliberately small: just the operations needed by the
    lattice pipeline, all implemented with ``Fraction`` arithmetic.
    """

    def __init__(self, rows: Iterable[Iterable]):
        self.rows: List[FracVector] = _as_fraction_rows(rows)
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged rows")

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "RationalMatrix":
        return cls([[Fraction(0)] * n for _ in range(m)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "RationalMatrix":
        cols = _as_fraction_rows(cols)
        if not cols:
            return cls([])
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    # -- basic accessors --------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> FracVector:
        return [row[j] for row in self.rows]

    def columns(self) -> List[FracVector]:
        return [self.column(j) for j in range(self.ncols)]

    def copy(self) -> "RationalMatrix":
        return RationalMatrix([row[:] for row in self.rows])

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows!r})"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def scaled(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix([[c * x for x in row] for row in self.rows])

    def __mul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        ot = other.transpose().rows
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.rows]
        )

    def mul_vector(self, v: Sequence) -> FracVector:
        v = [Fraction(x) for x in v]
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return [sum(a * b for a, b in zip(row, v)) for row in self.rows]

    # -- elimination-based operations ------------------------------------

    def _rref(self) -> Tuple[List[FracVector], List[int]]:
        """Reduced row echelon form; returns (rows, pivot column indices)."""
        rows = [row[:] for row in self.rows]
        m, n = len(rows), self.ncols
        pivots: List[int] = []
        r = 0
        for c in range(n):
            pivot = next((i for i in range(r, m) if rows[i][c] != 0), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = 1 / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(m):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == m:
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def nullspace(self) -> List[FracVector]:
        """Basis (list of vectors) of the right kernel."""
        rows, pivots = self._rref()
        n = self.ncols
        free = [c for c in range(n) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * n
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -rows[r][fc]
            basis.append(v)
        return basis

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of non-square matrix")
        rows = [row[:] for row in self.rows]
        n = self.nrows
        result = Fraction(1)
        for c in range(n):
            pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                result = -result
            result *= rows[c][c]
            inv = 1 / rows[c][c]
            for i in range(c + 1, n):
                if rows[i][c] != 0:
                    f = rows[i][c] * inv
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
        return result

    def inverse(self) -> "RationalMatrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of non-square matrix")
        n = self.nrows
        aug = RationalMatrix(
            [self.rows[i] + RationalMatrix.identity(n).rows[i] for i in range(n)]
        )
        rows, pivots = aug._rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return RationalMatrix([row[n:] for row in rows])

    def solve(self, b: Sequence) -> Optional[FracVector]:
        """One solution of ``self @ x = b``, or None if inconsistent."""
        b = [Fraction(x) for x in b]
        aug = RationalMatrix([row + [bv] for row, bv in zip(self.rows, b)])
        rows, pivots = aug._rref()
        n = self.ncols
        if n in pivots:  # pivot in the augmented column: inconsistent
            return None
        x = [Fraction(0)] * n
        for r, pc in enumerate(pivots):
            x[pc] = rows[r][n]
        return x

    def charpoly(self) -> List[Fraction]:
        """Monic characteristic polynomial, coefficients highest degree first.

        Uses the Faddeev–LeVerrier recurrence, which stays in exact rational
        arithmetic and needs only matrix products and traces.
        """
        if self.nrows != self.ncols:
            raise ValueError("charpoly of non-square matrix")
        n = self.nrows
        coeffs = [Fraction(1)]
        M = RationalMatrix.zeros(n, n)
        ident = RationalMatrix.identity(n)
        c = Fraction(1)
        for k in range(1, n + 1):
            M = self * (M + ident.scaled(c))
            trace = sum(M.rows[i][i] for i in range(n))
            c = -trace / k
            coeffs.append(c)
        return coeffs

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def int_rows(self) -> IntMatrix:
        if not self.is_integer():
            raise ValueError("matrix has non-integer entries")
        return [[int(x) for x in row] for row in self.rows]


# ---------------------------------------------------------------------------
# Integer normal forms
# ---------------------------------------------------------------------------


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with g = s*a + t*b, g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_normal_form(A: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with transforms: D = P A Q.

    Args:
        A: an m×n integer matrix.

    Returns:
        Tuple (D, P, Q) where P (m×m) and Q (n×n) are unimodular and D is
        diagonal with nonnegative entries d_1 | d_2 | ... .
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [row[:] for row in A]
    P = [[int(i == j) for j in range(m)] for i in range(m)]
    Q = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, a, b, c, d):
        # rows i,j <- (a*row_i + b*row_j, c*row_i + d*row_j); applied to D and P
        for M in (D, P):
            ri, rj = M[i], M[j]
            M[i] = [a * x + b * y for x, y in zip(ri, rj)]
            M[j] = [c * x + d * y for x, y in zip(ri, rj)]

    def col_op(i, j, a, b, c, d):
        for M in (D, Q):
            for row in M:
                x, y = row[i], row[j]
                row[i] = a * x + b * y
                row[j] = c * x + d * y

    t = 0
    while t < min(m, n):
        # find a pivot: nonzero entry of minimal absolute value in D[t:, t:]
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(D[i][j])
                if v != 0 and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            row_op(t, pi, 0, 1, 1, 0)
        if pj != t:
            col_op(t, pj, 0, 1, 1, 0)
        while True:
            # clear column t
            for i in range(t + 1, m):
                if D[i][t] != 0:
                    a, b = D[t][t], D[i][t]
                    if b % a == 0:
                        q = b // a
                        row_op(t, i, 1, 0, -q, 1)
                    else:
                        g, s, u = xgcd(a, b)
                        row_op(t, i, s, u, -(b // g), a // g)
            # clear row t (may reintroduce column entries; loop until stable)
            for j in range(t + 1, n):
                if D[t][j] != 0:
                    a, b = D[t][t], D[t][j]
                    if b % a == 0:
                        q = b // a
                        col_op(t, j, 1, 0, -q, 1)
                    else:
                        g, s, u = xgcd(a, b)
                        col_op(t, j, s, u, -(b // g), a // g)
            if all(D[i][t] == 0 for i in range(t + 1, m)) and all(
                D[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        # enforce divisibility of the remaining block by D[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i][j] % D[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, 1, 1, 0, 1)  # add offending row to pivot row
            continue  # redo elimination at the same t
        if D[t][t] < 0:
            for M in (D, P):
                M[t] = [-x for x in M[t]]
        t += 1
    return D, P, Q


def hermite_row_basis(rows: IntMatrix) -> IntMatrix:
    """Canonical basis of the integer row lattice spanned by ``rows``.

    Row-style Hermite normal form: pivots positive, entries above each pivot
    reduced into [0, pivot). Zero rows are dropped.
    """
    work = [row[:] for row in rows if any(x != 0 for x in row)]
    if not work:
        return []
    n = len(work[0])
    basis: List[List[int]] = []
    r = 0
    for c in range(n):
        # gather rows with nonzero entry in column c (among remaining)
        idx = [i for i in range(r, len(work)) if work[i][c] != 0]
        if not idx:
            continue
        # reduce all rows against each other in column c via gcd steps
        while len(idx) > 1:
            idx.sort(key=lambda i: abs(work[i][c]))
            i0 = idx[0]
            for i in idx[1:]:
                q = work[i][c] // work[i0][c]
                work[i] = [x - q * y for x, y in zip(work[i], work[i0])]
            idx = [i for i in idx if work[i][c] != 0]
        i0 = idx[0]
        work[r], work[i0] = work[i0], work[r]
        if work[r][c] < 0:
            work[r] = [-x for x in work[r]]
        r += 1
    work = [row for row in work[:r]]
    # back-reduce entries above pivots
    pivots = []
    for row in work:
        pc = next(j for j, x in enumerate(row) if x != 0)
        pivots.append(pc)
    for i in range(len(work)):
        for k in range(i + 1, len(work)):
            pc = pivots[k]
            q = work[i][pc] // work[k][pc]
            if q:
                work[i] = [x - q * y for x, y in zip(work[i], work[k])]
    return work


def integer_kernel(A: IntMatrix) -> List[List[int]]:
    """Saturated basis of {x in Z^n : A x = 0} (as a list of vectors)."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    D, _P, Q = smith_normal_form(A)
    r = sum(1 for i in range(min(m, n)) if D[i][i] != 0)
    return [[Q[i][j] for i in range(n)] for j in range(r, n)]


def solve_integer_columns(A: IntMatrix, b: Sequence[int]) -> Optional[List[int]]:
    """Integer solution x of A x = b (columns of A generate the image), or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    D, P, Q = smith_normal_form(A)
    Pb = [sum(P[i][k] * b[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(min(m, n)):
        d = D[i][i]
        if d != 0:
            if Pb[i] % d != 0:
                return None
            y[i] = Pb[i] // d
        elif Pb[i] != 0:
            return None
    for i in range(min(m, n), m):
        if Pb[i] != 0:
            return None
    return [sum(Q[i][j] * y[j] for j in range(n)) for i in range(n)]


def lattice_intersection(rows_a: IntMatrix, rows_b: IntMatrix) -> IntMatrix:
    """Basis of the intersection of two integer row lattices.

    A vector lies in both lattices iff it can be written as u·A = v·B; the
    coefficient pairs (u, v) form the kernel of the stacked matrix [A; -B]
    read column-wise.
    """
    if not rows_a or not rows_b:
        return []
    n = len(rows_a[0])
    stacked = [
        [rows_a[i][c] for i in range(len(rows_a))] + [-rows_b[j][c] for j in range(len(rows_b))]
        for c in range(n)
    ]
    combos = integer_kernel(stacked)
    vecs = []
    for combo in combos:
        u = combo[: len(rows_a)]
        vecs.append([sum(u[i] * rows_a[i][c] for i in range(len(rows_a))) for c in range(n)])
    return hermite_row_basis(vecs)


def rational_row_lattice_basis(rows: Sequence[Sequence]) -> List[FracVector]:
    """Basis of the lattice generated by rational row vectors.

    Scales by the common denominator, takes a Hermite basis, scales back.
    """
    frac_rows = _as_fraction_rows(rows)
    if not frac_rows:
        return []
    denom = 1
    for row in frac_rows:
        for x in row:
            denom = denom * x.denominator // gcd(denom, x.denominator)
    int_rows = [[int(x * denom) for x in row] for row in frac_rows]
    basis = hermite_row_basis(int_rows)
    return [[Fraction(x, denom) for x in row] for row in basis]


# ---------------------------------------------------------------------------
# Polynomial helpers
# ---------------------------------------------------------------------------


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_divmod(coeffs: Sequence[Fraction], divisor: Sequence[Fraction]):
    """Polynomial division (coefficients highest degree first)."""
    coeffs = [Fraction(c) for c in coeffs]
    divisor = [Fraction(c) for c in divisor]
    out = []
    while len(coeffs) >= len(divisor):
        factor = coeffs[0] / divisor[0]
        out.append(factor)
        for i, d in enumerate(divisor):
            coeffs[i] -= factor * d
        coeffs.pop(0)
    return out, coeffs


def rational_roots(coeffs: Sequence[Fraction]) -> Tuple[List[Tuple[Fraction, int]], List[Fraction]]:
    """All rational roots (with multiplicity) of a rational polynomial.

    Args:
        coeffs: coefficients, highest degree first.

    Returns:
        (roots, remainder) where roots is a list of (root, multiplicity) and
        remainder is the rational-root-free cofactor polynomial.
    """
    coeffs = [Fraction(c) for c in coeffs]
    # strip leading zeros
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if not coeffs:
        return [], []
    roots: List[Tuple[Fraction, int]] = []
    # factor out x = 0 roots first
    zero_mult = 0
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    # clear denominators for the rational root theorem
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    if len(ints) == 1:
        return roots, coeffs
    lead, const = ints[0], ints[-1]

    def divisors(v: int):
        v = abs(v)
        out = set()
        d = 1
        while d * d <= v:
            if v % d == 0:
                out.add(d)
                out.add(v // d)
            d += 1
        return sorted(out)

    candidates = []
    for p in divisors(const):
        for q in divisors(lead):
            candidates.append(Fraction(p, q))
            candidates.append(Fraction(-p, q))
    seen = set()
    for cand in candidates:
        if cand in seen:
            continue
        seen.add(cand)
        mult = 0
        while poly_eval(coeffs, cand) == 0:
            coeffs, rem = poly_divmod(coeffs, [Fraction(1), -cand])
            assert all(r == 0 for r in rem)
            mult += 1
        if mult:
            roots.append((cand, mult))
    return roots, coeffs


def palindromic_quadratic_split(
    coeffs: Sequence[Fraction],
) -> Tuple[List[Tuple[Fraction, int]], List[Fraction]]:
    """Split a polynomial into factors x^2 - t x + 1 with rational t.

    Such products are palindromic; substituting y = x + 1/x reduces the
    degree by half, and each rational root y0 of the reduced polynomial
    corresponds to a factor x^2 - y0 x + 1.

    Args:
        coeffs: coefficients (highest degree first) of a polynomial with no
            rational roots, expected to be a product of quadratics of the
            given shape.

    Returns:
        (factors, remainder): factors is a list of (t, multiplicity); the
        remainder polynomial (degree > 0 means some part resisted this
        factorisation, e.g. irrational t).
    """
    coeffs = [Fraction(c) for c in coeffs]
    factors: List[Tuple[Fraction, int]] = []
    while len(coeffs) > 1:
        deg = len(coeffs) - 1
        monic = [c / coeffs[0] for c in coeffs]
        if deg % 2 == 1 or monic != monic[::-1]:
            break  # not palindromic: no factors of the required shape remain
        # Reduce via y = x + 1/x: p(x)/x^h = s_0 + sum_{j>=1} s_j (x^j + x^-j)
        # and x^j + x^-j = T_j(y) with T_0 = 2, T_1 = y, T_j = y T_{j-1} - T_{j-2}.
        half = deg // 2
        s = [monic[half - j] for j in range(half + 1)]

        def add_aligned(target, poly, scale):
            off = len(target) - len(poly)
            for i, c in enumerate(poly):
                target[off + i] += scale * c

        T = [[Fraction(2)], [Fraction(1), Fraction(0)]]
        for j in range(2, half + 1):
            nxt = T[j - 1] + [Fraction(0)]
            add_aligned(nxt, T[j - 2], Fraction(-1))
            T.append(nxt)
        q = [Fraction(0)] * (half + 1)
        q[-1] = s[0]
        for j in range(1, half + 1):
            add_aligned(q, T[j], s[j])
        roots, _rem = rational_roots(q)
        progressed = False
        for t, mult in roots:
            for _ in range(mult):
                quo, r = poly_divmod(coeffs, [Fraction(1), -t, Fraction(1)])
                if any(x != 0 for x in r):
                    continue
                coeffs = quo
                factors.append((t, 1))
                progressed = True
        if not progressed:
            break
    # merge multiplicities
    merged = {}
    for t, m in factors:
        merged[t] = merged.get(t, 0) + m
    return sorted(merged.items()), coeffs


def sturm_count_roots(coeffs: Sequence[Fraction], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots of the polynomial in the interval (a, b]."""
    p = [Fraction(c) for c in coeffs]
    while p and p[0] == 0:
        p.pop(0)
    if len(p) <= 1:
        return 0
    dp = [c * (len(p) - 1 - i) for i, c in enumerate(p[:-1])]
    chain = [p, dp]
    while True:
        _, rem = poly_divmod(chain[-2], chain[-1])
        while rem and rem[0] == 0:
            rem.pop(0)
        if not rem:
            break
        chain.append([-c for c in rem])

    def sign_changes(x: Fraction) -> int:
        signs = []
        for q in chain:
            v = poly_eval(q, x)
            if v != 0:
                signs.append(1 if v > 0 else -1)
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    return sign_changes(a) - sign_changes(b)
