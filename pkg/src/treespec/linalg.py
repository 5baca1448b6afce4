"""Exact integer linear algebra.

Determinants use Bareiss fraction-free elimination, characteristic
polynomials use Faddeev-LeVerrier with checked exact division, and the
Smith form is computed by gcd-pivot elimination without tracking the
unimodular transforms.  GF(2) work packs each row into a Python int.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    IndexOutOfRange,
    InexactDivision,
    NotMonic,
    NotSquare,
    NotSymmetric,
)
from .matrix import IntMatrix, IntPolynomial


def _require_square(m: IntMatrix, what: str) -> None:
    if not m.is_square:
        raise NotSquare(f"{what} needs a square matrix, got {m.rows}x{m.cols}")


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise InexactDivision(f"{a} is not divisible by {b}")
    return q


def det(m: IntMatrix) -> int:
    _require_square(m, "det")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(row_i[j] * pivot - lead * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def char_poly(m: IntMatrix) -> IntPolynomial:
    """det(xI - m) by Faddeev-LeVerrier."""
    _require_square(m, "char_poly")
    n = m.rows
    a = m.to_lists()
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    # am holds A @ M_{k-1}; M_0 = 0
    am = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c = coeffs[n - k + 1]
        mk = [row[:] for row in am]
        for i in range(n):
            mk[i][i] += c
        mk_cols = list(zip(*mk))
        am = [[sum(x * y for x, y in zip(row, col)) for col in mk_cols] for row in a]
        trace = sum(am[i][i] for i in range(n))
        coeffs[n - k] = _exact_div(-trace, k)
    return IntPolynomial(tuple(coeffs))


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def product(self) -> int:
        out = 1
        for s in self.invariant_factors:
            out *= s
        return out


def smith_normal_form(m: IntMatrix) -> SmithForm:
    a = m.to_lists()
    rows, cols = m.rows, m.cols
    factors: list[int] = []

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        swap_rows(t, bi)
        swap_cols(t, bj)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    ri, rt = a[i], a[t]
                    for j in range(t, cols):
                        ri[j] -= q * rt[j]
                    if ri[t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    for r in a[t:]:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in row/column t into the pivot
                cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
                _, bi, bj = min(cand)
                swap_rows(t, bi)
                swap_cols(t, bj)
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            rt, rb = a[t], a[bad]
            for j in range(t, cols):
                rt[j] += rb[j]
        factors.append(abs(a[t][t]))
        t += 1
    return SmithForm(tuple(factors))


# -- GF(2) ---------------------------------------------------------------

def pack_rows_gf2(m: IntMatrix) -> list[int]:
    """Row i becomes an int whose bit j is ``m[i, j] mod 2``."""
    packed = []
    for i in range(m.rows):
        bits = 0
        for j, v in enumerate(m.row(i)):
            if v & 1:
                bits |= 1 << j
        packed.append(bits)
    return packed


def _insert_basis(basis: dict[int, int], row: int) -> bool:
    while row:
        top = row.bit_length() - 1
        if top in basis:
            row ^= basis[top]
        else:
            basis[top] = row
            return True
    return False


def rank_gf2(m: IntMatrix) -> int:
    basis: dict[int, int] = {}
    return sum(_insert_basis(basis, r) for r in pack_rows_gf2(m))


def principal_full_rank_submatrix_gf2(m: IntMatrix) -> tuple[int, ...]:
    """Indices I with |I| = rank_gf2(m) and m(I, I) invertible mod 2.

    For a symmetric matrix the indices of any maximal independent set of
    rows work, so the greedy pass is the certificate; the exhaustive
    search only runs if that certificate ever fails to verify.
    """
    if not m.is_symmetric():
        raise NotSymmetric("principal submatrix search needs a symmetric matrix")
    basis: dict[int, int] = {}
    chosen = tuple(i for i, r in enumerate(pack_rows_gf2(m)) if _insert_basis(basis, r))
    if rank_gf2(submatrix(m, chosen, chosen)) == len(chosen):
        return chosen
    if m.rows < 12:
        r = len(chosen)
        for subset in combinations(range(m.rows), r):
            if rank_gf2(submatrix(m, subset, subset)) == r:
                return subset
    raise ArithmeticError("no full-rank principal submatrix found")


# -- submatrices -----------------------------------------------------------

def submatrix(m: IntMatrix, rows: Iterable[int], cols: Iterable[int]) -> IntMatrix:
    """M(R, S) with rows and columns kept in their original relative order."""
    r_idx = sorted(set(rows))
    c_idx = sorted(set(cols))
    for i in r_idx:
        if not 0 <= i < m.rows:
            raise IndexOutOfRange(f"row {i} outside 0..{m.rows - 1}")
    for j in c_idx:
        if not 0 <= j < m.cols:
            raise IndexOutOfRange(f"column {j} outside 0..{m.cols - 1}")
    e, c = m.entries, m.cols
    return IntMatrix(len(r_idx), len(c_idx), tuple(e[i * c + j] for i in r_idx for j in c_idx))


def cofactor(m: IntMatrix, i: int, j: int) -> int:
    """(-1)^(i+j) times the minor with row i and column j removed."""
    _require_square(m, "cofactor")
    keep_r = [r for r in range(m.rows) if r != i]
    keep_c = [c for c in range(m.cols) if c != j]
    sign = -1 if (i + j) % 2 else 1
    return sign * det(submatrix(m, keep_r, keep_c))


# -- integer eigenvalues -------------------------------------------------------

@dataclass(frozen=True)
class IntegerSpectrum:
    """Integer roots with multiplicities, largest first, plus the leftover factor."""

    eigenvalues: tuple[tuple[int, int], ...]
    residual: IntPolynomial

    def multiplicity(self, value: int) -> int:
        for lam, mult in self.eigenvalues:
            if lam == value:
                return mult
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.eigenvalues)

    def values(self) -> list[int]:
        return [lam for lam, _ in self.eigenvalues]

    def reconstruct(self) -> IntPolynomial:
        out = self.residual
        for lam, mult in self.eigenvalues:
            out = out * IntPolynomial.linear(lam) ** mult
        return out


def _iroot_ceil(x: int, k: int) -> int:
    """Smallest r >= 0 with r**k >= x."""
    if x <= 0:
        return 0
    lo, hi = 0, 1
    while hi ** k < x:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def root_bound(p: IntPolynomial) -> int:
    """Fujiwara's bound on the modulus of every root of a monic polynomial."""
    n = p.degree
    if n < 1:
        return 0
    terms = [_iroot_ceil(abs(p.coefficient(n - k)), k) for k in range(1, n)]
    terms.append(_iroot_ceil(-(-abs(p.coefficient(0)) // 2), n))
    return 2 * max(terms)


def integer_eigenvalues(p: IntPolynomial) -> IntegerSpectrum:
    if not p.is_monic:
        raise NotMonic(f"expected a monic polynomial, got leading coefficient {p.leading}")
    coeffs = p.coeffs
    zeros = 0
    while coeffs[zeros] == 0:
        zeros += 1
    q = IntPolynomial(coeffs[zeros:])
    found: dict[int, int] = {}
    if zeros:
        found[0] = zeros
    if q.degree >= 1:
        constant = abs(q.coefficient(0))
        limit = min(constant, root_bound(q))
        for d in range(1, limit + 1):
            if constant % d:
                continue
            for lam in (d, -d):
                while q.degree >= 1:
                    quotient, rem = q.divide_linear(lam)
                    if rem:
                        break
                    q = quotient
                    found[lam] = found.get(lam, 0) + 1
            if q.degree < 1:
                break
    eigen = tuple(sorted(found.items(), key=lambda kv: -kv[0]))
    return IntegerSpectrum(eigen, q)


def integer_spectrum(m: IntMatrix) -> IntegerSpectrum:
    return integer_eigenvalues(char_poly(m))


def block_diagonal(blocks: Sequence[IntMatrix]) -> IntMatrix:
    n = sum(b.rows for b in blocks)
    c = sum(b.cols for b in blocks)
    flat = [0] * (n * c)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                flat[(r0 + i) * c + c0 + j] = b.entries[i * b.cols + j]
        r0 += b.rows
        c0 += b.cols
    return IntMatrix(n, c, tuple(flat))
