"""Immutable integer matrices and integer polynomials.

Both types hold plain Python ints, so arithmetic never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NotSquare


@dataclass(frozen=True)
class IntMatrix:
    """Dense ``rows x cols`` integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        flat: list[int] = []
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(int(x) for x in r)
        return cls(rows, cols, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        flat = [0] * (n * n)
        for i, v in enumerate(values):
            flat[i * n + i] = int(v)
        return cls(n, n, tuple(flat))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRange(f"index ({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        r, c = self.rows, self.cols
        e = self.entries
        return IntMatrix(c, r, tuple(e[i * c + j] for j in range(c) for i in range(r)))

    T = property(transpose)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def trace(self) -> int:
        if not self.is_square:
            raise NotSquare(f"trace of {self.rows}x{self.cols} matrix")
        return sum(self.entries[i * self.cols + i] for i in range(self.rows))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __mul__(self, k: int) -> IntMatrix:
        if not isinstance(k, int):
            return NotImplemented
        return IntMatrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    __rmul__ = __mul__

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        a = self.to_lists()
        bt = other.transpose().to_lists()
        flat = [sum(x * y for x, y in zip(ra, cb)) for ra in a for cb in bt]
        return IntMatrix(self.rows, other.cols, tuple(flat))

    def map(self, fn) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(fn(a) for a in self.entries))

    def _same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __str__(self) -> str:
        if not self.rows:
            return f"[] ({self.rows}x{self.cols})"
        width = max(len(str(a)) for a in self.entries) if self.entries else 1
        return "\n".join(
            "[" + " ".join(str(a).rjust(width) for a in self.row(i)) + "]"
            for i in range(self.rows)
        )


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[k]`` is the coefficient of ``x**k``.

    Trailing (high-degree) zeros are stripped, so the zero polynomial has
    ``coeffs == ()`` and degree -1.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(a) for a in c))

    @classmethod
    def from_high(cls, high_first: Iterable[int]) -> IntPolynomial:
        """Build from coefficients listed highest power first."""
        return cls(tuple(reversed(list(high_first))))

    @classmethod
    def linear(cls, root: int) -> IntPolynomial:
        """The monic factor ``x - root``."""
        return cls((-root, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def descending(self, j: int) -> int:
        """Coefficient of ``x**(degree - j)``; ``descending(0)`` is the leading one."""
        return self.coefficient(self.degree - j)

    def descending_coefficients(self) -> tuple[int, ...]:
        """``(c_1, ..., c_d)`` for ``x^d + c_1 x^(d-1) + ... + c_d``."""
        return tuple(self.descending(j) for j in range(1, self.degree + 1))

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(n)))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coefficient(k) - other.coefficient(k) for k in range(n)))

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * a for a in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def divide_linear(self, root: int) -> tuple[IntPolynomial, int]:
        """Synthetic division by ``x - root``; returns ``(quotient, remainder)``."""
        if self.degree < 1:
            return IntPolynomial(()), self(root)
        high = list(reversed(self.coeffs))
        acc = 0
        quotient_high = []
        for a in high:
            acc = acc * root + a
            quotient_high.append(acc)
        remainder = quotient_high.pop()
        return IntPolynomial.from_high(quotient_high), remainder

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text
