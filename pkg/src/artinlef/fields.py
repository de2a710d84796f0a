"""Exact scalars over Q and F_p, and dense exact linear algebra.

Scalars are plain Python numbers: :class:`fractions.Fraction` in
characteristic zero and ``int`` residues in ``[0, p)`` in characteristic
``p``.  A :class:`FieldSpec` knows how to coerce and combine them; every
container (matrix, polynomial) carries its field so that operands from
different fields are rejected instead of silently mixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainMismatchError, ShapeError

Scalar = Union[int, Fraction]

#: Largest prime accepted by default; raise it with ``FieldSpec(p, max_prime=...)``.
DEFAULT_MAX_PRIME = 10_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: Q when ``characteristic == 0``, else F_p."""

    characteristic: int = 0
    max_prime: int = DEFAULT_MAX_PRIME

    def __post_init__(self):
        p = self.characteristic
        if not isinstance(p, int) or p < 0:
            raise ValueError(f"characteristic must be a non-negative integer, got {p!r}")
        if p and not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if p > self.max_prime:
            raise ValueError(f"characteristic {p} exceeds the configured bound {self.max_prime}")

    # max_prime is configuration, not identity
    def __eq__(self, other):
        return isinstance(other, FieldSpec) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("FieldSpec", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.characteristic == 0 else 1

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction or ``"a/b"`` string into the field."""
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value)
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} is not a unit mod {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        if isinstance(value, int):
            return value % p
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        p = self.characteristic
        return (a + b) % p if p else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        p = self.characteristic
        return (a - b) % p if p else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        p = self.characteristic
        return a * b % p if p else a * b

    def neg(self, a: Scalar) -> Scalar:
        p = self.characteristic
        return -a % p if p else -a

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("division by zero in field")
        p = self.characteristic
        return pow(a, -1, p) if p else 1 / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def to_str(self, a: Scalar) -> str:
        return str(a)


QQ = FieldSpec(0)


class DenseMatrix:
    """Row-major dense matrix of field scalars. Immutable after construction."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries: Iterable = ()):
        data = tuple(field(e) for e in entries) if entries != () else (field.zero,) * (rows * cols)
        if len(data) != rows * cols:
            raise ShapeError(f"expected {rows * cols} entries, got {len(data)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> "DenseMatrix":
        rows = [list(r) for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        for r in rows:
            if len(r) != ncols:
                raise ShapeError("ragged rows")
        return cls(field, len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "DenseMatrix":
        return cls(field, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @property
    def entries(self) -> tuple:
        return self._data

    def __getitem__(self, idx):
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self.field, self.cols, self.rows,
                           [self._data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.field != other.field:
            raise DomainMismatchError(f"{self.field!r} vs {other.field!r}")
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        out = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                acc = f.zero
                for t, a in enumerate(row):
                    if a:
                        b = other._data[t * other.cols + j]
                        if b:
                            acc = f.add(acc, f.mul(a, b))
                out.append(acc)
        return DenseMatrix(f, self.rows, other.cols, out)

    def apply(self, vec: Sequence[Scalar]) -> list[Scalar]:
        """Matrix-vector product ``m @ v``."""
        if len(vec) != self.cols:
            raise ShapeError("vector length does not match column count")
        f = self.field
        out = []
        for i in range(self.rows):
            acc = f.zero
            for a, b in zip(self.row(i), vec):
                if a and b:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return not any(self._data)

    def __eq__(self, other):
        return (isinstance(other, DenseMatrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols and self._data == other._data)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self._data))

    def __repr__(self):
        return f"DenseMatrix({self.field!r}, {self.to_rows()})"


def check_same_field(*fields: FieldSpec) -> FieldSpec:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise DomainMismatchError(f"field mismatch: {first!r} vs {f!r}")
    return first


def row_echelon(field: FieldSpec, rows: Sequence[Sequence[Scalar]], ncols: int):
    """Reduced row echelon form.

    Pivots are taken column by column, choosing the first row (top to bottom)
    with a nonzero entry. Returns ``(reduced_rows, pivot_columns)`` where
    ``reduced_rows`` holds only the nonzero rows, each with pivot entry 1.
    """
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(work)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((k for k in range(r, nrows) if work[k][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        inv = field.inv(prow[c])
        if prow[c] != 1:
            prow = [field.mul(inv, a) if a else a for a in prow]
            work[r] = prow
        nz = [t for t in range(c, ncols) if prow[t]]
        for k in range(nrows):
            if k != r:
                fac = work[k][c]
                if fac:
                    row_k = work[k]
                    for t in nz:
                        row_k[t] = field.sub(row_k[t], field.mul(fac, prow[t]))
        pivots.append(c)
        r += 1
    return work[:r], pivots


def rank(m: DenseMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    # eliminate along the shorter side
    if m.rows > m.cols:
        m = m.transpose()
    _, piv = row_echelon(m.field, m.to_rows(), m.cols)
    return len(piv)


def kernel_basis(m: DenseMatrix) -> list[tuple[Scalar, ...]]:
    """Basis of ``{v : m v = 0}``, one vector per free column in increasing order."""
    f = m.field
    reduced, piv = row_echelon(f, m.to_rows(), m.cols)
    pivset = set(piv)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [f.zero] * m.cols
        v[free] = f.one
        for row, pc in zip(reduced, piv):
            if row[free]:
                v[pc] = f.neg(row[free])
        basis.append(tuple(v))
    return basis


def det_eval(m: DenseMatrix) -> Scalar:
    if m.rows != m.cols:
        raise ShapeError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    f = m.field
    n = m.rows
    work = m.to_rows()
    det = f.one
    for c in range(n):
        piv = next((k for k in range(c, n) if work[k][c]), None)
        if piv is None:
            return f.zero
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            det = f.neg(det)
        pv = work[c][c]
        det = f.mul(det, pv)
        inv = f.inv(pv)
        for k in range(c + 1, n):
            fac = work[k][c]
            if fac:
                fac = f.mul(fac, inv)
                rk, rc = work[k], work[c]
                for t in range(c, n):
                    if rc[t]:
                        rk[t] = f.sub(rk[t], f.mul(fac, rc[t]))
    return det


def span_rank(field: FieldSpec, vectors: Sequence[Sequence[Scalar]], dim: int) -> int:
    if not vectors:
        return 0
    return len(row_echelon(field, vectors, dim)[1])
