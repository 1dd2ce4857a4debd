"""Exact Gaussian-rational scalars and dense linear algebra over them.

Everything here is immutable. Matrices are stored row-major as a flat tuple
of :class:`Scalar`; vectors are their own type so that states and operators
cannot be confused.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from qsem.errors import DimensionError, ZeroVectorError

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

#: Largest ambient dimension accepted anywhere; elimination is cubic.
MAX_DIM = 4096

Number = Union[int, Fraction, "Scalar"]


_RATIONAL_TYPES = (int, Fraction, type(_Q(0)))


def _rational(x) -> "_Q":
    if isinstance(x, bool) or not isinstance(x, _RATIONAL_TYPES + (str,)):
        raise TypeError(f"{type(x).__name__} is not an exact rational")
    try:
        return _Q(x)
    except ValueError:
        raise ValueError(f"invalid rational literal {x!r}") from None


def to_fraction(q) -> Fraction:
    """Convert an internal rational to a plain :class:`Fraction` with int parts."""
    return Fraction(int(q.numerator), int(q.denominator))


def _fmt_rational(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Scalar:
    """An element of Q(i): ``re + im*i`` with both parts exact rationals.

    The parts are GMP rationals when gmpy2 is available; they compare and
    hash equal to the corresponding :class:`fractions.Fraction`.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        object.__setattr__(self, "re", _rational(re))
        object.__setattr__(self, "im", _rational(im))

    @classmethod
    def _raw(cls, re, im) -> "Scalar":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def coerce(cls, x: Number) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, _RATIONAL_TYPES) and not isinstance(x, bool):
            return cls._raw(_Q(x), _ZERO_Q)
        if isinstance(x, (float, complex)):
            raise TypeError("floating-point numbers are not exact; use integers, Fractions or Scalar(re, im)")
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Number) -> "Scalar":
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "Scalar":
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Number) -> "Scalar":
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other: Number) -> "Scalar":
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return Scalar._raw(a * c, _ZERO_Q)
        return Scalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "Scalar":
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Number) -> "Scalar":
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self) -> "Scalar":
        return Scalar._raw(-self.re, -self.im)

    def __pos__(self) -> "Scalar":
        return self

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("division by exact zero")
        if not self.im:
            return Scalar._raw(1 / self.re, _ZERO_Q)
        n = self.abs2()
        return Scalar._raw(self.re / n, -self.im / n)

    def conjugate(self) -> "Scalar":
        if not self.im:
            return self
        return Scalar._raw(self.re, -self.im)

    def abs2(self):
        """Squared modulus, always a non-negative rational."""
        return self.re * self.re + self.im * self.im

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _RATIONAL_TYPES):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        if not self.im:
            return _fmt_rational(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{_fmt_rational(self.re)}{sign}{_fmt_rational(abs(self.im))}i"

    def __repr__(self) -> str:
        return f"Scalar({self})"


_ZERO_Q = _Q(0)
ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def _check_dim(n: int, what: str) -> None:
    if not isinstance(n, int) or n < 1:
        raise DimensionError(f"{what} must be a positive integer, got {n!r}")
    if n > MAX_DIM:
        raise DimensionError(f"{what} {n} exceeds the supported maximum of {MAX_DIM}")


class ExactVector:
    """A column vector over Q(i)."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Number]):
        ents = tuple(Scalar.coerce(x) for x in entries)
        _check_dim(len(ents), "vector dimension")
        object.__setattr__(self, "entries", ents)

    @classmethod
    def _make(cls, ents: tuple) -> "ExactVector":
        # entries already Scalars of a checked length
        v = object.__new__(cls)
        object.__setattr__(v, "entries", ents)
        return v

    def __setattr__(self, name, value):
        raise AttributeError("ExactVector is immutable")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> Scalar:
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return "ExactVector([" + ", ".join(str(x) for x in self.entries) + "])"

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    def scale(self, c: Number) -> "ExactVector":
        c = Scalar.coerce(c)
        return ExactVector._make(tuple(c * x for x in self.entries))

    def __add__(self, other: "ExactVector") -> "ExactVector":
        _same_dim(self, other)
        return ExactVector._make(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactVector") -> "ExactVector":
        _same_dim(self, other)
        return ExactVector._make(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactVector":
        return ExactVector._make(tuple(-x for x in self.entries))

    def as_column(self) -> "ExactMatrix":
        return ExactMatrix(self.dim, 1, self.entries)


def _same_dim(u: ExactVector, v: ExactVector) -> None:
    if u.dim != v.dim:
        raise DimensionError(f"dimension mismatch: {u.dim} vs {v.dim}")


class ExactMatrix:
    """A dense ``rows x cols`` matrix over Q(i), row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Number]):
        _check_dim(rows, "row count")
        _check_dim(cols, "column count")
        ents = tuple(Scalar.coerce(x) for x in entries)
        if len(ents) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(ents)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ents)

    @classmethod
    def _make(cls, rows: int, cols: int, ents: tuple) -> "ExactMatrix":
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", ents)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), width, (x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, (ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (ZERO for _ in range(rows * cols)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for shape {self.shape}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix([{body}])"

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._make(self.cols, self.rows, tuple(x for j in range(self.cols) for x in self.column(j)))

    def adjoint(self) -> "ExactMatrix":
        """Conjugate transpose."""
        return ExactMatrix._make(
            self.cols, self.rows, tuple(x.conjugate() for j in range(self.cols) for x in self.column(j))
        )

    def trace(self) -> Scalar:
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        total = ZERO
        for i in range(self.rows):
            total = total + self.entries[i * self.cols + i]
        return total

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    def scale(self, c: Number) -> "ExactMatrix":
        c = Scalar.coerce(c)
        return ExactMatrix._make(self.rows, self.cols, tuple(c * x for x in self.entries))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix._make(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix._make(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._make(self.rows, self.cols, tuple(-x for x in self.entries))

    def _same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __matmul__(self, other):
        if isinstance(other, ExactVector):
            if other.dim != self.cols:
                raise DimensionError(f"cannot apply {self.rows}x{self.cols} matrix to a {other.dim}-vector")
            return ExactVector._make(tuple(_dot(self.row(i), other.entries) for i in range(self.rows)))
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = [other.column(j) for j in range(other.cols)]
            return ExactMatrix._make(
                self.rows,
                other.cols,
                tuple(_dot(self.row(i), c) for i in range(self.rows) for c in cols),
            )
        return NotImplemented


def _dot(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    # Bilinear (no conjugation); skips zeros, which dominate projector matrices.
    re = _ZERO_Q
    im = _ZERO_Q
    for x, y in zip(a, b):
        xr, xi, yr, yi = x.re, x.im, y.re, y.im
        if (not xr and not xi) or (not yr and not yi):
            continue
        if not xi and not yi:
            re += xr * yr
        else:
            re += xr * yr - xi * yi
            im += xr * yi + xi * yr
    return Scalar._raw(re, im)


# -- products ---------------------------------------------------------------


def inner_product(u: ExactVector, v: ExactVector) -> Scalar:
    """``<u|v>``, conjugate-linear in ``u``."""
    _same_dim(u, v)
    return _dot([x.conjugate() for x in u.entries], v.entries)


def outer_product(u: ExactVector, v: ExactVector) -> ExactMatrix:
    """``|u><v|``: entry ``(i, j)`` is ``u_i * conj(v_j)``."""
    vc = [y.conjugate() for y in v.entries]
    return ExactMatrix._make(u.dim, v.dim, tuple(x * y for x in u.entries for y in vc))


def kronecker(a, b):
    """Kronecker product of two matrices, or of two vectors (as columns)."""
    if isinstance(a, ExactVector) and isinstance(b, ExactVector):
        _check_dim(a.dim * b.dim, "vector dimension")
        return ExactVector._make(tuple(x * y for x in a.entries for y in b.entries))
    if not (isinstance(a, ExactMatrix) and isinstance(b, ExactMatrix)):
        raise TypeError("kronecker expects two matrices or two vectors")
    rows, cols = a.rows * b.rows, a.cols * b.cols
    _check_dim(rows, "row count")
    _check_dim(cols, "column count")
    ents = []
    for i in range(a.rows):
        for k in range(b.rows):
            brow = b.row(k)
            for x in a.row(i):
                ents.extend(x * y for y in brow)
    return ExactMatrix._make(rows, cols, tuple(ents))


# -- elimination ------------------------------------------------------------


def _rref_rows(rows: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Gauss-Jordan on a mutable list of rows. Returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        if inv != ONE:
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f.is_zero():
                continue
            rows[i] = [x - f * y if not y.is_zero() else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...]]:
    """Reduced row-echelon form of ``m`` and its pivot columns."""
    rows, pivots = _rref_rows(m.to_rows(), m.cols)
    return ExactMatrix.from_rows(rows), tuple(pivots)


def rank(m: ExactMatrix) -> int:
    return len(rref(m)[1])


class SubspaceBasis:
    """A subspace of ``C^n`` held as the RREF basis of its span.

    Because the RREF basis of a span is unique, two instances describe the
    same subspace exactly when they compare equal.
    """

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[ExactVector] = ()):
        _check_dim(ambient_dim, "ambient dimension")
        rows = []
        for v in vectors:
            if v.dim != ambient_dim:
                raise DimensionError(f"vector of dimension {v.dim} in a {ambient_dim}-dimensional space")
            rows.append(list(v.entries))
        rows, pivots = _rref_rows(rows, ambient_dim)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(ExactVector(r) for r in rows[: len(pivots)]))
        object.__setattr__(self, "_pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("SubspaceBasis is immutable")

    @classmethod
    def column_space(cls, m: ExactMatrix) -> "SubspaceBasis":
        return cls(m.rows, (ExactVector(m.column(j)) for j in range(m.cols)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        vecs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.basis)
        return f"SubspaceBasis(dim={self.ambient_dim}, span{{{vecs}}})"

    def __contains__(self, v: ExactVector) -> bool:
        return solve_membership(self, v)

    def residual(self, v: ExactVector) -> ExactVector:
        """What is left of ``v`` after subtracting its span component.

        The RREF structure makes this a single pass: each basis vector is the
        only one with a non-zero at its pivot.
        """
        if v.dim != self.ambient_dim:
            raise DimensionError(f"vector of dimension {v.dim} tested against a {self.ambient_dim}-dimensional space")
        out = list(v.entries)
        for b, p in zip(self.basis, self._pivots):
            f = out[p]
            if f.is_zero():
                continue
            out = [x - f * y for x, y in zip(out, b.entries)]
        return ExactVector._make(tuple(out))


def solve_membership(basis: SubspaceBasis, v: ExactVector) -> bool:
    """True iff ``v`` lies in the span of ``basis``. ``v`` must be nonzero."""
    if v.dim != basis.ambient_dim:
        raise DimensionError(f"vector of dimension {v.dim} tested against a {basis.ambient_dim}-dimensional space")
    if v.is_zero():
        raise ZeroVectorError("membership test on the zero vector; states must be nonzero")
    return basis.residual(v).is_zero()


def null_space(m: ExactMatrix) -> SubspaceBasis:
    """Solutions of ``m x = 0`` as a canonical basis."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    vecs = []
    for f in free:
        x = [ZERO] * m.cols
        x[f] = ONE
        for r, p in enumerate(pivots):
            x[p] = -reduced[r, f]
        vecs.append(ExactVector(x))
    return SubspaceBasis(m.cols, vecs)
