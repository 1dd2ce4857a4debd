"""Projection operators: construction, negation, tensor products and subspaces."""

from __future__ import annotations

import enum
from fractions import Fraction

from qsem.errors import DimensionError, NonCommutingError, NotAProjectorError, ZeroVectorError
from qsem.exact import (
    ExactMatrix,
    ExactVector,
    SubspaceBasis,
    inner_product,
    kronecker,
    outer_product,
    to_fraction,
)


class SubspaceRelation(enum.Enum):
    EQUAL = "Equal"
    PROPER_SUBSET = "ProperSubset"
    PROPER_SUPERSET = "ProperSuperset"
    INCOMPARABLE = "Incomparable"

    def __str__(self) -> str:
        return self.value


class Projector:
    """A Hermitian idempotent square matrix, checked on construction.

    ``label`` is carried for reports only; it takes no part in equality.
    """

    __slots__ = ("matrix", "label", "_range", "_kernel")

    def __init__(self, matrix: ExactMatrix, label: str = ""):
        if not matrix.is_square():
            raise NotAProjectorError(f"{label or 'matrix'} is {matrix.rows}x{matrix.cols}, not square")
        if matrix.adjoint() != matrix:
            raise NotAProjectorError(f"{label or 'matrix'} is not Hermitian")
        if matrix @ matrix != matrix:
            raise NotAProjectorError(f"{label or 'matrix'} is not idempotent")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "_range", None)
        object.__setattr__(self, "_kernel", None)

    def __setattr__(self, name, value):
        raise AttributeError("Projector is immutable")

    @classmethod
    def identity(cls, dim: int, label: str = "1") -> "Projector":
        return cls(ExactMatrix.identity(dim), label)

    @classmethod
    def zero(cls, dim: int, label: str = "0") -> "Projector":
        return cls(ExactMatrix.zeros(dim, dim), label)

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def rank(self) -> int:
        t = self.matrix.trace()
        # trace of a projector is its rank
        return int(t.re)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Projector):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"<Projector{name} dim={self.dim} rank={self.rank}>"

    def relabel(self, label: str) -> "Projector":
        p = object.__new__(Projector)
        object.__setattr__(p, "matrix", self.matrix)
        object.__setattr__(p, "label", label)
        object.__setattr__(p, "_range", self._range)
        object.__setattr__(p, "_kernel", self._kernel)
        return p

    def range_basis(self) -> SubspaceBasis:
        if self._range is None:
            object.__setattr__(self, "_range", SubspaceBasis.column_space(self.matrix))
        return self._range

    def kernel_basis(self) -> SubspaceBasis:
        """``ker(P) = ran(1 - P)``."""
        if self._kernel is None:
            object.__setattr__(self, "_kernel", negate(self).range_basis())
        return self._kernel


def _rank_one(v: ExactVector) -> ExactMatrix:
    if v.is_zero():
        raise ZeroVectorError("cannot project onto the zero vector")
    return outer_product(v, v).scale(1 / inner_product(v, v).re)


def from_ket(v: ExactVector, label: str = "") -> Projector:
    """Rank-one projector onto the line through ``v``, i.e. ``|v><v| / <v|v>``."""
    return Projector(_rank_one(v), label)


def from_kets(vectors, label: str = "") -> Projector:
    """Projector onto the span of mutually orthogonal nonzero kets."""
    vectors = list(vectors)
    if not vectors:
        raise ValueError("need at least one ket")
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            if not inner_product(vectors[a], vectors[b]).is_zero():
                raise ValueError("kets must be mutually orthogonal")
    total = _rank_one(vectors[0])
    for v in vectors[1:]:
        total = total + _rank_one(v)
    return Projector(total, label)


def negate(p: Projector) -> Projector:
    """``1 - P``, the projector onto the orthogonal complement."""
    label = f"not {p.label}" if p.label else ""
    if p.label.startswith("not "):
        label = p.label[4:]
    return Projector(ExactMatrix.identity(p.dim) - p.matrix, label)


def tensor(p: Projector, q: Projector) -> Projector:
    label = f"{p.label} (x) {q.label}" if p.label and q.label else ""
    return Projector(kronecker(p.matrix, q.matrix), label)


def product(p: Projector, q: Projector) -> Projector:
    """Meet of two *commuting* projectors, ``PQ``.

    Non-commuting pairs are rejected: their product is not a projector and
    no orthomodular meet is provided here.
    """
    _same_dim(p, q)
    pq = p.matrix @ q.matrix
    if pq != q.matrix @ p.matrix:
        raise NonCommutingError(
            f"{p.label or 'P'} and {q.label or 'Q'} do not commute; their product is not a projector"
        )
    return Projector(pq, f"{p.label} & {q.label}" if p.label and q.label else "")


def range_basis(p: Projector) -> SubspaceBasis:
    return p.range_basis()


def kernel_basis(p: Projector) -> SubspaceBasis:
    return p.kernel_basis()


def _same_dim(p: Projector, q: Projector) -> None:
    if p.dim != q.dim:
        raise DimensionError(f"projector dimensions differ: {p.dim} vs {q.dim}")


def _contained(s: SubspaceBasis, t: SubspaceBasis) -> bool:
    return all(t.residual(v).is_zero() for v in s.basis)


def compare(s: SubspaceBasis, t: SubspaceBasis) -> SubspaceRelation:
    """Inclusion relation of ``s`` relative to ``t``."""
    if s.ambient_dim != t.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {s.ambient_dim} vs {t.ambient_dim}")
    s_in_t = _contained(s, t)
    t_in_s = _contained(t, s)
    if s_in_t and t_in_s:
        return SubspaceRelation.EQUAL
    if s_in_t:
        return SubspaceRelation.PROPER_SUBSET
    if t_in_s:
        return SubspaceRelation.PROPER_SUPERSET
    return SubspaceRelation.INCOMPARABLE


def expectation(p: Projector, v: ExactVector) -> Fraction:
    """``<v|P|v>`` for an arbitrary (unnormalized) vector; real for Hermitian P."""
    if v.dim != p.dim:
        raise DimensionError(f"{p.dim}-dimensional projector applied to a {v.dim}-vector")
    return to_fraction(inner_product(v, p.matrix @ v).re)
