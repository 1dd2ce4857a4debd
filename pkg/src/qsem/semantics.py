"""Valuations of propositions (projectors) in quantum states.

Four semantics are offered:

* bivalent: every proposition must be true or false; raises
  :class:`~qsem.errors.BivalenceError` when the state is not an eigenvector;
* supervaluationist: true on ``ran(P)``, false on ``ran(1 - P)``, a gap elsewhere;
* many-valued: gaps are filled with the Born degree ``<psi|P|psi> / <psi|psi>``;
* weak-valued: gaps are filled with ``<phi|P|psi> / <phi|psi>`` for a
  post-selected state ``phi``.

States are never normalized. Every quantity computed here is a ratio in which
the norm cancels, so irrational normalization constants are never needed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from qsem.errors import BivalenceError, DimensionError, UndefinedWeakValueError, ZeroVectorError
from qsem.exact import ExactVector, Scalar, inner_product, to_fraction
from qsem.projector import Projector


@dataclass(frozen=True)
class State:
    vector: ExactVector
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.vector.is_zero():
            raise ZeroVectorError(f"state {self.label!r} is the zero vector")

    @property
    def dim(self) -> int:
        return self.vector.dim

    def scaled(self, c) -> "State":
        return State(self.vector.scale(c), self.label)


# -- truth values -------------------------------------------------------------


class TruthValue:
    """Base of the tagged union of semantic outcomes."""

    __slots__ = ()
    kind: str = ""

    @property
    def payload(self) -> Optional[Union[Fraction, Scalar]]:
        return None

    def value_text(self) -> Optional[str]:
        """Exact text of the numeric value; ``None`` for a gap."""
        return None


@dataclass(frozen=True)
class ClassicalTrue(TruthValue):
    kind = "ClassicalTrue"

    def value_text(self) -> str:
        return "1"

    def __str__(self) -> str:
        return self.kind


@dataclass(frozen=True)
class ClassicalFalse(TruthValue):
    kind = "ClassicalFalse"

    def value_text(self) -> str:
        return "0"

    def __str__(self) -> str:
        return self.kind


@dataclass(frozen=True)
class Gap(TruthValue):
    kind = "Gap"

    def __str__(self) -> str:
        return self.kind


@dataclass(frozen=True)
class Degree(TruthValue):
    """A truth degree strictly between 0 and 1."""

    value: Fraction
    kind = "Degree"

    def __post_init__(self):
        if type(self.value) is not Fraction:
            object.__setattr__(self, "value", to_fraction(Fraction(self.value)))
        if not 0 < self.value < 1:
            raise ValueError(f"Degree must lie strictly inside (0, 1), got {self.value}")

    @property
    def payload(self) -> Fraction:
        return self.value

    def value_text(self) -> str:
        return str(Scalar(self.value))

    def __str__(self) -> str:
        return f"Degree({self.value_text()})"


@dataclass(frozen=True)
class Weak(TruthValue):
    """A weak value; any Gaussian rational, including outside [0, 1]."""

    value: Scalar
    kind = "Weak"

    def __post_init__(self):
        object.__setattr__(self, "value", Scalar.coerce(self.value))

    @property
    def payload(self) -> Scalar:
        return self.value

    def value_text(self) -> str:
        return str(self.value)

    def __str__(self) -> str:
        return f"Weak({self.value})"


TRUE = ClassicalTrue()
FALSE = ClassicalFalse()
GAP = Gap()


class SemanticsKind(enum.Enum):
    BIVALENT = "bivalent"
    SUPERVALUATIONIST = "supervaluationist"
    MANY_VALUED = "many_valued"
    WEAK = "weak"

    def __str__(self) -> str:
        return self.value


# -- valuations ---------------------------------------------------------------


def _check(p: Projector, psi: State) -> None:
    if p.dim != psi.dim:
        raise DimensionError(
            f"{p.dim}-dimensional proposition {p.label!r} evaluated in {psi.dim}-dimensional state {psi.label!r}"
        )


def supervaluate(p: Projector, psi: State) -> TruthValue:
    _check(p, psi)
    if p.range_basis().residual(psi.vector).is_zero():
        return TRUE
    if p.kernel_basis().residual(psi.vector).is_zero():
        return FALSE
    return GAP


def bivalent(p: Projector, psi: State) -> TruthValue:
    """Classical valuation; only defined when ``psi`` is an eigenvector of ``p``."""
    v = supervaluate(p, psi)
    if isinstance(v, Gap):
        raise BivalenceError(
            f"proposition {p.label or '<anonymous>'} has no bivalent truth value in state "
            f"{psi.label or '<anonymous>'}: the state lies in neither its range nor its kernel"
        )
    return v


def born_degree(p: Projector, psi: State) -> Fraction:
    _check(p, psi)
    v = psi.vector
    num = inner_product(v, p.matrix @ v)
    den = inner_product(v, v)
    return to_fraction(num.re / den.re)


def many_valued(p: Projector, psi: State) -> TruthValue:
    d = born_degree(p, psi)
    if d == 1:
        return TRUE
    if d == 0:
        return FALSE
    return Degree(d)


def weak_value(p: Projector, pre: State, post: State) -> Scalar:
    _check(p, pre)
    _check(p, post)
    den = inner_product(post.vector, pre.vector)
    if den.is_zero():
        raise UndefinedWeakValueError(
            f"weak value undefined: pre-selected {pre.label or 'state'} and "
            f"post-selected {post.label or 'state'} are orthogonal"
        )
    num = inner_product(post.vector, p.matrix @ pre.vector)
    return num / den


def weak_valued(p: Projector, pre: State, post: State) -> TruthValue:
    # the ratio is computed first so an orthogonal pair is always reported
    w = weak_value(p, pre, post)
    v = supervaluate(p, pre)
    if not isinstance(v, Gap):
        return v
    return Weak(w)


def probability_bridge_check(p: Projector, psi: State) -> bool:
    """Whether truth <=> degree 1 and falsity <=> degree 0 hold for this pair."""
    v = supervaluate(p, psi)
    d = born_degree(p, psi)
    return (isinstance(v, ClassicalTrue) == (d == 1)) and (isinstance(v, ClassicalFalse) == (d == 0))


def evaluate(kind: SemanticsKind, p: Projector, psi: State, post: Optional[State] = None) -> TruthValue:
    if kind is SemanticsKind.WEAK:
        if post is None:
            raise ValueError("weak semantics needs a post-selected state")
        return weak_valued(p, psi, post)
    if post is not None:
        raise ValueError(f"{kind} semantics takes no post-selected state")
    if kind is SemanticsKind.BIVALENT:
        return bivalent(p, psi)
    if kind is SemanticsKind.SUPERVALUATIONIST:
        return supervaluate(p, psi)
    if kind is SemanticsKind.MANY_VALUED:
        return many_valued(p, psi)
    raise ValueError(f"unknown semantics {kind!r}")

