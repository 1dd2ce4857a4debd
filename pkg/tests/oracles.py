"""Reference computations that share no code with the package.

Exact linear algebra goes through sympy; weak values and Born degrees are
recomputed in floating point with numpy.
"""

import numpy as np
import sympy

from qsem.exact import ExactMatrix, ExactVector, Scalar


def to_sympy_scalar(s: Scalar):
    return sympy.Rational(s.re.numerator, s.re.denominator) + sympy.I * sympy.Rational(
        s.im.numerator, s.im.denominator
    )


def to_sympy(m):
    if isinstance(m, ExactVector):
        return sympy.Matrix([[to_sympy_scalar(x)] for x in m])
    return sympy.Matrix([[to_sympy_scalar(x) for x in m.row(i)] for i in range(m.rows)])


def from_sympy_scalar(z) -> Scalar:
    re, im = sympy.re(z), sympy.im(z)
    return Scalar(f"{re.p}/{re.q}", f"{im.p}/{im.q}")


def sympy_rref(m: ExactMatrix):
    r, piv = to_sympy(m).rref(simplify=True)
    rows = [[from_sympy_scalar(sympy.nsimplify(r[i, j])) for j in range(r.cols)] for i in range(r.rows)]
    return ExactMatrix.from_rows(rows), tuple(piv)


def sympy_rank(m: ExactMatrix) -> int:
    return to_sympy(m).rank(simplify=True)


def sympy_nullity(m: ExactMatrix) -> int:
    return len(to_sympy(m).nullspace(simplify=True))


def sympy_in_span(vectors, v: ExactVector) -> bool:
    """Solve ``B x = v`` by elimination on the augmented matrix."""
    if not vectors:
        return False
    b = sympy.Matrix.hstack(*[to_sympy(u) for u in vectors])
    aug = b.row_join(to_sympy(v))
    return aug.rank(simplify=True) == b.rank(simplify=True)


def to_numpy(x):
    if isinstance(x, ExactVector):
        return np.array([complex(float(s.re), float(s.im)) for s in x])
    return np.array(
        [[complex(float(s.re), float(s.im)) for s in x.row(i)] for i in range(x.rows)]
    )


def float_weak_value(p: np.ndarray, pre: np.ndarray, post: np.ndarray) -> complex:
    pre = pre / np.linalg.norm(pre)
    post = post / np.linalg.norm(post)
    return np.vdot(post, p @ pre) / np.vdot(post, pre)


def float_born(p: np.ndarray, psi: np.ndarray) -> float:
    psi = psi / np.linalg.norm(psi)
    return float(np.real(np.vdot(psi, p @ psi)))


def float_hardy():
    """The Hardy operators and states built directly from normalized kets."""
    o = np.array([1.0, 0.0])
    n = np.array([0.0, 1.0])
    d1 = np.array([1.0, -1.0]) / np.sqrt(2)
    arms = {"O": np.outer(o, o), "N": np.outer(n, n)}
    psi_not_o = np.array([0.0, 1.0, 1.0, 1.0]) / np.sqrt(3)
    psi_d1 = np.kron(d1, d1)
    p_d1 = np.kron(np.outer(d1, d1), np.outer(d1, d1))
    return arms, psi_not_o, psi_d1, p_d1
