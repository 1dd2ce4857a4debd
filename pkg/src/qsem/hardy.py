"""Hardy's two-interferometer setup and its paradox report.

Two-particle vectors use the basis ordering

    (O^A O^B, O^A N^B, N^A O^B, N^A N^B)

where ``O`` is the overlapping arm and ``N`` the non-overlapping one; the
first factor always belongs to particle A. States are kept unnormalized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from qsem.exact import ExactVector, Scalar, kronecker
from qsem.projector import Projector, SubspaceRelation, compare, from_ket, tensor
from qsem.semantics import (
    ClassicalFalse,
    ClassicalTrue,
    Gap,
    State,
    TruthValue,
    born_degree,
    many_valued,
    supervaluate,
    weak_value,
    weak_valued,
)

BASIS_ORDER = ("OA OB", "OA NB", "NA OB", "NA NB")
WHICH_WAY_KEYS = ("OO", "ON", "NO", "NN")

KET_O = ExactVector([1, 0])
KET_N = ExactVector([0, 1])
KET_D2 = ExactVector([1, 1])
KET_D1 = ExactVector([1, -1])


@dataclass(frozen=True)
class HardyScenario:
    P_OA: Projector
    P_NA: Projector
    P_OB: Projector
    P_NB: Projector
    P_D1A: Projector
    P_D2A: Projector
    P_D1B: Projector
    P_D2B: Projector
    P_O: Projector
    P_D1: Projector
    P_D2: Projector
    psi_notO: State
    psi_D1: State
    basis_order: tuple[str, ...] = BASIS_ORDER

    def arm_projector(self, a: str, b: str) -> Projector:
        """``P_{a^A} (x) P_{b^B}`` for arms ``a, b`` in ``{"O", "N"}``."""
        left = {"O": self.P_OA, "N": self.P_NA}[a]
        right = {"O": self.P_OB, "N": self.P_NB}[b]
        return tensor(left, right)


def build_scenario() -> HardyScenario:
    P_OA, P_NA = from_ket(KET_O, "O^A"), from_ket(KET_N, "N^A")
    P_OB, P_NB = from_ket(KET_O, "O^B"), from_ket(KET_N, "N^B")
    P_D1A, P_D2A = from_ket(KET_D1, "D1^A"), from_ket(KET_D2, "D2^A")
    P_D1B, P_D2B = from_ket(KET_D1, "D1^B"), from_ket(KET_D2, "D2^B")
    s = HardyScenario(
        P_OA=P_OA,
        P_NA=P_NA,
        P_OB=P_OB,
        P_NB=P_NB,
        P_D1A=P_D1A,
        P_D2A=P_D2A,
        P_D1B=P_D1B,
        P_D2B=P_D2B,
        P_O=tensor(P_OA, P_OB).relabel("O"),
        P_D1=tensor(P_D1A, P_D1B).relabel("D1"),
        P_D2=tensor(P_D2A, P_D2B).relabel("D2"),
        # free amplitudes of the O-excluded state all set equal
        psi_notO=State(ExactVector([0, 1, 1, 1]), "psi_notO"),
        psi_D1=State(kronecker(KET_D1, KET_D1), "psi_D1"),
    )
    _validate(s)
    return s


def _validate(s: HardyScenario) -> None:
    checks = {
        "psi_notO lies in ker(P_O)": s.P_O.kernel_basis().residual(s.psi_notO.vector).is_zero(),
        "psi_D1 lies in ran(P_D1)": s.P_D1.range_basis().residual(s.psi_D1.vector).is_zero(),
        "P_O = P_OA (x) P_OB": s.P_O == tensor(s.P_OA, s.P_OB),
        "P_D1 = P_D1A (x) P_D1B": s.P_D1 == tensor(s.P_D1A, s.P_D1B),
        "P_D1A + P_D2A = 1": (s.P_D1A.matrix + s.P_D2A.matrix) == Projector.identity(2).matrix,
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise AssertionError("Hardy scenario invariants violated: " + "; ".join(failed))


def incomparability_witness(s: HardyScenario) -> tuple[SubspaceRelation, SubspaceRelation]:
    ker_o = s.P_O.kernel_basis()
    return compare(ker_o, s.P_D1.range_basis()), compare(ker_o, s.P_D1.kernel_basis())


def which_way_table(s: HardyScenario) -> dict[str, Scalar]:
    """Weak values of the four arm-pair propositions, pre ``psi_notO``, post ``psi_D1``."""
    return {
        a + b: weak_value(s.arm_projector(a, b), s.psi_notO, s.psi_D1)
        for a, b in (("O", "O"), ("O", "N"), ("N", "O"), ("N", "N"))
    }


# -- report -------------------------------------------------------------------


@dataclass(frozen=True)
class ClassicalChain:
    equalities: tuple[str, ...]
    O_value: TruthValue
    classical_conclusion: Fraction
    quantum_value: Fraction

    @property
    def contradiction(self) -> bool:
        return self.classical_conclusion != self.quantum_value


@dataclass(frozen=True)
class SupervaluationistSection:
    # (proposition, state label) -> outcome, in narrative order
    outcomes: tuple[tuple[str, str, TruthValue], ...]
    ker_O_vs_ran_D1: SubspaceRelation
    ker_O_vs_ker_D1: SubspaceRelation
    D1_probability_nonzero: bool


@dataclass(frozen=True)
class ManyValuedSection:
    D1: TruthValue  # in psi_notO
    O: TruthValue  # in psi_D1


@dataclass(frozen=True)
class NonImplication:
    premise: str
    premise_holds: bool
    conclusion: str
    conclusion_holds: bool

    @property
    def witnessed(self) -> bool:
        return self.premise_holds and not self.conclusion_holds


@dataclass(frozen=True)
class WeakSection:
    D1: TruthValue  # pre psi_notO, post psi_D1
    O: TruthValue  # pre psi_D1, post psi_notO
    non_implications: tuple[NonImplication, ...]


@dataclass(frozen=True)
class ParadoxReport:
    classical_chain: ClassicalChain
    supervaluationist_section: SupervaluationistSection
    many_valued_section: ManyValuedSection
    weak_section: WeakSection
    which_way_table: dict[str, Scalar]


def paradox_report(s: HardyScenario) -> ParadoxReport:
    notO, d1 = s.psi_notO, s.psi_D1

    # Classical chain: [[D1^B]] = [[O^A]] and [[D1^A]] = [[O^B]] give
    # [[D1]] = [[O]]; O is false initially, so P[D1] = 0 under the bridge.
    o_val = supervaluate(s.P_O, notO)
    d1_classical = o_val
    classical_p = Fraction(0) if isinstance(d1_classical, ClassicalFalse) else Fraction(1)
    chain = ClassicalChain(
        equalities=("[[D1^B]] = [[O^A]]", "[[D1^A]] = [[O^B]]", "[[D1]] = [[O]]"),
        O_value=o_val,
        classical_conclusion=classical_p,
        quantum_value=born_degree(s.P_D1, notO),
    )

    d1_in_notO = supervaluate(s.P_D1, notO)
    rel_ran, rel_ker = incomparability_witness(s)
    superval = SupervaluationistSection(
        outcomes=(
            ("O", notO.label, o_val),
            ("D1", notO.label, d1_in_notO),
            ("D1", d1.label, supervaluate(s.P_D1, d1)),
            ("O", d1.label, supervaluate(s.P_O, d1)),
        ),
        ker_O_vs_ran_D1=rel_ran,
        ker_O_vs_ker_D1=rel_ker,
        # a gap excludes falsity, hence excludes probability zero
        D1_probability_nonzero=isinstance(d1_in_notO, Gap) and born_degree(s.P_D1, notO) != 0,
    )

    mv = ManyValuedSection(D1=many_valued(s.P_D1, notO), O=many_valued(s.P_O, d1))

    weak_d1 = weak_valued(s.P_D1, notO, d1)
    weak_o = weak_valued(s.P_O, d1, notO)
    weak = WeakSection(
        D1=weak_d1,
        O=weak_o,
        non_implications=(
            NonImplication(
                premise="[[O]]_v = 0 in psi_notO",
                premise_holds=isinstance(o_val, ClassicalFalse),
                conclusion="[[D1]]_w = 0",
                conclusion_holds=weak_d1.payload == 0,
            ),
            NonImplication(
                premise="[[D1]]_v != 0 in psi_D1",
                premise_holds=isinstance(supervaluate(s.P_D1, d1), ClassicalTrue),
                conclusion="[[O]]_w != 0",
                conclusion_holds=weak_o.payload != 0,
            ),
        ),
    )

    return ParadoxReport(
        classical_chain=chain,
        supervaluationist_section=superval,
        many_valued_section=mv,
        weak_section=weak,
        which_way_table=which_way_table(s),
    )


def _q(x) -> str:
    return str(Scalar.coerce(x))


def _tv(v: TruthValue) -> dict[str, Any]:
    return {"kind": v.kind, "value": v.value_text()}


def report_to_dict(r: ParadoxReport) -> dict[str, Any]:
    """A JSON-ready document; every number is an exact string."""
    c = r.classical_chain
    sv = r.supervaluationist_section
    table = {k: _q(r.which_way_table[k]) for k in WHICH_WAY_KEYS}
    total = sum(r.which_way_table.values(), Scalar(0))
    return {
        "basis_order": list(BASIS_ORDER),
        "classical_chain": {
            "equalities": list(c.equalities),
            "O_in_psi_notO": c.O_value.value_text(),
            "classical_conclusion": _q(c.classical_conclusion),
            "quantum_value": _q(c.quantum_value),
            "contradiction": c.contradiction,
        },
        "supervaluationist_section": {
            "outcomes": [
                {"proposition": prop, "state": state, "kind": v.kind} for prop, state, v in sv.outcomes
            ],
            "incomparability": {
                "ker(P_O) vs ran(P_D1)": str(sv.ker_O_vs_ran_D1),
                "ker(P_O) vs ker(P_D1)": str(sv.ker_O_vs_ker_D1),
            },
            "D1_probability_nonzero": sv.D1_probability_nonzero,
        },
        "many_valued_section": {
            "D1": r.many_valued_section.D1.value_text(),
            "O": r.many_valued_section.O.value_text(),
            "kinds": {"D1": r.many_valued_section.D1.kind, "O": r.many_valued_section.O.kind},
        },
        "weak_section": {
            "D1": r.weak_section.D1.value_text(),
            "O": r.weak_section.O.value_text(),
            "kinds": {"D1": r.weak_section.D1.kind, "O": r.weak_section.O.kind},
            "non_implications": [
                {
                    "premise": n.premise,
                    "premise_holds": n.premise_holds,
                    "does_not_imply": n.conclusion,
                    "conclusion_holds": n.conclusion_holds,
                    "witnessed": n.witnessed,
                }
                for n in r.weak_section.non_implications
            ],
        },
        "which_way_table": {
            "pre": "psi_notO",
            "post": "psi_D1",
            "values": table,
            "total": _q(total),
            "extension": True,
        },
    }


def render_text(r: ParadoxReport) -> str:
    c = r.classical_chain
    sv = r.supervaluationist_section
    mv = r.many_valued_section
    wk = r.weak_section
    verdict = "PARADOX" if c.contradiction else "consistent"
    lines = [
        "Hardy's paradox",
        "basis: " + ", ".join(BASIS_ORDER),
        "",
        "[classical bivalent chain]",
        *(f"  {e}" for e in c.equalities),
        f"  [[O]] in psi_notO = {c.O_value.value_text()}",
        f"classical conclusion: P[D1]={_q(c.classical_conclusion)}; quantum value: {_q(c.quantum_value)}; {verdict}",
        "",
        "[supervaluationist]",
        *(f"  {prop} in {state}: {v}" for prop, state, v in sv.outcomes),
        f"  ker(P_O) vs ran(P_D1): {sv.ker_O_vs_ran_D1}",
        f"  ker(P_O) vs ker(P_D1): {sv.ker_O_vs_ker_D1}",
        f"  P[D1] in psi_notO nonzero: {'yes' if sv.D1_probability_nonzero else 'no'}",
        "",
        "[many-valued]",
        f"  D1 in psi_notO: {mv.D1}",
        f"  O in psi_D1: {mv.O}",
        "",
        "[weak-valued]",
        f"  D1, pre psi_notO, post psi_D1: {wk.D1}",
        f"  O, pre psi_D1, post psi_notO: {wk.O}",
    ]
    for n in wk.non_implications:
        mark = "holds" if n.witnessed else "FAILS"
        lines.append(f"  {n.premise} does not imply {n.conclusion}: {mark}")
    lines += ["", "[which-way weak values, pre psi_notO, post psi_D1; extension]"]
    for k in WHICH_WAY_KEYS:
        lines.append(f"  {k[0]}A {k[1]}B: {_q(r.which_way_table[k])}")
    total = sum(r.which_way_table.values(), Scalar(0))
    lines.append(f"  total = {_q(total)}")
    return "\n".join(lines) + "\n"
