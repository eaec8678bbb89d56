"""Derivations in the labelled sequent calculus and their checking.

A derivation is a list of steps, each a sequent justified by an axiom,
an inference rule applied to earlier steps, a hypothesis, or an
extension-axiom scheme of the selected logic.  The checker verifies the
exact shape of every rule application; it never searches.

Since sequent sides are sets, a rule's side formula may coincide with a
formula already present in the surrounding context.  Where the rule
notation leaves that context ambiguous (the context may or may not
retain the principal formula), the checker accepts every reading.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Optional, Union

from .core import (
    Apply,
    Box,
    Diamond,
    Formula,
    LabelledFormula,
    Sequent,
    Signature,
    complement_interval,
    gamma_cross,
    up_set,
)
from .semantics import FrameClass


class LogicId(enum.Enum):
    """The supported logics, each bundling extension schemes and a frame class."""

    MV_K = "mv-K"
    MV_D = "mv-D"
    MV_T = "mv-T"
    MV_K4 = "mv-K4"
    MV_S4 = "mv-S4"
    MV_B = "mv-B"
    MV_S5 = "mv-S5"

    @property
    def schemes(self) -> frozenset[int]:
        return _LOGIC_SCHEMES[self]

    @property
    def frame_class(self) -> FrameClass:
        return _LOGIC_FRAMES[self]


_LOGIC_SCHEMES = {
    LogicId.MV_K: frozenset(),
    LogicId.MV_D: frozenset({20}),
    LogicId.MV_T: frozenset({21, 22}),
    LogicId.MV_K4: frozenset({23, 24}),
    LogicId.MV_S4: frozenset({21, 22, 23, 24}),
    LogicId.MV_B: frozenset({25, 26}),
    LogicId.MV_S5: frozenset({21, 22, 27, 28}),
}

_LOGIC_FRAMES = {
    LogicId.MV_K: FrameClass.ANY,
    LogicId.MV_D: FrameClass.SERIAL,
    LogicId.MV_T: FrameClass.REFLEXIVE,
    LogicId.MV_K4: FrameClass.TRANSITIVE,
    LogicId.MV_S4: FrameClass.PREORDER,
    LogicId.MV_B: FrameClass.SYMMETRIC,
    LogicId.MV_S5: FrameClass.EQUIVALENCE,
}

#: Frame class each extension scheme is sound for on its own.
SCHEME_FRAMES = {
    20: FrameClass.SERIAL,
    21: FrameClass.REFLEXIVE,
    22: FrameClass.REFLEXIVE,
    23: FrameClass.TRANSITIVE,
    24: FrameClass.TRANSITIVE,
    25: FrameClass.SYMMETRIC,
    26: FrameClass.SYMMETRIC,
    27: FrameClass.EUCLIDEAN,
    28: FrameClass.EUCLIDEAN,
}


def instantiate_scheme(scheme: int, formula: Formula, label: int, n: int) -> Sequent:
    """The literal sequent for an extension scheme, up-sets expanded.

    Scheme 20 ignores the label argument.
    """
    if scheme == 20:
        return Sequent([LabelledFormula(Box(formula), n)],
                       [LabelledFormula(Diamond(formula), n)])
    if not 1 <= label <= n:
        raise ValueError(f"label {label} out of 1..{n}")
    shapes = {
        21: (Box(formula), formula),
        22: (formula, Diamond(formula)),
        23: (Box(formula), Box(Box(formula))),
        24: (Diamond(Diamond(formula)), Diamond(formula)),
        25: (formula, Box(Diamond(formula))),
        26: (Diamond(Box(formula)), formula),
        27: (Diamond(formula), Box(Diamond(formula))),
        28: (Diamond(Box(formula)), Box(formula)),
    }
    if scheme not in shapes:
        raise ValueError(f"unknown extension scheme {scheme}")
    left, right = shapes[scheme]
    return Sequent([LabelledFormula(left, label)],
                   up_set(LabelledFormula(right, label), n))


# ---------------------------------------------------------------------------
# Justifications
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Hypothesis:
    index: int  # 0-based position in the derivation's hypothesis list


@dataclass(frozen=True)
class AxiomIdentity:
    pass


@dataclass(frozen=True)
class AxiomTable:
    conn: str
    entry: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entry", tuple(self.entry))


@dataclass(frozen=True)
class RuleBox:
    pass


@dataclass(frozen=True)
class RuleDiamond:
    pass


@dataclass(frozen=True)
class LeftShift:
    label: int


@dataclass(frozen=True)
class RightShift:
    from_label: int
    to_label: int


@dataclass(frozen=True)
class LeftWeaken:
    added: LabelledFormula


@dataclass(frozen=True)
class RightWeaken:
    added: LabelledFormula


@dataclass(frozen=True)
class Cut:
    cut: LabelledFormula


@dataclass(frozen=True)
class Resolution:
    formula: Formula
    first_label: int
    second_label: int


@dataclass(frozen=True)
class MultiShift:
    formula: Formula
    labels: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "labels", frozenset(self.labels))


@dataclass(frozen=True)
class SuperMultiShift:
    formulas: tuple[Formula, ...]
    label_sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "formulas", tuple(self.formulas))
        object.__setattr__(self, "label_sets",
                           tuple(frozenset(s) for s in self.label_sets))


@dataclass(frozen=True)
class ExtensionAxiom:
    scheme: int
    formula: Formula
    label: int = 1

    def __post_init__(self):
        if self.scheme == 20:  # the serial scheme has no label parameter
            object.__setattr__(self, "label", 1)


Justification = Union[
    Hypothesis, AxiomIdentity, AxiomTable, RuleBox, RuleDiamond,
    LeftShift, RightShift, LeftWeaken, RightWeaken, Cut, Resolution,
    MultiShift, SuperMultiShift, ExtensionAxiom,
]

RULE_NAMES: dict[type, str] = {
    Hypothesis: "hyp",
    AxiomIdentity: "ax-id",
    AxiomTable: "ax-table",
    RuleBox: "r-box",
    RuleDiamond: "r-dia",
    LeftShift: "lshift",
    RightShift: "rshift",
    LeftWeaken: "lweak",
    RightWeaken: "rweak",
    Cut: "cut",
    Resolution: "resolve",
    MultiShift: "mshift",
    SuperMultiShift: "smshift",
}


def rule_name(justification: Justification) -> str:
    if isinstance(justification, ExtensionAxiom):
        return f"ext-{justification.scheme}"
    return RULE_NAMES[type(justification)]


@dataclass(frozen=True)
class Step:
    conclusion: Sequent
    justification: Justification
    premises: tuple[int, ...] = ()  # 0-based indices of earlier steps

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))


@dataclass(frozen=True)
class Derivation:
    logic: LogicId
    hypotheses: tuple[Sequent, ...]
    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        object.__setattr__(self, "steps", tuple(self.steps))

    def conclusion(self) -> Sequent:
        if not self.steps:
            raise ValueError("empty derivation has no conclusion")
        return self.steps[-1].conclusion


class DerivationBuilder:
    """Incremental construction of a derivation; add() returns step indices."""

    def __init__(self, logic: LogicId = LogicId.MV_K,
                 hypotheses: tuple[Sequent, ...] = ()):
        self.logic = logic
        self.hypotheses = tuple(hypotheses)
        self.steps: list[Step] = []

    def add(self, conclusion: Sequent, justification: Justification,
            *premises: int) -> int:
        self.steps.append(Step(conclusion, justification, premises))
        return len(self.steps) - 1

    def derivation(self) -> Derivation:
        return Derivation(self.logic, self.hypotheses, tuple(self.steps))


@dataclass(frozen=True)
class Violation:
    step: int  # 1-based, matching script numbering
    rule: str
    reason: str

    def __str__(self):
        return f"step {self.step} ({self.rule}): {self.reason}"


# ---------------------------------------------------------------------------
# Step checking
# ---------------------------------------------------------------------------


def _with_and_without(members: frozenset[LabelledFormula],
                      lf: LabelledFormula) -> tuple[frozenset[LabelledFormula], ...]:
    # Both readings of "context, lf": the context may also contain lf itself.
    return (members - {lf}, members)


def _check_arity(premises, count: int) -> Optional[str]:
    if len(premises) != count:
        return f"needs exactly {count} premise(s), cited {len(premises)}"
    return None


def check_step(step: Step, premises: tuple[Sequent, ...],
               hypotheses: tuple[Sequent, ...], logic: LogicId,
               sig: Signature) -> Optional[str]:
    """Verify one rule application; None when it is exact, else the reason."""
    j = step.justification
    n = sig.n
    concl = step.conclusion
    ante, succ = concl.ante_set, concl.succ_set

    if isinstance(j, Hypothesis):
        if err := _check_arity(premises, 0):
            return err
        if not 0 <= j.index < len(hypotheses):
            return f"hypothesis index {j.index + 1} out of range (have {len(hypotheses)})"
        if concl != hypotheses[j.index]:
            return f"conclusion is not hypothesis {j.index + 1}"
        return None

    if isinstance(j, AxiomIdentity):
        if err := _check_arity(premises, 0):
            return err
        if len(ante) == 1 and ante == succ:
            return None
        return "conclusion is not of the form (phi, k) -> (phi, k)"

    if isinstance(j, AxiomTable):
        if err := _check_arity(premises, 0):
            return err
        conn = sig.connectives.get(j.conn)
        if conn is None:
            return f"unknown connective {j.conn!r}"
        if len(j.entry) != conn.arity:
            return f"entry has {len(j.entry)} labels, connective arity is {conn.arity}"
        if any(not 1 <= k <= n for k in j.entry):
            return "entry label out of range"
        if len(succ) != 1:
            return "succedent must be a single labelled formula"
        (head,) = succ
        if not isinstance(head.formula, Apply) or head.formula.conn != j.conn:
            return f"succedent formula is not an application of {j.conn!r}"
        if head.label != conn.table[j.entry]:
            return (f"table gives {j.conn}{j.entry} = {conn.table[j.entry]}, "
                    f"succedent label is {head.label}")
        expected = frozenset(LabelledFormula(f, k)
                             for f, k in zip(head.formula.args, j.entry))
        if ante != expected:
            return "antecedent does not match the table entry arguments"
        return None

    if isinstance(j, (RuleBox, RuleDiamond)):
        if err := _check_arity(premises, 1):
            return err
        prem = premises[0]
        if len(prem.antecedent) != 1:
            return "premise antecedent must be a single labelled formula"
        (plf,) = prem.antecedent
        if isinstance(j, RuleBox):
            if plf.label == n:
                return f"side condition k != n violated (k = {plf.label})"
            principal = LabelledFormula(Box(plf.formula), plf.label)
        else:
            if plf.label == 1:
                return "side condition k != 1 violated (k = 1)"
            principal = LabelledFormula(Diamond(plf.formula), plf.label)
        if succ:
            return "conclusion succedent must be empty"
        if principal not in ante:
            return "conclusion antecedent lacks the boxed/diamonded principal formula"
        for gamma in _with_and_without(ante, principal):
            if prem.succ_set == gamma_cross(gamma, n):
                return None
        return "premise succedent differs from the successor-exclusion set of the context"

    if isinstance(j, LeftShift):
        if err := _check_arity(premises, 1):
            return err
        prem = premises[0]
        shifted = complement_interval(j.label, j.label, n)
        for lf in prem.antecedent:
            if lf.label != j.label:
                continue
            extra = frozenset(LabelledFormula(lf.formula, k) for k in shifted)
            for gamma in _with_and_without(prem.ante_set, lf):
                if ante == gamma and succ == prem.succ_set | extra:
                    return None
        return (f"conclusion does not shift any antecedent formula with label "
                f"{j.label} to the succedent complement")

    if isinstance(j, RightShift):
        if err := _check_arity(premises, 1):
            return err
        if j.from_label == j.to_label:
            return f"side condition k' != k'' violated (both {j.from_label})"
        prem = premises[0]
        for lf in prem.succedent:
            if lf.label != j.from_label:
                continue
            moved = LabelledFormula(lf.formula, j.to_label)
            for delta in _with_and_without(prem.succ_set, lf):
                if ante == prem.ante_set | {moved} and succ == delta:
                    return None
        return (f"conclusion does not shift any succedent formula from label "
                f"{j.from_label} to antecedent label {j.to_label}")

    if isinstance(j, (LeftWeaken, RightWeaken)):
        if err := _check_arity(premises, 1):
            return err
        prem = premises[0]
        if isinstance(j, LeftWeaken):
            ok = ante == prem.ante_set | {j.added} and succ == prem.succ_set
        else:
            ok = ante == prem.ante_set and succ == prem.succ_set | {j.added}
        return None if ok else "conclusion is not the premise plus the stated formula"

    if isinstance(j, Cut):
        if err := _check_arity(premises, 2):
            return err
        lf = j.cut
        for left, right in (premises, premises[::-1]):
            if lf not in left.succ_set or lf not in right.ante_set:
                continue
            for delta in _with_and_without(left.succ_set, lf):
                for gamma in _with_and_without(right.ante_set, lf):
                    if ante == left.ante_set | gamma and succ == delta | right.succ_set:
                        return None
        return "conclusion is not a cut of the premises on the stated formula"

    if isinstance(j, Resolution):
        if err := _check_arity(premises, 2):
            return err
        if j.first_label == j.second_label:
            return f"side condition k' != k'' violated (both {j.first_label})"
        lf1 = LabelledFormula(j.formula, j.first_label)
        lf2 = LabelledFormula(j.formula, j.second_label)
        for first, second in (premises, premises[::-1]):
            if lf1 not in first.succ_set or lf2 not in second.succ_set:
                continue
            for d1 in _with_and_without(first.succ_set, lf1):
                for d2 in _with_and_without(second.succ_set, lf2):
                    if ante == first.ante_set | second.ante_set and succ == d1 | d2:
                        return None
        return "conclusion is not a resolution of the premises on the stated labels"

    if isinstance(j, MultiShift):
        labels = sorted(j.labels)
        if any(not 1 <= k <= n for k in labels):
            return "shift label out of range"
        if err := _check_arity(premises, len(labels)):
            return err
        extra = frozenset(LabelledFormula(j.formula, k)
                          for k in frozenset(range(1, n + 1)) - j.labels)
        return _check_shift_union(concl, premises,
                                  [(j.formula, k) for k in labels], extra)

    if isinstance(j, SuperMultiShift):
        if len(j.formulas) != len(j.label_sets):
            return "formula list and label-set list differ in length"
        if any(not 1 <= k <= n for ks in j.label_sets for k in ks):
            return "shift label out of range"
        tuples = list(product(*(sorted(ks) for ks in j.label_sets)))
        if err := _check_arity(premises, len(tuples)):
            return err
        extra: set[LabelledFormula] = set()
        for f, ks in zip(j.formulas, j.label_sets):
            extra.update(LabelledFormula(f, k)
                         for k in frozenset(range(1, n + 1)) - ks)
        principal_rows = [list(zip(j.formulas, t)) for t in tuples]
        return _check_shift_union_rows(concl, premises, principal_rows,
                                       frozenset(extra))

    if isinstance(j, ExtensionAxiom):
        if err := _check_arity(premises, 0):
            return err
        if j.scheme not in logic.schemes:
            return f"scheme {j.scheme} is not an axiom of {logic.value}"
        try:
            expected = instantiate_scheme(j.scheme, j.formula, j.label, n)
        except ValueError as exc:
            return str(exc)
        if concl != expected:
            return f"conclusion is not the scheme {j.scheme} instance"
        return None

    return f"unknown justification {j!r}"


def _check_shift_union(concl: Sequent, premises: tuple[Sequent, ...],
                       principals: list[tuple[Formula, int]],
                       extra: frozenset[LabelledFormula]) -> Optional[str]:
    rows = [[p] for p in principals]
    return _check_shift_union_rows(concl, premises, rows, extra)


def _check_shift_union_rows(concl: Sequent, premises: tuple[Sequent, ...],
                            principal_rows: list[list[tuple[Formula, int]]],
                            extra: frozenset[LabelledFormula]) -> Optional[str]:
    """Shared conclusion check for the two derived shift rules.

    Each premise must contain its row of principal formulas on the left;
    the conclusion unions the remaining contexts (which may retain
    principals, by set semantics) and adds the complement block on the
    right.
    """
    union_min: set[LabelledFormula] = set()
    union_succ: set[LabelledFormula] = set()
    all_principals: set[LabelledFormula] = set()
    for idx, (prem, row) in enumerate(zip(premises, principal_rows)):
        row_lfs = frozenset(LabelledFormula(f, k) for f, k in row)
        missing = row_lfs - prem.ante_set
        if missing:
            lf = next(iter(missing))
            return (f"premise {idx + 1} lacks the principal labelled formula "
                    f"with label {lf.label}")
        union_min.update(prem.ante_set - row_lfs)
        union_succ.update(prem.succ_set)
        all_principals.update(row_lfs)
    if concl.succ_set != union_succ | extra:
        return "conclusion succedent differs from the premise union plus complement block"
    if not union_min <= concl.ante_set:
        return "conclusion antecedent drops part of the premise contexts"
    if not concl.ante_set <= union_min | all_principals:
        return "conclusion antecedent adds formulas not present in any premise context"
    return None


def check_derivation(derivation: Derivation, sig: Signature) -> Optional[Violation]:
    """Check steps in order; None when the whole derivation is valid."""
    for pos, step in enumerate(derivation.steps):
        for ref in step.premises:
            if not 0 <= ref < pos:
                return Violation(pos + 1, rule_name(step.justification),
                                 f"premise reference {ref + 1} is not an earlier step")
        resolved = tuple(derivation.steps[ref].conclusion for ref in step.premises)
        reason = check_step(step, resolved, derivation.hypotheses,
                            derivation.logic, sig)
        if reason is not None:
            return Violation(pos + 1, rule_name(step.justification), reason)
    return None
