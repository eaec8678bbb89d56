"""Stock derivations exercising the calculus.

Each builder returns a fully explicit, checkable derivation: compressed
presentations (n-1 weakenings at once, families of steps indexed by a
label) are unfolded into one step per rule application.
"""

from __future__ import annotations

from .core import (
    Apply,
    Box,
    Diamond,
    Formula,
    LabelledFormula,
    Sequent,
    Var,
    down_set,
    gamma_cross,
    up_set,
)
from .proofs import (
    AxiomIdentity,
    AxiomTable,
    Cut,
    Derivation,
    DerivationBuilder,
    Hypothesis,
    LeftShift,
    LeftWeaken,
    LogicId,
    MultiShift,
    RightShift,
    RightWeaken,
    RuleBox,
    RuleDiamond,
    Step,
)


def lf(formula: Formula, label: int) -> LabelledFormula:
    return LabelledFormula(formula, label)


def inline(builder: DerivationBuilder, other: Derivation) -> int:
    """Append another derivation's steps, returning the index of its last step.

    The appended derivation must use the same hypothesis list (or none).
    """
    offset = len(builder.steps)
    for step in other.steps:
        builder.steps.append(Step(step.conclusion, step.justification,
                                  tuple(p + offset for p in step.premises)))
    return len(builder.steps) - 1


def _full_row(builder: DerivationBuilder, formula: Formula, k: int, n: int) -> int:
    """Derive (formula, k) -> {formula} x [1, n] from the identity axiom."""
    left = [lf(formula, k)]
    succ = {lf(formula, k)}
    last = builder.add(Sequent(left, succ), AxiomIdentity())
    for j in range(1, n + 1):
        if j == k:
            continue
        succ = succ | {lf(formula, j)}
        last = builder.add(Sequent(left, succ), RightWeaken(lf(formula, j)), last)
    return last


def box_below_diamond(phi: Formula, k: int, n: int) -> Derivation:
    """(Box phi, k) -> (Dia phi, k)^+ for k != n."""
    if k == n:
        raise ValueError("defined for k != n only")
    b = DerivationBuilder()
    goal = Sequent([lf(Box(phi), k)], up_set(lf(Diamond(phi), k), n))
    if k == 1:
        base = b.add(Sequent([], up_set(lf(Diamond(phi), 1), n)),
                     MultiShift(Diamond(phi), frozenset()))
        b.add(goal, LeftWeaken(lf(Box(phi), 1)), base)
        return b.derivation()
    row = _full_row(b, phi, k, n)
    shifts = []
    for j in range(1, k):
        concl = Sequent([lf(Box(phi), k), lf(Diamond(phi), j)], [])
        shifts.append(b.add(concl, RuleBox(), row))
    b.add(goal, MultiShift(Diamond(phi), frozenset(range(1, k))), *shifts)
    return b.derivation()


def diamond_above_box(phi: Formula, k: int, n: int) -> Derivation:
    """(Dia phi, k) -> (Box phi, k)^- for k != 1."""
    if k == 1:
        raise ValueError("defined for k != 1 only")
    b = DerivationBuilder()
    goal = Sequent([lf(Diamond(phi), k)], down_set(lf(Box(phi), k), n))
    if k == n:
        base = b.add(Sequent([], down_set(lf(Box(phi), n), n)),
                     MultiShift(Box(phi), frozenset()))
        b.add(goal, LeftWeaken(lf(Diamond(phi), n)), base)
        return b.derivation()
    row = _full_row(b, phi, k, n)
    shifts = []
    for j in range(k + 1, n + 1):
        concl = Sequent([lf(Diamond(phi), k), lf(Box(phi), j)], [])
        shifts.append(b.add(concl, RuleDiamond(), row))
    b.add(goal, MultiShift(Box(phi), frozenset(range(k + 1, n + 1))), *shifts)
    return b.derivation()


def box_top_forces_diamond(phi: Formula, n: int) -> Derivation:
    """(Box phi, n) -> (Dia phi, 1), (Dia phi, n)."""
    b = DerivationBuilder()
    goal = Sequent([lf(Box(phi), n)],
                   [lf(Diamond(phi), 1), lf(Diamond(phi), n)])
    if n == 2:
        base = b.add(Sequent([], [lf(Diamond(phi), 1), lf(Diamond(phi), 2)]),
                     MultiShift(Diamond(phi), frozenset()))
        b.add(goal, LeftWeaken(lf(Box(phi), 2)), base)
        return b.derivation()
    shifts = []
    for k in range(2, n):
        row = _full_row(b, phi, k, n)
        concl = Sequent([lf(Diamond(phi), k), lf(Box(phi), n)], [])
        shifts.append(b.add(concl, RuleDiamond(), row))
    b.add(goal, MultiShift(Diamond(phi), frozenset(range(2, n))), *shifts)
    return b.derivation()


def _dead_end_base(b: DerivationBuilder, phi: Formula, n: int) -> int:
    """Derive -> {phi} x [1, n]."""
    row = _full_row(b, phi, 1, n)
    succ = frozenset(lf(phi, j) for j in range(1, n + 1))
    return b.add(Sequent([], succ), LeftShift(1), row)


def dead_end_box(phi: Formula, psi: Formula, n: int) -> Derivation:
    """(Box phi, n), (Dia phi, 1) -> (Box psi, n)."""
    b = DerivationBuilder()
    base = _dead_end_base(b, phi, n)
    full = frozenset(lf(phi, j) for j in range(1, n + 1))
    context = [lf(Box(phi), n), lf(Diamond(phi), 1)]
    shifts = []
    for i in range(1, n):
        w = b.add(Sequent([lf(psi, i)], full), LeftWeaken(lf(psi, i)), base)
        concl = Sequent([lf(Box(psi), i)] + context, [])
        shifts.append(b.add(concl, RuleBox(), w))
    b.add(Sequent(context, [lf(Box(psi), n)]),
          MultiShift(Box(psi), frozenset(range(1, n))), *shifts)
    return b.derivation()


def dead_end_diamond(phi: Formula, psi: Formula, n: int) -> Derivation:
    """(Box phi, n), (Dia phi, 1) -> (Dia psi, 1)."""
    b = DerivationBuilder()
    base = _dead_end_base(b, phi, n)
    full = frozenset(lf(phi, j) for j in range(1, n + 1))
    context = [lf(Box(phi), n), lf(Diamond(phi), 1)]
    shifts = []
    for i in range(2, n + 1):
        w = b.add(Sequent([lf(psi, i)], full), LeftWeaken(lf(psi, i)), base)
        concl = Sequent([lf(Diamond(psi), i)] + context, [])
        shifts.append(b.add(concl, RuleDiamond(), w))
    b.add(Sequent(context, [lf(Diamond(psi), 1)]),
          MultiShift(Diamond(psi), frozenset(range(2, n + 1))), *shifts)
    return b.derivation()


def box_modus_ponens_lukasiewicz() -> Derivation:
    """(Box imp(p,q), 3), (Box p, 3) -> (Box q, 3) over the 3-valued chain.

    Composes the dead-end and top-label derivations with cuts, exactly
    following the table of the implication connective.
    """
    n = 3
    p = Var("p")
    q = Var("q")
    pq = Apply("imp", (p, q))
    b = DerivationBuilder()
    d1 = b.add(Sequent([lf(p, 3), lf(q, 1)], [lf(pq, 1)]), AxiomTable("imp", (3, 1)))
    d2 = b.add(Sequent([lf(p, 3), lf(q, 2)], [lf(pq, 2)]), AxiomTable("imp", (3, 2)))
    d6 = inline(b, box_top_forces_diamond(p, n))
    d8 = inline(b, box_top_forces_diamond(pq, n))
    d9 = {}
    for k, table_step in ((1, d1), (2, d2)):
        d3 = b.add(Sequent([lf(p, 3), lf(q, k), lf(pq, 3)], []),
                   RightShift(k, 3), table_step)
        d4a = b.add(Sequent([lf(q, k), lf(pq, 3)], [lf(p, 1), lf(p, 2)]),
                    LeftShift(3), d3)
        d4 = b.add(Sequent([lf(q, k)],
                           [lf(p, 1), lf(p, 2), lf(pq, 1), lf(pq, 2)]),
                   LeftShift(3), d4a)
        d5 = b.add(Sequent([lf(Box(q), k), lf(Box(p), 3), lf(Diamond(p), 3),
                            lf(Box(pq), 3), lf(Diamond(pq), 3)], []),
                   RuleBox(), d4)
        d7 = b.add(Sequent([lf(Box(q), k), lf(Box(p), 3), lf(Box(pq), 3),
                            lf(Diamond(pq), 3)], [lf(Diamond(p), 1)]),
                   Cut(lf(Diamond(p), 3)), d5, d6)
        d9[k] = b.add(Sequent([lf(Box(q), k), lf(Box(p), 3), lf(Box(pq), 3)],
                              [lf(Diamond(p), 1), lf(Diamond(pq), 1)]),
                      Cut(lf(Diamond(pq), 3)), d7, d8)
    d10 = b.add(Sequent([lf(Box(p), 3), lf(Box(pq), 3)],
                        [lf(Diamond(p), 1), lf(Diamond(pq), 1), lf(Box(q), 3)]),
                MultiShift(Box(q), frozenset({1, 2})), d9[1], d9[2])
    d11 = inline(b, dead_end_box(p, q, n))
    d12 = b.add(Sequent([lf(Box(p), 3), lf(Box(pq), 3)],
                        [lf(Diamond(pq), 1), lf(Box(q), 3)]),
                Cut(lf(Diamond(p), 1)), d10, d11)
    d13 = inline(b, dead_end_box(pq, q, n))
    b.add(Sequent([lf(Box(p), 3), lf(Box(pq), 3)], [lf(Box(q), 3)]),
          Cut(lf(Diamond(pq), 1)), d12, d13)
    return b.derivation()


def negation_inversion(phi: Formula, k: int, n: int, neg: str = "neg") -> Derivation:
    """(neg phi, n - k + 1) -> (phi, k), with neg the order-reversing table."""
    b = DerivationBuilder()
    neg_phi = Apply(neg, (phi,))
    target = n - k + 1
    shifts = []
    for j in range(1, n + 1):
        if j == k:
            continue
        t = b.add(Sequent([lf(phi, j)], [lf(neg_phi, n - j + 1)]),
                  AxiomTable(neg, (j,)))
        shifts.append(b.add(Sequent([lf(phi, j), lf(neg_phi, target)], []),
                            RightShift(n - j + 1, target), t))
    others = frozenset(range(1, n + 1)) - {k}
    b.add(Sequent([lf(neg_phi, target)], [lf(phi, k)]),
          MultiShift(phi, others), *shifts)
    return b.derivation()


def _reversal(outer, inner, phi: Formula, k: int, n: int, neg: str) -> Derivation:
    dual = Apply(neg, (outer(Apply(neg, (phi,))),))
    hypotheses = tuple(Sequent([lf(inner(phi), x)], [lf(dual, x)])
                       for x in range(1, n + 1))
    b = DerivationBuilder(LogicId.MV_K, hypotheses)
    shifts = []
    for x in range(1, n + 1):
        if x == k:
            continue
        h = b.add(hypotheses[x - 1], Hypothesis(x - 1))
        shifts.append(b.add(Sequent([lf(inner(phi), x), lf(dual, k)], []),
                            RightShift(x, k), h))
    others = frozenset(range(1, n + 1)) - {k}
    b.add(Sequent([lf(dual, k)], [lf(inner(phi), k)]),
          MultiShift(inner(phi), others), *shifts)
    return b.derivation()


def reversal_of_diamond_duality(phi: Formula, k: int, n: int,
                                neg: str = "neg") -> Derivation:
    """From hypotheses (Dia phi, x) -> (neg Box neg phi, x), derive the converse at k."""
    return _reversal(Box, Diamond, phi, k, n, neg)


def reversal_of_box_duality(phi: Formula, k: int, n: int,
                            neg: str = "neg") -> Derivation:
    """From hypotheses (Box phi, x) -> (neg Dia neg phi, x), derive the converse at k."""
    return _reversal(Diamond, Box, phi, k, n, neg)


def diamond_rule_from_negation(phi: Formula, k: int, n: int,
                               context: tuple[LabelledFormula, ...],
                               neg: str = "neg") -> Derivation:
    """Recover the diamond inference through the box rule and negation.

    From the hypothesis (phi, k) -> successor-exclusion(context), k != 1,
    derives (neg Box neg phi, k), context ->: the diamond rule's
    conclusion with the possibility connective spelled as neg-Box-neg.
    """
    if k == 1:
        raise ValueError("the diamond rule requires k != 1")
    cross = gamma_cross(context, n)
    hypothesis = Sequent([lf(phi, k)], cross)
    b = DerivationBuilder(LogicId.MV_K, (hypothesis,))
    h = b.add(hypothesis, Hypothesis(0))
    neg_phi = Apply(neg, (phi,))
    inv1 = inline(b, negation_inversion(phi, k, n, neg))
    c1 = b.add(Sequent([lf(neg_phi, n - k + 1)], cross), Cut(lf(phi, k)), inv1, h)
    boxed = lf(Box(neg_phi), n - k + 1)
    rb = b.add(Sequent((boxed,) + tuple(context), []), RuleBox(), c1)
    inv2 = inline(b, negation_inversion(Box(neg_phi), n - k + 1, n, neg))
    dual = Apply(neg, (Box(neg_phi),))
    b.add(Sequent((lf(dual, k),) + tuple(context), []), Cut(boxed), inv2, rb)
    return b.derivation()
