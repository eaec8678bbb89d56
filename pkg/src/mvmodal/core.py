"""Truth domains, signatures, formulas, labelled formulas and sequents.

Truth values are identified with the integer labels 1..n, ordered as
integers (label k stands for the k-th truth value in the chain).  All
values here are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Union

#: Names that may never be used as connective names.
RESERVED_NAMES = frozenset({"Box", "Dia"})


@dataclass(frozen=True)
class TruthDomain:
    """A linearly ordered set of n >= 2 truth values, as labels 1..n."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"truth domain needs at least 2 values, got {self.n}")

    @property
    def labels(self) -> range:
        return range(1, self.n + 1)


@dataclass(frozen=True)
class Connective:
    """A truth-table connective of fixed arity (arity 0 = constant)."""

    name: str
    arity: int
    table: Mapping[tuple[int, ...], int]

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError(f"negative arity for connective {self.name!r}")

    def __hash__(self):
        return hash((self.name, self.arity))


@dataclass(frozen=True)
class Signature:
    """A truth domain together with named truth-table connectives.

    Construction validates that every table is total on the domain and
    that no connective reuses a reserved modal keyword.
    """

    domain: TruthDomain
    connectives: Mapping[str, Connective]

    def __post_init__(self):
        n = self.domain.n
        for name, conn in self.connectives.items():
            if name != conn.name:
                raise ValueError(f"connective {conn.name!r} registered under {name!r}")
            if name in RESERVED_NAMES:
                raise ValueError(f"connective name {name!r} is reserved")
            expected = n ** conn.arity
            if len(conn.table) != expected:
                raise ValueError(
                    f"connective {name!r}: table has {len(conn.table)} entries, "
                    f"needs {expected}"
                )
            for entry, out in conn.table.items():
                if len(entry) != conn.arity:
                    raise ValueError(f"connective {name!r}: entry {entry} has wrong arity")
                if any(k < 1 or k > n for k in entry) or out < 1 or out > n:
                    raise ValueError(f"connective {name!r}: label out of 1..{n} in {entry} = {out}")

    @property
    def n(self) -> int:
        return self.domain.n

    def connective(self, name: str) -> Connective:
        try:
            return self.connectives[name]
        except KeyError:
            raise ValueError(f"unknown connective {name!r}") from None


def make_signature(n: int, connectives: Iterable[Connective] = ()) -> Signature:
    """Convenience constructor; rejects duplicate connective names."""
    table: dict[str, Connective] = {}
    for conn in connectives:
        if conn.name in table:
            raise ValueError(f"duplicate connective name {conn.name!r}")
        table[conn.name] = conn
    return Signature(TruthDomain(n), table)


# ---------------------------------------------------------------------------
# Formulas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Apply:
    conn: str
    args: tuple["Formula", ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Box:
    sub: "Formula"


@dataclass(frozen=True)
class Diamond:
    sub: "Formula"


Formula = Union[Var, Apply, Box, Diamond]


def formula_key(formula: Formula):
    """A total structural order on formulas, for canonical rendering."""
    if isinstance(formula, Var):
        return (0, formula.name)
    if isinstance(formula, Apply):
        return (1, formula.conn, tuple(formula_key(a) for a in formula.args))
    if isinstance(formula, Box):
        return (2, formula_key(formula.sub))
    if isinstance(formula, Diamond):
        return (3, formula_key(formula.sub))
    raise TypeError(f"not a formula: {formula!r}")


def variables_of(formula: Formula) -> frozenset[str]:
    """All propositional variable names occurring in the formula."""
    if isinstance(formula, Var):
        return frozenset({formula.name})
    if isinstance(formula, Apply):
        out: frozenset[str] = frozenset()
        for a in formula.args:
            out |= variables_of(a)
        return out
    return variables_of(formula.sub)


def is_modal_free(formula: Formula) -> bool:
    if isinstance(formula, Var):
        return True
    if isinstance(formula, Apply):
        return all(is_modal_free(a) for a in formula.args)
    return False


def validate_formula(formula: Formula, sig: Signature) -> None:
    """Check connective names and arities against the signature."""
    if isinstance(formula, Var):
        return
    if isinstance(formula, Apply):
        conn = sig.connective(formula.conn)
        if len(formula.args) != conn.arity:
            raise ValueError(
                f"connective {formula.conn!r} expects {conn.arity} arguments, "
                f"got {len(formula.args)}"
            )
        for a in formula.args:
            validate_formula(a, sig)
        return
    validate_formula(formula.sub, sig)


@dataclass(frozen=True)
class LabelledFormula:
    """A formula paired with the label of the truth value it takes."""

    formula: Formula
    label: int

    def __post_init__(self):
        if self.label < 1:
            raise ValueError(f"label must be >= 1, got {self.label}")


def labelled_key(lf: LabelledFormula):
    return (formula_key(lf.formula), lf.label)


def _canonical_side(side: Iterable[LabelledFormula]) -> tuple[LabelledFormula, ...]:
    return tuple(sorted(set(side), key=labelled_key))


@dataclass(frozen=True)
class Sequent:
    """A pair of finite sets of labelled formulas.

    Sides are stored as sorted duplicate-free tuples, so structural
    equality coincides with equality of the underlying sets.
    """

    antecedent: tuple[LabelledFormula, ...]
    succedent: tuple[LabelledFormula, ...]

    def __init__(self, antecedent: Iterable[LabelledFormula] = (),
                 succedent: Iterable[LabelledFormula] = ()):
        object.__setattr__(self, "antecedent", _canonical_side(antecedent))
        object.__setattr__(self, "succedent", _canonical_side(succedent))

    @property
    def ante_set(self) -> frozenset[LabelledFormula]:
        return frozenset(self.antecedent)

    @property
    def succ_set(self) -> frozenset[LabelledFormula]:
        return frozenset(self.succedent)

    def formulas(self) -> frozenset[Formula]:
        return frozenset(lf.formula for lf in self.antecedent + self.succedent)

    def variables(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for f in self.formulas():
            out |= variables_of(f)
        return out


def sequent_variables(sequents: Iterable[Sequent]) -> frozenset[str]:
    out: frozenset[str] = frozenset()
    for s in sequents:
        out |= s.variables()
    return out


# ---------------------------------------------------------------------------
# Label intervals and derived sets
# ---------------------------------------------------------------------------


def interval(i: int, j: int, n: int) -> frozenset[int]:
    """The labels k with i <= k <= j; empty when i > j.

    i and j may be the formal bounds 0 and n+1, which only ever widen or
    empty the range.
    """
    return frozenset(k for k in range(max(i, 1), min(j, n) + 1))


def complement_interval(i: int, j: int, n: int) -> frozenset[int]:
    """{1..n} minus interval(i, j, n)."""
    return frozenset(range(1, n + 1)) - interval(i, j, n)


def up_set(lf: LabelledFormula, n: int) -> frozenset[LabelledFormula]:
    """{formula} x [k, n] for a labelled formula (formula, k)."""
    return frozenset(LabelledFormula(lf.formula, k) for k in interval(lf.label, n, n))


def down_set(lf: LabelledFormula, n: int) -> frozenset[LabelledFormula]:
    """{formula} x [1, k] for a labelled formula (formula, k)."""
    return frozenset(LabelledFormula(lf.formula, k) for k in interval(1, lf.label, n))


def gamma_cross(gamma: Iterable[LabelledFormula], n: int) -> frozenset[LabelledFormula]:
    """Labelled formulas excluded at every successor of a world satisfying gamma.

    For every formula psi with both a boxed label i and a diamonded label j
    in gamma, contributes {psi} x complement_interval(i, j, n).  When a psi
    carries several boxed or diamonded labels, all (i, j) pairs contribute.
    """
    box_labels: dict[Formula, set[int]] = {}
    dia_labels: dict[Formula, set[int]] = {}
    for lf in gamma:
        if isinstance(lf.formula, Box):
            box_labels.setdefault(lf.formula.sub, set()).add(lf.label)
        elif isinstance(lf.formula, Diamond):
            dia_labels.setdefault(lf.formula.sub, set()).add(lf.label)
    out: set[LabelledFormula] = set()
    for psi, boxes in box_labels.items():
        for i in boxes:
            for j in dia_labels.get(psi, ()):
                out.update(LabelledFormula(psi, k) for k in complement_interval(i, j, n))
    return frozenset(out)


def subformula_closure(formulas: Iterable[Formula]) -> frozenset[Formula]:
    """Smallest superset closed under taking immediate subformulas."""
    seen: set[Formula] = set()
    stack = list(formulas)
    while stack:
        f = stack.pop()
        if f in seen:
            continue
        seen.add(f)
        if isinstance(f, Apply):
            stack.extend(f.args)
        elif isinstance(f, (Box, Diamond)):
            stack.append(f.sub)
    return frozenset(seen)


def apply_connective(sig: Signature, name: str, args: tuple[int, ...]) -> int:
    """Look up a connective's truth table on a tuple of labels."""
    conn = sig.connective(name)
    args = tuple(args)
    if len(args) != conn.arity:
        raise ValueError(
            f"connective {name!r} expects {conn.arity} arguments, got {len(args)}"
        )
    return conn.table[args]


# ---------------------------------------------------------------------------
# Stock connective tables
# ---------------------------------------------------------------------------


def lukasiewicz_implication(n: int, name: str = "imp") -> Connective:
    """imp(a, b) = min(n, n - a + b); the classical table at n = 2."""
    table = {(a, b): min(n, n - a + b)
             for a in range(1, n + 1) for b in range(1, n + 1)}
    return Connective(name, 2, table)


def reversal_connective(n: int, name: str = "neg") -> Connective:
    """The order-reversing unary table k -> n - k + 1."""
    return Connective(name, 1, {(k,): n - k + 1 for k in range(1, n + 1)})


def min_connective(n: int, name: str = "and") -> Connective:
    table = {(a, b): min(a, b) for a in range(1, n + 1) for b in range(1, n + 1)}
    return Connective(name, 2, table)


def max_connective(n: int, name: str = "or") -> Connective:
    table = {(a, b): max(a, b) for a in range(1, n + 1) for b in range(1, n + 1)}
    return Connective(name, 2, table)


def lukasiewicz_signature(n: int = 3, negation: bool = False) -> Signature:
    """Domain of size n with Lukasiewicz implication, optionally negation."""
    conns = [lukasiewicz_implication(n)]
    if negation:
        conns.append(reversal_connective(n))
    return make_signature(n, conns)


def all_entries(n: int, arity: int):
    """All label tuples of the given arity, in lexicographic order."""
    return product(range(1, n + 1), repeat=arity)
