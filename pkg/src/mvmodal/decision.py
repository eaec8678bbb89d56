"""Bounded countermodel search realizing the semantic decision procedure.

A sequent is searched for countermodels over every model of the logic's
frame class with up to `bound` worlds.  Once the bound reaches the
filtration bound n^|closure|, absence of a countermodel settles validity
outright: any countermodel filters down to one of at most that many
worlds, so the bounded search is complete.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional, Union

from .core import Sequent, Signature, sequent_variables, subformula_closure
from .proofs import LogicId
from .semantics import (
    FrameClass,
    KripkeModel,
    frame_check,
    model_satisfies,
    satisfies_sequent,
)

ENUM_CEILING_VAR = "MVK_ENUM_CEILING"
DEFAULT_ENUM_CEILING = 10_000_000


class EnumerationCeilingError(Exception):
    """Raised when a search would enumerate more models than allowed."""

    def __init__(self, ceiling: int, examined: int):
        super().__init__(f"enumeration ceiling {ceiling} reached "
                         f"after {examined} models")
        self.ceiling = ceiling
        self.examined = examined


def default_ceiling() -> int:
    raw = os.environ.get(ENUM_CEILING_VAR)
    return int(raw) if raw else DEFAULT_ENUM_CEILING


class _Budget:
    __slots__ = ("ceiling", "examined")

    def __init__(self, ceiling: int):
        self.ceiling = ceiling
        self.examined = 0

    def spend(self) -> None:
        self.examined += 1
        if self.examined > self.ceiling:
            raise EnumerationCeilingError(self.ceiling, self.examined - 1)


@dataclass(frozen=True)
class Countermodel:
    model: KripkeModel
    world: int


@dataclass(frozen=True)
class ValidUpTo:
    bound: int


@dataclass(frozen=True)
class ProvedValid:
    bound: int


DecisionOutcome = Union[Countermodel, ValidUpTo, ProvedValid]


def filtration_bound(hypotheses: Iterable[Sequent], goal: Sequent, n: int) -> int:
    """n ** |closure|: an upper bound on the worlds of any filtered model.

    A class of value-equivalent worlds is determined by its vector of
    labels on the closure, so no filtration has more classes than there
    are vectors.
    """
    formulas = set(goal.formulas())
    for s in hypotheses:
        formulas |= s.formulas()
    return n ** len(subformula_closure(formulas))


def _relations(world_count: int) -> Iterator[frozenset[tuple[int, int]]]:
    # TODO: generate frame-class members directly instead of filtering
    # the full powerset; fine at desk scale, wasteful beyond 4 worlds.
    pairs = [(u, v) for u in range(world_count) for v in range(world_count)]
    for mask in range(1 << len(pairs)):
        yield frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)


def enumerate_models(variables: Iterable[str], n: int, world_count: int,
                     frame_class: FrameClass,
                     ceiling: Optional[int] = None) -> Iterator[KripkeModel]:
    """Every model with exactly `world_count` worlds in the frame class.

    Relations are generated as all subsets of the world square and kept
    when the frame predicate passes; valuations range over all label
    assignments to (world, variable) pairs.  The order is deterministic.
    """
    if world_count < 1:
        raise ValueError("world_count must be >= 1")
    variables = sorted(set(variables))
    budget = _Budget(default_ceiling() if ceiling is None else ceiling)
    slots = [(u, p) for u in range(world_count) for p in variables]
    for edges in _relations(world_count):
        candidate = KripkeModel(world_count, edges)
        if not frame_check(candidate, frame_class):
            continue
        for labels in product(range(1, n + 1), repeat=len(slots)):
            budget.spend()
            yield KripkeModel(world_count, edges, dict(zip(slots, labels)))


def search_countermodel(sig: Signature, hypotheses: tuple[Sequent, ...],
                        goal: Sequent, frame_class: FrameClass, bound: int,
                        ceiling: Optional[int] = None) -> Optional[Countermodel]:
    """First model (in enumeration order) satisfying the hypotheses and
    refuting the goal at some world, searching world counts 1..bound."""
    variables = sorted(sequent_variables((goal, *hypotheses)))
    budget_ceiling = default_ceiling() if ceiling is None else ceiling
    budget = _Budget(budget_ceiling)
    for world_count in range(1, bound + 1):
        for model in enumerate_models(variables, sig.n, world_count,
                                      frame_class, ceiling=budget_ceiling):
            budget.spend()
            cache: dict = {}
            if hypotheses and not model_satisfies(sig, model, hypotheses, cache):
                continue
            for world in model.worlds:
                if not satisfies_sequent(sig, model, world, goal, cache):
                    _verify_countermodel(sig, model, world, hypotheses, goal,
                                         frame_class)
                    return Countermodel(model, world)
    return None


def _verify_countermodel(sig: Signature, model: KripkeModel, world: int,
                         hypotheses: tuple[Sequent, ...], goal: Sequent,
                         frame_class: FrameClass) -> None:
    # Independent re-check with fresh caches before the result escapes.
    if not frame_check(model, frame_class):
        raise AssertionError("countermodel left the frame class")
    if hypotheses and not model_satisfies(sig, model, hypotheses):
        raise AssertionError("countermodel does not satisfy the hypotheses")
    if satisfies_sequent(sig, model, world, goal):
        raise AssertionError("countermodel fails to refute the goal")


def decide(sig: Signature, hypotheses: Iterable[Sequent], goal: Sequent,
           logic: LogicId, bound: int,
           ceiling: Optional[int] = None) -> DecisionOutcome:
    """Search the logic's frame class up to `bound` worlds.

    Returns the first countermodel found, ValidUpTo(bound) when none
    exists within the bound, or ProvedValid when the bound already covers
    the filtration bound.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    hypotheses = tuple(hypotheses)
    found = search_countermodel(sig, hypotheses, goal, logic.frame_class,
                                bound, ceiling)
    if found is not None:
        return found
    if bound >= filtration_bound(hypotheses, goal, sig.n):
        return ProvedValid(bound)
    return ValidUpTo(bound)
