"""Filtration of a model through a subformula-closed set of formulas.

Worlds agreeing on every formula of the set collapse into one class.
The accessibility relation between classes depends on the logic: the
weak logics project the original relation, the stronger ones compare
modal values so the filtered model stays inside the frame class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Mapping, Optional

from .core import (
    Box,
    Diamond,
    Formula,
    Signature,
    Var,
    formula_key,
    subformula_closure,
)
from .proofs import LogicId
from .semantics import FrameClass, KripkeModel, evaluate, frame_check

Representative = Literal["least", "greatest"]


@dataclass(frozen=True)
class Filtered:
    """A filtration: class partition, representatives, and filtered model.

    `classes` lists each equivalence class as a sorted tuple of original
    worlds, ordered by smallest member; class i of the partition is world
    i of the filtered model.  `values` maps (class index, formula) to the
    label the class takes on each formula of the closed set.
    """

    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    model: KripkeModel
    values: Mapping[tuple[int, Formula], int]

    def class_of(self, world: int) -> int:
        for idx, members in enumerate(self.classes):
            if world in members:
                return idx
        raise ValueError(f"world {world} not in any class")


def _validated_closure(phi: Iterable[Formula]) -> tuple[Formula, ...]:
    phi = frozenset(phi)
    if subformula_closure(phi) != phi:
        missing = sorted(subformula_closure(phi) - phi, key=formula_key)
        raise ValueError(f"formula set is not subformula-closed; missing {missing[0]}")
    return tuple(sorted(phi, key=formula_key))


def equiv_classes(sig: Signature, model: KripkeModel,
                  phi: Iterable[Formula]) -> tuple[tuple[int, ...], ...]:
    """Partition of the worlds by agreement on every formula of phi."""
    ordered = _validated_closure(phi)
    cache: dict = {}
    groups: dict[tuple[int, ...], list[int]] = {}
    for world in model.worlds:
        vector = tuple(evaluate(sig, model, world, f, cache) for f in ordered)
        groups.setdefault(vector, []).append(world)
    return tuple(sorted((tuple(ws) for ws in groups.values()),
                        key=lambda ws: ws[0]))


def _class_relation(sig: Signature, model: KripkeModel, logic: LogicId,
                    phi: tuple[Formula, ...],
                    classes: tuple[tuple[int, ...], ...],
                    reps: tuple[int, ...]) -> set[tuple[int, int]]:
    boxed = [f for f in phi if isinstance(f, Box)]
    diamonded = [f for f in phi if isinstance(f, Diamond)]
    cache: dict = {}

    def val(world: int, formula: Formula) -> int:
        return evaluate(sig, model, world, formula, cache)

    def related(u: int, v: int) -> bool:
        if logic in (LogicId.MV_K, LogicId.MV_D, LogicId.MV_T):
            raise AssertionError("projection logics handled separately")
        if logic is LogicId.MV_K4:
            return (all(val(u, f) <= val(v, f) and val(u, f) <= val(v, f.sub)
                        for f in boxed)
                    and all(val(u, f) >= val(v, f) and val(u, f) >= val(v, f.sub)
                            for f in diamonded))
        if logic is LogicId.MV_S4:
            return (all(val(u, f) <= val(v, f) for f in boxed)
                    and all(val(u, f) >= val(v, f) for f in diamonded))
        if logic is LogicId.MV_B:
            return (all(val(u, f) <= val(v, f.sub) and val(v, f) <= val(u, f.sub)
                        for f in boxed)
                    and all(val(u, f) >= val(v, f.sub) and val(v, f) >= val(u, f.sub)
                            for f in diamonded))
        if logic is LogicId.MV_S5:
            return (all(val(u, f) == val(v, f) for f in boxed)
                    and all(val(u, f) == val(v, f) for f in diamonded))
        raise ValueError(f"unknown logic {logic!r}")

    edges: set[tuple[int, int]] = set()
    if logic in (LogicId.MV_K, LogicId.MV_D, LogicId.MV_T):
        for i, members_i in enumerate(classes):
            for j, members_j in enumerate(classes):
                if any(v in model.successors(u)
                       for u in members_i for v in members_j):
                    edges.add((i, j))
    else:
        for i, u in enumerate(reps):
            for j, v in enumerate(reps):
                if related(u, v):
                    edges.add((i, j))
    return edges


def filter_model(sig: Signature, model: KripkeModel, phi: Iterable[Formula],
                 logic: LogicId, representative: Representative = "least",
                 check_frame: bool = True) -> Filtered:
    """Quotient the model through phi with the logic's class relation.

    The model must lie in the logic's frame class (disable with
    check_frame for diagnostic uses).  Class valuations copy the value of
    each variable of phi at any member; other variables default to 1.
    """
    ordered = _validated_closure(phi)
    if check_frame and not frame_check(model, logic.frame_class):
        raise ValueError(f"model is not in the {logic.frame_class.value} frame class")
    classes = equiv_classes(sig, model, ordered)
    reps = tuple(members[0] if representative == "least" else members[-1]
                 for members in classes)
    edges = _class_relation(sig, model, logic, ordered, classes, reps)
    cache: dict = {}
    vals = {}
    for idx, rep in enumerate(reps):
        for f in ordered:
            if isinstance(f, Var):
                vals[(idx, f.name)] = evaluate(sig, model, rep, f, cache)
    filtered = KripkeModel(len(classes), edges, vals)
    values = {(idx, f): evaluate(sig, model, rep, f, cache)
              for idx, rep in enumerate(reps) for f in ordered}
    return Filtered(classes, reps, filtered, values)


@dataclass(frozen=True)
class FiltrationReport:
    ok: bool
    frame_ok: bool
    frame_class: FrameClass
    value_mismatches: tuple[tuple[int, Formula, int, int], ...]

    def __str__(self):
        if self.ok:
            return "filtration verified"
        parts = []
        if not self.frame_ok:
            parts.append(f"filtered model left the {self.frame_class.value} class")
        for world, formula, original, filtered in self.value_mismatches:
            parts.append(f"world {world}: value {original} became {filtered}")
        return "; ".join(parts)


def verify_filtration(sig: Signature, model: KripkeModel, phi: Iterable[Formula],
                      logic: LogicId,
                      filtered: Optional[Filtered] = None) -> FiltrationReport:
    """Check value preservation on phi and membership in the frame class.

    Failures are reported as data, with the offending worlds and values.
    """
    ordered = _validated_closure(phi)
    if filtered is None:
        filtered = filter_model(sig, model, ordered, logic)
    cache_orig: dict = {}
    cache_filt: dict = {}
    mismatches = []
    for world in model.worlds:
        cls = filtered.class_of(world)
        for f in ordered:
            original = evaluate(sig, model, world, f, cache_orig)
            after = evaluate(sig, filtered.model, cls, f, cache_filt)
            if original != after:
                mismatches.append((world, f, original, after))
    frame_ok = frame_check(filtered.model, logic.frame_class)
    return FiltrationReport(frame_ok and not mismatches, frame_ok,
                            logic.frame_class, tuple(mismatches))
