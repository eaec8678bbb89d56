"""Kripke models, the modal evaluator, satisfaction and frame predicates.

Worlds are dense 0-based indices.  Necessity evaluates to the minimum of
the operand over the successor set (label n when there are no
successors); possibility evaluates to the maximum (label 1 when there
are no successors).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .core import (
    Apply,
    Box,
    Diamond,
    Formula,
    LabelledFormula,
    Sequent,
    Signature,
    Var,
    apply_connective,
)


class FrameClass(enum.Enum):
    ANY = "any"
    SERIAL = "serial"
    REFLEXIVE = "reflexive"
    TRANSITIVE = "transitive"
    SYMMETRIC = "symmetric"
    EUCLIDEAN = "euclidean"
    PREORDER = "preorder"
    EQUIVALENCE = "equivalence"


@dataclass(frozen=True, init=False)
class KripkeModel:
    """Worlds 0..world_count-1, an edge set, and an explicit valuation.

    The valuation maps (world, variable) pairs to labels; variables with
    no explicit entry take label 1 everywhere, so the valuation is total.
    Models are immutable after construction.
    """

    world_count: int
    edges: frozenset[tuple[int, int]]
    vals: tuple[tuple[tuple[int, str], int], ...]

    def __init__(self, world_count: int,
                 edges: Iterable[tuple[int, int]] = (),
                 vals: Union[Mapping[tuple[int, str], int],
                             Iterable[tuple[tuple[int, str], int]]] = ()):
        if world_count < 1:
            raise ValueError("a model needs at least one world")
        edge_set = frozenset((int(u), int(v)) for u, v in edges)
        for u, v in edge_set:
            if not (0 <= u < world_count and 0 <= v < world_count):
                raise ValueError(f"edge ({u}, {v}) references an undeclared world")
        val_map = dict(vals.items() if isinstance(vals, Mapping) else vals)
        for (u, p), k in val_map.items():
            if not 0 <= u < world_count:
                raise ValueError(f"valuation of {p!r} at undeclared world {u}")
            if k < 1:
                raise ValueError(f"valuation label must be >= 1, got {k}")
        object.__setattr__(self, "world_count", world_count)
        object.__setattr__(self, "edges", edge_set)
        object.__setattr__(self, "vals", tuple(sorted(val_map.items())))
        succ: list[set[int]] = [set() for _ in range(world_count)]
        for u, v in edge_set:
            succ[u].add(v)
        object.__setattr__(self, "_succ", tuple(frozenset(s) for s in succ))
        object.__setattr__(self, "_val_map", val_map)

    @property
    def worlds(self) -> range:
        return range(self.world_count)

    def successors(self, world: int) -> frozenset[int]:
        """The set of worlds reachable from `world` in one step."""
        if not 0 <= world < self.world_count:
            raise ValueError(f"unknown world {world}")
        return self._succ[world]

    def value(self, world: int, variable: str) -> int:
        """Valuation lookup; unvalued variables default to label 1."""
        if not 0 <= world < self.world_count:
            raise ValueError(f"unknown world {world}")
        return self._val_map.get((world, variable), 1)

    def variables(self) -> tuple[str, ...]:
        return tuple(sorted({p for (_, p) in self._val_map}))


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

Cache = dict[tuple[int, Formula], int]


def _eval(sig: Signature, model: KripkeModel, world: int, formula: Formula,
          cache: Cache) -> int:
    key = (world, formula)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if isinstance(formula, Var):
        out = model.value(world, formula.name)
    elif isinstance(formula, Apply):
        args = tuple(_eval(sig, model, world, a, cache) for a in formula.args)
        out = apply_connective(sig, formula.conn, args)
    elif isinstance(formula, Box):
        succ = model.successors(world)
        out = min((_eval(sig, model, v, formula.sub, cache) for v in succ),
                  default=sig.n)
    elif isinstance(formula, Diamond):
        succ = model.successors(world)
        out = max((_eval(sig, model, v, formula.sub, cache) for v in succ),
                  default=1)
    else:
        raise TypeError(f"not a formula: {formula!r}")
    cache[key] = out
    return out


def evaluate(sig: Signature, model: KripkeModel, world: int, formula: Formula,
             cache: Optional[Cache] = None) -> int:
    """The label of `formula` at `world`.

    A cache keyed by (world, formula) may be shared across queries on the
    same model; a fresh one is used per call otherwise.
    """
    return _eval(sig, model, world, formula, {} if cache is None else cache)


def satisfies_labelled(sig: Signature, model: KripkeModel, world: int,
                       lf: LabelledFormula, cache: Optional[Cache] = None) -> bool:
    """True iff the formula takes exactly the stated label at the world."""
    return evaluate(sig, model, world, lf.formula, cache) == lf.label


def satisfies_sequent(sig: Signature, model: KripkeModel, world: int,
                      sequent: Sequent, cache: Optional[Cache] = None) -> bool:
    """True iff satisfying every antecedent member forces some succedent member."""
    if cache is None:
        cache = {}
    if not all(satisfies_labelled(sig, model, world, lf, cache)
               for lf in sequent.antecedent):
        return True
    return any(satisfies_labelled(sig, model, world, lf, cache)
               for lf in sequent.succedent)


def model_satisfies(sig: Signature, model: KripkeModel,
                    sequents: Union[Sequent, Iterable[Sequent]],
                    cache: Optional[Cache] = None) -> bool:
    """Conjunction of sequent satisfaction over every world of the model."""
    if isinstance(sequents, Sequent):
        sequents = (sequents,)
    if cache is None:
        cache = {}
    return all(satisfies_sequent(sig, model, world, s, cache)
               for s in sequents for world in model.worlds)


# ---------------------------------------------------------------------------
# Frame classes
# ---------------------------------------------------------------------------


def frame_check(model: KripkeModel, frame_class: FrameClass) -> bool:
    """Direct quantifier evaluation of the frame property over the worlds."""
    edges = model.edges
    worlds = model.worlds
    if frame_class is FrameClass.ANY:
        return True
    if frame_class is FrameClass.SERIAL:
        return all(model.successors(u) for u in worlds)
    if frame_class is FrameClass.REFLEXIVE:
        return all((u, u) in edges for u in worlds)
    if frame_class is FrameClass.TRANSITIVE:
        return all((u, w) in edges
                   for (u, v) in edges for w in model.successors(v))
    if frame_class is FrameClass.SYMMETRIC:
        return all((v, u) in edges for (u, v) in edges)
    if frame_class is FrameClass.EUCLIDEAN:
        return all((v, w) in edges
                   for u in worlds
                   for v in model.successors(u)
                   for w in model.successors(u))
    if frame_class is FrameClass.PREORDER:
        return (frame_check(model, FrameClass.REFLEXIVE)
                and frame_check(model, FrameClass.TRANSITIVE))
    if frame_class is FrameClass.EQUIVALENCE:
        return (frame_check(model, FrameClass.REFLEXIVE)
                and frame_check(model, FrameClass.EUCLIDEAN))
    raise ValueError(f"unknown frame class {frame_class!r}")
