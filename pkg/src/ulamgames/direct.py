"""Brute-force solver for guessing-game positions on a restriction graph.

A position counts, per graph vertex, how many candidate numbers are still
compatible with an answer record ending at that vertex.  A question splits
the count at every vertex into a part claimed inside the queried set (q0)
and the rest (q1).  On a yes answer the q0 parts move along 0-arcs (the
answer was true for them) while the q1 parts move along 1-arcs (it was a
lie); a no answer swaps the roles.  Counts at vertices lacking the needed
arc disappear: those record extensions are impossible, so the candidates
carrying them are ruled out.

The asking player wins from a position when some question leads to a win
after either answer; positions of weight at most one are already won.  The
solver computes this as a least fixed point over all positions reachable
through splits, so cyclic split chains correctly count as losses unless a
well-founded winning tree exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .automaton import RestrictionGraph

Position = tuple[int, ...]


class StateSpaceExceeded(RuntimeError):
    """The solver visited more positions than its configured cap."""


class NotWinning(ValueError):
    """A winning strategy tree was requested for a losing position."""


def weight(position) -> int:
    return sum(position)


def support(position) -> int:
    return sum(1 for c in position if c)


def unit(num_vertices: int, vertex: int, count: int = 1) -> Position:
    p = [0] * num_vertices
    p[vertex] = count
    return tuple(p)


def start_position(graph: RestrictionGraph, n: int) -> Position:
    return unit(graph.num_vertices, graph.start, n)


@dataclass(frozen=True)
class Split:
    """One question: q0 + q1 is the parent; p1/p2 follow yes/no answers."""

    q0: Position
    q1: Position
    p1: Position
    p2: Position


def _push(graph: RestrictionGraph, bit: int, counts) -> list[int]:
    out = [0] * graph.num_vertices
    for v, c in enumerate(counts):
        if c:
            target = graph.arcs[v][bit]
            if target is not None:
                out[target] += c
    return out


def split_children(graph: RestrictionGraph, q0, q1) -> tuple[Position, Position]:
    """Positions after a yes answer and after a no answer."""
    yes = _push(graph, 0, q0)
    for v, c in enumerate(_push(graph, 1, q1)):
        yes[v] += c
    no = _push(graph, 0, q1)
    for v, c in enumerate(_push(graph, 1, q0)):
        no[v] += c
    return tuple(yes), tuple(no)


def make_split(graph: RestrictionGraph, position, q0) -> Split:
    position = tuple(position)
    q0 = tuple(q0)
    if len(q0) != len(position) or any(
        not 0 <= a <= b for a, b in zip(q0, position)
    ):
        raise ValueError(f"{q0} is not a sub-position of {position}")
    q1 = tuple(b - a for a, b in zip(q0, position))
    p1, p2 = split_children(graph, q0, q1)
    return Split(q0=q0, q1=q1, p1=p1, p2=p2)


def enumerate_splits(graph: RestrictionGraph, position) -> Iterator[Split]:
    """All splits of a position, in ascending lexicographic q0 order."""
    position = tuple(position)
    for q0 in product(*(range(c + 1) for c in position)):
        yield make_split(graph, position, q0)


class PositionSolver:
    """Memoized win/depth solver for positions of one restriction graph."""

    def __init__(self, graph: RestrictionGraph, max_positions: int = 10_000_000):
        self.graph = graph
        self.max_positions = max_positions
        self._children: dict[Position, tuple[tuple[Position, Position], ...]] = {}
        self._verdict: dict[Position, bool] = {}
        self._depth: dict[Position, int] = {}
        self._won_roots: list[Position] = []
        self._lost_roots: list[Position] = []

    # -- winning --

    def wins(self, position) -> bool:
        p = self._check(position)
        if weight(p) <= 1:
            return True
        if p in self._verdict:
            return self._verdict[p]
        # The winning set is downward closed: extra candidates never help
        # the asking player, so verdicts of earlier queries transfer.
        for root in self._won_roots:
            if all(a <= b for a, b in zip(p, root)):
                self._verdict[p] = True
                return True
        for root in self._lost_roots:
            if all(a >= b for a, b in zip(p, root)):
                self._verdict[p] = False
                return False
        members = self._closure(p, expand_known=False)
        self._solve_set(members)
        verdict = self._verdict[p]
        (self._won_roots if verdict else self._lost_roots).append(p)
        return verdict

    def _check(self, position) -> Position:
        p = tuple(position)
        if len(p) != self.graph.num_vertices or any(c < 0 for c in p):
            raise ValueError(f"not a position of this graph: {position!r}")
        return p

    def _expand(self, position: Position) -> tuple[tuple[Position, Position], ...]:
        pairs = self._children.get(position)
        if pairs is not None:
            return pairs
        if len(self._children) >= self.max_positions:
            raise StateSpaceExceeded(
                f"more than {self.max_positions} positions explored"
            )
        graph = self.graph
        seen = set()
        out = []
        for q0 in product(*(range(c + 1) for c in position)):
            q1 = tuple(b - a for a, b in zip(q0, position))
            pair = split_children(graph, q0, q1)
            if pair not in seen:
                seen.add(pair)
                out.append(pair)
        pairs = tuple(out)
        self._children[position] = pairs
        return pairs

    def _closure(self, root: Position, expand_known: bool) -> set[Position]:
        members = {root}
        todo = [root]
        while todo:
            q = todo.pop()
            for a, b in self._expand(q):
                for child in (a, b):
                    if weight(child) <= 1 or child in members:
                        continue
                    if not expand_known and child in self._verdict:
                        continue
                    members.add(child)
                    todo.append(child)
        return members

    def _is_won(self, position: Position) -> bool:
        return weight(position) <= 1 or self._verdict.get(position, False)

    def _solve_set(self, members: set[Position]) -> None:
        levels: dict[int, list[Position]] = {}
        for q in members:
            if q not in self._verdict:
                levels.setdefault(weight(q), []).append(q)
        for w in sorted(levels):
            level = sorted(levels[w])
            # Children never gain weight, so only same-weight cycles remain;
            # iterate this level to its fixed point.
            changed = True
            while changed:
                changed = False
                for q in level:
                    if self._verdict.get(q):
                        continue
                    for a, b in self._children[q]:
                        if self._is_won(a) and self._is_won(b):
                            self._verdict[q] = True
                            changed = True
                            break
            for q in level:
                self._verdict.setdefault(q, False)

    # -- depth (questions needed against the most stubborn answers) --

    def depth(self, position) -> int:
        p = self._check(position)
        if not self.wins(p):
            raise NotWinning(f"position {p} is not a win")
        if weight(p) <= 1:
            return 0
        if p in self._depth:
            return self._depth[p]
        members = self._closure(p, expand_known=True)
        self._solve_set(members)
        self._compute_depths(members)
        return self._depth[p]

    def _depth_of(self, position: Position) -> int | None:
        if weight(position) <= 1:
            return 0
        return self._depth.get(position)

    def _compute_depths(self, members: set[Position]) -> None:
        pending = sorted(
            q for q in members if self._is_won(q) and q not in self._depth
        )
        # Relax depth(q) = 1 + min over splits of max(child depths) until
        # stable; depths already known from earlier queries stay fixed.
        changed = True
        while changed:
            changed = False
            for q in pending:
                best = None
                for a, b in self._children[q]:
                    da = self._depth_of(a)
                    db = self._depth_of(b)
                    if da is None or db is None:
                        continue
                    bound = 1 + max(da, db)
                    if best is None or bound < best:
                        best = bound
                if best is not None and (
                    q not in self._depth or best < self._depth[q]
                ):
                    self._depth[q] = best
                    changed = True
        missing = [q for q in pending if q not in self._depth]
        if missing:
            raise AssertionError(f"{len(missing)} winning positions lack a depth")

    # -- strategy trees --

    def strategy_tree(self, position) -> "StrategyTree":
        p = self._check(position)
        if not self.wins(p):
            raise NotWinning(f"position {p} is not a win")
        if weight(p) > 1:
            self.depth(p)
        return self._build_node(p)

    def _build_node(self, p: Position) -> "StrategyTree":
        if weight(p) <= 1:
            return StrategyTree(position=p, q0=None, on_yes=None, on_no=None)
        target = self._depth[p] - 1
        for split in enumerate_splits(self.graph, p):
            da = self._depth_of(split.p1)
            db = self._depth_of(split.p2)
            if da is not None and db is not None and max(da, db) <= target:
                return StrategyTree(
                    position=p,
                    q0=split.q0,
                    on_yes=self._build_node(split.p1),
                    on_no=self._build_node(split.p2),
                )
        raise AssertionError(f"no depth-reducing split at {p}")


@dataclass(frozen=True)
class StrategyTree:
    """Question plan: ask q0 of the position; leaves have weight <= 1."""

    position: Position
    q0: Position | None
    on_yes: "StrategyTree | None"
    on_no: "StrategyTree | None"

    @property
    def is_leaf(self) -> bool:
        return self.q0 is None

    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.on_yes.depth(), self.on_no.depth())

    def to_json(self) -> dict:
        if self.is_leaf:
            return {"position": list(self.position), "leaf": True}
        return {
            "position": list(self.position),
            "q0": list(self.q0),
            "on_yes": self.on_yes.to_json(),
            "on_no": self.on_no.to_json(),
        }


def seeker_wins_position(
    graph: RestrictionGraph, position, max_positions: int = 10_000_000
) -> bool:
    return PositionSolver(graph, max_positions).wins(position)


def build_strategy_tree(
    graph: RestrictionGraph, position, max_positions: int = 10_000_000
) -> StrategyTree:
    return PositionSolver(graph, max_positions).strategy_tree(position)


def halving_steps(n: int) -> int:
    """Iterations of n -> ceil(n/2) until 1 remains."""
    if n < 1:
        raise ValueError("n must be positive")
    steps = 0
    while n > 1:
        n = (n + 1) // 2
        steps += 1
    return steps


@dataclass(frozen=True)
class Implication:
    name: str
    premise: bool | None  # None when the conclusion already settled it
    witnesses: tuple
    holds: bool


@dataclass(frozen=True)
class WeightReductionReport:
    """Desk-scale check of the weight-collapse facts for one graph.

    Three implications are tested by exhaustive solving: winning every
    weight-two position extends to every small weight; winning every
    single-vertex weight-two position extends to every (n, 0, ...) start;
    and winning the start count 2^(vertex count) extends to every smaller
    start count.  A witness is a position that breaks the implication.
    """

    vertex_count: int
    max_weight: int
    max_n: int
    losing_weight2: tuple[Position, ...]
    losing_unit2: tuple[int, ...]
    start2_wins: bool
    all_small_weights: Implication
    unit_support_scaling: Implication
    power_threshold: Implication

    @property
    def passed(self) -> bool:
        return (
            self.all_small_weights.holds
            and self.unit_support_scaling.holds
            and self.power_threshold.holds
        )


def _positions_of_weight(num_vertices: int, total: int) -> Iterator[Position]:
    if num_vertices == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _positions_of_weight(num_vertices - 1, total - head):
            yield (head,) + rest


def check_weight_reductions(
    graph: RestrictionGraph,
    max_weight: int,
    max_n: int,
    max_positions: int = 10_000_000,
) -> WeightReductionReport:
    solver = PositionSolver(graph, max_positions)
    k = graph.num_vertices

    losing_weight2 = tuple(
        p for p in _positions_of_weight(k, 2) if not solver.wins(p)
    )
    losing_unit2 = tuple(
        v for v in range(k) if not solver.wins(unit(k, v, 2))
    )
    start_wins = {n: solver.wins(start_position(graph, n)) for n in range(1, max_n + 1)}
    losing_starts = tuple(n for n in sorted(start_wins) if not start_wins[n])

    if not losing_weight2:
        witnesses = tuple(
            p
            for w in range(3, max_weight + 1)
            for p in _positions_of_weight(k, w)
            if not solver.wins(p)
        )
        impl_all = Implication("all-small-weights", True, witnesses, not witnesses)
    else:
        impl_all = Implication("all-small-weights", False, (), True)

    if not losing_unit2:
        impl_unit = Implication(
            "unit-support-scaling", True, losing_starts, not losing_starts
        )
    else:
        impl_unit = Implication("unit-support-scaling", False, (), True)

    n_power = 2 ** k
    if not losing_starts:
        impl_power = Implication("power-threshold", None, (), True)
    else:
        premise = solver.wins(start_position(graph, n_power))
        impl_power = Implication(
            "power-threshold", premise, losing_starts if premise else (), not premise
        )

    return WeightReductionReport(
        vertex_count=k,
        max_weight=max_weight,
        max_n=max_n,
        losing_weight2=losing_weight2,
        losing_unit2=losing_unit2,
        start2_wins=start_wins.get(2, solver.wins(start_position(graph, 2))),
        all_small_weights=impl_all,
        unit_support_scaling=impl_unit,
        power_threshold=impl_power,
    )
