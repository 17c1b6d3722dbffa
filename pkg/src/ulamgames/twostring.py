"""Two-record surrogate game deciding weight-two guessing positions.

Two answer records evolve on the error-augmented restriction graph.  Each
round the hiding player extends one record by a letter and the asking
player replies by extending the other.  The asking player wins as soon as
either record reaches the error sink, no matter whose letter pushed it
there; the hiding player wins by keeping both records valid forever.

The arena is a finite turn-based reachability game, solved by a backward
attractor: error states are winning seeds, an asking-player state is
winning when some move stays winning, a hiding-player state when all moves
do.  Ranks count the forced distance to the error set and drive strategy
extraction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automaton import AugmentedGraph, RestrictionGraph, UnknownVertex, augment_with_error

OBSCURER_MOVE = 0
SEEKER_EXTENDS_1 = 1
SEEKER_EXTENDS_2 = 2
PHASE_NAMES = ("obscurer-move", "seeker-extends-1", "seeker-extends-2")


class Arena:
    """All states (v1, v2, phase) of the two-record game on one graph."""

    def __init__(self, graph: AugmentedGraph):
        self.graph = graph
        m = graph.num_vertices
        self.m = m
        self.size = 3 * m * m
        error = graph.error
        arcs = graph.arcs
        moves: list[tuple[tuple, ...]] = [()] * self.size
        terminal = [False] * self.size
        for v1 in range(m):
            for v2 in range(m):
                base = (v1 * m + v2) * 3
                if v1 == error or v2 == error:
                    for phase in range(3):
                        terminal[base + phase] = True
                t1 = arcs[v1]
                t2 = arcs[v2]
                moves[base + OBSCURER_MOVE] = (
                    ((1, 0), (t1[0] * m + v2) * 3 + SEEKER_EXTENDS_2),
                    ((1, 1), (t1[1] * m + v2) * 3 + SEEKER_EXTENDS_2),
                    ((2, 0), (v1 * m + t2[0]) * 3 + SEEKER_EXTENDS_1),
                    ((2, 1), (v1 * m + t2[1]) * 3 + SEEKER_EXTENDS_1),
                )
                moves[base + SEEKER_EXTENDS_1] = (
                    (0, (t1[0] * m + v2) * 3 + OBSCURER_MOVE),
                    (1, (t1[1] * m + v2) * 3 + OBSCURER_MOVE),
                )
                moves[base + SEEKER_EXTENDS_2] = (
                    (0, (v1 * m + t2[0]) * 3 + OBSCURER_MOVE),
                    (1, (v1 * m + t2[1]) * 3 + OBSCURER_MOVE),
                )
        self.moves = moves
        self.terminal = terminal

    def state_id(self, v1: int, v2: int, phase: int) -> int:
        return (v1 * self.m + v2) * 3 + phase

    def state_of(self, state_id: int) -> tuple[int, int, int]:
        pair, phase = divmod(state_id, 3)
        v1, v2 = divmod(pair, self.m)
        return v1, v2, phase


def build_arena(graph: AugmentedGraph) -> Arena:
    return Arena(graph)


@dataclass(frozen=True)
class WinnerMap:
    """Solved arena: per state, does the asking player force an error."""

    arena: Arena
    seeker_wins: tuple[bool, ...]
    rank: tuple[int, ...]

    def wins(self, v1: int, v2: int, phase: int = OBSCURER_MOVE) -> bool:
        return self.seeker_wins[self.arena.state_id(v1, v2, phase)]


def solve_arena(arena: Arena) -> WinnerMap:
    size = arena.size
    win = [False] * size
    rank = [-1] * size

    preds: list[list[int]] = [[] for _ in range(size)]
    pending = [0] * size
    for state in range(size):
        if arena.terminal[state]:
            continue
        succs = [succ for _, succ in arena.moves[state]]
        if state % 3 == OBSCURER_MOVE:
            pending[state] = len(succs)
        for succ in succs:
            preds[succ].append(state)

    queue: deque[int] = deque()
    for state in range(size):
        if arena.terminal[state]:
            win[state] = True
            rank[state] = 0
            queue.append(state)

    while queue:
        target = queue.popleft()
        for state in preds[target]:
            if win[state]:
                continue
            if state % 3 == OBSCURER_MOVE:
                pending[state] -= 1
                if pending[state]:
                    continue
            win[state] = True
            rank[state] = rank[target] + 1
            queue.append(state)

    return WinnerMap(arena=arena, seeker_wins=tuple(win), rank=tuple(rank))


@dataclass(frozen=True)
class TwoStringStrategy:
    """Positional strategies read off the solved arena.

    ``seeker`` maps winning extend-states to the letter whose successor is
    strictly closer to the error set; ``obscurer`` maps her surviving
    choice-states to a (record index, letter) pair staying outside the
    asking player's winning region.
    """

    seeker: dict[tuple[int, int, int], int]
    obscurer: dict[tuple[int, int], tuple[int, int]]


def extract_two_string_strategy(arena: Arena, winners: WinnerMap) -> TwoStringStrategy:
    seeker: dict[tuple[int, int, int], int] = {}
    obscurer: dict[tuple[int, int], tuple[int, int]] = {}
    for state in range(arena.size):
        if arena.terminal[state]:
            continue
        v1, v2, phase = arena.state_of(state)
        if phase == OBSCURER_MOVE:
            if not winners.seeker_wins[state]:
                for choice, succ in arena.moves[state]:
                    if not winners.seeker_wins[succ]:
                        obscurer[(v1, v2)] = choice
                        break
        elif winners.seeker_wins[state]:
            best = None
            for bit, succ in arena.moves[state]:
                r = winners.rank[succ]
                if winners.seeker_wins[succ] and r < winners.rank[state]:
                    if best is None or r < best[0]:
                        best = (r, bit)
            seeker[(v1, v2, phase)] = best[1]
    return TwoStringStrategy(seeker=seeker, obscurer=obscurer)


class GraphGame:
    """One graph's arena solved once, with pair lookups."""

    def __init__(self, graph: RestrictionGraph):
        self.graph = graph
        self.augmented = augment_with_error(graph)
        self.arena = build_arena(self.augmented)
        self.winners = solve_arena(self.arena)

    def seeker_wins_pair(self, u: int, v: int) -> bool:
        k = self.graph.num_vertices
        for vertex in (u, v):
            if not 0 <= vertex < k:
                raise UnknownVertex(f"vertex {vertex} not in graph of size {k}")
        return self.winners.wins(u, v, OBSCURER_MOVE)

    def seeker_wins_everywhere(self) -> bool:
        return all(
            self.winners.wins(v, v, OBSCURER_MOVE)
            for v in range(self.graph.num_vertices)
        )


def seeker_wins_pair(graph: RestrictionGraph, u: int, v: int) -> bool:
    """Does the asking player win the two-record game started at (u, v)?"""
    return GraphGame(graph).seeker_wins_pair(u, v)


def seeker_wins_all_n(graph: RestrictionGraph) -> bool:
    """True when every equal-record start is winning; by the weight-two
    reduction this decides the guessing game for every candidate count."""
    return GraphGame(graph).seeker_wins_everywhere()
