"""Concrete match play: real candidate numbers, questions, and answers.

A session tracks, per graph vertex, the set of candidate numbers whose
answer record (truths and lies so far) ends at that vertex.  The asking
player turns a split into an actual question by taking the required count
of smallest candidates from each vertex; only counts matter to the game,
so this choice costs nothing and keeps transcripts reproducible.

The asking player follows minimal-depth question plans from the direct
solver while few candidates remain, and above that composes plans by the
halving scheme: scale the two-candidate plan for the current vertex by
half the remaining count, cap it against the true counts, and recurse on
the single-vertex leaf it produces.  This yields question counts within a
constant factor of the halving distance to one.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache

from .automaton import RestrictionGraph
from .direct import (
    PositionSolver,
    Split,
    StrategyTree,
    halving_steps,
    make_split,
    support,
    unit,
    weight,
)
from .twostring import seeker_wins_all_n

DIRECT_PLAY_LIMIT = 4


class SplitMismatch(ValueError):
    """The split does not decompose the session's current position."""


class RoundCapExceeded(RuntimeError):
    """A supposedly winning strategy failed to finish within the cap."""


@dataclass(frozen=True)
class KnowledgeState:
    graph: RestrictionGraph
    candidates: tuple[frozenset[int], ...]
    question_count: int

    def position(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.candidates)


@dataclass(frozen=True)
class Question:
    subset: frozenset[int]
    q0: tuple[int, ...]


def new_session(n: int, graph: RestrictionGraph) -> KnowledgeState:
    if n < 1:
        raise ValueError("the candidate range must hold at least one number")
    sets = [frozenset()] * graph.num_vertices
    sets[graph.start] = frozenset(range(1, n + 1))
    return KnowledgeState(graph=graph, candidates=tuple(sets), question_count=0)


def next_question(state: KnowledgeState, split: Split) -> Question:
    position = state.position()
    if tuple(a + b for a, b in zip(split.q0, split.q1)) != position:
        raise SplitMismatch(f"split of {split.q0} + {split.q1} != {position}")
    chosen: set[int] = set()
    for members, count in zip(state.candidates, split.q0):
        if count:
            chosen.update(sorted(members)[:count])
    return Question(subset=frozenset(chosen), q0=split.q0)


def apply_answer(state: KnowledgeState, question: Question, answer: str) -> KnowledgeState:
    if answer not in ("yes", "no"):
        raise ValueError(f"answer must be 'yes' or 'no', got {answer!r}")
    graph = state.graph
    new_sets = [set() for _ in range(graph.num_vertices)]
    for v, members in enumerate(state.candidates):
        if not members:
            continue
        inside = members & question.subset
        outside = members - question.subset
        # A yes makes the inside answers truths; a no makes them lies.
        truths, lies = (inside, outside) if answer == "yes" else (outside, inside)
        t0, t1 = graph.arcs[v]
        if t0 is not None and truths:
            new_sets[t0] |= truths
        if t1 is not None and lies:
            new_sets[t1] |= lies
    return KnowledgeState(
        graph=graph,
        candidates=tuple(frozenset(s) for s in new_sets),
        question_count=state.question_count + 1,
    )


# -- answering policies --


class ScriptedObscurer:
    def __init__(self, answers):
        self.answers = list(answers)
        self._at = 0

    def answer(self, state, question, split) -> str:
        if self._at >= len(self.answers):
            raise ValueError("scripted answers exhausted")
        reply = self.answers[self._at]
        self._at += 1
        return reply


class RandomObscurer:
    """Uniform among answers that keep at least one candidate alive."""

    def __init__(self, seed: int = 0):
        self.rng = random.Random(seed)

    def answer(self, state, question, split) -> str:
        legal = [a for a, child in (("yes", split.p1), ("no", split.p2)) if weight(child)]
        if len(legal) == 1:
            return legal[0]
        return "yes" if self.rng.random() < 0.5 else "no"


class AdversarialObscurer:
    """Prefers the answer the asking player needs longest to beat."""

    def __init__(self, graph: RestrictionGraph):
        self.solver = _resources(graph).solver

    def _stubbornness(self, child) -> tuple[int, int]:
        if weight(child) == 0:
            return (-1, 0)  # impossible in a real game; never pick it
        if weight(child) <= DIRECT_PLAY_LIMIT:
            if not self.solver.wins(child):
                return (2, 0)  # unbeatable beats everything
            return (0, self.solver.depth(child))
        return (1, weight(child))  # unexplored bulk outlasts a known countdown

    def answer(self, state, question, split) -> str:
        yes_value = self._stubbornness(split.p1)
        no_value = self._stubbornness(split.p2)
        return "yes" if yes_value >= no_value else "no"


def _make_policy(graph, policy, seed, answers):
    if not isinstance(policy, str):
        return policy
    if policy == "adversarial":
        return AdversarialObscurer(graph)
    if policy == "random":
        return RandomObscurer(seed)
    if policy == "scripted":
        if answers is None:
            raise ValueError("a scripted answerer needs an answer list")
        return ScriptedObscurer(answers)
    raise ValueError(f"unknown policy {policy!r}")


# -- the asking player --


class _SeekerResources:
    def __init__(self, graph: RestrictionGraph):
        self.graph = graph
        self.solver = PositionSolver(graph)
        self._pair_trees: dict[int, StrategyTree] = {}

    def pair_tree(self, vertex: int) -> StrategyTree:
        tree = self._pair_trees.get(vertex)
        if tree is None:
            tree = self.solver.strategy_tree(unit(self.graph.num_vertices, vertex, 2))
            self._pair_trees[vertex] = tree
        return tree


@lru_cache(maxsize=None)
def _resources(graph: RestrictionGraph) -> _SeekerResources:
    return _SeekerResources(graph)


class _MatchSeeker:
    def __init__(self, graph: RestrictionGraph):
        self.res = _resources(graph)
        self.node: StrategyTree | None = None
        self.scale = 1
        self.planned = True  # goes False once no winning plan was available

    def choose_q0(self, position) -> tuple[int, ...]:
        if self.node is None or self.node.is_leaf:
            self._replan(position)
        if self.node is None:
            # No winning plan exists; split every count roughly in half so
            # play still makes progress until the round cap trips.
            return tuple(c // 2 for c in position)
        return tuple(
            min(c, self.scale * q) for c, q in zip(position, self.node.q0)
        )

    def _replan(self, position) -> None:
        solver = self.res.solver
        total = weight(position)
        if total <= DIRECT_PLAY_LIMIT:
            if solver.wins(position):
                self.node = solver.strategy_tree(position)
                self.scale = 1
                return
        elif support(position) == 1:
            vertex = next(v for v, c in enumerate(position) if c)
            if solver.wins(unit(len(position), vertex, 2)):
                self.node = self.res.pair_tree(vertex)
                self.scale = (total + 1) // 2
                return
        self.node = None
        self.planned = False

    def advance(self, answer: str) -> None:
        if self.node is not None:
            self.node = self.node.on_yes if answer == "yes" else self.node.on_no


# -- transcripts and matches --


@dataclass(frozen=True)
class Transcript:
    n: int
    forbidden: str
    rounds: tuple[tuple[tuple[int, ...], str], ...]
    outcome: int | str
    lie_pattern: str
    question_count: int
    round_cap_exceeded: bool

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "forbidden": self.forbidden,
            "rounds": [
                {"question": list(subset), "answer": answer}
                for subset, answer in self.rounds
            ],
            "outcome": self.outcome,
            "lie_pattern": self.lie_pattern,
            "question_count": self.question_count,
            "round_cap_exceeded": self.round_cap_exceeded,
        }
        return json.dumps(payload, indent=2) + "\n"


def lie_pattern_of(number: int, rounds) -> str:
    """Reconstruct a candidate's record: truthful exactly when membership
    in the queried set matches the answer given."""
    bits = []
    for subset, answer in rounds:
        truthful = (number in subset) == (answer == "yes")
        bits.append("0" if truthful else "1")
    return "".join(bits)


def play_match(
    graph: RestrictionGraph,
    n: int,
    policy="adversarial",
    seed: int = 0,
    answers=None,
    label: str = "",
) -> Transcript:
    answerer = _make_policy(graph, policy, seed, answers)
    strict = seeker_wins_all_n(graph)
    state = new_session(n, graph)
    seeker = _MatchSeeker(graph)
    cap = 64 * halving_steps(n) if n > 1 else 0
    rounds: list[tuple[tuple[int, ...], str]] = []
    cap_hit = False

    while weight(state.position()) > 1:
        if len(rounds) >= cap:
            if strict and seeker.planned:
                raise RoundCapExceeded(
                    f"winning strategy did not finish in {cap} rounds"
                )
            cap_hit = True
            break
        split = make_split(graph, state.position(), seeker.choose_q0(state.position()))
        question = next_question(state, split)
        answer = answerer.answer(state, question, split)
        state = apply_answer(state, question, answer)
        seeker.advance(answer)
        rounds.append((tuple(sorted(question.subset)), answer))

    survivors = frozenset().union(*state.candidates) if state.candidates else frozenset()
    if not cap_hit and len(survivors) == 1:
        (number,) = survivors
        outcome: int | str = number
        pattern = lie_pattern_of(number, rounds)
    else:
        outcome = "failure"
        pattern = ""
    return Transcript(
        n=n,
        forbidden=label,
        rounds=tuple(rounds),
        outcome=outcome,
        lie_pattern=pattern,
        question_count=state.question_count,
        round_cap_exceeded=cap_hit,
    )
