"""Lie-restricted guessing games over forbidden answer patterns.

The asking player hunts a number while the answering player may lie,
subject to a restriction on the pattern of truths (0) and lies (1): the
pattern must avoid a set of forbidden substrings, or more generally trace
a path in a restriction graph.  This package builds and validates such
graphs, decides who wins through a two-record surrogate game and through
a brute-force position solver, classifies forbidden sets against the
known closed forms, and plays out concrete matches.
"""

from .automaton import (
    AugmentedGraph,
    DuplicateLabel,
    EmptyForbiddenSet,
    NoOutgoingArc,
    NotExtensible,
    RestrictionGraph,
    UnknownVertex,
    augment_with_error,
    build_from_arcs,
    build_from_forbidden,
    export_dot,
    graph_from_json,
    graph_to_json,
    load_graph,
    trim_reachable,
)
from .classify import (
    OBSCURER,
    SEEKER,
    enumerate_and_compare,
    expands,
    flip,
    flip_criterion,
    invert,
    minimality_check,
    risk,
    rsharp_member,
    solver_verdict,
    theory_verdict,
)
from .direct import (
    NotWinning,
    PositionSolver,
    StateSpaceExceeded,
    StrategyTree,
    build_strategy_tree,
    check_weight_reductions,
    enumerate_splits,
    halving_steps,
    seeker_wins_position,
    support,
    weight,
)
from .engine import (
    KnowledgeState,
    Question,
    RoundCapExceeded,
    SplitMismatch,
    Transcript,
    apply_answer,
    new_session,
    next_question,
    play_match,
)
from .twostring import (
    GraphGame,
    TwoStringStrategy,
    WinnerMap,
    build_arena,
    extract_two_string_strategy,
    seeker_wins_all_n,
    seeker_wins_pair,
    solve_arena,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
