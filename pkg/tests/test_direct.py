import pytest

from ulamgames.automaton import build_from_arcs, build_from_forbidden
from ulamgames.direct import (
    NotWinning,
    PositionSolver,
    StateSpaceExceeded,
    build_strategy_tree,
    check_weight_reductions,
    enumerate_splits,
    halving_steps,
    make_split,
    seeker_wins_position,
    start_position,
    support,
    unit,
    weight,
)

COUNTEREXAMPLE_ARCS = [(1, 0, 2), (1, 1, 3), (2, 0, 1), (3, 1, 1)]


def test_weight_and_support():
    assert weight((3, 0, 1)) == 4
    assert support((3, 0, 1)) == 2
    assert weight(()) == 0 and support((0, 0)) == 0
    assert weight((7, 0, 0)) == 7 and support((7, 0, 0)) == 1


def test_split_count_matches_product_formula():
    g = build_from_arcs(1, COUNTEREXAMPLE_ARCS)
    assert len(list(enumerate_splits(g, (1, 1, 0)))) == 4
    assert len(list(enumerate_splits(g, (2, 1, 3)))) == 3 * 2 * 4


def test_split_children_push_along_arcs():
    g = build_from_forbidden({"00"})
    split = make_split(g, (2, 0), (2, 0))
    # claiming both candidates: a yes is a truth for both, pushing them
    # down the 0-arc; a no is a double lie, keeping both at the start
    assert split.p1 == (0, 2)
    assert split.p2 == (2, 0)
    neutral = make_split(g, (2, 0), (1, 0))
    assert neutral.p1 == (1, 1) and neutral.p2 == (1, 1)


def test_each_child_never_gains_weight():
    g = build_from_forbidden({"00", "010"})
    for p in ((2, 0, 0), (1, 1, 1), (3, 2, 0)):
        for split in enumerate_splits(g, p):
            assert weight(split.p1) <= weight(p)
            assert weight(split.p2) <= weight(p)


def test_make_split_validates_bounds():
    g = build_from_forbidden({"00"})
    with pytest.raises(ValueError):
        make_split(g, (2, 0), (3, 0))


def test_trivial_positions_win():
    g = build_from_forbidden({"000"})
    assert seeker_wins_position(g, (1, 0, 0))
    assert seeker_wins_position(g, (0, 0, 0))


def test_weight_two_verdicts_match_single_word_classification():
    assert seeker_wins_position(build_from_forbidden({"01"}), (2, 0))
    assert not seeker_wins_position(build_from_forbidden({"00"}), (2, 0))
    g = build_from_forbidden({"000"})
    assert not seeker_wins_position(g, start_position(g, 2))


def test_solver_handles_split_cycles():
    # {00}: both split chains from (2, 0) revisit earlier positions, so
    # only the least fixed point stays sound
    g = build_from_forbidden({"00"})
    solver = PositionSolver(g)
    assert not solver.wins((2, 0))
    assert not solver.wins((1, 1))
    assert solver.wins((0, 2))


def test_strategy_tree_leaf():
    g = build_from_forbidden({"01"})
    tree = build_strategy_tree(g, (1, 0))
    assert tree.is_leaf and tree.depth() == 0


def check_tree(g, tree):
    if tree.is_leaf:
        assert weight(tree.position) <= 1
        return
    split = make_split(g, tree.position, tree.q0)
    assert split.p1 == tree.on_yes.position
    assert split.p2 == tree.on_no.position
    check_tree(g, tree.on_yes)
    check_tree(g, tree.on_no)


def test_strategy_tree_is_valid_and_minimal_depth():
    g = build_from_forbidden({"01"})
    solver = PositionSolver(g)
    tree = solver.strategy_tree((2, 0))
    check_tree(g, tree)
    assert tree.depth() == solver.depth((2, 0))


def test_strategy_tree_deterministic():
    g = build_from_forbidden({"00", "010"})
    assert build_strategy_tree(g, (4, 0, 0)) == build_strategy_tree(g, (4, 0, 0))


def test_strategy_tree_requires_win():
    g = build_from_forbidden({"000"})
    with pytest.raises(NotWinning):
        build_strategy_tree(g, (2, 0, 0))


def test_state_space_cap():
    g = build_from_forbidden({"00", "010"})
    with pytest.raises(StateSpaceExceeded):
        PositionSolver(g, max_positions=3).wins((6, 0, 0))


def test_dominance_shortcut_agrees_with_plain_solver():
    g = build_from_forbidden({"00", "010"})
    shared = PositionSolver(g)
    shared.wins((2, 0, 0))
    shared.wins((0, 2, 0))
    for p in ((3, 0, 0), (1, 1, 0), (2, 1, 1), (0, 0, 3)):
        assert shared.wins(p) == PositionSolver(g).wins(p)


def test_weight_reduction_report_clean_graph():
    report = check_weight_reductions(build_from_forbidden({"01"}), 4, 8)
    assert report.passed
    assert not report.losing_weight2
    assert not report.losing_unit2
    assert report.all_small_weights.premise is True
    assert report.all_small_weights.witnesses == ()
    assert report.unit_support_scaling.witnesses == ()


def test_weight_reduction_distinguishes_the_two_collapses():
    g = build_from_arcs(1, COUNTEREXAMPLE_ARCS)
    report = check_weight_reductions(g, 4, 8)
    assert report.passed
    assert not report.losing_unit2
    # mixing the start vertex with either successor loses at weight two
    assert set(report.losing_weight2) == {(1, 1, 0), (1, 0, 1)}
    assert report.unit_support_scaling.premise is True
    assert report.unit_support_scaling.holds


def test_weight_reduction_notes_losing_base_case():
    report = check_weight_reductions(build_from_forbidden({"000"}), 4, 8)
    assert report.passed
    assert not report.start2_wins
    assert report.all_small_weights.premise is False
    assert report.unit_support_scaling.premise is False
    assert report.power_threshold.premise is False


def test_depth_grows_by_a_constant_per_doubling():
    g = build_from_forbidden({"00", "010"})
    solver = PositionSolver(g)
    c = solver.depth(start_position(g, 2))
    for n in (2, 4, 8):
        d_n = solver.depth(start_position(g, n))
        d_2n = solver.depth(start_position(g, 2 * n))
        assert d_2n <= d_n + c


def test_halving_steps():
    assert halving_steps(1) == 0
    assert halving_steps(2) == 1
    assert halving_steps(3) == 2
    assert [halving_steps(2 ** j) for j in range(9)] == list(range(9))
    with pytest.raises(ValueError):
        halving_steps(0)


def test_unit_helper():
    assert unit(3, 1, 2) == (0, 2, 0)
