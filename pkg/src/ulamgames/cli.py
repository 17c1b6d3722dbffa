"""Command-line surface: solve, classify, verify, play, export.

Exit codes: 0 on success, 1 when a verification suite finds a mismatch,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .automaton import (
    NotExtensible,
    augment_with_error,
    build_from_forbidden,
    export_dot,
    load_graph,
)
from .classify import OBSCURER, SEEKER, enumerate_and_compare, write_pair_table
from .direct import PositionSolver, start_position
from .engine import play_match
from .suites import SUITES
from .twostring import PHASE_NAMES, GraphGame, extract_two_string_strategy


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulamgames",
        description="Solve, classify, and play lie-restricted guessing games "
        "over forbidden answer patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument(
            "--forbidden",
            help="comma-separated forbidden binary words, e.g. 00,010",
        )
        group.add_argument("--graph", help="path to a restriction graph file")

    solve = sub.add_parser("solve", help="decide who wins for every candidate count")
    add_input(solve)
    solve.add_argument("--pairs", action="store_true", help="verdict per start pair")
    solve.add_argument("--winners", action="store_true", help="dump the solved arena")
    solve.add_argument(
        "--strategy", action="store_true", help="print positional strategies"
    )
    solve.add_argument(
        "--tree",
        type=int,
        metavar="N",
        help="print a question plan for n candidates as JSON",
    )

    classify = sub.add_parser("classify", help="tabulate verdicts over forbidden sets")
    classify.add_argument("--max-len", type=int, default=4)
    classify.add_argument("--set-size", type=int, choices=(1, 2), default=2)
    classify.add_argument("--out", help="CSV output path (default stdout)")
    classify.add_argument("--plot", help="also render the verdict grid to this file")

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    verify.add_argument("--max", type=int, help="bound for the suite's main parameter")
    verify.add_argument("--max-len", type=int, help="bound on word lengths")
    verify.add_argument("--plot", help="render the log-depth figure to this file")
    verify.add_argument("--seed", type=int, default=0)

    play = sub.add_parser("play", help="play one match and emit its transcript")
    add_input(play)
    play.add_argument("--n", type=int, default=8, help="candidate range size")
    play.add_argument(
        "--policy",
        choices=("adversarial", "random", "scripted"),
        default="adversarial",
    )
    play.add_argument("--answers", help="comma-separated yes/no list for scripted play")
    play.add_argument("--seed", type=int, default=0)
    play.add_argument("--out", help="transcript path (default stdout)")

    export = sub.add_parser("export", help="write the graph in DOT format")
    add_input(export)
    export.add_argument("--augmented", action="store_true", help="include the error sink")
    export.add_argument("--out", help="output path (default stdout)")
    return parser


def _load_input(args) -> tuple:
    if args.forbidden is not None:
        words = [w for w in args.forbidden.split(",") if w]
        return build_from_forbidden(words), args.forbidden
    return load_graph(args.graph), args.graph


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_solve(args) -> int:
    graph, _ = _load_input(args)
    game = GraphGame(graph)
    print(SEEKER if game.seeker_wins_everywhere() else OBSCURER)
    if args.pairs:
        for u in range(graph.num_vertices):
            for v in range(u, graph.num_vertices):
                verdict = SEEKER if game.seeker_wins_pair(u, v) else OBSCURER
                print(f"pair {u} {v}: {verdict}")
    if args.winners:
        for state in range(game.arena.size):
            v1, v2, phase = game.arena.state_of(state)
            verdict = SEEKER if game.winners.seeker_wins[state] else OBSCURER
            print(f"{v1} {v2} {PHASE_NAMES[phase]}: {verdict}")
    if args.strategy:
        strategy = extract_two_string_strategy(game.arena, game.winners)
        for (v1, v2, phase), bit in sorted(strategy.seeker.items()):
            print(f"seeker at {v1} {v2} {PHASE_NAMES[phase]}: write {bit}")
        for (v1, v2), (index, bit) in sorted(strategy.obscurer.items()):
            print(f"obscurer at {v1} {v2}: extend record {index} with {bit}")
    if args.tree is not None:
        import json

        solver = PositionSolver(graph)
        tree = solver.strategy_tree(start_position(graph, args.tree))
        print(json.dumps(tree.to_json(), indent=2))
    return 0


def _cmd_classify(args) -> int:
    rows = enumerate_and_compare(args.max_len, args.set_size)
    import io

    buffer = io.StringIO()
    write_pair_table(rows, buffer)
    _emit(buffer.getvalue(), args.out)
    if args.plot:
        from .plots import save_classification_figure

        save_classification_figure(rows, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return 0


def _suite_kwargs(name: str, args) -> dict:
    kwargs = {}
    if args.max is not None:
        key = {
            "gcd": "max_n",
            "log-depth": "max_power",
            "transcripts": "matches_per_pair",
            "theorem-one": "max_len",
            "len4": "max_s2",
            "dual-minimal": "max_k",
        }.get(name)
        if key:
            kwargs[key] = args.max
    if args.max_len is not None and name in (
        "theorem-two",
        "flip-soundness",
        "twostring-oracle",
        "weight-reductions",
        "theorem-one",
    ):
        kwargs["max_len"] = args.max_len
    return kwargs


def _cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    all_passed = True
    for name in names:
        result = SUITES[name](**_suite_kwargs(name, args))
        for line in result.lines:
            print(line)
        all_passed = all_passed and result.passed
        if name == "log-depth" and args.plot:
            from .plots import save_log_play_figure

            graph = build_from_forbidden({"00", "010"})
            counts = {
                2 ** j: play_match(graph, 2 ** j, policy="adversarial").question_count
                for j in range(9)
            }
            save_log_play_figure(counts, counts[2], args.plot)
            print(f"figure written to {args.plot}", file=sys.stderr)
    return 0 if all_passed else 1


def _cmd_play(args) -> int:
    graph, label = _load_input(args)
    answers = args.answers.split(",") if args.answers else None
    transcript = play_match(
        graph,
        args.n,
        policy=args.policy,
        seed=args.seed,
        answers=answers,
        label=label,
    )
    _emit(transcript.to_json(), args.out)
    return 0


def _cmd_export(args) -> int:
    graph, _ = _load_input(args)
    target = augment_with_error(graph) if args.augmented else graph
    _emit(export_dot(target), args.out)
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "play": _cmd_play,
    "export": _cmd_export,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (NotExtensible, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
