"""Restriction graphs for lie-restricted guessing games.

A lie restriction constrains the record of answers given by the answering
player: the record is a binary word in which 0 marks a truthful answer and
1 marks a lie.  A restriction graph is a start-pointed directed graph with
0/1-labeled arcs, at most one arc per label and at least one arc per
vertex; a word is allowed exactly when it can be traced along arcs from
the start vertex.

Graphs are built either from a set of forbidden substrings (the record
must avoid every word of the set) or from an explicit arc list.  The
forbidden-substring builder constructs a multi-pattern matching automaton
with failure links, deletes every state that has produced a forbidden
word, and then iteratively deletes states whose every surviving arc leads
to a deleted state: a playable position must always admit one more answer,
so the surviving graph accepts the extensible core of the avoidance
language.  Vertices are renumbered breadth-first from the start, 0-arc
before 1-arc, so every derived artifact is deterministic.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class NotExtensible(ValueError):
    """Every unbounded answer record hits a forbidden word."""


class EmptyForbiddenSet(ValueError):
    """A forbidden set must contain at least one word."""


class DuplicateLabel(ValueError):
    """Two arcs leave the same vertex with the same label."""


class NoOutgoingArc(ValueError):
    """A reachable vertex has no outgoing arc, so records there are stuck."""


class UnknownVertex(ValueError):
    """A vertex id outside the graph was used."""


ArcTriple = tuple[int, int, int]


def check_word(word: str) -> str:
    if not isinstance(word, str) or word == "" or any(ch not in "01" for ch in word):
        raise ValueError(f"not a nonempty binary word: {word!r}")
    return word


def normalize_forbidden(words: Iterable[str]) -> tuple[str, ...]:
    """Validate, deduplicate, and drop words containing another word.

    A word with a forbidden substring inside it is never the first
    violation, so dropping it leaves the avoidance language unchanged.
    """
    unique = sorted({check_word(w) for w in words})
    if not unique:
        raise EmptyForbiddenSet("forbidden set is empty")
    return tuple(w for w in unique if not any(v != w and v in w for v in unique))


@dataclass(frozen=True)
class RestrictionGraph:
    """Canonical restriction graph: vertex 0 is the start.

    ``arcs[v]`` is the pair (target on 0, target on 1); ``None`` marks a
    missing arc.  Every vertex has at least one arc and is reachable from
    the start, and ids follow breadth-first order, 0-arc first.
    """

    arcs: tuple[tuple[int | None, int | None], ...]

    @property
    def start(self) -> int:
        return 0

    @property
    def num_vertices(self) -> int:
        return len(self.arcs)

    def step(self, v: int, bit: int) -> int | None:
        if not 0 <= v < len(self.arcs):
            raise UnknownVertex(f"vertex {v} not in graph of size {len(self.arcs)}")
        if bit not in (0, 1):
            raise ValueError(f"arc label must be 0 or 1, got {bit!r}")
        return self.arcs[v][bit]

    def satisfies(self, word: str) -> bool:
        """True when the word traces a path from the start vertex."""
        v = 0
        for ch in word:
            if ch not in "01":
                raise ValueError(f"not a binary word: {word!r}")
            nxt = self.arcs[v][int(ch)]
            if nxt is None:
                return False
            v = nxt
        return True

    def out_arcs(self, v: int) -> Iterator[tuple[int, int]]:
        for bit, target in enumerate(self.arcs[v]):
            if target is not None:
                yield bit, target


@dataclass(frozen=True)
class AugmentedGraph:
    """Restriction graph made total by an absorbing error sink.

    Every arc missing in the base graph is redirected to the error vertex,
    which loops to itself on both labels.  A record reaching the error
    vertex has violated the restriction.
    """

    base: RestrictionGraph
    arcs: tuple[tuple[int, int], ...]

    @property
    def error(self) -> int:
        return len(self.arcs) - 1

    @property
    def num_vertices(self) -> int:
        return len(self.arcs)

    def step(self, v: int, bit: int) -> int:
        if not 0 <= v < len(self.arcs):
            raise UnknownVertex(f"vertex {v} not in graph of size {len(self.arcs)}")
        return self.arcs[v][bit]


def _canonical(start, arc_map) -> RestrictionGraph:
    """Renumber breadth-first from ``start``, dropping unreachable vertices."""
    ids = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for target in arc_map[u]:
            if target is not None and target not in ids:
                ids[target] = len(ids)
                order.append(target)
                queue.append(target)
    arcs = tuple(
        tuple(None if t is None else ids[t] for t in arc_map[u]) for u in order
    )
    return RestrictionGraph(arcs=arcs)


def build_from_forbidden(words: Iterable[str]) -> RestrictionGraph:
    """Graph accepting the extensible core of "avoids every given word"."""
    patterns = normalize_forbidden(words)

    children: list[dict[str, int]] = [{}]
    matched = [False]
    for word in patterns:
        node = 0
        for ch in word:
            nxt = children[node].get(ch)
            if nxt is None:
                children.append({})
                matched.append(False)
                nxt = len(children) - 1
                children[node][ch] = nxt
            node = nxt
        matched[node] = True

    n = len(children)
    fail = [0] * n
    delta = [[0, 0] for _ in range(n)]
    queue: deque[int] = deque()
    for ch in "01":
        child = children[0].get(ch)
        if child is None:
            delta[0][int(ch)] = 0
        else:
            delta[0][int(ch)] = child
            fail[child] = 0
            queue.append(child)
    while queue:
        s = queue.popleft()
        matched[s] = matched[s] or matched[fail[s]]
        for ch in "01":
            bit = int(ch)
            child = children[s].get(ch)
            if child is None:
                delta[s][bit] = delta[fail[s]][bit]
            else:
                fail[child] = delta[fail[s]][bit]
                delta[s][bit] = child
                queue.append(child)

    # A state is dead once it matches, or once both arcs lead to dead states.
    dead = matched[:]
    changed = True
    while changed:
        changed = False
        for s in range(n):
            if not dead[s] and dead[delta[s][0]] and dead[delta[s][1]]:
                dead[s] = True
                changed = True
    if dead[0]:
        raise NotExtensible(
            "no unbounded record avoids {%s}" % ", ".join(patterns)
        )

    arc_map = {
        s: (
            None if dead[delta[s][0]] else delta[s][0],
            None if dead[delta[s][1]] else delta[s][1],
        )
        for s in range(n)
        if not dead[s]
    }
    return _canonical(0, arc_map)


def build_from_arcs(start: int, arcs: Iterable[ArcTriple]) -> RestrictionGraph:
    """Validate an explicit arc list and return its canonical graph."""
    arc_map: dict[int, list[int | None]] = {}
    seen: set[tuple[int, int]] = set()
    vertices = {start}
    for source, label, target in arcs:
        if label not in (0, 1):
            raise ValueError(f"arc label must be 0 or 1, got {label!r}")
        if (source, label) in seen:
            raise DuplicateLabel(f"two arcs labeled {label} leave vertex {source}")
        seen.add((source, label))
        vertices.add(source)
        vertices.add(target)
        arc_map.setdefault(source, [None, None])[label] = target

    reachable = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for target in arc_map.get(u, (None, None)):
            if target is not None and target not in reachable:
                reachable.add(target)
                queue.append(target)
    for v in sorted(reachable):
        out = arc_map.get(v)
        if out is None or (out[0] is None and out[1] is None):
            raise NoOutgoingArc(f"vertex {v} has no outgoing arc")
    return _canonical(start, {v: tuple(arc_map[v]) for v in reachable})


def trim_reachable(graph: RestrictionGraph) -> RestrictionGraph:
    """Re-canonicalize a graph; idempotent on already-canonical graphs."""
    return _canonical(graph.start, {v: graph.arcs[v] for v in range(graph.num_vertices)})


def augment_with_error(graph: RestrictionGraph) -> AugmentedGraph:
    """Add the absorbing error sink so every vertex has out-degree two."""
    e = graph.num_vertices
    arcs = tuple(
        (e if t0 is None else t0, e if t1 is None else t1) for t0, t1 in graph.arcs
    ) + ((e, e),)
    return AugmentedGraph(base=graph, arcs=arcs)


def export_dot(graph: RestrictionGraph | AugmentedGraph) -> str:
    """Deterministic DOT rendering; the start vertex gets a double border."""
    error = graph.error if isinstance(graph, AugmentedGraph) else None
    lines = ["digraph restriction {", "  rankdir=LR;"]
    for v in range(graph.num_vertices):
        shape = "doublecircle" if v == 0 else "circle"
        label = ', label="err"' if v == error else ""
        lines.append(f"  {v} [shape={shape}{label}];")
    for v in range(graph.num_vertices):
        for bit, target in enumerate(graph.arcs[v]):
            if target is not None:
                lines.append(f'  {v} -> {target} [label="{bit}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: RestrictionGraph) -> str:
    payload = {
        "start": graph.start,
        "vertices": list(range(graph.num_vertices)),
        "arcs": [
            {"from": v, "label": bit, "to": target}
            for v in range(graph.num_vertices)
            for bit, target in graph.out_arcs(v)
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def graph_from_json(text: str) -> RestrictionGraph:
    """Parse the structured graph format, rejecting malformed input."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValueError("graph file must hold an object")
    for key in ("start", "vertices", "arcs"):
        if key not in payload:
            raise ValueError(f"graph file is missing the {key!r} field")
    start = payload["start"]
    vertices = payload["vertices"]
    if not isinstance(start, int) or not isinstance(vertices, list):
        raise ValueError("start must be an integer and vertices a list")
    known = set(vertices)
    if start not in known:
        raise UnknownVertex(f"start vertex {start} is not listed")
    triples: list[ArcTriple] = []
    for arc in payload["arcs"]:
        if not isinstance(arc, dict) or not {"from", "label", "to"} <= arc.keys():
            raise ValueError(f"malformed arc entry: {arc!r}")
        source, label, target = arc["from"], arc["label"], arc["to"]
        if source not in known or target not in known:
            raise UnknownVertex(f"arc {arc!r} mentions an unlisted vertex")
        triples.append((source, label, target))
    return build_from_arcs(start, triples)


def load_graph(path: str) -> RestrictionGraph:
    with open(path, "r", encoding="utf-8") as handle:
        return graph_from_json(handle.read())
