"""Pendant/twin construction sequences and the graph families built from them."""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Literal, Optional

from metric_lines.core.errors import FormatError, InputError, SequenceError
from metric_lines.core.graph import Graph

logger = logging.getLogger(__name__)

StepKind = Literal["pendant", "false_twin", "true_twin"]

STEP_KINDS: tuple[StepKind, ...] = ("pendant", "false_twin", "true_twin")
DEFAULT_WEIGHTS: tuple[float, float, float] = (1.0, 1.0, 1.0)


@dataclass(frozen=True, slots=True)
class ConstructionStep:
    kind: StepKind
    new_vertex: int
    anchor: int


@dataclass(frozen=True, slots=True)
class ConstructionSequence:
    """Steps replayed from the single vertex 0.

    ``origin[i]`` is the vertex of the recognized input graph that construction
    label ``i`` stands for; it is empty for sequences that were not produced by
    recognition.
    """

    steps: tuple[ConstructionStep, ...]
    origin: tuple[int, ...] = field(default=())

    @property
    def n(self) -> int:
        return 1 + len(self.steps)

    def validate(self) -> None:
        for i, step in enumerate(self.steps, start=1):
            if step.kind not in STEP_KINDS:
                raise SequenceError(f"step {i}: unknown kind {step.kind!r}")
            if step.new_vertex != i:
                raise SequenceError(
                    f"step {i}: new vertex {step.new_vertex} must be {i} "
                    f"(vertices are added in index order)"
                )
            if not 0 <= step.anchor < step.new_vertex:
                raise SequenceError(
                    f"step {i}: anchor {step.anchor} must be an existing vertex below {step.new_vertex}"
                )
        if self.origin and sorted(self.origin) != list(range(self.n)):
            raise SequenceError("origin must be a permutation of the construction labels")


def build_from_sequence(seq: ConstructionSequence) -> Graph:
    """Replay the steps; the result is connected and distance-hereditary."""
    seq.validate()
    rows: list[set[int]] = [set()]
    for i, step in enumerate(seq.steps, start=1):
        anchor_nbrs = rows[step.anchor]
        if step.kind == "pendant":
            nbrs = {step.anchor}
        elif step.kind == "false_twin":
            if not anchor_nbrs:
                raise SequenceError(
                    f"step {i}: false twin of isolated vertex {step.anchor} disconnects the graph"
                )
            nbrs = set(anchor_nbrs)
        else:
            nbrs = anchor_nbrs | {step.anchor}
        rows.append(nbrs)
        for u in nbrs:
            rows[u].add(step.new_vertex)
    return Graph(len(rows), tuple(frozenset(r) for r in rows))


def random_sequence(
    n: int,
    seed: int,
    step_weights: Sequence[float] = DEFAULT_WEIGHTS,
) -> ConstructionSequence:
    """Seeded sequence of n-1 steps: kinds drawn by weight, anchors uniform.

    A false twin of the lone starting vertex would be isolated, so a false-twin
    draw on the first step becomes a pendant.
    """
    if n < 1:
        raise InputError(f"n must be at least 1, got {n}")
    weights = tuple(float(w) for w in step_weights)
    if len(weights) != 3 or any(w < 0 for w in weights) or not any(weights):
        raise InputError(f"step weights must be three non-negative numbers, not all zero: {weights}")
    rng = random.Random(seed)
    steps: list[ConstructionStep] = []
    for new in range(1, n):
        kind: StepKind = rng.choices(STEP_KINDS, weights=weights)[0]
        anchor = rng.randrange(new)
        if kind == "false_twin" and new == 1:
            kind = "pendant"
        steps.append(ConstructionStep(kind, new, anchor))
    return ConstructionSequence(tuple(steps))


def random_dh(
    n: int,
    seed: int,
    step_weights: Sequence[float] = DEFAULT_WEIGHTS,
) -> Graph:
    return build_from_sequence(random_sequence(n, seed, step_weights))


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Vertices grouped into consecutive parts; edges join every pair in distinct parts."""
    if len(part_sizes) < 2:
        raise InputError(f"need at least 2 parts, got {len(part_sizes)}")
    if any(size < 1 for size in part_sizes):
        raise InputError(f"every part needs at least one vertex: {list(part_sizes)}")
    part_of: list[int] = []
    for part, size in enumerate(part_sizes):
        part_of.extend([part] * size)
    n = len(part_of)
    rows = tuple(
        frozenset(u for u in range(n) if part_of[u] != part_of[v]) for v in range(n)
    )
    return Graph(n, rows)


# ── dh-seq v1 text format ───────────────────────────────────────────────

_KIND_CODES: dict[StepKind, str] = {"pendant": "P", "false_twin": "F", "true_twin": "T"}
_CODE_KINDS: dict[str, StepKind] = {code: kind for kind, code in _KIND_CODES.items()}
SEQ_HEADER = "dh-seq v1"


def format_sequence(seq: ConstructionSequence) -> str:
    """``dh-seq v1`` text: header, optional ``# origin`` line, one ``<P|F|T> new anchor`` per step."""
    lines = [f"{SEQ_HEADER} n={seq.n}"]
    if seq.origin:
        lines.append("# origin " + " ".join(str(v) for v in seq.origin))
    lines.extend(f"{_KIND_CODES[s.kind]} {s.new_vertex} {s.anchor}" for s in seq.steps)
    return "\n".join(lines) + "\n"


def parse_sequence(text: str) -> ConstructionSequence:
    """Inverse of :func:`format_sequence`; raises :class:`FormatError` with the offending line."""
    header: Optional[int] = None
    origin: tuple[int, ...] = ()
    steps: list[ConstructionStep] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("# origin"):
            try:
                origin = tuple(int(tok) for tok in line.split()[2:])
            except ValueError as exc:
                raise FormatError(f"bad origin list: {exc}", lineno, 1) from exc
            continue
        if not line or line.startswith("#"):
            continue
        if header is None:
            if not line.startswith(SEQ_HEADER + " n="):
                raise FormatError(f"expected header '{SEQ_HEADER} n=<count>'", lineno, 1)
            try:
                header = int(line[len(SEQ_HEADER) + 3 :])
            except ValueError as exc:
                raise FormatError("vertex count in header is not an integer", lineno, 1) from exc
            continue
        tokens = line.split()
        if len(tokens) != 3 or tokens[0] not in _CODE_KINDS:
            raise FormatError("expected '<P|F|T> <new> <anchor>'", lineno, 1)
        try:
            new, anchor = int(tokens[1]), int(tokens[2])
        except ValueError as exc:
            col = raw.index(tokens[1]) + 1
            raise FormatError("step vertices must be integers", lineno, col) from exc
        steps.append(ConstructionStep(_CODE_KINDS[tokens[0]], new, anchor))
    if header is None:
        raise FormatError(f"missing '{SEQ_HEADER}' header", 1, 1)
    seq = ConstructionSequence(tuple(steps), origin)
    if seq.n != header:
        raise FormatError(f"header says n={header} but {len(steps)} steps give n={seq.n}", 1, 1)
    seq.validate()
    return seq
