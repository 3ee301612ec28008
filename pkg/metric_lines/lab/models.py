"""Report models for conjecture checks and sweeps."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, model_validator

Family = Literal["all", "dh", "chordal"]
LemmaName = Literal["triangle", "xaxb", "twin_lifting"]


class Verdict(BaseModel):
    """Outcome of the "n lines or a universal line" predicate on one instance."""

    instance: str
    n: int = Field(..., ge=2)
    distinct_lines: int = Field(..., ge=1)
    has_universal: bool
    satisfies: bool
    witness: Optional[dict[str, Any]] = None

    @model_validator(mode="after")
    def _predicate_consistent(self) -> Verdict:
        expected = self.distinct_lines >= self.n or self.has_universal
        if self.satisfies != expected:
            raise ValueError(
                f"satisfies={self.satisfies} contradicts distinct_lines={self.distinct_lines}, "
                f"n={self.n}, has_universal={self.has_universal}"
            )
        return self


class LemmaFailure(BaseModel):
    instance: str
    lemma: LemmaName
    witness: list[int]


class CorpusSpec(BaseModel):
    """Where sweep instances come from; recorded verbatim in every report."""

    kind: Literal["exhaustive", "random", "file", "two_metric"]
    n_max: int = 0
    n_min: int = 2
    count: int = 0
    seed: int = 0
    weights: tuple[float, float, float] = (1.0, 1.0, 1.0)
    canonical: bool = False
    path: Optional[str] = None

    @classmethod
    def exhaustive(cls, n_max: int, canonical: bool = False) -> CorpusSpec:
        return cls(kind="exhaustive", n_max=n_max, canonical=canonical)

    @classmethod
    def random(
        cls,
        count: int,
        seed: int,
        n_max: int = 30,
        n_min: int = 2,
        weights: tuple[float, float, float] = (1.0, 1.0, 1.0),
    ) -> CorpusSpec:
        return cls(kind="random", count=count, seed=seed, n_min=n_min, n_max=n_max, weights=weights)

    @classmethod
    def from_file(cls, path: str) -> CorpusSpec:
        return cls(kind="file", path=path)


class SizeRecord(BaseModel):
    """Per-n aggregate: the extremal line count among non-universal instances."""

    n: int
    instances: int = 0
    min_lines_non_universal: Optional[int] = None
    violations: int = 0


class SweepReport(BaseModel):
    corpus: CorpusSpec
    family: str
    checked: int = 0
    violations: list[Verdict] = Field(default_factory=list)
    records: list[SizeRecord] = Field(default_factory=list)
    lemma_failures: list[LemmaFailure] = Field(default_factory=list)
    duration_seconds: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.violations and not self.lemma_failures

    def record_for(self, n: int) -> Optional[SizeRecord]:
        return next((r for r in self.records if r.n == n), None)

    def to_json(self, timing: bool = False) -> str:
        exclude = None if timing else {"duration_seconds"}
        return json.dumps(self.model_dump(mode="json", exclude=exclude), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "instances", "min_lines_non_universal", "violations"])
        for r in self.records:
            writer.writerow(
                [
                    r.n,
                    r.instances,
                    "" if r.min_lines_non_universal is None else r.min_lines_non_universal,
                    r.violations,
                ]
            )
        return buf.getvalue()


class ScalingRow(BaseModel):
    """One side of the complete-multipartite scaling experiment (n = side**3)."""

    side: int
    n: int
    distinct_lines: int
    n_4_3: float
    ratio: float
    closed_form: int
    has_universal: bool

    @property
    def matches_closed_form(self) -> bool:
        return self.distinct_lines == self.closed_form


def scaling_csv(rows: list[ScalingRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["side", "n", "distinct_lines", "n_4_3", "ratio"])
    for row in rows:
        writer.writerow([row.side, row.n, row.distinct_lines, f"{row.n_4_3:.1f}", f"{row.ratio:.6f}"])
    return buf.getvalue()


def scaling_json(rows: list[ScalingRow]) -> str:
    return json.dumps([row.model_dump(mode="json") for row in rows], indent=2)
