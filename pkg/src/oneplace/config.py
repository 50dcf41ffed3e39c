"""Run settings shared by the CLI, the corpus runner and the scripts."""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MAX_DEGREE = 64


@dataclass(frozen=True)
class RunConfig:
    truncation: int | None = None  # None: the per-curve default, doubled on demand
    max_degree: int = DEFAULT_MAX_DEGREE
    format: str = "json"
    jobs: int = 1

    def __post_init__(self):
        if self.truncation is not None and self.truncation < 1:
            raise ValueError("truncation must be positive")
        if self.max_degree < 1:
            raise ValueError("max_degree must be positive")
        if self.format not in ("json", "text"):
            raise ValueError(f"unknown output format {self.format!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")

    @classmethod
    def from_namespace(cls, ns) -> RunConfig:
        return cls(ns.truncation, ns.max_degree, ns.format, getattr(ns, "jobs", 1))
