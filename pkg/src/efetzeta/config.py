"""Evaluation configuration shared by quadrature, series, and extrapolation code."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and truncation policies.

    quad_rel_tol / quad_abs_tol: semi-infinite quadrature targets.
    series_rel_tol: accelerated / Euler-Maclaurin series target.
    tail_expansion_depth: number of kernel-expansion layers in the analytic
        series tail (geometric ratio <= 1/4, so 40 layers is far below
        double precision already).
    pole_guard: minimum allowed distance from poles of gamma, 1/sin(pi s),
        1/sin(pi s/2), 1/cos(pi s/2).
    max_terms: hard budget for accelerated series refinement.
    """

    quad_rel_tol: float = 1e-12
    quad_abs_tol: float = 1e-12
    series_rel_tol: float = 1e-12
    tail_expansion_depth: int = 40
    pole_guard: float = 1e-8
    max_terms: int = 4096

    def __post_init__(self) -> None:
        if min(self.quad_rel_tol, self.quad_abs_tol, self.series_rel_tol,
               self.pole_guard) <= 0:
            raise ValueError("tolerances and pole_guard must be positive")
        if self.tail_expansion_depth < 1:
            raise ValueError("tail_expansion_depth must be >= 1")
        if self.max_terms < 16:
            raise ValueError("max_terms must be >= 16")

    def replace(self, **kwargs) -> "EvalConfig":
        return dataclasses.replace(self, **kwargs)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "EvalConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**d)

    @classmethod
    def from_json_file(cls, path: str) -> "EvalConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


DEFAULT_CONFIG = EvalConfig()
