"""Run configuration with flag > environment > default precedence."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass
from typing import Optional

ENV_PREFIX = "CORONA_SYM_"

DEFAULT_VERTEX_CAP = 24
DEFAULT_GROUP_CAP = 10**6
DEFAULT_LABELING_CAP = 10**8
DEFAULT_SEED = 2024
DEFAULT_WORKERS = 1


@dataclass(frozen=True)
class RunConfig:
    vertex_cap: int = DEFAULT_VERTEX_CAP
    group_cap: int = DEFAULT_GROUP_CAP
    labeling_cap: int = DEFAULT_LABELING_CAP
    seed: int = DEFAULT_SEED
    worker_count: int = DEFAULT_WORKERS
    output_format: str = "text"

    def __post_init__(self):
        for name in ("vertex_cap", "group_cap", "labeling_cap", "worker_count"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    def as_dict(self) -> dict:
        return asdict(self)


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(ENV_PREFIX + name)
    return int(raw) if raw is not None else None


def load_config(
    vertex_cap: Optional[int] = None,
    group_cap: Optional[int] = None,
    labeling_cap: Optional[int] = None,
    seed: Optional[int] = None,
    worker_count: Optional[int] = None,
    output_format: Optional[str] = None,
) -> RunConfig:
    """Resolve configuration: explicit arguments win over CORONA_SYM_*
    environment variables, which win over defaults."""

    def pick(flag, env_name, default):
        if flag is not None:
            return flag
        env = _env_int(env_name)
        return env if env is not None else default

    return RunConfig(
        vertex_cap=pick(vertex_cap, "VERTEX_CAP", DEFAULT_VERTEX_CAP),
        group_cap=pick(group_cap, "GROUP_CAP", DEFAULT_GROUP_CAP),
        labeling_cap=pick(labeling_cap, "LABELING_CAP", DEFAULT_LABELING_CAP),
        seed=pick(seed, "SEED", DEFAULT_SEED),
        worker_count=pick(worker_count, "WORKERS", DEFAULT_WORKERS),
        output_format=output_format or "text",
    )
