"""Work-limit configuration shared by the enumeration and projector paths."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


class CapExceeded(RuntimeError):
    """A requested computation exceeds the configured work limits."""


@dataclass(frozen=True)
class Caps:
    group_order: int = 50_000
    orbit_work: int = 100_000_000
    projector_dim: int = 1024
    specialize_terms: int = 5_000_000

    def with_overrides(self, **kwargs) -> "Caps":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


_ENV_NAMES = {
    "group_order": "CYCINDEX_GROUP_CAP",
    "orbit_work": "CYCINDEX_WORK_CAP",
    "projector_dim": "CYCINDEX_DIM_CAP",
    "specialize_terms": "CYCINDEX_TERM_CAP",
}


def caps_from_env(base: Caps | None = None) -> Caps:
    caps = base or Caps()
    overrides = {}
    for field_name, env_name in _ENV_NAMES.items():
        raw = os.environ.get(env_name)
        if raw is not None:
            overrides[field_name] = int(raw)
    return caps.with_overrides(**overrides)


DEFAULT_CAPS = Caps()
