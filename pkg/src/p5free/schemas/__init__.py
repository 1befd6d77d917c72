"""JSON Schemas for every JSON document the command line writes."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

NAMES = ("verdict", "decomposition", "sweep_report", "catalog_entry", "battery", "find_line", "recognize_line")


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    if name not in NAMES:
        raise KeyError(f"no schema named {name!r}")
    return json.loads(resources.files(__package__).joinpath(f"{name}.schema.json").read_text(encoding="utf-8"))
