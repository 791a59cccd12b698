"""Locate bundled data files by short name, honoring GENERA_DATA_DIR."""

from __future__ import annotations

import os
from importlib import resources


def resolve_data(name: str) -> str:
    """Resolve a bundled data name or a literal path to a readable file path.

    Anything containing a path separator or a .json suffix is treated as a
    literal path; bare names look in GENERA_DATA_DIR first, then in the
    packaged data directory.
    """
    if os.path.sep in name or name.endswith(".json"):
        if not os.path.exists(name):
            raise FileNotFoundError(f"no such data file: {name}")
        return name
    fname = name + ".json"
    override = os.environ.get("GENERA_DATA_DIR")
    if override:
        cand = os.path.join(override, fname)
        if os.path.exists(cand):
            return cand
    pkg_file = resources.files("genera").joinpath("data", fname)
    if pkg_file.is_file():
        return str(pkg_file)
    raise FileNotFoundError(f"unknown bundled data name: {name!r}")
