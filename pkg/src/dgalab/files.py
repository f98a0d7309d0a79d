"""Canonical JSON file handling.

Every artifact (DGA, certificate) is written with sorted keys, two-space
indentation, and a trailing newline; polynomial strings inside are
canonically printed.  Writing the same object twice therefore produces
byte-identical files, which the determinism checks rely on.
"""

from __future__ import annotations

import json
from pathlib import Path

from .dga import SemifreeDGA
from .errors import MalformedCertificate


def canonical_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def save_json(path, data):
    Path(path).write_text(canonical_json(data), encoding="utf-8")


def load_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise MalformedCertificate(f"{path}: not valid JSON ({exc})") from exc


def load_dga(path) -> SemifreeDGA:
    data = load_json(path)
    if not isinstance(data, dict) or data.get("kind") != "dga":
        raise MalformedCertificate(f"{path}: not a DGA file")
    try:
        return SemifreeDGA.from_data(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCertificate(f"{path}: bad DGA structure ({exc})") from exc


def save_dga(path, dga: SemifreeDGA):
    save_json(path, dga.to_data())
