"""Bundled matroid files."""

from __future__ import annotations

from importlib import resources

from ..io import MatroidFile, loads_matroid
from ..matroid import BinaryMatroid, GraphicMatroid, UniformMatroid


def names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))


def path(name: str):
    return resources.files(__name__) / f"{name}.json"


def load(name: str) -> MatroidFile:
    return loads_matroid(path(name).read_text(encoding="utf-8"), f"{name}.json")


def load_all() -> dict[str, MatroidFile]:
    return {name: load(name) for name in names()}


def binary_family() -> dict[str, MatroidFile]:
    """Corpus entries with a GF(2) representation (binary or graphic)."""
    return {k: v for k, v in load_all().items() if isinstance(v.matroid, (BinaryMatroid, GraphicMatroid))}


def graphs() -> dict[str, MatroidFile]:
    return {k: v for k, v in load_all().items() if isinstance(v.matroid, GraphicMatroid)}


def uniform_family(max_n: int = 5) -> list[UniformMatroid]:
    return [UniformMatroid(r, n) for n in range(1, max_n + 1) for r in range(n + 1)]
