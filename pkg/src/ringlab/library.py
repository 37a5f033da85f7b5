"""The built-in catalog of spec files shipped with the package."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .dsl import Environment, SpecDocument, load
from .rrng import DorrohRing


def catalog_names() -> list[str]:
    root = resources.files("ringlab") / "catalog"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".ring"))


def catalog_text(name: str) -> str:
    path = resources.files("ringlab") / "catalog" / f"{name}.ring"
    if not path.is_file():
        raise FileNotFoundError(f"no catalog entry {name!r}; have {', '.join(catalog_names())}")
    return path.read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load_catalog(name: str) -> tuple[SpecDocument, Environment]:
    return load(catalog_text(name))


def catalog_extensions() -> list[tuple[str, DorrohRing]]:
    """Every extension declared in the catalog, as (entry:binding, E)."""
    out = []
    for name in catalog_names():
        _, env = load_catalog(name)
        out += [(f"{name}:{b}", env[b]) for b in env.of_kind("ext")]
    return out
