"""Line-delimited JSON catalogs of braid words with expected invariants."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .braid import BraidWord, parse_braid_word


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogRecord:
    name: str
    word_text: str
    strands: int | None = None
    expect: dict = field(default_factory=dict)

    @property
    def word(self) -> BraidWord:
        return parse_braid_word(self.word_text, self.strands)


def _record(obj, where: str) -> CatalogRecord:
    if not isinstance(obj, dict) or "name" not in obj or "word" not in obj:
        raise CatalogError(f"{where}: a record needs 'name' and 'word'")
    expect = obj.get("expect", {})
    if not isinstance(expect, dict) or set(expect) - {"augmentations", "ruling_polynomial"}:
        raise CatalogError(f"{where}: unknown expectation keys")
    rec = CatalogRecord(str(obj["name"]), str(obj["word"]), obj.get("strands"), dict(expect))
    try:
        rec.word
    except ValueError as exc:
        raise CatalogError(f"{where}: {exc}") from None
    return rec


def parse_catalog(text: str, source: str = "<catalog>") -> list[CatalogRecord]:
    out = []
    for n, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CatalogError(f"{source}:{n}: {exc.msg}") from None
        out.append(_record(obj, f"{source}:{n}"))
    return out


def load_catalog(path: str | Path | None = None) -> list[CatalogRecord]:
    """Read a catalog file, or the bundled default when ``path`` is None."""
    if path is None:
        text = resources.files("posbraid").joinpath("data/catalog.jsonl").read_text()
        return parse_catalog(text, "catalog.jsonl")
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CatalogError(f"cannot read {path}: {exc.strerror}") from None
    return parse_catalog(text, str(path))


def default_catalog() -> list[CatalogRecord]:
    return load_catalog(None)
