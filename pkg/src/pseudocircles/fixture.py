"""Bundled example maps.

Each fixture is a pair ``fixtures/<id>.map`` (planemap-v1) and
``fixtures/<id>.expected`` holding ``key: value [TAG] note`` lines, where the
tag records where the expected value comes from.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import ParseError, UnknownFixture
from .planemap import PlaneMap, parse_map

TAGS = ("PAPER", "DERIVED", "TRIVIAL")


@dataclass(frozen=True)
class Expectation:
    value: str
    tag: str
    note: str


@dataclass(frozen=True)
class Fixture:
    id: str
    source: str
    map: PlaneMap
    expected: dict[str, Expectation]

    def value(self, key: str) -> str:
        return self.expected[key].value

    def flag(self, key: str) -> bool:
        return self.expected[key].value == "true"

    def integer(self, key: str) -> int:
        return int(self.expected[key].value)


def _dir():
    return resources.files("pseudocircles") / "fixtures"


def fixture_ids() -> list[str]:
    return sorted(p.name[:-4] for p in _dir().iterdir() if p.name.endswith(".map"))


def parse_expected(text: str) -> tuple[str, dict[str, Expectation]]:
    source = ""
    out = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value' in {line[:40]!r}")
        key = key.strip()
        rest = rest.strip()
        if key == "source":
            source = rest
            continue
        value, _, tail = rest.partition(" [")
        tag, _, note = tail.partition("]")
        if tag not in TAGS:
            raise ParseError(f"expectation {key!r} lacks a provenance tag")
        out[key] = Expectation(value.strip(), tag, note.strip())
    return source, out


@lru_cache(maxsize=None)
def load_fixture(fid: str) -> Fixture:
    base = _dir()
    mp = base / f"{fid}.map"
    if not fid.replace("_", "").isalnum() or not mp.is_file():
        raise UnknownFixture(f"no fixture named {fid!r}; known: {', '.join(fixture_ids())}")
    m = parse_map(mp.read_text())
    ex = base / f"{fid}.expected"
    source, expected = parse_expected(ex.read_text()) if ex.is_file() else ("", {})
    return Fixture(fid, source, m, expected)
