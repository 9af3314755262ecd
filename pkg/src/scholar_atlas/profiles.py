"""Researcher profile data model, JSON loading and publication selection.

Profiles arrive as a JSON document with a ``researchers`` array. Every
record is validated on load; error messages carry a JSON-path-ish location
("researchers[3].publications[0].year") so bad exports are findable without
a debugger. A loaded ProfileSet is deeply immutable: frozen dataclasses and
tuples all the way down, safe to share across threads.
"""

from __future__ import annotations

import enum
import json
import os
import time
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path

from .errors import (
    DuplicateId,
    MalformedFile,
    NetworkUnavailable,
    SchemaViolation,
    UnsupportedSource,
)

ID_ALPHABET = "abcdefghijklmnopqrstuvwxyz0123456789-"
YEAR_MIN = 1900


def _max_year() -> int:
    # one year of slack for in-press publications
    return date.today().year + 1


@dataclass(frozen=True)
class Publication:
    title: str
    abstract: str
    year: int
    num_citations: int


@dataclass(frozen=True)
class ResearcherProfile:
    id: str
    name: str
    affiliation: str
    position: str
    total_citations: int
    scholar_url: str
    keywords: tuple[str, ...]
    publications: tuple[Publication, ...]


@dataclass(frozen=True)
class ProfileSet:
    """Ordered, immutable collection of researcher profiles.

    The researcher order is canonical: matrix columns, layout rows and
    bundle arrays all index researchers in this order.
    """

    researchers: tuple[ResearcherProfile, ...]
    source_label: str

    def __post_init__(self):
        if len(self.researchers) < 2:
            raise SchemaViolation(
                f"a profile set needs at least 2 researchers, got {len(self.researchers)}"
            )

    def ids(self) -> tuple[str, ...]:
        return tuple(r.id for r in self.researchers)


class PublicationMode(enum.Enum):
    MOST_CITED = "most_cited"
    MOST_RECENT = "most_recent"


@dataclass(frozen=True)
class PublicationSetMode:
    """Which slice of a researcher's publication list feeds the corpus."""

    mode: PublicationMode
    limit: int = 50

    def __post_init__(self):
        if self.limit < 1:
            raise ValueError(f"publication limit must be >= 1, got {self.limit}")


def _expect(condition: bool, where: str, message: str):
    if not condition:
        raise SchemaViolation(f"{where}: {message}")


def _string_field(record: dict, key: str, where: str) -> str:
    _expect(key in record, where, f"missing field '{key}'")
    value = record[key]
    _expect(isinstance(value, str), f"{where}.{key}", f"expected string, got {type(value).__name__}")
    return value


def _int_field(record: dict, key: str, where: str) -> int:
    _expect(key in record, where, f"missing field '{key}'")
    value = record[key]
    # bool is an int subclass; reject it explicitly
    _expect(
        isinstance(value, int) and not isinstance(value, bool),
        f"{where}.{key}",
        f"expected integer, got {type(value).__name__}",
    )
    return value


def _parse_publication(record, where: str) -> Publication:
    _expect(isinstance(record, dict), where, f"expected object, got {type(record).__name__}")
    title = _string_field(record, "title", where)
    abstract = _string_field(record, "abstract", where)
    year = _int_field(record, "year", where)
    max_year = _max_year()
    _expect(YEAR_MIN <= year <= max_year, f"{where}.year", f"{year} outside [{YEAR_MIN}, {max_year}]")
    num_citations = _int_field(record, "num_citations", where)
    _expect(num_citations >= 0, f"{where}.num_citations", f"{num_citations} is negative")
    return Publication(title=title, abstract=abstract, year=year, num_citations=num_citations)


def _parse_researcher(record, where: str) -> ResearcherProfile:
    _expect(isinstance(record, dict), where, f"expected object, got {type(record).__name__}")
    rid = _string_field(record, "id", where)
    _expect(len(rid) > 0, f"{where}.id", "empty id")
    bad = sorted(set(ch for ch in rid if ch not in ID_ALPHABET))
    _expect(not bad, f"{where}.id", f"'{rid}' contains disallowed characters {bad}")
    name = _string_field(record, "name", where)
    _expect(len(name) > 0, f"{where}.name", "empty name")
    affiliation = _string_field(record, "affiliation", where)
    position = _string_field(record, "position", where)
    total_citations = _int_field(record, "total_citations", where)
    _expect(total_citations >= 0, f"{where}.total_citations", f"{total_citations} is negative")
    scholar_url = _string_field(record, "scholar_url", where)

    _expect("keywords" in record, where, "missing field 'keywords'")
    raw_keywords = record["keywords"]
    _expect(isinstance(raw_keywords, list), f"{where}.keywords", "expected array")
    keywords = []
    for i, kw in enumerate(raw_keywords):
        _expect(isinstance(kw, str), f"{where}.keywords[{i}]", f"expected string, got {type(kw).__name__}")
        keywords.append(kw)

    _expect("publications" in record, where, "missing field 'publications'")
    raw_pubs = record["publications"]
    _expect(isinstance(raw_pubs, list), f"{where}.publications", "expected array")
    publications = tuple(
        _parse_publication(p, f"{where}.publications[{i}]") for i, p in enumerate(raw_pubs)
    )

    return ResearcherProfile(
        id=rid,
        name=name,
        affiliation=affiliation,
        position=position,
        total_citations=total_citations,
        scholar_url=scholar_url,
        keywords=tuple(keywords),
        publications=publications,
    )


def profile_set_from_dict(data: dict) -> ProfileSet:
    _expect(isinstance(data, dict), "$", f"expected top-level object, got {type(data).__name__}")
    _expect("researchers" in data, "$", "missing field 'researchers'")
    raw = data["researchers"]
    _expect(isinstance(raw, list), "$.researchers", "expected array")
    source_label = data.get("source_label", "")
    _expect(isinstance(source_label, str), "$.source_label", "expected string")

    researchers = []
    seen: dict[str, int] = {}
    for i, record in enumerate(raw):
        profile = _parse_researcher(record, f"researchers[{i}]")
        if profile.id in seen:
            raise DuplicateId(
                f"researchers[{i}].id: '{profile.id}' already used at researchers[{seen[profile.id]}]"
            )
        seen[profile.id] = i
        researchers.append(profile)

    return ProfileSet(researchers=tuple(researchers), source_label=source_label)


def profile_set_to_dict(profiles: ProfileSet) -> dict:
    return {
        "source_label": profiles.source_label,
        "researchers": [
            {
                "id": r.id,
                "name": r.name,
                "affiliation": r.affiliation,
                "position": r.position,
                "total_citations": r.total_citations,
                "scholar_url": r.scholar_url,
                "keywords": list(r.keywords),
                "publications": [
                    {
                        "title": p.title,
                        "abstract": p.abstract,
                        "year": p.year,
                        "num_citations": p.num_citations,
                    }
                    for p in r.publications
                ],
            }
            for r in profiles.researchers
        ],
    }


def load_profiles(path: str | Path) -> ProfileSet:
    """Load and validate a researcher profile JSON file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedFile(f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise MalformedFile(f"{path} is not valid UTF-8: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFile(f"{path} is not valid JSON: {exc}") from exc
    return profile_set_from_dict(data)


def save_profiles(profiles: ProfileSet, path: str | Path):
    payload = json.dumps(profile_set_to_dict(profiles), ensure_ascii=False, indent=2, sort_keys=True)
    Path(path).write_text(payload + "\n", encoding="utf-8")


def select_publications(profile: ResearcherProfile, mode: PublicationSetMode) -> list[Publication]:
    """The publications feeding this researcher's document, most relevant
    first, at most ``mode.limit`` of them.

    The sort key is total: ties on the primary and secondary keys fall
    through to (title, abstract), so any stored order of the input list
    yields the same selection.
    """
    if mode.mode is PublicationMode.MOST_CITED:
        key = lambda p: (-p.num_citations, -p.year, p.title, p.abstract)
    elif mode.mode is PublicationMode.MOST_RECENT:
        key = lambda p: (-p.year, -p.num_citations, p.title, p.abstract)
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown publication mode {mode.mode!r}")
    return sorted(profile.publications, key=key)[: mode.limit]


# -- profile sources ---------------------------------------------------------

_FETCH_DELAY_SECONDS = 1.0


def _cache_dir() -> Path:
    configured = os.environ.get("ATLAS_CACHE_DIR")
    if configured:
        return Path(configured)
    return Path.home() / ".cache" / "scholar-atlas"


def fetch_profiles(source: str) -> list[dict]:
    """Fetch raw researcher records from a named source.

    ``file:<path>`` reads a local profile JSON document and returns its
    records exactly as stored (byte-deterministic; no network). This is the
    only source exercised by automated tests.

    ``scholar:<url>[,<url>...]`` fetches public profile pages over HTTP,
    one request per second, caching raw responses under ATLAS_CACHE_DIR
    (default ~/.cache/scholar-atlas). Page layouts drift, so parsing is
    best effort: each record carries the fields that could be recovered
    plus the source url. Network failures raise NetworkUnavailable.

    Any other scheme raises UnsupportedSource.
    """
    scheme, _, rest = source.partition(":")
    if not rest:
        raise UnsupportedSource(f"source '{source}' has no '<scheme>:<argument>' form")

    if scheme == "file":
        try:
            data = json.loads(Path(rest).read_text(encoding="utf-8"))
        except OSError as exc:
            raise MalformedFile(f"cannot read {rest}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise MalformedFile(f"{rest} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict) or "researchers" not in data:
            raise SchemaViolation("$: missing field 'researchers'")
        records = data["researchers"]
        if not isinstance(records, list):
            raise SchemaViolation("$.researchers: expected array")
        return records

    if scheme == "scholar":
        return _fetch_scholar_pages([u.strip() for u in rest.split(",") if u.strip()])

    raise UnsupportedSource(f"unknown source scheme '{scheme}' (expected 'file' or 'scholar')")


def _fetch_scholar_pages(urls: list[str]) -> list[dict]:
    cache = _cache_dir()
    cache.mkdir(parents=True, exist_ok=True)
    records = []
    last_request = 0.0
    for url in urls:
        key = "".join(ch if ch in ID_ALPHABET else "-" for ch in url.lower())
        cached = cache / f"{key[:200]}.html"
        if cached.exists():
            page = cached.read_text(encoding="utf-8", errors="replace")
        else:
            wait = _FETCH_DELAY_SECONDS - (time.monotonic() - last_request)
            if wait > 0:
                time.sleep(wait)
            try:
                with urllib.request.urlopen(url, timeout=30) as resp:
                    page = resp.read().decode("utf-8", errors="replace")
            except (urllib.error.URLError, TimeoutError, OSError) as exc:
                raise NetworkUnavailable(f"cannot fetch {url}: {exc}") from exc
            last_request = time.monotonic()
            cached.write_text(page, encoding="utf-8")
        records.append(_scrape_profile(page, url))
    return records


def _scrape_profile(page: str, url: str) -> dict:
    """Best-effort extraction of profile fields from a public page."""
    import re

    def first(pattern: str) -> str:
        match = re.search(pattern, page, re.IGNORECASE | re.DOTALL)
        return re.sub(r"<[^>]+>", "", match.group(1)).strip() if match else ""

    name = first(r'<div id="gsc_prf_in"[^>]*>(.*?)</div>') or first(r"<title>(.*?)</title>")
    affiliation = first(r'<div class="gsc_prf_il"[^>]*>(.*?)</div>')
    keywords = re.findall(r'class="gsc_prf_inta[^"]*"[^>]*>(.*?)</a>', page, re.DOTALL)
    return {
        "scholar_url": url,
        "name": re.sub(r"\s+", " ", name),
        "affiliation": re.sub(r"\s+", " ", affiliation),
        "position": "",
        "keywords": [re.sub(r"<[^>]+>", "", kw).strip() for kw in keywords],
        "publications": [],
    }
