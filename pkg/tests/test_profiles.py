"""Profile schema, selection, and persistence tests."""

import json

import pytest
from hypothesis import given, strategies as st

from scholar_atlas.errors import (
    DuplicateId,
    MalformedFile,
    NetworkUnavailable,
    SchemaViolation,
    UnsupportedSource,
)
from scholar_atlas.profiles import (
    Publication,
    ProfileSet,
    PublicationMode,
    PublicationSetMode,
    ResearcherProfile,
    fetch_profiles,
    load_profiles,
    profile_set_from_dict,
    profile_set_to_dict,
    save_profiles,
    select_publications,
)


def _record(rid="r001", **overrides):
    record = {
        "id": rid,
        "name": "Ada Example",
        "affiliation": "Example Institute",
        "position": "Professor",
        "total_citations": 1200,
        "scholar_url": "https://scholar.example.org/" + rid,
        "keywords": ["graph mining"],
        "publications": [
            {"title": "Graphs", "abstract": "On graphs.", "year": 2019,
             "num_citations": 40},
        ],
    }
    record.update(overrides)
    return record


def _payload(n=2):
    return {
        "source_label": "unit-test",
        "researchers": [_record(f"r{i:03d}") for i in range(n)],
    }


def _pub(title="t", year=2020, citations=10, abstract=""):
    return Publication(title=title, abstract=abstract, year=year,
                       num_citations=citations)


class TestParsing:
    def test_round_trip_preserves_everything(self):
        original = _payload(3)
        profiles = profile_set_from_dict(original)
        assert profile_set_to_dict(profiles) == original

    def test_minimum_two_researchers(self):
        with pytest.raises(SchemaViolation):
            profile_set_from_dict(_payload(1))

    def test_duplicate_ids_name_both_positions(self):
        payload = _payload(3)
        payload["researchers"][2]["id"] = "r000"
        with pytest.raises(DuplicateId) as excinfo:
            profile_set_from_dict(payload)
        message = str(excinfo.value)
        assert "r000" in message
        assert "0" in message and "2" in message

    def test_missing_field_names_json_path(self):
        payload = _payload()
        del payload["researchers"][1]["name"]
        with pytest.raises(SchemaViolation) as excinfo:
            profile_set_from_dict(payload)
        assert "researchers[1]" in str(excinfo.value)
        assert "name" in str(excinfo.value)

    def test_wrong_type_rejected(self):
        payload = _payload()
        payload["researchers"][0]["total_citations"] = "many"
        with pytest.raises(SchemaViolation) as excinfo:
            profile_set_from_dict(payload)
        assert "total_citations" in str(excinfo.value)

    def test_bool_is_not_an_int(self):
        payload = _payload()
        payload["researchers"][0]["total_citations"] = True
        with pytest.raises(SchemaViolation):
            profile_set_from_dict(payload)

    def test_negative_citations_rejected(self):
        payload = _payload()
        payload["researchers"][0]["publications"][0]["num_citations"] = -1
        with pytest.raises(SchemaViolation):
            profile_set_from_dict(payload)

    def test_year_bounds(self):
        payload = _payload()
        payload["researchers"][0]["publications"][0]["year"] = 1850
        with pytest.raises(SchemaViolation):
            profile_set_from_dict(payload)

    def test_publication_path_in_message(self):
        payload = _payload()
        payload["researchers"][0]["publications"][0]["year"] = "old"
        with pytest.raises(SchemaViolation) as excinfo:
            profile_set_from_dict(payload)
        assert "publications[0]" in str(excinfo.value)

    def test_keywords_must_be_strings(self):
        payload = _payload()
        payload["researchers"][0]["keywords"] = ["ok", 3]
        with pytest.raises(SchemaViolation):
            profile_set_from_dict(payload)

    def test_empty_id_rejected(self):
        payload = _payload()
        payload["researchers"][0]["id"] = ""
        with pytest.raises(SchemaViolation):
            profile_set_from_dict(payload)

    def test_researcher_with_no_publications_is_allowed(self):
        payload = _payload()
        payload["researchers"][0]["publications"] = []
        profiles = profile_set_from_dict(payload)
        assert profiles.researchers[0].publications == ()

    def test_ids_helper_preserves_order(self):
        profiles = profile_set_from_dict(_payload(4))
        assert profiles.ids() == ("r000", "r001", "r002", "r003")


class TestFiles:
    def test_save_load_round_trip(self, tmp_path):
        profiles = profile_set_from_dict(_payload(3))
        path = tmp_path / "profiles.json"
        save_profiles(profiles, path)
        assert load_profiles(path) == profiles

    def test_missing_file(self, tmp_path):
        with pytest.raises(MalformedFile):
            load_profiles(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(MalformedFile):
            load_profiles(path)

    def test_invalid_utf8(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_bytes(b'\xff\xfe{"a": 1}')
        with pytest.raises(MalformedFile):
            load_profiles(path)

    def test_top_level_must_be_object(self, tmp_path):
        path = tmp_path / "list.json"
        path.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises((MalformedFile, SchemaViolation)):
            load_profiles(path)


class TestSelection:
    def test_most_cited_orders_by_citations_then_year_then_title(self):
        pubs = (
            _pub("b", year=2010, citations=5),
            _pub("a", year=2020, citations=9),
            _pub("c", year=2021, citations=5),
            _pub("a", year=2010, citations=5),
        )
        profile = ResearcherProfile(
            id="r", name="n", affiliation="a", position="p",
            total_citations=0, scholar_url="u", keywords=(),
            publications=pubs)
        chosen = select_publications(
            profile, PublicationSetMode(PublicationMode.MOST_CITED, limit=10))
        assert [(p.title, p.year, p.num_citations) for p in chosen] == [
            ("a", 2020, 9),   # citations first
            ("c", 2021, 5),   # then newer year among ties
            ("a", 2010, 5),   # then title among year ties
            ("b", 2010, 5),
        ]

    def test_most_recent_orders_by_year_then_citations_then_title(self):
        pubs = (
            _pub("b", year=2020, citations=5),
            _pub("a", year=2021, citations=1),
            _pub("a", year=2020, citations=5),
            _pub("c", year=2020, citations=9),
        )
        profile = ResearcherProfile(
            id="r", name="n", affiliation="a", position="p",
            total_citations=0, scholar_url="u", keywords=(),
            publications=pubs)
        chosen = select_publications(
            profile, PublicationSetMode(PublicationMode.MOST_RECENT, limit=10))
        assert [(p.title, p.year, p.num_citations) for p in chosen] == [
            ("a", 2021, 1),
            ("c", 2020, 9),
            ("a", 2020, 5),
            ("b", 2020, 5),
        ]

    def test_limit_truncates(self):
        pubs = tuple(_pub(f"t{i}", citations=i) for i in range(10))
        profile = ResearcherProfile(
            id="r", name="n", affiliation="a", position="p",
            total_citations=0, scholar_url="u", keywords=(),
            publications=pubs)
        chosen = select_publications(
            profile, PublicationSetMode(PublicationMode.MOST_CITED, limit=3))
        assert len(chosen) == 3
        assert chosen[0].num_citations == 9

    def test_limit_must_be_positive(self):
        with pytest.raises(ValueError):
            PublicationSetMode(PublicationMode.MOST_CITED, limit=0)

    @given(st.permutations(list(range(8))))
    def test_selection_is_input_order_independent(self, order):
        base = [
            _pub(f"t{i % 3}", year=2000 + (i % 4), citations=i % 2,
                 abstract=f"a{i}")
            for i in range(8)
        ]
        shuffled = [base[i] for i in order]
        def run(pubs):
            profile = ResearcherProfile(
                id="r", name="n", affiliation="a", position="p",
                total_citations=0, scholar_url="u", keywords=(),
                publications=tuple(pubs))
            return select_publications(
                profile,
                PublicationSetMode(PublicationMode.MOST_CITED, limit=5))
        assert run(base) == run(shuffled)


class TestFetch:
    def test_file_source_returns_raw_records(self, tmp_path):
        path = tmp_path / "profiles.json"
        path.write_text(json.dumps(_payload(2)), encoding="utf-8")
        records = fetch_profiles(f"file:{path}")
        assert isinstance(records, list)
        assert records[0]["id"] == "r000"

    def test_unknown_scheme(self):
        with pytest.raises(UnsupportedSource):
            fetch_profiles("ftp://example.org/profiles")

    def test_scholar_source_fails_cleanly_offline(self, monkeypatch):
        import urllib.request

        def refuse(*args, **kwargs):
            raise OSError("no network in tests")

        monkeypatch.setattr(urllib.request, "urlopen", refuse)
        monkeypatch.delenv("ATLAS_CACHE_DIR", raising=False)
        with pytest.raises(NetworkUnavailable):
            fetch_profiles("scholar:somebody")
