import json
import os

import pytest

from canonstrip.ehrhart import (
    LatticePolytope,
    catalog_path,
    conjecture_label,
    conjecture_verdict,
    load_catalog,
    load_polytope,
    parse_catalog,
    parse_polytope,
)
from canonstrip.exceptions import MalformedInput

TRIANGLE = LatticePolytope(2, [(1, 0), (0, 1), (-1, -1)], name="P2")
SQUARE = LatticePolytope(2, [(1, 1), (1, -1), (-1, 1), (-1, -1)], name="square")
OCTAHEDRON = LatticePolytope(
    3, [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
)


class TestParsePolytope:
    def test_parse(self):
        polytope = parse_polytope('{"dim": 2, "vertices": [[1, 0], [0, 1], [-1, -1]]}')
        assert polytope == TRIANGLE
        assert polytope.name is None

    def test_parse__named(self):
        polytope = parse_polytope(json.dumps(SQUARE.to_dict()))
        assert polytope.name == "square"

    def test_invalid_json(self):
        text = '{\n  "dim": 2,\n  "vertices": [[1, 0],, [0, 1]]\n}'
        with pytest.raises(MalformedInput) as excinfo:
            parse_polytope(text, "bad.json")
        assert excinfo.value.source == "bad.json"
        assert excinfo.value.line == 3
        assert str(excinfo.value).startswith("bad.json, line 3: invalid JSON")

    def test_missing_fields(self):
        with pytest.raises(MalformedInput) as excinfo:
            parse_polytope('{"vertices": [[1], [-1]]}')
        assert 'expected an integer "dim"' in str(excinfo.value)
        with pytest.raises(MalformedInput):
            parse_polytope("[1, 2]")

    def test_non_integer_vertex(self):
        with pytest.raises(MalformedInput) as excinfo:
            parse_polytope('{"dim": 2, "vertices": [[1.5, 0], [0, 1], [-1, -1]]}')
        assert "not an integer point" in str(excinfo.value)

    def test_invalid_vertex_data(self):
        with pytest.raises(MalformedInput) as excinfo:
            parse_polytope('{"dim": 1, "vertices": [["a"], [1]]}')
        assert "invalid vertex data" in str(excinfo.value)

    def test_not_a_vertex(self):
        text = '{"dim": 1, "vertices": [[-1], [0], [1]]}'
        with pytest.raises(MalformedInput) as excinfo:
            parse_polytope(text)
        assert "is not a vertex" in str(excinfo.value)

    def test_load_polytope(self, write_json):
        path = write_json("triangle.json", TRIANGLE.to_dict())
        assert load_polytope(path) == TRIANGLE


class TestParseCatalog:
    def test_parse(self):
        text = json.dumps([TRIANGLE.to_dict(), {"dim": 1, "vertices": [[-1], [1]]}])
        polytopes = parse_catalog(text, "/tmp/mine.json")
        assert [polytope.name for polytope in polytopes] == ["P2", "mine.json[1]"]

    def test_not_a_list(self):
        with pytest.raises(MalformedInput) as excinfo:
            parse_catalog(json.dumps(TRIANGLE.to_dict()))
        assert "expected a JSON list" in str(excinfo.value)

    def test_error_names_the_entry(self):
        text = (
            "[\n"
            '  {"name": "good", "dim": 1, "vertices": [[-1], [1]]},\n'
            '  {"name": "bad", "dim": 1, "vertices": [[1], [1]]}\n'
            "]"
        )
        with pytest.raises(MalformedInput) as excinfo:
            parse_catalog(text, "catalog.json")
        assert excinfo.value.line == 3
        assert "polytope 'bad'" in str(excinfo.value)
        assert "listed more than once" in str(excinfo.value)


class TestCatalogs:
    def test_builtin_path(self):
        path = catalog_path("smooth-dim2")
        assert path.endswith(os.path.join("ehrhart", "data", "smooth-dim2.json"))
        assert os.path.exists(path)

    def test_search_path(self, write_json, tmp_path):
        write_json("mine.json", [TRIANGLE.to_dict()])
        assert catalog_path("mine", str(tmp_path)) == str(tmp_path / "mine.json")
        assert catalog_path("other.json", str(tmp_path)) == "other.json"

    def test_load_builtin(self):
        names = [polytope.name for polytope in load_catalog("smooth-dim2")]
        assert names == ["P2", "P1xP1", "F1", "dP7", "dP6"]
        assert [polytope.name for polytope in load_catalog("smooth-dim1")] == ["P1"]
        assert len(load_catalog("smooth-dim3")) == 18

    def test_load_from_search_path(self, write_json, tmp_path):
        write_json("mine.json", [SQUARE.to_dict()])
        assert load_catalog("mine", str(tmp_path)) == [SQUARE]

    def test_missing(self):
        with pytest.raises(OSError):
            load_catalog("no-such-catalog")


class TestConjectureVerdict:
    def test_smooth_fano(self):
        report = conjecture_verdict(TRIANGLE)
        assert report.conjecture == "smooth-fano"
        assert report.predicted
        assert report.cl
        assert report.name == "P2"
        assert (report.reflexive, report.smooth, report.terminal) == (True, True, True)

    def test_comparison(self):
        report = conjecture_verdict(SQUARE)
        assert (report.reflexive, report.smooth, report.terminal) == (
            True,
            False,
            False,
        )
        assert report.conjecture == "comparison"
        assert not report.predicted
        assert report.cl

    def test_not_reflexive(self):
        report = conjecture_verdict(LatticePolytope(1, [[0], [2]]))
        assert not report.reflexive
        assert not report.terminal
        assert report.conjecture == "comparison"

    def test_labels(self):
        assert conjecture_label(OCTAHEDRON, True, True, True) == "smooth-fano"
        assert conjecture_label(OCTAHEDRON, True, False, True) == "terminal-gorenstein"
        assert conjecture_label(SQUARE, True, False, True) == "comparison"
        assert conjecture_label(OCTAHEDRON, False, False, True) == "comparison"
