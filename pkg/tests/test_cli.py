import json

import pytest

from graphprod_cli import main

PENTAGON = {
    "graph": {
        "vertices": ["0", "1", "2", "3", "4"],
        "edges": [["0", "1"], ["1", "2"], ["2", "3"], ["3", "4"], ["4", "0"]],
    },
    "labels": {v: "Z" for v in "01234"},
}

PATH = {
    "graph": {"vertices": ["a", "b", "c", "d"], "edges": [["a", "b"], ["b", "c"], ["c", "d"]]},
    "labels": {v: "Z" for v in "abcd"},
}


CYCLE13 = {
    "graph": {
        "vertices": [str(i) for i in range(13)],
        "edges": [[str(i), str((i + 1) % 13)] for i in range(13)],
    },
    "labels": {str(i): "Z" for i in range(13)},
}


def document(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def with_labels(doc, label):
    return {"graph": doc["graph"], "labels": {v: label for v in doc["labels"]}}


class TestAnalyze:
    def test_json_report(self, tmp_path, capsys):
        assert main(["analyze", "--input", document(tmp_path, "c5.json", PENTAGON)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["untransvectable"] == ["0", "1", "2", "3", "4"]
        assert report["untransvectable_via_chains"]["plain"] == report["untransvectable"]
        assert report["predicates"]["strongly_reduced"] is True
        assert report["untransvectable_profile"] == {"count": 5, "base_graph_has_edge": True}
        assert len(report["maximal_products"]) == 5

    def test_path_report(self, tmp_path, capsys):
        assert main(["analyze", "--input", document(tmp_path, "p4.json", PATH)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["untransvectable"] == ["b", "c"]
        assert report["zoom_chains"]["a"] is None
        assert report["untransvectable_via_chains"]["thick"] == ["b", "c"]

    def test_csv(self, tmp_path, capsys):
        assert main(["analyze", "--input", document(tmp_path, "p4.json", PATH), "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].startswith("vertex,label,degree,untransvectable")
        assert len(lines) == 5

    def test_dot_to_file(self, tmp_path):
        out = tmp_path / "graph.dot"
        assert main(["analyze", "--input", document(tmp_path, "p4.json", PATH),
                     "--format", "dot", "--out", str(out)]) == 0
        text = out.read_text(encoding="utf-8")
        assert text.startswith("graph Gamma {")
        assert '"a" -- "b"' in text

    def test_missing_input(self, tmp_path):
        assert main(["analyze", "--input", str(tmp_path / "nope.json")]) == 2

    def test_large_graph_skips_subset_scans(self, tmp_path, capsys):
        assert main(["analyze", "--input", document(tmp_path, "c13.json", CYCLE13)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["exhaustive"] is False
        assert report["predicates"]["strongly_reduced"] is None
        assert report["predicates"]["transvection_free"] is True
        assert report["zoom_chains"] is None
        assert report["maximal_products"] is None
        assert report["untransvectable_via_chains"] == {"plain": None, "thick": None}
        assert len(report["untransvectable"]) == 13

    def test_large_graph_csv(self, tmp_path, capsys):
        assert main(["analyze", "--input", document(tmp_path, "c13.json", CYCLE13), "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 14


class TestClassify:
    def test_identical_documents(self, tmp_path, capsys):
        path = document(tmp_path, "c5.json", PENTAGON)
        assert main(["classify", "--input", path, "--input-b", path]) == 0
        verdict = json.loads(capsys.readouterr().out)
        assert verdict["relation"] == "isomorphic"

    def test_relation_table(self, tmp_path, capsys):
        a = document(tmp_path, "f2.json", with_labels(PENTAGON, "F2"))
        b = document(tmp_path, "f3.json", with_labels(PENTAGON, "F3"))
        table = document(tmp_path, "table.json", {"relation": "orbit-equivalent", "unrelated": [["F2", "F3"]]})
        assert main(["classify", "--input", a, "--input-b", b, "--relation", table]) == 0
        assert json.loads(capsys.readouterr().out)["relation"] == "not-measure-equivalent"

    def test_undetermined(self, tmp_path, capsys):
        path = document(tmp_path, "p4.json", PATH)
        c5 = document(tmp_path, "c5.json", PENTAGON)
        assert main(["classify", "--input", path, "--input-b", c5, "--relation", "orbit-equivalent"]) == 1
        assert json.loads(capsys.readouterr().out)["relation"] == "undetermined"

    def test_undecided_labels(self, tmp_path):
        a = document(tmp_path, "t.json", with_labels(PENTAGON, {"kind": "opaque", "tag": "T"}))
        b = document(tmp_path, "c5.json", PENTAGON)
        assert main(["classify", "--input", a, "--input-b", b, "--relation", "orbit-equivalent"]) == 3

    def test_isomorphism_hypotheses_refuse_large_graphs(self, tmp_path):
        path = document(tmp_path, "c13.json", CYCLE13)
        assert main(["classify", "--input", path, "--input-b", path, "--relation", "iso"]) == 2

    def test_bad_table(self, tmp_path):
        path = document(tmp_path, "c5.json", PENTAGON)
        table = document(tmp_path, "table.json", {"related": [["Z"]], "relation": "iso"})
        assert main(["classify", "--input", path, "--input-b", path, "--relation", table]) == 3


class TestWord:
    def test_normal_form(self, tmp_path, capsys):
        path = document(tmp_path, "p4.json", PATH)
        assert main(["word", "--input", path, "a.c.b^-1.b"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["normal_form"] == "a^1.c^1"
        assert payload["length"] == 2
        assert payload["head"] == ["a^1"]
        assert payload["tail"] == ["c^1"]
        assert payload["parabolic_support"] == {"conjugator": "e", "type_vertices": ["a", "c"]}

    def test_higman_arithmetic(self, tmp_path):
        path = document(tmp_path, "hig.json", with_labels(PATH, "Hig5"))
        assert main(["word", "--input", path, "a^1"]) == 4

    def test_malformed_expression(self, tmp_path):
        assert main(["word", "--input", document(tmp_path, "p4.json", PATH), "a^^2"]) == 2


class TestComplex:
    def test_building_counts(self, tmp_path, capsys):
        edge = {"graph": {"vertices": ["a", "b"], "edges": [["a", "b"]]}, "labels": {"a": "Z/2", "b": "Z/2"}}
        out = tmp_path / "building.json"
        code = main(["complex", "--input", document(tmp_path, "edge.json", edge),
                     "--kind", "building", "--radius", "2", "--out", str(out)])
        assert code == 0
        assert "9 vertices, 12 edges, 4 squares" in capsys.readouterr().out
        data = json.loads(out.read_text(encoding="utf-8"))
        assert len(data["cubes"]) == 4

    def test_extension_dot(self, tmp_path, capsys):
        out = tmp_path / "ext.dot"
        doc = with_labels(PENTAGON, "Z/2")
        code = main(["complex", "--input", document(tmp_path, "c5.json", doc),
                     "--kind", "extension", "--radius", "0", "--format", "dot", "--out", str(out)])
        assert code == 0
        assert "5 nodes, 5 edges" in capsys.readouterr().out
        assert out.read_text(encoding="utf-8").startswith("graph Extension {")

    def test_not_enumerable(self, tmp_path):
        path = document(tmp_path, "hig.json", with_labels(PATH, "Hig5"))
        assert main(["complex", "--input", path, "--radius", "1", "--out", str(tmp_path / "x.json")]) == 5


class TestSelftest:
    def test_rejects_tiny_graphs(self):
        assert main(["selftest", "--max-vertices", "2"]) == 2

    @pytest.mark.slow
    def test_passes(self, tmp_path):
        out = tmp_path / "summary.csv"
        assert main(["--seed", "3", "selftest", "--max-vertices", "4", "--format", "csv", "--out", str(out)]) == 0
        assert out.read_text(encoding="utf-8").startswith("suite,cases,failures,passed,seconds")


def test_subcommand_is_required():
    with pytest.raises(SystemExit):
        main([])
