import pytest

from src.classification import (
    ISO,
    ORBIT_EQUIVALENT,
    STRONG_COMMENSURABLE,
    LabelRelation,
    check_relation_name,
    classify,
    find_label_respecting_homomorphism,
    graph_hypotheses,
    higman_homomorphism_exists,
    hypotheses_report,
    label_homomorphism_exists,
)
from src.exceptions import InputError, RelationError
from src.graphs import SimpleGraph
from src.groups.labels import VertexLabel
from src.groups.words import Presentation

Z = VertexLabel.integers()
F1 = VertexLabel.free(1)
F2 = VertexLabel.free(2)
F3 = VertexLabel.free(3)


def pentagon(label):
    return Presentation.uniform(SimpleGraph.cycle(5), label)


class TestHigman:
    def test_divisibility(self):
        assert higman_homomorphism_exists(10, 5)
        assert not higman_homomorphism_exists(5, 10)

    def test_parameter_bound(self):
        with pytest.raises(InputError):
            higman_homomorphism_exists(3, 5)


@pytest.mark.parametrize(
    "relation, a, b, expected",
    [
        (ISO, Z, F1, True),
        (ISO, F2, F3, False),
        (ISO, VertexLabel.higman(5), VertexLabel.higman(10), False),
        (STRONG_COMMENSURABLE, Z, F2, False),
        (STRONG_COMMENSURABLE, VertexLabel.cyclic(3), Z, False),
        (ORBIT_EQUIVALENT, Z, VertexLabel.cyclic(2), False),
        (ORBIT_EQUIVALENT, F2, F3, False),
        (ORBIT_EQUIVALENT, Z, F2, False),
        (ORBIT_EQUIVALENT, VertexLabel.higman(5), F2, None),
        (ORBIT_EQUIVALENT, VertexLabel.opaque("T"), Z, None),
        (ORBIT_EQUIVALENT, VertexLabel.opaque("T"), VertexLabel.opaque("T"), True),
        (ORBIT_EQUIVALENT, VertexLabel.opaque("Z"), Z, None),
        (ISO, VertexLabel.opaque("F2"), F2, None),
    ],
)
def test_built_in_judgments(relation, a, b, expected):
    assert LabelRelation.built_in(relation).judge(a, b) is expected


class TestLabelRelation:
    def test_tables_override_built_in_rules(self):
        relation = LabelRelation(ORBIT_EQUIVALENT, related=[("F3", "F2")])
        assert relation.judge(F2, F3) is True
        assert relation.to_dict()["related"] == [["F2", "F3"]]

    def test_opaque_tags_are_keyed_apart_from_built_in_labels(self):
        relation = LabelRelation(ORBIT_EQUIVALENT, related=[("opaque:T", "Z")])
        assert relation.judge(VertexLabel.opaque("T"), Z) is True
        assert relation.judge(VertexLabel.opaque("Z"), Z) is None

    def test_conflicting_table(self):
        with pytest.raises(RelationError):
            LabelRelation(ISO, related=[("Z", "F2")], unrelated=[("F2", "Z")])

    def test_unknown_relation_name(self):
        with pytest.raises(InputError):
            check_relation_name("quasi-isometric")

    def test_require_raises_on_unknown_pairs(self):
        with pytest.raises(RelationError):
            LabelRelation.built_in(ORBIT_EQUIVALENT).require(VertexLabel.opaque("T"), Z)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (VertexLabel.cyclic(4), VertexLabel.cyclic(6), True),
        (VertexLabel.cyclic(3), VertexLabel.cyclic(4), False),
        (VertexLabel.cyclic(3), Z, False),
        (Z, VertexLabel.cyclic(5), True),
        (VertexLabel.higman(10), VertexLabel.higman(5), True),
        (VertexLabel.higman(5), Z, False),
        (VertexLabel.opaque("T"), Z, None),
    ],
)
def test_label_homomorphisms(a, b, expected):
    assert label_homomorphism_exists(a, b) is expected


class TestHypotheses:
    def test_pentagon_satisfies_everything(self):
        report = hypotheses_report(pentagon(Z), pentagon(F2), ORBIT_EQUIVALENT)
        assert report["holds"]
        assert report["failed"] == []

    def test_path_fails_transvection_freeness(self, p4):
        pres = Presentation.uniform(p4, Z)
        report = hypotheses_report(pres, pentagon(Z), ORBIT_EQUIVALENT)
        assert report["failed"] == ["A.transvection_free"]

    def test_iso_only_checks_transvections_on_the_first_side(self, p4):
        pres = Presentation.uniform(p4, Z)
        report = hypotheses_report(pentagon(Z), pres, ISO)
        assert "transvection_free" not in report["B"]
        assert report["holds"]

    def test_single_vertex_join_factors_are_rejected(self):
        cone = SimpleGraph(["apex", "0", "1", "2", "3", "4"],
                           list(SimpleGraph.cycle(5).edges) + [("apex", str(i)) for i in range(5)])
        pres = Presentation.uniform(cone, Z)
        assert graph_hypotheses(pres, ISO)["join_of_strongly_reduced"] is False

    def test_join_of_two_pentagons(self):
        names = [f"a{i}" for i in range(5)] + [f"b{i}" for i in range(5)]
        edges = [(f"{s}{i}", f"{s}{(i + 1) % 5}") for s in "ab" for i in range(5)]
        edges += [(f"a{i}", f"b{j}") for i in range(5) for j in range(5)]
        pres = Presentation.uniform(SimpleGraph(names, edges), Z)
        assert graph_hypotheses(pres, ISO)["join_of_strongly_reduced"] is True

    def test_finite_labels_fail_for_measure_relations(self):
        report = hypotheses_report(pentagon(VertexLabel.cyclic(2)), pentagon(Z), ORBIT_EQUIVALENT)
        assert "A.countably_infinite_labels" in report["failed"]


class TestClassify:
    def test_identical_presentations(self):
        verdict = classify(pentagon(Z), pentagon(Z), LabelRelation.built_in(ISO))
        assert verdict.relation == "isomorphic"
        assert verdict.is_positive
        assert verdict.witness is not None
        assert all(j["related"] for j in verdict.label_judgments)

    def test_free_groups_of_different_rank(self):
        verdict = classify(pentagon(F2), pentagon(F3))
        assert verdict.relation == "not-measure-equivalent"
        assert verdict.witness is None

    def test_table_relating_the_ranks(self):
        relation = LabelRelation(ORBIT_EQUIVALENT, related=[("F2", "F3")], name="cost-blind")
        verdict = classify(pentagon(F2), pentagon(F3), relation)
        assert verdict.relation == "orbit-equivalent"
        assert verdict.label_relation == "cost-blind"

    def test_higman_divisibility(self):
        verdict = classify(pentagon(VertexLabel.higman(5)), pentagon(VertexLabel.higman(10)),
                           LabelRelation.built_in(ISO))
        assert verdict.relation == "not-isomorphic"
        assert verdict.homomorphism_witness is None
        back = classify(pentagon(VertexLabel.higman(10)), pentagon(VertexLabel.higman(5)),
                        LabelRelation.built_in(ISO))
        assert back.homomorphism_witness is not None

    def test_failed_hypotheses_are_undetermined(self, p5):
        verdict = classify(Presentation.uniform(p5, Z), pentagon(Z))
        assert verdict.is_undetermined
        assert verdict.witness is None

    def test_strong_commensurability(self):
        verdict = classify(pentagon(Z), pentagon(F1), kind=STRONG_COMMENSURABLE)
        assert verdict.relation == "strongly-commensurable"

    def test_undecided_pair_raises(self):
        with pytest.raises(RelationError):
            classify(pentagon(VertexLabel.opaque("T")), pentagon(Z))

    def test_to_dict(self):
        data = classify(pentagon(Z), pentagon(Z)).to_dict()
        assert set(data) == {
            "relation", "label_relation", "witness", "label_judgments",
            "hypotheses_report", "homomorphism_witness",
        }


def test_homomorphism_search_respects_edges():
    triangle = Presentation.uniform(SimpleGraph.complete(["a", "b", "c"]), Z)
    single_edge = Presentation.uniform(SimpleGraph.path(["x", "y"]), Z)
    assert find_label_respecting_homomorphism(triangle, single_edge) is None
    assert find_label_respecting_homomorphism(single_edge, triangle) is not None
