"""Session state composition, durable round trips, and tree adoption."""

import pytest

from srltutor.graph import KnowledgePoint, Relation
from srltutor.ingestion import KnowledgeCard, KnowledgeTree, TreeNode, parse_document
from srltutor.levels import LevelTaxonomy
from srltutor.service import (
    StoreError,
    adopt_tree,
    canonical_json,
    new_session_state,
    node_slug,
    state_from_document,
    state_to_document,
)
from srltutor.srl import advance_stage, complete_milestone, plan_path

CLOCK = lambda: 1_700_000_000.0  # noqa: E731


def fresh_state(session_id="s1"):
    return new_session_state(
        session_id,
        "token-1",
        LevelTaxonomy(),
        ("prerequisite", "part_of"),
        CLOCK,
    )


def sample_tree():
    return KnowledgeTree(
        roots=(
            TreeNode(
                name="Linear Algebra",
                level=1,
                importance=1.0,
                children=(
                    TreeNode(name="Vectors", level=2, importance=0.8),
                    TreeNode(
                        name="Matrices",
                        level=2,
                        importance=0.9,
                        children=(TreeNode(name="Determinants", level=3, importance=0.5),),
                    ),
                ),
            ),
        )
    )


class TestNewSessionState:
    def test_fresh_session(self):
        state = fresh_state()
        assert state.id == "s1"
        assert state.token == "token-1"
        assert state.graph_version == 0
        assert state.srl.stage == "forethought"
        assert state.documents == {} and state.requests == {}

    def test_set_graph_bumps_version_and_syncs(self):
        state = fresh_state()
        graph = state.graph.add_node(
            KnowledgePoint(id="n1", name="Node", level=1, importance=0.5)
        )
        state.set_graph(graph)
        assert state.graph_version == 1
        assert state.srl.graph is state.graph
        assert state.srl.graph_version == 1


class TestDocumentRoundTrip:
    def test_empty_state(self):
        state = fresh_state()
        document = state_to_document(state)
        restored = state_from_document(document, CLOCK)
        assert canonical_json(state_to_document(restored)) == canonical_json(document)

    def test_populated_state(self):
        state = fresh_state()
        graph = state.graph.add_node(
            KnowledgePoint(id="a", name="A", level=1, importance=0.9)
        ).add_node(
            KnowledgePoint(id="b", name="B", level=2, importance=0.7)
        ).add_edge(Relation("a", "b", "prerequisite", 2))
        state.set_graph(graph)
        plan_path(state.srl, ["b"])
        advance_stage(state.srl, "performance")
        complete_milestone(state.srl, "a")
        doc = parse_document(b"# Title\n\nBody text here.\n", "markdown", doc_id="d1")
        state.documents["d1"] = doc
        state.trees["d1"] = sample_tree()
        state.cards["d1"] = [
            KnowledgeCard(
                node_name="Vectors",
                significance="why it matters",
                application="where it is used",
                question_stub="what is a vector?",
            )
        ]
        state.requests["r1"] = {"status": 200, "body": {"ok": True}}

        restored = state_from_document(state_to_document(state), CLOCK)
        assert canonical_json(state_to_document(restored)) == canonical_json(
            state_to_document(state)
        )
        assert restored.srl.stage == "performance"
        assert [m.status for m in restored.srl.path] == ["done", "pending"]
        assert restored.documents["d1"].title == doc.title
        assert restored.trees["d1"].names() == sample_tree().names()
        assert restored.cards["d1"][0].node_name == "Vectors"
        assert restored.requests["r1"]["status"] == 200

    def test_wrong_format_rejected(self):
        document = state_to_document(fresh_state())
        document["format"] = "other"
        with pytest.raises(StoreError):
            state_from_document(document, CLOCK)

    def test_missing_key_rejected(self):
        document = state_to_document(fresh_state())
        del document["graph"]
        with pytest.raises(StoreError, match="corrupt"):
            state_from_document(document, CLOCK)


class TestNodeSlug:
    @pytest.mark.parametrize(
        "name,slug",
        [
            ("Linear Algebra", "linear-algebra"),
            ("  K-Means  Clustering ", "k-means-clustering"),
            ("C++ (advanced)", "c-advanced"),
            ("登山", "node"),
        ],
    )
    def test_slugs(self, name, slug):
        assert node_slug(name) == slug


class TestAdoptTree:
    def test_adds_nodes_and_prerequisites(self):
        state = fresh_state()
        graph = adopt_tree(state.graph, sample_tree())
        assert sorted(graph.nodes) == [
            "determinants",
            "linear-algebra",
            "matrices",
            "vectors",
        ]
        edges = set(graph.prerequisite_edges())
        assert edges == {
            ("linear-algebra", "vectors"),
            ("linear-algebra", "matrices"),
            ("matrices", "determinants"),
        }
        assert graph.node("matrices").level == 2
        assert graph.node("determinants").importance == 0.5

    def test_existing_node_fields_survive(self):
        state = fresh_state()
        graph = state.graph.add_node(
            KnowledgePoint(
                id="vectors", name="Vectors", level=5, importance=0.2, note="my note"
            )
        )
        graph = adopt_tree(graph, sample_tree())
        # user edits win over extracted values
        assert graph.node("vectors").level == 5
        assert graph.node("vectors").note == "my note"

    def test_readoption_is_idempotent(self):
        state = fresh_state()
        once = adopt_tree(state.graph, sample_tree())
        twice = adopt_tree(once, sample_tree())
        assert sorted(twice.nodes) == sorted(once.nodes)
        assert len(twice.relations) == len(once.relations)

    def test_colliding_names_get_distinct_ids(self):
        state = fresh_state()
        tree = KnowledgeTree(
            roots=(
                TreeNode(
                    name="Graph Search",
                    level=1,
                    importance=1.0,
                    children=(TreeNode(name="Graph  Search", level=2, importance=0.4),),
                ),
            )
        )
        graph = adopt_tree(state.graph, tree)
        assert sorted(graph.nodes) == ["graph-search", "graph-search-x"]
        assert set(graph.prerequisite_edges()) == {("graph-search", "graph-search-x")}
