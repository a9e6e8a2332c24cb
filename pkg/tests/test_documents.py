import json

import pytest

from effinfo import Alphabet, Channel, Distribution, ValidationError
from effinfo.documents import (
    channel_doc,
    learning_instance_doc,
    load_json,
    map_doc,
    parse_channel,
    parse_learning_instance,
    parse_map,
    parse_prior,
    parse_system,
    prior_doc,
)

CHANNEL_DOC = {
    "inputs": ["x0", "x1"],
    "outputs": ["y0", "y1"],
    "matrix": [[0.5, 0.5], [0.0, 1.0]],
}
MAP_DOC = {
    "inputs": ["0", "1", "2", "3"],
    "outputs": ["A", "B"],
    "table": ["A", "A", "A", "B"],
}
INSTANCE_DOC = {
    "points": ["a", "b", "c"],
    "functions": [[1, 1, 1], [1, -1, 1]],
    "dataset": ["a", "c"],
}


class TestChannelDocuments:
    def test_parse(self):
        m = parse_channel(CHANNEL_DOC)
        assert m.input.labels == ("x0", "x1")
        assert m.prob("y1", given="x0") == 0.5

    def test_round_trip(self):
        m = parse_channel(CHANNEL_DOC)
        assert channel_doc(m) == CHANNEL_DOC
        assert parse_channel(channel_doc(m)) == m

    def test_missing_key(self):
        with pytest.raises(ValidationError, match="missing"):
            parse_channel({"inputs": ["a"], "outputs": ["b"]})

    def test_unexpected_key(self):
        doc = dict(CHANNEL_DOC, extra=1)
        with pytest.raises(ValidationError, match="unexpected"):
            parse_channel(doc)

    def test_non_string_symbols(self):
        doc = dict(CHANNEL_DOC, inputs=[1, 2])
        with pytest.raises(ValidationError, match="strings"):
            parse_channel(doc)

    def test_nonstochastic_matrix(self):
        doc = dict(CHANNEL_DOC, matrix=[[0.5, 0.6], [0.0, 1.0]])
        with pytest.raises(ValidationError, match="'x0'"):
            parse_channel(doc)


class TestMapDocuments:
    def test_parse(self):
        f = parse_map(MAP_DOC)
        assert f("2") == "A"

    def test_round_trip(self):
        f = parse_map(MAP_DOC)
        assert map_doc(f) == MAP_DOC
        assert parse_map(map_doc(f)) == f

    def test_unknown_output_symbol(self):
        doc = dict(MAP_DOC, table=["A", "A", "A", "Z"])
        with pytest.raises(ValidationError, match="'Z'"):
            parse_map(doc)


class TestSystemDocuments:
    def test_channel_document(self):
        assert parse_system(CHANNEL_DOC) == parse_channel(CHANNEL_DOC)

    def test_map_document_embeds_as_channel(self):
        m = parse_system(MAP_DOC)
        assert isinstance(m, Channel)
        assert m.prob("A", given="0") == 1.0
        assert m.prob("B", given="3") == 1.0


class TestPriorDocuments:
    def test_parse_and_round_trip(self):
        a = Alphabet(["x0", "x1"])
        p = parse_prior({"probs": [0.25, 0.75]}, a)
        assert p == Distribution(a, [0.25, 0.75])
        assert prior_doc(p) == {"probs": [0.25, 0.75]}
        assert parse_prior(prior_doc(p), a) == p

    def test_length_mismatch(self):
        with pytest.raises(ValidationError, match="2 entries"):
            parse_prior({"probs": [0.5, 0.5]}, Alphabet(["a", "b", "c"]))

    def test_non_numeric(self):
        with pytest.raises(ValidationError, match="numbers"):
            parse_prior({"probs": ["x", "y"]}, Alphabet(["a", "b"]))


class TestLearningInstanceDocuments:
    def test_parse(self):
        fc, d = parse_learning_instance(INSTANCE_DOC)
        assert fc.size == 2
        assert d.points == ("a", "c")

    def test_round_trip(self):
        fc, d = parse_learning_instance(INSTANCE_DOC)
        assert learning_instance_doc(fc, d) == INSTANCE_DOC
        fc2, d2 = parse_learning_instance(learning_instance_doc(fc, d))
        assert (fc2, d2) == (fc, d)

    def test_duplicate_dataset_point_named(self):
        doc = dict(INSTANCE_DOC, dataset=["a", "a"])
        with pytest.raises(ValidationError, match="'a'"):
            parse_learning_instance(doc)

    def test_unknown_dataset_point(self):
        doc = dict(INSTANCE_DOC, dataset=["a", "z"])
        with pytest.raises(ValidationError, match="'z'"):
            parse_learning_instance(doc)

    def test_bad_sign_vector(self):
        doc = dict(INSTANCE_DOC, functions=[[1, 2, 1]])
        with pytest.raises(ValidationError, match="'b'"):
            parse_learning_instance(doc)


class TestLoadJson:
    def test_file(self, tmp_path):
        path = tmp_path / "doc.json"
        path.write_text(json.dumps(CHANNEL_DOC))
        assert load_json(str(path)) == CHANNEL_DOC

    def test_stdin(self, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(MAP_DOC)))
        assert load_json("-") == MAP_DOC

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ValidationError, match="not valid JSON"):
            load_json(str(path))

    def test_missing_file(self):
        with pytest.raises(ValidationError):
            load_json("/nonexistent/nope.json")
