"""JSON document schemas for channels, maps, priors, and learning instances.

Four small schemas, chosen to be diffable and trivially scriptable:

* channel:            {"inputs": [...], "outputs": [...], "matrix": [[...]]}
* deterministic map:  {"inputs": [...], "outputs": [...], "table": [...]}
* prior:              {"probs": [...]}
* learning instance:  {"points": [...], "functions": [[+-1 ...]], "dataset": [...]}

Parsers are strict: unknown keys, wrong shapes, and unresolved symbols are
rejected with the offending name in the message. Serializers emit documents
that re-parse to equal objects.
"""
from __future__ import annotations

import json
import sys

from .channels import Alphabet, Channel, Distribution
from .deterministic import DeterministicMap, channel_of_map
from .errors import ValidationError
from .learning import Dataset, FunctionClass, Labeling, PointSet


def load_json(path: str):
    """Read a JSON document from a file path, or from stdin when path is '-'."""
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: not valid JSON: {exc}") from exc
    except OSError as exc:
        raise ValidationError(f"{path}: {exc.strerror or exc}") from exc


def _require_mapping(obj, keys: tuple[str, ...], what: str) -> None:
    if not isinstance(obj, dict):
        raise ValidationError(f"{what} document must be a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise ValidationError(f"{what} document is missing keys: {missing}")
    extra = [k for k in obj if k not in keys]
    if extra:
        raise ValidationError(f"{what} document has unexpected keys: {extra}")


def _name_list(value, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise ValidationError(f"{what} must be a list of strings")
    return value


def _real_list(value, what: str) -> list[float]:
    if (not isinstance(value, list)
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool)
                       for v in value)):
        raise ValidationError(f"{what} must be a list of numbers")
    return [float(v) for v in value]


def parse_channel(obj) -> Channel:
    _require_mapping(obj, ("inputs", "outputs", "matrix"), "channel")
    inputs = Alphabet(_name_list(obj["inputs"], "channel inputs"))
    outputs = Alphabet(_name_list(obj["outputs"], "channel outputs"))
    matrix = obj["matrix"]
    if not isinstance(matrix, list):
        raise ValidationError("channel matrix must be a list of rows")
    rows = [_real_list(row, "channel matrix row") for row in matrix]
    return Channel(inputs, outputs, rows)


def channel_doc(m: Channel) -> dict:
    return {
        "inputs": list(m.input.labels),
        "outputs": list(m.output.labels),
        "matrix": [[float(v) for v in row] for row in m.matrix],
    }


def parse_system(obj) -> Channel:
    """Parse a channel document, or a map document embedded as a 0/1 channel.

    The two schemas are distinguished by their "matrix" / "table" key.
    """
    if isinstance(obj, dict) and "table" in obj:
        return channel_of_map(parse_map(obj))
    return parse_channel(obj)


def parse_map(obj) -> DeterministicMap:
    _require_mapping(obj, ("inputs", "outputs", "table"), "map")
    inputs = Alphabet(_name_list(obj["inputs"], "map inputs"))
    outputs = Alphabet(_name_list(obj["outputs"], "map outputs"))
    table = _name_list(obj["table"], "map table")
    return DeterministicMap(inputs, outputs, table)


def map_doc(f: DeterministicMap) -> dict:
    return {
        "inputs": list(f.input.labels),
        "outputs": list(f.output.labels),
        "table": list(f.table),
    }


def parse_prior(obj, alphabet: Alphabet) -> Distribution:
    _require_mapping(obj, ("probs",), "prior")
    probs = _real_list(obj["probs"], "prior probs")
    if len(probs) != alphabet.size:
        raise ValidationError(
            f"prior has {len(probs)} entries for {alphabet.size} input symbols")
    return Distribution(alphabet, probs)


def prior_doc(p: Distribution) -> dict:
    return {"probs": [float(v) for v in p.probs]}


def parse_learning_instance(obj) -> tuple[FunctionClass, Dataset]:
    _require_mapping(obj, ("points", "functions", "dataset"), "learning instance")
    pointset = PointSet(_name_list(obj["points"], "learning instance points"))
    raw_fns = obj["functions"]
    if not isinstance(raw_fns, list):
        raise ValidationError("learning instance functions must be a list of sign vectors")
    functions = []
    for i, signs in enumerate(raw_fns):
        if not isinstance(signs, list):
            raise ValidationError(f"function {i} must be a list of +1/-1 signs")
        functions.append(Labeling(pointset, signs))
    fc = FunctionClass(pointset, functions)
    dataset = Dataset.from_points(
        pointset, _name_list(obj["dataset"], "learning instance dataset"))
    return fc, dataset


def learning_instance_doc(fc: FunctionClass, d: Dataset) -> dict:
    return {
        "points": list(fc.pointset.points),
        "functions": [list(f.signs) for f in fc.functions],
        "dataset": list(d.points),
    }
