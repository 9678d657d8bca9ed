"""JSON wire format for sequences. Naturals travel as decimal strings."""

import json

from .constructions import BkSequence
from .errors import InvalidInput


def to_document(seq):
    doc = {"construction": seq.label}
    p = seq.params
    if seq.label == "bose_chowla":
        doc["q"] = p["q"]
    elif "n" in p:
        doc["n"] = p["n"]
    doc["k"] = seq.k
    if "r" in p:
        doc["r"] = p["r"]
    doc["modulus"] = str(seq.modulus)
    doc["elements"] = [str(e) for e in seq.elements]
    if "f" in p:
        doc["f"] = list(p["f"])
    return doc


def _natural(value, what):
    if isinstance(value, bool):
        raise InvalidInput(f"{what} must be a natural number")
    if isinstance(value, int):
        n = value
    elif isinstance(value, str) and value.isdigit() and value.isascii():
        n = int(value)
    else:
        raise InvalidInput(f"{what} must be a decimal string, got {value!r}")
    if n < 0:
        raise InvalidInput(f"{what} must be nonnegative")
    return n


def from_document(doc):
    if not isinstance(doc, dict):
        raise InvalidInput("sequence document must be a JSON object")
    for key in ("k", "modulus", "elements"):
        if key not in doc:
            raise InvalidInput(f"missing field {key!r}")
    if not isinstance(doc["elements"], list):
        raise InvalidInput("elements must be an array")
    k = _natural(doc["k"], "k")
    modulus = _natural(doc["modulus"], "modulus")
    elements = tuple(_natural(e, "element") for e in doc["elements"])
    params = {}
    for key in ("n", "q", "r"):
        if key in doc:
            params[key] = _natural(doc[key], key)
    params["k"] = k
    if "f" in doc:
        params["f"] = tuple(_natural(c, "f coefficient") for c in doc["f"])
    label = doc.get("construction", "custom")
    try:
        return BkSequence(elements, modulus, k, str(label), params)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


def dumps(doc):
    return json.dumps(doc, separators=(",", ":"))


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON: {exc}") from None
