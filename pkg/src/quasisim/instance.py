"""Instance documents: ``{"theta": [n0, n1], "generators": [{"h0": [...], "h1": [...]}, ...]}``."""

from __future__ import annotations

import json
from pathlib import Path

from .model import ModelPair
from .scalars import ParseError, parse_scalar
from .subspace import Subspace, canonical_basis


def parse_pair(value) -> ModelPair:
    if isinstance(value, str):
        value = value.split(",")
    try:
        n0, n1 = (int(x) for x in value)
        return ModelPair(n0, n1)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad theta {value!r}: {exc}") from None


def _coeffs(values, bound: int, what: str) -> tuple:
    if not isinstance(values, list):
        raise ParseError(f"{what} must be a list of coefficients")
    coeffs = tuple(parse_scalar(v) for v in values)
    if any(coeffs[bound:]):
        raise ParseError(f"{what} has degree >= {bound}")
    return coeffs[:bound] + (parse_scalar(0),) * (bound - min(bound, len(coeffs)))


def parse_instance(doc: dict) -> tuple:
    """Return ``(pair, generator_vectors)``; raises ParseError on malformed input."""
    if not isinstance(doc, dict) or "theta" not in doc:
        raise ParseError("instance must be an object with a 'theta' field")
    p = parse_pair(doc["theta"])
    gens = doc.get("generators", [])
    if not isinstance(gens, list):
        raise ParseError("'generators' must be a list")
    vectors = []
    for i, g in enumerate(gens):
        if not isinstance(g, dict):
            raise ParseError(f"generator {i} must be an object")
        h0 = _coeffs(g.get("h0", []), p.n0, f"generator {i} h0")
        h1 = _coeffs(g.get("h1", []), p.n1, f"generator {i} h1")
        vectors.append(h0 + h1)
    return p, vectors


def load_instance(source) -> Subspace:
    """Load a path or an already-decoded document and canonicalize it (NotInvariant if not invariant)."""
    if isinstance(source, (str, Path)):
        try:
            doc = json.loads(Path(source).read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"{source}: {exc}") from None
    else:
        doc = source
    p, vectors = parse_instance(doc)
    return canonical_basis(vectors, p)


def dump_instance(M: Subspace) -> dict:
    return {"theta": M.pair.to_list(), "generators": M.generators_json()}
