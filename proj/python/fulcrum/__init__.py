"""Python access to the fulcrum rewriting and certification pipeline."""

import json

from . import _fulcrum

__all__ = ["nichols_dimension", "certify", "classify", "complete", "jordan_verify"]


def nichols_dimension() -> int:
    return _fulcrum.nichols_dimension()


def certify(lambda_bits: str, mu_bits: str, galois: bool = False) -> dict:
    """Certificate for one F2 pair given as 9-character row-major bitstrings."""
    return json.loads(_fulcrum.certify_json(lambda_bits, mu_bits, galois))


def classify(group: str = "gx") -> dict:
    return json.loads(_fulcrum.classify_json(group))


def complete(presentation) -> dict:
    """Complete a presentation given as a dict or a JSON string."""
    if not isinstance(presentation, str):
        presentation = json.dumps(presentation)
    return json.loads(_fulcrum.complete_json(presentation))


def jordan_verify(max_len: int = 6) -> dict:
    return json.loads(_fulcrum.jordan_json(max_len))
