"""Finite rings as Cayley tables: constructions, radicals, classification and checks."""

import json

from . import _core
from ._core import Ring, RingError, catalog_names, catalog_ring, check_ids, context_names, jacobson_radical
from ._core import potent_decomposition, prime_radical

__all__ = [
    "Ring",
    "RingError",
    "catalog_names",
    "catalog_ring",
    "check_ids",
    "classify",
    "cli",
    "construct",
    "context_names",
    "jacobson_radical",
    "load_document",
    "potent_decomposition",
    "prime_radical",
    "run_check",
    "run_catalog_suite",
    "to_document",
]


def construct(recipe, max_order=1024):
    """Build a ring from a recipe dict (or its JSON text)."""
    text = recipe if isinstance(recipe, str) else json.dumps(recipe)
    return _core.construct(text, max_order)


def load_document(doc):
    """Ring from a ringlab-ring document; validates unless it carries constructor provenance."""
    return _core.ring_from_document(doc if isinstance(doc, str) else json.dumps(doc))


def to_document(ring):
    return json.loads(_core.ring_to_document(ring))


def classify(ring):
    return json.loads(_core.classify(ring))


def run_check(check_id, ring, name="input", seed=None):
    kwargs = {} if seed is None else {"seed": seed}
    return json.loads(_core.run_check(check_id, name, ring, **kwargs))


def run_catalog_suite(ids=(), seed=None, threads=0):
    kwargs = {"ids": list(ids), "threads": threads}
    if seed is not None:
        kwargs["seed"] = seed
    return json.loads(_core.run_catalog_suite(**kwargs))


def cli(*args):
    """Run the command line in-process; returns (exit code, stdout, stderr)."""
    return _core.cli(list(args))
