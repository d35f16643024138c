"""Python front end of the rednum C++ library."""

import json

from ._core import __version__, example_ids, search
from ._core import analyze_json as _analyze_json
from ._core import example_spec as _example_spec

__all__ = ["__version__", "analyze", "example", "example_ids", "search"]


def example(example_id):
    """Spec document of a built-in example as a dict."""
    return json.loads(_example_spec(example_id))


def analyze(spec, **options):
    """Analyzes a spec (dict or JSON text) and returns the report as a dict."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    return json.loads(_analyze_json(text, **options))
