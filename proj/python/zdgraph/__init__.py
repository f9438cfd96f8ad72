"""Zero-divisor and annihilating-ideal graphs of finite reduced rings."""

import json

from ._core import (
    Graph,
    Ring,
    ZdgError,
    __version__,
    ag,
    export_graph,
    fields,
    gamma,
    table_from_json,
    verify_json,
    zn,
)


def verify(ring, suite="all", seed=0, canonical=False):
    """Run the verification suites and return the report as a dict."""
    return json.loads(verify_json(ring, suite, seed, canonical))


__all__ = [
    "Graph",
    "Ring",
    "ZdgError",
    "__version__",
    "ag",
    "export_graph",
    "fields",
    "gamma",
    "table_from_json",
    "verify",
    "zn",
]
