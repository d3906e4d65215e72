"""Resource caps.

Defaults keep every computation at desk scale. Override per call with a
``Caps`` instance, or globally via the ``HSTAR_CAPS`` environment variable
holding a JSON object, e.g. ``HSTAR_CAPS='{"volume": 5000}'``.
"""

import dataclasses
import json
import os

from .errors import HStarError


@dataclasses.dataclass(frozen=True)
class Caps:
    volume: int = 10**6          # |Lambda| / normalized volume for hstar
    box_points: int = 10**7      # lattice points scanned by ehrhart_count
    codewords: int = 10**6       # p^r for codeword enumeration
    field_size: int = 2048       # q for Bernoulli sweeps
    search_nodes: int = 10**6    # backtracking nodes for isomorphism searches

    def __post_init__(self):
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or value <= 0:
                raise HStarError(f"cap {f.name} must be a positive integer, got {value!r}",
                                 "caps are positive")


def parse_caps(raw, base=None, source="HSTAR_CAPS"):
    """Apply a JSON object of overrides on top of ``base`` (default caps)."""
    base = Caps() if base is None else base
    try:
        overrides = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise HStarError(f"{source} is not valid JSON: {exc}", f"{source} is a JSON object")
    if not isinstance(overrides, dict):
        raise HStarError(f"{source} must be a JSON object", f"{source} is a JSON object")
    known = {f.name for f in dataclasses.fields(Caps)}
    unknown = set(overrides) - known
    if unknown:
        raise HStarError(f"unknown caps: {sorted(unknown)}", f"{source} names known caps")
    return dataclasses.replace(base, **overrides)


def load_caps(environ=None):
    """Return default caps updated from ``HSTAR_CAPS``."""
    environ = os.environ if environ is None else environ
    raw = environ.get("HSTAR_CAPS")
    return parse_caps(raw) if raw else Caps()


def resolve(caps):
    return load_caps() if caps is None else caps
