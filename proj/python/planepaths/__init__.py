"""Edge-disjoint plane spanning paths on point sets in general position.

Points are passed as sequences of integer (x, y) pairs; paths are lists of
point indices.
"""

import json

from . import _core
from ._core import (
    InputError,
    InternalError,
    convex_hull,
    find_paths,
    generate,
    is_wheel,
    max_disjoint_paths,
    render_svg,
    two_paths,
    validate,
    verify,
    wheel_paths,
)

__all__ = [
    "InputError",
    "InternalError",
    "convex_hull",
    "find_paths",
    "generate",
    "is_wheel",
    "max_disjoint_paths",
    "render_svg",
    "structural_search",
    "three_paths",
    "two_paths",
    "validate",
    "verify",
    "wheel_paths",
]


def three_paths(points):
    """Three pairwise edge-disjoint plane spanning paths (n >= 7)."""
    r = _core.three_paths(points)
    r["witness"] = json.loads(r["witness"])
    return r


def structural_search(points):
    return json.loads(_core.structural_search(points))
