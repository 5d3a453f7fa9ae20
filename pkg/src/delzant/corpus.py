"""Bundled test corpus: every polytope the test suite exercises."""

from __future__ import annotations

from importlib import resources

from .polyfile import parse_polytope_file
from .polytope import HalfSpaceSpec

# Delzant polytopes, dimensions 1 through 4.
DELZANT_CORPUS = (
    "segment_unit",
    "segment_3",
    "simplex_2",
    "simplex_3",
    "simplex_4",
    "square_unit",
    "box_2x3",
    "square_shifted",
    "cube_unit",
    "cube_2",
    "hirzebruch_a",
    "hirzebruch_b",
    "prism",
    "simplex2x2",
    "pentagon",
)

# Deliberately invalid inputs for the negative paths.
NEGATIVE_CORPUS = (
    "triangle_det2",
    "pyramid_nonsimple",
)


def corpus_names() -> tuple[str, ...]:
    return DELZANT_CORPUS + NEGATIVE_CORPUS


def corpus_text(name: str) -> str:
    if name not in corpus_names():
        raise KeyError(f"no corpus polytope named {name!r}")
    return (
        resources.files("delzant")
        .joinpath("corpus_data", f"{name}.poly")
        .read_text(encoding="utf-8")
    )


def load(name: str) -> HalfSpaceSpec:
    return parse_polytope_file(corpus_text(name))
