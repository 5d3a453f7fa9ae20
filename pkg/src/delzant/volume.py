"""Symbolic volume and boundary-volume polynomials of a polytope family.

The volume of the family Delta(o_1, ..., o_d) near the anchor offsets is a
single polynomial of degree m in the offsets.  It is computed by coning a
fixed combinatorial triangulation of the boundary from a base vertex: each
maximal simplex contributes det(v_i - v_0)/m! with the determinant taken
over the symbolic vertex coordinates (linear forms in the offsets) and its
sign frozen at the anchor.

The boundary volume is the derivative sum over all offsets; per facet it
equals the Euclidean facet volume divided by the length of the primitive
facet normal, which is also computed directly from a lattice basis of the
facet hyperplane as an independent cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .errors import ChamberCrossedError, DegenerateTriangulationError
from .linalg import int_inverse_unimodular, mat_vec, ring_det, unimodular_for_normal
from .polynomial import MultiPoly
from .polytope import FaceLattice, HalfSpaceSpec, feasible_vertex_points


@dataclass(frozen=True)
class VolumePolynomial:
    poly: MultiPoly
    degree: int
    anchor: tuple[int, ...]


@dataclass(frozen=True)
class BoundaryVolumePolynomial:
    poly: MultiPoly
    per_facet: tuple[MultiPoly, ...]


def _vertex_key(anchor):
    return (sum(anchor), tuple(anchor))


def _triangulate(faces, key, apex: str):
    """Recursive coning triangulation of the face with the given active set.

    ``faces`` maps active sets to (dim, vertex list); vertices are any
    objects with ``anchor`` and ``active_set`` attributes.  Returns tuples
    of dim+1 vertices each.
    """
    dim, vertices = faces[key]
    if dim == 0:
        return [(vertices[0],)]
    pick = max if apex == "greatest" else min
    base = pick(vertices, key=lambda v: _vertex_key(v.anchor))
    simplices = []
    for j in sorted(set(i for v in vertices for i in v.active_set) - set(key)):
        child = tuple(sorted(key + (j,)))
        if child not in faces or j in base.active_set:
            continue
        for simplex in _triangulate(faces, child, apex):
            simplices.append((base,) + simplex)
    return simplices


def _faces_by_key(points, m):
    """Face map for _triangulate from (vertex-like, active_set) data."""
    members: dict[tuple[int, ...], list] = {}
    for vertex in points:
        for size in range(m + 1):
            for subset in combinations(vertex.active_set, size):
                members.setdefault(subset, []).append(vertex)
    return {key: (m - len(key), vs) for key, vs in members.items()}


def volume_polynomial(
    spec: HalfSpaceSpec, lattice: FaceLattice, apex: str = "least"
) -> VolumePolynomial:
    """Degree-m volume polynomial, valid in the chamber of the anchor offsets."""
    m = spec.dim
    anchor = spec.offsets()
    faces = {key: (rec.dim, list(rec.charts)) for key, rec in lattice.faces.items()}
    total = MultiPoly.zero(spec.num_facets)
    for simplex in _triangulate(faces, (), apex):
        base = simplex[0]
        rows = [
            [v.symbolic[c] - base.symbolic[c] for c in range(m)]
            for v in simplex[1:]
        ]
        det = ring_det(rows)
        value = det.evaluate(anchor)
        if value == 0:
            raise DegenerateTriangulationError(
                f"triangulation simplex through {base.anchor} is degenerate at the anchor"
            )
        total = total + det if value > 0 else total - det
    poly = total * Fraction(1, factorial(m))
    return VolumePolynomial(poly=poly, degree=m, anchor=anchor)


def boundary_volume_polynomial(vol: VolumePolynomial) -> BoundaryVolumePolynomial:
    """Sum of the offset derivatives of the volume, kept per facet."""
    per_facet = tuple(
        vol.poly.differentiate(i) for i in range(vol.poly.nvars)
    )
    total = MultiPoly.zero(vol.poly.nvars)
    for p in per_facet:
        total = total + p
    return BoundaryVolumePolynomial(poly=total, per_facet=per_facet)


class _SamplePoint:
    __slots__ = ("anchor", "active_set")

    def __init__(self, anchor, active_set):
        self.anchor = anchor
        self.active_set = active_set


def _incidence(points):
    return sorted(active for _, active in points)


def numeric_volume_at(spec: HalfSpaceSpec, sample) -> Fraction:
    """Exact volume at a rational offset vector in the anchor's chamber.

    Independent of the symbolic route: vertices are re-enumerated at the
    sample, the boundary is re-triangulated, and the simplex volumes are
    summed with absolute values.  Raises ChamberCrossedError when the
    vertex-facet incidence at the sample differs from the anchor's.
    """
    sample = tuple(Fraction(v) for v in sample)
    if len(sample) != spec.num_facets:
        raise ValueError(f"expected {spec.num_facets} offsets, got {len(sample)}")
    normals = spec.normals()
    at_anchor = feasible_vertex_points(normals, spec.offsets())
    at_sample = feasible_vertex_points(normals, sample)
    if _incidence(at_anchor) != _incidence(at_sample):
        raise ChamberCrossedError(
            "sample offsets lie outside the chamber of the anchor offsets"
        )
    m = spec.dim
    points = [_SamplePoint(anchor, active) for anchor, active in at_sample]
    faces = _faces_by_key(points, m)
    total = Fraction(0)
    for simplex in _triangulate(faces, (), "least"):
        base = simplex[0]
        rows = [
            [v.anchor[c] - base.anchor[c] for c in range(m)]
            for v in simplex[1:]
        ]
        total += abs(ring_det(rows))
    return total / factorial(m)


def chamber_samples(spec: HalfSpaceSpec, count: int, seed: int = 0):
    """Deterministic rational offset samples verified to share the chamber.

    The anchor itself is the first sample; the rest are small perturbations,
    shrunk adaptively whenever a candidate crosses a chamber wall.
    """
    normals = spec.normals()
    anchor = spec.offsets()
    reference = _incidence(feasible_vertex_points(normals, anchor))
    rng = random.Random(seed)
    samples = [tuple(Fraction(o) for o in anchor)]
    denominator = 8
    misses = 0
    while len(samples) < count:
        candidate = tuple(
            o + Fraction(rng.randint(-3, 3), denominator) for o in anchor
        )
        if candidate in samples:
            continue
        if _incidence(feasible_vertex_points(normals, candidate)) == reference:
            samples.append(candidate)
            misses = 0
        else:
            misses += 1
            if misses >= 10:
                denominator *= 2
                misses = 0
    return samples


def facet_volume_direct(spec: HalfSpaceSpec, lattice: FaceLattice, facet: int) -> Fraction:
    """Lattice-normalized (m-1)-volume of a facet, from first principles.

    Facet vertices are mapped into coordinates on a lattice basis of the
    facet hyperplane (built from a unimodular completion of the normal) and
    the volume is summed over a triangulation there.  Equals the offset
    derivative of the volume polynomial evaluated at the anchor; tests and
    the cross-check command compare the two routes.
    """
    m = spec.dim
    record = lattice.resolve((facet,))
    if record is None:
        raise ValueError(f"facet {facet} carries no face")
    if m == 1:
        return Fraction(1)
    u_inv = int_inverse_unimodular(unimodular_for_normal(spec.facets[facet].normal))
    coords = {}
    for chart in record.charts:
        y = mat_vec(u_inv, chart.anchor_ints())
        coords[chart.active_set] = y[1:]
    faces = {
        tuple(sorted(set(key) - {facet})): (rec.dim, list(rec.charts))
        for key, rec in lattice.faces.items()
        if facet in key
    }
    total = Fraction(0)
    for simplex in _triangulate(faces, (), "least"):
        base = coords[simplex[0].active_set]
        rows = [
            [coords[v.active_set][c] - base[c] for c in range(m - 1)]
            for v in simplex[1:]
        ]
        total += abs(ring_det(rows))
    return total / factorial(m - 1)


def facet_volume_sum(spec: HalfSpaceSpec, lattice: FaceLattice) -> Fraction:
    return sum(
        (facet_volume_direct(spec, lattice, i) for i in range(spec.num_facets)),
        Fraction(0),
    )
