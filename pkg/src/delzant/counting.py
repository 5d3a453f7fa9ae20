"""Brute-force lattice point counting and Ehrhart interpolation.

This is the ground-truth side of every identity in the package: points of
the integer bounding box of the k-fold dilate are enumerated one by one
and classified against the facet inequalities.  Counts are fitted by exact
interpolation, and every fit must predict one extra count correctly before
it is accepted as a polynomial.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .errors import BudgetExceededError, NotPolynomialError
from .polynomial import UniPoly
from .polytope import FaceLattice, HalfSpaceSpec, enumerate_vertices

DEFAULT_BUDGET = 10**8

REGIONS = ("full", "interior", "boundary", "face")


@dataclass(frozen=True)
class CountReport:
    k: int
    total: int
    interior: int
    boundary: int
    per_face: dict[tuple[int, ...], int] = field(default_factory=dict)


@dataclass(frozen=True)
class EhrhartPoly:
    poly: UniPoly
    kind: str
    face: tuple[int, ...] | None = None

    def to_text(self) -> str:
        return self.poly.to_text()


def _bounding_box(spec: HalfSpaceSpec, k: int, charts):
    anchors = [c.anchor_ints() for c in charts]
    lows = [k * min(a[c] for a in anchors) for c in range(spec.dim)]
    highs = [k * max(a[c] for a in anchors) for c in range(spec.dim)]
    return lows, highs


def _count_slab(normals, bounds, region, equality_set, lows, highs, axis0_range):
    m = len(lows)
    count = 0
    ranges = [axis0_range] + [range(lows[c], highs[c] + 1) for c in range(1, m)]
    for point in product(*ranges):
        inside = True
        tight = 0
        for j, normal in enumerate(normals):
            value = 0
            for c in range(m):
                value += normal[c] * point[c]
            if value > bounds[j]:
                inside = False
                break
            if value == bounds[j]:
                tight |= 1 << j
        if not inside:
            continue
        if region == "full":
            count += 1
        elif region == "interior":
            if tight == 0:
                count += 1
        elif region == "boundary":
            if tight != 0:
                count += 1
        else:  # face
            if tight & equality_set == equality_set:
                count += 1
    return count


def count_points(
    spec: HalfSpaceSpec,
    k: int,
    region: str = "full",
    *,
    face=None,
    budget: int = DEFAULT_BUDGET,
    charts=None,
    slabs: int = 1,
) -> int:
    """Exact lattice point count of the k-fold dilate (or a region of it).

    region 'face' counts the points of the face cut out by the given facet
    index set; an empty intersection simply counts zero.  The enumeration
    domain is the bounding box of the dilated vertices; its size is checked
    against ``budget`` before any work happens.
    """
    if k < 1:
        raise ValueError("dilation k must be a positive integer")
    if region not in REGIONS:
        raise ValueError(f"unknown region {region!r}")
    equality_set = 0
    if region == "face":
        if face is None:
            raise ValueError("region 'face' needs a facet index set")
        for i in face:
            if not 0 <= i < spec.num_facets:
                raise ValueError(f"facet index {i} out of range")
            equality_set |= 1 << i
    elif face is not None:
        raise ValueError("facet index set is only meaningful with region 'face'")

    if charts is None:
        charts = enumerate_vertices(spec)
    lows, highs = _bounding_box(spec, k, charts)
    size = 1
    for lo, hi in zip(lows, highs):
        size *= hi - lo + 1
    if size > budget:
        raise BudgetExceededError(required=size, budget=budget)

    normals = spec.normals()
    bounds = [k * o for o in spec.offsets()]
    axis0 = range(lows[0], highs[0] + 1)
    if slabs <= 1 or len(axis0) <= 1:
        return _count_slab(normals, bounds, region, equality_set, lows, highs, axis0)
    chunk = max(1, (len(axis0) + slabs - 1) // slabs)
    pieces = [
        range(axis0[i], min(axis0[i] + chunk, highs[0] + 1))
        for i in range(0, len(axis0), chunk)
    ]
    with ThreadPoolExecutor(max_workers=len(pieces)) as pool:
        futures = [
            pool.submit(
                _count_slab, normals, bounds, region, equality_set, lows, highs, piece
            )
            for piece in pieces
        ]
        return sum(f.result() for f in futures)


def count_report(
    spec: HalfSpaceSpec,
    lattice: FaceLattice,
    k: int,
    *,
    budget: int = DEFAULT_BUDGET,
    charts=None,
) -> CountReport:
    """Counts of the dilate, its interior and boundary, and every proper face."""
    if charts is None:
        charts = enumerate_vertices(spec)
    total = count_points(spec, k, "full", budget=budget, charts=charts)
    interior = count_points(spec, k, "interior", budget=budget, charts=charts)
    per_face = {
        rec.active_set: count_points(
            spec, k, "face", face=rec.active_set, budget=budget, charts=charts
        )
        for rec in lattice.proper_faces()
    }
    return CountReport(
        k=k,
        total=total,
        interior=interior,
        boundary=total - interior,
        per_face=per_face,
    )


def interpolate_counts(counts, degree: int, kind: str, face=None) -> EhrhartPoly:
    """Fit ``degree`` from counts at k = 1..degree+1 and verify at degree+2.

    ``counts`` is a callable k -> int.  The verification failure means the
    counts do not follow a polynomial of that degree, which for lattice
    input always signals a bug.
    """
    nodes = [(k, counts(k)) for k in range(1, degree + 2)]
    poly = UniPoly.interpolate(nodes)
    probe = degree + 2
    predicted = poly.evaluate(probe)
    actual = counts(probe)
    if predicted != actual:
        raise NotPolynomialError(
            f"{kind} counts are not a degree-{degree} polynomial: "
            f"predicted {predicted} at k={probe}, counted {actual}"
        )
    return EhrhartPoly(poly=poly, kind=kind, face=face)


def ehrhart_interpolate(
    spec: HalfSpaceSpec,
    kind: str = "full",
    *,
    face=None,
    lattice: FaceLattice | None = None,
    budget: int = DEFAULT_BUDGET,
    charts=None,
) -> EhrhartPoly:
    """Ehrhart polynomial of the polytope, its interior or boundary, or a face.

    Interpolation nodes start at k = 1; k = 0 is never used because the
    boundary count of the zero dilate is set-theoretically 1 while the
    boundary polynomial's constant term need not be.  The degree+2
    prediction check takes over the role of a k = 0 node.
    """
    if charts is None:
        charts = enumerate_vertices(spec)
    m = spec.dim
    if kind in ("full", "interior"):
        degree = m
    elif kind == "boundary":
        degree = m - 1
    elif kind == "face":
        if face is None:
            raise ValueError("kind 'face' needs a facet index set")
        if lattice is None:
            raise ValueError("kind 'face' needs the face lattice")
        record = lattice.resolve(face)
        if record is None:
            raise ValueError(f"facet set {tuple(face)} cuts out no face")
        face = record.active_set
        degree = record.dim
    else:
        raise ValueError(f"unknown Ehrhart kind {kind!r}")

    if kind == "face":
        counts = lambda k: count_points(
            spec, k, "face", face=face, budget=budget, charts=charts
        )
    else:
        counts = lambda k: count_points(spec, k, kind, budget=budget, charts=charts)
    return interpolate_counts(counts, degree, kind, face=face)
