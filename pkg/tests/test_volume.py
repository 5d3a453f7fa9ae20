from fractions import Fraction
from math import comb

import pytest

from delzant.corpus import DELZANT_CORPUS, load
from delzant.errors import ChamberCrossedError
from delzant.polynomial import MultiPoly
from delzant.volume import (
    boundary_volume_polynomial,
    chamber_samples,
    facet_volume_direct,
    facet_volume_sum,
    numeric_volume_at,
    volume_polynomial,
)

SAMPLE_COUNT_CAP = 40  # full >= C(d+m, m) sweep runs in the acceptance suite


def variables(n):
    return [MultiPoly.variable(n, i) for i in range(n)]


class TestVolumePolynomial:
    def test_unit_simplex_family(self, prepare):
        p = prepare("simplex_2")
        l1, l2, l3 = variables(3)
        s = l1 + l2 + l3
        assert p.vol.poly == s * s * Fraction(1, 2)
        assert p.vol.poly.evaluate((0, 0, 1)) == Fraction(1, 2)

    def test_unit_square_family(self, prepare):
        p = prepare("square_unit")
        l1, l2, l3, l4 = variables(4)
        assert p.vol.poly == (l1 + l2) * (l3 + l4)

    def test_hirzebruch_family(self, prepare):
        # rectangle of width l1+l2+l4 and height l2+l3, minus the corner
        # triangle of leg l2+l3 cut by the slanted facet; shoelace-verified
        p = prepare("hirzebruch_a")
        l1, l2, l3, l4 = variables(4)
        height = l2 + l3
        expected = height * (l1 + l2 + l4) - height * height * Fraction(1, 2)
        assert p.vol.poly == expected
        assert p.vol.poly.evaluate((0, 0, 1, 2)) == Fraction(3, 2)

    @pytest.mark.parametrize("name", DELZANT_CORPUS)
    def test_homogeneous_of_degree_m(self, name, prepare):
        p = prepare(name)
        assert all(sum(e) == p.spec.dim for e in p.vol.poly.terms())

    @pytest.mark.parametrize("name", DELZANT_CORPUS)
    def test_apex_choice_does_not_matter(self, name, prepare):
        p = prepare(name)
        other = volume_polynomial(p.spec, p.lattice, apex="greatest")
        assert other.poly == p.vol.poly


class TestBoundaryVolume:
    def test_unit_simplex(self, prepare):
        p = prepare("simplex_2")
        boundary = boundary_volume_polynomial(p.vol)
        l1, l2, l3 = variables(3)
        assert boundary.poly == (l1 + l2 + l3) * 3
        assert boundary.poly.evaluate((0, 0, 1)) == 3

    def test_unit_square(self, prepare):
        p = prepare("square_unit")
        boundary = boundary_volume_polynomial(p.vol)
        l1, l2, l3, l4 = variables(4)
        assert boundary.poly == (l1 + l2) * 2 + (l3 + l4) * 2
        assert boundary.poly.evaluate((0, 1, 0, 1)) == 4

    def test_segment_endpoints(self, prepare):
        p = prepare("segment_unit")
        l1, l2 = variables(2)
        assert p.vol.poly == l1 + l2
        boundary = boundary_volume_polynomial(p.vol)
        assert boundary.poly == MultiPoly.constant(2, 2)
        assert [q.evaluate((0, 1)) for q in boundary.per_facet] == [1, 1]

    @pytest.mark.parametrize("name", DELZANT_CORPUS)
    def test_degree_drops_by_one(self, name, prepare):
        p = prepare(name)
        boundary = boundary_volume_polynomial(p.vol)
        assert all(sum(e) == p.spec.dim - 1 for e in boundary.poly.terms())

    @pytest.mark.parametrize("name", DELZANT_CORPUS)
    def test_per_facet_summand_equals_direct_facet_volume(self, name, prepare):
        p = prepare(name)
        boundary = boundary_volume_polynomial(p.vol)
        offsets = p.spec.offsets()
        for i in range(p.spec.num_facets):
            derivative = boundary.per_facet[i].evaluate(offsets)
            direct = facet_volume_direct(p.spec, p.lattice, i)
            assert derivative == direct

    @pytest.mark.parametrize("name", DELZANT_CORPUS)
    def test_derivative_sum_equals_facet_volume_sum(self, name, prepare):
        p = prepare(name)
        boundary = boundary_volume_polynomial(p.vol)
        assert boundary.poly.evaluate(p.spec.offsets()) == facet_volume_sum(
            p.spec, p.lattice
        )


class TestNumericOracle:
    def test_simplex_at_anchor(self):
        assert numeric_volume_at(load("simplex_2"), (0, 0, 1)) == Fraction(1, 2)

    def test_simplex_at_rational_sample(self):
        # moving the first facet out by 1/3 gives legs of 4/3
        assert numeric_volume_at(load("simplex_2"), (Fraction(1, 3), 0, 1)) == Fraction(8, 9)

    def test_box_sample(self):
        assert numeric_volume_at(load("square_unit"), (0, 2, 0, 3)) == 6

    def test_chamber_crossing_detected(self):
        with pytest.raises(ChamberCrossedError):
            numeric_volume_at(load("simplex_2"), (0, 0, -5))

    def test_wrong_sample_length(self):
        with pytest.raises(ValueError):
            numeric_volume_at(load("simplex_2"), (0, 1))

    @pytest.mark.parametrize("name", DELZANT_CORPUS)
    def test_polynomial_matches_oracle_on_chamber_samples(self, name, prepare):
        p = prepare(name)
        wanted = min(
            comb(p.spec.num_facets + p.spec.dim, p.spec.dim), SAMPLE_COUNT_CAP
        )
        for sample in chamber_samples(p.spec, wanted):
            assert p.vol.poly.evaluate(sample) == numeric_volume_at(p.spec, sample)
