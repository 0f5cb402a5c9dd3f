import math
import struct

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ixp_placement.errors import InputError, ValidationError
from ixp_placement.geodesy import (
    EARTH_RADIUS_KM,
    MAX_DISTANCE_KM,
    Coordinate,
    DistanceMatrix,
    Location,
    build_distance_matrix,
    great_circle_distance,
    min_max_pairs,
)

from oracles import (
    TABLE1_KM,
    TABLE1_MG_RE_ALT,
    haversine_km,
    law_of_cosines_expanded_km,
)

latitudes = st.floats(min_value=-90.0, max_value=90.0, allow_nan=False)
longitudes = st.floats(min_value=-180.0, max_value=180.0, allow_nan=False)
coordinates = st.builds(Coordinate, latitudes, longitudes)


def _bits(value: float) -> bytes:
    return struct.pack("<d", value)


class TestCoordinate:
    def test_valid(self):
        c = Coordinate(-20.8789, 55.4481)
        assert c.latitude_deg == -20.8789

    @pytest.mark.parametrize("lat,lon", [
        (90.0001, 0.0),
        (-91.0, 0.0),
        (0.0, 180.5),
        (0.0, -181.0),
        (float("nan"), 0.0),
        (0.0, float("inf")),
    ])
    def test_out_of_domain(self, lat, lon):
        with pytest.raises(InputError):
            Coordinate(lat, lon)

    def test_non_numeric(self):
        with pytest.raises(InputError):
            Coordinate("12.0", 3.0)

    def test_poles_and_dateline_accepted(self):
        Coordinate(90.0, 180.0)
        Coordinate(-90.0, -180.0)


class TestLocation:
    @pytest.mark.parametrize("iso", ["re", "REU", "R", "R2", "", "Ré"])
    def test_bad_iso(self, iso):
        with pytest.raises(ValidationError):
            Location(iso_code=iso, name="x", coordinate=Coordinate(0, 0))


class TestGreatCircleDistance:
    def test_identical_points_exactly_zero(self):
        p = Coordinate(-20.8789, 55.4481)
        assert great_circle_distance(p, p) == 0.0

    def test_equatorial_one_degree(self):
        # analytic arc with this radius: R * pi / 180
        expected = EARTH_RADIUS_KM * math.pi / 180.0
        assert great_circle_distance(Coordinate(0, 0), Coordinate(0, 1)) == pytest.approx(
            expected, rel=1e-9
        )

    def test_antipodal(self):
        d = great_circle_distance(Coordinate(0, 0), Coordinate(0, 180))
        assert d == pytest.approx(math.pi * EARTH_RADIUS_KM, rel=1e-12)

    def test_golden_mg_mu_pair(self, ioa_locations):
        by_iso = {loc.iso_code: loc for loc in ioa_locations}
        d = great_circle_distance(by_iso["MG"].coordinate, by_iso["MU"].coordinate)
        assert d == pytest.approx(1055.11, rel=0.02)

    def test_out_of_domain_rejected(self):
        with pytest.raises(InputError):
            great_circle_distance(Coordinate(0, 0), Coordinate(91, 0))

    @given(coordinates, coordinates)
    def test_symmetry_bit_exact(self, a, b):
        assert _bits(great_circle_distance(a, b)) == _bits(great_circle_distance(b, a))

    @given(coordinates)
    def test_identity(self, a):
        assert great_circle_distance(a, a) == 0.0

    @given(coordinates, coordinates)
    def test_range(self, a, b):
        d = great_circle_distance(a, b)
        assert 0.0 <= d <= MAX_DISTANCE_KM * (1 + 1e-12)

    @given(coordinates, coordinates, coordinates)
    def test_triangle_inequality(self, a, b, c):
        assert great_circle_distance(a, c) <= (
            great_circle_distance(a, b) + great_circle_distance(b, c) + 1e-6
        )

    @given(coordinates, coordinates)
    def test_agrees_with_haversine(self, a, b):
        d_h = haversine_km(a, b)
        if d_h <= 1.0:
            return
        d = great_circle_distance(a, b)
        assert abs(d - d_h) / d_h <= 1e-6

    @given(coordinates, coordinates)
    def test_agrees_with_expanded_form(self, a, b):
        d_e = law_of_cosines_expanded_km(a, b)
        if d_e <= 1.0:
            return
        d = great_circle_distance(a, b)
        assert abs(d - d_e) / d_e <= 1e-6

    @given(coordinates, st.floats(min_value=-1e-9, max_value=1e-9),
           st.floats(min_value=-1e-9, max_value=1e-9))
    def test_near_identical_no_nan(self, a, dlat, dlon):
        b = Coordinate(
            max(-90.0, min(90.0, a.latitude_deg + dlat)),
            max(-180.0, min(180.0, a.longitude_deg + dlon)),
        )
        d = great_circle_distance(a, b)
        assert not math.isnan(d)
        assert d >= 0.0


class TestBuildDistanceMatrix:
    def test_bundled_matches_golden_table(self, ioa_matrix):
        for (a, b), expected in TABLE1_KM.items():
            assert ioa_matrix.distance(a, b) == pytest.approx(expected, rel=0.02)
        # the source table prints the MG-RE pair twice with a small typo;
        # the computed value must sit within tolerance of both
        assert ioa_matrix.distance("MG", "RE") == pytest.approx(TABLE1_MG_RE_ALT, rel=0.02)
        assert ioa_matrix.distance("MG", "RE") == pytest.approx(857.09, rel=0.02)

    def test_diagonal_exactly_zero(self, ioa_matrix):
        assert np.all(np.diagonal(ioa_matrix.cells) == 0.0)

    def test_symmetry_bit_exact(self, ioa_matrix):
        assert np.array_equal(ioa_matrix.cells, ioa_matrix.cells.T)

    def test_sorted_by_iso(self):
        locs = [
            Location("YT", "y", Coordinate(-12.78, 45.23)),
            Location("MG", "m", Coordinate(-18.91, 47.53)),
        ]
        m = build_distance_matrix(locs)
        assert m.iso_codes == ("MG", "YT")

    def test_antipodal_pair(self):
        locs = [
            Location("AA", "a", Coordinate(0.0, 0.0)),
            Location("BB", "b", Coordinate(0.0, 180.0)),
        ]
        m = build_distance_matrix(locs)
        assert m.distance("AA", "BB") == pytest.approx(math.pi * EARTH_RADIUS_KM, rel=1e-9)
        assert m.distance("BB", "AA") == m.distance("AA", "BB")

    def test_too_few_locations(self):
        loc = Location("MG", "m", Coordinate(0, 0))
        with pytest.raises(ValidationError):
            build_distance_matrix([loc])

    def test_duplicate_iso(self):
        locs = [
            Location("MG", "a", Coordinate(0, 0)),
            Location("MG", "b", Coordinate(1, 1)),
        ]
        with pytest.raises(ValidationError, match="MG"):
            build_distance_matrix(locs)


class TestDistanceMatrixInvariants:
    def _locs(self, n):
        return tuple(
            Location(chr(65 + i) * 2, f"p{i}", Coordinate(float(i), float(i)))
            for i in range(n)
        )

    def test_rejects_asymmetry(self):
        cells = np.array([[0.0, 1.0], [2.0, 0.0]])
        with pytest.raises(ValidationError, match="symmetric"):
            DistanceMatrix(self._locs(2), cells)

    def test_rejects_nonzero_diagonal(self):
        cells = np.array([[0.5, 1.0], [1.0, 0.0]])
        with pytest.raises(ValidationError, match="diagonal"):
            DistanceMatrix(self._locs(2), cells)

    def test_rejects_negative_and_oversized(self):
        with pytest.raises(ValidationError):
            DistanceMatrix(self._locs(2), np.array([[0.0, -1.0], [-1.0, 0.0]]))
        big = MAX_DISTANCE_KM + 1.0
        with pytest.raises(ValidationError):
            DistanceMatrix(self._locs(2), np.array([[0.0, big], [big, 0.0]]))

    def test_rejects_non_finite(self):
        nan = float("nan")
        with pytest.raises(ValidationError):
            DistanceMatrix(self._locs(2), np.array([[0.0, nan], [nan, 0.0]]))

    def test_rejects_shape_mismatch(self):
        with pytest.raises(ValidationError):
            DistanceMatrix(self._locs(3), np.zeros((2, 2)))

    def test_cells_read_only(self, ioa_matrix):
        with pytest.raises(ValueError):
            ioa_matrix.cells[0, 1] = 5.0


class TestMinMaxPairs:
    def test_bundled_extremes(self, ioa_matrix):
        closest, farthest = min_max_pairs(ioa_matrix)
        assert (closest.iso_a, closest.iso_b) == ("MU", "RE")
        assert closest.km == pytest.approx(228.37, rel=0.02)
        assert (farthest.iso_a, farthest.iso_b) == ("RE", "SC")
        assert farthest.km == pytest.approx(1807.50, rel=0.02)

    def test_two_locations_single_pair(self):
        locs = [
            Location("AA", "a", Coordinate(0, 0)),
            Location("BB", "b", Coordinate(10, 10)),
        ]
        closest, farthest = min_max_pairs(build_distance_matrix(locs))
        assert closest == farthest
        assert (closest.iso_a, closest.iso_b) == ("AA", "BB")

    def test_ties_break_lexicographically(self):
        locs = tuple(
            Location(code, code.lower(), Coordinate(float(i), 0.0))
            for i, code in enumerate(["AA", "BB", "CC"])
        )
        cells = np.full((3, 3), 100.0)
        np.fill_diagonal(cells, 0.0)
        closest, farthest = min_max_pairs(DistanceMatrix(locs, cells))
        assert (closest.iso_a, closest.iso_b) == ("AA", "BB")
        assert (farthest.iso_a, farthest.iso_b) == ("AA", "BB")
