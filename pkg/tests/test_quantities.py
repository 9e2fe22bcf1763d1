import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pytest import approx

from satlink import quantities as q
from satlink.errors import DomainError, OutOfBandError, ParseError, ValidationError


class TestDbConversions:
    def test_identity(self):
        assert q.db_from_linear(1.0) == 0.0
        assert q.linear_from_db(0.0) == 1.0

    def test_goldens(self):
        assert q.db_from_linear(19.95) == approx(13.0, abs=1e-3)
        assert q.db_from_linear(26.6) == approx(14.249, abs=1e-3)
        assert q.linear_from_db(13.0) == approx(19.95, abs=5e-3)
        assert q.linear_from_db(1.5) == approx(1.41, abs=5e-3)

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan, "x"])
    def test_db_from_linear_rejects(self, bad):
        with pytest.raises(DomainError):
            q.db_from_linear(bad)

    @pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan, None])
    def test_linear_from_db_rejects(self, bad):
        with pytest.raises(DomainError):
            q.linear_from_db(bad)

    @given(st.floats(min_value=-20.0, max_value=20.0))
    def test_round_trip(self, exponent):
        x = 10.0**exponent
        assert q.linear_from_db(q.db_from_linear(x)) == approx(x, rel=1e-12)


class TestPower:
    def test_views(self):
        p = q.Power(26.6)
        assert p.dbw == approx(14.249, abs=1e-3)
        assert p.dbm == p.dbw + 30.0

    @given(st.floats(min_value=-18.0, max_value=12.0))
    def test_dbm_offset_exact(self, exponent):
        p = q.Power(10.0**exponent)
        assert p.dbm == p.dbw + 30.0

    def test_from_db_round_trips(self):
        assert q.Power.from_dbw(14.0).dbw == approx(14.0, rel=1e-12)
        assert q.Power.from_dbm(23.0).watts == approx(0.199526, rel=1e-5)

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            q.Power(-1.0)

    def test_zero_watts_has_no_db_view(self):
        with pytest.raises(DomainError):
            q.Power(0.0).dbw


class TestPowerRatio:
    def test_round_trip(self):
        assert q.PowerRatio.from_db(1.5).linear == approx(1.41, abs=5e-3)
        assert q.PowerRatio(2.0).db == approx(3.0103, abs=1e-4)

    def test_rejects(self):
        with pytest.raises(DomainError):
            q.PowerRatio(-0.5)
        with pytest.raises(DomainError):
            q.PowerRatio(0.0).db


class TestAntennaGain:
    def test_isotropic_is_0_dbi(self):
        assert q.ISOTROPIC.linear == 1.0
        assert q.ISOTROPIC.dbi == 0.0

    def test_from_dbi(self):
        assert q.AntennaGain.from_dbi(13.0).linear == approx(19.95, abs=5e-3)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            q.AntennaGain(0.0)


class TestConstants:
    def test_defaults(self):
        c = q.DEFAULT_CONSTANTS
        assert c.c_m_per_s == 3.0e8
        assert c.boltzmann_j_per_k == 1.380649e-23
        assert c.earth_radius_km == 6371.0
        assert c.earth_perimeter_km == 40075.0
        assert c.earth_surface_km2 == 510.1e6
        assert c.t_ref_k == 290.0

    def test_boltzmann_db_view(self):
        assert q.DEFAULT_CONSTANTS.boltzmann_dbw_per_k_hz == approx(-228.6, abs=0.05)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValidationError):
            q.PhysicalConstants(c_m_per_s=0.0)

    def test_from_mapping_rejects_unknown_keys(self):
        with pytest.raises(ValidationError) as err:
            q.PhysicalConstants.from_mapping({"speed": 1.0})
        assert err.value.field == "speed"

    def test_from_file(self, tmp_path):
        path = tmp_path / "constants.json"
        path.write_text(json.dumps({"c_m_per_s": 299792458.0}))
        c = q.PhysicalConstants.from_file(path)
        assert c.c_m_per_s == 299792458.0
        assert c.earth_radius_km == 6371.0

    def test_from_file_malformed(self, tmp_path):
        path = tmp_path / "constants.json"
        path.write_text("{not json")
        with pytest.raises(ParseError):
            q.PhysicalConstants.from_file(path)


class TestNoiseTemperature:
    def test_goldens(self):
        assert q.noise_temperature_from_nf(7.0, 290.0) == approx(1163.4, abs=0.1)
        assert q.noise_temperature_from_nf(5.0, 290.0) == approx(627.0, abs=0.1)
        assert q.noise_temperature_from_nf(0.0, 290.0) == 0.0

    def test_rejects_negative_nf(self):
        with pytest.raises(DomainError):
            q.noise_temperature_from_nf(-0.1)
        with pytest.raises(DomainError):
            q.noise_temperature_from_nf(3.0, t_ref_k=0.0)

    @given(
        st.floats(min_value=0.0, max_value=30.0),
        st.floats(min_value=0.01, max_value=30.0),
    )
    def test_strictly_increasing(self, nf, step):
        assert q.noise_temperature_from_nf(nf + step) > q.noise_temperature_from_nf(nf)

    @given(
        st.floats(min_value=0.1, max_value=30.0),
        st.floats(min_value=10.0, max_value=1000.0),
    )
    def test_linear_in_t_ref(self, nf, t_ref):
        doubled = q.noise_temperature_from_nf(nf, 2.0 * t_ref)
        assert doubled == approx(2.0 * q.noise_temperature_from_nf(nf, t_ref), rel=1e-12)

    def test_inverse(self):
        t = q.noise_temperature_from_nf(7.0, 290.0)
        assert q.noise_figure_from_temperature(t, 290.0) == approx(7.0, rel=1e-12)


class TestWavelength:
    def test_goldens(self):
        assert q.wavelength(2e9) == approx(0.15, rel=1e-12)
        assert q.wavelength(3e8) == approx(1.0, rel=1e-12)
        assert q.wavelength(11.7e9) == approx(0.025641, rel=1e-4)

    def test_respects_constants(self):
        c = q.PhysicalConstants(c_m_per_s=299792458.0)
        assert q.wavelength(2e9, c) == approx(0.1498962, rel=1e-6)

    @pytest.mark.parametrize("bad", [0.0, -2e9, math.inf, math.nan])
    def test_rejects(self, bad):
        with pytest.raises(DomainError):
            q.wavelength(bad)


class TestBandLookup:
    @pytest.mark.parametrize(
        "freq_hz,direction,orbit,band",
        [
            (1990e6, q.UPLINK, q.ANY_ORBIT, "S"),
            (13.0e9, q.UPLINK, q.ANY_ORBIT, "Ku"),
            (11.7e9, q.DOWNLINK, q.ANY_ORBIT, "Ku"),
            (14.5e9, q.UPLINK, q.ANY_ORBIT, "Ku"),
            (2180e6, q.DOWNLINK, q.ANY_ORBIT, "S"),
            (19.0e9, q.DOWNLINK, q.GEO, "Ka"),
            (19.0e9, q.DOWNLINK, q.NON_GEO, "Ka"),
            (1620e6, q.UPLINK, q.NON_GEO, "L"),
            (1650e6, q.UPLINK, q.GEO, "L"),
            (3800e6, q.DOWNLINK, q.ANY_ORBIT, "C"),
            (48e9, q.UPLINK, q.ANY_ORBIT, "Q/V"),
        ],
    )
    def test_goldens(self, freq_hz, direction, orbit, band):
        assert q.band_lookup(freq_hz, direction, orbit) == band

    def test_out_of_band_reports_nearest(self):
        with pytest.raises(OutOfBandError) as err:
            q.band_lookup(100e9, q.DOWNLINK)
        assert err.value.nearest.band == "Q/V"
        assert "Q/V" in str(err.value)

    def test_orbit_qualifier_disambiguates(self):
        # 17.5 GHz downlink exists for geostationary service only
        assert q.band_lookup(17.5e9, q.DOWNLINK, q.GEO) == "Ka"
        with pytest.raises(OutOfBandError):
            q.band_lookup(17.5e9, q.DOWNLINK, q.NON_GEO)

    def test_s_band_downlink_gap_at_2ghz(self):
        # 2 GHz is a valid uplink but sits between the downlink intervals
        assert q.band_lookup(2000e6, q.UPLINK) == "S"
        with pytest.raises(OutOfBandError) as err:
            q.band_lookup(2000e6, q.DOWNLINK)
        assert err.value.nearest.band == "S"

    def test_every_interior_point_resolves_uniquely(self):
        for direction in (q.DOWNLINK, q.UPLINK):
            for orbit in (q.GEO, q.NON_GEO):
                for alloc in q.BAND_CATALOG:
                    if alloc.direction != direction:
                        continue
                    if alloc.orbit not in (orbit, q.ANY_ORBIT):
                        continue
                    for lo, hi in alloc.intervals_mhz:
                        mid = 0.5 * (lo + hi) * 1e6
                        matches = q.matching_allocations(mid, direction, orbit)
                        assert {m.band for m in matches} == {alloc.band}

    def test_rejects_bad_queries(self):
        with pytest.raises(DomainError):
            q.band_lookup(-1.0, q.UPLINK)
        with pytest.raises(DomainError):
            q.band_lookup(2e9, "sideways")
        with pytest.raises(DomainError):
            q.band_lookup(2e9, q.UPLINK, "polar")


class TestBandAllocationInvariants:
    def test_rejects_reversed_bounds(self):
        with pytest.raises(ValidationError):
            q.BandAllocation("X", q.ANY_ORBIT, q.DOWNLINK, ((200.0, 100.0),))

    def test_rejects_overlapping_intervals(self):
        with pytest.raises(ValidationError):
            q.BandAllocation("X", q.ANY_ORBIT, q.DOWNLINK, ((100.0, 200.0), (150.0, 250.0)))


class TestBandCatalogCsv:
    def test_shape_and_content(self):
        lines = q.band_catalog_csv().strip().splitlines()
        assert lines[0] == "band,orbit,direction,low_MHz,high_MHz"
        intervals = sum(len(a.intervals_mhz) for a in q.BAND_CATALOG)
        assert len(lines) == 1 + intervals
        assert "S,any,uplink,1980,2025" in lines
        assert "Ka,non-geo,downlink,17700,20200" in lines
