import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from tcakit.dims import LengthOracle, catalan, specht_dim
from tcakit.errors import GuardError, TcaError, UnsupportedLengthError
from tcakit.growth import (
    GrowthTable,
    SlopeEstimate,
    estimate_slope,
    gk_free_tca,
    gk_sl2_invariants,
    gk_sym_triv2,
    rescale,
    sl2_piece_length,
)
from tcakit.partitions import enumerate_partitions
from tcakit.tensor_algebra import schur_weyl_decompose


def power_table(k, N):
    return GrowthTable("power", 0, tuple((n, n**k) for n in range(1, N + 1)))


def test_free_tca_examples():
    assert gk_free_tca(1, 0, 20).values() == list(range(1, 22))
    assert gk_free_tca(2, 0, 2)[2] == 7
    assert gk_free_tca(3, 0, 0)[0] == 1


@pytest.mark.parametrize("m", [1, 2, 3])
def test_free_tca_increments_match_schur_weyl(m):
    table = gk_free_tca(m, 0, 8)
    for N in range(1, 9):
        assert table[N] - table[N - 1] == sum(schur_weyl_decompose(m, N).values())


def test_free_tca_char_p():
    assert gk_free_tca(1, 2, 10).values() == list(range(1, 12))
    with pytest.raises(UnsupportedLengthError):
        gk_free_tca(3, 2, 5)
    with pytest.raises(UnsupportedLengthError):
        gk_free_tca(2, 3, 5)  # (2,1) has no default length in characteristic 3
    custom = gk_free_tca(2, 3, 6, LengthOracle(3, lambda lam: 1))
    assert custom.values() == gk_free_tca(2, 0, 6).values()
    with pytest.raises(TcaError):
        gk_free_tca(2, 3, 6, LengthOracle(5, lambda lam: 1))
    with pytest.raises(TcaError):
        gk_free_tca(2, 4, 6)


def test_sym_triv2_examples():
    t = gk_sym_triv2(5)
    assert t[0] == 1 and t[1] == 2 and t[5] == 19
    assert t.metadata["bound"] == "exact"
    assert gk_sym_triv2(5, 2).metadata["bound"] == "lower"
    with pytest.raises(GuardError):
        gk_sym_triv2(10_001)


def test_sym_triv2_against_enumeration():
    t = gk_sym_triv2(25)
    running = 0
    for n in range(26):
        running += len(enumerate_partitions(n))
        assert t[n] == running


def test_sl2_examples():
    t = gk_sl2_invariants(0, 10)
    assert t[10] == 6 and t[9] == 5 and t[0] == 1
    assert sl2_piece_length(3, 2) == 1  # raw estimate 1
    assert sl2_piece_length(1, 2) == 1  # raw estimate 0, floored
    assert sl2_piece_length(7, 2) == 2
    t2 = gk_sl2_invariants(2, 6)
    assert 1 in t2.metadata["floored_at_one"]


@pytest.mark.parametrize("m", range(1, 7))
def test_catalan_consistency(m):
    # the degree-2m piece of the char-0 SL_2 invariants is S^(2^m), of dimension Catalan(m) and length 1
    assert specht_dim((2,) * m) == catalan(m) == math.comb(2 * m, m) // (m + 1)
    t = gk_sl2_invariants(0, 2 * m)
    assert t[2 * m] - t[2 * m - 1] == 1


@pytest.mark.parametrize("table", [gk_free_tca(2, 0, 30), gk_sym_triv2(60), gk_sl2_invariants(2, 100),
                                   gk_sl2_invariants(3, 100)])
def test_tables_are_monotone_and_start_at_one(table):
    vals = table.values()
    assert vals == sorted(vals)
    assert table[0] == 1


def test_monotonicity_is_enforced():
    with pytest.raises(TcaError):
        GrowthTable("bad", 0, ((0, 3), (1, 2)))
    with pytest.raises(TcaError):
        GrowthTable("bad", 0, ((1, 3), (1, 4)))


def test_slope_examples():
    assert estimate_slope(power_table(1, 50), (2, 50)).slope == 1
    est = estimate_slope(power_table(3, 100), (10, 100))
    assert abs(est.slope - 3) < 1e-9
    assert est.residual < 1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(1, 40), st.integers(2, 40))
def test_exact_power_laws(k, lo, width):
    est = estimate_slope(power_table(k, lo + width), (lo, lo + width))
    assert abs(float(est.slope) - k) < 1e-9


def test_slope_window_errors():
    t = power_table(2, 20)
    for window in [(5, 5), (0, 10), (10, 30), (8, 3)]:
        with pytest.raises(TcaError):
            estimate_slope(t, window)


def test_slope_is_deterministic_and_serializes():
    t = gk_free_tca(2, 0, 60)
    a = estimate_slope(t, (30, 60))
    b = estimate_slope(t, (30, 60))
    assert a == b
    data = json.loads(json.dumps(a.to_json()))
    assert data["window"] == [30, 60]
    assert float(data["slope"]) == pytest.approx(float(a.slope), abs=1e-12)
    assert SlopeEstimate.from_json(data).slope == a.slope


def test_free_tca_slopes():
    assert abs(estimate_slope(gk_free_tca(2, 0, 400), (200, 400)).slope - 3) <= 0.1


def test_generator_robustness():
    base = gk_free_tca(2, 0, 800)
    wide = rescale(base, 2)
    s1 = estimate_slope(base, (200, 400)).slope
    s2 = estimate_slope(wide, (200, 400)).slope
    assert abs(s1 - s2) <= 0.1
    assert wide[10] == base[20]


def test_sym_triv2_slopes_increase():
    t = gk_sym_triv2(200)
    slopes = [estimate_slope(t, w).slope for w in [(25, 50), (50, 100), (100, 200)]]
    assert slopes == sorted(slopes) and len(set(slopes)) == 3


def test_table_roundtrips():
    t = gk_sl2_invariants(2, 40)
    again = GrowthTable.from_json(json.loads(json.dumps(t.to_json())))
    assert again == t and again.metadata == t.metadata
    csv_text = t.to_csv()
    assert csv_text.startswith("N,f\n0,1\n")
    assert GrowthTable.parse(csv_text).entries == t.entries
    assert GrowthTable.parse(json.dumps(t.to_json())) == t
    with pytest.raises(TcaError):
        GrowthTable.from_csv("a,b\n1,2\n")


def test_big_integers_survive_serialization():
    t = gk_sym_triv2(2000)
    assert t[2000] > 2**64
    assert GrowthTable.from_json(json.dumps(t.to_json()))[2000] == t[2000]
