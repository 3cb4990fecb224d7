"""Acceptance criteria, each checked at its stated tolerance and runtime budget.

Every test records a label and its measured quantities; ``conftest.py``
prints one PASS/FAIL line per criterion at the end of the run.
"""

import time
from contextlib import contextmanager
from math import comb, factorial

import pytest

from tcakit.dims import schur_dim, specht_dim, ssyt_count_oracle, syt_count_oracle
from tcakit.fields import FieldSpec
from tcakit.growth import estimate_slope, gk_free_tca, gk_sl2_invariants, gk_sym_triv2
from tcakit.invariants import (
    close_group,
    cyclic3_group,
    fixed_space_dims,
    flat_weight_crosscheck,
    molien_dims,
    new_generators_dims,
    power_sum_is_new,
    scalar_sign_group,
    swap_group,
    symmetric_group,
)
from tcakit.partitions import enumerate_partitions
from tcakit.symfunc import flat_weight_dim, lr_product
from tcakit.tensor_algebra import schur_weyl_decompose

Q = FieldSpec.rational()
F2 = FieldSpec.prime(2)


@contextmanager
def budget(record, seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    record("runtime", f"{elapsed:.2f}s (limit {seconds}s)")
    assert elapsed < seconds, f"runtime {elapsed:.2f}s exceeds {seconds}s"


@pytest.fixture
def record(record_property):
    return record_property


def slope(table, window):
    return float(estimate_slope(table, window).slope)


def test_criterion_01_free_tca_rank2_slope(record):
    record("label", "GK slope, free tca rank 2, [200,400] -> 3 +- 0.1")
    with budget(record, 5):
        s = slope(gk_free_tca(2, 0, 400), (200, 400))
    record("slope", f"{s:.4f}")
    assert abs(s - 3) <= 0.1


def test_criterion_02_free_tca_rank3_slope(record):
    record("label", "GK slope, free tca rank 3, [80,150] -> 6 +- 0.3")
    with budget(record, 30):
        s = slope(gk_free_tca(3, 0, 150), (80, 150))
    record("slope", f"{s:.4f}")
    assert abs(s - 6) <= 0.3


def test_criterion_03_sl2_invariants_slope(record):
    record("label", "GK slope, SL2 invariants: char 0 [100,400] -> 1 +- 0.05; char 2 [200,800] -> 1 +- 0.25")
    with budget(record, 5):
        s0 = slope(gk_sl2_invariants(0, 400), (100, 400))
        s2 = slope(gk_sl2_invariants(2, 800), (200, 800))
    record("slope char 0", f"{s0:.4f}")
    record("slope char 2", f"{s2:.4f}")
    assert abs(s0 - 1) <= 0.05
    assert abs(s2 - 1) <= 0.25


def test_criterion_04_sym_triv2_unbounded(record):
    record("label", "Sym(triv2) slopes strictly increase over [25,50],[50,100],[100,200], last > 8")
    with budget(record, 5):
        table = gk_sym_triv2(200)
        slopes = [slope(table, w) for w in [(25, 50), (50, 100), (100, 200)]]
    record("slopes", ", ".join(f"{s:.3f}" for s in slopes))
    assert slopes[0] < slopes[1] < slopes[2]
    assert slopes[2] > 8


def test_criterion_05_schur_weyl_oracle(record):
    record("label", "Schur-Weyl: character multiplicity = hook-content, sum mult * f = m^n (m<=3, n<=6)")
    with budget(record, 10):
        checked = 0
        for m in range(1, 4):
            for n in range(1, 7):
                mults = schur_weyl_decompose(m, n)
                assert set(mults) == set(enumerate_partitions(n))
                for lam, k in mults.items():
                    assert k == schur_dim(lam, m)
                    checked += 1
                assert sum(k * specht_dim(lam) for lam, k in mults.items()) == m**n
    record("shapes checked", checked)


def test_criterion_06_tableau_oracles(record):
    record("label", "specht = SYT (|lam|<=10), schur = SSYT (|lam|<=8, m<=4), sum f^2 = n! (n<=8)")
    with budget(record, 60):
        for n in range(11):
            for lam in enumerate_partitions(n):
                assert specht_dim(lam) == syt_count_oracle(lam)
        for n in range(9):
            for lam in enumerate_partitions(n):
                for m in range(1, 5):
                    assert schur_dim(lam, m) == ssyt_count_oracle(lam, m)
        for n in range(9):
            assert sum(specht_dim(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)


def test_criterion_07_monoidality(record):
    record("label", "flat_weight_dim(s_mu s_nu, d+e) = C(d+e,d) f^mu f^nu for |mu|,|nu| <= 5")
    with budget(record, 30):
        parts = [lam for n in range(6) for lam in enumerate_partitions(n)]
        pairs = 0
        for mu in parts:
            for nu in parts:
                d, e = mu.size(), nu.size()
                lhs = flat_weight_dim(lr_product(mu, nu), d + e)
                assert lhs == comb(d + e, d) * specht_dim(mu) * specht_dim(nu)
                pairs += 1
    record("pairs", pairs)


def test_criterion_08_modular_infinite_generation(record):
    record("label", "S2 swap over F2: new gens >= 1 and p_n new for n<=6; S3 on k^3 over F3: new gens >= 1 for n<=5")
    with budget(record, 120):
        swap = swap_group(F2)
        dims = new_generators_dims(swap, 6)
        witnesses = [power_sum_is_new(swap, n) for n in range(1, 7)]
        s3 = new_generators_dims(symmetric_group(3, FieldSpec.prime(3)), 5)
    record("swap/F2 new gens", dims)
    record("S3/F3 new gens", s3)
    assert all(d >= 1 for d in dims)
    assert all(witnesses)
    assert all(d >= 1 for d in s3)


def test_criterion_09_noether_bound(record):
    record("label", "non-modular Noether bound: new gens vanish for |G| < n <= |G|+2 (sign, swap, C3 over Q)")
    with budget(record, 60):
        seen = {}
        for name, G in [("sign", scalar_sign_group(Q)), ("swap", swap_group(Q)), ("C3", cyclic3_group(Q))]:
            dims = new_generators_dims(G, G.order + 2)
            seen[name] = dims
            assert dims[G.order:] == [0, 0], (name, dims)
    record("new gens", seen)


def _crosscheck_groups(field):
    groups = [
        close_group([[[1]]], field),
        close_group([[[1, 0], [0, 1]]], field),
        scalar_sign_group(field),
        swap_group(field),
        close_group([[[-1, 0], [0, -1]]], field),
    ]
    if field.kind == "rational":
        groups.append(cyclic3_group(field))
    else:
        groups.append(close_group([[[1, 1], [0, 1]]], field))
        groups.append(close_group([[[1, 1], [0, 1]], [[0, 1], [1, 0]]], field))  # GL_2(F_2)
    return groups


def test_criterion_10_flat_weight_crosscheck(record):
    record("label", "flat_weight_crosscheck for m <= 2, n <= 4 over Q and F2")
    with budget(record, 30):
        count = 0
        for field in (Q, F2):
            for G in _crosscheck_groups(field):
                for n in range(1, 5):
                    assert flat_weight_crosscheck(G, n), (field, G.generators, n)
                    count += 1
    record("cases", count)


def test_criterion_11_molien_vs_kernel(record):
    record("label", "molien_dims = fixed_space dims for non-modular groups, n <= 6")
    with budget(record, 30):
        groups = [
            scalar_sign_group(Q),
            swap_group(Q),
            cyclic3_group(Q),
            symmetric_group(3, Q),
            close_group([[[0, -1], [1, 0]]], Q),
            cyclic3_group(FieldSpec.prime(5)),
            cyclic3_group(FieldSpec.prime(7)),
            swap_group(FieldSpec.prime(3)),
            symmetric_group(3, FieldSpec.prime(5)),
        ]
        for G in groups:
            assert not G.is_modular()
            assert molien_dims(G, 6) == fixed_space_dims(G, 6), G.generators
    record("groups", len(groups))


def test_criterion_12_catalan(record):
    record("label", "specht_dim((2^m)) = C(2m,m)/(m+1) for m <= 6")
    with budget(record, 1):
        for m in range(7):
            assert specht_dim((2,) * m) * (m + 1) == comb(2 * m, m)
