import json
import random
from fractions import Fraction
from itertools import permutations, product
from math import factorial

import pytest

from tcakit.dims import schur_dim, specht_dim
from tcakit.errors import GuardError, TcaError
from tcakit.partitions import Partition, enumerate_partitions
from tcakit.tensor_algebra import (
    CharacterTable,
    SnCharacter,
    character_table,
    class_size,
    compose,
    cycle_type,
    schur_weyl_decompose,
    sign_of_cycle_type,
    sn_act,
    tensor_power_character,
    word_index,
    words,
)


def test_sn_act_examples():
    assert sn_act((1, 2, 3), (1, 2, 3)) == (1, 2, 3)
    assert sn_act((2, 1), (1, 2)) == (2, 1)
    # the 3-cycle 1 -> 2 -> 3 -> 1 in one-line notation is (2, 3, 1)
    assert sn_act((2, 3, 1), (1, 2, 3)) == (3, 1, 2)


def test_sn_act_matches_displayed_formula():
    # output position i carries the letter at position sigma^{-1}(i)
    for sigma in permutations(range(1, 5)):
        inverse = {s: i + 1 for i, s in enumerate(sigma)}
        w = (1, 2, 3, 4)
        assert sn_act(sigma, w) == tuple(w[inverse[i] - 1] for i in range(1, 5))


def test_sn_act_degree_mismatch():
    with pytest.raises(TcaError):
        sn_act((2, 1), (1, 2, 3))


@pytest.mark.parametrize("n", range(1, 7))
def test_left_action_law(n):
    rng = random.Random(n)
    for _ in range(30):
        sigma = tuple(rng.sample(range(1, n + 1), n))
        tau = tuple(rng.sample(range(1, n + 1), n))
        w = tuple(rng.randint(1, 3) for _ in range(n))
        assert sn_act(compose(sigma, tau), w) == sn_act(sigma, sn_act(tau, w))


def test_transposition_composition():
    s1, s2 = (2, 1, 3), (1, 3, 2)
    w = (1, 2, 3)
    assert sn_act(compose(s1, s2), w) == sn_act(s1, sn_act(s2, w))


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_by_counting(n):
    counts = {}
    for sigma in permutations(range(1, n + 1)):
        rho = cycle_type(sigma)
        counts[rho] = counts.get(rho, 0) + 1
    assert counts == {rho: class_size(rho) for rho in enumerate_partitions(n)}


def test_character_table_small_cases():
    t = character_table(2)
    assert t.row((2,)) == {Partition([2]): 1, Partition([1, 1]): 1}
    assert t[(1, 1), (1, 1)] == 1 and t[(1, 1), (2,)] == -1


@pytest.mark.parametrize("n", range(1, 9))
def test_trivial_sign_and_degrees(n):
    t = character_table(n)
    for rho in t.classes:
        assert t[(n,), rho] == 1
        assert t[(1,) * n, rho] == sign_of_cycle_type(rho)
    for lam in t.shapes:
        assert t[lam, (1,) * n] == specht_dim(lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_row_orthogonality(n):
    t = character_table(n)
    for lam in t.shapes:
        for mu in t.shapes:
            total = sum(class_size(rho) * t[lam, rho] * t[mu, rho] for rho in t.classes)
            assert total == (factorial(n) if lam == mu else 0)


def _young_permutation_character(mu, sigma):
    """Trace of sigma on the permutation module of row tabloids of shape mu (brute force)."""
    n = mu.size()
    fixed = 0
    # a tabloid = assignment of each of 1..n to a row, with row i of size mu[i]
    for rows in product(range(len(mu)), repeat=n):
        if [rows.count(i) for i in range(len(mu))] != list(mu):
            continue
        if all(rows[sigma[k] - 1] == rows[k] for k in range(n)):
            fixed += 1
    return fixed


@pytest.mark.parametrize("n", range(1, 6))
def test_young_rule_against_brute_force_permutation_modules(n):
    # M^mu = sum_lambda K_{lambda mu} S^lambda with K_{mu mu} = 1, K lower unitriangular in dominance;
    # check triangularity and nonnegativity of the decomposition computed with the table
    t = character_table(n)
    reps = {}
    for sigma in permutations(range(1, n + 1)):
        reps.setdefault(cycle_type(sigma), sigma)
    for mu in t.shapes:
        chi = SnCharacter(n, {rho: _young_permutation_character(mu, reps[rho]) for rho in t.classes})
        mults = chi.decompose()
        assert mults[mu] == 1
        for lam, k in mults.items():
            if k:
                # lambda dominates mu
                assert all(sum(lam[:i]) >= sum(mu[:i]) for i in range(1, n + 1))


def test_character_table_guard():
    with pytest.raises(GuardError):
        character_table(11)


def test_character_table_json_roundtrip():
    t = character_table(4)
    data = json.loads(json.dumps(t.to_json()))
    assert data["rows"][0] == "4" and data["columns"][-1] == "1,1,1,1"
    assert CharacterTable.from_json(data) == t


def test_tensor_power_character_examples():
    chi = tensor_power_character(3, 4)
    assert chi[(1, 1, 1, 1)] == 81
    assert chi[(4,)] == 3
    assert tensor_power_character(2, 3)[(2, 1)] == 4


def test_tensor_power_character_by_counting_fixed_words():
    for m, n in [(2, 3), (3, 3), (2, 4)]:
        chi = tensor_power_character(m, n)
        for sigma in permutations(range(1, n + 1)):
            fixed = sum(1 for w in product(range(1, m + 1), repeat=n) if sn_act(sigma, w) == w)
            assert chi[cycle_type(sigma)] == fixed


def test_schur_weyl_examples():
    assert schur_weyl_decompose(2, 2) == {Partition([2]): 3, Partition([1, 1]): 1}
    for n in range(1, 7):
        mults = schur_weyl_decompose(1, n)
        assert mults[Partition([n])] == 1
        assert sum(mults.values()) == 1
    assert schur_weyl_decompose(2, 4)[Partition([1, 1, 1, 1])] == 0


@pytest.mark.parametrize("m", range(1, 4))
@pytest.mark.parametrize("n", range(1, 7))
def test_schur_weyl_equals_hook_content(m, n):
    mults = schur_weyl_decompose(m, n)
    for lam, k in mults.items():
        assert k == schur_dim(lam, m)
    assert sum(k * specht_dim(lam) for lam, k in mults.items()) == m**n


def test_schur_weyl_guard():
    with pytest.raises(GuardError):
        schur_weyl_decompose(2, 9)


def test_sn_character_requires_all_classes_and_roundtrips():
    with pytest.raises(TcaError):
        SnCharacter(3, {Partition([3]): 1})
    chi = tensor_power_character(2, 3)
    again = SnCharacter.from_json(json.loads(json.dumps(chi.to_json())))
    assert again == chi
    assert chi.degree() == Fraction(8)


def test_word_basis():
    ws = words(2, 3)
    assert len(ws) == 8 and ws[0] == (1, 1, 1) and ws[-1] == (2, 2, 2)
    assert all(word_index(w, 2) == i for i, w in enumerate(ws))
