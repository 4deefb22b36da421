"""Factorizations, length sets, distances, catenary degrees."""

import itertools
import math
import random

import pytest

from zslen.budget import CapExceededError
from zslen.groups import AbelianGroup, parse_group
from zslen.sequences import Sequence, parse_sequence
from zslen.atoms import atom_set_for, davenport
from zslen.factorize import (
    Factorization,
    LengthSet,
    catenary_degree,
    delta_of_set,
    distance,
    factorizations,
    length_set,
    parse_length_set,
)


def brute_factorizations(b: Sequence):
    """Independent oracle: enumerate multisets of atoms by total length and
    keep the ones whose product is b."""
    aset = atom_set_for(b.group, b.support())
    atoms = list(aset.atoms)
    target = b.counts()
    total = len(b)
    results = set()

    def rec(start, remaining, chosen):
        if remaining == 0:
            prod = [0] * len(target)
            for a in chosen:
                for i, m in a.index_pairs():
                    prod[i] += m
            if tuple(prod) == target:
                results.add(tuple(sorted(chosen, key=Sequence.sort_key)))
            return
        for k in range(start, len(atoms)):
            if len(atoms[k]) <= remaining:
                rec(k, remaining - len(atoms[k]), chosen + [atoms[k]])

    rec(0, total, [])
    return results


def test_empty_sequence_has_one_empty_factorization():
    g = parse_group("C3")
    zs = factorizations(Sequence.empty(g))
    assert len(zs) == 1 and len(zs[0]) == 0
    assert length_set(Sequence.empty(g)) == LengthSet([0])


def test_atom_factors_only_as_itself():
    g = parse_group("C2xC4")
    u = parse_sequence(g, "(0,1)^3 (1,0) (1,1)")
    zs = factorizations(u)
    assert len(zs) == 1 and zs[0].parts == (u,)
    assert length_set(u) == LengthSet([1])


def test_lemma_style_length_sets():
    g = parse_group("C2xC4")
    u = parse_sequence(g, "(0,1)^3 (1,0) (1,1)")
    assert length_set(u * (-u)) == LengthSet([2, 4, 5])

    g55 = parse_group("C5xC5")
    u55 = Sequence(g55, [(1, 0)] * 4 + [(0, 1)] * 4 + [(1, 1)])
    assert length_set(u55 * (-u55)) == LengthSet([2, 5, 8, 9])


@pytest.mark.parametrize("r", [2, 3, 4])
def test_interval_plus_outlier_over_elementary_three_groups(r):
    g = AbelianGroup([3] * r)
    basis = g.standard_basis()
    e0 = g.zero()
    for e in basis:
        e0 = g.add(e0, e)
    u = Sequence(g, [e for e in basis for _ in range(2)] + [e0])
    expected = sorted(set(range(2, r + 3)) | {2 * r + 1})
    assert list(length_set(u * (-u))) == expected


def test_square_powers_formula():
    g = AbelianGroup([2, 2, 2, 2])
    v0 = Sequence(g, list(g.standard_basis()) + [(1, 1, 1, 1)])
    for k in (1, 2, 3):
        expected = LengthSet(2 * k + 3 * j for j in range(k + 1))
        assert length_set(v0 ** (2 * k)) == expected


def test_factorizations_against_brute_force():
    rng = random.Random(23)
    for spec in ("C5", "C2xC2", "C2xC4", "C3xC3"):
        g = parse_group(spec)
        elems = g.elements()
        done = 0
        while done < 12:
            s = Sequence(g, [rng.choice(elems) for _ in range(rng.randint(2, 7))])
            if not s.is_zero_sum():
                continue
            done += 1
            got = {z.parts for z in factorizations(s)}
            assert got == {tuple(sorted(c, key=Sequence.sort_key, reverse=True))
                           for c in brute_factorizations(s)}


def test_v0_squared_over_c2c2():
    g = AbelianGroup([2, 2])
    v0 = Sequence(g, [(1, 0), (0, 1), (1, 1)])
    zs = factorizations(v0 * v0)
    assert len(zs) == 2
    lengths = sorted(len(z) for z in zs)
    assert lengths == [2, 3]
    assert distance(zs[0], zs[1]) == 3
    assert catenary_degree(v0 * v0) == 3


def test_distance_properties():
    g = parse_group("C2xC4")
    u = parse_sequence(g, "(0,1)^3 (1,0) (1,1)")
    b = (u * (-u)) * (u * (-u))
    zs = factorizations(b)
    for z in zs:
        assert distance(z, z) == 0
    for z1, z2 in itertools.combinations(zs, 2):
        d = distance(z1, z2)
        assert d == distance(z2, z1)
        assert d >= 2 + abs(len(z1) - len(z2))
    with pytest.raises(ValueError):
        distance(zs[0], factorizations(u * (-u))[0])


def test_catenary_degree_bounds():
    g = parse_group("C2xC4")
    u = parse_sequence(g, "(0,1)^3 (1,0) (1,1)")
    assert catenary_degree(u) == 0  # single factorization
    b = u * (-u)
    ls = length_set(b)
    c = catenary_degree(b)
    deltas = ls.delta()
    assert 2 + max(deltas) <= c <= ls.max


def test_delta_of_set():
    assert delta_of_set([2, 4, 5]) == (2, 1)
    assert LengthSet([2, 4, 5]).delta() == (2, 1)
    assert LengthSet([2, 5, 8, 9]).delta() == (3, 3, 1)
    assert sorted(set(LengthSet([2, 5, 8, 9]).delta())) == [1, 3]
    assert LengthSet([7]).delta() == ()


def test_length_set_matches_explicit_factorizations():
    rng = random.Random(31)
    for spec in ("C5", "C2xC4", "C3xC3", "C9"):
        g = parse_group(spec)
        elems = g.elements()
        done = 0
        while done < 15:
            s = Sequence(g, [rng.choice(elems) for _ in range(rng.randint(0, 14))])
            if not s.is_zero_sum():
                continue
            done += 1
            zs = factorizations(s)
            assert length_set(s) == LengthSet(len(z) for z in zs)


def test_length_set_counting_bounds():
    rng = random.Random(37)
    for spec in ("C6", "C2xC4"):
        g = parse_group(spec)
        d = davenport(g)
        elems = g.elements()
        nonzero = [e for e in elems if e != g.zero()]
        done = 0
        while done < 15:
            s = Sequence(g, [rng.choice(nonzero) for _ in range(rng.randint(2, 10))])
            if not s.is_zero_sum():
                continue
            done += 1
            ls = length_set(s)
            assert math.ceil(len(s) / d) <= ls.min
            assert ls.max <= len(s) // 2  # zero-free sequences split into parts >= 2


def test_length_set_negation_and_products():
    rng = random.Random(41)
    g = parse_group("C3xC3")
    elems = g.elements()
    pairs = 0
    while pairs < 10:
        a = Sequence(g, [rng.choice(elems) for _ in range(rng.randint(0, 6))])
        b = Sequence(g, [rng.choice(elems) for _ in range(rng.randint(0, 6))])
        if not (a.is_zero_sum() and b.is_zero_sum()):
            continue
        pairs += 1
        assert length_set(-a) == length_set(a)
        la, lb, lab = length_set(a), length_set(b), length_set(a * b)
        assert set(x + y for x in la for y in lb) <= set(lab)


def test_factorization_cap():
    g = parse_group("C2xC2")
    v0 = Sequence(g, [(1, 0), (0, 1), (1, 1)])
    with pytest.raises(CapExceededError):
        factorizations(v0 ** 6, cap=3)


def test_errors_on_non_zero_sum():
    g = parse_group("C5")
    s = Sequence(g, [(1,)])
    with pytest.raises(ValueError):
        factorizations(s)
    with pytest.raises(ValueError):
        length_set(s)


def test_parse_length_set():
    assert parse_length_set("4,6,7") == LengthSet([4, 6, 7])
    assert parse_length_set("{2, 4, 5}") == LengthSet([2, 4, 5])
    with pytest.raises(ValueError):
        parse_length_set("")
    with pytest.raises(ValueError):
        parse_length_set("2,x")


def test_factorization_canonical_part_order():
    g = AbelianGroup([2, 2])
    v0 = Sequence(g, [(1, 0), (0, 1), (1, 1)])
    z = Factorization([Sequence(g, [(1, 0), (1, 0)]), v0, Sequence(g, [(0, 1), (0, 1)])])
    assert list(z.parts) == sorted(z.parts, key=Sequence.sort_key, reverse=True)
    assert z.product == v0 * Sequence(g, [(1, 0), (1, 0)]) * Sequence(g, [(0, 1), (0, 1)])
