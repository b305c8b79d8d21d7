"""Schur basis, structure constants, duality pairing, and the
restriction complex."""

import pytest

from cobalt.errors import BoundExceeded, InputError, PartitionOutOfBox
from cobalt.grassmann import (
    GrassRing,
    complex_report,
    determinant_identities,
    gram_report,
    grassmannian,
    partitions_in_box,
    partitions_of,
    schur_polynomial,
    size_limit,
    verify_ranks,
)

from lr_oracle import oracle_multiply


def test_partitions_in_box():
    assert partitions_in_box(2, 2) == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]
    assert partitions_of(3, 2, 2) == [(2, 1)]
    assert partitions_of(0, 2, 2) == [()]
    assert partitions_of(5, 2, 2) == []
    assert partitions_in_box(0, 3) == [()]
    assert partitions_in_box(3, 0) == [()]


def test_rank_and_top():
    assert grassmannian(4, 2).rank == 6
    assert grassmannian(2, 1).rank == 2
    assert grassmannian(7, 3).rank == 35
    assert grassmannian(4, 2).top == (2, 2)
    assert grassmannian(3, 3).top == ()


def test_schur_fixtures():
    G = grassmannian(4, 2)
    x1, x2 = G.ring.gen("x1"), G.ring.gen("x2")
    assert G.schur(()) == G.ring.one()
    assert G.schur((1,)) == x1
    assert G.schur((1, 1)) == x1 ** 2 - x2
    assert G.schur((2,)) == x2
    assert G.schur((2, 1)) == x1 * x2
    assert G.schur((2, 2)) == x2 ** 2


def test_relations_are_inverse_series():
    G = grassmannian(4, 2)
    x1, x2 = G.ring.gen("x1"), G.ring.gen("x2")
    # inverse series coefficients in degrees 3 and 4
    rels = {r.adams_degree(): r for r in G.ring.relations}
    assert rels[3] == -(x1 ** 3) + 2 * x1 * x2
    assert rels[4] == x1 ** 4 - 3 * x1 ** 2 * x2 + x2 ** 2


def test_check_partition():
    G = grassmannian(4, 2)
    assert G.check_partition((2, 1, 0)) == (2, 1)
    for bad in [(3,), (1, 1, 1), (1, 2), (-1,)]:
        with pytest.raises(PartitionOutOfBox):
            G.check_partition(bad)


def test_reduce_round_trip():
    G = grassmannian(5, 2)
    for lam in G.partitions():
        assert G.reduce(G.schur(lam)) == {lam: 1}
    # relations reduce to zero
    for rel in G.ring.relations:
        assert G.reduce(rel) == {}


def test_pieri_fixture():
    G = grassmannian(4, 2)
    assert G.multiply((1,), (1,)) == {(2,): 1, (1, 1): 1}
    assert G.multiply((2, 1), (1,)) == {(2, 2): 1}
    assert G.multiply((2, 2), (1,)) == {}


def test_structure_constants_against_oracle():
    for n in range(1, 5):
        for d in range(n + 1):
            G = grassmannian(n, d)
            parts = G.partitions()
            for a in parts:
                for b in parts:
                    got = G.multiply(a, b)
                    want = oracle_multiply(a, b, G.d, G.r)
                    assert got == want, (n, d, a, b, got, want)


def test_oracle_symmetry():
    G = grassmannian(5, 2)
    parts = G.partitions()
    for a in parts:
        for b in parts:
            assert oracle_multiply(a, b, 2, 3) == oracle_multiply(b, a, 2, 3)


def test_complement_and_pairing():
    G = grassmannian(4, 2)
    assert G.complement((1,)) == (2, 1)
    assert G.complement(()) == (2, 2)
    assert G.pairing((1,), (2, 1)) == 1
    assert G.pairing((1,), (1, 1)) == 0
    assert G.pairing((1,), (1,)) == 0
    assert G.pairing((2, 2), ()) == 1


def test_gram_report():
    assert gram_report(4, 2) == (True, None)
    assert gram_report(5, 2) == (True, None)
    assert gram_report(3, 3) == (True, None)


def test_verify_ranks():
    for n, d in [(2, 1), (4, 2), (5, 2), (5, 3), (3, 0), (3, 3)]:
        ok, witness = verify_ranks(n, d)
        assert ok, witness


def test_determinant_identities():
    for n, d in [(2, 1), (4, 2), (5, 3), (5, 2), (4, 4)]:
        ok, witness = determinant_identities(n, d)
        assert ok, witness


def test_padding_identity_is_nontrivial():
    # same partition, different row count, same polynomial
    G = grassmannian(5, 3)
    assert schur_polynomial(G.ring, (2, 1), 3) == \
        schur_polynomial(G.ring, (2, 1), 2)


def test_complex_report():
    for n, d in [(2, 1), (3, 1), (3, 2), (4, 2), (5, 2), (4, 4), (3, 0)]:
        report = complex_report(n, d)
        assert report["ok"], (n, d, report)


def test_size_limit(monkeypatch):
    with pytest.raises(BoundExceeded):
        GrassRing(9, 2)
    monkeypatch.setenv("COBALT_MAX_N", "9")
    assert size_limit() == 9
    G = GrassRing(9, 2)
    assert G.rank == 36
    monkeypatch.setenv("COBALT_MAX_N", "junk")
    with pytest.raises(InputError):
        size_limit()


def test_bad_arguments():
    with pytest.raises(InputError):
        GrassRing(3, 4)
    with pytest.raises(InputError):
        GrassRing(-1, -1)
