"""Group family construction data and hypothesis validation."""

import itertools

import pytest

from polyweight.errors import DomainError
from polyweight.groups import (
    build_gl,
    build_go_even,
    build_go_odd,
    build_gsp,
    build_levi,
    parse_group_spec,
    permute_d,
    validate_datum,
    x0_basis,
)
from polyweight.lattice import act, pair, transposition

ALL_GOOD = [
    build_gl(1),
    build_gl(2),
    build_gl(3),
    build_gsp(4),
    build_gsp(6),
    build_go_odd(3),
    build_go_odd(5),
    build_levi([2, 3]),
    build_levi([1, 1, 2]),
]


@pytest.mark.parametrize("datum", ALL_GOOD, ids=lambda d: d.spec_string)
def test_validation_passes(datum):
    report = validate_datum(datum)
    assert report.all_ok, report.witnesses


@pytest.mark.parametrize("datum", ALL_GOOD, ids=lambda d: d.spec_string)
def test_coroots_annihilate_kernel_and_ds(datum):
    lat = datum.lattice
    for cov in datum.simple_coroots:
        assert lat.annihilates(cov)
        for d in datum.d_vectors:
            assert pair(d, cov) == 0


@pytest.mark.parametrize("datum", ALL_GOOD, ids=lambda d: d.spec_string)
def test_generators_preserve_kernel(datum):
    lat = datum.lattice
    for g in datum.weyl_generators:
        for k in lat.kernel_basis:
            assert lat.contains(act(g, k))


def test_weyl_group_orders():
    assert len(build_gl(3).weyl_group()) == 6
    assert len(build_gsp(4).weyl_group()) == 8
    assert len(build_go_odd(5).weyl_group()) == 8
    assert len(build_levi([2, 3]).weyl_group()) == 12
    # index 2 in the full signed-permutation group of rank 4
    assert len(build_go_even(8).weyl_group()) == 192


def test_go_even_fails_exactly_c_lower():
    report = validate_datum(build_go_even(8))
    assert (report.a, report.b, report.c_upper, report.d) == (
        True,
        True,
        True,
        True,
    )
    assert not report.c_lower
    assert not report.all_ok
    assert any("c-lower" in w for w in report.witnesses)


def test_go_even_missing_transposition_is_within_block():
    datum = build_go_even(4)
    group = set(datum.weyl_group())
    # a single within-block sign swap is absent; the doubled one is present
    assert transposition(4, 0, 3) not in group
    assert transposition(4, 1, 2) not in group


def test_blocks_partition_indices():
    for datum in ALL_GOOD + [build_go_even(8)]:
        flat = sorted(i for blk in datum.blocks for i in blk)
        assert flat == list(range(datum.ambient_dim))


def test_gsp_pairing_structure():
    datum = build_gsp(4)
    assert datum.blocks == ((0, 3), (1, 2))
    assert datum.b == ((1, 0, 0, 1), (0, 1, 1, 0))
    assert datum.d_vectors == ((1, 0, 0, 1),)
    assert datum.lattice.kernel_basis == ((1, -1, -1, 1),)


def test_go_odd_middle_block():
    datum = build_go_odd(5)
    assert datum.blocks == ((0, 4), (1, 3), (2,))
    assert datum.d_vectors == ((0, 0, 1, 0, 0),)
    # short coroot is doubled, so its pairing diagonal entry is 2
    assert datum.basis_pairing_diag[-1] == 2
    short = datum.simple_coroots[-1]
    assert all(c % 2 == 0 for c in short)


def test_x0_basis():
    assert x0_basis(build_gl(2)) == ((1, 1),)
    assert x0_basis(build_levi([2, 3])) == (
        (1, 1, 0, 0, 0),
        (0, 0, 1, 1, 1),
    )


def test_weight_basis_spans_with_unit_coroot_pairings():
    for datum in ALL_GOOD:
        dual = datum.weight_basis[: len(datum.simple_coroots)]
        for k, lift in enumerate(dual):
            for j, cov in enumerate(datum.simple_coroots):
                expected = datum.basis_pairing_diag[k] if j == k else 0
                assert pair(lift, cov) == expected


class TestParseGroupSpec:
    @pytest.mark.parametrize(
        "text,family,dim",
        [
            ("gl:3", "gl", 3),
            ("gsp:6", "gsp", 6),
            ("go:5", "go_odd", 5),
            ("go:8", "go_even", 8),
            ("levi:2,3", "levi", 5),
            (" GL:2 ", "gl", 2),
        ],
    )
    def test_accepts(self, text, family, dim):
        datum = parse_group_spec(text)
        assert datum.family == family
        assert datum.ambient_dim == dim

    @pytest.mark.parametrize(
        "text",
        ["gl", "gl:", "gl:x", "sp:4", "levi:", "levi:2,-1", "gsp:5", "go:2"],
    )
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_group_spec(text)


class TestPermuteD:
    def test_swapped_levi_still_validates(self):
        datum = permute_d(build_levi([2, 3]), (1, 0))
        assert validate_datum(datum).all_ok
        assert datum.d_vectors == (
            (0, 0, 1, 1, 1),
            (1, 1, 0, 0, 0),
        )

    def test_identity_order_is_noop(self):
        levi = build_levi([2, 3])
        same = permute_d(levi, (0, 1))
        assert same.d_indices == levi.d_indices
        assert same.n_matrix == levi.n_matrix
        assert same.weight_basis == levi.weight_basis

    def test_three_block_cycle(self):
        levi = build_levi([1, 1, 2])
        cycled = permute_d(levi, (2, 0, 1))
        assert validate_datum(cycled).all_ok
        assert cycled.d_vectors == tuple(
            levi.d_vectors[j] for j in (2, 0, 1)
        )

    def test_rejects_non_permutation(self):
        with pytest.raises(DomainError):
            permute_d(build_levi([2, 3]), (0, 0))


@pytest.mark.parametrize(
    "builder,bad",
    [
        (build_gl, 0),
        (build_gsp, 3),
        (build_gsp, 0),
        (build_go_odd, 4),
        (build_go_odd, 1),
        (build_go_even, 5),
        (build_go_even, 2),
        (build_levi, []),
        (build_levi, [0, 2]),
    ],
)
def test_builders_reject_bad_sizes(builder, bad):
    with pytest.raises(ValueError):
        builder(bad)


def test_two_rho_pairs_to_two_with_simple_coroots():
    for datum in ALL_GOOD:
        for cov in datum.simple_coroots:
            assert pair(datum.positive_root_sum_twice, cov) == 2


def test_n_matrix_expands_b_over_d():
    for datum in ALL_GOOD + [build_go_even(8)]:
        lat = datum.lattice
        for b_vec, row in zip(datum.b, datum.n_matrix):
            combo = [0] * datum.ambient_dim
            for coeff, d_vec in zip(row, datum.d_vectors):
                for idx, dv in enumerate(d_vec):
                    combo[idx] += coeff * dv
            assert lat.equal_mod_kernel(b_vec, tuple(combo))
            assert min(row) >= 0


def test_weyl_group_cached_and_sorted():
    datum = build_gsp(4)
    first = datum.weyl_group()
    assert first is datum.weyl_group()
    assert list(first) == sorted(first)
