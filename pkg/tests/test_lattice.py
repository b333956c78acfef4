"""Quotient-lattice arithmetic and permutation helpers."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyweight.errors import CapExceeded, DimensionMismatch
from polyweight.lattice import (
    QuotientLattice,
    act,
    act_covector,
    compose,
    generate_group,
    identity_perm,
    inverse,
    is_perm,
    is_prime,
    pair,
    transposition,
    vec_add,
    vec_scale,
    vec_sub,
)

GSP4_KERNEL = ((1, -1, -1, 1),)
GO5_KERNEL = ((1, 0, -2, 0, 1), (0, 1, -2, 1, 0))

vectors4 = st.tuples(*([st.integers(-30, 30)] * 4))
vectors5 = st.tuples(*([st.integers(-30, 30)] * 5))


def kernel_point(lattice, coeffs):
    total = (0,) * len(lattice.kernel_basis[0])
    for c, k in zip(coeffs, lattice.kernel_basis):
        total = vec_add(total, vec_scale(c, k))
    return total


class TestQuotientLattice:
    def test_trivial_kernel_is_identity(self):
        lat = QuotientLattice(3)
        assert lat.canonical_rep((5, -2, 7)) == (5, -2, 7)
        assert lat.kernel_rank == 0 and lat.rank == 3

    def test_dependent_kernel_vectors_are_rejected(self):
        with pytest.raises(ValueError):
            QuotientLattice(4, ((1, -1, -1, 1), (2, -2, -2, 2)))

    @given(vectors4, st.integers(-5, 5))
    def test_canonical_rep_constant_on_cosets(self, v, c):
        lat = QuotientLattice(4, GSP4_KERNEL)
        shifted = vec_add(v, kernel_point(lat, (c,)))
        assert lat.canonical_rep(shifted) == lat.canonical_rep(v)
        assert lat.equal_mod_kernel(shifted, v)

    @given(vectors5, st.integers(-4, 4), st.integers(-4, 4))
    def test_canonical_rep_idempotent(self, v, c1, c2):
        lat = QuotientLattice(5, GO5_KERNEL)
        rep = lat.canonical_rep(vec_add(v, kernel_point(lat, (c1, c2))))
        assert lat.canonical_rep(rep) == rep
        assert lat.equal_mod_kernel(rep, v)

    @given(vectors4)
    def test_distinct_cosets_get_distinct_reps(self, v):
        lat = QuotientLattice(4, GSP4_KERNEL)
        w = vec_add(v, (1, 0, 0, 0))
        assert not lat.equal_mod_kernel(v, w)
        assert lat.canonical_rep(v) != lat.canonical_rep(w)

    def test_contains(self):
        lat = QuotientLattice(4, GSP4_KERNEL)
        assert lat.contains((2, -2, -2, 2))
        assert lat.contains((0, 0, 0, 0))
        assert not lat.contains((1, -1, -1, 0))

    def test_annihilates(self):
        lat = QuotientLattice(4, GSP4_KERNEL)
        assert lat.annihilates((1, 1, 0, 0))
        assert not lat.annihilates((1, 0, 0, 0))

    def test_dimension_mismatch(self):
        lat = QuotientLattice(3)
        with pytest.raises(DimensionMismatch):
            lat.canonical_rep((1, 2))

    @given(vectors4, st.integers(-5, 5))
    def test_halve_class_doubles_back(self, v, c):
        lat = QuotientLattice(4, GSP4_KERNEL)
        doubled = vec_scale(2, vec_add(v, kernel_point(lat, (c,))))
        half = lat.halve_class(doubled)
        assert lat.equal_mod_kernel(vec_scale(2, half), doubled)

    def test_halve_class_needs_even_class(self):
        lat = QuotientLattice(4, GSP4_KERNEL)
        # (1, 1, 1, 1) is even only through a kernel shift
        assert lat.halve_class((1, 1, 1, 1)) is not None
        with pytest.raises(ValueError):
            lat.halve_class((1, 0, 0, 0))


class TestPairing:
    def test_pairing_rejects_non_descending_covector(self):
        lat = QuotientLattice(4, GSP4_KERNEL)
        with pytest.raises(ValueError):
            pair((1, 0, 0, 0), (1, 0, 0, 0), lat)

    @given(vectors4, st.integers(-3, 3))
    def test_pairing_descends_to_quotient(self, v, c):
        lat = QuotientLattice(4, GSP4_KERNEL)
        cov = (1, -1, 1, -1)  # annihilates the kernel
        shifted = vec_add(v, kernel_point(lat, (c,)))
        assert pair(v, cov, lat) == pair(shifted, cov, lat)


class TestPermutations:
    def test_act_convention(self):
        # act(p, w) places w[i] at position p[i]
        p = (1, 2, 0)
        assert act(p, (10, 20, 30)) == (30, 10, 20)

    @given(st.permutations(range(5)), vectors5)
    def test_act_is_action(self, p, w):
        p = tuple(p)
        q = transposition(5, 0, 3)
        assert act(compose(p, q), w) == act(p, act(q, w))
        assert act(inverse(p), act(p, w)) == w

    @given(st.permutations(range(4)), vectors4)
    def test_covector_pairing_compatibility(self, p, w):
        # act_covector is the pullback: pairing against a moved weight
        # equals pairing the original weight against the moved covector
        p = tuple(p)
        cov = (2, -1, 0, 3)
        assert pair(act(p, w), cov) == pair(w, act_covector(p, cov))
        assert act_covector(inverse(p), act_covector(p, cov)) == cov

    def test_generate_group_s3(self):
        gens = (transposition(3, 0, 1), transposition(3, 1, 2))
        group = generate_group(gens)
        assert len(group) == 6
        assert identity_perm(3) in group
        assert all(is_perm(g) for g in group)

    def test_generate_group_cap(self):
        gens = (transposition(3, 0, 1), transposition(3, 1, 2))
        with pytest.raises(CapExceeded):
            generate_group(gens, cap=5)


def test_is_prime_small_values():
    primes = [2, 3, 5, 7, 11, 13, 97]
    composites = [-3, 0, 1, 4, 6, 9, 15, 91]
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(c) for c in composites)
