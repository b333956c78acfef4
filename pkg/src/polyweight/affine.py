"""Dot-action of the affine Weyl group and the shift-bijection check.

The affine group is the semidirect product of the finite Weyl group with
translations by p times the root lattice; it acts through the rho-shifted
dot-action.  Orbit slices are computed exactly by scanning a coordinate
box and testing lattice membership of the difference against each
group-twisted base point, so no completeness window is needed.  The
section-style shift bound a and the bijection check cover the rank-one
distinguished case.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classify import simple_membership
from .errors import DomainError, PreconditionError, ShiftRangeError
from .lattice import (
    QuotientLattice,
    _echelonize,
    act,
    check_dim,
    compose,
    vec_add,
    vec_scale,
    vec_sub,
)


def _span_lattice(n, vectors):
    """Quotient lattice whose kernel is the integer span of the vectors."""
    rows, _ = _echelonize(list(vectors), n)
    return QuotientLattice(n, tuple(rows))


def _proot_lattice(datum, p):
    """Span of p times the simple roots, cached per datum and prime."""
    key = ("proot-span", p)
    if key not in datum._cache:
        scaled = [vec_scale(p, root) for root in datum.simple_roots]
        datum._cache[key] = _span_lattice(datum.ambient_dim, scaled)
    return datum._cache[key]


def _orbit_lattice(datum, p):
    """Span of p times the simple roots plus the kernel sublattice."""
    key = ("orbit-span", p)
    if key not in datum._cache:
        gens = [vec_scale(p, root) for root in datum.simple_roots]
        gens.extend(datum.lattice.kernel_basis)
        datum._cache[key] = _span_lattice(datum.ambient_dim, gens)
    return datum._cache[key]


@dataclass(frozen=True)
class AffineElement:
    """A finite Weyl element together with a translation in p times the
    root lattice.  Build through ``affine_element`` so the translation
    constraint is verified."""

    w: tuple
    translation: tuple


def affine_element(w, translation, datum, p):
    n = datum.ambient_dim
    check_dim(w, n)
    check_dim(translation, n)
    if not _proot_lattice(datum, p).contains(translation):
        raise DomainError(
            f"translation {translation} is not in {p} times the root lattice"
        )
    return AffineElement(w=tuple(w), translation=tuple(translation))


def compose_affine(g, h, datum, p):
    """Product in the semidirect group: first apply h, then g."""
    return affine_element(
        compose(g.w, h.w),
        vec_add(g.translation, act(g.w, h.translation)),
        datum,
        p,
    )


def _rho_shift(w, datum):
    """A representative of half the class of w(2 rho) - 2 rho.

    The permutation realization of a reflection can differ from the
    reflection formula by a kernel element, so the ambient difference is
    only guaranteed even as a class; the quotient-exact halving picks a
    fixed representative.  Results are cached per group element.
    """
    cache = datum._cache.setdefault("rho-shift", {})
    if w not in cache:
        two_rho = datum.positive_root_sum_twice
        moved = vec_sub(act(w, two_rho), two_rho)
        if all(c % 2 == 0 for c in moved):
            cache[w] = tuple(c // 2 for c in moved)
        else:
            try:
                cache[w] = datum.lattice.halve_class(moved)
            except ValueError as exc:
                raise DomainError(
                    "rho shift class is not divisible; datum is inconsistent"
                ) from exc
    return cache[w]


def dot_act(g, weight, datum):
    """The rho-shifted action w(weight + rho) - rho + translation."""
    check_dim(weight, datum.ambient_dim)
    return vec_add(
        vec_add(act(g.w, weight), _rho_shift(g.w, datum)), g.translation
    )


@dataclass(frozen=True)
class OrbitSlice:
    """Distinct orbit classes meeting a coordinate box.

    ``elements`` holds one canonical representative per class; when the
    kernel is non-trivial the representative is the reduced form of a box
    member and may itself leave the box.
    """

    base: tuple
    box_radius: int
    elements: tuple


def orbit_in_box(weight, p, box_radius, datum):
    """All dot-orbit classes with a representative in the closed box.

    A box point x lies in the orbit of the base weight iff for some Weyl
    element w the difference x - (w.weight + half(w(2rho) - 2rho)) falls
    in p times the root lattice (plus the kernel, which ambient
    representatives carry invisibly).  The scan is exact: every box
    point is reduced to its canonical form modulo that translation span
    and matched against the twisted base forms.  The resulting element
    sets are cached per orbit, since every weight of one orbit produces
    the same slice.
    """
    n = datum.ambient_dim
    check_dim(weight, n)
    membership = _orbit_lattice(datum, p)
    base_forms = {
        membership.canonical_rep(vec_add(act(w, weight), _rho_shift(w, datum)))
        for w in datum.weyl_group()
    }
    cache = datum._cache.setdefault("orbit-slices", {})
    key = (p, box_radius, min(base_forms))
    if key not in cache:
        found = set()
        for x in itertools.product(
            range(-box_radius, box_radius + 1), repeat=n
        ):
            if membership.canonical_rep(x) in base_forms:
                found.add(datum.lattice.canonical_rep(x))
        cache[key] = tuple(sorted(found))
    return OrbitSlice(
        base=tuple(weight), box_radius=box_radius, elements=cache[key]
    )


def shift_bound_a(weight, ctx):
    """The maximal twisted distinguished coordinate, reduced mod p.

    Over the full Weyl group, take the distinguished-basis coordinate of
    w.weight + half(w(2rho) - 2rho) and reduce it into [0, p - 1]; the
    bound a is the maximum.  Only data whose distinguished sublattice has
    rank one carry this notion.
    """
    datum = ctx.datum
    if datum.x0_rank != 1:
        raise DomainError(
            "the shift bound needs a rank-one distinguished sublattice; "
            f"{datum.spec_string} has rank {datum.x0_rank}"
        )
    best = 0
    for w in datum.weyl_group():
        moved = vec_add(act(w, weight), _rho_shift(w, datum))
        value = ctx.x0_coordinates(moved)[0] % ctx.p
        if value > best:
            best = value
    return best


@dataclass(frozen=True)
class ShiftCheckResult:
    ok: bool
    counterexample: tuple | None
    orbit_size: int
    shift_bound: int


def check_shift_bijection(weight, i, ctx, box_radius):
    """Verify the shift equivalence on an orbit slice.

    For every orbit class mu in the box, membership of mu in the
    simple-polynomial set must match that of mu + i*b, b the
    distinguished weight.  The admissible range is 0 <= i <= p - a - 1
    with a the shift bound; i = 0 is vacuously true.  Classes without a
    restricted digit representative count as non-members on both sides.
    """
    datum = ctx.datum
    if not simple_membership(weight, ctx):
        raise PreconditionError(
            "the base weight is not in the simple-polynomial set"
        )
    a = shift_bound_a(weight, ctx)
    if i < 0 or i > ctx.p - a - 1:
        raise ShiftRangeError(
            f"shift index {i} outside the admissible range "
            f"[0, {ctx.p - a - 1}] for bound a = {a}"
        )
    if i == 0:
        return ShiftCheckResult(
            ok=True, counterexample=None, orbit_size=0, shift_bound=a
        )
    b = datum.d_vectors[0]
    step = vec_scale(i, b)
    elements = orbit_in_box(weight, ctx.p, box_radius, datum).elements
    for mu in elements:
        if simple_membership(mu, ctx) != simple_membership(
            vec_add(mu, step), ctx
        ):
            return ShiftCheckResult(
                ok=False,
                counterexample=mu,
                orbit_size=len(elements),
                shift_bound=a,
            )
    return ShiftCheckResult(
        ok=True, counterexample=None, orbit_size=len(elements), shift_bound=a
    )
