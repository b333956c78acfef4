"""Membership predicates, the digit decomposition, and enumeration.

The classification machinery answers five questions about a character
class: polynomiality (sign of the functional), restrictedness (coroot
pairings inside the digit window), the digit-set membership combining
both with distinguished shifts, the unique base-plus-multiple
decomposition, and enumeration of the full digit set.  A context object
fixes the group datum and the modulus p^r, rejects data failing a
construction hypothesis, and precomputes exact integer coordinates for
the weight-basis expansion used by the decomposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DecompositionUnavailable,
    DomainError,
    HypothesisFailure,
    PreconditionError,
)
from .groups import GroupDatum
from .lattice import (
    act,
    check_dim,
    is_prime,
    pair,
    vec_add,
    vec_scale,
    vec_sub,
)
from .phi import PhiData, phi_ambient, tables_for


def _failed_hypotheses(report):
    names = []
    for attr, label in (
        ("a", "(a)"),
        ("b", "(b)"),
        ("c_lower", "(c-lower)"),
        ("c_upper", "(c-upper)"),
        ("d", "(d)"),
    ):
        if not getattr(report, attr):
            names.append(label)
    return ", ".join(names)


def _exact_inverse_rows(columns, n):
    """Rows of the inverse of the matrix with the given integer columns.

    Exact rational elimination; raises if the matrix is singular or the
    inverse is not integral (the stacked basis-plus-kernel matrix of a
    valid datum is unimodular, so a failure means corrupted data).
    """
    if len(columns) != n:
        raise DomainError("basis and kernel together must have full rank")
    m = [
        [Fraction(columns[j][i]) for j in range(n)]
        + [Fraction(1 if k == i else 0) for k in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise DomainError("basis and kernel together must have full rank")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    rows = []
    for i in range(n):
        row = m[i][n:]
        if any(x.denominator != 1 for x in row):
            raise DomainError("weight basis plus kernel is not unimodular")
        rows.append(tuple(int(x) for x in row))
    return rows


@dataclass
class ClassificationContext:
    """Group datum plus modulus, with exact coordinate machinery.

    Only data satisfying every construction hypothesis are accepted;
    in particular the even orthogonal family is rejected here and served
    solely by the ambient counterexample entry points.
    """

    datum: GroupDatum
    p: int
    r: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"p must be prime, got {self.p}")
        if self.r < 1:
            raise DomainError(f"r must be a positive integer, got {self.r}")
        report = self.datum.validation()
        if not report.all_ok:
            raise HypothesisFailure(
                f"datum {self.datum.spec_string} fails construction "
                f"hypotheses {_failed_hypotheses(report)}"
            )
        n = self.datum.ambient_dim
        stacked = list(self.datum.weight_basis) + list(
            self.datum.lattice.kernel_basis
        )
        inverse_rows = _exact_inverse_rows(stacked, n)
        self._coef = tuple(inverse_rows[: len(self.datum.weight_basis)])

    @property
    def prpow(self):
        return self.p ** self.r

    @property
    def rank(self):
        return len(self._coef)

    @property
    def dual_count(self):
        return len(self.datum.simple_coroots)

    def coordinates(self, weight):
        """Coordinates of the class in the weight basis (kernel dropped)."""
        check_dim(weight, self.datum.ambient_dim)
        return tuple(
            sum(c * x for c, x in zip(row, weight)) for row in self._coef
        )

    def x0_coordinates(self, weight):
        """The distinguished-part coordinates of the class."""
        return self.coordinates(weight)[self.dual_count:]

    def from_coordinates(self, coords):
        """The ambient weight with the given weight-basis coordinates."""
        n = self.datum.ambient_dim
        out = [0] * n
        for c, vec in zip(coords, self.datum.weight_basis):
            if c:
                for i, v in enumerate(vec):
                    out[i] += c * v
        return tuple(out)

    def tables(self):
        """Flat integer tables for the sweep kernels."""
        if "tables" not in self._cache:
            datum = self.datum
            n = datum.ambient_dim
            self._cache["tables"] = tables_for(datum)._replace(
                ns=self.dual_count,
                coroots=tuple(c for cov in datum.simple_coroots for c in cov),
                dvecs=tuple(c for vec in datum.d_vectors for c in vec),
                rank=self.rank,
                coef=tuple(c for row in self._coef for c in row),
                basis=tuple(c for vec in datum.weight_basis for c in vec),
                diag=datum.basis_pairing_diag,
            )
        return self._cache["tables"]

    def phi(self, weight):
        return phi_ambient(weight, PhiData.from_datum(self.datum))


def is_polynomial(weight, ctx):
    """Sign test: the class is polynomial iff the functional is >= 0."""
    return min(ctx.phi(weight)) >= 0


def is_restricted(weight, ctx):
    """All simple-coroot pairings lie in [0, p^r - 1]."""
    bound = ctx.prpow - 1
    lat = ctx.datum.lattice
    for cov in ctx.datum.simple_coroots:
        val = pair(weight, cov, lat)
        if val < 0 or val > bound:
            return False
    return True


def in_x0(weight, ctx):
    """All simple-coroot pairings vanish."""
    lat = ctx.datum.lattice
    return all(pair(weight, cov, lat) == 0 for cov in ctx.datum.simple_coroots)


def in_Pr(weight, ctx):
    """The digit-set predicate.

    Polynomial, restricted, and subtracting p^r times any distinguished
    weight leaves the polynomial cone.
    """
    if not (is_polynomial(weight, ctx) and is_restricted(weight, ctx)):
        return False
    step = ctx.prpow
    for d in ctx.datum.d_vectors:
        if is_polynomial(vec_sub(weight, vec_scale(step, d)), ctx):
            return False
    return True


@dataclass(frozen=True)
class Decomposition:
    """Base digit plus p^r-multiple split of a character class."""

    lambda0: tuple
    lambda_tilde: tuple


def decompose(weight, ctx):
    """The unique split weight = lambda0 + p^r lambda_tilde (mod kernel).

    Step 1 reduces the weight-basis coordinates to digits mod p^r; the
    dual digits are forced by restrictedness, and a dual basis element
    that pairs to 2 with its coroot admits a digit only when twice the
    digit stays below p^r (classes violating this are not represented in
    the restricted set, and DecompositionUnavailable reports it).  Step 2
    shifts by the distinguished weights using the closed-form exponents
    floor(phi_j / p^r), landing in the digit set.
    """
    step = ctx.prpow
    coords = ctx.coordinates(weight)
    diag = ctx.datum.basis_pairing_diag
    ns = ctx.dual_count
    digits = []
    for k in range(ns):
        dig = coords[k] % step
        if diag[k] * dig > step - 1:
            raise DecompositionUnavailable(
                f"class has dual digit {dig} with pairing {diag[k] * dig} "
                f"outside [0, {step - 1}]; the restricted set contains no "
                "representative of this residue"
            )
        digits.append(dig)
    digits.extend(coords[k] % step for k in range(ns, ctx.rank))

    lam0_prime = ctx.from_coordinates(digits)
    phi0 = ctx.phi(lam0_prime)
    exps = [v // step for v in phi0]
    lam0 = lam0_prime
    for a, d in zip(exps, ctx.datum.d_vectors):
        if a:
            lam0 = vec_sub(lam0, vec_scale(step * a, d))

    tilde_coords = []
    for k in range(ctx.rank):
        base = (coords[k] - digits[k]) // step
        if k >= ns:
            base += exps[k - ns]
        tilde_coords.append(base)
    lam_tilde = ctx.from_coordinates(tilde_coords)

    assert in_Pr(lam0, ctx), "decomposition left the digit set"
    recombined = vec_add(lam0, vec_scale(step, lam_tilde))
    assert ctx.datum.lattice.equal_mod_kernel(recombined, weight)
    return Decomposition(lambda0=lam0, lambda_tilde=lam_tilde)


def is_simple_polynomial(weight, ctx):
    """Whether the quotient part of the decomposition is polynomial."""
    return is_polynomial(decompose(weight, ctx).lambda_tilde, ctx)


def simple_membership(weight, ctx):
    """Like is_simple_polynomial, with undecomposable classes counted out.

    A class with no restricted digit representative lies outside the
    whole restricted-plus-multiple sum, hence outside the simple set;
    this helper answers False instead of raising.
    """
    try:
        return is_simple_polynomial(weight, ctx)
    except DecompositionUnavailable:
        return False


def enumerate_Pr(ctx):
    """All digit-set classes as sorted canonical representatives.

    Iterates the dual digits over their admissible ranges and the
    functional target over [0, p^r - 1]^l, reconstructs each candidate
    from the weight basis, and keeps those passing the literal predicate.
    """
    step = ctx.prpow
    datum = ctx.datum
    ns = ctx.dual_count
    l = datum.x0_rank
    diag = datum.basis_pairing_diag
    digit_ranges = [range((step - 1) // diag[k] + 1) for k in range(ns)]
    out = set()
    for digs in itertools.product(*digit_ranges):
        base = ctx.from_coordinates(list(digs) + [0] * l)
        phib = ctx.phi(base)
        for target in itertools.product(range(step), repeat=l):
            cand = base
            for tj, pj, d in zip(target, phib, datum.d_vectors):
                shift = tj - pj
                if shift:
                    cand = vec_add(cand, vec_scale(shift, d))
            if in_Pr(cand, ctx):
                out.add(datum.lattice.canonical_rep(cand))
    return tuple(sorted(out))


def pr_box_oracle(ctx, bound=None):
    """Brute-force digit set: filter an ambient box and canonicalize.

    Every digit-set class is polynomial, so it has an all-non-negative
    representative, and restrictedness bounds its coordinates; a box
    [0, bound]^n with bound = max(2 p^r, n (p^r - 1)) provably contains
    such a representative for the built-in families.  The filter applies
    the literal predicate to each box point and collects canonical
    representatives.
    """
    n = ctx.datum.ambient_dim
    if bound is None:
        bound = max(2 * ctx.prpow, n * (ctx.prpow - 1))
    reps = set()
    for v in itertools.product(range(bound + 1), repeat=n):
        if in_Pr(v, ctx):
            reps.add(ctx.datum.lattice.canonical_rep(v))
    return tuple(sorted(reps))


def _ambient_in_pr(weight, datum, prpow):
    data = PhiData.from_datum(datum)
    if min(phi_ambient(weight, data)) < 0:
        return False
    lat = datum.lattice
    for cov in datum.simple_coroots:
        val = pair(weight, cov, lat)
        if val < 0 or val > prpow - 1:
            return False
    for d in datum.d_vectors:
        if min(phi_ambient(vec_sub(weight, vec_scale(prpow, d)), data)) >= 0:
            return False
    return True


def weyl_orbit_witness_nonpolynomial(lam0, lam_tilde, ctx_or_datum, prpow=None):
    """First Weyl element pushing lam0 + p^r lam_tilde out of the cone.

    Scans the full Weyl group in sorted order for w such that
    w.lam0 + p^r lam_tilde is not polynomial and returns the first hit,
    or None when every twist stays polynomial.  Accepts either a
    classification context or a bare datum with an explicit modulus; the
    bare form exists for the even orthogonal family, whose functional is
    only available in ambient semantics.
    """
    if isinstance(ctx_or_datum, ClassificationContext):
        datum = ctx_or_datum.datum
        prpow = ctx_or_datum.prpow
    else:
        datum = ctx_or_datum
        if prpow is None:
            raise DomainError("a modulus p^r is required with a bare datum")
    check_dim(lam0, datum.ambient_dim)
    check_dim(lam_tilde, datum.ambient_dim)
    if not _ambient_in_pr(lam0, datum, prpow):
        raise PreconditionError("lam0 is not in the digit set for this datum")
    data = PhiData.from_datum(datum)
    shift = vec_scale(prpow, lam_tilde)
    for w in datum.weyl_group():
        if min(phi_ambient(vec_add(act(w, lam0), shift), data)) < 0:
            return w
    return None


@dataclass(frozen=True)
class CounterexampleReport:
    """Evaluation of the even orthogonal rank-8 witness-failure scenario."""

    prpow: int
    lam0: tuple
    lam_tilde: tuple
    phi_lam0: tuple
    phi_lam0_shifted: tuple
    phi_lam_tilde: tuple
    witness: tuple | None
    weyl_order: int


def go_even_counterexample(prpow):
    """The rank-8 even orthogonal scenario for a modulus with 4 | p^r - 1.

    The base weight takes value (p^r - 1)/2 on the first four coordinates
    and (p^r - 1)/4 on the last four; the quotient part is a fixed sign
    pattern.  The functional values are (p^r - 1), -1 after the
    distinguished shift, and -1 on the quotient part, yet no element of
    the 192-element Weyl group moves the combination out of the
    polynomial cone.
    """
    from .groups import build_go_even

    if prpow < 2 or (prpow - 1) % 4:
        raise PreconditionError(
            f"the scenario needs 4 | p^r - 1, got p^r = {prpow}"
        )
    datum = build_go_even(8)
    half = (prpow - 1) // 2
    quarter = (prpow - 1) // 4
    lam0 = (half,) * 4 + (quarter,) * 4
    lam_tilde = (0, 0, 0, 0, 1, 1, -1, 1)
    data = PhiData.from_datum(datum)
    d = datum.d_vectors[0]
    return CounterexampleReport(
        prpow=prpow,
        lam0=lam0,
        lam_tilde=lam_tilde,
        phi_lam0=phi_ambient(lam0, data),
        phi_lam0_shifted=phi_ambient(vec_sub(lam0, vec_scale(prpow, d)), data),
        phi_lam_tilde=phi_ambient(lam_tilde, data),
        witness=weyl_orbit_witness_nonpolynomial(lam0, lam_tilde, datum, prpow),
        weyl_order=len(datum.weyl_group()),
    )
