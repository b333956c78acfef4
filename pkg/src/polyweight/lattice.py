"""Exact integer models of ambient and quotient character lattices.

A weight is a plain tuple of ints: the exponent vector of a character of
the diagonal torus of GL_n.  The character group of a subtorus cut out by
monomial relations is modelled as the ambient lattice Z^n together with an
explicit kernel sublattice; two ambient vectors name the same character of
the subtorus exactly when their difference lies in the kernel.  Everything
is computed in exact integer arithmetic.

Weyl group elements are index permutations stored as tuples p with p[i]
the image of i, acting on weights by ``act(p, w)[p[i]] == w[i]``.
"""

from __future__ import annotations

from .errors import CapExceeded, DimensionMismatch

Weight = tuple  # tuple[int, ...]
Covector = tuple  # tuple[int, ...], paired with weights by the dot product
Perm = tuple  # tuple[int, ...]


def _xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def check_dim(vec, n):
    if len(vec) != n:
        raise DimensionMismatch(f"expected length {n}, got {len(vec)}")


def is_prime(m):
    """Trial-division primality test, ample for desk-scale moduli."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(k, a):
    return tuple(k * x for x in a)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _echelonize(vectors, n):
    """Integer row echelon form of the span of ``vectors``.

    Returns rows sorted by pivot column, with positive pivots and with the
    entries above each pivot reduced into [0, pivot).  The row count equals
    the rank of the span.
    """
    rows = {}  # pivot column -> row (list)
    for vec in vectors:
        check_dim(vec, n)
        v = list(vec)
        col = 0
        while col < n:
            if v[col] == 0:
                col += 1
                continue
            if col not in rows:
                rows[col] = v
                break
            u = rows[col]
            g, s, t = _xgcd(u[col], v[col])
            cu, cv = u[col] // g, v[col] // g
            new_u = [s * a + t * b for a, b in zip(u, v)]
            new_v = [cu * b - cv * a for a, b in zip(u, v)]
            rows[col] = new_u
            v = new_v
            col += 1
    # Normalize: positive pivots, then back-reduce entries above pivots.
    for col, row in rows.items():
        if row[col] < 0:
            rows[col] = [-a for a in row]
    cols = sorted(rows)
    for i, col in enumerate(cols):
        for upper in cols[:i]:
            u = rows[upper]
            q = u[col] // rows[col][col]
            if q:
                rows[upper] = [a - q * b for a, b in zip(u, rows[col])]
    return [tuple(rows[c]) for c in cols], cols


class QuotientLattice:
    """Z^n modulo the integer span of an explicit kernel sublattice.

    The kernel basis is echelonized once at construction; canonical coset
    representatives come from reducing each pivot coordinate into
    [0, pivot).  A zero-kernel instance is a plain ambient lattice.
    """

    def __init__(self, ambient_dim, kernel_basis=()):
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        self.ambient_dim = ambient_dim
        self.kernel_basis = tuple(tuple(v) for v in kernel_basis)
        rows, cols = _echelonize(self.kernel_basis, ambient_dim)
        if len(rows) != len(self.kernel_basis):
            raise ValueError("kernel basis vectors are linearly dependent")
        self._rows = rows
        self._pivot_cols = cols
        self._parity = None

    @property
    def kernel_rank(self):
        return len(self._rows)

    @property
    def rank(self):
        """Rank of the quotient."""
        return self.ambient_dim - len(self._rows)

    def canonical_rep(self, weight):
        """The distinguished representative of the coset of ``weight``."""
        check_dim(weight, self.ambient_dim)
        v = list(weight)
        for row, col in zip(self._rows, self._pivot_cols):
            q = v[col] // row[col]
            if q:
                for i in range(self.ambient_dim):
                    v[i] -= q * row[i]
        return tuple(v)

    def contains(self, vec):
        """Whether ``vec`` lies in the integer span of the kernel basis."""
        check_dim(vec, self.ambient_dim)
        v = list(vec)
        for row, col in zip(self._rows, self._pivot_cols):
            if v[col] % row[col]:
                return False
            q = v[col] // row[col]
            if q:
                for i in range(self.ambient_dim):
                    v[i] -= q * row[i]
        return not any(v)

    def equal_mod_kernel(self, a, b):
        check_dim(a, self.ambient_dim)
        check_dim(b, self.ambient_dim)
        return self.contains(vec_sub(a, b))

    def annihilates(self, covector):
        """Whether the covector kills every kernel vector (i.e. descends)."""
        check_dim(covector, self.ambient_dim)
        return all(dot(covector, k) == 0 for k in self.kernel_basis)

    def _parity_rows(self):
        # GF(2) echelon of the kernel basis, each row carrying an integer
        # lift so that solutions can be pulled back to Z.
        if self._parity is None:
            rows = []
            for k in self._rows:
                par = [c & 1 for c in k]
                lift = list(k)
                for pcol, prow, plift in rows:
                    if par[pcol]:
                        par = [a ^ b for a, b in zip(par, prow)]
                        lift = [a + b for a, b in zip(lift, plift)]
                piv = next((i for i, c in enumerate(par) if c), None)
                if piv is not None:
                    rows.append((piv, par, lift))
            rows.sort()
            self._parity = rows
        return self._parity

    def halve_class(self, vec):
        """Exact division of the coset of ``vec`` by 2.

        Finds a kernel shift making the vector coordinatewise even and
        halves it; raises ValueError if the coset is not divisible.
        """
        check_dim(vec, self.ambient_dim)
        par = [c & 1 for c in vec]
        shifted = list(vec)
        for pcol, prow, plift in self._parity_rows():
            if par[pcol]:
                par = [a ^ b for a, b in zip(par, prow)]
                shifted = [a + b for a, b in zip(shifted, plift)]
        if any(par):
            raise ValueError("coset is not divisible by 2")
        return tuple(c // 2 for c in shifted)


def pair(weight, covector, lattice=None):
    """Integer pairing of a weight with a covector.

    When ``lattice`` is given the weight is read as a coset and the
    covector must descend to the quotient.
    """
    if len(weight) != len(covector):
        raise DimensionMismatch(
            f"weight length {len(weight)} vs covector length {len(covector)}"
        )
    if lattice is not None:
        check_dim(weight, lattice.ambient_dim)
        if not lattice.annihilates(covector):
            raise ValueError("covector is not kernel-annihilating")
    return dot(weight, covector)


# -- permutations ------------------------------------------------------------


def identity_perm(n):
    return tuple(range(n))


def is_perm(p):
    return sorted(p) == list(range(len(p)))


def transposition(n, i, j):
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def compose(p, q):
    """The permutation applying q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p):
    inv = [0] * len(p)
    for i, pi in enumerate(p):
        inv[pi] = i
    return tuple(inv)


def act(p, weight):
    """Permutation action on weights: position p[i] receives weight[i]."""
    check_dim(weight, len(p))
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[pi] = weight[i]
    return tuple(out)


def act_covector(p, covector):
    """Adjoint action so that pair(act(p, w), c) == pair(w, act_covector(p, c))."""
    check_dim(covector, len(p))
    return tuple(covector[p[i]] for i in range(len(p)))


def generate_group(generators, cap=100_000):
    """The full closure of a generating set of permutations, sorted.

    Raises CapExceeded when the group has more than ``cap`` elements.
    """
    gens = [tuple(g) for g in generators]
    for g in gens:
        if not is_perm(g):
            raise ValueError(f"not a permutation: {g}")
    n = len(gens[0]) if gens else 0
    for g in gens:
        check_dim(g, n)
    seen = {identity_perm(n)} if n else {()}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                wg = compose(g, w)
                if wg not in seen:
                    seen.add(wg)
                    nxt.append(wg)
                    if len(seen) > cap:
                        raise CapExceeded(
                            f"group closure exceeded cap of {cap} elements"
                        )
        frontier = nxt
    return sorted(seen)
