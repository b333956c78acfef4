"""Reference implementations of the box-sweep kernels.

These are the semantics-defining twins of the compiled extension: plain
Python, exact integers, and a fixed iteration order (ascending
lexicographic over closed integer boxes, last coordinate fastest).  The
compiled module must agree value for value; the test suite compares the
two backends on shared inputs.

Every function takes a ``Tables`` bundle (see the package ``__init__``)
of flat integer tuples, so the compiled twin can copy the data into C
arrays without touching Python objects in its inner loops.
"""


def _decode(index, n, width, radius):
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = index % width - radius
        index //= width
    return out


def _bump(vec, radius):
    """Advance the box odometer in place; False when exhausted."""
    i = len(vec) - 1
    while i >= 0:
        if vec[i] < radius:
            vec[i] += 1
            return True
        vec[i] = -radius
        i -= 1
    return False


def _phi_of(vec, t):
    """Blockwise minima of ``vec`` expanded through the n-matrix."""
    out = [0] * t.l
    boff, bmem, nmat, l = t.boff, t.bmem, t.nmat, t.l
    for i in range(t.s):
        lo, hi = boff[i], boff[i + 1]
        m = vec[bmem[lo]]
        for k in range(lo + 1, hi):
            v = vec[bmem[k]]
            if v < m:
                m = v
        base = i * l
        for j in range(l):
            c = nmat[base + j]
            if c:
                out[j] += m * c
    return out


def pair_witness_sweep(t, radius, start=0, stop=None):
    """Certify witness additivity for all weight pairs in a box.

    For each pair (lam, lamp) the canonical witness permutation is built
    blockwise: within every block the position of lam's minimum is
    transposed onto a position where lamp attains its block minimum.  The
    sweep then checks phi(w.lam + lamp) == phi(lam) + phi(lamp) honestly
    on the constructed vector.  Returns (pairs checked, first failing
    pair or None); the count stops at the failure.

    The outer index range [start, stop) allows partitioned runs; the
    inner loop always covers the full box.
    """
    n, s, l = t.n, t.s, t.l
    boff, bmem = t.boff, t.bmem
    width = 2 * radius + 1
    total = width ** n
    if stop is None:
        stop = total
    if start >= stop:
        return 0, None
    lam = _decode(start, n, width, radius)
    arg0 = [0] * s
    checked = 0
    for _ in range(start, stop):
        phil = _phi_of(lam, t)
        for i in range(s):
            lo, hi = boff[i], boff[i + 1]
            a0 = bmem[lo]
            m0 = lam[a0]
            for k in range(lo + 1, hi):
                a = bmem[k]
                if lam[a] < m0:
                    m0 = lam[a]
                    a0 = a
            arg0[i] = a0
        lamp = [-radius] * n
        while True:
            u = [lam[a] + lamp[a] for a in range(n)]
            for i in range(s):
                lo, hi = boff[i], boff[i + 1]
                a1 = bmem[lo]
                m1 = lamp[a1]
                for k in range(lo + 1, hi):
                    a = bmem[k]
                    if lamp[a] < m1:
                        m1 = lamp[a]
                        a1 = a
                a0 = arg0[i]
                if a0 != a1:
                    u[a0] = lam[a1] + lamp[a0]
                    u[a1] = lam[a0] + lamp[a1]
            phiu = _phi_of(u, t)
            phip = _phi_of(lamp, t)
            checked += 1
            for j in range(l):
                if phiu[j] != phil[j] + phip[j]:
                    return checked, (tuple(lam), tuple(lamp))
            if not _bump(lamp, radius):
                break
        if not _bump(lam, radius):
            break
    return checked, None


def poly_consistency_sweep(t, radius):
    """Compare the phi sign test against the shift-search oracle.

    The oracle decides membership in the polynomial cone without phi: a
    class is polynomial iff some kernel shift with coefficients bounded
    by the coordinate spread plus the box radius is coordinatewise
    non-negative.  Returns (weights checked, first disagreement or None)
    where a disagreement is (lam, phi verdict, oracle verdict).
    """
    n, krank = t.n, t.krank
    kernel = t.kernel
    lam = [-radius] * n
    checked = 0
    while True:
        phi = _phi_of(lam, t)
        ok_phi = min(phi) >= 0
        if krank == 0:
            ok_oracle = min(lam) >= 0
        else:
            window = (max(lam) - min(lam)) + radius
            coeff = [-window] * krank
            ok_oracle = False
            while True:
                good = True
                for a in range(n):
                    v = lam[a]
                    for k in range(krank):
                        v += coeff[k] * kernel[k * n + a]
                    if v < 0:
                        good = False
                        break
                if good:
                    ok_oracle = True
                    break
                if not _bump(coeff, window):
                    break
        checked += 1
        if ok_phi != ok_oracle:
            return checked, (tuple(lam), ok_phi, ok_oracle)
        if not _bump(lam, radius):
            break
    return checked, None


def _flags_for(lam, t, prpow):
    n, l = t.n, t.l
    phi = _phi_of(lam, t)
    poly = 1 if min(phi) >= 0 else 0
    restricted = 1
    for k in range(t.ns):
        srow = k * n
        val = 0
        for a in range(n):
            c = t.coroots[srow + a]
            if c:
                val += c * lam[a]
        if val < 0 or val > prpow - 1:
            restricted = 0
            break
    inrange = 1
    for j in range(l):
        if phi[j] < 0 or phi[j] > prpow - 1:
            inrange = 0
            break
    literal = poly and restricted
    if literal:
        shifted = list(lam)
        for j in range(l):
            drow = j * n
            for a in range(n):
                shifted[a] = lam[a] - prpow * t.dvecs[drow + a]
            sphi = _phi_of(shifted, t)
            if min(sphi) >= 0:
                literal = 0
                break
    return poly | (restricted << 1) | (inrange << 2) | ((1 if literal else 0) << 3)


def predicate_flags_box(t, prpow, radius):
    """Evaluate the membership predicates at every point of a box.

    Returns one flag word per point, in box order: bit 0 polynomial
    (phi sign test), bit 1 restricted, bit 2 phi within [0, prpow - 1],
    bit 3 the literal digit-set predicate (polynomial, restricted, and
    every distinguished shift by prpow leaves the polynomial cone).
    """
    lam = [-radius] * t.n
    out = []
    while True:
        out.append(_flags_for(lam, t, prpow))
        if not _bump(lam, radius):
            break
    return out


def _in_pr_literal(vec, t, prpow):
    return _flags_for(vec, t, prpow) & 8 != 0


def decompose_unique_sweep(t, prpow, radius, max_failures=5):
    """Check existence and uniqueness of the digit decomposition on a box.

    For each lam the basis coordinates are reduced to digits mod prpow,
    giving the restricted representative lam0'; candidates lam0' minus
    prpow times any distinguished combination within the derived window
    are tested against the literal digit-set predicate.  Success means
    exactly one candidate passes and it is the one the closed-form
    exponents select.  Weights whose forced dual digit cannot satisfy the
    restriction (even-pairing basis elements) count as failures with
    candidate count 0.

    Returns (weights checked, tuple of at most max_failures (lam, count)).
    """
    n, l, ns, rank = t.n, t.l, t.ns, t.rank
    lam = [-radius] * n
    checked = 0
    failures = []
    while True:
        checked += 1
        coords = [0] * rank
        for k in range(rank):
            row = k * n
            v = 0
            for a in range(n):
                c = t.coef[row + a]
                if c:
                    v += c * lam[a]
            coords[k] = v
        digits = [0] * rank
        feasible = True
        for k in range(ns):
            dig = coords[k] % prpow
            if t.diag[k] * dig > prpow - 1:
                feasible = False
                break
            digits[k] = dig
        if not feasible:
            if len(failures) < max_failures:
                failures.append((tuple(lam), 0))
            if not _bump(lam, radius):
                break
            continue
        for k in range(ns, rank):
            digits[k] = coords[k] % prpow
        lam0p = [0] * n
        for k in range(rank):
            dig = digits[k]
            if dig:
                row = k * n
                for a in range(n):
                    lam0p[a] += dig * t.basis[row + a]
        phi0 = _phi_of(lam0p, t)
        window = 1 + max(abs(v) for v in phi0) // prpow
        astar = [phi0[j] // prpow for j in range(l)]
        count = 0
        star_hit = False
        shift = [-window] * l
        cand = [0] * n
        while True:
            for a in range(n):
                v = lam0p[a]
                for j in range(l):
                    cj = shift[j]
                    if cj:
                        v -= prpow * cj * t.dvecs[j * n + a]
                cand[a] = v
            if _in_pr_literal(cand, t, prpow):
                count += 1
                if shift == astar:
                    star_hit = True
            if not _bump(shift, window):
                break
        if count != 1 or not star_hit:
            if len(failures) < max_failures:
                failures.append((tuple(lam), count))
        if not _bump(lam, radius):
            break
    return checked, tuple(failures)


def simple_flags_many(t, prpow, flat_weights):
    """Classify many weights by the sign of the quotient part.

    ``flat_weights`` concatenates ambient weights.  Per weight the result
    is 1 when the decomposition exists and its quotient part lies in the
    polynomial cone, 0 when it exists with a non-polynomial quotient, and
    2 when no restricted digit representative exists.
    """
    n, l, ns, rank = t.n, t.l, t.ns, t.rank
    m = len(flat_weights) // n
    out = []
    tilde = [0] * n
    for w in range(m):
        base = w * n
        coords = [0] * rank
        for k in range(rank):
            row = k * n
            v = 0
            for a in range(n):
                c = t.coef[row + a]
                if c:
                    v += c * flat_weights[base + a]
            coords[k] = v
        flag = 1
        digits = [0] * rank
        for k in range(ns):
            dig = coords[k] % prpow
            if t.diag[k] * dig > prpow - 1:
                flag = 2
                break
            digits[k] = dig
        if flag == 2:
            out.append(2)
            continue
        for k in range(ns, rank):
            digits[k] = coords[k] % prpow
        lam0p = [0] * n
        for k in range(rank):
            dig = digits[k]
            if dig:
                row = k * n
                for a in range(n):
                    lam0p[a] += dig * t.basis[row + a]
        phi0 = _phi_of(lam0p, t)
        for a in range(n):
            tilde[a] = 0
        for k in range(rank):
            tc = (coords[k] - digits[k]) // prpow
            if k >= ns:
                tc += phi0[k - ns] // prpow
            if tc:
                row = k * n
                for a in range(n):
                    tilde[a] += tc * t.basis[row + a]
        tphi = _phi_of(tilde, t)
        out.append(1 if min(tphi) >= 0 else 0)
    return out
