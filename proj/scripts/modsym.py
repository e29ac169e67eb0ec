"""Exact modular symbols for Gamma0(N), trivial character, even weight k >= 2.

Produces the saturated integral echelon basis (Hermite form, rows ordered by
q-valuation) of the cuspidal subspace S_k(Gamma0(N)) as q-expansions with
integer coefficients.  Everything is exact: Fraction linear algebra plus
integer lattice saturation.

Used only by the fixture generator; the shipped library never runs this code.
"""

from fractions import Fraction
from math import gcd, isqrt
import sys

# ---------------------------------------------------------------------------
# small arithmetic helpers


def factorization(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n):
    ds = [1]
    for p, e in factorization(n):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def euler_phi(n):
    r = n
    for p, _ in factorization(n):
        r = r // p * (p - 1)
    return r


def psi_index(n):
    r = n
    for p, _ in factorization(n):
        r = r // p * (p + 1)
    return r


def nu2(n):
    if n % 4 == 0:
        return 0
    r = 1
    for p, _ in factorization(n):
        if p == 2:
            continue
        r *= 2 if p % 4 == 1 else 0
    return r


def nu3(n):
    if n % 9 == 0:
        return 0
    r = 1
    for p, _ in factorization(n):
        if p == 3:
            continue
        r *= 2 if p % 3 == 1 else 0
    return r


def nu_inf(n):
    return sum(euler_phi(gcd(d, n // d)) for d in divisors(n))


def genus(n):
    v = 12 + psi_index(n) - 3 * nu2(n) - 4 * nu3(n) - 6 * nu_inf(n)
    assert v % 12 == 0
    g = v // 12
    assert g >= 0
    return g


def dim_cusp_forms(n, k):
    assert k >= 2 and k % 2 == 0
    g = genus(n)
    if k == 2:
        return g
    return (k - 1) * (g - 1) + (k // 2 - 1) * nu_inf(n) \
        + (k // 4) * nu2(n) + (k // 3) * nu3(n)


def dim_modular_forms(n, k):
    return dim_cusp_forms(n, k) + nu_inf(n) - (1 if k == 2 else 0)


def sturm_bound(n, w):
    return (w * psi_index(n)) // 12 + 1


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i:: i] = bytearray(len(sieve[i * i:: i]))
    return [i for i in range(2, n + 1) if sieve[i]]


# ---------------------------------------------------------------------------
# P^1(Z/N)


class P1:
    def __init__(self, N):
        self.N = N
        if N == 1:
            self.reps = [(0, 0)]
            self.index = {(0, 0): 0}
            return
        units = [u for u in range(1, N) if gcd(u, N) == 1]
        index = {}
        reps = []
        for c in range(N):
            for d in range(N):
                if gcd(gcd(c, d), N) != 1:
                    continue
                if (c, d) in index:
                    continue
                orbit = {((c * u) % N, (d * u) % N) for u in units}
                i = len(reps)
                reps.append(min(orbit))
                for pair in orbit:
                    index[pair] = i
        self.reps = reps
        self.index = index

    def lookup(self, c, d):
        """Index of (c:d), or None when the pair is not primitive mod N."""
        N = self.N
        key = (c % N, d % N)
        return self.index.get(key)

    def __len__(self):
        return len(self.reps)


def lift_to_sl2(c, d, N):
    """An integer matrix [[a,b],[c',d']] of det 1 with (c',d') = (c,d) mod N."""
    if N == 1:
        return (1, 0, 0, 1)
    c %= N
    d %= N
    if c == 0 and d == 0:
        raise ValueError("not a projective point")
    # adjust representatives until gcd(c', d') == 1
    cc, dd = c, d
    if gcd(cc, dd) != 1:
        found = False
        for t in range(0, 10 * N + 1):
            for cand in ((cc, dd + t * N), (cc + t * N, dd)):
                if gcd(cand[0], cand[1]) == 1:
                    cc, dd = cand
                    found = True
                    break
            if found:
                break
        assert gcd(cc, dd) == 1
    # a*dd - b*cc = 1
    g, x, y = ext_gcd(dd, cc)
    assert g == 1
    a, b = x, -y
    assert a * dd - b * cc == 1
    return (a, b, cc, dd)


def ext_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# cusps


def normalize_cusp(p, q):
    if q == 0:
        return (1, 0)
    if q < 0:
        p, q = -p, -q
    g = gcd(abs(p), q)
    if g:
        p //= g
        q //= g
    return (p, q)


def _inv_mod(a, m):
    if m == 0:
        # exact inverse over Z; a is +-1 here
        assert a in (1, -1)
        return a
    g, x, _ = ext_gcd(a % m, m)
    assert g == 1
    return x % m


def cusps_equivalent(c1, c2, N):
    """Gamma0(N)-equivalence of cusps given as normalized pairs (p, q)."""
    p1, q1 = c1
    p2, q2 = c2
    s1 = _inv_mod(p1, q1)
    s2 = _inv_mod(p2, q2)
    m = gcd(q1 * q2, N)
    return (s1 * q2 - s2 * q1) % m == 0 if m else s1 * q2 == s2 * q1


class CuspClasses:
    def __init__(self, N):
        self.N = N
        self.reps = []

    def classify(self, p, q):
        c = normalize_cusp(p, q)
        for i, r in enumerate(self.reps):
            if cusps_equivalent(c, r, self.N):
                return i
        self.reps.append(c)
        return len(self.reps) - 1


# ---------------------------------------------------------------------------
# Heilbronn matrices


def heilbronn_cremona(p):
    """Heilbronn matrices of determinant p (p prime), Cremona's construction."""
    if p == 2:
        return [(1, 0, 0, 2), (2, 0, 0, 1), (2, 1, 0, 1), (1, 0, 1, 2)]
    ans = [(1, 0, 0, p)]
    for r in range(-(p // 2), p // 2 + 1):
        x1, x2 = p, -r
        y1, y2 = 0, 1
        a, b = -p, r
        ans.append((x1, x2, y1, y2))
        while b:
            q = round_quotient(a, b)
            c = a - b * q
            a, b = -b, c
            x1, x2 = x2, q * x2 - x1
            y1, y2 = y2, q * y2 - y1
            ans.append((x1, x2, y1, y2))
    return ans


def round_quotient(a, b):
    """Nearest integer to a/b, ties rounded toward even (exactness irrelevant)."""
    q, r = divmod(a, b)
    if 2 * r > abs(b) or (2 * r == abs(b) and q % 2 == 1):
        q += 1
    return q


def heilbronn_merel(n):
    """All [[a,b],[c,d]] with det n, a > b >= 0, d > c >= 0 (Merel's set)."""
    out = []
    for a in range(1, n + 1):
        for b in range(a):
            if b == 0:
                if n % a == 0:
                    d = n // a
                    out.extend((a, 0, c, d) for c in range(d))
            else:
                c = 0
                while c * (a - b) < n:
                    num = n + b * c
                    if num % a == 0:
                        d = num // a
                        if d > c:
                            out.append((a, b, c, d))
                    c += 1
    return out


# ---------------------------------------------------------------------------
# modular symbols space


class ModularSymbols:
    """Cuspidal modular symbols for Gamma0(N), weight k, with exact Hecke action."""

    def __init__(self, N, k, verbose=False):
        assert k >= 2 and k % 2 == 0
        self.N = N
        self.k = k
        self.w = k - 2  # polynomial degree
        self.verbose = verbose
        self.p1 = P1(N)
        self.ngen = (self.w + 1) * len(self.p1)
        self._build_quotient()
        self._build_cuspidal()
        self._hecke_cache = {}

    # generator index <-> (i, s) with monomial X^i Y^(w-i), s in P^1
    def gidx(self, i, s):
        return i * len(self.p1) + s

    def _binomials(self, n):
        row = [1]
        for _ in range(n):
            row = [1] + [row[j] + row[j + 1] for j in range(len(row) - 1)] + [1]
        return row

    def act_all(self, i, s_pair, m):
        """Image of [X^i Y^(w-i), (u:v)] under m = (a,b,c,d); list of (gen, coeff).

        Returns [] when the image point is not primitive mod N (dropped term).
        """
        a, b, c, d = m
        u, v = s_pair
        s2 = self.p1.lookup(u * a + v * c, u * b + v * d)
        if s2 is None:
            return []
        w = self.w
        # (aX + bY)^i (cX + dY)^(w-i), exact integer expansion
        pa = [0] * (i + 1)
        bi = self._binomials(i)
        for t in range(i + 1):
            pa[t] = bi[t] * (a**t) * (b**(i - t))
        pb = [0] * (w - i + 1)
        bj = self._binomials(w - i)
        for t in range(w - i + 1):
            pb[t] = bj[t] * (c**t) * (d**(w - i - t))
        out = {}
        for t1, c1 in enumerate(pa):
            if c1 == 0:
                continue
            for t2, c2 in enumerate(pb):
                if c2 == 0:
                    continue
                e = t1 + t2  # exponent of X
                out[e] = out.get(e, 0) + c1 * c2
        return [(self.gidx(e, s2), coef) for e, coef in out.items() if coef]

    def _build_quotient(self):
        N, w = self.N, self.w
        ngen = self.ngen
        sigma = (0, -1, 1, 0)
        tau = (0, -1, 1, -1)
        tau2 = (-1, 1, -1, 0)  # tau^2

        # Stage 1: two-term relations x + x|sigma = 0.  The sigma image of a
        # monomial generator is a single generator up to sign, so these are
        # pure substitutions.
        sub = [None] * ngen  # gen -> (target_gen, coeff) or ("zero",)
        for s, pair in enumerate(self.p1.reps):
            for i in range(w + 1):
                g = self.gidx(i, s)
                if sub[g] is not None:
                    continue
                img = self.act_all(i, pair, sigma)
                assert len(img) == 1
                g2, c2 = img[0]
                # relation: x_g + c2 * x_g2 = 0
                if g2 == g:
                    if 1 + c2 != 0:
                        sub[g] = ("zero",)
                    # else: no information
                else:
                    # x_g2 = -(1/c2) x_g ; keep g as survivor
                    sub[g2] = (g, Fraction(-1, c2))
        survivors = [g for g in range(ngen) if sub[g] is None]
        sidx = {g: t for t, g in enumerate(survivors)}

        def resolve(g):
            """Express generator g over survivors: list of (surv_pos, Fraction)."""
            if sub[g] is None:
                return [(sidx[g], Fraction(1))]
            if sub[g][0] == "zero":
                return []
            tgt, c = sub[g]
            return [(t, c * cc) for t, cc in resolve(tgt)]

        # Stage 2: three-term relations over survivors
        rows = []
        seen_rel = set()
        for s, pair in enumerate(self.p1.reps):
            for i in range(w + 1):
                row = {}
                for g, c in [(self.gidx(i, s), 1)] \
                        + self.act_all(i, pair, tau) \
                        + self.act_all(i, pair, tau2):
                    for t, cc in resolve(g):
                        row[t] = row.get(t, Fraction(0)) + c * cc
                row = {t: c for t, c in row.items() if c}
                if row:
                    key = tuple(sorted(row.items()))
                    if key not in seen_rel:
                        seen_rel.add(key)
                        rows.append(row)

        # Gaussian elimination of the sparse relation rows
        nsurv = len(survivors)
        pivot_of_col = {}
        reduced = []  # list of (pivot_col, row_dict) with row[pivot]=1
        for row in rows:
            row = dict(row)
            while True:
                hit = None
                for t in row:
                    if t in pivot_of_col:
                        hit = t
                        break
                if hit is None:
                    break
                c = row.pop(hit)
                prow = reduced[pivot_of_col[hit]][1]
                for t2, c2 in prow.items():
                    if t2 == hit:
                        continue
                    row[t2] = row.get(t2, Fraction(0)) - c * c2
                row = {t: c for t, c in row.items() if c}
            if row:
                piv = max(row)  # eliminate the highest index first
                c = row[piv]
                row = {t: cc / c for t, cc in row.items()}
                pivot_of_col[piv] = len(reduced)
                reduced.append((piv, row))
        # back substitution so that every reduced row mentions only free cols
        order = sorted(pivot_of_col, reverse=True)
        for piv in order:
            ridx = pivot_of_col[piv]
            row = dict(reduced[ridx][1])
            changed = True
            while changed:
                changed = False
                for t in list(row):
                    if t != piv and t in pivot_of_col:
                        c = row.pop(t)
                        for t2, c2 in reduced[pivot_of_col[t]][1].items():
                            if t2 == t:
                                continue
                            row[t2] = row.get(t2, Fraction(0)) - c * c2
                        row = {tt: cc for tt, cc in row.items() if cc}
                        changed = True
                        break
            reduced[ridx] = (piv, row)

        free = [t for t in range(nsurv) if t not in pivot_of_col]
        fidx = {t: j for j, t in enumerate(free)}
        self.dim = len(free)
        self.free_gens = [survivors[t] for t in free]

        # reduction matrix: generator -> dense row over free coordinates
        red = [[Fraction(0)] * self.dim for _ in range(ngen)]
        for g in range(ngen):
            for t, c in resolve(g):
                if t in fidx:
                    red[g][fidx[t]] += c
                else:
                    prow = reduced[pivot_of_col[t]][1]
                    for t2, c2 in prow.items():
                        if t2 == t:
                            continue
                        # pivot column t equals -sum of free part
                        red[g][fidx[t2]] += c * (-c2)
        self.red = red

        # integer-scaled reduction for fast Hecke assembly
        den = 1
        for row in red:
            for c in row:
                den = den * c.denominator // gcd(den, c.denominator)
        self.red_den = den
        self.red_int = [[int(c * den) for c in row] for row in red]

        if self.verbose:
            print(f"  [N={N} k={k_of(self)}] generators {ngen}, quotient dim {self.dim}")

    def _build_cuspidal(self):
        N, w = self.N, self.w
        classes = CuspClasses(N)
        cols = {}
        bnd = []  # per free gen: dict cusp_class -> int
        for g in self.free_gens:
            i, s = divmod(g, len(self.p1))
            a, b, c, d = lift_to_sl2(*self.p1.reps[s], N)
            row = {}
            if i == w:
                row[classes.classify(a, c)] = row.get(classes.classify(a, c), 0) + 1
            if i == 0:
                j = classes.classify(b, d)
                row[j] = row.get(j, 0) - 1
            bnd.append(row)
        ncusp = len(classes.reps)
        # left-nullspace of the dim x ncusp boundary matrix
        mat = [[Fraction(bnd[r].get(j, 0)) for j in range(ncusp)]
               for r in range(self.dim)]
        self.cuspidal = left_nullspace(mat)  # rows, RREF over Q
        s = dim_cusp_forms(N, self.k)
        assert len(self.cuspidal) == 2 * s, \
            f"cuspidal dim {len(self.cuspidal)} != 2*dim S_k = {2*s} (N={N}, k={self.k})"
        # pivot columns of the RREF cuspidal basis give a cheap right inverse
        self.cusp_pivots = []
        for row in self.cuspidal:
            j = next(j for j, c in enumerate(row) if c)
            assert row[j] == 1
            self.cusp_pivots.append(j)

    # -- Hecke -------------------------------------------------------------

    def hecke_matrix(self, p, matrices=None):
        """Matrix of T_p on the cuspidal subspace (rows act on the right)."""
        if p in self._hecke_cache:
            return self._hecke_cache[p]
        if matrices is None:
            matrices = heilbronn_cremona(p)
        dim = self.dim
        np1 = len(self.p1)
        # big-matrix rows: image of each free generator, over free coordinates
        rows = []
        for g in self.free_gens:
            i, s = divmod(g, np1)
            pair = self.p1.reps[s]
            acc = {}  # generator -> int coeff
            for m in matrices:
                for g2, c in self.act_all(i, pair, m):
                    acc[g2] = acc.get(g2, 0) + c
            dense = [0] * dim
            for g2, c in acc.items():
                if c == 0:
                    continue
                rint = self.red_int[g2]
                for t in range(dim):
                    if rint[t]:
                        dense[t] += c * rint[t]
            rows.append([Fraction(x, self.red_den) for x in dense])
        # restrict to the cuspidal subspace
        cusp = self.cuspidal
        s2 = len(cusp)
        out = []
        for wrow in cusp:
            img = [Fraction(0)] * dim
            for t, c in enumerate(wrow):
                if c:
                    rr = rows[t]
                    for u in range(dim):
                        if rr[u]:
                            img[u] += c * rr[u]
            out.append([img[j] for j in self.cusp_pivots])
        self._hecke_cache[p] = out
        return out

    def qexpansion_lattice(self, prec):
        """Saturated integral basis (HNF rows by valuation) of S_k to precision prec."""
        s = dim_cusp_forms(self.N, self.k)
        if s == 0:
            return []
        s2 = len(self.cuspidal)
        ps = primes_upto(prec)
        amats = {p: self.hecke_matrix(p) for p in ps}
        if self.verbose:
            print(f"  [N={self.N}] Hecke matrices done ({len(ps)} primes)")
        spf = smallest_prime_factors(prec)
        series_rows = []
        start = 0
        while True:
            # vectors u_n = e_start * A_n via prime recursion
            u = [None] * (prec + 1)
            e = [Fraction(0)] * s2
            e[start] = Fraction(1)
            u[1] = e
            for n in range(2, prec + 1):
                p = spf[n]
                m = n // p
                vec = vec_mat(u[m], amats[p])
                if self.N % p != 0 and m % p == 0:
                    corr = p ** (self.k - 1)
                    prev = u[m // p]
                    vec = [vec[t] - corr * prev[t] for t in range(s2)]
                u[n] = vec
            for j in range(s2):
                series_rows.append([u[n][j] for n in range(1, prec + 1)])
            rank, rref = rref_rows(series_rows, s)
            if rank >= s:
                break
            start += 1
            assert start < s2, "failed to span the cusp form space"
        assert rank == s
        lat = saturate_rows(rref)
        lat = hnf_rows(lat)
        return lat


def k_of(ms):
    return ms.k


# ---------------------------------------------------------------------------
# exact linear algebra over Q / Z


def vec_mat(v, m):
    n = len(m[0])
    out = [Fraction(0)] * n
    for i, c in enumerate(v):
        if c:
            row = m[i]
            for j in range(n):
                if row[j]:
                    out[j] += c * row[j]
    return out


def left_nullspace(mat):
    """Basis (RREF rows) of {x : x * mat = 0} for mat given as list of rows."""
    rows = len(mat)
    cols = len(mat[0]) if mat else 0
    # solve mat^T x^T = 0 -> row-reduce mat^T
    aug = [[mat[r][c] for r in range(rows)] for c in range(cols)]
    piv_cols = []
    r = 0
    for c in range(rows):
        pr = None
        for rr in range(r, len(aug)):
            if aug[rr][c]:
                pr = rr
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pc = aug[r][c]
        aug[r] = [x / pc for x in aug[r]]
        for rr in range(len(aug)):
            if rr != r and aug[rr][c]:
                f = aug[rr][c]
                aug[rr] = [a - f * b for a, b in zip(aug[rr], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == len(aug):
            break
    free = [c for c in range(rows) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * rows
        v[fc] = Fraction(1)
        for i, pc in enumerate(piv_cols):
            v[pc] = -aug[i][fc]
        basis.append(v)
    _, rref = rref_rows(basis, len(basis))
    return rref


def rref_rows(rows, want_rank=None):
    """RREF of the given rows (not modified); returns (rank, rref_rows)."""
    work = [list(r) for r in rows]
    cols = len(work[0]) if work else 0
    rref = []
    piv_cols = []
    for row in work:
        row = list(row)
        for pc, prow in zip(piv_cols, rref):
            if row[pc]:
                f = row[pc]
                for j in range(cols):
                    if prow[j]:
                        row[j] -= f * prow[j]
        pj = next((j for j in range(cols) if row[j]), None)
        if pj is None:
            continue
        pv = row[pj]
        row = [x / pv for x in row]
        for prow in rref:
            if prow[pj]:
                f = prow[pj]
                for j in range(cols):
                    if row[j]:
                        prow[j] -= f * row[j]
        rref.append(row)
        piv_cols.append(pj)
        if want_rank is not None and len(rref) >= want_rank:
            break
    order = sorted(range(len(rref)), key=lambda i: piv_cols[i])
    rref = [rref[i] for i in order]
    return len(rref), rref


def saturate_rows(rref):
    """Saturated integer lattice (rows) spanning the same Q-row space."""
    rows = []
    for r in rref:
        den = 1
        for c in r:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in r]
        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        rows.append([x // g for x in ints] if g else ints)
    while True:
        h = hnf_rows(rows)
        idx = 1
        for r, row in enumerate(h):
            piv = next(x for x in row if x)
            idx *= piv
        ps = {p for p, _ in factorization(abs(idx))} if abs(idx) > 1 else set()
        progressed = False
        for p in sorted(ps):
            ker = nullspace_mod_p(h, p)
            while ker:
                v = ker[0]
                neww = [sum(v[i] * h[i][j] for i in range(len(h)))
                        for j in range(len(h[0]))]
                assert all(x % p == 0 for x in neww)
                neww = [x // p for x in neww]
                # replace a row participating in the kernel combination
                rep = max(i for i in range(len(h)) if v[i] % p != 0)
                h[rep] = neww
                h = hnf_rows(h)
                ker = nullspace_mod_p(h, p)
                progressed = True
        rows = h
        if not progressed:
            return rows


def nullspace_mod_p(rows, p):
    """Left nullspace vectors (over GF(p)) of the integer row matrix."""
    m = len(rows)
    n = len(rows[0])
    # reduce [rows^T] and track combinations: work with augmented [A | I]
    a = [[rows[i][j] % p for j in range(n)] + [1 if t == i else 0 for t in range(m)]
         for i in range(m)]
    r = 0
    for c in range(n):
        pr = None
        for rr in range(r, m):
            if a[rr][c] % p:
                pr = rr
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for rr in range(m):
            if rr != r and a[rr][c] % p:
                f = a[rr][c]
                a[rr] = [(x - f * y) % p for x, y in zip(a[rr], a[r])]
        r += 1
        if r == m:
            break
    out = []
    for rr in range(r, m):
        if all(x % p == 0 for x in a[rr][:n]):
            v = a[rr][n:]
            if any(v):
                out.append(v)
    return out


def hnf_rows(rows):
    """Row Hermite normal form: positive pivots, entries above reduced mod pivot."""
    h = [list(r) for r in rows]
    m = len(h)
    n = len(h[0]) if h else 0
    r = 0
    for c in range(n):
        # gcd-reduce column c among rows >= r
        while True:
            nz = [i for i in range(r, m) if h[i][c]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(h[i][c]))
            i0 = nz[0]
            for i in nz[1:]:
                q = h[i][c] // h[i0][c]
                h[i] = [a - q * b for a, b in zip(h[i], h[i0])]
        nz = [i for i in range(r, m) if h[i][c]]
        if not nz:
            continue
        i0 = nz[0]
        h[r], h[i0] = h[i0], h[r]
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
        piv = h[r][c]
        for i in range(r):
            q = h[i][c] // piv  # floor division puts entry in [0, piv)
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[r])]
        r += 1
        if r == m:
            break
    h = [row for row in h if any(row)]
    return h


def smallest_prime_factors(n):
    spf = list(range(n + 1))
    for i in range(2, isqrt(n) + 1):
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf
