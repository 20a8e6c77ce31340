#!/usr/bin/env python3
"""Independent brute-force oracle for the flag-opposition lab.

Everything here is computed from first principles (prime-field row
reduction and exhaustive enumeration, no shared code with the C++
implementation). The golden constants frozen into the C++ test suite
are produced by this script; rerun it to regenerate them.

Only prime q is needed for the golden values (q in {2,3}).
"""

import itertools
import sys
from collections import Counter
from fractions import Fraction


# ---------------------------------------------------------------- GF(p) rref

def rref(rows, q):
    """Reduced row echelon form of a list of tuples over GF(q), q prime."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if m[i][c] % q != 0:
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = pow(m[r][c], q - 2, q)
        m[r] = [(x * inv) % q for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] % q != 0:
                f = m[i][c]
                m[i] = [(a - f * b) % q for a, b in zip(m[i], m[r])]
        r += 1
    return tuple(tuple(row) for row in m[:r])


def rank(rows, q):
    return len(rref(rows, q))


def meet_dim(s1, s2, q):
    return len(s1) + len(s2) - rank(list(s1) + list(s2), q)


def contains(big, small, q):
    return meet_dim(big, small, q) == len(small)


def enumerate_subspaces(d, k, q):
    """All k-dim subspaces of GF(q)^d as canonical RREF tuples, lex order."""
    out = []
    for pivots in itertools.combinations(range(d), k):
        free = []
        for i in range(k):
            for j in range(pivots[i] + 1, d):
                if j not in pivots:
                    free.append((i, j))
        base = [[0] * d for _ in range(k)]
        for i, p in enumerate(pivots):
            base[i][p] = 1
        for vals in itertools.product(range(q), repeat=len(free)):
            m = [row[:] for row in base]
            for (i, j), v in zip(free, vals):
                m[i][j] = v
            out.append(tuple(tuple(r) for r in m))
    out.sort()
    return out


def gauss(b, a, q):
    if a < 0 or a > b:
        return 0
    num = den = 1
    for i in range(1, a + 1):
        num *= q ** (b - a + i) - 1
        den *= q ** i - 1
    assert num % den == 0
    return num // den


def serialize(sub, d, q):
    """Match the C++ textual format: d:k:q: then base-36 rows joined by ';'."""
    digits = "0123456789abcdefghijklmnopqrstuvwxyz"
    rows = [''.join(digits[e] for e in row) for row in sub]
    return f"{d}:{len(sub)}:{q}:" + ';'.join(rows)


# -------------------------------------------------- packed GF(2) fast path

def pack2(sub, d):
    return tuple(int(''.join(str(x) for x in row), 2) for row in sub)


def rank2(vecs):
    basis = [0] * 33
    r = 0
    for v in vecs:
        while v:
            h = v.bit_length() - 1
            if basis[h]:
                v ^= basis[h]
            else:
                basis[h] = v
                r += 1
                break
    return r


def skew2(u, w):
    return rank2(list(u) + list(w)) == len(u) + len(w)


def contains2(big, small):
    return rank2(list(big) + list(small)) == len(big)


# ------------------------------------------------------------------- flags

def sub_of(space_rows, rel, q):
    """Subspace spanned by rel (rows of coefficients) applied to space_rows."""
    k = len(space_rows)
    d = len(space_rows[0])
    rows = []
    for coeffs in rel:
        v = [0] * d
        for c, row in zip(coeffs, space_rows):
            if c:
                for j in range(d):
                    v[j] = (v[j] + c * row[j]) % q
        rows.append(tuple(v))
    return rref(rows, q)


def enumerate_flags(n, q):
    """All (vdim n, vdim n+1) incident pairs of GF(q)^(2n+1), ordered by
    (B index, A index) in the canonical subspace orders."""
    d = 2 * n + 1
    aspaces = enumerate_subspaces(d, n, q)
    bspaces = enumerate_subspaces(d, n + 1, q)
    aidx = {s: i for i, s in enumerate(aspaces)}
    rels = enumerate_subspaces(n + 1, n, q)
    flags = []
    for bi, b in enumerate(bspaces):
        sub = sorted(aidx[sub_of(b, rel, q)] for rel in rels)
        for ai in sub:
            flags.append((ai, bi))
    return aspaces, bspaces, flags


def main():
    report = {}

    # --- corrected flag count at (n=2, q=3) ------------------------------
    print("== subspace counts ==")
    g533 = gauss(5, 3, 3)
    print(f"gauss(5,3,3) = {g533}")
    assert g533 == 1210
    print(f"flags(2,3) by formula = {g533 * gauss(3, 1, 3)}")
    assert g533 * gauss(3, 1, 3) == 15730
    n23 = len(enumerate_subspaces(5, 3, 3))
    assert n23 == 1210, n23
    print("enumeration of 3-subspaces of GF(3)^5 confirms 1210")

    # --- Fano flags (n=1, q=2): V, regularity, E -------------------------
    print("== gamma(1,2) ==")
    asp, bsp, flags = enumerate_flags(1, 2)
    V = len(flags)
    degs = []
    for i, (a1, b1) in enumerate(flags):
        dg = sum(1 for j, (a2, b2) in enumerate(flags) if j != i and
                 meet_dim(asp[a1], bsp[b2], 2) == 0 and
                 meet_dim(asp[a2], bsp[b1], 2) == 0)
        degs.append(dg)
    E = sum(degs) // 2
    print(f"V={V} degrees={sorted(set(degs))} E={E}")
    assert V == 21 and set(degs) == {8} and E == 84

    # --- gamma(2,2): full regularity check --------------------------------
    print("== gamma(2,2) ==")
    asp, bsp, flags = enumerate_flags(2, 2)
    V = len(flags)
    assert V == 1085, V
    pa = [pack2(s, 5) for s in asp]
    pb = [pack2(s, 5) for s in bsp]
    nA, nB = len(pa), len(pb)
    skewAB = [[skew2(pa[i], pb[j]) for j in range(nB)] for i in range(nA)]
    degs = []
    for i, (a1, b1) in enumerate(flags):
        dg = 0
        ra = skewAB[a1]
        for j, (a2, b2) in enumerate(flags):
            if j != i and ra[b2] and skewAB[a2][b1]:
                dg += 1
        degs.append(dg)
    E = sum(degs) // 2
    print(f"V={V} degset={sorted(set(degs))} E={E}")
    assert set(degs) == {256} and E == 138880

    # --- gamma(2,3): V and spot degrees -----------------------------------
    print("== gamma(2,3) ==")
    asp3, bsp3, flags3 = enumerate_flags(2, 3)
    V3 = len(flags3)
    print(f"V={V3}")
    assert V3 == 15730
    for i in (0, 7000, 15729):
        a1, b1 = flags3[i]
        rowa = [meet_dim(asp3[a1], B, 3) == 0 for B in bsp3]
        colb = [meet_dim(A, bsp3[b1], 3) == 0 for A in asp3]
        dg = sum(1 for j, (a2, b2) in enumerate(flags3)
                 if j != i and rowa[b2] and colb[a2])
        print(f"deg(flag {i}) = {dg}")
        assert dg == 6561

    # --- Lemma 4.3 golden counts ------------------------------------------
    print("== lemma 4.3 goldens ==")
    L1 = ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0))
    L2 = ((0, 0, 1, 0, 0), (0, 0, 0, 1, 0))
    L3 = ((1, 0, 1, 0, 0), (0, 1, 0, 1, 1))
    for q, key in ((2, 'N22'), (3, 'N23')):
        assert meet_dim(L1, L2, q) == 0
        assert meet_dim(L1, L3, q) == 0
        assert meet_dim(L2, L3, q) == 0
        planes = enumerate_subspaces(5, 3, q)
        cnt = 0
        for B in planes:
            if all(meet_dim(B, L, q) >= 1 for L in (L1, L2, L3)):
                cnt += 1
        report[key] = cnt
        print(f"{key} = {cnt}  (of {len(planes)} n-spaces)")
    n22c, n23c = report['N22'], report['N23']
    print(f"growth: N23/27 = {Fraction(n23c,27)}  4*N22/8 = {Fraction(4*n22c,8)}")
    assert Fraction(n23c, 27) <= Fraction(4 * n22c, 8)

    # --- Example 1 family a_i at (2,2): size, colors, lemma 4.4 ----------
    print("== example a_i (2,2) ==")
    H = ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0))
    X = ((1, 0, 0, 0, 0),)
    pH = pack2(H, 5)
    pX = pack2(X, 5)
    members = []
    for (ai, bi) in flags:
        A, B = pa[ai], pb[bi]
        if contains2(pH, B) or (contains2(A, pX) and contains2(pH, A)):
            members.append((ai, bi))
    size = len(members)
    print(f"size = {size}")
    assert size == 133
    for i in range(size):
        a1, b1 = members[i]
        for j in range(i + 1, size):
            a2, b2 = members[j]
            assert not (skewAB[a1][b2] and skewAB[a2][b1])
    print("coclique confirmed (exhaustive pair scan)")
    wb = Counter(bi for (_, bi) in members)
    spectrum = Counter(wb.values())
    print(f"B-weight spectrum = {dict(spectrum)}")
    assert set(spectrum) == {7, 1} and spectrum[7] == 15 and spectrum[1] == 28
    red_b = [bi for bi, c in wb.items() if c == 7]
    assert all(contains2(pH, pb[bi]) for bi in red_b)
    yellow_b = sorted(bi for bi, c in wb.items() if c == 1)
    counts44 = {}
    for bi in yellow_b:
        B = pb[bi]
        distinct = set()
        for (ai2, bi2) in members:
            if skew2(pa[ai2], B):
                distinct.add(bi2)
        counts44[bi] = len(distinct)
    mx = max(counts44.values())
    mn = min(counts44.values())
    first_bi = yellow_b[0]
    print(f"lemma4.4 counts over 28 yellow planes: min={mn} max={mx}")
    assert mx <= 21
    print(f"canonical first yellow plane: {serialize(bsp[first_bi], 5, 2)}")
    print(f"lemma4.4 golden count for it: {counts44[first_bi]}")
    report['L44_first_yellow'] = serialize(bsp[first_bi], 5, 2)
    report['L44_count'] = counts44[first_bi]
    report['L44_max'] = mx

    # --- Example sizes at (2,3) and (3,2) ---------------------------------
    print("== example b_ii (2,3) ==")
    P = ((1, 0, 0, 0, 0),)
    Xl = ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0))
    hasP = [contains(A, P, 3) for A in asp3]
    hasX = [contains(B, Xl, 3) for B in bsp3]
    cnt = sum(1 for (ai, bi) in flags3 if hasP[ai] or hasX[bi])
    print(f"size = {cnt}")
    assert cnt == 637

    print("== example a_ii (3,2) ==")
    asp7, bsp7, flags7 = enumerate_flags(3, 2)
    print(f"V(3,2) = {len(flags7)}")
    assert len(flags7) == 177165
    pa7 = [pack2(s, 7) for s in asp7]
    pb7 = [pack2(s, 7) for s in bsp7]
    pH7 = tuple(1 << (6 - i) for i in range(6))
    pX7 = tuple(1 << (6 - i) for i in range(5))
    inH = [contains2(pH7, B) for B in pb7]
    inX = [contains2(pX7, A) for A in pa7]
    cnt = sum(1 for (ai, bi) in flags7 if inH[bi] or inX[ai])
    print(f"size = {cnt}")
    assert cnt == 11005

    # --- Remark 2.5 ratio table -------------------------------------------
    print("== remark 2.5 ratios ==")
    for n in (3, 4):
        prev = None
        for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
            D = gauss(2 * n, n - 1, q) - q ** (n * (n - 1)) * gauss(n, 1, q)
            r = Fraction(D, q ** (n * n - 2))
            assert r <= 4, (n, q, r)
            if prev is not None:
                assert r <= prev, f"not monotone at n={n} q={q}"
            prev = r
            print(f"  n={n} q={q:2d} ratio={float(r):.4f}")
    print("ratios bounded by 4 and monotone non-increasing")

    # --- f bound sanity ----------------------------------------------------
    def f_bound(n, q):
        if n == 3:
            return q**5 + 2*q**4 + 3*q**3 + 2*q**2 + q + 1
        assert n >= 4 and q >= 4
        return 3 * gauss(n, 1, q) * gauss(2 * n - 2, n - 2, q)

    assert f_bound(3, 2) == 99
    assert f_bound(4, 4) == 23738715
    for n in (3, 4, 5):
        for q in (4, 5, 7, 8, 9):
            assert f_bound(n, q) < gauss(2 * n - 1, n - 1, q), (n, q)
    print("f-bound branch values and comparisons confirmed")

    print()
    print("GOLDEN:", report)


if __name__ == '__main__':
    sys.exit(main())
