#!/usr/bin/env python3
"""Generates tests/fixtures/expected.json.

Reference values are computed here independently of the C++ implementation,
using exact python Fractions only. The script also cross-checks the closed
forms against each other (factorization identities, specialized vs general
polynomial forms) and aborts if any internal check fails, so a frozen
fixture file implies the transcriptions are mutually consistent.
"""

import json
import math
import os
import sys
import hashlib
from fractions import Fraction

F = Fraction


def fstr(x):
    x = F(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def isqrt_exact(n):
    if n < 0:
        return None
    s = math.isqrt(n)
    return s if s * s == n else None


def squarefree_decompose(n):
    """n >= 1 -> (c, d) with n = c^2 * d, d squarefree."""
    assert n >= 1
    c, d, p = 1, 1, 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        c *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1
    return c, d * n


def quad(a, b=F(0), d=0):
    """Normalized a + b*sqrt(d) as a JSON-ready dict."""
    a, b = F(a), F(b)
    if b == 0 or d == 0:
        return {"a": fstr(a + (b if d == 1 else 0)), "b": "0", "d": 0}
    sign = -1 if d < 0 else 1
    c, d0 = squarefree_decompose(abs(d))
    b, d = b * c, sign * d0
    if d == 1:
        return {"a": fstr(a + b), "b": "0", "d": 0}
    return {"a": fstr(a), "b": fstr(b), "d": d}


def sqrt_quad(x):
    """Principal square root of a rational as a quad dict (imaginary if x<0)."""
    x = F(x)
    if x == 0:
        return quad(0)
    cp, dp = squarefree_decompose(abs(x.numerator))
    cq, dq = squarefree_decompose(x.denominator)
    coef = F(cp * cq, x.denominator)
    d = dp * dq
    return quad(0, coef, d if x > 0 else -d)


# ---------------------------------------------------------------- polynomials

def ptrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(p, q):
    n = max(len(p), len(q))
    return ptrim([ (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n) ])


def pneg(p):
    return [-c for c in p]


def pmul(p, q):
    if not p or not q:
        return []
    out = [F(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return ptrim(out)


def pscale(p, k):
    return ptrim([c * k for c in p])


def pderiv(p):
    return ptrim([p[i] * i for i in range(1, len(p))])


def pdivrem(a, b):
    a, b = list(a), list(b)
    assert b
    q = [F(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while r and len(r) >= len(b):
        k = r[-1] / b[-1]
        dpos = len(r) - len(b)
        q[dpos] = k
        for i in range(len(b)):
            r[dpos + i] -= k * b[i]
        ptrim(r)
    return ptrim(q), r


def peval(p, x):
    acc = F(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sturm_chain(p):
    chain = [ptrim(list(p))]
    d = pderiv(chain[0])
    if d:
        chain.append(d)
        while True:
            _, r = pdivrem(chain[-2], chain[-1])
            if not r:
                break
            chain.append(pneg(r))
    return chain


def sign(x):
    return (x > 0) - (x < 0)


def variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def count_roots(chain, lo=None, hi=None):
    """Distinct real roots in the open interval (lo, hi); None = infinity."""
    def v_at(x, at_plus_inf=None):
        if x is None:
            if at_plus_inf:
                return variations([sign(q[-1]) for q in chain])
            return variations([sign(q[-1]) * (-1) ** (len(q) - 1) for q in chain])
        assert peval(chain[0], x) != 0, "endpoint is a root"
        return variations([sign(peval(q, x)) for q in chain])

    return v_at(lo, at_plus_inf=False) - v_at(hi, at_plus_inf=True)


# ------------------------------------------------------------------ SRG layer

def srg_params(n, k1, lam, mu, _swapped=False):
    """Returns dict (accepted) or {"rejected": code, ...}."""
    def rej(code, **kw):
        return {"rejected": code, **{k: str(v) for k, v in kw.items()}}

    if not (3 <= n and 1 <= k1 <= n - 2 and 0 <= lam <= k1 - 1 and 0 <= mu <= k1):
        return rej("range")
    k2 = n - 1 - k1
    if k2 * mu != k1 * (k1 - lam - 1):
        return rej("identity_violation", lhs=k2 * mu, rhs=k1 * (k1 - lam - 1))
    # restricted eigenvalues: roots of x^2 - (lam-mu) x - (k1-mu)
    if lam - mu <= -2 and not _swapped:
        return srg_params(n, k2, n - 2 - 2 * k1 + mu, n - 2 * k1 + lam, _swapped=True) | {"swapped": True}
    q = (lam - mu) ** 2 + 4 * (k1 - mu)
    sq = isqrt_exact(q)
    if sq is None:
        if 2 * k1 + (n - 1) * (lam - mu) != 0:
            return rej("m_irrational")
        if (n - 1) % 2:
            return rej("m1_not_integral", witness=F(n - 1, 2))
        m1 = m2 = (n - 1) // 2
        r = None  # irrational: (lam-mu von +/- sqrt(q))/2
    else:
        num1 = F(n - 1) - F(2 * k1 + (n - 1) * (lam - mu), sq)
        m1, m2 = num1 / 2, F(n - 1) - num1 / 2
        if m1.denominator != 1 or m2.denominator != 1:
            return rej("m1_not_integral", witness=m1)
        if m1 < 1 or m2 < 1:
            return rej("range")
        r, s = F(lam - mu + sq, 2), F(lam - mu - sq, 2)
        if s == -1:
            return rej("s_eq_minus_one")
    if lam == k1 - 1 or mu == 0:
        return rej("s_eq_minus_one")
    if k2 < 2:
        return rej("k2_lt_2")
    conf_i = (lam - mu == -1) and (k1 == 2 * (k1 - mu))
    conf_ii = (m1 == m2)
    assert conf_i == conf_ii, (n, k1, lam, mu)
    out = {
        "n": n, "k1": k1, "k2": k2, "lambda": lam, "mu": mu,
        "m1": fstr(m1), "m2": fstr(m2), "conference": conf_i,
        "r": quad(F(lam - mu, 2), F(1, 2), q), "s": quad(F(lam - mu, 2), F(-1, 2), q),
    }
    return out


# --------------------------------------------------------------------- graphs

def paley(qq):
    assert qq % 4 == 1 and qq <= 2000
    p = None
    if isqrt_exact(qq) and all(isqrt_exact(qq) % i for i in range(2, math.isqrt(math.isqrt(qq)) + 1)) and isqrt_exact(qq) > 1:
        p = math.isqrt(qq)
        deg = 2
    elif all(qq % i for i in range(2, math.isqrt(qq) + 1)):
        p, deg = qq, 1
    assert p is not None, f"unsupported order {qq}"
    if deg == 1:
        sq = {x * x % p for x in range(1, p)}
        rel = [[0 if i == j else (1 if (i - j) % p in sq else 2) for j in range(p)] for i in range(p)]
        return rel
    # GF(p^2) = Z_p[x]/(x^2 - t), t the smallest quadratic non-residue mod p
    sqp = {x * x % p for x in range(1, p)}
    t = next(u for u in range(2, p) if u not in sqp)
    n = p * p

    def mul(x, y):
        a1, b1 = divmod(x, p)
        a2, b2 = divmod(y, p)
        return ((a1 * a2 + b1 * b2 * t) % p) * p + (a1 * b2 + a2 * b1) % p

    squares = {mul(x, x) for x in range(1, n)}

    def sub(x, y):
        a1, b1 = divmod(x, p)
        a2, b2 = divmod(y, p)
        return ((a1 - a2) % p) * p + (b1 - b2) % p

    return [[0 if i == j else (1 if sub(i, j) in squares else 2) for j in range(n)] for i in range(n)]


def triangular(m):
    verts = [(i, j) for i in range(m) for j in range(i + 1, m)]
    n = len(verts)
    return [[0 if a == b else (1 if len(set(verts[a]) & set(verts[b])) == 1 else 2)
             for b in range(n)] for a in range(n)]


def graph_text(rel):
    return str(len(rel)) + "\n" + "\n".join("".join(str(c) for c in row) for row in rel) + "\n"


def srg_of_graph(rel):
    n = len(rel)
    k = sum(1 for j in range(n) if rel[0][j] == 1)
    lam = mu = None
    for i in range(n):
        assert rel[i][i] == 0
        assert sum(1 for j in range(n) if rel[i][j] == 1) == k
        for j in range(n):
            assert rel[i][j] == rel[j][i]
            if i == j:
                continue
            c = sum(1 for z in range(n) if rel[i][z] == 1 and rel[z][j] == 1)
            if rel[i][j] == 1:
                assert lam in (None, c)
                lam = c
            else:
                assert mu in (None, c)
                mu = c
    return n, k, lam, mu


# ------------------------------------------------------- weight-locus closed forms

def lms_general(r, s):
    r, s = F(r), F(s)
    e1, e2 = r + s, r * s
    L = [e2 * (e1 * e1 + 4 * e2 + 2 * e1 + 2) / 2, (-4 * e2 * (e1 - 1) + 1) / 2, (4 * e2 - e1 + 3) / 2, F(1)]
    M = padd(L, pneg(pmul([e2, F(1)], pscale([e2, F(1)], 4))))
    s4 = (r + s + 1) ** 2
    s3 = 4 * s * r ** 3 + 8 * s * (s + 1) * r ** 2 + (4 * s ** 3 + 8 * s ** 2 + 8 * s + 2) * r + 2 * s + 2
    s2 = (2 * s * (2 * s - 1) * r ** 4 + 2 * s * (s + 1) * (4 * s - 3) * r ** 3
          + 2 * s * (2 * s ** 3 + s ** 2 + 6 * s + 4) * r ** 2
          - 2 * s * (s + 1) * (s ** 2 + 2 * s - 6) * r + 1)
    s1 = -2 * r * s * (2 * s * r ** 4 + 6 * s * (s + 1) * r ** 3
                       + (6 * s ** 3 - 4 * s ** 2 - 8 * s - 1) * r ** 2
                       + 2 * (s + 1) * (s ** 3 + 2 * s ** 2 - 6 * s - 1) * r
                       - s ** 2 - 2 * s - 2)
    s0 = r ** 2 * s ** 2 * (r ** 4 + 4 * (s + 1) * r ** 3 + (22 * s ** 2 + 28 * s + 8) * r ** 2
                            + 4 * (s + 1) * (s ** 2 + 6 * s + 2) * r + (s ** 2 + 2 * s + 2) ** 2)
    S = ptrim([s0, s1, s2, s3, s4])
    return L, M, S


def lms_conference(rho):
    """r+s = -1 specialization, rho = r(r+1) = k1 - mu (rational)."""
    rho = F(rho)
    L = [rho * (4 * rho - 1) / 2, -(8 * rho - 1) / 2, -2 * (rho - 1), F(1)]
    M = padd(L, pneg(pmul([-rho, F(1)], pscale([-rho, F(1)], 4))))
    S1 = [16 * rho ** 3 + rho, -(16 * rho ** 2 + 1), 4 * rho]
    S = pneg(pmul([-rho, F(1)], S1))
    return L, M, S


def lms_rs0(r):
    """s = -r specialization; L is the monic product (X^2+X/2-r^2)(X-(2r^2-1))."""
    r = F(r)
    bp = 2 * r * r - 1
    L = pmul([-r * r, F(1, 2), F(1)], [-bp, F(1)])
    M = pscale(pmul([2 * r * r + 1, F(-5), F(2)], [-(bp + 1), F(1)]), F(1, 2))
    S = pmul(pmul([-bp, F(1)], [-bp, F(1)]), pmul([-bp - 1, F(1)], [-bp - 1, F(1)]))
    return L, M, S


def crit_quads(r, s):
    """The four rational quadratics whose roots are the critical points."""
    e1, e2 = F(r) + F(s), F(r) * F(s)
    T = e2 * (e2 + e1 + 1)
    Qa = [2 * e2, -(e1 - 1), F(1)]
    Qb = [e2 * e2 + e2 - T, 2 * e2 + 1, F(1)]
    Qg = [-2 * e2, -(e1 + 3), F(1)]
    Qb1 = [e2 * e2 - e2 - T, 2 * e2 - 1, F(1)]
    return Qa, Qb, Qg, Qb1, T


def h0_l0(k, e1, e2):
    h0 = (-k ** 5 + (e1 - 2 * e2 + 1) * k ** 4 + 3 * e2 * (e1 + 1) * k ** 3
          - e2 * (e1 ** 2 + 2 * e1 - 1) * k ** 2 + 4 * e2 ** 2 * k + 2 * e2 ** 3)
    l0 = k * (k - e1 - 1) * (k ** 2 + 2 * e2 * k - e2 * (e1 + 1))
    return h0, l0


def check(cond, msg):
    if not cond:
        print("ORACLE SELF-CHECK FAILED:", msg, file=sys.stderr)
        sys.exit(1)


def self_checks():
    import random
    rng = random.Random(20260817)
    for _ in range(60):
        r = F(rng.randint(0, 40), rng.randint(1, 9))
        smin = -1 - r
        s = smin + F(rng.randint(0, 50), 51) * (F(-1) - smin)  # in [-1-r, -1)
        if s >= -1 or r == 0:
            continue
        L, M, S = lms_general(r, s)
        Ls, Ms, Ss = lms_general(s, r)
        check((L, M, S) == (Ls, Ms, Ss), f"L/M/S not symmetric at {r},{s}")
        Qa, Qb, Qg, Qb1, T = crit_quads(r, s)
        lhs1 = padd(pmul(L, L), pscale(S, F(-1, 4)))
        check(lhs1 == pmul(Qa, pmul(Qb, Qb)), f"first factorization fails at {r},{s}")
        lhs2 = padd(pmul(M, M), pscale(S, F(-1, 4)))
        check(lhs2 == pmul(Qg, pmul(Qb1, Qb1)), f"second factorization fails at {r},{s}")
        e2 = r * s
        check(M == padd(L, pneg(pmul([e2, F(1)], pscale([e2, F(1)], 4)))), "M != L - 4(X+rs)^2")
        # values at -rs
        vL, vM = peval(L, -e2), peval(M, -e2)
        check(vL == vM == T * ((2 * s + 1) * r + s + 1) / 2, f"value at -rs wrong at {r},{s}")
        check(peval(S, -e2) == T ** 2 * (r + s + 1) ** 2, f"S at -rs wrong at {r},{s}")
    # specializations agree with the general form
    for rho_pair in [(1, -2), (2, -3), (3, -4), (F(1, 2), F(-3, 2))]:
        r, s = map(F, rho_pair)
        check(lms_general(r, s) == tuple(lms_conference(r * (r + 1))), f"conference form mismatch at {r}")
    for r in range(2, 12):
        check(lms_general(r, -r) == tuple(lms_rs0(r)), f"r+s=0 form mismatch at r={r}")
    # conference values at X = k1 = 2*rho
    for k1 in range(2, 40, 2):
        rho = F(k1, 2)
        L, M, S = lms_conference(rho)
        check(peval(L, k1) == F(k1) * (2 * k1 + 1) / 4, "L(k1) conference")
        check(peval(M, k1) == -F(k1) * (2 * k1 - 1) / 4, "M(k1) conference")
        check(peval(S, k1) == F(k1) ** 2 / 4, "S(k1) conference")
        # quadratic for a1: (L-M)^2 a1^2 + 2(L^2-M^2) a1 + (L+M)^2 - S = 0
        LM = peval(L, k1) - peval(M, k1)
        check(LM == F(k1) ** 2, "L-M conference")
        e1, e2 = F(-1), -F(k1, 2)
        h0, l0 = h0_l0(F(k1), e1, e2)
        check(h0 == -F(k1) ** 3 / 4 and l0 == 0, "h0/l0 conference")
        for a1 in (F(0), F(-1, k1)):
            q = LM ** 2 * a1 ** 2 + 2 * (peval(L, k1) ** 2 - peval(M, k1) ** 2) * a1 \
                + (peval(L, k1) + peval(M, k1)) ** 2 - peval(S, k1)
            check(q == 0, f"a1 root {a1} fails at k1={k1}")
            a0 = (2 * k1 ** 2 * (k1 + e2) ** 2 * a1 - h0) / (2 * e2 * (k1 + e2) ** 2)
            T = e2 * (e2 + e1 + 1)
            a2 = (2 * (k1 + e2) ** 3 * a1 + l0) / (2 * (k1 + e2) * T)
            check((a0, a2) == ((F(-1), F(0)) if a1 == 0 else (F(1), F(-1, k1))), "a0/a2 conference")
    for r in range(2, 12):
        k1, e1, e2 = F(2 * r * r), F(0), F(-r * r)
        L, M, S = lms_rs0(r)
        check(peval(L, k1) == 4 * F(r) ** 4 and peval(M, k1) == 0 and peval(S, k1) == 0, "values at 2r^2")
        h0, l0 = h0_l0(k1, e1, e2)
        a1 = F(-1)
        a0 = (2 * k1 ** 2 * (k1 + e2) ** 2 * a1 - h0) / (2 * e2 * (k1 + e2) ** 2)
        T = e2 * (e2 + e1 + 1)
        a2 = (2 * (k1 + e2) ** 3 * a1 + l0) / (2 * (k1 + e2) * T)
        check((a0, a2) == (F(1), F(1)), f"a0/a2 at k1=2r^2, r={r}")


def main():
    self_checks()
    out = {}

    tuples = [(9, 4, 1, 2), (15, 8, 4, 4), (13, 6, 2, 3), (5, 2, 0, 1), (25, 12, 5, 6),
              (10, 3, 0, 1), (10, 6, 3, 4), (16, 5, 0, 2), (16, 10, 6, 6), (17, 8, 3, 4),
              (29, 14, 6, 7), (37, 18, 8, 9), (41, 20, 9, 10), (49, 24, 11, 12),
              (6, 3, 0, 3), (15, 7, 3, 3), (35, 17, 8, 8), (8, 3, 1, 1), (50, 7, 0, 1),
              (21, 10, 4, 5), (45, 12, 3, 3), (63, 32, 16, 16), (99, 50, 25, 25)]
    out["srg"] = {",".join(map(str, t)): srg_params(*t) for t in tuples}

    graphs = {f"paley{q}": paley(q) for q in (5, 9, 13, 17, 25, 29, 37, 41, 49)}
    graphs["triangular5"] = triangular(5)
    graphs["triangular6"] = triangular(6)
    out["graphs"] = {}
    for name, rel in graphs.items():
        n, k, lam, mu = srg_of_graph(rel)
        out["graphs"][name] = {
            "n": n, "k1": k, "lambda": lam, "mu": mu,
            "sha256": hashlib.sha256(graph_text(rel).encode()).hexdigest(),
        }

    def coeffs(p):
        return [fstr(c) for c in p]

    out["lms"] = {}
    for key, (r, s) in {"1,-2": (1, -2), "2,-3": (2, -3), "2,-2": (2, -2),
                        "5/2,-7/4": (F(5, 2), F(-7, 4)), "3,-2": (3, -2)}.items():
        L, M, S = lms_general(r, s)
        out["lms"][key] = {"L": coeffs(L), "M": coeffs(M), "S": coeffs(S)}

    vals = {}
    for k1 in (4, 6, 12, 20):
        rho = F(k1, 2)
        L, M, S = lms_conference(rho)
        e1, e2 = F(-1), -rho
        h0, l0 = h0_l0(F(k1), e1, e2)
        vals[f"conference_k{k1}"] = {
            "L": fstr(peval(L, k1)), "M": fstr(peval(M, k1)), "S": fstr(peval(S, k1)),
            "a1_roots": [fstr(F(0)), fstr(F(-1, k1))],
            "a0_a2": [[fstr(F(-1)), fstr(F(0))], [fstr(F(1)), fstr(F(-1, k1))]],
            "h0": fstr(h0), "l0": fstr(l0),
        }
    for r in (2, 3):
        k1 = 2 * r * r
        L, M, S = lms_rs0(r)
        h0, l0 = h0_l0(F(k1), F(0), F(-r * r))
        vals[f"rs0_r{r}"] = {
            "L": fstr(peval(L, k1)), "M": fstr(peval(M, k1)), "S": fstr(peval(S, k1)),
            "a1": "-1", "a0": "1", "a2": "1", "h0": fstr(h0), "l0": fstr(l0),
        }
    out["lms"]["values_at_k1"] = vals

    # Sturm fixtures
    st = {}
    chain = sturm_chain([F(-2), F(0), F(1)])
    st["x2_minus_2"] = {
        "chain": [coeffs(p) for p in chain],
        "count_all": count_roots(chain),
        "count_0_2": count_roots(chain, F(0), F(2)),
    }
    rep = pmul(pmul([F(-1), F(1)], [F(-1), F(1)]), [F(2), F(1)])
    st["repeated_x1sq_xp2"] = {"poly": coeffs(rep), "count_all": count_roots(sturm_chain(rep))}
    for (r, u) in [(3, 1), (5, 2), (7, 3)]:
        s = u - r
        L, M, S = lms_general(r, s)
        chain = sturm_chain(S)
        degs = [len(p) - 1 for p in chain]
        leads = [sign(p[-1]) for p in chain]
        alts = [sign(p[-1]) * (-1) ** (len(p) - 1) for p in chain]
        rr, uu = F(r), F(u)
        g1 = 4 * uu * (uu + 2) * (uu * (uu + 2) - 2) * rr * (rr + 1) * (rr - uu) * (rr - uu - 1) + (uu + 1) ** 2
        g2 = 2 * rr * (rr + 1) * (rr - uu) * (rr - uu - 1) * (
            8 * uu * (uu + 2) * rr * (rr + 1) * (rr - uu) * (rr - uu - 1) + 7 * uu * (uu + 2) - 1) - 1
        g3 = 16 * uu * (uu + 2) * rr * (rr + 1) * (rr - uu) * (rr - uu - 1) - 1
        c2 = g1 / (4 * (uu + 1) ** 2)
        c3 = -32 * uu ** 2 * (uu + 1) ** 2 * (uu + 2) ** 2 * rr * (rr + 1) * (rr - uu) * (rr - uu - 1) * g2 / g1 ** 2
        c4 = -rr ** 2 * (rr + 1) ** 2 * (rr - uu) ** 2 * (rr - uu - 1) ** 2 * g1 ** 2 * g3 / (4 * (uu + 1) ** 2 * g2 ** 2)
        check(degs == [4, 3, 2, 1, 0], f"chain degrees at {r},{u}")
        check(chain[2][-1] == c2 and chain[3][-1] == c3 and chain[4][-1] == c4,
              f"chain leading coefficients disagree with closed forms at {r},{u}")
        check(leads == [1, 1, 1, -1, -1] and alts == [1, -1, 1, 1, -1], f"sign rows at {r},{u}")
        st[f"S_chain_{r}_{u}"] = {
            "degrees": degs, "lead_signs": leads, "alt_signs": alts,
            "c2": fstr(c2), "c3": fstr(c3), "c4": fstr(c4),
            "g1": fstr(g1), "g2": fstr(g2), "g3": fstr(g3),
            "count_all": count_roots(chain),
        }
    out["sturm"] = st

    # Hadamard-side fixtures
    had = {}
    had["beta1_paley9_ia"] = {"beta": quad(-1, 3, -1), "abs2": "10"}
    had["ek_paley9_w_1_i_minus_i"] = {"e0": quad(2), "e1_vanishes": True, "e2_vanishes": True}
    for k1 in (12, 24, 2, 4, 6):
        c, d = squarefree_decompose(k1 * k1 - 1)
        had[f"ib_w1_k{k1}"] = {"w1": quad(F(-1, k1), F(c, k1), -d)}
    had["ii_weights"] = [quad(1), quad(-1), quad(1)]
    eig9 = srg_params(9, 4, 1, 2)
    had["eigenmatrix_9"] = [[quad(1), quad(4), quad(4)],
                            [quad(1), quad(1), quad(-2)],
                            [quad(1), quad(-2), quad(1)]]
    had["eigenmatrix_13"] = [[quad(1), quad(6), quad(6)],
                             [quad(1), {"a": "-1/2", "b": "1/2", "d": 13}, {"a": "-1/2", "b": "-1/2", "d": 13}],
                             [quad(1), {"a": "-1/2", "b": "-1/2", "d": 13}, {"a": "-1/2", "b": "1/2", "d": 13}]]
    out["hadamard"] = had

    # expected scan(300) support
    conf_n = [n for n in range(5, 301, 4) if srg_params(n, (n - 1) // 2, (n - 5) // 4, (n - 1) // 4).get("rejected") is None]
    tii = []
    for r in range(2, 9):
        n = 4 * r * r - 1
        if n <= 300:
            tii.append([n, 2 * r * r, r * r, r * r])
    out["scan300"] = {"conference_n": conf_n, "theorem_ii": tii}

    out["misc"] = {
        "squarefree": {str(m): list(squarefree_decompose(m)) for m in (575, 143, 48, 1, 4, 360, 9999)},
        "sqrt_quad": {"-4": sqrt_quad(-4), "18": sqrt_quad(18), "4/9": sqrt_quad(F(4, 9)),
                      "-143/144": sqrt_quad(F(-143, 144)), "97": sqrt_quad(97)},
    }

    path = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests", "fixtures", "expected.json")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        json.dump(out, f, indent=1, sort_keys=True, default=str)
        f.write("\n")
    print(f"wrote {os.path.normpath(path)}")


if __name__ == "__main__":
    main()
