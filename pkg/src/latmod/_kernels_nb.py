"""Loop kernels for the exhaustive quantifier sweeps.

Every function here is nopython-compatible; `kernels` compiles them with
numba when the accelerated backend is active.  Tables are int64 index
arrays, order relations are bool matrices.  Witness scans run in ascending
index order so both backends report identical first witnesses.
"""

from __future__ import annotations

import numpy as np


def mul_axiom_witnesses(leq, meet, join, mul, bot, top):
    # rows: commutative, associative, join-distributive, identity,
    #       zero-annihilates, product-below-meet; -1 means no violation
    n = mul.shape[0]
    out = np.full((6, 3), -1, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            if mul[a, b] != mul[b, a]:
                out[0, 0] = a
                out[0, 1] = b
                break
        if out[0, 0] >= 0:
            break
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                    out[1, 0] = a
                    out[1, 1] = b
                    out[1, 2] = c
                    break
            if out[1, 0] >= 0:
                break
        if out[1, 0] >= 0:
            break
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a, join[b, c]] != join[mul[a, b], mul[a, c]]:
                    out[2, 0] = a
                    out[2, 1] = b
                    out[2, 2] = c
                    break
            if out[2, 0] >= 0:
                break
        if out[2, 0] >= 0:
            break
    for a in range(n):
        if mul[top, a] != a:
            out[3, 0] = a
            break
    for a in range(n):
        if mul[bot, a] != bot:
            out[4, 0] = a
            break
    for a in range(n):
        for b in range(n):
            if not leq[mul[a, b], meet[a, b]]:
                out[5, 0] = a
                out[5, 1] = b
                break
        if out[5, 0] >= 0:
            break
    return out


def module_axiom_witnesses(join_l, mul_l, join_m, action, bot_l, top_l, bot_m):
    # rows: scalar-join-distributive, carrier-join-distributive,
    #       acts-on-bottom, associative-action, identity-action,
    #       zero-scalar-annihilates
    nl = action.shape[0]
    nm = action.shape[1]
    out = np.full((6, 3), -1, dtype=np.int64)
    for a in range(nl):
        for b in range(nl):
            for A in range(nm):
                if action[join_l[a, b], A] != join_m[action[a, A], action[b, A]]:
                    out[0, 0] = a
                    out[0, 1] = b
                    out[0, 2] = A
                    break
            if out[0, 0] >= 0:
                break
        if out[0, 0] >= 0:
            break
    for a in range(nl):
        for A in range(nm):
            for B in range(nm):
                if action[a, join_m[A, B]] != join_m[action[a, A], action[a, B]]:
                    out[1, 0] = a
                    out[1, 1] = A
                    out[1, 2] = B
                    break
            if out[1, 0] >= 0:
                break
        if out[1, 0] >= 0:
            break
    for a in range(nl):
        if action[a, bot_m] != bot_m:
            out[2, 0] = a
            break
    for a in range(nl):
        for b in range(nl):
            for A in range(nm):
                if action[mul_l[a, b], A] != action[a, action[b, A]]:
                    out[3, 0] = a
                    out[3, 1] = b
                    out[3, 2] = A
                    break
            if out[3, 0] >= 0:
                break
        if out[3, 0] >= 0:
            break
    for A in range(nm):
        if action[top_l, A] != A:
            out[4, 0] = A
            break
    for A in range(nm):
        if action[bot_l, A] != bot_m:
            out[5, 0] = A
            break
    return out


def residual_scalar_table(leq, join, mul, bot):
    # res[a, b] = join of {x : x*b <= a}
    n = mul.shape[0]
    res = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            acc = bot
            for x in range(n):
                if leq[mul[x, b], a]:
                    acc = join[acc, x]
            res[a, b] = acc
    return res


def power_cap_vec(mul, top):
    # x**n for n = |L|; powers descend (x*y <= x ^ y), so this is the
    # stable value and x**k <= a for some k iff power_cap[x] <= a
    n = mul.shape[0]
    out = np.empty(n, dtype=np.int64)
    for x in range(n):
        p = x
        for _ in range(n - 1):
            p = mul[p, x]
        out[x] = p
    return out


def radical_vec(leq, join, powcap, bot):
    n = leq.shape[0]
    out = np.empty(n, dtype=np.int64)
    for a in range(n):
        acc = bot
        for x in range(n):
            if leq[powcap[x], a]:
                acc = join[acc, x]
        out[a] = acc
    return out


def principal_scalar_flags(meet, join, mul, res):
    # column 0: meet principal  a ^ (b*e) == ((a:e) ^ b) * e
    # column 1: join principal  ((a*e) v b) : e == (b:e) v a
    n = mul.shape[0]
    out = np.ones((n, 2), dtype=np.bool_)
    for e in range(n):
        for a in range(n):
            for b in range(n):
                if meet[a, mul[b, e]] != mul[meet[res[a, e], b], e]:
                    out[e, 0] = False
                if res[join[mul[a, e], b], e] != join[res[b, e], a]:
                    out[e, 1] = False
            if not out[e, 0] and not out[e, 1]:
                break
    return out


def scalar_classification_flags(leq, mul, rad, powcap, top):
    # columns: prime, primary, 2-absorbing, 2-absorbing-primary
    n = mul.shape[0]
    out = np.zeros((n, 4), dtype=np.bool_)
    for p in range(n):
        if p == top:
            continue
        prime = True
        primary = True
        for a in range(n):
            for b in range(n):
                if leq[mul[a, b], p]:
                    if not leq[a, p] and not leq[b, p]:
                        prime = False
                    if not leq[a, p] and not leq[powcap[b], p]:
                        primary = False
            if not prime and not primary:
                break
        two_abs = True
        two_abs_pri = True
        rq = rad[p]
        for a in range(n):
            for b in range(n):
                ab = mul[a, b]
                for c in range(n):
                    if leq[mul[ab, c], p]:
                        bc = mul[b, c]
                        ca = mul[c, a]
                        if not leq[ab, p]:
                            if not leq[bc, p] and not leq[ca, p]:
                                two_abs = False
                            if not leq[bc, rq] and not leq[ca, rq]:
                                two_abs_pri = False
                if not two_abs and not two_abs_pri:
                    break
            if not two_abs and not two_abs_pri:
                break
        out[p, 0] = prime
        out[p, 1] = primary
        out[p, 2] = two_abs
        out[p, 3] = two_abs_pri
    return out


def scalar_dl_primary_flags(leq, mul, dl, top):
    # p proper and: a*b <= p implies a <= p or b <= dl[p]
    n = mul.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for p in range(n):
        if p == top:
            continue
        good = True
        for a in range(n):
            for b in range(n):
                if leq[mul[a, b], p] and not leq[a, p] and not leq[b, dl[p]]:
                    good = False
                    break
            if not good:
                break
        out[p] = good
    return out


def residual_mm_table(leq_m, join_l, action, bot_l):
    # res[A, B] = join of {x in L : x.B <= A}
    nl = action.shape[0]
    nm = action.shape[1]
    res = np.empty((nm, nm), dtype=np.int64)
    for A in range(nm):
        for B in range(nm):
            acc = bot_l
            for x in range(nl):
                if leq_m[action[x, B], A]:
                    acc = join_l[acc, x]
            res[A, B] = acc
    return res


def residual_ma_table(leq_m, join_m, action, bot_m):
    # res[N, a] = join of {X in M : a.X <= N}
    nl = action.shape[0]
    nm = action.shape[1]
    res = np.empty((nm, nl), dtype=np.int64)
    for N in range(nm):
        for a in range(nl):
            acc = bot_m
            for X in range(nm):
                if leq_m[action[a, X], N]:
                    acc = join_m[acc, X]
            res[N, a] = acc
    return res


def module_prime_primary_flags(leq_m, action, ai, aipow, top_m):
    # prime:   a.X <= N implies X <= N or a.I <= N
    # primary: a.X <= N implies X <= N or (a**k).I <= N for some k
    nl = action.shape[0]
    nm = action.shape[1]
    out = np.zeros((nm, 2), dtype=np.bool_)
    for N in range(nm):
        if N == top_m:
            continue
        prime = True
        primary = True
        for a in range(nl):
            for X in range(nm):
                if leq_m[action[a, X], N] and not leq_m[X, N]:
                    if not leq_m[ai[a], N]:
                        prime = False
                    if not leq_m[aipow[a], N]:
                        primary = False
            if not prime and not primary:
                break
        out[N, 0] = prime
        out[N, 1] = primary
    return out


def module_semiprime_flags(leq_m, mul_l, ai, top_m):
    # (a*b).I <= N implies a.I <= N or b.I <= N
    nl = mul_l.shape[0]
    nm = leq_m.shape[0]
    out = np.zeros(nm, dtype=np.bool_)
    for N in range(nm):
        if N == top_m:
            continue
        good = True
        for a in range(nl):
            for b in range(nl):
                if leq_m[ai[mul_l[a, b]], N] and not leq_m[ai[a], N] and not leq_m[ai[b], N]:
                    good = False
                    break
            if not good:
                break
        out[N] = good
    return out


def module_meet_prime_flags(leq_m, meet_m, top_m):
    nm = leq_m.shape[0]
    out = np.zeros(nm, dtype=np.bool_)
    for N in range(nm):
        if N == top_m:
            continue
        good = True
        for A in range(nm):
            for B in range(nm):
                if leq_m[meet_m[A, B], N] and not leq_m[A, N] and not leq_m[B, N]:
                    good = False
                    break
            if not good:
                break
        out[N] = good
    return out


def module_2abs_flags(leq_l, leq_m, mul_l, action, colon_im, rad_i, top_m):
    # 2-absorbing:          a.b.X <= Q -> ab <= (Q:I) or b.X <= Q or a.X <= Q
    # 2-absorbing primary:  a.b.X <= Q -> ab <= (Q:I) or b.X <= rI or a.X <= rI
    # where rI = (sqrt(Q:I)).I, passed in as rad_i[Q]
    nl = action.shape[0]
    nm = action.shape[1]
    out = np.zeros((nm, 2), dtype=np.bool_)
    for Q in range(nm):
        if Q == top_m:
            continue
        two_abs = True
        two_abs_pri = True
        ci = colon_im[Q]
        ri = rad_i[Q]
        for a in range(nl):
            for b in range(nl):
                ab = mul_l[a, b]
                if leq_l[ab, ci]:
                    continue
                for X in range(nm):
                    if leq_m[action[ab, X], Q]:
                        bx = action[b, X]
                        ax = action[a, X]
                        if not leq_m[bx, Q] and not leq_m[ax, Q]:
                            two_abs = False
                        if not leq_m[bx, ri] and not leq_m[ax, ri]:
                            two_abs_pri = False
                if not two_abs and not two_abs_pri:
                    break
            if not two_abs and not two_abs_pri:
                break
        out[Q, 0] = two_abs
        out[Q, 1] = two_abs_pri
    return out


def module_principal_flags(meet_l, join_l, meet_m, join_m, action, res_mm):
    # meet principal N: (b ^ (B:N)).N == b.N ^ B
    # join principal N: b v (B:N) == ((b.N v B) : N)
    nl = action.shape[0]
    nm = action.shape[1]
    out = np.ones((nm, 2), dtype=np.bool_)
    for N in range(nm):
        for b in range(nl):
            for B in range(nm):
                r = res_mm[B, N]
                if action[meet_l[b, r], N] != meet_m[action[b, N], B]:
                    out[N, 0] = False
                if join_l[b, r] != res_mm[join_m[action[b, N], B], N]:
                    out[N, 1] = False
            if not out[N, 0] and not out[N, 1]:
                break
    return out


def delta_primary_flags(leq_m, action, ai, dtable, top_m):
    # column 0 (as defined):   a.A <= P -> A <= P      or a.I <= delta(P)
    # column 1 (swapped form): a.A <= P -> A <= delta(P) or a.I <= P
    nl = action.shape[0]
    nm = action.shape[1]
    out = np.zeros((nm, 2), dtype=np.bool_)
    for P in range(nm):
        if P == top_m:
            continue
        primal = True
        alt = True
        dp = dtable[P]
        for a in range(nl):
            for A in range(nm):
                if leq_m[action[a, A], P]:
                    if not leq_m[A, P] and not leq_m[ai[a], dp]:
                        primal = False
                    if not leq_m[A, dp] and not leq_m[ai[a], P]:
                        alt = False
            if not primal and not alt:
                break
        out[P, 0] = primal
        out[P, 1] = alt
    return out


def deltaL_primary_flags(leq_l, leq_m, action, dl_colon, top_m):
    # a.A <= P -> A <= P or a <= dl[(P:I)]; dl_colon[P] = dl[(P:I)]
    nl = action.shape[0]
    nm = action.shape[1]
    out = np.zeros(nm, dtype=np.bool_)
    for P in range(nm):
        if P == top_m:
            continue
        good = True
        t = dl_colon[P]
        for a in range(nl):
            if leq_l[a, t]:
                continue
            for A in range(nm):
                if leq_m[action[a, A], P] and not leq_m[A, P]:
                    good = False
                    break
            if not good:
                break
        out[P] = good
    return out


def char_residual_form(leq_l, res_ma, thresh, top_m):
    # flags[N] (N proper): (N:r) == N for every r with r not<= thresh[N]
    nm = res_ma.shape[0]
    nl = res_ma.shape[1]
    out = np.zeros(nm, dtype=np.bool_)
    for N in range(nm):
        if N == top_m:
            continue
        good = True
        for r in range(nl):
            if not leq_l[r, thresh[N]] and res_ma[N, r] != N:
                good = False
                break
        out[N] = good
    return out


def char_colon_form(leq_l, leq_m, res_mm, thresh, top_m):
    # flags[N] (N proper): (N:A) <= thresh[N] for every A with A not<= N
    nm = res_mm.shape[0]
    out = np.zeros(nm, dtype=np.bool_)
    for N in range(nm):
        if N == top_m:
            continue
        good = True
        for A in range(nm):
            if not leq_m[A, N] and not leq_l[res_mm[N, A], thresh[N]]:
                good = False
                break
        out[N] = good
    return out
