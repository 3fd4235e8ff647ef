"""Vectorized numpy fallbacks for the sweep kernels.

Same signatures and identical outputs as `_kernels_nb`; witness selection
uses `argwhere(...)[0]`, which walks the flattened array in C order and so
matches the nested-loop scan order of the compiled kernels.
"""

from __future__ import annotations

import numpy as np


def _first(bad) -> np.ndarray | None:
    hits = np.argwhere(bad)
    return hits[0] if len(hits) else None


def mul_axiom_witnesses(leq, meet, join, mul, bot, top):
    n = mul.shape[0]
    ar = np.arange(n)
    out = np.full((6, 3), -1, dtype=np.int64)

    def put(row, hit):
        if hit is not None:
            out[row, : len(hit)] = hit

    put(0, _first(mul != mul.T))
    put(1, _first(mul[mul] != mul[:, mul]))
    put(2, _first(mul[:, join] != join[mul[:, :, None], mul[:, None, :]]))
    put(3, _first(mul[top] != ar))
    put(4, _first(mul[bot] != bot))
    put(5, _first(~leq[mul, meet]))
    return out


def module_axiom_witnesses(join_l, mul_l, join_m, action, bot_l, top_l, bot_m):
    nm = action.shape[1]
    arm = np.arange(nm)
    out = np.full((6, 3), -1, dtype=np.int64)

    def put(row, hit):
        if hit is not None:
            out[row, : len(hit)] = hit

    put(0, _first(action[join_l] != join_m[action[:, None, :], action[None, :, :]]))
    put(1, _first(action[:, join_m] != join_m[action[:, :, None], action[:, None, :]]))
    put(2, _first(action[:, bot_m] != bot_m))
    put(3, _first(action[mul_l] != action[:, action]))
    put(4, _first(action[top_l] != arm))
    put(5, _first(action[bot_l] != bot_m))
    return out


def _join_fold(mask_over_x, join, init, n):
    # mask_over_x[x] selects where element x enters the join; folds the join
    # table over x with identical results to a sequential loop
    acc = np.full(mask_over_x[0].shape, init, dtype=np.int64)
    for x in range(n):
        acc = np.where(mask_over_x[x], join[acc, x], acc)
    return acc


def residual_scalar_table(leq, join, mul, bot):
    n = mul.shape[0]
    ok = leq[mul]  # ok[x, b, a] = x*b <= a
    ok = np.transpose(ok, (0, 2, 1))  # [x, a, b]
    return _join_fold(ok, join, bot, n)


def power_cap_vec(mul, top):
    n = mul.shape[0]
    ar = np.arange(n)
    p = ar.astype(np.int64)
    for _ in range(n - 1):
        p = mul[p, ar]
    return p


def radical_vec(leq, join, powcap, bot):
    n = leq.shape[0]
    ok = leq[powcap]  # [x, a]
    return _join_fold(ok, join, bot, n)


def principal_scalar_flags(meet, join, mul, res):
    n = mul.shape[0]
    ar = np.arange(n)
    e_ax = ar[:, None, None]
    a_ax = ar[None, :, None]
    b_ax = ar[None, None, :]
    lhs = meet[a_ax, mul.T[:, None, :]]  # [e, a, b] = a ^ (b*e)
    rhs = mul[meet[res.T[:, :, None], b_ax], e_ax]  # ((a:e) ^ b) * e
    meet_ok = (lhs == rhs).all(axis=(1, 2))
    lhs2 = res[join[mul.T[:, :, None], b_ax], e_ax]  # ((a*e) v b) : e
    rhs2 = join[res.T[:, None, :], a_ax]  # (b:e) v a
    join_ok = (lhs2 == rhs2).all(axis=(1, 2))
    return np.stack([meet_ok, join_ok], axis=1)


def scalar_classification_flags(leq, mul, rad, powcap, top):
    n = mul.shape[0]
    out = np.zeros((n, 4), dtype=np.bool_)
    hyp2 = leq[mul]  # [a, b, p]
    la = leq[:, None, :]
    lb = leq[None, :, :]
    lbp = leq[powcap][None, :, :]
    out[:, 0] = (~hyp2 | la | lb).all(axis=(0, 1))
    out[:, 1] = (~hyp2 | la | lbp).all(axis=(0, 1))
    mul3 = mul[mul]  # [a, b, c]
    for q in range(n):
        if q == top:
            continue
        hyp = leq[mul3, q]
        ab = leq[mul, q]  # [x, y] = x*y <= q
        abr = leq[mul, rad[q]]
        # disjuncts at [a, b, c]: ab <= _, bc <= _, ca <= _
        out[q, 2] = (~hyp | ab[:, :, None] | ab[None, :, :] | ab.T[:, None, :]).all()
        out[q, 3] = (~hyp | ab[:, :, None] | abr[None, :, :] | abr.T[:, None, :]).all()
    out[top] = False
    return out


def scalar_dl_primary_flags(leq, mul, dl, top):
    hyp = leq[mul]  # [a, b, p]
    la = leq[:, None, :]
    lbd = leq[:, dl][None, :, :]  # [., b, p] = b <= dl[p]
    out = (~hyp | la | lbd).all(axis=(0, 1))
    out[top] = False
    return out


def residual_mm_table(leq_m, join_l, action, bot_l):
    nl = action.shape[0]
    ok = leq_m[action]  # [x, B, A]
    ok = np.transpose(ok, (0, 2, 1))  # [x, A, B]
    return _join_fold(ok, join_l, bot_l, nl)


def residual_ma_table(leq_m, join_m, action, bot_m):
    nm = action.shape[1]
    ok = leq_m[action]  # [a, X, N]
    ok = np.transpose(ok, (1, 2, 0))  # [X, N, a]
    return _join_fold(ok, join_m, bot_m, nm)


def module_prime_primary_flags(leq_m, action, ai, aipow, top_m):
    hyp = leq_m[action]  # [a, X, N]
    ex = leq_m[None, :, :]
    c1 = leq_m[ai][:, None, :]
    c2 = leq_m[aipow][:, None, :]
    out = np.stack(
        [(~hyp | ex | c1).all(axis=(0, 1)), (~hyp | ex | c2).all(axis=(0, 1))], axis=1
    )
    out[top_m] = False
    return out


def module_semiprime_flags(leq_m, mul_l, ai, top_m):
    hyp = leq_m[ai[mul_l]]  # [a, b, N]
    c = leq_m[ai]
    out = (~hyp | c[:, None, :] | c[None, :, :]).all(axis=(0, 1))
    out[top_m] = False
    return out


def module_meet_prime_flags(leq_m, meet_m, top_m):
    hyp = leq_m[meet_m]  # [A, B, N]
    out = (~hyp | leq_m[:, None, :] | leq_m[None, :, :]).all(axis=(0, 1))
    out[top_m] = False
    return out


def module_2abs_flags(leq_l, leq_m, mul_l, action, colon_im, rad_i, top_m):
    nm = action.shape[1]
    out = np.zeros((nm, 2), dtype=np.bool_)
    act3 = action[mul_l]  # [a, b, X] = (ab).X
    for Q in range(nm):
        if Q == top_m:
            continue
        hyp = leq_m[act3, Q]
        e0 = leq_l[mul_l, colon_im[Q]][:, :, None]
        bq = leq_m[action, Q]
        bqr = leq_m[action, rad_i[Q]]
        out[Q, 0] = (~hyp | e0 | bq[None, :, :] | bq[:, None, :]).all()
        out[Q, 1] = (~hyp | e0 | bqr[None, :, :] | bqr[:, None, :]).all()
    return out


def module_principal_flags(meet_l, join_l, meet_m, join_m, action, res_mm):
    nl, nm = action.shape
    arl = np.arange(nl)
    arm = np.arange(nm)
    n_ax = arm[:, None, None]
    b_ax = arl[None, :, None]
    big_b = arm[None, None, :]
    r = res_mm.T[:, None, :]  # [N, ., B] = (B:N)
    lhs = action[meet_l[b_ax, r], n_ax]
    rhs = meet_m[action.T[:, :, None], big_b]
    meet_ok = (lhs == rhs).all(axis=(1, 2))
    lhs2 = join_l[b_ax, r]
    rhs2 = res_mm[join_m[action.T[:, :, None], big_b], n_ax]
    join_ok = (lhs2 == rhs2).all(axis=(1, 2))
    return np.stack([meet_ok, join_ok], axis=1)


def delta_primary_flags(leq_m, action, ai, dtable, top_m):
    hyp = leq_m[action]  # [a, A, P]
    exc = leq_m[None, :, :]
    excd = leq_m[:, dtable][None, :, :]
    aip = leq_m[ai][:, dtable][:, None, :]
    aio = leq_m[ai][:, None, :]
    primal = (~hyp | exc | aip).all(axis=(0, 1))
    alt = (~hyp | excd | aio).all(axis=(0, 1))
    out = np.stack([primal, alt], axis=1)
    out[top_m] = False
    return out


def deltaL_primary_flags(leq_l, leq_m, action, dl_colon, top_m):
    hyp = leq_m[action]  # [a, A, P]
    exc = leq_m[None, :, :]
    sc = leq_l[:, dl_colon][:, None, :]
    out = (~hyp | exc | sc).all(axis=(0, 1))
    out[top_m] = False
    return out


def char_residual_form(leq_l, res_ma, thresh, top_m):
    nm = res_ma.shape[0]
    below = leq_l[:, thresh].T  # [N, r] = r <= thresh[N]
    fixed = res_ma == np.arange(nm)[:, None]
    out = (below | fixed).all(axis=1)
    out[top_m] = False
    return out


def char_colon_form(leq_l, leq_m, res_mm, thresh, top_m):
    am = leq_m.T  # [N, A] = A <= N
    ok = leq_l[res_mm, thresh[:, None]]
    out = (am | ok).all(axis=1)
    out[top_m] = False
    return out
