#!/usr/bin/env python3
"""Regenerates the simulated statistical tables embedded in the C++ sources.

Outputs, as C++ initializer fragments:
  1. Asymptotic Dickey-Fuller t-distribution quantiles (no-constant, constant,
     constant+trend), simulated at T=1000.  Used for approximate p-values.
  2. CUSUM-of-squares 5%/10%/1% band half-widths c0(m) for the max deviation
     |s_i - i/m| of a normalized cumulative chi-square(1) path of length m.

Also cross-checks the MacKinnon (2010) response-surface critical values
against the simulated finite-sample quantiles.

Run time is a few minutes; results are frozen into the repo, this script only
documents their provenance.
"""

import numpy as np

P_GRID = [0.001, 0.005, 0.01, 0.025, 0.05, 0.10, 0.20, 0.30, 0.40, 0.50,
          0.60, 0.70, 0.80, 0.90, 0.95, 0.975, 0.99, 0.995, 0.999]

# MacKinnon (2010) response surface, N=1: cv(T) = b0 + b1/T + b2/T^2 + b3/T^3
MACKINNON = {
    "nc": {0.01: (-2.56574, -2.2358, -3.627, 0.0),
           0.05: (-1.94100, -0.2686, -3.365, 31.223),
           0.10: (-1.61682, 0.2656, -2.714, 25.364)},
    "c":  {0.01: (-3.43035, -6.5393, -16.786, -79.433),
           0.05: (-2.86154, -2.8903, -4.234, -40.040),
           0.10: (-2.56677, -1.5384, -2.809, 0.0)},
    "ct": {0.01: (-3.95877, -9.0531, -28.428, -134.155),
           0.05: (-3.41049, -4.3904, -9.036, -45.374),
           0.10: (-3.12705, -2.5856, -3.925, -22.380)},
}


def df_tstats(case: str, T: int, reps: int, seed: int, chunk: int = 5000) -> np.ndarray:
    rng = np.random.default_rng(seed)
    out = np.empty(reps)
    pos = 0
    N = T - 1
    if case == "nc":
        D = None
    elif case == "c":
        D = np.ones((N, 1))
    else:
        D = np.column_stack([np.ones(N), np.arange(1, N + 1)])
    if D is not None:
        DtD_inv = np.linalg.inv(D.T @ D)
        ndet = D.shape[1]
    else:
        ndet = 0
    while pos < reps:
        r = min(chunk, reps - pos)
        e = rng.standard_normal((T, r))
        y = np.cumsum(e, axis=0)
        dy = y[1:] - y[:-1]        # N x r
        yl = y[:-1]                # N x r
        if D is not None:
            yl = yl - D @ (DtD_inv @ (D.T @ yl))
            dy = dy - D @ (DtD_inv @ (D.T @ dy))
        syy = np.sum(yl * yl, axis=0)
        sdy = np.sum(yl * dy, axis=0)
        sdd = np.sum(dy * dy, axis=0)
        coef = sdy / syy
        rss = sdd - coef * coef * syy
        dof = N - (ndet + 1)
        s2 = rss / dof
        tstat = coef * np.sqrt(syy / s2)
        out[pos:pos + r] = tstat
        pos += r
    return out


def gen_df_quantiles():
    print("// Dickey-Fuller t quantiles, simulated T=1000, 300000 reps")
    print("// p grid:", P_GRID)
    for case, seed in (("nc", 11), ("c", 12), ("ct", 13)):
        t = df_tstats(case, 1000, 300000, seed)
        q = np.quantile(t, P_GRID)
        body = ", ".join(f"{v:.4f}" for v in q)
        print(f"constexpr double kDfQuantiles_{case}[] = {{{body}}};")
    print()


def check_mackinnon():
    print("// MacKinnon response-surface check (sim quantile vs surface value)")
    for T in (200, 1000):
        for case, seed in (("nc", 21), ("c", 22), ("ct", 23)):
            t = df_tstats(case, T, 200000, seed + T)
            for lv in (0.01, 0.05, 0.10):
                b = MACKINNON[case][lv]
                n = T - 1  # effective regression sample
                cv = b[0] + b[1] / n + b[2] / n**2 + b[3] / n**3
                emp = np.quantile(t, lv)
                flag = "" if abs(cv - emp) < 0.03 else "  <-- CHECK"
                print(f"//  T={T} {case} {lv:.2f}: surface {cv:+.4f}  sim {emp:+.4f}{flag}")
    print()


def gen_cusumsq_c0():
    m_grid = [10, 15, 20, 25, 30, 40, 50, 60, 80, 100, 120, 150, 200, 300, 500]
    reps = 200000
    rng = np.random.default_rng(7)
    rows = {0.10: [], 0.05: [], 0.01: []}
    for m in m_grid:
        devmax = np.empty(reps)
        pos = 0
        chunk = max(1, int(4e7 // m))
        while pos < reps:
            r = min(chunk, reps - pos)
            w2 = rng.standard_normal((r, m)) ** 2
            s = np.cumsum(w2, axis=1)
            s /= s[:, -1:]
            center = np.arange(1, m + 1) / m
            devmax[pos:pos + r] = np.max(np.abs(s - center), axis=1)
            pos += r
        for lv in rows:
            rows[lv].append(np.quantile(devmax, 1.0 - lv))
    print("// CUSUMSQ max-deviation band half-widths, simulated 200000 reps")
    print("constexpr int kCusumsqM[] = {%s};" % ", ".join(str(m) for m in m_grid))
    for lv, name in ((0.10, "10"), (0.05, "5"), (0.01, "1")):
        body = ", ".join(f"{v:.5f}" for v in rows[lv])
        print(f"constexpr double kCusumsqC0_{name}[] = {{{body}}};")
    print()


if __name__ == "__main__":
    gen_df_quantiles()
    check_mackinnon()
    gen_cusumsq_c0()
