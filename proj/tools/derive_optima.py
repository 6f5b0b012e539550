#!/usr/bin/env python3
"""Regenerate the frozen optimum fixtures under data/optima.

Runs Newton refinement at 40 decimal digits (mpmath) on the analytic
stationarity conditions of each benchmark, then rounds to the nearest
double. Run from the repository root:

    python3 tools/derive_optima.py
"""
import os

import mpmath as mp

mp.mp.dps = 40


def newton(grad, hess, x0, steps=80):
    x = [mp.mpf(v) for v in x0]
    n = len(x)
    for _ in range(steps):
        g = grad(x)
        H = hess(x)
        d = mp.lu_solve(mp.matrix(H), mp.matrix(g))
        for i in range(n):
            x[i] -= d[i]
        if max(abs(v) for v in g) < mp.mpf("1e-35"):
            break
    return x


def newton1(df, d2f, x0, steps=80):
    x = mp.mpf(x0)
    for _ in range(steps):
        x -= df(x) / d2f(x)
    return x


def shubert_factor(x):
    return mp.fsum(j * mp.cos((j + 1) * x + j) for j in range(1, 6))


def dshubert(x):
    return mp.fsum(-j * (j + 1) * mp.sin((j + 1) * x + j) for j in range(1, 6))


def d2shubert(x):
    return mp.fsum(-j * (j + 1) ** 2 * mp.cos((j + 1) * x + j) for j in range(1, 6))


def shubert_extrema():
    lo, hi, n = mp.mpf(-10), mp.mpf(10), 4000
    crit = []
    prev_x = lo
    prev_v = dshubert(lo)
    for i in range(1, n + 1):
        x = lo + (hi - lo) * i / n
        v = dshubert(x)
        if prev_v == 0 or (prev_v < 0) != (v < 0):
            crit.append(newton1(dshubert, d2shubert, (prev_x + x) / 2))
        prev_x, prev_v = x, v
    vals = [(shubert_factor(c), c) for c in crit if lo <= c <= hi]
    gmin = min(v for v, _ in vals)
    gmax = max(v for v, _ in vals)
    argmin = sorted(c for v, c in vals if abs(v - gmin) < mp.mpf("1e-20"))
    argmax = sorted(c for v, c in vals if abs(v - gmax) < mp.mpf("1e-20"))
    return argmin, argmax, gmin, gmax


def himmelblau():
    def grad(x):
        a = x[0] ** 2 + x[1] - 11
        b = x[0] + x[1] ** 2 - 7
        return [4 * a * x[0] + 2 * b, 2 * a + 4 * b * x[1]]

    def hess(x):
        a = x[0] ** 2 + x[1] - 11
        b = x[0] + x[1] ** 2 - 7
        return [[12 * x[0] ** 2 + 4 * x[1] - 42, 4 * x[0] + 4 * x[1]],
                [4 * x[0] + 4 * x[1], 4 * x[0] + 12 * x[1] ** 2 - 26]]

    seeds = [(3, 2), (-2.8, 3.1), (-3.8, -3.3), (3.6, -1.8)]
    return [newton(grad, hess, s) for s in seeds]


def camel():
    def grad(x):
        a, b = x
        return [8 * a - mp.mpf("8.4") * a ** 3 + 2 * a ** 5 + b,
                a + 16 * b ** 3 - 8 * b]

    def hess(x):
        a, b = x
        return [[8 - mp.mpf("25.2") * a ** 2 + 10 * a ** 4, mp.mpf(1)],
                [mp.mpf(1), 48 * b ** 2 - 8]]

    pt = newton(grad, hess, (0.09, -0.71))
    a, b = pt
    val = -((4 - mp.mpf("2.1") * a ** 2 + a ** 4 / 3) * a ** 2 + a * b +
            (4 * b ** 2 - 4) * b ** 2)
    return [(a, b), (-a, -b)], val


def uneven_decreasing():
    def f(t):
        e = mp.exp(-2 * mp.log(2) * ((t - mp.mpf("0.08")) / mp.mpf("0.854")) ** 2)
        return e * mp.sin(5 * mp.pi * (t ** mp.mpf("0.75") - mp.mpf("0.05"))) ** 6

    df = lambda t: mp.diff(f, t)
    d2f = lambda t: mp.diff(f, t, 2)
    x = newton1(df, d2f, mp.mpf("0.0797"))
    return x, f(x)


def write(path, rows):
    with open(path, "w") as fh:
        for r in rows:
            fh.write(" ".join(repr(float(v)) for v in r) + "\n")


def main():
    out = os.path.join(os.path.dirname(__file__), "..", "data", "optima")
    os.makedirs(out, exist_ok=True)

    x3, _ = uneven_decreasing()
    write(os.path.join(out, "f3_uneven_decreasing_maxima.txt"), [(x3,)])
    write(os.path.join(out, "f4_himmelblau.txt"), himmelblau())
    cams, cam_peak = camel()
    write(os.path.join(out, "f5_six_hump_camel_back.txt"), cams)

    amin, amax, gmin, gmax = shubert_extrema()
    A = [float(a) for a in amin]
    B = [float(b) for b in amax]
    f6 = [(a, b) for a in A for b in B] + [(b, a) for b in B for a in A]
    write(os.path.join(out, "f6_shubert_2d.txt"), f6)

    f8 = []
    for lowdim in range(3):
        for a in A:
            for b1 in B:
                for b2 in B:
                    rest = iter([b1, b2])
                    f8.append(tuple(a if j == lowdim else next(rest) for j in range(3)))
    write(os.path.join(out, "f8_shubert_3d.txt"), f8)

    print("camel peak:", mp.nstr(cam_peak, 20))
    print("shubert 2d peak:", mp.nstr(-(gmin * gmax), 20))
    print("shubert 3d peak:", mp.nstr(-(gmin * gmax * gmax), 20))


if __name__ == "__main__":
    main()
