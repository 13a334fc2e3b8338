"""Brute-force scan of the family (cos t + a cos 2t, sin t + b sin 2t).

Independent oracle for the non-convex golden curves: reports regular, simple,
non-convex members and the number of sign changes of 2*pi - L*kappa(t).
"""
import numpy as np
from scipy import integrate
from shapely.geometry import LinearRing

N = 200000
t = np.linspace(0.0, 2 * np.pi, N, endpoint=False)


def analyse(a, b):
    x1 = -np.sin(t) - 2 * a * np.sin(2 * t)
    y1 = np.cos(t) + 2 * b * np.cos(2 * t)
    x2 = -np.cos(t) - 4 * a * np.cos(2 * t)
    y2 = -np.sin(t) - 4 * b * np.sin(2 * t)
    speed = np.hypot(x1, y1)
    if speed.min() < 1e-3:
        return None
    kappa = (x1 * y2 - y1 * x2) / speed**3
    L = integrate.quad(lambda s: np.hypot(-np.sin(s) - 2 * a * np.sin(2 * s),
                                          np.cos(s) + 2 * b * np.cos(2 * s)),
                       0, 2 * np.pi, limit=400, epsabs=1e-14, epsrel=1e-14)[0]
    g = 2 * np.pi - L * kappa
    s = np.sign(g)
    changes = int(np.count_nonzero(s != np.roll(s, 1)))
    xs = np.cos(t[::50]) + a * np.cos(2 * t[::50])
    ys = np.sin(t[::50]) + b * np.sin(2 * t[::50])
    simple = LinearRing(np.c_[xs, ys]).is_simple
    xx = np.cos(t) + a * np.cos(2 * t)
    yy = np.sin(t) + b * np.sin(2 * t)
    area = 0.5 * np.mean(xx * y1 - yy * x1) * 2 * np.pi
    return dict(a=a, b=b, L=L, area=area, changes=changes, simple=simple,
                convex=bool(kappa.min() > 0), kmin=kappa.min(), kmax=kappa.max())


if __name__ == "__main__":
    for a in np.arange(0.05, 0.5, 0.05):
        for b in np.arange(0.05, 0.5, 0.05):
            r = analyse(round(a, 2), round(b, 2))
            if r and r["simple"] and not r["convex"]:
                print(r)
