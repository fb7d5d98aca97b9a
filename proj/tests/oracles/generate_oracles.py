#!/usr/bin/env python3
"""High-precision reference values frozen into the C++ unit tests.

Run with mpmath installed; every value printed here is pasted verbatim into
tests/*.cpp. Kernel values integrate the Bessel-product heat kernel with
mpmath's tanh-sinh quadrature on [0, T] (substitution t = u^4 near zero to
remove the endpoint singularity) and add the large-t Hankel series tail
integrated term by term, so this path shares no code with the library.
"""
from mpmath import (mp, mpf, quad, besseli, exp, gamma, loggamma, digamma,
                    sqrt, pi, factorial, fprod, euler, log)

mp.dps = 40


def p1(t, m):
    return exp(-2 * t) * besseli(abs(m), 2 * t)


def hankel_coeffs(m, K):
    out = []
    for k in range(K):
        a = fprod([4 * m * m - (2 * j - 1) ** 2 for j in range(1, k + 1)]) / (factorial(k) * 8 ** k)
        out.append((-1) ** k * a / mpf(2) ** k)
    return out


def polymul(a, b, K):
    r = [mpf(0)] * K
    for i in range(K):
        for j in range(K - i):
            r[i + j] += a[i] * b[j]
    return r


def mass_head(d, power, N=90):
    """int_0^1 (1 - p_t(0)) t^{-1-power} dt from the Taylor series of p_t(0) in t."""
    one = [sum((-2) ** (n - 2 * k) / (factorial(n - 2 * k) * factorial(k) ** 2)
               for k in range(n // 2 + 1)) for n in range(N)]
    c = [mpf(1)] + [mpf(0)] * (N - 1)
    for _ in range(d):
        c = polymul(c, one, N)
    return -sum(c[n] / (n - power) for n in range(1, N))


def time_integral(x, power, subtract_one=False):
    """int_0^inf g(t) t^{-1-power} dt with g = p_t(x) or 1 - p_t(0)."""
    d = len(x)
    r2 = sum(xi * xi for xi in x)
    T = mpf(max(400, 16 * r2))

    def g(t):
        v = fprod([p1(t, xi) for xi in x])
        return 1 - v if subtract_one else v

    if subtract_one:
        head = mass_head(d, power)
    else:
        head = quad(lambda u: g(u ** 4) * (u ** 4) ** (-1 - power) * 4 * u ** 3, [0, mpf(1) / 2, 1])
    pts = [mpf(1)]
    while pts[-1] < T:
        pts.append(min(pts[-1] * 2, T))
    body = quad(lambda t: g(t) * t ** (-1 - power), pts)
    K = 24
    c = [mpf(1)] + [mpf(0)] * (K - 1)
    for xi in x:
        c = polymul(c, hankel_coeffs(xi, K), K)
    hd = mpf(d) / 2
    tail = sum(c[n] * (4 * pi) ** (-hd) * T ** (-(hd + n + power)) / (hd + n + power) for n in range(K))
    if subtract_one:
        tail = T ** (-power) / power - tail
    return head + body + tail


def kappa(alpha, x):
    alpha = mpf(alpha)
    return time_integral(x, alpha) / abs(gamma(-alpha))


def mass(sigma, d):
    sigma = mpf(sigma)
    return time_integral([0] * d, sigma, subtract_one=True) / abs(gamma(-sigma))


def show(label, v):
    print(f"{label:40s} {mp.nstr(v, 20)}")


if __name__ == "__main__":
    for x in ["0.001", "0.5", "1.5", "2.0001", "7.25", "100.3", "1000"]:
        # evaluated at the double nearest to x, which is what the tests pass
        show(f"lngamma({x})", loggamma(mpf(float(x))))
    for x in ["-0.5", "-1.5", "10.3", "0.001"]:
        show(f"gamma({x})", gamma(mpf(x)))
    for x in ["1", "2", "0.5", "0.01", "3.7", "1000"]:
        show(f"digamma({x})", digamma(mpf(x)))
    for n, z in [(1, 2), (0, 2), (0, 10000), (2000, 10000), (50, 100), (3, "0.1"),
                 (100, 50), (10, 1000), (0, 25), (7, 30), (400, 1e5 / 8)]:
        z = mpf(z)
        show(f"bessel_i_scaled({n},{mp.nstr(z, 8)})", exp(-z) * besseli(n, z))
    show("heat_kernel(5,(2,1,0))", p1(mpf(5), 2) * p1(mpf(5), 1) * p1(mpf(5), 0))
    show("heat_kernel(10,(4,))", p1(mpf(10), 4))
    show("gaussian(10,(4,))", (4 * pi * 10) ** mpf(-0.5) * exp(-mpf(16) / 40))
    for a, x in [("-0.25", [5]), ("-0.25", [0]), ("0.25", [3]), ("-0.5", [3, 1]),
                 ("0.5", [1, 0]), ("-0.4", [0, 0]), ("-1", [0, 0, 0]), ("-1", [2, 1, 0]),
                 ("0.5", [0, 0, 1]), ("-0.75", [4, 4, 3]), ("0.9", [2, 2])]:
        show(f"kappa({a},{x})", kappa(a, x))
    for s, d in [("0.25", 1), ("0.5", 2), ("0.5", 3), ("0.9", 1)]:
        show(f"mass({s},d={d})", mass(s, d))
    s = mpf("0.25")
    show("mass closed form d=1 s=0.25", 4 ** s * gamma(mpf(1) / 2 + s) / (sqrt(pi) * gamma(1 + s)))
    show("psi(0.5,2,0.75)", 2 * gamma(mpf("0.75")) ** 2 / gamma(mpf("0.25")) ** 2 * 2 ** 0)
    show("c(0.5,2)", 4 ** mpf("0.5") * gamma(mpf("0.75")) ** 2 / gamma(mpf("0.25")) ** 2)
    show("weight(d=1,0.25,0.3,[5])", kappa("-0.05", [5]) / kappa("-0.3", [5]))
    show("weight(d=2,0.5,0.9,[3, 2])", kappa("-0.4", [3, 2]) / kappa("-0.9", [3, 2]))
    for s, d, a in [("0.7", 5, "1.6"), ("0.25", 1, "0.3"), ("1", 3, "1.1")]:
        s, a = mpf(s), mpf(a)
        h = mpf(d) / 2
        show(f"psi({mp.nstr(s, 4)},{d},{mp.nstr(a, 4)})",
             4 ** s * gamma(h - a + s) * gamma(a) / (gamma(h - a) * gamma(a - s)))
    show("C(-1,3)", 4 ** mpf(-1) * gamma(mpf("0.5")) / (pi ** mpf(1.5) * abs(gamma(mpf(1)))))
