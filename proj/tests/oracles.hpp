#pragma once

// Independent reference computations used only by the tests.

#include "qmlab/rational.hpp"

#include <complex>
#include <numbers>
#include <set>
#include <vector>

namespace oracle {

// squarefree part of a nonzero integer
inline long squarefree(long n)
{
    long s = n < 0 ? -1 : 1;
    n = n < 0 ? -n : n;
    for (long p = 2; p * p <= n; ++p)
        while (n % (p * p) == 0) n /= p * p;
    return s * n;
}

inline long ipow(long b, int e)
{
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline long mod(long a, long m) { return ((a % m) + m) % m; }

// Hilbert symbol by searching a primitive solution of z^2 = a x^2 + b y^2
// modulo p^k (k = 3 for odd p, 7 for p = 2).
inline int hilbert_brute(long a, long b, long p)
{
    a = squarefree(a);
    b = squarefree(b);
    int k = p == 2 ? 7 : 3;
    long m = ipow(p, k);
    std::set<long> sq_any, sq_unit;
    for (long z = 0; z < m; ++z) {
        long s = z * z % m;
        sq_any.insert(s);
        if (z % p) sq_unit.insert(s);
    }
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            long v = mod(mod(a, m) * (x * x % m) + mod(b, m) * (y * y % m), m);
            bool primitive_xy = (x % p) || (y % p);
            if (primitive_xy ? sq_any.count(v) : sq_unit.count(v)) return 1;
        }
    return -1;
}

// One-dimensional theta with characteristic c: sum exp(pi i (n+c)^2 t).
inline std::complex<double> theta1(double c, std::complex<double> t, int radius = 40)
{
    std::complex<double> s = 0;
    for (int n = -radius; n <= radius; ++n) {
        double v = n + c;
        s += std::exp(std::complex<double>(0, std::numbers::pi) * v * v * t);
    }
    return s;
}

} // namespace oracle
