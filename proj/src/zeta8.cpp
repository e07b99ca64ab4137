#include "qmlab/zeta8.hpp"

#include <cmath>

namespace qm {

Zeta8 Zeta8::zeta_pow(long k)
{
    k %= 8;
    if (k < 0) k += 8;
    Zeta8 r;
    if (k < 4)
        r.c_[k] = 1;
    else
        r.c_[k - 4] = -1;
    return r;
}

Zeta8 Zeta8::operator-() const
{
    Zeta8 r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

Zeta8& Zeta8::operator+=(const Zeta8& o)
{
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

Zeta8& Zeta8::operator-=(const Zeta8& o)
{
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

Zeta8& Zeta8::operator*=(const Zeta8& o)
{
    std::array<Rational, 4> r{};
    for (int a = 0; a < 4; ++a) {
        if (is_zero(c_[a])) continue;
        for (int b = 0; b < 4; ++b) {
            if (is_zero(o.c_[b])) continue;
            Rational p = c_[a] * o.c_[b];
            int e = a + b;
            if (e < 4)
                r[e] += p;
            else
                r[e - 4] -= p;
        }
    }
    c_ = r;
    return *this;
}

Zeta8& Zeta8::operator/=(const Zeta8& o) { return *this *= inverse(o); }

Zeta8 Zeta8::galois(int k) const
{
    Zeta8 r(c_[0]);
    for (int e = 1; e < 4; ++e)
        if (!is_zero(c_[e])) r += Zeta8(c_[e]) * zeta_pow(long(e) * k);
    return r;
}

Rational Zeta8::norm() const
{
    Zeta8 n = *this * galois(3) * galois(5) * galois(7);
    return n[0];
}

Zeta8 inverse(const Zeta8& a)
{
    if (is_zero(a)) throw division_by_zero("Zeta8 inverse of 0");
    Zeta8 others = a.galois(3) * a.galois(5) * a.galois(7);
    Rational n = (a * others)[0];
    return others * Zeta8(inverse(n));
}

std::complex<double> Zeta8::to_complex() const
{
    const double h = std::sqrt(0.5);
    const std::complex<double> z(h, h);
    std::complex<double> r = c_[0].get_d();
    std::complex<double> p = 1;
    for (int k = 1; k < 4; ++k) {
        p *= z;
        r += c_[k].get_d() * p;
    }
    return r;
}

std::string Zeta8::str() const
{
    static const char* names[] = {"", "z", "z^2", "z^3"};
    std::string s;
    for (int k = 0; k < 4; ++k) {
        if (is_zero(c_[k])) continue;
        std::string v = c_[k].get_str();
        if (!s.empty() && sgn(c_[k]) > 0) s += "+";
        if (k == 0)
            s += v;
        else if (c_[k] == 1)
            s += names[k];
        else if (c_[k] == -1)
            s += std::string("-") + names[k];
        else
            s += v + "*" + names[k];
    }
    return s.empty() ? "0" : s;
}

} // namespace qm
