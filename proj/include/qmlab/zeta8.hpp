#pragma once

#include "qmlab/rational.hpp"

#include <array>
#include <complex>
#include <ostream>
#include <string>

namespace qm {

// c0 + c1 z + c2 z^2 + c3 z^3 with z^4 = -1.
class Zeta8 {
public:
    Zeta8() = default;
    Zeta8(long v) { c_[0] = v; }
    Zeta8(const Rational& v) { c_[0] = v; }
    Zeta8(Rational c0, Rational c1, Rational c2, Rational c3) : c_{c0, c1, c2, c3} {}

    static Zeta8 zeta() { return Zeta8(0, 1, 0, 0); }
    static Zeta8 i() { return Zeta8(0, 0, 1, 0); }
    static Zeta8 sqrt2() { return Zeta8(0, 1, 0, -1); }
    static Zeta8 zeta_pow(long k);

    const Rational& operator[](int k) const { return c_[k]; }
    const std::array<Rational, 4>& coeffs() const { return c_; }

    Zeta8 operator-() const;
    Zeta8& operator+=(const Zeta8& o);
    Zeta8& operator-=(const Zeta8& o);
    Zeta8& operator*=(const Zeta8& o);
    Zeta8& operator/=(const Zeta8& o);

    friend Zeta8 operator+(Zeta8 a, const Zeta8& b) { return a += b; }
    friend Zeta8 operator-(Zeta8 a, const Zeta8& b) { return a -= b; }
    friend Zeta8 operator*(Zeta8 a, const Zeta8& b) { return a *= b; }
    friend Zeta8 operator/(Zeta8 a, const Zeta8& b) { return a /= b; }
    friend bool operator==(const Zeta8& a, const Zeta8& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Zeta8& a, const Zeta8& b) { return !(a == b); }

    // z -> z^k for k odd
    Zeta8 galois(int k) const;
    Zeta8 conj() const { return galois(7); }
    Rational norm() const;
    bool is_rational() const { return is_zero(c_[1]) && is_zero(c_[2]) && is_zero(c_[3]); }
    std::complex<double> to_complex() const;
    std::string str() const;

private:
    std::array<Rational, 4> c_{};
};

inline bool is_zero(const Zeta8& a)
{
    return is_zero(a[0]) && is_zero(a[1]) && is_zero(a[2]) && is_zero(a[3]);
}
Zeta8 inverse(const Zeta8& a);
inline std::complex<double> to_complex(const Zeta8& a) { return a.to_complex(); }
inline std::string to_string(const Zeta8& a) { return a.str(); }
inline std::ostream& operator<<(std::ostream& os, const Zeta8& a) { return os << a.str(); }

} // namespace qm
