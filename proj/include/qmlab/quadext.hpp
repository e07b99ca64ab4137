#pragma once

#include "qmlab/rational.hpp"

#include <ostream>
#include <string>

namespace qm {

// a + b*sqrt(d). d == 0 marks a pure rational that adopts the radicand of
// whatever it is combined with. Perfect-square radicands fold into a.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long v) : a_(v) {}
    QuadExt(const Rational& v) : a_(v) {}
    QuadExt(long d, Rational a, Rational b);

    static QuadExt sqrt_of(long d) { return QuadExt(d, 0, 1); }

    long radicand() const { return d_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt conj() const;
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
    double to_double() const;
    std::string str() const;

private:
    void adopt(const QuadExt& o);
    void fold();

    long d_ = 0;
    Rational a_, b_;
};

inline bool is_zero(const QuadExt& x) { return is_zero(x.a()) && is_zero(x.b()); }
QuadExt inverse(const QuadExt& x);
inline std::string to_string(const QuadExt& x) { return x.str(); }
inline std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

} // namespace qm
