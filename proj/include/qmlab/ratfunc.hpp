#pragma once

#include "qmlab/upoly.hpp"

#include <ostream>
#include <string>

namespace qm {

using QPoly = UPoly<Rational>;

// Element of Q(t): num/den, coprime, den monic.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(long v) : num_(Rational(v)), den_(Rational(1)) {}
    RatFunc(const Rational& v) : num_(v), den_(Rational(1)) {}
    RatFunc(QPoly num) : num_(std::move(num)), den_(Rational(1)) {}
    RatFunc(QPoly num, QPoly den);

    static RatFunc var() { return RatFunc(QPoly::x()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // Evaluate at a rational point; throws at a pole.
    Rational eval(const Rational& t) const;
    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    QPoly num_, den_;
};

inline bool is_zero(const RatFunc& f) { return f.num().zero(); }
RatFunc inverse(const RatFunc& f);
inline std::string to_string(const RatFunc& f) { return f.str(); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

} // namespace qm
