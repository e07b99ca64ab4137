#include "qmlab/ratfunc.hpp"

namespace qm {

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.zero()) throw division_by_zero("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize()
{
    if (num_.zero()) {
        den_ = QPoly(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = QPoly::divmod(num_, g).first;
            den_ = QPoly::divmod(den_, g).first;
        }
    }
    Rational l = den_.lead();
    if (l != 1) {
        Rational li = inverse(l);
        num_.scale(li);
        den_.scale(li);
    }
}

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    // cross-cancel first so the gcd in normalize() stays small
    QPoly g1 = QPoly::gcd(num_, o.den_);
    QPoly g2 = QPoly::gcd(o.num_, den_);
    QPoly a = g1.degree() > 0 ? QPoly::divmod(num_, g1).first : num_;
    QPoly d2 = g1.degree() > 0 ? QPoly::divmod(o.den_, g1).first : o.den_;
    QPoly b = g2.degree() > 0 ? QPoly::divmod(o.num_, g2).first : o.num_;
    QPoly d1 = g2.degree() > 0 ? QPoly::divmod(den_, g2).first : den_;
    num_ = a * b;
    den_ = d1 * d2;
    if (num_.zero()) den_ = QPoly(Rational(1));
    Rational l = den_.lead();
    if (l != 1) {
        Rational li = inverse(l);
        num_.scale(li);
        den_.scale(li);
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= inverse(o); }

RatFunc inverse(const RatFunc& f)
{
    if (is_zero(f)) throw division_by_zero("inverse of zero rational function");
    return RatFunc(f.den(), f.num());
}

Rational RatFunc::eval(const Rational& t) const
{
    Rational d = den_.eval(t);
    if (is_zero(d)) throw division_by_zero("rational function evaluated at a pole");
    return num_.eval(t) / d;
}

std::string RatFunc::str(const std::string& var) const
{
    if (den_.degree() == 0) return to_string(num_, var);
    return "(" + to_string(num_, var) + ")/(" + to_string(den_, var) + ")";
}

} // namespace qm
