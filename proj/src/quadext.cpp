#include "qmlab/quadext.hpp"

#include <cmath>

namespace qm {

QuadExt::QuadExt(long d, Rational a, Rational b) : d_(d), a_(std::move(a)), b_(std::move(b))
{
    if (d < 0) throw std::invalid_argument("QuadExt: radicand must be non-negative");
    fold();
}

void QuadExt::fold()
{
    if (d_ == 0) {
        b_ = 0;
        return;
    }
    Integer dz(d_);
    if (mpz_perfect_square_p(dz.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), dz.get_mpz_t());
        a_ += b_ * Rational(r);
        b_ = 0;
    }
}

void QuadExt::adopt(const QuadExt& o)
{
    if (o.d_ == 0 || o.d_ == d_) return;
    if (d_ == 0) {
        d_ = o.d_;
        return;
    }
    if (is_zero(o.b_)) return;
    if (is_zero(b_)) {
        d_ = o.d_;
        return;
    }
    throw std::invalid_argument("QuadExt: mixing radicands " + std::to_string(d_) + " and " +
                                std::to_string(o.d_));
}

QuadExt QuadExt::operator-() const
{
    QuadExt r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o)
{
    adopt(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o)
{
    adopt(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o)
{
    adopt(o);
    Rational na = a_ * o.a_ + Rational(d_) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= inverse(o); }

QuadExt QuadExt::conj() const
{
    QuadExt r = *this;
    r.b_ = -b_;
    return r;
}

QuadExt inverse(const QuadExt& x)
{
    Rational n = x.norm();
    if (is_zero(n)) throw division_by_zero("QuadExt inverse of 0");
    QuadExt c = x.conj();
    return c * QuadExt(inverse(n));
}

double QuadExt::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(double(d_)); }

std::string QuadExt::str() const
{
    if (is_zero(b_)) return a_.get_str();
    std::string s = is_zero(a_) ? "" : a_.get_str() + (sgn(b_) > 0 ? "+" : "");
    return s + b_.get_str() + "*sqrt(" + std::to_string(d_) + ")";
}

} // namespace qm
