#pragma once

#include "qmlab/rational.hpp"

#include <memory>
#include <ostream>
#include <string>
#include <type_traits>

namespace qm {

struct zero_divisor : std::domain_error {
    using std::domain_error::domain_error;
};

// a + b*s over a base field B with s^2 = r. Elements without s-part may carry
// no relation and pick one up when combined.
template <class B>
class QuotientExt {
public:
    QuotientExt() = default;
    QuotientExt(long v) : a_(v) {}
    QuotientExt(const Rational& v) : a_(v) {}
    QuotientExt(const B& a) requires(!std::is_same_v<B, Rational>) : a_(a) {}
    QuotientExt(B a, B b, std::shared_ptr<const B> r) : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)) {}

    static QuotientExt gen(std::shared_ptr<const B> r) { return QuotientExt(B(0), B(1), std::move(r)); }

    const B& a() const { return a_; }
    const B& b() const { return b_; }
    const std::shared_ptr<const B>& relation() const { return r_; }

    QuotientExt operator-() const { return QuotientExt(-a_, -b_, r_); }
    QuotientExt& operator+=(const QuotientExt& o)
    {
        adopt(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuotientExt& operator-=(const QuotientExt& o)
    {
        adopt(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuotientExt& operator*=(const QuotientExt& o)
    {
        adopt(o);
        if (is_zero(b_) && is_zero(o.b_)) {
            a_ *= o.a_;
            return *this;
        }
        B na = a_ * o.a_ + b_ * o.b_ * *r_;
        B nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    QuotientExt& operator/=(const QuotientExt& o) { return *this *= inverse(o); }

    friend QuotientExt operator+(QuotientExt x, const QuotientExt& y) { return x += y; }
    friend QuotientExt operator-(QuotientExt x, const QuotientExt& y) { return x -= y; }
    friend QuotientExt operator*(QuotientExt x, const QuotientExt& y) { return x *= y; }
    friend QuotientExt operator/(QuotientExt x, const QuotientExt& y) { return x /= y; }
    friend bool operator==(const QuotientExt& x, const QuotientExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuotientExt& x, const QuotientExt& y) { return !(x == y); }

    friend QuotientExt inverse(const QuotientExt& x)
    {
        if (is_zero(x.b_)) {
            if (is_zero(x.a_)) throw division_by_zero("QuotientExt inverse of 0");
            return QuotientExt(inverse(x.a_), B(0), x.r_);
        }
        B n = x.a_ * x.a_ - x.b_ * x.b_ * *x.r_;
        if (is_zero(n)) throw zero_divisor("QuotientExt: zero divisor " + x.str());
        B ni = inverse(n);
        return QuotientExt(x.a_ * ni, -(x.b_ * ni), x.r_);
    }

    std::string str() const
    {
        if (is_zero(b_)) return to_string(a_);
        return "(" + to_string(a_) + ") + (" + to_string(b_) + ")*s";
    }

private:
    void adopt(const QuotientExt& o)
    {
        if (!r_) r_ = o.r_;
    }

    B a_{}, b_{};
    std::shared_ptr<const B> r_;
};

template <class B>
bool is_zero(const QuotientExt<B>& x)
{
    return is_zero(x.a()) && is_zero(x.b());
}

template <class B>
std::string to_string(const QuotientExt<B>& x)
{
    return x.str();
}

template <class B>
std::ostream& operator<<(std::ostream& os, const QuotientExt<B>& x)
{
    return os << x.str();
}

} // namespace qm
