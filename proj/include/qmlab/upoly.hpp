#pragma once

#include "qmlab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qm {

// Dense univariate polynomial over a field K, coefficients low to high.
template <class K>
class UPoly {
public:
    UPoly() = default;
    UPoly(const K& c) : c_{c} { trim(); }
    explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }

    static UPoly x() { return UPoly(std::vector<K>{K(0), K(1)}); }
    static UPoly monomial(const K& c, int e)
    {
        std::vector<K> v(e + 1, K(0));
        v[e] = c;
        return UPoly(std::move(v));
    }

    int degree() const { return int(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    K coeff(int e) const { return e >= 0 && e < int(c_.size()) ? c_[e] : K(0); }
    const K& lead() const { return c_.back(); }
    const std::vector<K>& coeffs() const { return c_; }

    UPoly operator-() const
    {
        UPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    UPoly& operator+=(const UPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    UPoly& operator*=(const UPoly& o)
    {
        if (zero() || o.zero()) {
            c_.clear();
            return *this;
        }
        std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
        for (size_t a = 0; a < c_.size(); ++a) {
            if (is_zero(c_[a])) continue;
            for (size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
        }
        c_ = std::move(r);
        trim();
        return *this;
    }
    UPoly& scale(const K& s)
    {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    // a = q*b + r with deg r < deg b
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
    {
        if (b.zero()) throw division_by_zero("polynomial division by 0");
        UPoly r = a;
        std::vector<K> q(std::max(0, a.degree() - b.degree() + 1), K(0));
        K li = inverse(b.lead());
        while (!r.zero() && r.degree() >= b.degree()) {
            int s = r.degree() - b.degree();
            K f = r.lead() * li;
            q[s] = f;
            for (int k = 0; k <= b.degree(); ++k) r.c_[k + s] -= f * b.c_[k];
            r.c_.pop_back();
            r.trim();
        }
        return {UPoly(std::move(q)), r};
    }

    UPoly monic() const
    {
        if (zero()) return *this;
        UPoly r = *this;
        return r.scale(inverse(lead()));
    }

    static UPoly gcd(UPoly a, UPoly b)
    {
        while (!b.zero()) {
            UPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    UPoly derivative() const
    {
        std::vector<K> r;
        for (size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * K(long(k)));
        return UPoly(std::move(r));
    }

    template <class V>
    V eval(const V& x) const
    {
        V r(0);
        for (int k = degree(); k >= 0; --k) r = r * x + V(c_[k]);
        return r;
    }

private:
    void trim()
    {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
bool is_zero(const UPoly<K>& p)
{
    return p.zero();
}

template <class K>
std::string to_string(const UPoly<K>& p, const std::string& var = "t")
{
    if (p.zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        if (is_zero(p.coeff(k))) continue;
        std::string c = to_string(p.coeff(k));
        if (!s.empty()) s += " + ";
        s += "(" + c + ")";
        if (k > 0) s += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s;
}

} // namespace qm
