#pragma once

#include "qmlab/rational.hpp"
#include "qmlab/upoly.hpp"

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qm {

using Exps = std::array<int, 6>;

// Sparse homogeneous polynomial in up to six variables over a field K.
// The zero polynomial keeps its declared degree so it can still be added.
template <class K>
class HomogPoly {
public:
    HomogPoly() = default;
    HomogPoly(int nvars, int degree) : n_(nvars), deg_(degree)
    {
        if (nvars < 1 || nvars > 6) throw std::invalid_argument("HomogPoly: 1..6 variables");
    }

    static HomogPoly var(int nvars, int i)
    {
        HomogPoly p(nvars, 1);
        Exps e{};
        e[i] = 1;
        p.t_[e] = K(1);
        return p;
    }
    static HomogPoly constant(int nvars, const K& c)
    {
        HomogPoly p(nvars, 0);
        if (!is_zero(c)) p.t_[Exps{}] = c;
        return p;
    }
    static HomogPoly monomial(int nvars, const Exps& e, const K& c)
    {
        int d = 0;
        for (int k = 0; k < nvars; ++k) d += e[k];
        HomogPoly p(nvars, d);
        if (!is_zero(c)) p.t_[e] = c;
        return p;
    }

    int nvars() const { return n_; }
    int degree() const { return deg_; }
    bool zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<Exps, K>& terms() const { return t_; }
    K coeff(const Exps& e) const
    {
        auto it = t_.find(e);
        return it == t_.end() ? K(0) : it->second;
    }

    void add_term(const Exps& e, const K& c)
    {
        int d = 0;
        for (int k = 0; k < n_; ++k) d += e[k];
        if (d != deg_) throw std::invalid_argument("HomogPoly: term of degree " + std::to_string(d) +
                                                   " in a polynomial of degree " + std::to_string(deg_));
        auto [it, fresh] = t_.try_emplace(e, c);
        if (!fresh) it->second += c;
        if (is_zero(it->second)) t_.erase(it);
    }

    HomogPoly operator-() const
    {
        HomogPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    HomogPoly& operator+=(const HomogPoly& o)
    {
        check_compatible(o);
        if (zero()) deg_ = o.deg_;
        for (auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    HomogPoly& operator-=(const HomogPoly& o) { return *this += -o; }
    HomogPoly& operator*=(const HomogPoly& o)
    {
        if (n_ != o.n_) throw std::invalid_argument("HomogPoly: variable count mismatch");
        HomogPoly r(n_, deg_ + o.deg_);
        for (auto& [ea, ca] : t_)
            for (auto& [eb, cb] : o.t_) {
                Exps e;
                for (int k = 0; k < 6; ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        *this = std::move(r);
        return *this;
    }
    HomogPoly& operator*=(const K& s)
    {
        if (is_zero(s)) {
            t_.clear();
            return *this;
        }
        for (auto& [e, c] : t_) c *= s;
        return *this;
    }

    friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
    friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
    friend HomogPoly operator*(HomogPoly a, const HomogPoly& b) { return a *= b; }
    friend HomogPoly operator*(HomogPoly a, const K& s) { return a *= s; }
    friend HomogPoly operator*(const K& s, HomogPoly a) { return a *= s; }
    friend bool operator==(const HomogPoly& a, const HomogPoly& b)
    {
        if (a.n_ != b.n_) return false;
        if (a.zero() && b.zero()) return true;
        return a.deg_ == b.deg_ && a.t_ == b.t_;
    }
    friend bool operator!=(const HomogPoly& a, const HomogPoly& b) { return !(a == b); }

    HomogPoly pow(int e) const
    {
        HomogPoly r = constant(n_, K(1));
        HomogPoly b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    // Partial derivative in variable i.
    HomogPoly diff(int i) const
    {
        HomogPoly r(n_, deg_ > 0 ? deg_ - 1 : 0);
        for (auto& [e, c] : t_) {
            if (e[i] == 0) continue;
            Exps f = e;
            f[i] -= 1;
            r.add_term(f, c * K(long(e[i])));
        }
        return r;
    }

    template <class V>
    V eval(const std::vector<V>& pt) const
    {
        if (int(pt.size()) != n_) throw std::invalid_argument("HomogPoly::eval: point has wrong length");
        V r(0);
        for (auto& [e, c] : t_) {
            V m = V(c);
            for (int k = 0; k < n_; ++k)
                for (int j = 0; j < e[k]; ++j) m *= pt[k];
            r += m;
        }
        return r;
    }

    std::complex<double> eval_c(const std::vector<std::complex<double>>& pt) const
    {
        if (int(pt.size()) != n_) throw std::invalid_argument("HomogPoly::eval: point has wrong length");
        std::complex<double> r = 0;
        for (auto& [e, c] : t_) {
            std::complex<double> m = to_complex(c);
            for (int k = 0; k < n_; ++k)
                for (int j = 0; j < e[k]; ++j) m *= pt[k];
            r += m;
        }
        return r;
    }

    // Composition with homogeneous images of equal degree.
    HomogPoly substitute(const std::vector<HomogPoly>& img) const
    {
        if (int(img.size()) != n_) throw std::invalid_argument("substitute: need one image per variable");
        int m = img.front().nvars();
        int e = img.front().degree();
        for (auto& q : img)
            if (q.nvars() != m || q.degree() != e)
                throw std::invalid_argument("substitute: images must share variable count and degree");
        std::vector<std::vector<HomogPoly>> pw(n_);
        for (int k = 0; k < n_; ++k) pw[k].push_back(constant(m, K(1)));
        HomogPoly r(m, deg_ * e);
        for (auto& [ex, c] : t_) {
            HomogPoly t = constant(m, c);
            for (int k = 0; k < n_; ++k) {
                while (int(pw[k].size()) <= ex[k]) pw[k].push_back(pw[k].back() * img[k]);
                if (ex[k]) t *= pw[k][ex[k]];
            }
            r += t;
        }
        return r;
    }

    // Binary forms only: f(x, 1) with x-degree index.
    UPoly<K> dehomogenize() const
    {
        require_binary();
        std::vector<K> c(deg_ + 1, K(0));
        for (auto& [e, v] : t_) c[e[0]] = v;
        return UPoly<K>(std::move(c));
    }
    static HomogPoly homogenize(const UPoly<K>& p, int degree)
    {
        HomogPoly r(2, degree);
        for (int k = 0; k <= p.degree(); ++k)
            if (!is_zero(p.coeff(k))) r.add_term(Exps{k, degree - k}, p.coeff(k));
        return r;
    }
    // Power of y dividing a binary form.
    int y_valuation() const
    {
        require_binary();
        int v = deg_;
        for (auto& [e, c] : t_) v = std::min(v, e[1]);
        return v;
    }

private:
    void check_compatible(const HomogPoly& o) const
    {
        if (n_ != o.n_) throw std::invalid_argument("HomogPoly: variable count mismatch");
        if (!zero() && !o.zero() && deg_ != o.deg_)
            throw std::invalid_argument("HomogPoly: adding degrees " + std::to_string(deg_) + " and " +
                                        std::to_string(o.deg_));
    }
    void require_binary() const
    {
        if (n_ != 2) throw std::invalid_argument("binary form expected");
    }

    int n_ = 2, deg_ = 0;
    std::map<Exps, K> t_;
};

template <class K>
bool is_zero(const HomogPoly<K>& p)
{
    return p.zero();
}

// Monic gcd of two binary forms: gcd of the dehomogenized parts times the
// common power of y.
template <class K>
HomogPoly<K> poly_gcd(const HomogPoly<K>& p, const HomogPoly<K>& q)
{
    if (p.zero()) return q.zero() ? q : poly_gcd(q, q);
    if (q.zero()) return poly_gcd(p, p);
    int vy = std::min(p.y_valuation(), q.y_valuation());
    UPoly<K> g = UPoly<K>::gcd(p.dehomogenize(), q.dehomogenize());
    HomogPoly<K> h = HomogPoly<K>::homogenize(g, g.degree() + vy);
    return h;
}

// Exact division of binary forms; nullopt when q does not divide p.
template <class K>
std::optional<HomogPoly<K>> poly_divide(const HomogPoly<K>& p, const HomogPoly<K>& q)
{
    if (q.zero()) throw division_by_zero("division by the zero form");
    if (p.zero()) return HomogPoly<K>(2, std::max(0, p.degree() - q.degree()));
    if (p.degree() < q.degree() || p.y_valuation() < q.y_valuation()) return std::nullopt;
    auto [quo, rem] = UPoly<K>::divmod(p.dehomogenize(), q.dehomogenize());
    if (!rem.zero()) return std::nullopt;
    return HomogPoly<K>::homogenize(quo, p.degree() - q.degree());
}

template <class K>
std::string to_string(const HomogPoly<K>& p)
{
    static const char* x2[] = {"x", "y"};
    static const char* x6[] = {"x1", "x2", "x3", "x4", "x5", "x6"};
    if (p.zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(it->second) + ")";
        for (int k = 0; k < p.nvars(); ++k) {
            int e = it->first[k];
            if (!e) continue;
            s += std::string("*") + (p.nvars() == 2 ? x2[k] : x6[k]);
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

} // namespace qm
