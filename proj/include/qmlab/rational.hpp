#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace qm {

using Integer = mpz_class;
using Rational = mpq_class;

struct division_by_zero : std::domain_error {
    using std::domain_error::domain_error;
};

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

inline std::complex<double> to_complex(const Rational& a) { return a.get_d(); }

inline Rational inverse(const Rational& a)
{
    if (is_zero(a)) throw division_by_zero("rational inverse of 0");
    return Rational(1) / a;
}

// Checked division for every scalar type; class types throw on their own.
template <class K>
K fdiv(const K& a, const K& b)
{
    if (is_zero(b)) throw division_by_zero("division by zero");
    return K(a / b);
}

// Always "p/q", also for integers, so the JSON schema is stable.
inline std::string to_string(const Rational& a)
{
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline Rational parse_rational(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (sgn(r.get_den()) == 0) throw division_by_zero("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline Rational rpow(const Rational& a, long e)
{
    Rational base = e < 0 ? inverse(a) : a;
    unsigned long n = e < 0 ? -e : e;
    Rational r(1);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

// Exact square root of a non-negative rational, if it exists.
inline bool rational_sqrt(const Rational& a, Rational& out)
{
    if (sgn(a) < 0) return false;
    Integer n = a.get_num(), d = a.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Rational(rn, rd);
    out.canonicalize();
    return true;
}

} // namespace qm
