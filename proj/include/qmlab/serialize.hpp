#pragma once

#include "qmlab/heisenberg.hpp"
#include "qmlab/igusa.hpp"
#include "qmlab/kummer.hpp"
#include "qmlab/quaternion.hpp"
#include "qmlab/symplectic.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qm {

using json = nlohmann::json;

json to_json(const Rational& q);
json to_json(const Zeta8& z);
json to_json(const Cplx& z);
json to_json(const QMatrix& m);
json to_json(const ZMatrix& m);
json to_json(const SiegelPoint& tau);
json to_json(const ZPoint& p);
json to_json(const CPoint& p);
json to_json(const T24& g);
json to_json(const TableRow& r);

template <class K>
json to_json(const HomogPoly<K>& p)
{
    return {{"degree", p.degree()}, {"terms", p.term_count()}, {"text", to_string(p)}};
}

// "c0,c1,c2,c3" (coefficients of 1, z, z^2, z^3 with z = exp(pi i/4)) or a
// single rational "p/q".
Zeta8 parse_zeta8(const std::string& s);
ZPoint parse_zeta8_point(const std::string& s, char sep = ';');
std::vector<Rational> parse_rationals(const std::string& s);
std::vector<double> parse_doubles(const std::string& s);

} // namespace qm
