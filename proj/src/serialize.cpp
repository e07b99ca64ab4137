#include "qmlab/serialize.hpp"

#include <boost/algorithm/string.hpp>

namespace qm {

json to_json(const Rational& q) { return q.get_str(); }

json to_json(const Zeta8& z)
{
    json c = json::array();
    for (auto& v : z.coeffs()) c.push_back(v.get_str());
    return {{"coeffs", c}, {"text", z.str()}};
}

json to_json(const Cplx& z) { return json::array({z.real(), z.imag()}); }

json to_json(const QMatrix& m)
{
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        out.push_back(row);
    }
    return out;
}

json to_json(const ZMatrix& m)
{
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        out.push_back(row);
    }
    return out;
}

json to_json(const SiegelPoint& tau)
{
    return json::array({json::array({to_json(tau(0, 0)), to_json(tau(0, 1))}),
                        json::array({to_json(tau(1, 0)), to_json(tau(1, 1))})});
}

json to_json(const ZPoint& p)
{
    json out = json::array();
    for (auto& v : p) out.push_back(v.str());
    return out;
}

json to_json(const CPoint& p)
{
    json out = json::array();
    for (auto& v : p) out.push_back(to_json(v));
    return out;
}

json to_json(const T24& g)
{
    T24 n = g.normalized();
    return json::array({n.a, n.b, n.c, n.d});
}

json to_json(const TableRow& r)
{
    return {{"j", r.j}, {"d", r.d}, {"disc", r.disc}, {"division", r.division}, {"maximal", r.maximal}};
}

Zeta8 parse_zeta8(const std::string& s)
{
    std::vector<std::string> parts;
    std::string t = boost::algorithm::trim_copy(s);
    boost::algorithm::split(parts, t, boost::is_any_of(","));
    if (parts.size() == 1) return Zeta8(parse_rational(boost::algorithm::trim_copy(parts[0])));
    if (parts.size() != 4) throw std::invalid_argument("expected 1 or 4 comma-separated rationals: " + s);
    std::array<Rational, 4> c;
    for (int k = 0; k < 4; ++k) c[k] = parse_rational(boost::algorithm::trim_copy(parts[k]));
    return Zeta8(c[0], c[1], c[2], c[3]);
}

ZPoint parse_zeta8_point(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    boost::algorithm::split(parts, s, [sep](char c) { return c == sep; });
    ZPoint out;
    for (auto& p : parts) out.push_back(parse_zeta8(p));
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s)
{
    std::vector<std::string> parts;
    boost::algorithm::split(parts, s, boost::is_any_of(","));
    std::vector<Rational> out;
    for (auto& p : parts) out.push_back(parse_rational(boost::algorithm::trim_copy(p)));
    return out;
}

std::vector<double> parse_doubles(const std::string& s)
{
    std::vector<std::string> parts;
    boost::algorithm::split(parts, s, boost::is_any_of(","));
    std::vector<double> out;
    for (auto& p : parts) {
        std::string t = boost::algorithm::trim_copy(p);
        size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument("bad number: " + t);
        out.push_back(v);
    }
    return out;
}

} // namespace qm
