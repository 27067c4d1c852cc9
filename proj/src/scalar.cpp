#include "heartlab/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace heartlab {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    auto check_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!check_int(num) || !check_int(den)) throw std::invalid_argument("bad rational '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    using Z = boost::multiprecision::mpz_int;
    Z n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(boost::multiprecision::mpq_rational(n, d));
}

std::string to_string(const Rational& q) { return q.str(); }

Rational make_rational(Integer num, Integer den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
}

bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

Integer floor_to_integer(const Rational& q)
{
    boost::multiprecision::mpz_int n = boost::multiprecision::numerator(q);
    boost::multiprecision::mpz_int d = boost::multiprecision::denominator(q);
    boost::multiprecision::mpz_int f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return f.convert_to<Integer>();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

MatrixZ inverse_unimodular(const MatrixZ& m)
{
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
    MatrixQ a = to_rational(m);
    MatrixQ inv = MatrixQ::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        a.row(c).swap(a.row(p));
        inv.row(c).swap(inv.row(p));
        Rational piv = a(c, c);
        a.row(c) /= piv;
        inv.row(c) /= piv;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rational f = a(r, c);
            a.row(r) -= f * a.row(c);
            inv.row(r) -= f * inv.row(c);
        }
    }
    MatrixZ out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!is_integral(inv(i, j))) throw std::domain_error("matrix is not unimodular");
            out(i, j) = inv(i, j).convert_to<Integer>();
        }
    return out;
}

}  // namespace heartlab
