#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace heartlab {

using Integer = std::int64_t;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorZ = Vector<Integer>;
using MatrixZ = Matrix<Integer>;
using VectorQ = Vector<Rational>;
using MatrixQ = Matrix<Rational>;

// "p/q" or "p"
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
Rational make_rational(Integer num, Integer den = 1);

bool is_integral(const Rational& q);
Integer floor_to_integer(const Rational& q);
double to_double(const Rational& q);

inline VectorQ to_rational(const VectorZ& v) { return v.cast<Rational>(); }
inline MatrixQ to_rational(const MatrixZ& m) { return m.cast<Rational>(); }

// Exact inverse of a unimodular integer matrix.
MatrixZ inverse_unimodular(const MatrixZ& m);

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& v)
{
    using S = typename Derived::Scalar;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != S(0)) return false;
    return true;
}

template <typename Derived>
bool all_nonpositive(const Eigen::MatrixBase<Derived>& v)
{
    using S = typename Derived::Scalar;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) > S(0)) return false;
    return true;
}

template <typename Derived>
bool all_nonnegative(const Eigen::MatrixBase<Derived>& v)
{
    using S = typename Derived::Scalar;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) < S(0)) return false;
    return true;
}

}  // namespace heartlab
