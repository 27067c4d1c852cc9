#pragma once

#include <vector>

#include "heartlab/cartan.hpp"

namespace heartlab {

// Root lattice Y in the alpha basis (length e+1).
using RootVector = VectorZ;
// Coweights in the omega-check basis (length e+1); coordinate i is the value on alpha_i.
using Coweight = VectorQ;

// Finite coweight in the lambda-check basis (length e). Kept distinct from
// Coweight so that the embedding is always spelled out.
struct FiniteCoweight {
    VectorQ coords;
    FiniteCoweight() = default;
    explicit FiniteCoweight(VectorQ c) : coords(std::move(c)) {}
    Eigen::Index size() const { return coords.size(); }
    const Rational& operator()(Eigen::Index i) const { return coords(i); }
    bool operator==(const FiniteCoweight& o) const { return coords == o.coords; }
};

inline FiniteCoweight operator+(const FiniteCoweight& a, const FiniteCoweight& b) { return FiniteCoweight(a.coords + b.coords); }
inline FiniteCoweight operator-(const FiniteCoweight& a, const FiniteCoweight& b) { return FiniteCoweight(a.coords - b.coords); }
inline FiniteCoweight operator*(const Rational& s, const FiniteCoweight& a) { return FiniteCoweight(s * a.coords); }

template <typename D1, typename D2>
Rational pairing(const Eigen::MatrixBase<D1>& theta, const Eigen::MatrixBase<D2>& v)
{
    Rational acc = 0;
    for (Eigen::Index i = 0; i < theta.size(); ++i) acc += Rational(theta(i)) * Rational(v(i));
    return acc;
}

RootVector delta(const CartanData& c);
RootVector simple_root(const CartanData& c, int i);
Coweight omega_check(const CartanData& c, int i);
Coweight rho_check(const CartanData& c);

FiniteCoweight lambda_check(const CartanData& c, int i);  // i in 1..e
FiniteCoweight sum_lambda(const CartanData& c, const std::vector<int>& J);
// alpha_i^vee as a finite coweight: row i of the finite Cartan matrix.
FiniteCoweight coroot(const CartanData& c, int i);

Coweight embed(const CartanData& c, const FiniteCoweight& lam);
// Inverse of embed on the level-zero hyperplane.
FiniteCoweight restrict_finite(const CartanData& c, const Coweight& theta);

Rational level(const CartanData& c, const Coweight& theta);
Rational pairing(const CartanData& c, const FiniteCoweight& lam, const RootVector& v);

enum class RootKind { Real, Imaginary, NotRoot };

struct RootClass {
    RootKind kind = RootKind::NotRoot;
    RootVector finite;  // alpha with alpha_0-coordinate 0
    Integer n = 0;      // coefficient of delta
};

RootClass classify_root(const CartanData& c, const RootVector& v);
bool is_real_root(const CartanData& c, const RootVector& v);
bool is_root(const CartanData& c, const RootVector& v);
bool is_negative(const RootVector& v);  // nonzero with all coordinates <= 0

// Class of the simple module S_i under the K_0 identification.
RootVector simple_class(const CartanData& c, int i);
// sum_i d_i [S_i]
RootVector class_of_dimension(const CartanData& c, const VectorZ& d);
// dimension vector of a class, inverse of class_of_dimension
VectorZ dimension_of_class(const CartanData& c, const RootVector& v);

// (lam, alpha_i) >= 0 with equality exactly on I_f \ J
bool is_piJ_ample(const CartanData& c, const FiniteCoweight& lam, const std::vector<int>& J);

}  // namespace heartlab
