#include "heartlab/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace heartlab {

RootVector delta(const CartanData& c) { return c.marks; }

RootVector simple_root(const CartanData& c, int i)
{
    RootVector v = RootVector::Zero(c.size());
    v(i) = 1;
    return v;
}

Coweight omega_check(const CartanData& c, int i)
{
    Coweight w = Coweight::Zero(c.size());
    w(i) = 1;
    return w;
}

Coweight rho_check(const CartanData& c) { return Coweight::Constant(c.size(), Rational(1)); }

FiniteCoweight lambda_check(const CartanData& c, int i)
{
    if (i < 1 || i > c.rank()) throw std::out_of_range("finite node out of range");
    VectorQ v = VectorQ::Zero(c.rank());
    v(i - 1) = 1;
    return FiniteCoweight(v);
}

FiniteCoweight sum_lambda(const CartanData& c, const std::vector<int>& J)
{
    VectorQ v = VectorQ::Zero(c.rank());
    for (int i : J) v(i - 1) += 1;
    return FiniteCoweight(v);
}

FiniteCoweight coroot(const CartanData& c, int i)
{
    if (i < 1 || i > c.rank()) throw std::out_of_range("finite node out of range");
    return FiniteCoweight(to_rational(VectorZ(c.finite().row(i - 1).transpose())));
}

Coweight embed(const CartanData& c, const FiniteCoweight& lam)
{
    if (lam.size() != c.rank()) throw std::invalid_argument("finite coweight has wrong length");
    Coweight theta = Coweight::Zero(c.size());
    for (int i = 1; i <= c.rank(); ++i) {
        theta(i) += lam(i - 1);
        theta(0) -= Rational(c.marks(i)) * lam(i - 1);
    }
    return theta;
}

FiniteCoweight restrict_finite(const CartanData& c, const Coweight& theta)
{
    if (level(c, theta) != 0) throw std::domain_error("coweight is not at level zero");
    return FiniteCoweight(VectorQ(theta.tail(c.rank())));
}

Rational level(const CartanData& c, const Coweight& theta) { return pairing(theta, c.marks); }

Rational pairing(const CartanData& c, const FiniteCoweight& lam, const RootVector& v)
{
    Rational acc = 0;
    for (int i = 1; i <= c.rank(); ++i) acc += lam(i - 1) * Rational(v(i) - c.marks(i) * v(0));
    return acc;
}

RootClass classify_root(const CartanData& c, const RootVector& v)
{
    RootClass out;
    out.n = v(0);
    out.finite = v - v(0) * c.marks;
    if (is_zero(out.finite))
        out.kind = out.n != 0 ? RootKind::Imaginary : RootKind::NotRoot;
    else
        out.kind = c.is_finite_root(out.finite) ? RootKind::Real : RootKind::NotRoot;
    return out;
}

bool is_real_root(const CartanData& c, const RootVector& v) { return classify_root(c, v).kind == RootKind::Real; }
bool is_root(const CartanData& c, const RootVector& v) { return classify_root(c, v).kind != RootKind::NotRoot; }

bool is_negative(const RootVector& v) { return !is_zero(v) && all_nonpositive(v); }

RootVector simple_class(const CartanData& c, int i)
{
    if (i == 0) return 2 * delta(c) - simple_root(c, 0);
    return -simple_root(c, c.kappa[i]);
}

RootVector class_of_dimension(const CartanData& c, const VectorZ& d)
{
    RootVector v = RootVector::Zero(c.size());
    for (int i = 0; i < c.size(); ++i) v += d(i) * simple_class(c, i);
    return v;
}

VectorZ dimension_of_class(const CartanData& c, const RootVector& v)
{
    // [S_0] = 2 delta - alpha_0 contributes 2 r_i to every other coordinate.
    VectorZ d = VectorZ::Zero(c.size());
    d(0) = v(0);
    for (int i = 1; i < c.size(); ++i) {
        Integer coeff = v(c.kappa[i]) - 2 * c.marks(c.kappa[i]) * d(0);
        d(i) = -coeff;
    }
    return d;
}

bool is_piJ_ample(const CartanData& c, const FiniteCoweight& lam, const std::vector<int>& J)
{
    if (lam.size() != c.rank()) return false;
    for (int i = 1; i <= c.rank(); ++i) {
        bool inJ = std::find(J.begin(), J.end(), i) != J.end();
        if (inJ ? lam(i - 1) <= 0 : lam(i - 1) != 0) return false;
    }
    return true;
}

}  // namespace heartlab
