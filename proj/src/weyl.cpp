#include "heartlab/weyl.hpp"

#include <algorithm>

namespace heartlab {

WeylElement WeylElement::identity(const CartanData& c)
{
    MatrixZ id = MatrixZ::Identity(c.size(), c.size());
    return {id, id};
}

Coweight dual_action(const WeylElement& w, const Coweight& theta)
{
    return to_rational(MatrixZ(w.inverse.transpose())) * theta;
}

WeylElement simple_reflection(const CartanData& c, int i)
{
    if (i < 0 || i >= c.size()) throw std::out_of_range("node out of range");
    MatrixZ s = MatrixZ::Identity(c.size(), c.size());
    s.row(i) -= c.affine.row(i);
    return {s, s};
}

WeylElement reflection(const CartanData& c, const RootVector& beta)
{
    if (!is_real_root(c, beta)) throw std::invalid_argument("reflection in a non-real root");
    MatrixZ s = MatrixZ::Identity(c.size(), c.size()) - beta * (beta.transpose() * c.affine);
    return {s, s};
}

WeylElement shear(const CartanData& c, const FiniteCoweight& lam)
{
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (!is_integral(lam(i))) throw std::invalid_argument("shear by a non-integral coweight");
    Coweight e = embed(c, lam);
    VectorZ row(c.size());
    for (int i = 0; i < c.size(); ++i) row(i) = e(i).convert_to<Integer>();
    MatrixZ id = MatrixZ::Identity(c.size(), c.size());
    MatrixZ d = delta(c) * row.transpose();
    return {id + d, id - d};
}

WeylElement from_word(const CartanData& c, const std::vector<int>& word)
{
    WeylElement w = WeylElement::identity(c);
    for (int i : word) w = w * simple_reflection(c, i);
    return w;
}

std::vector<int> reduced_word(const CartanData& c, const WeylElement& w)
{
    // Works on u = (current w)^{-1}; stripping s_i on the left of w multiplies u by s_i on the right.
    MatrixZ u = w.inverse;
    const int n = c.size();
    std::vector<int> word;
    const std::size_t cap = 1u << 20;
    for (;;) {
        int found = -1;
        for (int i = 0; i < n && found < 0; ++i)
            if (is_negative(u.col(i))) found = i;
        if (found < 0) break;
        VectorZ col = u.col(found);
        u -= col * c.affine.row(found);
        word.push_back(found);
        if (word.size() > cap) throw NotInGroupError("descent did not terminate");
    }
    if (u != MatrixZ::Identity(n, n)) throw NotInGroupError("element is not in the affine Weyl group");
    return word;
}

bool in_group(const CartanData& c, const WeylElement& w)
{
    try {
        reduced_word(c, w);
        return true;
    } catch (const NotInGroupError&) {
        return false;
    }
}

std::size_t length(const CartanData& c, const WeylElement& w) { return reduced_word(c, w).size(); }

WeylElement longest_element(const CartanData& c)
{
    WeylElement w = WeylElement::identity(c);
    for (;;) {
        int found = -1;
        for (int i = 1; i < c.size() && found < 0; ++i)
            if (!is_negative(w.matrix.col(i))) found = i;
        if (found < 0) return w;
        w = w * simple_reflection(c, found);
    }
}

MatrixZ permutation_matrix(const std::vector<int>& gamma)
{
    const int n = static_cast<int>(gamma.size());
    MatrixZ p = MatrixZ::Zero(n, n);
    for (int i = 0; i < n; ++i) p(gamma[i], i) = 1;
    return p;
}

MatrixZ ExtendedWeylElement::matrix() const { return permutation_matrix(gamma) * w.matrix; }
MatrixZ ExtendedWeylElement::inverse() const { return w.inverse * permutation_matrix(gamma).transpose(); }

ExtendedWeylElement decompose_extended(const CartanData& c, const MatrixZ& m)
{
    for (const auto& g : c.gamma) {
        MatrixZ pt = permutation_matrix(g).transpose();
        WeylElement w{pt * m, MatrixZ()};
        MatrixZ inv;
        try {
            inv = inverse_unimodular(w.matrix);
        } catch (const std::domain_error&) {
            continue;
        }
        w.inverse = inv;
        if (in_group(c, w)) return {g, w};
    }
    throw NotInGroupError("matrix is not in the extended affine Weyl group");
}

ExtendedWeylElement compose(const CartanData& c, const ExtendedWeylElement& a, const ExtendedWeylElement& b)
{
    return decompose_extended(c, a.matrix() * b.matrix());
}

ExtendedWeylElement extended_longest_element(const CartanData& c)
{
    std::vector<int> kappa = c.kappa;
    return {kappa, longest_element(c)};
}

ExtendedWeylElement extended_shear(const CartanData& c, const FiniteCoweight& lam)
{
    return decompose_extended(c, shear(c, lam).matrix);
}

Coweight dual_action(const ExtendedWeylElement& w, const Coweight& theta)
{
    return to_rational(MatrixZ(w.inverse().transpose())) * theta;
}

DominantDecomposition dominant_decomposition(const CartanData& c, const FiniteCoweight& lam)
{
    Integer mn = 0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (!is_integral(lam(i))) throw std::invalid_argument("dominant decomposition needs an integral coweight");
        mn = std::min(mn, lam(i).convert_to<Integer>());
    }
    DominantDecomposition d;
    d.N = -mn;
    d.lam2 = Rational(d.N) * sum_lambda(c, finite_nodes(c));
    d.lam1 = lam + d.lam2;
    return d;
}

std::vector<Generator> wJ_generators(const CartanData& c, const std::vector<int>& J)
{
    std::vector<Generator> out;
    for (int i : complement(c, J)) out.push_back({"s" + std::to_string(i), simple_reflection(c, i)});
    for (int i = 1; i <= c.rank(); ++i) out.push_back({"l(a" + std::to_string(i) + ")", shear(c, coroot(c, i))});
    return out;
}

WeylElement evaluate(const CartanData& c, const std::vector<Generator>& gens, const GeneratorWord& word)
{
    WeylElement w = WeylElement::identity(c);
    for (const auto& letter : word) {
        const WeylElement& g = gens.at(letter.index).element;
        WeylElement step = letter.power >= 0 ? g : g.inv();
        for (Integer k = 0; k < (letter.power >= 0 ? letter.power : -letter.power); ++k) w = w * step;
    }
    return w;
}

}  // namespace heartlab
