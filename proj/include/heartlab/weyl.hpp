#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "heartlab/lattice.hpp"

namespace heartlab {

struct NotInGroupError : std::domain_error {
    using std::domain_error::domain_error;
};

// Element of W acting on Y, identified by its matrix; the inverse is carried along.
struct WeylElement {
    MatrixZ matrix;
    MatrixZ inverse;

    static WeylElement identity(const CartanData& c);
    WeylElement operator*(const WeylElement& o) const { return {matrix * o.matrix, o.inverse * inverse}; }
    WeylElement inv() const { return {inverse, matrix}; }
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    bool is_identity() const { return matrix == MatrixZ::Identity(matrix.rows(), matrix.cols()); }
};

template <typename Derived>
RootVector act(const WeylElement& w, const Eigen::MatrixBase<Derived>& v)
{
    return w.matrix * v;
}

// (w.theta, v) = (theta, w^{-1} v)
Coweight dual_action(const WeylElement& w, const Coweight& theta);

WeylElement simple_reflection(const CartanData& c, int i);
// s_beta(v) = v - (beta, v) beta, beta a real root
WeylElement reflection(const CartanData& c, const RootVector& beta);
// l_lam(v) = v + (lam, v) delta; lam must be integral
WeylElement shear(const CartanData& c, const FiniteCoweight& lam);
WeylElement from_word(const CartanData& c, const std::vector<int>& word);

// Descent stripping from the left; throws NotInGroupError if w is not in W.
std::vector<int> reduced_word(const CartanData& c, const WeylElement& w);
bool in_group(const CartanData& c, const WeylElement& w);
std::size_t length(const CartanData& c, const WeylElement& w);

// Longest element of W_f, as an element of W.
WeylElement longest_element(const CartanData& c);

MatrixZ permutation_matrix(const std::vector<int>& gamma);

// gamma o w with gamma a diagram automorphism
struct ExtendedWeylElement {
    std::vector<int> gamma;
    WeylElement w;
    MatrixZ matrix() const;
    MatrixZ inverse() const;
};

ExtendedWeylElement decompose_extended(const CartanData& c, const MatrixZ& m);
ExtendedWeylElement compose(const CartanData& c, const ExtendedWeylElement& a, const ExtendedWeylElement& b);
// kappa o w0
ExtendedWeylElement extended_longest_element(const CartanData& c);
// l_lam for an arbitrary integral finite coweight, split as gamma o w
ExtendedWeylElement extended_shear(const CartanData& c, const FiniteCoweight& lam);
Coweight dual_action(const ExtendedWeylElement& w, const Coweight& theta);

struct DominantDecomposition {
    FiniteCoweight lam1;
    FiniteCoweight lam2;
    Integer N = 0;
};

// lam = lam1 - lam2 with both dominant, lam2 = N * sum_i lambda_i
DominantDecomposition dominant_decomposition(const CartanData& c, const FiniteCoweight& lam);

struct Generator {
    std::string label;  // "s3" or "l(a2)"
    WeylElement element;
};

// Generators of the subgroup W(J): s_i for i outside J, shears by the simple coroots.
std::vector<Generator> wJ_generators(const CartanData& c, const std::vector<int>& J);

// Letter (generator index, power) in a word over a generator list.
struct GeneratorLetter {
    int index = 0;
    Integer power = 1;
};
using GeneratorWord = std::vector<GeneratorLetter>;

WeylElement evaluate(const CartanData& c, const std::vector<Generator>& gens, const GeneratorWord& word);

}  // namespace heartlab
