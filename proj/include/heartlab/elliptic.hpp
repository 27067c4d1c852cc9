#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "heartlab/lattice.hpp"

namespace heartlab {

// Chevalley basis of sl_{n+1}: root vectors E_ab and H_i = E_ii - E_{i+1,i+1},
// trace form normalized so (X_a, X_{-a}) = 1.
struct ChevalleyBasis {
    struct Element {
        bool cartan = false;
        int a = 0, b = 0;  // E_ab (1-based) for root vectors
        int i = 0;         // H_i for Cartan elements
        VectorZ weight;    // root in Y (alpha_0-coordinate 0), zero for H_i
        std::string name;  // "alpha1+alpha2", "-alpha2", "H1"
    };
    int n = 0;  // rank
    std::vector<Element> basis;
    // bracket[p][q] = sparse combination of basis elements
    std::vector<std::vector<std::vector<std::pair<int, Integer>>>> structure;
    MatrixZ form;

    int size() const { return static_cast<int>(basis.size()); }
    int root_vector(const VectorZ& weight) const;  // index of X_weight
    int cartan(int i) const;                       // index of H_i
    int find(const std::string& name) const;
};

ChevalleyBasis chevalley_basis(const CartanData& c);

inline constexpr int kMaxSDegree = 5;
inline constexpr int kMaxTDegree = 5;

// Element of the central extension of g_f[s^{+-1}, t]:
// terms x_p (x) s^k t^l, central c_l and c_{k,l}.
struct LoopElement {
    std::map<std::tuple<int, int, int>, Rational> terms;  // (basis, k, l)
    std::map<int, Rational> c_l;
    std::map<std::pair<int, int>, Rational> c_kl;

    // explicit constructors enforce |k| <= 5, 0 <= l <= 5
    static LoopElement monomial(int basis, int k, int l, const Rational& coeff = 1);
    static LoopElement central(int l, const Rational& coeff = 1);
    static LoopElement central_kl(int k, int l, const Rational& coeff = 1);

    LoopElement& operator+=(const LoopElement& o);
    LoopElement& operator-=(const LoopElement& o);
    LoopElement& operator*=(const Rational& s);
    bool is_zero() const;
    bool operator==(const LoopElement& o) const;
    void prune();
};

LoopElement operator+(LoopElement a, const LoopElement& b);
LoopElement operator-(LoopElement a, const LoopElement& b);
LoopElement operator*(const Rational& s, LoopElement a);

// [x s^k t^l, y s^h t^n] = [x,y] s^{k+h} t^{l+n}
//   + k (x,y) c_{l+n}                    if k + h = 0
//   + (k n - l h) (x,y) c_{k+h, l+n}     otherwise
// Results are not truncated.
LoopElement bracket(const ChevalleyBasis& cb, const LoopElement& a, const LoopElement& b);

// Invariant form on the loop part: (x s^k t^l, y s^h t^n) = (x,y) when k+h = 0 and l = n = 0, else 0.
Rational loop_form(const ChevalleyBasis& cb, const LoopElement& a, const LoopElement& b);

struct Degree {
    int horizontal = 0;  // -2l
    VectorZ vertical;    // d + k delta
    bool operator==(const Degree& o) const { return horizontal == o.horizontal && vertical == o.vertical; }
};

std::vector<Degree> degrees(const CartanData& c, const ChevalleyBasis& cb, const LoopElement& x);
bool is_homogeneous(const CartanData& c, const ChevalleyBasis& cb, const LoopElement& x);

enum class GenKind { Plus, Minus, H };

// Signs as bits: bit v set means variable v is -1. Variables are
// sigma_+(i) = 3i, sigma_-(i) = 3i+1, sigma_h(i) = 3i+2 and tau = 3|I|.
using SignMask = std::uint32_t;
using SignedSum = std::vector<std::pair<SignMask, LoopElement>>;

int sign_variable(int node, GenKind kind);
int tau_variable(const CartanData& c);

// x+_{i,l} -> X_i+ t^l, x-_{i,l} -> X_i- t^l, h_{i,l} -> H_i t^l for i in I_f;
// x+_{0,l} -> X_{-phi} t^l s, x-_{0,l} -> X_phi t^l s^{-1}, h_{0,l} -> H_phi t^l + tau c_l.
SignedSum psi_generator(const CartanData& c, const ChevalleyBasis& cb, int i, int l, GenKind kind);
LoopElement evaluate_signs(const SignedSum& s, SignMask assignment);
SignedSum bracket(const ChevalleyBasis& cb, const SignedSum& a, const SignedSum& b);

struct RelationInstance {
    std::string name;
    SignedSum value;  // should vanish
};

std::vector<RelationInstance> classical_relations(const CartanData& c, const ChevalleyBasis& cb, int lmax);

struct ClassicalReport {
    std::size_t relation_count = 0;
    bool literal_ok = false;  // all signs +1
    std::vector<std::string> literal_failures;
    std::vector<SignMask> solutions;
    bool unique_up_to_flips = false;
    SignMask chosen = 0;
    std::vector<int> sigma_plus, sigma_minus, sigma_h;
    int tau = 1;
    bool serre_ok = false;
    bool ok = false;
};

ClassicalReport check_classical_relations(const CartanData& c, int lmax);

}  // namespace heartlab
