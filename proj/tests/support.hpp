#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "heartlab/json_io.hpp"

namespace heartlab::testing {

inline CartanData cartan(const char* name) { return build_cartan(parse_dynkin(name)); }

inline Rational rand_rational(std::mt19937_64& rng, int bound = 9, int den_max = 5)
{
    std::uniform_int_distribution<int> num(-bound, bound), den(1, den_max);
    return make_rational(num(rng), den(rng));
}

inline Coweight rand_coweight(const CartanData& c, std::mt19937_64& rng, int bound = 9)
{
    Coweight v(c.size());
    for (int i = 0; i < c.size(); ++i) v(i) = rand_rational(rng, bound);
    return v;
}

// Random coweight whose level has the requested sign (+1, -1 or 0).
inline Coweight rand_coweight_with_level(const CartanData& c, std::mt19937_64& rng, int sign)
{
    for (;;) {
        Coweight v = rand_coweight(c, rng);
        if (sign == 0) v(0) -= level(c, v);
        Rational l = level(c, v);
        if (is_zero(v)) continue;
        if ((sign > 0 && l > 0) || (sign < 0 && l < 0) || (sign == 0 && l == 0)) return v;
    }
}

inline FiniteCoweight rand_finite(const CartanData& c, std::mt19937_64& rng, int bound = 4, int den_max = 1)
{
    VectorQ v(c.rank());
    for (int i = 0; i < c.rank(); ++i) v(i) = rand_rational(rng, bound, den_max);
    return FiniteCoweight(v);
}

inline std::vector<int> rand_word(const CartanData& c, std::mt19937_64& rng, int max_len, bool affine = true)
{
    std::uniform_int_distribution<int> len(0, max_len), node(affine ? 0 : 1, c.rank());
    std::vector<int> w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = node(rng);
    return w;
}

inline std::vector<Integer> key(const MatrixZ& m) { return std::vector<Integer>(m.data(), m.data() + m.size()); }

// Breadth-first closure of a set of generators; returns elements with their BFS depth.
inline std::vector<std::pair<WeylElement, int>> bfs(const CartanData& c, const std::vector<WeylElement>& gens,
                                                    std::size_t cap = 100000, int max_depth = 1 << 20)
{
    std::vector<std::pair<WeylElement, int>> out{{WeylElement::identity(c), 0}};
    std::set<std::vector<Integer>> seen{key(out[0].first.matrix)};
    for (std::size_t k = 0; k < out.size() && out.size() < cap; ++k) {
        if (out[k].second >= max_depth) continue;
        for (const auto& g : gens) {
            WeylElement next = g * out[k].first;
            if (seen.insert(key(next.matrix)).second) out.push_back({next, out[k].second + 1});
        }
    }
    return out;
}

inline std::vector<WeylElement> finite_reflections(const CartanData& c, const std::vector<int>& nodes)
{
    std::vector<WeylElement> g;
    for (int i : nodes) g.push_back(simple_reflection(c, i));
    return g;
}

// #{positive real roots alpha + n delta sent to negative roots}, counted on a delta window.
inline std::size_t inversion_count(const CartanData& c, const WeylElement& w, Integer n_window = 40)
{
    std::size_t count = 0;
    const RootVector d = delta(c);
    for (const auto& a : c.finite_roots) {
        RootVector alpha = RootVector::Zero(c.size());
        alpha.tail(c.rank()) = a.tail(c.rank());
        bool pos = !is_negative(alpha);
        for (Integer n = pos ? 0 : 1; n <= n_window; ++n) {
            RootVector img = act(w, RootVector(alpha + n * d));
            if (is_negative(img)) ++count;
        }
    }
    return count;
}

inline bool in_h_minus(const ComplexQ& z) { return z.im > 0 || (z.im == 0 && z.re < 0); }

// Every representation with total dimension in [1, max_total] whose arrow
// entries run over F_p, filtered by `keep`.
template <typename Keep>
std::vector<Rep> all_reps(const CartanData& c, int p, int max_total, Keep keep)
{
    std::vector<Rep> out;
    const auto arrows = double_quiver_arrows(c);
    VectorZ dim = VectorZ::Zero(c.size());
    std::function<void(int, int)> dims = [&](int v, int left) {
        if (v == c.size()) {
            if (dim.sum() == 0) return;
            int entries = 0;
            for (const auto& a : arrows) entries += static_cast<int>(dim(a.src) * dim(a.dst));
            long long total = 1;
            for (int k = 0; k < entries; ++k) total *= p;
            for (long long code = 0; code < total; ++code) {
                Rep r;
                r.p = p;
                r.dim = dim;
                long long x = code;
                for (const auto& a : arrows) {
                    FpMatrix m(dim(a.dst), dim(a.src));
                    for (Eigen::Index i = 0; i < m.rows(); ++i)
                        for (Eigen::Index j = 0; j < m.cols(); ++j) {
                            m(i, j) = static_cast<int>(x % p);
                            x /= p;
                        }
                    r.arrows[a.key()] = m;
                }
                if (keep(r)) out.push_back(r);
            }
            return;
        }
        for (int d = 0; d <= left; ++d) {
            dim(v) = d;
            dims(v + 1, left - d);
        }
        dim(v) = 0;
    };
    dims(0, max_total);
    return out;
}

// Nilpotency via the radical series: M, JM, J^2 M, ... must reach zero by step dim M.
inline bool nilpotent_by_radical_series(const CartanData& c, const Rep& r)
{
    std::vector<FpMatrix> layer;
    for (int v = 0; v < c.size(); ++v) layer.push_back(FpMatrix::Identity(r.dim(v), r.dim(v)));
    const auto arrows = double_quiver_arrows(c);
    for (Integer step = 0; step < r.dim.sum(); ++step) {
        std::vector<FpMatrix> next;
        for (int v = 0; v < c.size(); ++v) next.push_back(FpMatrix::Zero(0, r.dim(v)));
        for (const auto& a : arrows) {
            FpMatrix img = layer[a.src] * arrow_matrix(r, a).transpose();
            FpMatrix stacked(next[a.dst].rows() + img.rows(), r.dim(a.dst));
            stacked << next[a.dst], img;
            next[a.dst] = rref_mod_p(stacked, r.p);
        }
        layer = next;
    }
    for (const auto& m : layer)
        if (m.rows() > 0) return false;
    return true;
}

inline bool subspace_within(const FpMatrix& small, const FpMatrix& big, int p)
{
    if (small.rows() == 0) return true;
    FpMatrix stacked(big.rows() + small.rows(), small.cols());
    if (big.rows() > 0) stacked.topRows(big.rows()) = big;
    stacked.bottomRows(small.rows()) = small;
    return rank_mod_p(stacked, p) == rank_mod_p(big, p);
}

inline bool submodule_within(const Submodule& small, const Submodule& big, int p)
{
    for (std::size_t v = 0; v < small.spaces.size(); ++v)
        if (!subspace_within(small.spaces[v], big.spaces[v], p)) return false;
    return true;
}

struct BruteHN {
    int count = 0;  // number of chains with the HN properties; must be 1
    std::vector<VectorZ> chain_dims;
    std::vector<Rational> slopes;
};

// Search every chain of submodules for one with semistable factors of strictly decreasing slope.
inline BruteHN brute_force_hn(const CartanData& c, const Rep& rep, const Coweight& theta)
{
    SlopeFunction mu(c, theta);
    auto subs = enumerate_submodules(c, rep);
    auto slope_of = [&](const VectorZ& d) { return mu(class_of_dimension(c, d)); };
    std::size_t bottom = 0, top = 0;
    for (std::size_t k = 0; k < subs.size(); ++k) {
        if (subs[k].dim.sum() == 0) bottom = k;
        if (subs[k].dim == rep.dim) top = k;
    }
    BruteHN out;
    std::vector<std::size_t> chain{bottom};
    std::vector<Rational> slopes;
    std::function<void()> extend = [&] {
        const Submodule& lo = subs[chain.back()];
        if (chain.back() == top) {
            if (++out.count == 1) {
                out.chain_dims.clear();
                for (std::size_t k = 1; k < chain.size(); ++k) out.chain_dims.push_back(subs[chain[k]].dim);
                out.slopes = slopes;
            }
            return;
        }
        for (std::size_t k = 0; k < subs.size(); ++k) {
            const Submodule& hi = subs[k];
            if (hi.dim.sum() <= lo.dim.sum() || !submodule_within(lo, hi, rep.p)) continue;
            Rational s = slope_of(VectorZ(hi.dim - lo.dim));
            if (!slopes.empty() && !(s < slopes.back())) continue;
            bool semistable = true;
            for (const auto& mid : subs) {
                if (mid.dim.sum() <= lo.dim.sum() || !submodule_within(lo, mid, rep.p) || !submodule_within(mid, hi, rep.p))
                    continue;
                if (slope_of(VectorZ(mid.dim - lo.dim)) > s) {
                    semistable = false;
                    break;
                }
            }
            if (!semistable) continue;
            chain.push_back(k);
            slopes.push_back(s);
            extend();
            chain.pop_back();
            slopes.pop_back();
        }
    };
    extend();
    return out;
}

// Stability functions via the generating classes of the heart: simples for J empty;
// otherwise the sheaves O_{C_i}(n), skyscrapers, and the simples of each component of I_f \ J.
inline bool generator_test(const CartanData& c, const CentralCharge& z, const std::vector<int>& J)
{
    if (J.empty()) {
        for (int i = 0; i < c.size(); ++i)
            if (!in_h_minus(evaluate(z, simple_class(c, i)))) return false;
        return true;
    }
    const RootVector d = delta(c);
    if (!in_h_minus(evaluate(z, d))) return false;
    // far enough out that a nonzero slope in n dominates every constant term
    Rational spread = 1, step = 0;
    for (const Rational& x : {level(c, z.omega), level(c, z.theta)})
        if (x != 0 && (step == 0 || abs(x) < step)) step = abs(x);
    for (int i = 0; i < c.size(); ++i) spread += abs(z.omega(i)) + abs(z.theta(i));
    const int window = step == 0 ? 2 : static_cast<int>(to_double(spread / step)) + 3;
    for (int i : J)
        for (int n = -window; n <= window; ++n)
            if (!in_h_minus(evaluate(z, RootVector((n + 1) * d + simple_root(c, i))))) return false;
    for (const auto& comp : connected_components(c, complement(c, J))) {
        for (int i : comp)
            if (!in_h_minus(evaluate(z, RootVector(-simple_root(c, i))))) return false;
        if (!in_h_minus(evaluate(z, RootVector(2 * d - alpha_J(c, comp))))) return false;
    }
    return true;
}

inline CentralCharge random_charge(const CartanData& c, const std::vector<int>& J, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coin(0, 3), small(-1, 3);
    CentralCharge z;
    int pick = coin(rng);
    if (pick == 0) {
        z.omega = rand_coweight(c, rng);
    } else if (pick == 1) {
        z.omega = normalize_to_dominant(c, rand_coweight_with_level(c, rng, 1)).theta;
    } else {
        // pick 3 concentrates lam on J so that every J sees candidates
        const bool on_J = pick == 3;
        VectorQ lam(c.rank());
        for (int i = 0; i < c.rank(); ++i) {
            bool in_J = std::find(J.begin(), J.end(), i + 1) != J.end();
            lam(i) = on_J && !in_J && coin(rng) != 0 ? Rational(0) : Rational(small(rng)) / Rational(1 + coin(rng) % 3);
        }
        z.omega = embed(c, FiniteCoweight(lam));
    }
    switch (coin(rng)) {
    case 0: z.theta = rand_coweight(c, rng); break;
    case 1: z.theta = rand_coweight_with_level(c, rng, 0); break;
    default: {
        Coweight t = normalize_to_DJ(c, rand_coweight_with_level(c, rng, 1), J).theta;
        z.theta = coin(rng) == 0 ? t : Coweight(t + rand_coweight(c, rng, 1) / Rational(7));
    }
    }
    return z;
}

// (w lam, alpha_j) = (lam, w^{-1} alpha_j) for w in W_f
inline FiniteCoweight act_finite(const CartanData& c, const WeylElement& w, const FiniteCoweight& lam)
{
    VectorQ out(c.rank());
    for (int j = 1; j <= c.rank(); ++j) {
        RootVector v = act(w.inv(), simple_root(c, j));
        Rational s = 0;
        for (int i = 1; i <= c.rank(); ++i) s += lam(i - 1) * Rational(v(i));
        out(j - 1) = s;
    }
    return FiniteCoweight(out);
}

inline LoopElement random_loop(const ChevalleyBasis& cb, std::mt19937_64& rng, int terms = 3)
{
    std::uniform_int_distribution<int> basis(0, cb.size() - 1), k(-2, 2), l(0, 2), coef(-3, 3), kind(0, 5);
    LoopElement x;
    for (int t = 0; t < terms; ++t) {
        switch (kind(rng)) {
        case 0: x += LoopElement::central(l(rng), coef(rng)); break;
        case 1: {
            int kk = k(rng);
            x += LoopElement::central_kl(kk == 0 ? 1 : kk, 1 + l(rng), coef(rng));
            break;
        }
        default: x += LoopElement::monomial(basis(rng), k(rng), l(rng), coef(rng));
        }
    }
    return x;
}

inline LoopElement homogeneous_loop(const CartanData& c, const ChevalleyBasis& cb, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> basis(0, cb.size() - 1), k(-2, 2), l(0, 2), coef(1, 3);
    int p = basis(rng), kk = k(rng), ll = l(rng);
    LoopElement x = LoopElement::monomial(p, kk, ll, coef(rng));
    // add another vector of the same weight when the weight is zero
    if (cb.basis[p].cartan) x += LoopElement::monomial(cb.cartan(1 + static_cast<int>(rng() % c.rank())), kk, ll, coef(rng));
    return x;
}

// Multisets of at most max_parts generators (each weight space contributes dim distinct
// generators) with total t-degree at most t_max, counted by brute force.
inline PBWTable brute_pbw(const CharacterTable& gens, int size, int t_max, int max_parts)
{
    std::vector<std::pair<std::vector<Integer>, int>> list;
    for (const auto& [k, d] : gens)
        for (Integer m = 0; m < d; ++m) list.push_back(k);
    PBWTable out;
    std::vector<Integer> w(static_cast<std::size_t>(size), 0);
    std::function<void(std::size_t, int, int)> go = [&](std::size_t from, int t, int parts) {
        out[{w, t, parts}] += 1;
        if (parts == max_parts) return;
        for (std::size_t g = from; g < list.size(); ++g) {
            if (t + list[g].second > t_max) continue;
            for (int i = 0; i < size; ++i) w[i] += list[g].first[i];
            go(g, t + list[g].second, parts + 1);
            for (int i = 0; i < size; ++i) w[i] -= list[g].first[i];
        }
    };
    go(0, 0, 0);
    return out;
}

}  // namespace heartlab::testing
