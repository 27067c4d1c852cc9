#include "heartlab/borel.hpp"

#include <algorithm>
#include <sstream>

namespace heartlab {

namespace {

std::vector<Integer> key(const VectorZ& v) { return std::vector<Integer>(v.data(), v.data() + v.size()); }

// support inside I_f \ J
bool in_complement_system(const std::vector<int>& J, const RootVector& a)
{
    for (int i : J)
        if (a(i) != 0) return false;
    return true;
}

bool is_positive(const RootVector& a) { return !is_zero(a) && all_nonnegative(a); }

enum class Branch { None, NegativeLevi, LeviBelow, Outside };

Branch classify(const CartanData& c, const std::vector<int>& J, const AffineRoot& b)
{
    if (b.alpha.size() != c.size() || b.alpha(0) != 0) return Branch::None;
    if (is_zero(b.alpha)) return b.n != 0 ? Branch::LeviBelow : Branch::None;
    if (!c.is_finite_root(b.alpha)) return Branch::None;
    if (in_complement_system(J, b.alpha)) return is_positive(b.alpha) ? Branch::LeviBelow : Branch::NegativeLevi;
    return is_positive(b.alpha) ? Branch::Outside : Branch::None;
}

}  // namespace

std::string to_string(const AffineRoot& b)
{
    std::ostringstream os;
    os << "(";
    for (Eigen::Index i = 1; i < b.alpha.size(); ++i) os << (i > 1 ? "," : "") << b.alpha(i);
    os << "; " << b.n << ")";
    return os.str();
}

bool in_Delta_J_k(const CartanData& c, const std::vector<int>& J, const FiniteCoweight& lam, Integer k,
                  const AffineRoot& beta)
{
    switch (classify(c, J, beta)) {
    case Branch::NegativeLevi: return beta.n <= 0;
    case Branch::LeviBelow: return beta.n < 0;
    case Branch::Outside: return Rational(beta.n) < Rational(2 * k) * pairing(c, lam, beta.alpha);
    case Branch::None: return false;
    }
    return false;
}

bool in_Delta_J(const CartanData& c, const std::vector<int>& J, const AffineRoot& beta)
{
    switch (classify(c, J, beta)) {
    case Branch::NegativeLevi: return beta.n <= 0;
    case Branch::LeviBelow: return beta.n < 0;
    case Branch::Outside: return true;
    case Branch::None: return false;
    }
    return false;
}

std::vector<AffineRoot> window_roots(const CartanData& c, Integer n_max)
{
    std::vector<AffineRoot> out;
    for (Integer n = -n_max; n <= n_max; ++n) {
        for (const auto& a : c.finite_roots) out.push_back({a, n});
        if (n != 0) out.push_back({RootVector::Zero(c.size()), n});
    }
    return out;
}

ChainReport check_chain_and_union(const CartanData& c, const std::vector<int>& J, const FiniteCoweight& lam,
                                  Integer n_max, Integer k_max)
{
    if (!is_piJ_ample(c, lam, J)) throw std::invalid_argument("coweight is not ample for J");
    ChainReport rep;
    Rational min_pair = 0;
    for (const auto& a : c.positive_roots) {
        Rational p = pairing(c, lam, a);
        if (p > 0 && (min_pair == 0 || p < min_pair)) min_pair = p;
    }
    for (const auto& b : window_roots(c, n_max)) {
        for (Integer k = 0; k <= k_max; ++k) {
            bool here = in_Delta_J_k(c, J, lam, k, b);
            if (here && !in_Delta_J(c, J, b)) {
                rep.contained_ok = false;
                rep.failures.push_back("not contained: k=" + std::to_string(k) + " " + to_string(b));
            }
            if (k < k_max && here && !in_Delta_J_k(c, J, lam, k + 1, b)) {
                rep.chain_ok = false;
                rep.failures.push_back("chain breaks at k=" + std::to_string(k) + " " + to_string(b));
            }
        }
        if (!in_Delta_J(c, J, b)) continue;
        // n < 2k (lam, alpha) holds once k exceeds n / (2 min_pair)
        Integer bound = 1;
        if (min_pair > 0) bound = floor_to_integer(Rational(std::abs(b.n) + 1) / (2 * min_pair)) + 2;
        Integer witness = -1;
        for (Integer k = 0; k <= bound && witness < 0; ++k)
            if (in_Delta_J_k(c, J, lam, k, b)) witness = k;
        if (witness < 0) {
            rep.union_ok = false;
            rep.failures.push_back("no witness for " + to_string(b));
        } else {
            rep.witnesses.emplace_back(b, witness);
        }
    }
    return rep;
}

PositivityReport positivity_axioms(const CartanData& c, const std::vector<int>& J, Integer n_max)
{
    PositivityReport rep;
    auto roots = window_roots(c, n_max);
    std::vector<AffineRoot> pos;
    for (const auto& b : roots) {
        bool in = in_Delta_J(c, J, b);
        bool neg = in_Delta_J(c, J, AffineRoot{RootVector(-b.alpha), -b.n});
        if (in == neg) {
            rep.partition_ok = false;
            rep.failures.push_back("partition fails at " + to_string(b));
        }
        if (in) pos.push_back(b);
    }
    for (const auto& x : pos)
        for (const auto& y : pos) {
            AffineRoot s{RootVector(x.alpha + y.alpha), x.n + y.n};
            if (std::abs(s.n) > n_max) continue;
            bool root = is_zero(s.alpha) ? s.n != 0 : c.is_finite_root(s.alpha);
            if (root && !in_Delta_J(c, J, s)) {
                rep.closure_ok = false;
                rep.failures.push_back("closure fails: " + to_string(x) + " + " + to_string(y));
            }
        }
    return rep;
}

CharacterTable character_from_roots(const CartanData& c, const std::vector<int>& J, const FiniteCoweight& lam,
                                    std::optional<Integer> k, Integer n_max, int t_max)
{
    CharacterTable t;
    for (const auto& b : window_roots(c, n_max)) {
        bool in = k ? in_Delta_J_k(c, J, lam, *k, b) : in_Delta_J(c, J, b);
        if (!in) continue;
        Integer mult = is_zero(b.alpha) ? c.rank() : 1;
        for (int l = 0; l <= t_max; ++l) t[{key(b.in_Y(c)), l}] += mult;
    }
    for (Integer n = -n_max; n <= -1; ++n)
        for (int l = 1; l <= t_max; ++l) t[{key(RootVector(n * delta(c))), l}] += 1;
    return t;
}

CharacterTable character_from_decomposition(const CartanData& c, const std::vector<int>& J, Integer n_max, int t_max)
{
    CharacterTable t;
    const Integer e = c.rank();
    const Integer levi_rank = static_cast<Integer>(complement(c, J).size());
    auto add = [&](const RootVector& w, Integer d) {
        for (int l = 0; l <= t_max; ++l) t[{key(w), l}] += d;
    };
    for (Integer n = -n_max; n <= n_max; ++n) {
        for (const auto& a : c.positive_roots) {
            bool levi = in_complement_system(J, a);
            // g_alpha[s^{+-1}, t] for alpha positive outside the Levi
            if (!levi) add(RootVector(a + n * delta(c)), 1);
            // n^-_{Levi}: negative Levi roots at s^0
            if (levi && n == 0) add(RootVector(-a), 1);
            // s^{-1} l_{Levi}[s^{-1}]: Levi roots of both signs
            if (levi && n < 0) {
                add(RootVector(a + n * delta(c)), 1);
                add(RootVector(-a + n * delta(c)), 1);
            }
        }
        if (n < 0) {
            RootVector w = n * delta(c);
            add(w, levi_rank);      // s^{-1} h_{Levi}[s^{-1}]
            add(w, e);              // s^{-1} h[s^{-1}]
            add(w, -levi_rank);     // overlap counted once
            for (int l = 1; l <= t_max; ++l) t[{key(w), l}] += 1;  // K_-
        }
    }
    std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
    return t;
}

CharacterComparison character_n_ell_J(const CartanData& c, const std::vector<int>& J, const FiniteCoweight& lam,
                                      Integer n_max, int t_max)
{
    CharacterComparison out;
    out.from_roots = character_from_roots(c, J, lam, std::nullopt, n_max, t_max);
    out.from_decomposition = character_from_decomposition(c, J, n_max, t_max);
    out.agree = out.from_roots == out.from_decomposition;
    return out;
}

PBWTable pbw_character(const CartanData& c, const std::vector<int>& J, const FiniteCoweight& lam,
                       std::optional<Integer> k, Integer n_max, int t_max, int max_parts)
{
    if (max_parts < 0 || max_parts > 6) throw std::invalid_argument("PBW degree cap must lie in [0, 6]");
    CharacterTable gens = character_from_roots(c, J, lam, k, n_max, t_max);
    using State = std::tuple<std::vector<Integer>, int, int>;
    std::map<State, Integer> states;
    states[{std::vector<Integer>(c.size(), 0), 0, 0}] = 1;
    auto binom = [](Integer n, Integer r) {
        Integer out = 1;
        for (Integer i = 1; i <= r; ++i) out = out * (n - r + i) / i;
        return out;
    };
    for (const auto& [gk, dim] : gens) {
        const auto& [w, l] = gk;
        std::map<State, Integer> next;
        for (const auto& [st, count] : states) {
            const auto& [sw, sl, sp] = st;
            for (int m = 0; sp + m <= max_parts && sl + m * l <= t_max; ++m) {
                std::vector<Integer> nw = sw;
                for (std::size_t i = 0; i < nw.size(); ++i) nw[i] += m * w[i];
                next[{nw, sl + m * l, sp + m}] += count * binom(dim + m - 1, m);
            }
        }
        states = std::move(next);
    }
    return states;
}

std::string character_csv(const CartanData& c, const CharacterTable& t)
{
    std::ostringstream os;
    for (int i = 0; i < c.size(); ++i) os << "y" << i << ",";
    os << "t_degree,dim\n";
    for (const auto& [k, d] : t) {
        for (auto v : k.first) os << v << ",";
        os << k.second << "," << d << "\n";
    }
    return os.str();
}

}  // namespace heartlab
