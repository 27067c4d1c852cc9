#include "heartlab/preproj.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace heartlab {

int mod_p(long long x, int p)
{
    long long r = x % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

namespace {

int inv_mod(int a, int p)
{
    int r = 1;
    for (int k = 0; k < p - 2; ++k) r = r * a % p;
    return r;
}

FpMatrix mul(const FpMatrix& a, const FpMatrix& b, int p)
{
    FpMatrix out = a * b;
    return out.unaryExpr([p](int x) { return mod_p(x, p); });
}

// Reduce x against an RREF basis; pivot coordinates become zero.
void reduce(Eigen::Ref<Eigen::VectorXi> x, const FpMatrix& basis, int p)
{
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
        Eigen::Index piv = 0;
        while (basis(r, piv) == 0) ++piv;
        int f = x(piv);
        if (f == 0) continue;
        for (Eigen::Index j = 0; j < x.size(); ++j) x(j) = mod_p(x(j) - static_cast<long long>(f) * basis(r, j), p);
    }
}

std::vector<Eigen::Index> pivots(const FpMatrix& basis)
{
    std::vector<Eigen::Index> out;
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
        Eigen::Index piv = 0;
        while (basis(r, piv) == 0) ++piv;
        out.push_back(piv);
    }
    return out;
}

bool maps_into(const FpMatrix& m, const FpMatrix& src, const FpMatrix& dst, int p)
{
    for (Eigen::Index r = 0; r < src.rows(); ++r) {
        Eigen::VectorXi y = (m * src.row(r).transpose()).unaryExpr([p](int v) { return mod_p(v, p); });
        reduce(y, dst, p);
        if (!y.isZero()) return false;
    }
    return true;
}

}  // namespace

FpMatrix rref_mod_p(FpMatrix m, int p)
{
    m = m.unaryExpr([p](int x) { return mod_p(x, p); });
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.row(row).swap(m.row(piv));
        int s = inv_mod(m(row, col), p);
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * s % p;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            int f = m(r, col);
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) = mod_p(m(r, j) - f * m(row, j), p);
        }
        ++row;
    }
    return m.topRows(row);
}

int rank_mod_p(FpMatrix m, int p) { return static_cast<int>(rref_mod_p(std::move(m), p).rows()); }

std::string Arrow::key() const
{
    int lo = std::min(src, dst), hi = std::max(src, dst);
    return "e" + std::to_string(lo) + std::to_string(hi) + (star ? "*" : "");
}

std::vector<Arrow> double_quiver_arrows(const CartanData& c)
{
    if (c.size() > 10) throw std::invalid_argument("arrow keys need single-digit vertex labels");
    std::vector<Arrow> out;
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j) {
            if (c.affine(i, j) == 0) continue;
            if (c.affine(i, j) != -1) throw std::invalid_argument("multiple edges are not supported for representations");
            out.push_back({i, j, false});
            out.push_back({j, i, true});
        }
    return out;
}

FpMatrix arrow_matrix(const Rep& rep, const Arrow& a)
{
    auto it = rep.arrows.find(a.key());
    if (it != rep.arrows.end()) return it->second;
    return FpMatrix::Zero(rep.dim(a.dst), rep.dim(a.src));
}

bool satisfies_relation(const CartanData& c, const Rep& rep)
{
    // At each vertex v: sum over e in Omega out of v of e* e  minus  sum over e into v of e e*.
    std::vector<FpMatrix> acc;
    for (int v = 0; v < c.size(); ++v) acc.push_back(FpMatrix::Zero(rep.dim(v), rep.dim(v)));
    for (const auto& a : double_quiver_arrows(c)) {
        if (a.star) continue;
        Arrow back{a.dst, a.src, true};
        FpMatrix e = arrow_matrix(rep, a), es = arrow_matrix(rep, back);
        acc[a.src] += es * e;
        acc[a.dst] -= e * es;
    }
    for (auto& m : acc)
        if (!m.unaryExpr([&](int x) { return mod_p(x, rep.p); }).isZero()) return false;
    return true;
}

bool is_nilpotent(const CartanData& c, const Rep& rep)
{
    const Integer n = rep.dim.sum();
    if (n == 0) return true;
    auto arrows = double_quiver_arrows(c);
    std::function<bool(int, const FpMatrix&, Integer)> all_zero = [&](int v, const FpMatrix& prod, Integer len) {
        if (prod.isZero()) return true;
        if (len == n) return false;
        for (const auto& a : arrows) {
            if (a.src != v) continue;
            if (!all_zero(a.dst, mul(arrow_matrix(rep, a), prod, rep.p), len + 1)) return false;
        }
        return true;
    };
    for (int v = 0; v < c.size(); ++v)
        if (rep.dim(v) > 0 && !all_zero(v, FpMatrix::Identity(rep.dim(v), rep.dim(v)), 0)) return false;
    return true;
}

Validation validate(const CartanData& c, const Rep& rep)
{
    if (rep.p != 2 && rep.p != 3 && rep.p != 5) return {false, "p must be 2, 3 or 5"};
    if (rep.dim.size() != c.size()) return {false, "dimension vector has wrong length"};
    for (Eigen::Index i = 0; i < rep.dim.size(); ++i)
        if (rep.dim(i) < 0) return {false, "negative dimension"};
    std::vector<Arrow> arrows;
    try {
        arrows = double_quiver_arrows(c);
    } catch (const std::invalid_argument& e) {
        return {false, e.what()};
    }
    for (const auto& [k, m] : rep.arrows) {
        auto it = std::find_if(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.key() == k; });
        if (it == arrows.end()) return {false, "unknown arrow " + k};
        if (m.rows() != rep.dim(it->dst) || m.cols() != rep.dim(it->src)) return {false, "arrow " + k + " has wrong shape"};
        for (Eigen::Index i = 0; i < m.size(); ++i)
            if (m.data()[i] < 0 || m.data()[i] >= rep.p) return {false, "arrow " + k + " has entries outside [0,p)"};
    }
    if (!satisfies_relation(c, rep)) return {false, "preprojective relation fails"};
    if (!is_nilpotent(c, rep)) return {false, "representation is not nilpotent"};
    return {};
}

bool Submodule::operator==(const Submodule& o) const
{
    if (dim != o.dim) return false;
    for (std::size_t v = 0; v < spaces.size(); ++v)
        if (spaces[v] != o.spaces[v]) return false;
    return true;
}

std::vector<FpMatrix> all_subspaces(int p, int d)
{
    std::vector<FpMatrix> out;
    for (int k = 0; k <= d; ++k) {
        // choose pivot columns
        std::vector<int> piv(k);
        std::function<void(int, int)> choose = [&](int r, int start) {
            if (r == k) {
                std::vector<std::pair<int, int>> free;
                for (int i = 0; i < k; ++i)
                    for (int j = piv[i] + 1; j < d; ++j)
                        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free.emplace_back(i, j);
                long long total = 1;
                for (std::size_t f = 0; f < free.size(); ++f) total *= p;
                for (long long code = 0; code < total; ++code) {
                    FpMatrix m = FpMatrix::Zero(k, d);
                    for (int i = 0; i < k; ++i) m(i, piv[i]) = 1;
                    long long x = code;
                    for (auto [i, j] : free) {
                        m(i, j) = static_cast<int>(x % p);
                        x /= p;
                    }
                    out.push_back(m);
                }
                return;
            }
            for (int col = start; col < d; ++col) {
                piv[r] = col;
                choose(r + 1, col + 1);
            }
        };
        choose(0, 0);
    }
    return out;
}

std::vector<Submodule> enumerate_submodules(const CartanData& c, const Rep& rep)
{
    if (rep.dim.sum() > kMaxSubmoduleDim) throw std::length_error("submodule enumeration is capped at total dimension 6");
    const int n = c.size();
    auto arrows = double_quiver_arrows(c);
    std::vector<std::vector<FpMatrix>> options(n);
    for (int v = 0; v < n; ++v) options[v] = all_subspaces(rep.p, static_cast<int>(rep.dim(v)));
    std::vector<FpMatrix> arrow_m;
    for (const auto& a : arrows) arrow_m.push_back(arrow_matrix(rep, a));

    std::vector<Submodule> out;
    std::vector<FpMatrix> chosen(n);
    std::function<void(int)> pick = [&](int v) {
        if (v == n) {
            Submodule s;
            s.spaces = chosen;
            s.dim = VectorZ(n);
            for (int u = 0; u < n; ++u) s.dim(u) = chosen[u].rows();
            out.push_back(s);
            return;
        }
        for (const auto& space : options[v]) {
            chosen[v] = space;
            bool ok = true;
            for (std::size_t k = 0; k < arrows.size() && ok; ++k) {
                const Arrow& a = arrows[k];
                if (std::max(a.src, a.dst) != v) continue;
                ok = maps_into(arrow_m[k], chosen[a.src], chosen[a.dst], rep.p);
            }
            if (ok) pick(v + 1);
        }
    };
    pick(0);
    return out;
}

bool contains(const Submodule& big, const Submodule& small, int p)
{
    for (std::size_t v = 0; v < big.spaces.size(); ++v) {
        for (Eigen::Index r = 0; r < small.spaces[v].rows(); ++r) {
            Eigen::VectorXi x = small.spaces[v].row(r).transpose();
            reduce(x, big.spaces[v], p);
            if (!x.isZero()) return false;
        }
    }
    return true;
}

Rep quotient(const CartanData& c, const Rep& rep, const Submodule& sub)
{
    const int n = c.size();
    Rep q;
    q.p = rep.p;
    q.dim = rep.dim - sub.dim;
    std::vector<std::vector<Eigen::Index>> keep(n);
    for (int v = 0; v < n; ++v) {
        auto piv = pivots(sub.spaces[v]);
        for (Eigen::Index j = 0; j < rep.dim(v); ++j)
            if (std::find(piv.begin(), piv.end(), j) == piv.end()) keep[v].push_back(j);
    }
    for (const auto& a : double_quiver_arrows(c)) {
        FpMatrix m = arrow_matrix(rep, a);
        FpMatrix out = FpMatrix::Zero(q.dim(a.dst), q.dim(a.src));
        for (std::size_t jj = 0; jj < keep[a.src].size(); ++jj) {
            Eigen::VectorXi y = m.col(keep[a.src][jj]);
            reduce(y, sub.spaces[a.dst], rep.p);
            for (std::size_t ii = 0; ii < keep[a.dst].size(); ++ii) out(ii, jj) = y(keep[a.dst][ii]);
        }
        if (out.size() > 0) q.arrows[a.key()] = out;
    }
    return q;
}

bool is_semistable(const CartanData& c, const Rep& rep, const Coweight& theta)
{
    if (rep.dim.sum() == 0) return true;
    SlopeFunction mu(c, theta);
    Rational top = mu(class_of_dimension(c, rep.dim));
    for (const auto& s : enumerate_submodules(c, rep)) {
        if (s.dim.sum() == 0) continue;
        if (mu(class_of_dimension(c, s.dim)) > top) return false;
    }
    return true;
}

HNFiltration hn_filtration(const CartanData& c, const Rep& rep, const Coweight& theta)
{
    SlopeFunction mu(c, theta);
    HNFiltration hn;
    Rep cur = rep;
    VectorZ acc = VectorZ::Zero(c.size());
    while (cur.dim.sum() > 0) {
        const Submodule* best = nullptr;
        Rational best_slope;
        auto subs = enumerate_submodules(c, cur);
        for (const auto& s : subs) {
            if (s.dim.sum() == 0) continue;
            Rational m = mu(class_of_dimension(c, s.dim));
            bool better = best == nullptr || m > best_slope
                          || (m == best_slope && s.dim.sum() > best->dim.sum())
                          || (m == best_slope && s.dim.sum() == best->dim.sum()
                              && std::lexicographical_compare(s.dim.data(), s.dim.data() + s.dim.size(),
                                                              best->dim.data(), best->dim.data() + best->dim.size()));
            if (better) {
                best = &s;
                best_slope = m;
            }
        }
        hn.factor_dims.push_back(best->dim);
        hn.slopes.push_back(best_slope);
        acc += best->dim;
        hn.chain_dims.push_back(acc);
        cur = quotient(c, cur, *best);
    }
    return hn;
}

bool SlopeInterval::contains(const Rational& x) const
{
    if (lower.value) {
        if (x < *lower.value || (x == *lower.value && !lower.closed)) return false;
    }
    if (upper.value) {
        if (x > *upper.value || (x == *upper.value && !upper.closed)) return false;
    }
    return true;
}

bool stratum_membership(const CartanData& c, const Rep& rep, const Coweight& theta, const SlopeInterval& kappa)
{
    for (const auto& s : hn_filtration(c, rep, theta).slopes)
        if (!kappa.contains(s)) return false;
    return true;
}

}  // namespace heartlab
