#include "heartlab/cartan.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace heartlab {

namespace {

std::vector<Integer> key(const VectorZ& v) { return std::vector<Integer>(v.data(), v.data() + v.size()); }

MatrixZ finite_cartan(const DynkinType& t)
{
    const int n = t.rank;
    MatrixZ a = 2 * MatrixZ::Identity(n, n);
    auto edge = [&](int i, int j) {
        a(i - 1, j - 1) = -1;
        a(j - 1, i - 1) = -1;
    };
    switch (t.family) {
    case Family::A:
        for (int i = 1; i < n; ++i) edge(i, i + 1);
        break;
    case Family::D:
        for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
        edge(n - 2, n);
        break;
    case Family::E:
        edge(1, 3);
        edge(2, 4);
        for (int i = 3; i < n; ++i) edge(i, i + 1);
        break;
    }
    return a;
}

std::vector<int> longest_element_kappa(const MatrixZ& a)
{
    const int n = static_cast<int>(a.rows());
    MatrixZ w = MatrixZ::Identity(n, n);
    for (;;) {
        int found = -1;
        for (int i = 0; i < n && found < 0; ++i)
            if (all_nonnegative(w.col(i))) found = i;
        if (found < 0) break;
        MatrixZ s = MatrixZ::Identity(n, n);
        s.row(found) -= a.row(found);
        w = w * s;
    }
    std::vector<int> kappa(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        int j = -1;
        for (int r = 0; r < n; ++r)
            if (w(r, i) != 0) {
                if (w(r, i) != -1 || j >= 0) throw std::logic_error("w0 does not permute simple roots");
                j = r;
            }
        kappa[i + 1] = j + 1;
    }
    return kappa;
}

std::vector<std::vector<int>> diagram_automorphisms(const MatrixZ& a)
{
    const int n = static_cast<int>(a.rows());
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> extend = [&](int i) {
        if (i == n) {
            out.push_back(perm);
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k)
                ok = a(i, k) == a(j, perm[k]) && a(k, i) == a(perm[k], j);
            if (!ok) continue;
            used[j] = true;
            perm[i] = j;
            extend(i + 1);
            used[j] = false;
        }
    };
    extend(0);
    return out;
}

}  // namespace

std::string DynkinType::name() const
{
    const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
    return std::string(1, f) + std::to_string(rank);
}

DynkinType parse_dynkin(std::string_view text)
{
    if (text.size() < 2) throw std::invalid_argument("bad Dynkin type '" + std::string(text) + "'");
    DynkinType t;
    switch (text[0]) {
    case 'A': case 'a': t.family = Family::A; break;
    case 'D': case 'd': t.family = Family::D; break;
    case 'E': case 'e': t.family = Family::E; break;
    default: throw std::invalid_argument("unknown Dynkin family '" + std::string(text) + "'");
    }
    std::string digits(text.substr(1));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 3)
        throw std::invalid_argument("bad Dynkin rank '" + std::string(text) + "'");
    t.rank = std::stoi(digits);
    bool ok = (t.family == Family::A && t.rank >= 1) || (t.family == Family::D && t.rank >= 4)
              || (t.family == Family::E && t.rank >= 6 && t.rank <= 8);
    if (!ok) throw std::invalid_argument("unsupported Dynkin type '" + std::string(text) + "'");
    return t;
}

std::vector<VectorZ> positive_roots_by_saturation(const MatrixZ& a)
{
    const int n = static_cast<int>(a.rows());
    std::vector<VectorZ> roots;
    std::set<std::vector<Integer>> seen;
    for (int i = 0; i < n; ++i) {
        VectorZ v = VectorZ::Zero(n);
        v(i) = 1;
        roots.push_back(v);
        seen.insert(key(v));
    }
    // Simply laced: beta + alpha_i is a root iff <alpha_i^vee, beta> < 0 (beta != alpha_i).
    for (std::size_t k = 0; k < roots.size(); ++k) {
        for (int i = 0; i < n; ++i) {
            Integer pair = a.row(i).dot(roots[k]);
            if (pair >= 0) continue;
            VectorZ next = roots[k];
            next(i) += 1;
            if (seen.insert(key(next)).second) roots.push_back(next);
        }
    }
    return roots;
}

bool CartanData::is_finite_root(const VectorZ& v) const { return root_index.count(key(v)) > 0; }

CartanData build_cartan(const DynkinType& type)
{
    CartanData c;
    c.type = type;
    const int e = type.rank;
    MatrixZ af = finite_cartan(type);
    std::vector<VectorZ> pos = positive_roots_by_saturation(af);
    VectorZ phi = pos.front();
    for (const auto& r : pos)
        if (r.sum() > phi.sum()) phi = r;

    c.affine = MatrixZ::Zero(e + 1, e + 1);
    c.affine.bottomRightCorner(e, e) = af;
    c.affine(0, 0) = 2;
    for (int j = 1; j <= e; ++j) {
        Integer pairing = af.row(j - 1).dot(phi);  // <alpha_j^vee, phi>
        c.affine(0, j) = -pairing;
        c.affine(j, 0) = -pairing;
    }
    c.marks = VectorZ::Zero(e + 1);
    c.marks(0) = 1;
    c.marks.tail(e) = phi;
    if (!is_zero(c.affine * c.marks)) throw std::logic_error("marks are not in the kernel of the Cartan matrix");

    for (const auto& r : pos) {
        VectorZ v = VectorZ::Zero(e + 1);
        v.tail(e) = r;
        c.positive_roots.push_back(v);
    }
    std::sort(c.positive_roots.begin(), c.positive_roots.end(), [](const VectorZ& x, const VectorZ& y) {
        if (x.sum() != y.sum()) return x.sum() < y.sum();
        return key(x) > key(y);
    });
    for (const auto& r : c.positive_roots) c.finite_roots.push_back(r);
    for (const auto& r : c.positive_roots) c.finite_roots.push_back(-r);
    for (const auto& r : c.finite_roots) c.root_index.insert(key(r));
    c.highest_root = VectorZ::Zero(e + 1);
    c.highest_root.tail(e) = phi;

    c.kappa = longest_element_kappa(af);
    c.gamma = diagram_automorphisms(c.affine);
    return c;
}

std::vector<int> finite_nodes(const CartanData& c)
{
    std::vector<int> out;
    for (int i = 1; i <= c.rank(); ++i) out.push_back(i);
    return out;
}

std::vector<int> complement(const CartanData& c, const std::vector<int>& J)
{
    std::vector<int> out;
    for (int i = 1; i <= c.rank(); ++i)
        if (std::find(J.begin(), J.end(), i) == J.end()) out.push_back(i);
    return out;
}

std::vector<std::vector<int>> connected_components(const CartanData& c, const std::vector<int>& nodes)
{
    std::vector<std::vector<int>> out;
    std::vector<int> left(nodes.begin(), nodes.end());
    std::sort(left.begin(), left.end());
    while (!left.empty()) {
        std::vector<int> comp{left.front()};
        left.erase(left.begin());
        for (std::size_t k = 0; k < comp.size(); ++k) {
            for (auto it = left.begin(); it != left.end();) {
                if (c.affine(comp[k], *it) != 0) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

std::vector<std::vector<int>> all_subsets(const CartanData& c)
{
    std::vector<std::vector<int>> out;
    const int e = c.rank();
    for (unsigned mask = 0; mask < (1u << e); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < e; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

VectorZ highest_root_of(const CartanData& c, const std::vector<int>& component)
{
    if (component.empty()) throw std::invalid_argument("empty component");
    if (connected_components(c, component).size() != 1) throw std::invalid_argument("subset is not connected");
    VectorZ best;
    for (const auto& r : c.positive_roots) {
        bool inside = true;
        for (int i = 1; i <= c.rank() && inside; ++i)
            if (r(i) != 0 && std::find(component.begin(), component.end(), i) == component.end()) inside = false;
        if (inside && (best.size() == 0 || r.sum() > best.sum())) best = r;
    }
    return best;
}

VectorZ alpha_J(const CartanData& c, const std::vector<int>& component)
{
    return c.marks - highest_root_of(c, component);
}

}  // namespace heartlab
