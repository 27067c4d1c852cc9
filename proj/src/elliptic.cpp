#include "heartlab/elliptic.hpp"

#include <algorithm>
#include <stdexcept>

namespace heartlab {

namespace {

std::string root_name(const VectorZ& w)
{
    std::string s;
    for (Eigen::Index i = 1; i < w.size(); ++i) {
        if (w(i) == 0) continue;
        if (w(i) < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (std::abs(w(i)) != 1) s += std::to_string(std::abs(w(i)));
        s += "alpha" + std::to_string(i);
    }
    return s;
}

MatrixZ as_matrix(const ChevalleyBasis::Element& e, int n)
{
    MatrixZ m = MatrixZ::Zero(n + 1, n + 1);
    if (e.cartan) {
        m(e.i - 1, e.i - 1) = 1;
        m(e.i, e.i) = -1;
    } else {
        m(e.a - 1, e.b - 1) = 1;
    }
    return m;
}

void check_caps(int k, int l)
{
    if (k < -kMaxSDegree || k > kMaxSDegree || l < 0 || l > kMaxTDegree)
        throw std::out_of_range("loop degree outside |k| <= 5, 0 <= l <= 5");
}

}  // namespace

int ChevalleyBasis::root_vector(const VectorZ& weight) const
{
    for (int p = 0; p < size(); ++p)
        if (!basis[p].cartan && basis[p].weight == weight) return p;
    throw std::invalid_argument("no root vector of that weight");
}

int ChevalleyBasis::cartan(int i) const
{
    for (int p = 0; p < size(); ++p)
        if (basis[p].cartan && basis[p].i == i) return p;
    throw std::invalid_argument("no Cartan element H" + std::to_string(i));
}

int ChevalleyBasis::find(const std::string& name) const
{
    for (int p = 0; p < size(); ++p)
        if (basis[p].name == name) return p;
    throw std::invalid_argument("unknown basis element '" + name + "'");
}

ChevalleyBasis chevalley_basis(const CartanData& c)
{
    if (c.type.family != Family::A) throw std::invalid_argument("the loop algebra is implemented for type A only");
    ChevalleyBasis cb;
    const int n = c.rank();
    cb.n = n;
    for (int a = 1; a <= n + 1; ++a)
        for (int b = 1; b <= n + 1; ++b) {
            if (a == b) continue;
            ChevalleyBasis::Element e;
            e.a = a;
            e.b = b;
            e.weight = VectorZ::Zero(n + 1);
            for (int k = std::min(a, b); k < std::max(a, b); ++k) e.weight(k) = a < b ? 1 : -1;
            e.name = root_name(e.weight);
            cb.basis.push_back(e);
        }
    for (int i = 1; i <= n; ++i) {
        ChevalleyBasis::Element e;
        e.cartan = true;
        e.i = i;
        e.weight = VectorZ::Zero(n + 1);
        e.name = "H" + std::to_string(i);
        cb.basis.push_back(e);
    }
    const int d = cb.size();
    std::vector<MatrixZ> mats;
    for (const auto& e : cb.basis) mats.push_back(as_matrix(e, n));
    cb.form = MatrixZ::Zero(d, d);
    cb.structure.assign(d, std::vector<std::vector<std::pair<int, Integer>>>(d));
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
            cb.form(p, q) = (mats[p] * mats[q]).trace();
            MatrixZ br = mats[p] * mats[q] - mats[q] * mats[p];
            auto& out = cb.structure[p][q];
            for (int r = 0; r < d; ++r) {
                const auto& e = cb.basis[r];
                if (!e.cartan && br(e.a - 1, e.b - 1) != 0) out.emplace_back(r, br(e.a - 1, e.b - 1));
            }
            // diagonal: coefficient of H_k is the partial sum of the diagonal
            Integer partial = 0;
            for (int k = 1; k <= n; ++k) {
                partial += br(k - 1, k - 1);
                if (partial != 0) out.emplace_back(cb.cartan(k), partial);
            }
        }
    return cb;
}

LoopElement LoopElement::monomial(int basis, int k, int l, const Rational& coeff)
{
    check_caps(k, l);
    LoopElement x;
    if (coeff != 0) x.terms[{basis, k, l}] = coeff;
    return x;
}

LoopElement LoopElement::central(int l, const Rational& coeff)
{
    check_caps(0, l);
    LoopElement x;
    if (coeff != 0) x.c_l[l] = coeff;
    return x;
}

LoopElement LoopElement::central_kl(int k, int l, const Rational& coeff)
{
    check_caps(k, l);
    if (k == 0 || l < 1) throw std::out_of_range("c_{k,l} needs k != 0 and l >= 1");
    LoopElement x;
    if (coeff != 0) x.c_kl[{k, l}] = coeff;
    return x;
}

void LoopElement::prune()
{
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(c_l, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(c_kl, [](const auto& kv) { return kv.second == 0; });
}

LoopElement& LoopElement::operator+=(const LoopElement& o)
{
    for (const auto& [k, v] : o.terms) terms[k] += v;
    for (const auto& [k, v] : o.c_l) c_l[k] += v;
    for (const auto& [k, v] : o.c_kl) c_kl[k] += v;
    prune();
    return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o)
{
    for (const auto& [k, v] : o.terms) terms[k] -= v;
    for (const auto& [k, v] : o.c_l) c_l[k] -= v;
    for (const auto& [k, v] : o.c_kl) c_kl[k] -= v;
    prune();
    return *this;
}

LoopElement& LoopElement::operator*=(const Rational& s)
{
    for (auto& [k, v] : terms) v *= s;
    for (auto& [k, v] : c_l) v *= s;
    for (auto& [k, v] : c_kl) v *= s;
    prune();
    return *this;
}

bool LoopElement::is_zero() const
{
    auto nz = [](const auto& m) {
        return std::any_of(m.begin(), m.end(), [](const auto& kv) { return kv.second != 0; });
    };
    return !nz(terms) && !nz(c_l) && !nz(c_kl);
}

bool LoopElement::operator==(const LoopElement& o) const { return (LoopElement(*this) - o).is_zero(); }

LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
LoopElement operator*(const Rational& s, LoopElement a) { return a *= s; }

LoopElement bracket(const ChevalleyBasis& cb, const LoopElement& a, const LoopElement& b)
{
    LoopElement out;
    for (const auto& [ka, va] : a.terms) {
        auto [p, k, l] = ka;
        for (const auto& [kb, vb] : b.terms) {
            auto [q, h, n] = kb;
            Rational coeff = va * vb;
            for (const auto& [r, sc] : cb.structure[p][q]) out.terms[{r, k + h, l + n}] += coeff * Rational(sc);
            Integer f = cb.form(p, q);
            if (f == 0) continue;
            if (k + h == 0) {
                if (k != 0) out.c_l[l + n] += coeff * Rational(k * f);
            } else {
                Integer w = static_cast<Integer>(k) * n - static_cast<Integer>(l) * h;
                if (w != 0) out.c_kl[{k + h, l + n}] += coeff * Rational(w * f);
            }
        }
    }
    out.prune();
    return out;
}

Rational loop_form(const ChevalleyBasis& cb, const LoopElement& a, const LoopElement& b)
{
    Rational acc = 0;
    for (const auto& [ka, va] : a.terms) {
        auto [p, k, l] = ka;
        for (const auto& [kb, vb] : b.terms) {
            auto [q, h, n] = kb;
            if (k + h == 0 && l == 0 && n == 0) acc += va * vb * Rational(cb.form(p, q));
        }
    }
    return acc;
}

std::vector<Degree> degrees(const CartanData& c, const ChevalleyBasis& cb, const LoopElement& x)
{
    std::vector<Degree> out;
    auto add = [&](Degree d) {
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    };
    for (const auto& [key, v] : x.terms) {
        auto [p, k, l] = key;
        add({-2 * l, VectorZ(cb.basis[p].weight + k * delta(c))});
    }
    for (const auto& [l, v] : x.c_l) add({-2 * l, VectorZ::Zero(c.size())});
    for (const auto& [kl, v] : x.c_kl) add({-2 * kl.second, VectorZ(kl.first * delta(c))});
    return out;
}

bool is_homogeneous(const CartanData& c, const ChevalleyBasis& cb, const LoopElement& x)
{
    return degrees(c, cb, x).size() <= 1;
}

int sign_variable(int node, GenKind kind) { return 3 * node + (kind == GenKind::Plus ? 0 : kind == GenKind::Minus ? 1 : 2); }
int tau_variable(const CartanData& c) { return 3 * c.size(); }

SignedSum psi_generator(const CartanData& c, const ChevalleyBasis& cb, int i, int l, GenKind kind)
{
    const SignMask var = SignMask(1) << sign_variable(i, kind);
    VectorZ phi = c.highest_root;
    if (i == 0) {
        switch (kind) {
        case GenKind::Plus: return {{var, LoopElement::monomial(cb.root_vector(-phi), 1, l)}};
        case GenKind::Minus: return {{var, LoopElement::monomial(cb.root_vector(phi), -1, l)}};
        case GenKind::H: {
            LoopElement h;
            for (int j = 1; j <= c.rank(); ++j) h += LoopElement::monomial(cb.cartan(j), 0, l, Rational(phi(j)));
            return {{var, h}, {SignMask(1) << tau_variable(c), LoopElement::central(l)}};
        }
        }
    }
    VectorZ ai = simple_root(c, i);
    switch (kind) {
    case GenKind::Plus: return {{var, LoopElement::monomial(cb.root_vector(ai), 0, l)}};
    case GenKind::Minus: return {{var, LoopElement::monomial(cb.root_vector(-ai), 0, l)}};
    case GenKind::H: return {{var, LoopElement::monomial(cb.cartan(i), 0, l)}};
    }
    return {};
}

LoopElement evaluate_signs(const SignedSum& s, SignMask assignment)
{
    LoopElement out;
    for (const auto& [mask, x] : s) {
        if (std::popcount(mask & assignment) % 2)
            out -= x;
        else
            out += x;
    }
    return out;
}

namespace {

SignedSum merged(SignedSum s)
{
    std::map<SignMask, LoopElement> m;
    for (auto& [mask, x] : s) m[mask] += x;
    SignedSum out;
    for (auto& [mask, x] : m)
        if (!x.is_zero()) out.emplace_back(mask, x);
    return out;
}

SignedSum scaled(SignedSum s, const Rational& f)
{
    for (auto& term : s) term.second *= f;
    return s;
}

SignedSum concat(SignedSum a, const SignedSum& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return merged(a);
}

}  // namespace

SignedSum bracket(const ChevalleyBasis& cb, const SignedSum& a, const SignedSum& b)
{
    SignedSum out;
    for (const auto& [ma, xa] : a)
        for (const auto& [mb, xb] : b) out.emplace_back(ma ^ mb, bracket(cb, xa, xb));
    return merged(out);
}

std::vector<RelationInstance> classical_relations(const CartanData& c, const ChevalleyBasis& cb, int lmax)
{
    std::vector<RelationInstance> rel;
    const int n = c.size();
    auto g = [&](int i, int l, GenKind k) { return psi_generator(c, cb, i, l, k); };
    auto tag = [](const std::string& base, std::initializer_list<int> idx) {
        std::string s = base + "(";
        bool first = true;
        for (int v : idx) {
            s += (first ? "" : ",") + std::to_string(v);
            first = false;
        }
        return s + ")";
    };
    const GenKind pm[2] = {GenKind::Plus, GenKind::Minus};

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r <= lmax; ++r)
                for (int s = 0; s <= lmax; ++s) {
                    rel.push_back({tag("hh", {i, j, r, s}), bracket(cb, g(i, r, GenKind::H), g(j, s, GenKind::H))});
                    SignedSum v = bracket(cb, g(i, r, GenKind::Plus), g(j, s, GenKind::Minus));
                    if (i == j) v = concat(v, scaled(g(i, r + s, GenKind::H), -1));
                    rel.push_back({tag("x+x-", {i, j, r, s}), v});
                }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int e = 0; e < 2; ++e)
                for (int r = 0; r <= lmax; ++r) {
                    Integer a = c.affine(i, j) * (e == 0 ? 1 : -1);
                    SignedSum v = concat(bracket(cb, g(i, 0, GenKind::H), g(j, r, pm[e])), scaled(g(j, r, pm[e]), Rational(-a)));
                    rel.push_back({tag(e == 0 ? "hx+" : "hx-", {i, j, r}), v});
                }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int e = 0; e < 2; ++e)
                for (int r = 0; r < lmax; ++r)
                    for (int s = 0; s < lmax; ++s) {
                        SignedSum h = concat(bracket(cb, g(i, r + 1, GenKind::H), g(j, s, pm[e])),
                                             scaled(bracket(cb, g(i, r, GenKind::H), g(j, s + 1, pm[e])), -1));
                        rel.push_back({tag(e == 0 ? "shift-hx+" : "shift-hx-", {i, j, r, s}), h});
                        SignedSum x = concat(bracket(cb, g(i, r + 1, pm[e]), g(j, s, pm[e])),
                                             scaled(bracket(cb, g(i, r, pm[e]), g(j, s + 1, pm[e])), -1));
                        rel.push_back({tag(e == 0 ? "shift-xx+" : "shift-xx-", {i, j, r, s}), x});
                    }
    // Serre: symmetrized nested brackets of length m = 1 - a_ij
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int m = static_cast<int>(1 - c.affine(i, j));
            for (int e = 0; e < 2; ++e) {
                std::vector<int> rs(m, 0);
                for (;;) {
                    for (int s = 0; s <= lmax; ++s) {
                        SignedSum total;
                        std::vector<int> perm = rs;
                        std::sort(perm.begin(), perm.end());
                        do {
                            SignedSum cur = g(j, s, pm[e]);
                            for (auto it = perm.rbegin(); it != perm.rend(); ++it) cur = bracket(cb, g(i, *it, pm[e]), cur);
                            total = concat(total, cur);
                        } while (std::next_permutation(perm.begin(), perm.end()));
                        std::string name = std::string("serre") + (e == 0 ? "+" : "-") + "(" + std::to_string(i) + ","
                                           + std::to_string(j) + ";";
                        for (int r : rs) name += std::to_string(r) + ",";
                        name += std::to_string(s) + ")";
                        rel.push_back({name, total});
                    }
                    // next nondecreasing tuple of r's
                    int k = m - 1;
                    while (k >= 0 && rs[k] == lmax) --k;
                    if (k < 0) break;
                    ++rs[k];
                    for (int t = k + 1; t < m; ++t) rs[t] = rs[k];
                }
            }
        }
    return rel;
}

ClassicalReport check_classical_relations(const CartanData& c, int lmax)
{
    if (c.type.family != Family::A || c.rank() < 2) throw std::invalid_argument("classical limit check needs type A of rank >= 2");
    ChevalleyBasis cb = chevalley_basis(c);
    auto rel = classical_relations(c, cb, lmax);
    ClassicalReport rep;
    rep.relation_count = rel.size();
    const int nvars = tau_variable(c) + 1;

    struct Table {
        SignMask vars = 0;
        std::map<SignMask, bool> pass;
    };
    std::vector<Table> tables;
    for (const auto& r : rel) {
        Table t;
        for (const auto& term : r.value) t.vars |= term.first;
        // enumerate submasks of vars
        for (SignMask sub = t.vars;; sub = (sub - 1) & t.vars) {
            t.pass[sub] = evaluate_signs(r.value, sub).is_zero();
            if (sub == 0) break;
        }
        tables.push_back(std::move(t));
    }

    rep.literal_ok = true;
    rep.serre_ok = true;
    for (std::size_t k = 0; k < rel.size(); ++k) {
        if (!tables[k].pass.at(0)) {
            rep.literal_ok = false;
            rep.literal_failures.push_back(rel[k].name);
        }
        // Serre is sign-homogeneous, so any one assignment decides it.
        if (rel[k].name.rfind("serre", 0) == 0 && !tables[k].pass.at(0)) rep.serre_ok = false;
    }

    for (SignMask a = 0; a < (SignMask(1) << nvars); ++a) {
        bool ok = true;
        for (const auto& t : tables)
            if (!t.pass.at(a & t.vars)) {
                ok = false;
                break;
            }
        if (ok) rep.solutions.push_back(a);
    }

    if (!rep.solutions.empty()) {
        SignMask plus_bits = 0;
        for (int i = 0; i < c.size(); ++i) plus_bits |= SignMask(1) << sign_variable(i, GenKind::Plus);
        rep.chosen = rep.solutions.front();
        for (SignMask s : rep.solutions)
            if ((s & plus_bits) == 0) rep.chosen = s;
        // Orbit of the chosen solution under simultaneous flips of (sigma_+(i), sigma_-(i)).
        std::vector<SignMask> orbit;
        for (SignMask s = 0; s < (SignMask(1) << c.size()); ++s) {
            SignMask f = 0;
            for (int i = 0; i < c.size(); ++i)
                if (s & (SignMask(1) << i))
                    f |= (SignMask(1) << sign_variable(i, GenKind::Plus)) | (SignMask(1) << sign_variable(i, GenKind::Minus));
            orbit.push_back(rep.chosen ^ f);
        }
        std::sort(orbit.begin(), orbit.end());
        std::vector<SignMask> sols = rep.solutions;
        std::sort(sols.begin(), sols.end());
        rep.unique_up_to_flips = sols == orbit;
        for (int i = 0; i < c.size(); ++i) {
            auto sgn = [&](GenKind k) { return (rep.chosen >> sign_variable(i, k)) & 1 ? -1 : 1; };
            rep.sigma_plus.push_back(sgn(GenKind::Plus));
            rep.sigma_minus.push_back(sgn(GenKind::Minus));
            rep.sigma_h.push_back(sgn(GenKind::H));
        }
        rep.tau = (rep.chosen >> tau_variable(c)) & 1 ? -1 : 1;
    }
    rep.ok = !rep.solutions.empty() && rep.unique_up_to_flips && rep.serre_ok;
    return rep;
}

}  // namespace heartlab
