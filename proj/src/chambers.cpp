#include "heartlab/chambers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace heartlab {

namespace {

bool contains(const std::vector<int>& s, int i) { return std::find(s.begin(), s.end(), i) != s.end(); }

Rational value(const Coweight& theta, const RootVector& v) { return pairing(theta, v); }

// s_beta acting on a coweight; s_beta is an involution so no inverse is needed.
Coweight reflect(const CartanData& c, const Coweight& theta, const RootVector& beta)
{
    Rational t = value(theta, beta);
    if (t == 0) return theta;
    VectorZ a_beta = c.affine * beta;
    Coweight out = theta;
    for (int j = 0; j < c.size(); ++j)
        if (a_beta(j) != 0) out(j) -= t * Rational(a_beta(j));
    return out;
}

std::vector<Integer> matrix_key(const MatrixZ& m)
{
    std::vector<Integer> k(m.size());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) k[i * m.cols() + j] = m(i, j);
    return k;
}

std::vector<WeylElement> generated_subgroup(const CartanData& c, const std::vector<WeylElement>& gens, std::size_t cap)
{
    std::vector<WeylElement> out{WeylElement::identity(c)};
    std::set<std::vector<Integer>> seen{matrix_key(out.front().matrix)};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& g : gens) {
            WeylElement next = out[k] * g;
            if (seen.insert(matrix_key(next.matrix)).second) {
                out.push_back(next);
                if (out.size() > cap) throw std::length_error("stabilizer subgroup too large to enumerate");
            }
        }
    }
    return out;
}

}  // namespace

std::vector<RootVector> cplus_walls(const CartanData& c)
{
    std::vector<RootVector> walls;
    for (int i = 0; i < c.size(); ++i) walls.push_back(simple_class(c, i));
    return walls;
}

bool in_chamber(const CartanData& c, const Coweight& theta, ChamberKind kind, const std::vector<int>& J)
{
    switch (kind) {
    case ChamberKind::Cplus:
        for (const auto& w : cplus_walls(c))
            if (value(theta, w) < 0) return false;
        return true;
    case ChamberKind::Cminus:
        for (const auto& w : cplus_walls(c))
            if (value(theta, w) > 0) return false;
        return true;
    case ChamberKind::C0:
    case ChamberKind::C0J:
        if (level(c, theta) != 0) return false;
        for (int i = 1; i <= c.rank(); ++i) {
            if (theta(i) < 0) return false;
            if (kind == ChamberKind::C0J && !contains(J, i) && theta(i) != 0) return false;
        }
        return true;
    case ChamberKind::DJ: {
        if (level(c, theta) <= 0) return false;
        std::vector<int> jc = complement(c, J);
        for (int i : jc)
            if (theta(i) > 0) return false;
        for (const auto& comp : connected_components(c, jc))
            if (value(theta, RootVector(2 * delta(c) - alpha_J(c, comp))) < 0) return false;
        return true;
    }
    }
    return false;
}

bool in_chamber_interior(const CartanData& c, const Coweight& theta, ChamberKind kind)
{
    switch (kind) {
    case ChamberKind::Cplus:
        for (const auto& w : cplus_walls(c))
            if (value(theta, w) <= 0) return false;
        return true;
    case ChamberKind::Cminus:
        for (const auto& w : cplus_walls(c))
            if (value(theta, w) >= 0) return false;
        return true;
    case ChamberKind::C0:
        if (level(c, theta) != 0) return false;
        for (int i = 1; i <= c.rank(); ++i)
            if (theta(i) <= 0) return false;
        return true;
    default:
        throw std::invalid_argument("interior test only for C+, C-, C0");
    }
}

WallDescent descend(const CartanData& c, const Coweight& theta, const std::vector<RootVector>& walls)
{
    WallDescent d{theta, WeylElement::identity(c), {}};
    const std::size_t cap = 1u << 20;
    for (;;) {
        int hit = -1;
        for (std::size_t k = 0; k < walls.size() && hit < 0; ++k)
            if (value(d.theta, walls[k]) < 0) hit = static_cast<int>(k);
        if (hit < 0) return d;
        d.theta = reflect(c, d.theta, walls[hit]);
        d.element = reflection(c, walls[hit]) * d.element;
        d.reflections.push_back(walls[hit]);
        if (d.reflections.size() > cap) throw std::runtime_error("chamber descent did not terminate");
    }
}

DominantNormalization normalize_to_dominant(const CartanData& c, const Coweight& theta)
{
    Rational lv = level(c, theta);
    if (lv == 0) throw std::domain_error("normalize_to_dominant needs (theta, delta) != 0");
    Coweight start = lv > 0 ? theta : Coweight(-theta);
    WallDescent d = descend(c, start, cplus_walls(c));
    DominantNormalization out;
    out.element = d.element;
    out.word = reduced_word(c, d.element);
    out.theta = lv > 0 ? d.theta : Coweight(-d.theta);
    out.chamber = lv > 0 ? ChamberKind::Cplus : ChamberKind::Cminus;
    return out;
}

DominantNormalization normalize_to_C0(const CartanData& c, const Coweight& theta)
{
    if (level(c, theta) != 0) throw std::domain_error("normalize_to_C0 needs (theta, delta) = 0");
    std::vector<RootVector> walls;
    for (int i = 1; i <= c.rank(); ++i) walls.push_back(simple_root(c, i));
    WallDescent d = descend(c, theta, walls);
    return {d.element, reduced_word(c, d.element), d.theta, ChamberKind::C0};
}

DJNormalization normalize_to_DJ(const CartanData& c, const Coweight& theta, const std::vector<int>& J)
{
    if (level(c, theta) <= 0) throw std::domain_error("normalize_to_DJ needs (theta, delta) > 0");
    DJNormalization out;
    out.generators = wJ_generators(c, J);
    out.element = WeylElement::identity(c);
    out.theta = theta;
    std::vector<int> jc = complement(c, J);
    auto gen_index = [&](const std::string& label) {
        for (std::size_t k = 0; k < out.generators.size(); ++k)
            if (out.generators[k].label == label) return static_cast<int>(k);
        throw std::logic_error("missing generator " + label);
    };
    for (const auto& comp : connected_components(c, jc)) {
        std::vector<RootVector> walls;
        for (int i : comp) walls.push_back(-simple_root(c, i));
        VectorZ phi = highest_root_of(c, comp);
        RootVector top = delta(c) + phi;  // 2 delta - alpha_J'
        walls.push_back(top);
        WallDescent d = descend(c, out.theta, walls);

        // s_{delta+phi} = s_phi o l_{-phi^vee}, with phi^vee = sum r_i alpha_i^vee
        GeneratorWord top_word;
        for (int i : reduced_word(c, reflection(c, phi))) top_word.push_back({gen_index("s" + std::to_string(i)), 1});
        for (int i : comp)
            if (phi(i) != 0) top_word.push_back({gen_index("l(a" + std::to_string(i) + ")"), -phi(i)});

        GeneratorWord comp_word;
        for (auto it = d.reflections.rbegin(); it != d.reflections.rend(); ++it) {
            if (*it == top) {
                comp_word.insert(comp_word.end(), top_word.begin(), top_word.end());
            } else {
                int i = 0;
                for (int k : comp)
                    if (*it == RootVector(-simple_root(c, k))) i = k;
                comp_word.push_back({gen_index("s" + std::to_string(i)), 1});
            }
        }
        out.word.insert(out.word.begin(), comp_word.begin(), comp_word.end());
        out.element = d.element * out.element;
        out.theta = d.theta;
    }
    return out;
}

std::string to_string(HeartFlavor f)
{
    switch (f) {
    case HeartFlavor::Nilp: return "nilp";
    case HeartFlavor::Perverse: return "perverse";
    case HeartFlavor::ReversedPerverse: return "reversed_perverse";
    }
    return "nilp";
}

HeartFlavor parse_flavor(const std::string& s)
{
    if (s == "nilp") return HeartFlavor::Nilp;
    if (s == "perverse") return HeartFlavor::Perverse;
    if (s == "reversed_perverse") return HeartFlavor::ReversedPerverse;
    throw std::invalid_argument("unknown heart flavor '" + s + "'");
}

WeylElement minimal_coset_representative(const CartanData& c, const WeylElement& w, const std::vector<int>& K)
{
    WeylElement cur = w;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i : K) {
            if (is_negative(cur.matrix.col(i))) {
                cur = cur * simple_reflection(c, i);
                changed = true;
            }
        }
    }
    return cur;
}

HeartLocation locate_heart_cone(const CartanData& c, const Coweight& theta)
{
    if (is_zero(theta)) throw std::domain_error("the zero coweight lies in every heart cone");
    Rational lv = level(c, theta);
    HeartLocation loc;
    if (lv == 0) {
        DominantNormalization n = normalize_to_C0(c, theta);
        std::vector<int> J;
        for (int i = 1; i <= c.rank(); ++i)
            if (n.theta(i) > 0) J.push_back(i);
        WeylElement w = minimal_coset_representative(c, n.element.inv(), complement(c, J));
        std::vector<int> word = reduced_word(c, w);
        loc.upper = {3, word, J, 0, HeartFlavor::Perverse};
        loc.lower = {3, word, J, 0, HeartFlavor::ReversedPerverse};
        return loc;
    }

    DominantNormalization n = normalize_to_dominant(c, theta);
    std::vector<WeylElement> stab_gens;
    for (const auto& wall : cplus_walls(c))
        if (pairing(n.theta, wall) == 0) stab_gens.push_back(reflection(c, wall));
    std::vector<WeylElement> stab = generated_subgroup(c, stab_gens, 200000);

    struct Candidate {
        std::size_t len;
        std::vector<int> word;
    };
    std::vector<Candidate> cands;
    for (const auto& p : stab) {
        WeylElement w = lv > 0 ? n.element.inv() * p : p * n.element;
        auto word = reduced_word(c, w);
        cands.push_back({word.size(), word});
    }
    auto by_len = [](const Candidate& a, const Candidate& b) {
        return a.len != b.len ? a.len < b.len : a.word < b.word;
    };
    std::sort(cands.begin(), cands.end(), by_len);
    const auto& shortest = cands.front().word;
    const auto& longest = cands.back().word;
    if (lv > 0) {
        loc.upper = {1, shortest, {}, 0, HeartFlavor::Nilp};
        loc.lower = {1, longest, {}, 0, HeartFlavor::Nilp};
    } else {
        loc.upper = {2, longest, {}, -1, HeartFlavor::Nilp};
        loc.lower = {2, shortest, {}, -1, HeartFlavor::Nilp};
    }
    return loc;
}

bool in_heart_cone(const CartanData& c, const Coweight& theta, const HeartDescriptor& h)
{
    WeylElement w = from_word(c, h.word);
    switch (h.heart_case) {
    case 1: return in_chamber(c, dual_action(w.inv(), theta), ChamberKind::Cplus);
    case 2: return in_chamber(c, dual_action(w, theta), ChamberKind::Cminus);
    case 3: return in_chamber(c, dual_action(w.inv(), theta), ChamberKind::C0J, h.J);
    default: return false;
    }
}

}  // namespace heartlab
