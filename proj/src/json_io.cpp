#include "heartlab/json_io.hpp"

#include <regex>
#include <sstream>

namespace heartlab {

json rational_to_json(const Rational& q)
{
    return json::array({boost::multiprecision::numerator(q).str(), boost::multiprecision::denominator(q).str()});
}

Rational rational_from_json(const json& j)
{
    if (j.is_array() && j.size() == 2) {
        auto part = [](const json& x) { return x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>()); };
        return parse_rational(part(j[0]) + "/" + part(j[1]));
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument("rational must be [num, den], a string or an integer");
}

json root_to_json(const CartanData& c, const RootVector& v)
{
    json coords = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) coords.push_back(v(i));
    return {{"type", c.type.name()}, {"basis", "alpha"}, {"coords", coords}};
}

RootVector root_from_json(const CartanData& c, const json& j)
{
    if (j.value("basis", "alpha") != "alpha") throw std::invalid_argument("root vectors use the alpha basis");
    const auto& coords = j.at("coords");
    if (static_cast<int>(coords.size()) != c.size()) throw std::invalid_argument("root vector has wrong length");
    RootVector v(c.size());
    for (int i = 0; i < c.size(); ++i) v(i) = coords[i].get<Integer>();
    return v;
}

json coweight_to_json(const Coweight& theta)
{
    json coords = json::array();
    for (Eigen::Index i = 0; i < theta.size(); ++i) coords.push_back(rational_to_json(theta(i)));
    return {{"basis", "omega"}, {"coords", coords}};
}

json coweight_to_json(const FiniteCoweight& lam)
{
    json coords = json::array();
    for (Eigen::Index i = 0; i < lam.size(); ++i) coords.push_back(rational_to_json(lam(i)));
    return {{"basis", "lambda"}, {"coords", coords}};
}

FiniteCoweight finite_coweight_from_json(const CartanData& c, const json& j)
{
    if (j.value("basis", "lambda") != "lambda") throw std::invalid_argument("finite coweights use the lambda basis");
    const auto& coords = j.at("coords");
    if (static_cast<int>(coords.size()) != c.rank()) throw std::invalid_argument("finite coweight has wrong length");
    VectorQ v(c.rank());
    for (int i = 0; i < c.rank(); ++i) v(i) = rational_from_json(coords[i]);
    return FiniteCoweight(v);
}

Coweight coweight_from_json(const CartanData& c, const json& j)
{
    std::string basis = j.value("basis", "omega");
    if (basis == "lambda") return embed(c, finite_coweight_from_json(c, j));
    if (basis != "omega") throw std::invalid_argument("unknown coweight basis '" + basis + "'");
    const auto& coords = j.at("coords");
    if (static_cast<int>(coords.size()) != c.size()) throw std::invalid_argument("coweight has wrong length");
    Coweight v(c.size());
    for (int i = 0; i < c.size(); ++i) v(i) = rational_from_json(coords[i]);
    return v;
}

VectorQ parse_rational_list(std::string_view text)
{
    std::vector<Rational> vals;
    std::string s(text);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(parse_rational(item));
    if (vals.empty()) throw std::invalid_argument("empty coordinate list");
    VectorQ v(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<Eigen::Index>(i)) = vals[i];
    return v;
}

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    std::string s(text);
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

json braid_to_json(const BraidWord& w)
{
    json out = json::array();
    for (const auto& l : w) {
        if (l.inverse && l.node == 0)
            out.push_back("-0");
        else
            out.push_back(l.inverse ? -l.node : l.node);
    }
    return out;
}

BraidWord braid_from_json(const json& j)
{
    BraidWord w;
    for (const auto& x : j) {
        if (x.is_string()) {
            if (x.get<std::string>() != "-0") throw std::invalid_argument("unknown braid letter");
            w.push_back({0, true});
        } else {
            int v = x.get<int>();
            w.push_back({std::abs(v), v < 0});
        }
    }
    return w;
}

WeylElement weyl_image(const CartanData& c, const BraidWord& w)
{
    WeylElement out = WeylElement::identity(c);
    for (const auto& l : w) out = out * simple_reflection(c, l.node);
    return out;
}

json heart_to_json(const HeartDescriptor& h)
{
    return {{"case", h.heart_case}, {"word", h.word}, {"J", h.J}, {"shift", h.shift}, {"flavor", to_string(h.flavor)}};
}

HeartDescriptor heart_from_json(const json& j)
{
    HeartDescriptor h;
    h.heart_case = j.at("case").get<int>();
    h.word = j.at("word").get<std::vector<int>>();
    h.J = j.value("J", std::vector<int>{});
    h.shift = j.value("shift", 0);
    h.flavor = parse_flavor(j.value("flavor", std::string("nilp")));
    return h;
}

json normalization_to_json(const NormalizationResult& r)
{
    return {{"word", r.word},
            {"shift", r.shift},
            {"J", r.J},
            {"flavor", to_string(r.flavor)},
            {"theta", coweight_to_json(r.normalized.theta)},
            {"omega", coweight_to_json(r.normalized.omega)}};
}

json arc_to_json(const ArcReport& a)
{
    std::string type = a.chamber == ChamberKind::Cplus ? "Cplus" : "Cminus";
    json dir = json::array();
    for (Eigen::Index i = 0; i < a.direction.size(); ++i) dir.push_back(rational_to_json(a.direction(i)));
    return {{"n", a.n}, {"direction", dir}, {"chamber", {{"type", type}, {"word", a.word}}}, {"ok", a.ok}};
}

json slicing_to_json(const SlicingReport& r)
{
    json arcs = json::array();
    for (const auto& a : r.arcs) arcs.push_back(arc_to_json(a));
    return {{"arcs", arcs}, {"midpoint_ok", r.midpoint_ok}, {"ok", r.ok}};
}

json rep_to_json(const Rep& r)
{
    json arrows = json::object();
    for (const auto& [k, m] : r.arrows) {
        json rows = json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
            rows.push_back(row);
        }
        arrows[k] = rows;
    }
    std::vector<Integer> dim(r.dim.data(), r.dim.data() + r.dim.size());
    return {{"p", r.p}, {"dim", dim}, {"arrows", arrows}};
}

Rep rep_from_json(const CartanData& c, const json& j)
{
    Rep r;
    r.p = j.at("p").get<int>();
    auto dim = j.at("dim").get<std::vector<Integer>>();
    if (static_cast<int>(dim.size()) != c.size()) throw std::invalid_argument("dimension vector has wrong length");
    r.dim = VectorZ(c.size());
    for (int i = 0; i < c.size(); ++i) r.dim(i) = dim[i];
    const json given = j.value("arrows", json::object());
    const auto arrows = double_quiver_arrows(c);
    for (const auto& [k, rows] : given.items()) {
        auto it = std::find_if(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.key() == k; });
        if (it == arrows.end()) throw std::invalid_argument("unknown arrow " + k);
        const Integer nr = r.dim(it->dst), nc = r.dim(it->src);
        FpMatrix m = FpMatrix::Zero(nr, nc);
        if (static_cast<Integer>(rows.size()) != nr && !(nr == 0 && rows.size() <= 1))
            throw std::invalid_argument("arrow " + k + " has wrong number of rows");
        for (Integer i = 0; i < nr; ++i) {
            if (static_cast<Integer>(rows[i].size()) != nc) throw std::invalid_argument("arrow " + k + " has wrong number of columns");
            for (Integer jj = 0; jj < nc; ++jj) m(i, jj) = rows[i][jj].get<int>();
        }
        r.arrows[k] = m;
    }
    return r;
}

json hn_to_json(const HNFiltration& hn)
{
    json factors = json::array(), chain = json::array();
    for (std::size_t i = 0; i < hn.factor_dims.size(); ++i) {
        const auto& d = hn.factor_dims[i];
        factors.push_back({{"dim", std::vector<Integer>(d.data(), d.data() + d.size())}, {"slope", rational_to_json(hn.slopes[i])}});
        const auto& cd = hn.chain_dims[i];
        chain.push_back(std::vector<Integer>(cd.data(), cd.data() + cd.size()));
    }
    return {{"factors", factors}, {"chain", chain}};
}

json loop_to_json(const ChevalleyBasis& cb, const LoopElement& x)
{
    json out = json::array();
    for (const auto& [key, v] : x.terms) {
        auto [p, k, l] = key;
        out.push_back({{"root", cb.basis[p].name}, {"k", k}, {"l", l}, {"coeff", rational_to_json(v)}});
    }
    for (const auto& [l, v] : x.c_l) out.push_back({{"central", "c" + std::to_string(l)}, {"coeff", rational_to_json(v)}});
    for (const auto& [kl, v] : x.c_kl)
        out.push_back({{"central", "c(" + std::to_string(kl.first) + "," + std::to_string(kl.second) + ")"},
                       {"coeff", rational_to_json(v)}});
    return out;
}

LoopElement loop_from_json(const ChevalleyBasis& cb, const json& j)
{
    LoopElement x;
    static const std::regex cl(R"(c(\d+))"), ckl(R"(c\((-?\d+),(\d+)\))");
    for (const auto& t : j) {
        Rational coeff = rational_from_json(t.at("coeff"));
        if (t.contains("central")) {
            std::string s = t.at("central").get<std::string>();
            std::smatch m;
            if (std::regex_match(s, m, cl))
                x += LoopElement::central(std::stoi(m[1]), coeff);
            else if (std::regex_match(s, m, ckl))
                x += LoopElement::central_kl(std::stoi(m[1]), std::stoi(m[2]), coeff);
            else
                throw std::invalid_argument("bad central label '" + s + "'");
        } else {
            x += LoopElement::monomial(cb.find(t.at("root").get<std::string>()), t.at("k").get<int>(), t.at("l").get<int>(), coeff);
        }
    }
    return x;
}

json character_to_json(const CharacterTable& t)
{
    json rows = json::array();
    for (const auto& [k, d] : t) rows.push_back({{"weight", k.first}, {"t_degree", k.second}, {"dim", d}});
    return rows;
}

json classical_report_to_json(const ClassicalReport& r)
{
    return {{"relations", r.relation_count},
            {"literal_ok", r.literal_ok},
            {"literal_failures", r.literal_failures.size()},
            {"solutions", r.solutions.size()},
            {"unique_up_to_flips", r.unique_up_to_flips},
            {"sigma_plus", r.sigma_plus},
            {"sigma_minus", r.sigma_minus},
            {"sigma_h", r.sigma_h},
            {"tau", r.tau},
            {"serre_ok", r.serre_ok},
            {"ok", r.ok}};
}

}  // namespace heartlab
