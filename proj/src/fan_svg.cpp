#include "heartlab/fan_svg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <cmath>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

namespace heartlab {

namespace {

const char* kPalette[] = {"#e6f0fa", "#c6dbef", "#9ecae1", "#6baed6", "#4292c6", "#2171b5", "#08519c", "#08306b"};
const char* kFacePalette[] = {"#fdd0a2", "#fdae6b", "#fd8d3c", "#f16913", "#d94801", "#a63603"};

Eigen::MatrixXd slice_embedding(const CartanData& c)
{
    Eigen::MatrixXd cf = c.finite().cast<double>();
    Eigen::MatrixXd gram = cf.inverse();
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    Eigen::MatrixXd l = llt.matrixL();
    if (c.rank() == 1) return Eigen::MatrixXd::Ones(1, 1);
    return l.transpose();  // position = L^T mu
}

Eigen::Vector2d position(const Eigen::MatrixXd& emb, const Coweight& theta)
{
    const Eigen::Index e = theta.size() - 1;
    Eigen::VectorXd mu(e);
    for (Eigen::Index i = 0; i < e; ++i) mu(i) = to_double(theta(i + 1));
    Eigen::VectorXd p = emb * mu;
    return {p(0), p.size() > 1 ? p(1) : 0.0};
}

struct Canvas {
    double cx, cy, scale;
    std::string pt(const Eigen::Vector2d& p) const
    {
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << cx + scale * p.x() << "," << cy - scale * p.y();
        return os.str();
    }
};

}  // namespace

std::string render_fan_svg(const CartanData& c, const FanOptions& opt)
{
    if (c.rank() > 2) throw std::invalid_argument("fan rendering needs rank at most 2");
    const Eigen::MatrixXd emb = slice_embedding(c);
    const double panel = 400.0;
    Canvas left{panel / 2, panel / 2 + 20, (panel / 2 - 10) / opt.radius};
    Canvas right{panel + panel / 2, panel / 2 + 20, (panel / 2 - 10) / opt.radius};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * panel << "\" height=\"" << panel + 40
        << "\" viewBox=\"0 0 " << 2 * panel << " " << panel + 40 << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << 2 * panel << "\" height=\"" << panel + 40 << "\" fill=\"white\"/>\n";
    svg << "<text x=\"10\" y=\"16\" font-size=\"13\">" << c.type.name() << " level 1 slice: chambers w C+</text>\n";
    svg << "<text x=\"" << panel + 10 << "\" y=\"16\" font-size=\"13\">" << c.type.name()
        << " level 0: faces w C0_J</text>\n";

    // Rays of C^+ normalized to level one: columns of the inverse of the simple-class matrix.
    MatrixZ s(c.size(), c.size());
    for (int i = 0; i < c.size(); ++i) s.row(i) = simple_class(c, i).transpose();
    MatrixZ sinv = inverse_unimodular(s);
    std::vector<Coweight> rays;
    for (int j = 0; j < c.size(); ++j) {
        Coweight v = to_rational(VectorZ(sinv.col(j)));
        rays.push_back(v / level(c, v));
    }

    // Breadth-first ball in W.
    std::vector<std::pair<WeylElement, int>> ball{{WeylElement::identity(c), 0}};
    std::set<std::vector<Integer>> seen;
    auto key = [](const MatrixZ& m) { return std::vector<Integer>(m.data(), m.data() + m.size()); };
    seen.insert(key(ball.front().first.matrix));
    for (std::size_t k = 0; k < ball.size(); ++k) {
        if (ball[k].second >= opt.max_length) continue;
        for (int i = 0; i < c.size(); ++i) {
            WeylElement next = simple_reflection(c, i) * ball[k].first;
            if (seen.insert(key(next.matrix)).second) ball.push_back({next, ball[k].second + 1});
        }
    }

    svg << "<g stroke=\"#333\" stroke-width=\"0.6\">\n";
    for (const auto& [w, len] : ball) {
        std::vector<Eigen::Vector2d> pts;
        bool visible = false;
        for (const auto& r : rays) {
            Eigen::Vector2d p = position(emb, dual_action(w, r));
            pts.push_back(p);
            if (std::abs(p.x()) < opt.radius && std::abs(p.y()) < opt.radius) visible = true;
        }
        if (!visible) continue;
        svg << "<path d=\"";
        if (c.rank() == 1) {
            Eigen::Vector2d a = pts[0], b = pts[1];
            svg << "M" << left.pt(a + Eigen::Vector2d(0, 0.15)) << " L" << left.pt(b + Eigen::Vector2d(0, 0.15)) << " L"
                << left.pt(b - Eigen::Vector2d(0, 0.15)) << " L" << left.pt(a - Eigen::Vector2d(0, 0.15)) << " Z";
        } else {
            for (std::size_t k = 0; k < pts.size(); ++k) svg << (k ? " L" : "M") << left.pt(pts[k]);
            svg << " Z";
        }
        svg << "\" fill=\"" << kPalette[len % 8] << "\"/>\n";
    }
    svg << "</g>\n";

    // Level-zero panel: the finite Weyl fan.
    std::vector<WeylElement> wf{WeylElement::identity(c)};
    seen.clear();
    seen.insert(key(wf.front().matrix));
    for (std::size_t k = 0; k < wf.size(); ++k)
        for (int i = 1; i < c.size(); ++i) {
            WeylElement next = simple_reflection(c, i) * wf[k];
            if (seen.insert(key(next.matrix)).second) wf.push_back(next);
        }
    const double far = opt.radius * 1.5;
    svg << "<g stroke=\"#333\" stroke-width=\"0.6\">\n";
    for (std::size_t k = 0; k < wf.size(); ++k) {
        std::vector<Eigen::Vector2d> pts;
        for (int i = 1; i <= c.rank(); ++i) {
            Eigen::Vector2d p = position(emb, dual_action(wf[k], embed(c, lambda_check(c, i))));
            pts.push_back(p.normalized() * far);
        }
        if (c.rank() == 1) {
            svg << "<path d=\"M" << right.pt({0, 0}) << " L" << right.pt(pts[0]) << "\" stroke=\"" << kFacePalette[k % 6]
                << "\" stroke-width=\"4\" fill=\"none\"/>\n";
        } else {
            svg << "<path d=\"M" << right.pt({0, 0}) << " L" << right.pt(pts[0]) << " L" << right.pt(pts[1])
                << " Z\" fill=\"" << kFacePalette[k % 6] << "\"/>\n";
        }
    }
    svg << "</g>\n";
    svg << "<g stroke=\"#7a0177\" stroke-width=\"2\">\n";
    for (const auto& w : wf)
        for (int i = 1; i <= c.rank(); ++i) {
            Eigen::Vector2d p = position(emb, dual_action(w, embed(c, lambda_check(c, i))));
            svg << "<path d=\"M" << right.pt({0, 0}) << " L" << right.pt(p.normalized() * far) << "\"/>\n";
        }
    svg << "</g>\n";
    svg << "<circle cx=\"" << right.cx << "\" cy=\"" << right.cy << "\" r=\"2\" fill=\"black\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

json sample_fan_points(const CartanData& c, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), kind(0, 2);
    json samples = json::array();
    for (int s = 0; s < count; ++s) {
        Coweight theta(c.size());
        for (;;) {
            for (int i = 0; i < c.size(); ++i) theta(i) = make_rational(num(rng), den(rng));
            int k = kind(rng);
            if (k == 0) theta(0) -= level(c, theta);  // force level zero
            if (!is_zero(theta)) break;
        }
        HeartLocation loc = locate_heart_cone(c, theta);
        samples.push_back({{"theta", coweight_to_json(theta)}, {"upper", heart_to_json(loc.upper)}, {"lower", heart_to_json(loc.lower)}});
    }
    return {{"type", c.type.name()}, {"seed", seed}, {"samples", samples}};
}

int revalidate_fan_points(const CartanData& c, const json& doc)
{
    int bad = 0;
    for (const auto& s : doc.at("samples")) {
        Coweight theta = coweight_from_json(c, s.at("theta"));
        HeartLocation loc = locate_heart_cone(c, theta);
        HeartDescriptor up = heart_from_json(s.at("upper")), lo = heart_from_json(s.at("lower"));
        if (!(loc.upper == up) || !(loc.lower == lo) || !in_heart_cone(c, theta, up) || !in_heart_cone(c, theta, lo)) ++bad;
    }
    return bad;
}

}  // namespace heartlab
