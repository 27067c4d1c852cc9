#include "heartlab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace heartlab {

ComplexQ evaluate(const CentralCharge& z, const RootVector& v) { return {-pairing(z.theta, v), pairing(z.omega, v)}; }

bool in_upper_halfplane(const ComplexQ& z) { return z.im > 0 || (z.im == 0 && z.re < 0); }
bool in_lower_closed_halfplane(const ComplexQ& z) { return z.im > 0 || (z.im == 0 && z.re > 0); }

bool in_hreg(const CartanData& c, const CentralCharge& z)
{
    ComplexQ zd = evaluate(z, delta(c));
    if (zd.re == 0 && zd.im == 0) return false;
    for (const auto& a : c.finite_roots) {
        ComplexQ za = evaluate(z, a);
        // Z(a) + n Z(delta) = 0 for some integer n
        Rational n = zd.re != 0 ? -za.re / zd.re : -za.im / zd.im;
        if (!is_integral(n)) continue;
        if (za.re + n * zd.re == 0 && za.im + n * zd.im == 0) return false;
    }
    return true;
}

bool is_stability_function(const CartanData& c, const CentralCharge& z, const std::vector<int>& J, HeartFlavor flavor,
                           Interval interval)
{
    if (flavor == HeartFlavor::Nilp) {
        if (!J.empty()) return false;
        for (int i = 0; i < c.size(); ++i) {
            ComplexQ v = evaluate(z, simple_class(c, i));
            bool in = interval == Interval::HalfOpenUp ? in_upper_halfplane(v) : in_lower_closed_halfplane(v);
            if (!in) return false;
        }
        return true;
    }
    if (J.empty()) return false;
    if (level(c, z.omega) != 0 || level(c, z.theta) <= 0) return false;
    std::vector<int> jc = complement(c, J);
    for (int i : J)
        if (z.omega(i) <= 0) return false;
    for (int i : jc)
        if (z.omega(i) != 0 || z.theta(i) >= 0) return false;
    for (const auto& comp : connected_components(c, jc))
        if (pairing(z.theta, RootVector(delta(c) + highest_root_of(c, comp))) <= 0) return false;
    return true;
}

CentralCharge act(const WeylElement& w, const CentralCharge& z) { return {dual_action(w, z.theta), dual_action(w, z.omega)}; }

CentralCharge shifted(const CentralCharge& z, int k)
{
    if (k % 2 == 0) return z;
    return {-z.theta, -z.omega};
}

NormalizationResult normalize_stability(const CartanData& c, const CentralCharge& z, Interval interval)
{
    if (!in_hreg(c, z)) throw std::domain_error("central charge is not in h_reg");
    NormalizationResult r;
    r.element = WeylElement::identity(c);
    CentralCharge cur = z;
    auto apply = [&](const WeylElement& w) {
        cur = act(w, cur);
        r.element = w * r.element;
    };
    const bool up = interval == Interval::HalfOpenUp;

    Rational lw = level(c, cur.omega);
    if (lw != 0) {
        if (lw < 0) {
            r.shift = 1;
            cur = shifted(cur, 1);
        }
        apply(normalize_to_dominant(c, cur.omega).element);
        std::vector<RootVector> walls;
        for (const auto& s : cplus_walls(c))
            if (pairing(cur.omega, s) == 0) walls.push_back(up ? s : RootVector(-s));
        apply(descend(c, cur.theta, walls).element);
        r.flavor = HeartFlavor::Nilp;
    } else if (is_zero(cur.omega)) {
        // Z is real: all simples must share one sign, so theta goes to C^+ (up) or C^- (down).
        Rational lt = level(c, cur.theta);
        if ((lt < 0) == up) {
            r.shift = 1;
            cur = shifted(cur, 1);
        }
        apply(normalize_to_dominant(c, cur.theta).element);
        r.flavor = HeartFlavor::Nilp;
    } else {
        if (level(c, cur.theta) < 0) {
            r.shift = 1;
            cur = shifted(cur, 1);
        }
        apply(normalize_to_C0(c, cur.omega).element);
        for (int i = 1; i <= c.rank(); ++i)
            if (cur.omega(i) > 0) r.J.push_back(i);
        apply(normalize_to_DJ(c, cur.theta, r.J).element);
        r.flavor = up ? HeartFlavor::Perverse : HeartFlavor::ReversedPerverse;
    }
    r.word = reduced_word(c, r.element);
    r.normalized = cur;
    return r;
}

Coweight theta_zero(const CartanData& c) { return dual_action(longest_element(c), rho_check(c)); }

Rational dimension(const CartanData& c, const RootVector& d) { return pairing(theta_zero(c), d); }

SlopeFunction::SlopeFunction(const CartanData& c, const Coweight& theta)
    : twisted_(dual_action(extended_longest_element(c), theta)), theta0_(theta_zero(c))
{
}

Rational SlopeFunction::operator()(const RootVector& d) const
{
    Rational dim = pairing(theta0_, d);
    if (dim == 0) throw std::domain_error("slope of a class of dimension zero");
    return pairing(twisted_, d) / dim;
}

Rational slope(const CartanData& c, const Coweight& theta, const RootVector& d) { return SlopeFunction(c, theta)(d); }

CentralCharge bridgeland_charge(const CartanData& c, const FiniteCoweight& lam)
{
    return {Coweight(-embed(c, lam)), theta_zero(c)};
}

double t_index(const CartanData& c, Integer n)
{
    return std::atan(static_cast<double>(n) * static_cast<double>(c.coxeter_number())) / std::numbers::pi;
}

Coweight arc_direction(const CartanData& c, const FiniteCoweight& lam, Integer n)
{
    Coweight t0 = theta_zero(c);
    Coweight l = embed(c, lam);
    Rational nh = Rational(n) * Rational(c.coxeter_number());
    return n >= 0 ? Coweight(t0 + nh * l) : Coweight(-t0 - nh * l);
}

SlicingReport verify_slicing(const CartanData& c, const FiniteCoweight& lam, const std::vector<int>& J, Integer n_min,
                             Integer n_max)
{
    if (!is_piJ_ample(c, lam, J)) throw std::invalid_argument("coweight is not ample for J");
    SlicingReport rep;
    rep.ok = true;
    Coweight e = embed(c, lam);
    for (Integer n = n_min; n <= n_max; ++n) {
        ArcReport a;
        a.n = n;
        a.direction = arc_direction(c, lam, n);
        // l_lam^n as a matrix; its dual action undoes l_lam^{-n}
        MatrixQ id = MatrixQ::Identity(c.size(), c.size());
        MatrixQ ln_inv = id - Rational(n) * to_rational(delta(c)) * e.transpose();
        Coweight back = ln_inv.transpose() * a.direction;
        a.chamber = n >= 0 ? ChamberKind::Cplus : ChamberKind::Cminus;
        a.in_sheared_chamber = in_chamber_interior(c, back, a.chamber);
        HeartLocation loc = locate_heart_cone(c, a.direction);
        a.word = loc.upper.word;
        a.located_consistently = loc.upper.heart_case == (n >= 0 ? 1 : 2) && loc.upper == loc.lower
                                 && in_heart_cone(c, a.direction, loc.upper);
        a.ok = a.in_sheared_chamber && a.located_consistently;
        rep.ok = rep.ok && a.ok;
        rep.arcs.push_back(a);
    }
    HeartLocation mid = locate_heart_cone(c, e);
    std::vector<int> js = J;
    std::sort(js.begin(), js.end());
    rep.midpoint_ok = mid.upper == HeartDescriptor{3, {}, js, 0, HeartFlavor::Perverse}
                      && mid.lower == HeartDescriptor{3, {}, js, 0, HeartFlavor::ReversedPerverse};
    rep.ok = rep.ok && rep.midpoint_ok;
    return rep;
}

}  // namespace heartlab
