#pragma once

#include <vector>

#include "heartlab/chambers.hpp"

namespace heartlab {

// Z = -theta + i omega, so Z(v) = -(theta, v) + i (omega, v).
struct CentralCharge {
    Coweight theta;
    Coweight omega;
};

struct ComplexQ {
    Rational re;
    Rational im;
};

ComplexQ evaluate(const CentralCharge& z, const RootVector& v);
// {r e^{i pi phi} : r > 0, phi in (0,1]}
bool in_upper_halfplane(const ComplexQ& z);
// {r e^{i pi phi} : r > 0, phi in [0,1)}
bool in_lower_closed_halfplane(const ComplexQ& z);

bool in_hreg(const CartanData& c, const CentralCharge& z);

enum class Interval { HalfOpenUp, HalfOpenDown };  // (0,1] and [0,1)

// Nilp (J empty): every simple class lands in the half plane for the interval.
// Perverse / ReversedPerverse (J nonempty): omega in the relative interior of C0_J
// and theta strictly inside D_J.
bool is_stability_function(const CartanData& c, const CentralCharge& z, const std::vector<int>& J, HeartFlavor flavor,
                           Interval interval = Interval::HalfOpenUp);

CentralCharge act(const WeylElement& w, const CentralCharge& z);
CentralCharge shifted(const CentralCharge& z, int k);  // Z[k] = (-1)^k Z

struct NormalizationResult {
    WeylElement element;  // element . Z[shift] is normalized
    std::vector<int> word;
    int shift = 0;
    std::vector<int> J;
    HeartFlavor flavor = HeartFlavor::Nilp;
    CentralCharge normalized;
};

NormalizationResult normalize_stability(const CartanData& c, const CentralCharge& z, Interval interval);

// theta_0 = w0 rho-check
Coweight theta_zero(const CartanData& c);
Rational dimension(const CartanData& c, const RootVector& d);

// mu(d) = (w~0 theta, d) / (w0 rho-check, d)
class SlopeFunction {
public:
    SlopeFunction(const CartanData& c, const Coweight& theta);
    Rational operator()(const RootVector& d) const;
    const Coweight& twisted() const { return twisted_; }

private:
    Coweight twisted_;
    Coweight theta0_;
};

Rational slope(const CartanData& c, const Coweight& theta, const RootVector& d);

// Z_lam = lam + i theta_0
CentralCharge bridgeland_charge(const CartanData& c, const FiniteCoweight& lam);

// t_n = arctan(n h) / pi
double t_index(const CartanData& c, Integer n);
// representative of theta_{t_n} (n >= 0) or theta_{1 + t_n} (n < 0)
Coweight arc_direction(const CartanData& c, const FiniteCoweight& lam, Integer n);

struct ArcReport {
    Integer n = 0;
    Coweight direction;
    ChamberKind chamber = ChamberKind::Cplus;
    std::vector<int> word;  // heart cone containing the direction
    bool in_sheared_chamber = false;
    bool located_consistently = false;
    bool ok = false;
};

struct SlicingReport {
    std::vector<ArcReport> arcs;
    bool midpoint_ok = false;  // lam itself locates to (P_C(X/X_J), Pbar_C(X/X_J))
    bool ok = false;
};

SlicingReport verify_slicing(const CartanData& c, const FiniteCoweight& lam, const std::vector<int>& J,
                             Integer n_min, Integer n_max);

}  // namespace heartlab
