#pragma once

#include <string>
#include <vector>

#include "heartlab/weyl.hpp"

namespace heartlab {

enum class ChamberKind { Cplus, Cminus, C0, C0J, DJ };

bool in_chamber(const CartanData& c, const Coweight& theta, ChamberKind kind, const std::vector<int>& J = {});
// strict versions of every defining inequality
bool in_chamber_interior(const CartanData& c, const Coweight& theta, ChamberKind kind);

// Reflect theta across violated walls until theta(wall) >= 0 for every wall.
// element * theta_in == theta_out.
struct WallDescent {
    Coweight theta;
    WeylElement element;
    std::vector<RootVector> reflections;  // in order of application
};

WallDescent descend(const CartanData& c, const Coweight& theta, const std::vector<RootVector>& walls);

// Walls of C^+: theta([S_i]) >= 0.
std::vector<RootVector> cplus_walls(const CartanData& c);

struct DominantNormalization {
    WeylElement element;  // w with w . theta = theta_out
    std::vector<int> word;
    Coweight theta;
    ChamberKind chamber = ChamberKind::Cplus;
};

// Into C^+ when (theta, delta) > 0, into C^- when (theta, delta) < 0.
DominantNormalization normalize_to_dominant(const CartanData& c, const Coweight& theta);
// W_f descent into C^0 for level-zero theta.
DominantNormalization normalize_to_C0(const CartanData& c, const Coweight& theta);

struct DJNormalization {
    std::vector<Generator> generators;  // wJ_generators(c, J)
    GeneratorWord word;                 // evaluates to element
    WeylElement element;
    Coweight theta;
};

// Lemma-style normalization into D_J, one connected component of I_f \ J at a time.
DJNormalization normalize_to_DJ(const CartanData& c, const Coweight& theta, const std::vector<int>& J);

enum class HeartFlavor { Nilp, Perverse, ReversedPerverse };
std::string to_string(HeartFlavor f);
HeartFlavor parse_flavor(const std::string& s);

// case 1: RT_w(H); case 2: LT_w(H)[-1]; case 3: RT_w(P_C(X/X_J)) or RT_w(Pbar_C(X/X_J))
struct HeartDescriptor {
    int heart_case = 1;
    std::vector<int> word;
    std::vector<int> J;
    int shift = 0;
    HeartFlavor flavor = HeartFlavor::Nilp;
    bool operator==(const HeartDescriptor&) const = default;
};

struct HeartLocation {
    HeartDescriptor upper;  // H^theta
    HeartDescriptor lower;  // H_theta
};

HeartLocation locate_heart_cone(const CartanData& c, const Coweight& theta);

// Whether theta lies in the heart cone named by the descriptor.
bool in_heart_cone(const CartanData& c, const Coweight& theta, const HeartDescriptor& h);

// Shortest element of w W_K, K a set of finite nodes.
WeylElement minimal_coset_representative(const CartanData& c, const WeylElement& w, const std::vector<int>& K);

}  // namespace heartlab
