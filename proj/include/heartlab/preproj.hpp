#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heartlab/stability.hpp"

namespace heartlab {

// Entries are kept reduced into [0, p).
using FpMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

struct Arrow {
    int src = 0;
    int dst = 0;
    bool star = false;
    std::string key() const;
};

// Orientation Omega: e_ij : i -> j for every edge with i < j; e_ij* goes back.
std::vector<Arrow> double_quiver_arrows(const CartanData& c);

struct Rep {
    int p = 2;
    VectorZ dim;
    std::map<std::string, FpMatrix> arrows;  // omitted keys are zero maps
};

struct Validation {
    bool ok = true;
    std::string reason;
};

Validation validate(const CartanData& c, const Rep& rep);
FpMatrix arrow_matrix(const Rep& rep, const Arrow& a);
bool satisfies_relation(const CartanData& c, const Rep& rep);
bool is_nilpotent(const CartanData& c, const Rep& rep);

// Graded subspace closed under every arrow; each space is an RREF basis (rows).
struct Submodule {
    std::vector<FpMatrix> spaces;
    VectorZ dim;
    bool operator==(const Submodule& o) const;
};

inline constexpr Integer kMaxSubmoduleDim = 6;

std::vector<FpMatrix> all_subspaces(int p, int d);
std::vector<Submodule> enumerate_submodules(const CartanData& c, const Rep& rep);
Rep quotient(const CartanData& c, const Rep& rep, const Submodule& sub);
bool contains(const Submodule& big, const Submodule& small, int p);

bool is_semistable(const CartanData& c, const Rep& rep, const Coweight& theta);

struct HNFiltration {
    std::vector<VectorZ> factor_dims;  // first factor has the largest slope
    std::vector<Rational> slopes;      // strictly decreasing
    std::vector<VectorZ> chain_dims;   // cumulative dims: M_1, M_1 + M_2, ..., M
};

HNFiltration hn_filtration(const CartanData& c, const Rep& rep, const Coweight& theta);

struct Endpoint {
    std::optional<Rational> value;  // nullopt = infinity of the matching sign
    bool closed = false;
};

struct SlopeInterval {
    Endpoint lower;
    Endpoint upper;
    bool contains(const Rational& x) const;
};

bool stratum_membership(const CartanData& c, const Rep& rep, const Coweight& theta, const SlopeInterval& kappa);

// Fp helpers
int mod_p(long long x, int p);
int rank_mod_p(FpMatrix m, int p);
FpMatrix rref_mod_p(FpMatrix m, int p);

}  // namespace heartlab
