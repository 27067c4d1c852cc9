#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heartlab/lattice.hpp"

namespace heartlab {

// alpha + n delta with alpha in Delta_f or alpha = 0 (imaginary when n != 0)
struct AffineRoot {
    RootVector alpha;
    Integer n = 0;
    RootVector in_Y(const CartanData& c) const { return alpha + n * delta(c); }
    bool operator==(const AffineRoot& o) const { return alpha == o.alpha && n == o.n; }
};

std::string to_string(const AffineRoot& b);

bool in_Delta_J_k(const CartanData& c, const std::vector<int>& J, const FiniteCoweight& lam, Integer k,
                  const AffineRoot& beta);
bool in_Delta_J(const CartanData& c, const std::vector<int>& J, const AffineRoot& beta);

// Real roots alpha + n delta and imaginary roots n delta with |n| <= n_max.
std::vector<AffineRoot> window_roots(const CartanData& c, Integer n_max);

struct ChainReport {
    bool chain_ok = true;     // Delta_{J,(k)} within Delta_{J,(k+1)} for k < k_max
    bool contained_ok = true; // Delta_{J,(k)} within Delta_J for k <= k_max
    bool union_ok = true;     // every window element of Delta_J has a witness k
    std::vector<std::pair<AffineRoot, Integer>> witnesses;
    std::vector<std::string> failures;
    bool ok() const { return chain_ok && contained_ok && union_ok; }
};

ChainReport check_chain_and_union(const CartanData& c, const std::vector<int>& J, const FiniteCoweight& lam,
                                  Integer n_max, Integer k_max);

struct PositivityReport {
    bool partition_ok = true;  // Delta = Delta_J disjoint-union -Delta_J on the window
    bool closure_ok = true;    // additively closed on the window
    std::vector<std::string> failures;
    bool ok() const { return partition_ok && closure_ok; }
};

PositivityReport positivity_axioms(const CartanData& c, const std::vector<int>& J, Integer n_max);

// (Y-weight, t-degree) -> dimension
using CharacterKey = std::pair<std::vector<Integer>, int>;
using CharacterTable = std::map<CharacterKey, Integer>;

// Sum over the root set (Delta_J, or Delta_{J,(k)} when k is given) of the loop weight spaces, plus K_-.
CharacterTable character_from_roots(const CartanData& c, const std::vector<int>& J, const FiniteCoweight& lam,
                                    std::optional<Integer> k, Integer n_max, int t_max);
// From the explicit subalgebra decomposition of n+_{ell,J}.
CharacterTable character_from_decomposition(const CartanData& c, const std::vector<int>& J, Integer n_max, int t_max);

struct CharacterComparison {
    CharacterTable from_roots;
    CharacterTable from_decomposition;
    bool agree = false;
};

CharacterComparison character_n_ell_J(const CartanData& c, const std::vector<int>& J, const FiniteCoweight& lam,
                                      Integer n_max, int t_max);

// (Y-weight, t-degree, PBW degree) -> number of PBW monomials. Generators are the
// basis elements whose degree lies in the window; PBW degree is capped at max_parts.
using PBWKey = std::tuple<std::vector<Integer>, int, int>;
using PBWTable = std::map<PBWKey, Integer>;

PBWTable pbw_character(const CartanData& c, const std::vector<int>& J, const FiniteCoweight& lam,
                       std::optional<Integer> k, Integer n_max, int t_max, int max_parts);

std::string character_csv(const CartanData& c, const CharacterTable& t);

}  // namespace heartlab
