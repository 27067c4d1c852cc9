#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "heartlab/scalar.hpp"

namespace heartlab {

enum class Family { A, D, E };

struct DynkinType {
    Family family = Family::A;
    int rank = 1;
    std::string name() const;
    bool operator==(const DynkinType&) const = default;
};

// "A2", "D4", "E6", ...
DynkinType parse_dynkin(std::string_view text);

// Index sets are vectors of node labels. Node 0 is the affine node and
// I_f = {1..e}. Roots are stored as length e+1 coordinate vectors in the
// simple-root basis of the affine root lattice.
struct CartanData {
    DynkinType type;
    MatrixZ affine;                          // (e+1) x (e+1)
    VectorZ marks;                           // r_i with r_0 = 1
    std::vector<int> kappa;                  // w0(alpha_i) = -alpha_kappa(i), kappa(0) = 0
    std::vector<std::vector<int>> gamma;     // automorphisms of the affine diagram
    std::vector<VectorZ> finite_roots;       // all of Delta_f
    std::vector<VectorZ> positive_roots;     // Delta_f^+
    VectorZ highest_root;

    int rank() const { return static_cast<int>(affine.rows()) - 1; }
    int size() const { return static_cast<int>(affine.rows()); }
    Integer coxeter_number() const { return marks.sum(); }
    MatrixZ finite() const { return affine.bottomRightCorner(rank(), rank()); }
    bool is_finite_root(const VectorZ& v) const;

    std::set<std::vector<Integer>> root_index;
};

CartanData build_cartan(const DynkinType& type);

// Positive roots by saturation from simples; used to derive the affine row.
std::vector<VectorZ> positive_roots_by_saturation(const MatrixZ& finite_cartan);

std::vector<int> finite_nodes(const CartanData& c);
std::vector<int> complement(const CartanData& c, const std::vector<int>& J);
std::vector<std::vector<int>> connected_components(const CartanData& c, const std::vector<int>& nodes);
std::vector<std::vector<int>> all_subsets(const CartanData& c);

// Highest root of the (connected) subsystem spanned by `component`.
VectorZ highest_root_of(const CartanData& c, const std::vector<int>& component);
// delta - highest root of the component
VectorZ alpha_J(const CartanData& c, const std::vector<int>& component);

}  // namespace heartlab
