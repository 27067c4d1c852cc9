#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "heartlab/borel.hpp"
#include "heartlab/elliptic.hpp"
#include "heartlab/preproj.hpp"
#include "heartlab/stability.hpp"

namespace heartlab {

using json = nlohmann::json;

json rational_to_json(const Rational& q);  // ["num","den"]
Rational rational_from_json(const json& j);

json root_to_json(const CartanData& c, const RootVector& v);
RootVector root_from_json(const CartanData& c, const json& j);

json coweight_to_json(const Coweight& theta);
json coweight_to_json(const FiniteCoweight& lam);
// Accepts either basis; lambda coordinates are embedded.
Coweight coweight_from_json(const CartanData& c, const json& j);
FiniteCoweight finite_coweight_from_json(const CartanData& c, const json& j);

// "1/2,3,-1"
VectorQ parse_rational_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

// Signed braid letters; T_0^{-1} is written as the string "-0".
struct BraidLetter {
    int node = 0;
    bool inverse = false;
    bool operator==(const BraidLetter&) const = default;
};
using BraidWord = std::vector<BraidLetter>;
json braid_to_json(const BraidWord& w);
BraidWord braid_from_json(const json& j);
// image of a braid word in W (T_i and its inverse both map to s_i)
WeylElement weyl_image(const CartanData& c, const BraidWord& w);

json heart_to_json(const HeartDescriptor& h);
HeartDescriptor heart_from_json(const json& j);

json normalization_to_json(const NormalizationResult& r);
json arc_to_json(const ArcReport& a);
json slicing_to_json(const SlicingReport& r);

json rep_to_json(const Rep& r);
Rep rep_from_json(const CartanData& c, const json& j);
json hn_to_json(const HNFiltration& hn);

json loop_to_json(const ChevalleyBasis& cb, const LoopElement& x);
LoopElement loop_from_json(const ChevalleyBasis& cb, const json& j);

json character_to_json(const CharacterTable& t);
json classical_report_to_json(const ClassicalReport& r);

}  // namespace heartlab
