#include "doctest.h"
#include "support.hpp"

using namespace heartlab;
using namespace heartlab::testing;

namespace {

AffineRoot root(const CartanData& c, std::initializer_list<Integer> finite, Integer n)
{
    AffineRoot b{RootVector::Zero(c.size()), n};
    int i = 1;
    for (Integer x : finite) b.alpha(i++) = x;
    return b;
}

}  // namespace

TEST_CASE("membership in Delta_J for A2")
{
    CartanData a2 = cartan("A2");
    std::vector<int> J{1};
    // alpha_1 lies outside the Levi of {2}: every delta-shift belongs
    CHECK(in_Delta_J(a2, J, root(a2, {1, 0}, -5)));
    CHECK(in_Delta_J(a2, J, root(a2, {1, 1}, 3)));
    CHECK_FALSE(in_Delta_J(a2, J, root(a2, {-1, 0}, 3)));
    // Levi roots +-alpha_2
    CHECK(in_Delta_J(a2, J, root(a2, {0, -1}, 0)));
    CHECK_FALSE(in_Delta_J(a2, J, root(a2, {0, 1}, 0)));
    CHECK(in_Delta_J(a2, J, root(a2, {0, 1}, -1)));
    CHECK_FALSE(in_Delta_J(a2, J, root(a2, {0, -1}, 1)));
    // imaginary roots
    CHECK(in_Delta_J(a2, J, root(a2, {0, 0}, -1)));
    CHECK_FALSE(in_Delta_J(a2, J, root(a2, {0, 0}, 1)));
    CHECK_FALSE(in_Delta_J(a2, J, root(a2, {0, 0}, 0)));
    // J empty: the negative affine roots
    for (const auto& b : window_roots(a2, 3)) CHECK(in_Delta_J(a2, {}, b) == is_negative(b.in_Y(a2)));
}

TEST_CASE("truncations are shears of the k = 0 set")
{
    std::mt19937_64 rng(41);
    for (const char* t : {"A2", "A3", "D4"}) {
        CartanData c = cartan(t);
        for (const auto& J : all_subsets(c)) {
            FiniteCoweight lam = sum_lambda(c, J);
            for (const auto& b : window_roots(c, 4))
                for (Integer k = 0; k <= 3; ++k) {
                    Rational shift = Rational(2 * k) * pairing(c, lam, b.alpha);
                    AffineRoot back{b.alpha, b.n - floor_to_integer(shift)};
                    CHECK(in_Delta_J_k(c, J, lam, k, b) == in_Delta_J_k(c, J, lam, 0, back));
                }
        }
    }
}

TEST_CASE("chains, unions and positivity on windows")
{
    for (const char* t : {"A1", "A2", "A3"}) {
        CAPTURE(t);
        CartanData c = cartan(t);
        for (const auto& J : all_subsets(c)) {
            FiniteCoweight lam = sum_lambda(c, J);
            ChainReport ch = check_chain_and_union(c, J, lam, 4, 6);
            CHECK(ch.ok());
            for (const auto& [b, k] : ch.witnesses) CHECK(in_Delta_J_k(c, J, lam, k, b));
            PositivityReport pos = positivity_axioms(c, J, 4);
            CHECK(pos.ok());
        }
    }
    CartanData a2 = cartan("A2");
    CHECK_THROWS(check_chain_and_union(a2, {1}, lambda_check(a2, 2), 2, 2));
}

TEST_CASE("window roots")
{
    CartanData a2 = cartan("A2");
    auto w = window_roots(a2, 2);
    CHECK(w.size() == 5 * 6 + 4);
    for (const auto& b : w) CHECK(is_root(a2, b.in_Y(a2)));
    CHECK(to_string(root(a2, {1, -1}, 0)) == "(1,-1; 0)");
}

TEST_CASE("character of n+_{ell,J} two ways")
{
    for (const char* t : {"A1", "A2", "A3", "D4"}) {
        CartanData c = cartan(t);
        for (const auto& J : all_subsets(c)) {
            CharacterComparison cmp = character_n_ell_J(c, J, sum_lambda(c, J), 2, 2);
            CHECK(cmp.agree);
        }
    }
    CartanData a2 = cartan("A2");
    std::string csv = character_csv(a2, character_from_roots(a2, {1}, lambda_check(a2, 1), std::nullopt, 1, 0));
    CHECK(csv.rfind("y0,y1,y2,t_degree,dim\n", 0) == 0);
}

TEST_CASE("PBW counts")
{
    CartanData a2 = cartan("A2");
    for (const auto& J : all_subsets(a2)) {
        FiniteCoweight lam = sum_lambda(a2, J);
        CharacterTable gens = character_from_roots(a2, J, lam, Integer(1), 1, 1);
        PBWTable dp = pbw_character(a2, J, lam, Integer(1), 1, 1, 3);
        PBWTable brute = brute_pbw(gens, a2.size(), 1, 3);
        std::erase_if(dp, [](const auto& kv) { return kv.second == 0; });
        CHECK(dp == brute);
        // PBW degree one is the Lie character
        for (const auto& [k, d] : gens) CHECK(dp[{k.first, k.second, 1}] == d);
        std::size_t ones = 0;
        for (const auto& [k, d] : dp) ones += std::get<2>(k) == 1;
        CHECK(ones == gens.size());
    }
    CHECK_THROWS(pbw_character(a2, {}, sum_lambda(a2, {}), std::nullopt, 1, 1, 7));
}
