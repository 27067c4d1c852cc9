#include "doctest.h"
#include "support.hpp"

using namespace heartlab;
using namespace heartlab::testing;

TEST_CASE("rationals")
{
    Rational q = make_rational(-3, 6);
    json j = rational_to_json(q);
    CHECK(j == json::array({"-1", "2"}));
    CHECK(rational_from_json(j) == q);
    CHECK(rational_from_json(json("7/3")) == make_rational(7, 3));
    CHECK(rational_from_json(json(4)) == 4);
    CHECK_THROWS(rational_from_json(json::array({"1", "0"})));
}

TEST_CASE("roots and coweights round-trip")
{
    std::mt19937_64 rng(3);
    CartanData c = cartan("D4");
    for (int trial = 0; trial < 30; ++trial) {
        Coweight th = rand_coweight(c, rng);
        CHECK(coweight_from_json(c, coweight_to_json(th)) == th);
        FiniteCoweight lam = rand_finite(c, rng, 5, 4);
        CHECK(finite_coweight_from_json(c, coweight_to_json(lam)) == lam);
        CHECK(coweight_from_json(c, coweight_to_json(lam)) == embed(c, lam));
    }
    RootVector v = delta(c);
    CHECK(root_from_json(c, root_to_json(c, v)) == v);
    CHECK_THROWS(coweight_from_json(c, json{{"basis", "omega"}, {"coords", {1, 2}}}));
    CHECK_THROWS(coweight_from_json(c, json{{"basis", "mu"}, {"coords", {1, 2, 3, 4, 5}}}));
}

TEST_CASE("comma-separated lists")
{
    VectorQ v = parse_rational_list("1/2,-3,0");
    REQUIRE(v.size() == 3);
    CHECK(v(0) == make_rational(1, 2));
    CHECK(v(1) == -3);
    CHECK(parse_int_list("1,3") == std::vector<int>{1, 3});
    CHECK_THROWS(parse_rational_list(""));
    CHECK_THROWS(parse_rational_list("1/0"));
    CHECK_THROWS(parse_int_list("1,x"));
}

TEST_CASE("braid words map to the Weyl group")
{
    CartanData a2 = cartan("A2");
    BraidWord w{{1, false}, {0, true}, {2, false}};
    json j = braid_to_json(w);
    CHECK(j == json::parse(R"([1, "-0", 2])"));
    CHECK(braid_from_json(j) == w);
    CHECK(weyl_image(a2, w) == from_word(a2, {1, 0, 2}));
    // braid relation holds in the image
    BraidWord lhs{{1, false}, {2, false}, {1, false}}, rhs{{2, false}, {1, false}, {2, false}};
    CHECK(weyl_image(a2, lhs) == weyl_image(a2, rhs));
}

TEST_CASE("heart descriptors round-trip")
{
    std::mt19937_64 rng(5);
    CartanData a3 = cartan("A3");
    for (int trial = 0; trial < 40; ++trial) {
        HeartLocation loc = locate_heart_cone(a3, rand_coweight_with_level(a3, rng, trial % 3 - 1));
        CHECK(heart_from_json(heart_to_json(loc.upper)) == loc.upper);
        CHECK(heart_from_json(heart_to_json(loc.lower)) == loc.lower);
    }
    json h = heart_to_json({3, {1, 2}, {2}, 0, HeartFlavor::ReversedPerverse});
    CHECK(h.at("flavor") == "reversed_perverse");
    CHECK(h.at("case") == 3);
}

TEST_CASE("representations round-trip")
{
    CartanData a2 = cartan("A2");
    Rep r;
    r.p = 3;
    r.dim = VectorZ::Ones(3);
    r.dim(1) = 2;
    r.arrows["e01"] = FpMatrix::Ones(2, 1);
    Rep back = rep_from_json(a2, rep_to_json(r));
    CHECK(back.p == 3);
    CHECK(back.dim == r.dim);
    CHECK(arrow_matrix(back, double_quiver_arrows(a2)[0]) == r.arrows["e01"]);
    json bad = rep_to_json(r);
    bad["arrows"]["e03"] = json::array();
    CHECK_THROWS(rep_from_json(a2, bad));
    json wrong = rep_to_json(r);
    wrong["dim"] = {1, 1};
    CHECK_THROWS(rep_from_json(a2, wrong));
}

TEST_CASE("loop elements round-trip")
{
    CartanData a2 = cartan("A2");
    ChevalleyBasis cb = chevalley_basis(a2);
    LoopElement x = LoopElement::monomial(cb.find("alpha1"), -2, 3, make_rational(1, 2)) + LoopElement::central(4, 3)
                    + LoopElement::central_kl(-1, 2, -5);
    json j = loop_to_json(cb, x);
    CHECK(loop_from_json(cb, j) == x);
    CHECK(j.dump().find("c(-1,2)") != std::string::npos);
}

TEST_CASE("reports serialize")
{
    CartanData a2 = cartan("A2");
    SlicingReport s = verify_slicing(a2, lambda_check(a2, 1), {1}, -1, 1);
    json j = slicing_to_json(s);
    CHECK(j.at("arcs").size() == 3);
    CHECK(j.at("ok") == true);
    CHECK(j.at("arcs")[0].at("chamber").at("type") == "Cminus");
    NormalizationResult r = normalize_stability(a2, {theta_zero(a2), Coweight::Zero(3)}, Interval::HalfOpenUp);
    CHECK(normalization_to_json(r).contains("word"));
    CharacterTable t{{{{0, 0, 0}, 1}, 2}};
    CHECK(character_to_json(t).size() == 1);
}
