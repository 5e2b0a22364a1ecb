#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "bt/groups.hpp"

using namespace bt;

namespace {

void check_axioms(const FiniteGroup& G)
{
    const int n = G.size();
    for (int x = 0; x < n; ++x) {
        CHECK(G.mul(0, x) == x);
        CHECK(G.mul(x, 0) == x);
        CHECK(G.mul(x, G.inv(x)) == 0);
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) CHECK(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
    }
}

}  // namespace

TEST_CASE("cyclic groups")
{
    const auto G = FiniteGroup::cyclic(6);
    check_axioms(G);
    CHECK(G.label() == "Z_6");
    CHECK(G.is_cyclic());
    for (int x = 0; x < 6; ++x) CHECK(G.order(x) == 6 / std::gcd(x, 6));
    CHECK(G.pow(1, 6) == 0);
    CHECK(FiniteGroup::cyclic(1).size() == 1);
}

TEST_CASE("dihedral groups")
{
    const auto D = FiniteGroup::dihedral(5);
    check_axioms(D);
    CHECK(D.size() == 10);
    CHECK(D.label() == "D_5");
    CHECK_FALSE(D.is_cyclic());
    const int r = 1, s = 5;
    CHECK(D.order(r) == 5);
    CHECK(D.order(s) == 2);
    CHECK(D.mul(D.mul(s, r), s) == D.inv(r));
    REQUIRE(D.find("r"));
    REQUIRE(D.find("s"));
    CHECK(*D.find("s") == s);
}

TEST_CASE("table groups")
{
    // Klein four group
    const std::vector<std::vector<int>> mul{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const auto V = FiniteGroup::table({"1", "a", "b", "ab"}, mul, {"a", "b"});
    check_axioms(V);
    CHECK(V.label() == "G_4");
    CHECK_FALSE(V.is_cyclic());
    CHECK_THROWS_AS(FiniteGroup::table({"1", "a"}, {{0, 1}, {1, 1}}, {"a"}), std::invalid_argument);
}

TEST_CASE("extending generator images")
{
    const auto Z2 = FiniteGroup::cyclic(2), Z6 = FiniteGroup::cyclic(6), D3 = FiniteGroup::dihedral(3);
    const auto good = extend_generators(Z2, Z6, {3});
    CHECK(good.homomorphism);
    CHECK(good.injective);
    const auto bad = extend_generators(Z2, Z6, {1});
    CHECK_FALSE(bad.homomorphism);
    CHECK_FALSE(bad.problem.empty());
    const auto into_d3 = extend_generators(Z2, D3, {*D3.find("s")});
    CHECK(into_d3.homomorphism);
    CHECK(into_d3.injective);
    const auto trivial = extend_generators(Z6, Z2, {1});
    CHECK(trivial.homomorphism);
    CHECK_FALSE(trivial.injective);
}
