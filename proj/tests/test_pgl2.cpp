#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bt/literal.hpp"
#include "bt/pgl2.hpp"
#include "oracles.hpp"

using namespace bt;

namespace {

Pgl2 M(const FieldPtr& F, const std::string& s) { return Pgl2(parse_matrix(F, s)); }

// order by repeated multiplication, 0 when past the bound
long brute_order(const Pgl2& g, long bound)
{
    Pgl2 x = g;
    for (long k = 1; k <= bound; ++k) {
        if (x.is_identity()) return k;
        x = x * g;
    }
    return 0;
}

}  // namespace

TEST_CASE("projective classes")
{
    const auto F = Field::make(3, 1, 1, 32);
    CHECK(M(F, "2, 4; 6, 8") == M(F, "1, 2; 3, 4"));
    CHECK(M(F, "3, 0; 0, 3").is_identity());
    CHECK(M(F, "1, 2; 3, 4") != M(F, "1, 2; 3, 5"));
    const Pgl2 g = M(F, "1, 2; 3, 4");
    CHECK((g * g.inverse()).is_identity());
    CHECK_THROWS_AS(M(F, "1, 2; 2, 4"), ArithmeticError);
    CHECK(g.mobius_str().find("*z") != std::string::npos);
}

TEST_CASE("classification")
{
    const auto F = Field::make(2, 2, 1, 32);
    CHECK(classify(M(F, "1, 0; 0, 1")).kind == ElementKind::Identity);
    CHECK(classify(M(F, "1, 1; 0, 1")).kind == ElementKind::Parabolic);
    CHECK(classify(M(F, "2, 0; 0, 1")).kind == ElementKind::Hyperbolic);
    CHECK(classify(M(F, "zeta(3), 0; 0, 1")).kind == ElementKind::Elliptic);
    CHECK(classify(M(F, "0, 1; 1, 0")).kind == ElementKind::Elliptic);
    CHECK(classify(M(F, "1, 1; 1, 0")).kind == ElementKind::Elliptic);
}

TEST_CASE("orders match repeated multiplication")
{
    const auto F = Field::make(2, 4, 1, 48);  // contains zeta(3), zeta(5), zeta(15)
    for (const char* s : {"zeta(3), 0; 0, 1", "zeta(5), 0; 0, 1", "zeta(15), 1; 0, 1", "0, 1; 1, 0", "1, 1; -1, 0",
                          "0, -1; 1, 1", "1 + u, 2; 0, 1"}) {
        const Pgl2 g = M(F, s);
        const auto o = order(g, 200);
        CAPTURE(s);
        if (o.status == OrderResult::Status::Finite)
            CHECK(o.order == brute_order(g, 200));
        else
            CHECK(brute_order(g, 200) == 0);
    }
    CHECK(order(M(F, "2, 0; 0, 1")).status == OrderResult::Status::Infinite);
    CHECK(order(M(F, "1, 1; 0, 1")).status == OrderResult::Status::Infinite);
}

TEST_CASE("fixed points and mirrors")
{
    const auto F = Field::make(3, 2, 1, 32);
    const Pgl2 g = M(F, "zeta(4), 0; 0, 1");
    const auto fp = fixed_points(g);
    REQUIRE(fp.points.size() == 2);
    for (const auto& z : fp.points) CHECK(g(z) == z);
    const Mirror mir = mirror(g);
    for (const auto& v : apartment(mir.z, mir.w, -3, 3)) CHECK(fixed_vertex_test(g, v));

    const auto Q3 = Field::make(3, 1, 1, 32);
    CHECK_THROWS_AS(fixed_points(M(Q3, "0, 1; -1, 0")), FieldError);
    CHECK_THROWS_AS(mirror(M(F, "1, 1; 0, 1")), ArithmeticError);
}

TEST_CASE("fixed radius matches brute force")
{
    for (int e : {1, 2}) {
        const auto F = Field::make(2, 1, e, 32);
        const Pgl2 chi = M(F, "0, 1; 1, 0");
        const long s = fixed_radius(chi);
        CHECK(s == e);
        const Mirror mir = mirror(chi);
        for (const auto& v : oracle::ball(BtVertex::origin(F), 4))
            CHECK(fixed_vertex_test(chi, v) == (distance_to_apartment(v, mir.z, mir.w) <= s));
    }
    const auto F5 = Field::make(5, 1, 1, 32);
    CHECK(fixed_radius(M(F5, "zeta(4), 0; 0, 1")) == 0);
    CHECK_THROWS_AS(fixed_radius(M(Field::make(3, 1, 1, 32), "1, 1; 0, 1")), ArithmeticError);
}

TEST_CASE("neighbour action of a tame elliptic element")
{
    const auto F = Field::make(2, 2, 1, 32);
    const auto audit = neighbor_action_audit(M(F, "zeta(3), 0; 0, 1"), BtVertex::origin(F));
    CHECK(audit.fixed == 2);
    CHECK(audit.free_off_mirror);
    REQUIRE(audit.orbits.size() == 3);
    std::vector<size_t> sizes;
    for (const auto& o : audit.orbits) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 1, 3});
    CHECK_THROWS_AS(neighbor_action_audit(M(F, "zeta(3), 0; 0, 1"), parse_vertex(F, "(1; 1)")), ArithmeticError);
}

TEST_CASE("hyperbolic axis")
{
    const auto F = Field::make(3, 1, 1, 32);
    const Axis ax = hyperbolic_axis(M(F, "9, 0; 0, 1"));
    CHECK(ax.translation_length == 2);
    CHECK(ax.attracting == parse_point(F, "0"));
    CHECK(ax.repelling.is_infinity());
    const Pgl2 h = M(F, "9, 0; 0, 1");
    for (const auto& v : apartment(ax.attracting, ax.repelling, -2, 2)) CHECK(distance(v, h(v)) == 2);
    CHECK_THROWS_AS(hyperbolic_axis(M(F, "1, 1; 0, 1")), ArithmeticError);
}

TEST_CASE("one common fixed point gives a parabolic commutator")
{
    const auto F = Field::make(3, 1, 1, 32);
    const auto v = parabolic_commutator_check(M(F, "3, 0; 0, 1"), M(F, "3, 1; 0, 1"));
    CHECK(v.common == 1);
    CHECK(v.obstruction);
    REQUIRE(v.commutator);
    CHECK(v.commutator->kind == ElementKind::Parabolic);
    const auto w = parabolic_commutator_check(M(F, "3, 0; 0, 1"), M(F, "9, 0; 0, 1"));
    CHECK(w.common == 2);
    CHECK_FALSE(w.obstruction);
}
