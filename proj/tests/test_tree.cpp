#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "bt/literal.hpp"
#include "bt/tree.hpp"
#include "oracles.hpp"

using namespace bt;

namespace {

std::set<std::string> keys(const std::vector<BtVertex>& vs)
{
    std::set<std::string> out;
    for (const auto& v : vs) out.insert(v.key());
    return out;
}

}  // namespace

TEST_CASE("star has q + 1 distinct neighbours at distance one")
{
    for (auto [p, f, e] : {std::tuple<long, int, int>{2, 1, 1}, {3, 1, 1}, {2, 2, 1}, {2, 1, 2}, {5, 1, 1}}) {
        const auto F = Field::make(p, f, e, 32);
        const BtVertex v = parse_vertex(F, "(2; 1 + pi)");
        const auto st = star(v);
        CHECK(static_cast<long>(st.size()) == F->q() + 1);
        CHECK(keys([&] {
                  std::vector<BtVertex> vs;
                  for (const auto& s : st) vs.push_back(s.vertex);
                  return vs;
              }()).size() == st.size());
        for (const auto& s : st) {
            CHECK(distance(v, s.vertex) == 1);
            bool back = false;
            for (const auto& t : star(s.vertex)) back = back || t.vertex == v;
            CHECK(back);
        }
    }
}

TEST_CASE("distance agrees with breadth-first search")
{
    const auto F = Field::make(2, 1, 1, 32);
    const BtVertex o = BtVertex::origin(F);
    const auto ball = oracle::ball(o, 4);
    CHECK(ball.size() == 1 + 3 + 6 + 12 + 24);
    for (const auto& v : ball)
        for (const auto& w : {ball[0], ball[5], ball[17], ball[40]}) CHECK(distance(v, w) == oracle::bfs_distance(v, w, 8));
}

TEST_CASE("geodesics are paths of the right length")
{
    const auto F = Field::make(3, 1, 1, 32);
    const BtVertex v = parse_vertex(F, "(3; 1 + 2*pi)");
    const BtVertex w = parse_vertex(F, "(-2; 0)");
    const auto g = geodesic(v, w);
    REQUIRE(static_cast<long>(g.size()) == distance(v, w) + 1);
    CHECK(g.front() == v);
    CHECK(g.back() == w);
    for (size_t i = 0; i + 1 < g.size(); ++i) CHECK(distance(g[i], g[i + 1]) == 1);
}

TEST_CASE("apartments and projections")
{
    const auto F = Field::make(2, 1, 1, 32);
    const ProjPoint zero = parse_point(F, "0"), inf = parse_point(F, "inf");
    const ProjPoint one = parse_point(F, "1"), mone = parse_point(F, "-1");
    const auto ap = apartment(zero, inf, -3, 3);
    REQUIRE(ap.size() == 7);
    for (const auto& v : ap) CHECK(distance_to_apartment(v, zero, inf) == 0);
    for (size_t i = 0; i + 1 < ap.size(); ++i) CHECK(distance(ap[i], ap[i + 1]) == 1);
    CHECK(apartment_distance(zero, inf, one, mone) == 1);
    CHECK(apartment_distance(zero, one, parse_point(F, "4"), inf) == 0);
    const BtVertex o = BtVertex::origin(F);
    const BtVertex pr = apartment_projection(one, mone, o);
    CHECK(distance(o, pr) == 1);
    CHECK(distance_to_apartment(o, one, mone) == 1);
    const BtVertex c = tripod_centre(zero, one, inf);
    CHECK(c == o);
}

TEST_CASE("half-lines converge to their end")
{
    const auto F = Field::make(3, 1, 1, 32);
    const ProjPoint z = parse_point(F, "1 + 3 + 9");
    const auto h = halfline_toward(BtVertex::origin(F), z, 6);
    REQUIRE(h.size() == 6);
    for (size_t k = 0; k < h.size(); ++k) {
        CHECK(distance(BtVertex::origin(F), h[k]) == static_cast<long>(k + 1));
        CHECK(distance_to_apartment(h[k], z, parse_point(F, "inf")) == 0);
    }
    CHECK(step_toward(BtVertex::origin(F), z) == h[0]);
}

TEST_CASE("tree of ends is the union of apartments cut to a ball")
{
    const auto F = Field::make(2, 1, 1, 32);
    std::vector<ProjPoint> L{parse_point(F, "0"), parse_point(F, "1"), parse_point(F, "inf"), parse_point(F, "6")};
    const long R = 4;
    const auto t = tree_of_ends(L, R);
    REQUIRE(t.centre);
    CHECK(t.is_tree());
    // membership oracle: within R of the centre and on some apartment ]a, b[
    for (const auto& v : oracle::ball(*t.centre, R)) {
        bool on = false;
        for (size_t i = 0; i < L.size(); ++i)
            for (size_t j = i + 1; j < L.size(); ++j) on = on || distance_to_apartment(v, L[i], L[j]) == 0;
        CHECK(t.contains(v) == on);
    }
    CHECK(t.ends.size() == L.size());
    CHECK(tree_of_ends({L[0]}, 3).empty());
}

TEST_CASE("canonical vertex order and dot output")
{
    const auto F = Field::make(2, 1, 1, 32);
    auto t = tree_of_ends({parse_point(F, "0"), parse_point(F, "inf")}, 2);
    CHECK(std::is_sorted(t.vertices.begin(), t.vertices.end()));
    CHECK(t.vertices.size() == 5);
    CHECK(t.edges.size() == 4);
    const std::string dot = to_dot(t);
    CHECK(dot.rfind("graph T {", 0) == 0);
    CHECK(dot.find("(0; 0)") != std::string::npos);
    CHECK(to_dot(t) == dot);
}

TEST_CASE("assemble rejects nothing and detects cycles")
{
    const auto F = Field::make(2, 1, 1, 32);
    const BtVertex o = BtVertex::origin(F);
    const auto st = star(o);
    auto t = SubtreeTruncation::assemble({o, st[0].vertex, st[1].vertex}, {{o, st[0].vertex}, {st[1].vertex, o}});
    CHECK(t.is_tree());
    auto u = SubtreeTruncation::assemble({o, st[0].vertex, st[1].vertex},
                                         {{o, st[0].vertex}, {st[1].vertex, o}, {st[0].vertex, st[1].vertex}});
    CHECK_FALSE(u.is_tree());
}
