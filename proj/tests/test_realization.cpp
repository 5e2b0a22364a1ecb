#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "bt/gallery.hpp"
#include "bt/literal.hpp"
#include "bt/realization.hpp"
#include "oracles.hpp"

using namespace bt;
using json = nlohmann::json;

namespace {

std::vector<std::string> vertex_keys(const SubtreeTruncation& t)
{
    std::vector<std::string> out;
    for (const auto& v : t.vertices) out.push_back(v.key());
    return out;
}

std::vector<std::string> sorted_keys(const std::vector<Pgl2>& gs)
{
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(g.key());
    std::sort(out.begin(), out.end());
    return out;
}

// Z_4 over Q_5 at the standard vertex, with the two ends of its mirror
json single_cyclic()
{
    return json::parse(R"J({
      "field": {"p": 5, "f": 1, "e": 1, "precision": 32},
      "vertices": [{"id": "A", "group": {"type": "cyclic", "n": 4}}],
      "edges": [],
      "rays": [{"id": "a0", "attach": "A", "tail_group": {"type": "cyclic", "n": 4}},
               {"id": "a1", "attach": "A", "tail_group": {"type": "cyclic", "n": 4}}],
      "vertex_map": {"A": "(0; 0)"},
      "ray_ends": {"a0": "0", "a1": "inf"},
      "generators": {"A": {"g": "zeta(4), 0; 0, 1"}}
    })J");
}

}  // namespace

TEST_CASE("serial and parallel translation agree")
{
    const auto F = Field::make(3, 1, 1, 32);
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> dist(-20, 20);
    std::vector<Mat2> gs;
    while (gs.size() < 60) {
        const auto lit = [&] { return PAdic::from_int(F, dist(rng)); };
        Mat2 m{lit(), lit(), lit(), lit()};
        if (!m.det().is_zero()) gs.push_back(m);
    }
    std::vector<BtVertex> base;
    for (const auto& s : star(BtVertex::origin(F))) base.push_back(s.vertex);
    base.push_back(parse_vertex(F, "(3; 1 + pi)"));
    const auto a = translate_serial(gs, base), b = translate_parallel(gs, base);
    REQUIRE(a.size() == b.size());
    for (size_t w = 0; w < a.size(); ++w)
        for (size_t i = 0; i < base.size(); ++i) CHECK(a[w][i] == b[w][i]);
    CHECK(kernel_threads() >= 1);
}

TEST_CASE("orbit trees do not depend on the kernel")
{
    const auto s = free_product(2, 3, 3, 1);
    const auto a = build_orbit_tree(s, 4, s.radius(), Kernel::Serial);
    const auto b = build_orbit_tree(s, 4, s.radius(), Kernel::Parallel);
    CHECK(vertex_keys(a.tree) == vertex_keys(b.tree));
    CHECK(a.tree.edges == b.tree.edges);
    CHECK(a.image == b.image);
    CHECK(orbit_dot(a) == orbit_dot(b));
}

TEST_CASE("a finite vertex group realizes a single star of ends")
{
    const auto s = EmbeddingSpec::from_json(single_cyclic());
    const auto ot = build_orbit_tree(s, 3, 4);
    CHECK(ot.words.counts() == std::vector<size_t>{1, 3, 0, 0});
    CHECK(ot.tree.is_tree());
    CHECK(disjointness_audit(ot).ok());
    const auto br = branch_report(ot);
    CHECK(br.ok());
    CHECK(br.stabilizer_orders == std::vector<int>{4, 4});
    const auto lim = limit_tree_approx(ot, 3, 3);
    CHECK(lim.hyperbolic == 0);
    CHECK(lim.limit_vertices == 0);
    CHECK(sorted_keys(stabilizer_of_vertex(ot, s.iota[0])) == sorted_keys(s.reps[0]));
}

TEST_CASE("randomized cyclic free products")
{
    const std::vector<std::tuple<long, int, int>> pool{{3, 2, 2}, {5, 2, 4}, {2, 3, 3}, {3, 2, 4}, {5, 4, 4},
                                                       {7, 2, 3}, {2, 3, 5}, {5, 2, 3}, {7, 3, 6}};
    std::mt19937 rng(2024);
    std::vector<size_t> pick(pool.size());
    std::iota(pick.begin(), pick.end(), 0);
    std::shuffle(pick.begin(), pick.end(), rng);
    for (size_t k = 0; k < 3; ++k) {
        const auto [p, n, m] = pool[pick[k]];
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(m);
        const auto s = free_product(p, n, m, 1);
        const int L = 4;
        const auto ot = build_orbit_tree(s, L, s.radius());
        CHECK(ot.words.counts() == oracle::amalgam_sphere_sizes(n, m, 1, L));
        CHECK(ot.tree.is_tree());
        CHECK(disjointness_audit(ot).ok());
        const auto q = quotient_graph(ot);
        CHECK(q.classes_consistent);
        CHECK(q.betti == 0);
        CHECK(q.decorations_match);
        const auto br = branch_report(ot);
        std::vector<int> got = br.stabilizer_orders;
        std::sort(got.begin(), got.end());
        std::vector<int> want{n, n, m, m};
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        CHECK(br.genus == 0);
        CHECK(discreteness_audit(ot).discrete());
        for (const char* id : {"A", "B"}) {
            const auto v = static_cast<size_t>(s.tog.index_of(id));
            CHECK(sorted_keys(stabilizer_of_vertex(ot, s.iota[v])) == sorted_keys(s.reps[v]));
        }
    }
}

TEST_CASE("hyperbolic words give a limit tree inside the orbit tree")
{
    const auto s = free_product(3, 2, 2, 1);
    const auto ot = build_orbit_tree(s, 6, s.radius());
    const auto lim = limit_tree_approx(ot, 3, 3);
    CHECK(lim.hyperbolic > 0);
    CHECK(lim.limit_vertices > 0);
    CHECK(lim.ok());
    CHECK(lim.contained == lim.limit_vertices);
}

TEST_CASE("a misplaced mirror breaks the realization")
{
    json j = free_product_json(3, 2, 2, 1);
    j["generators"]["B"]["g"] = "zeta(2), -(zeta(2) - 1); 0, 1";
    const auto s = EmbeddingSpec::from_json(j);
    const auto ot = build_orbit_tree(s, 4, s.radius());
    const auto dis = disjointness_audit(ot);
    const auto q = quotient_graph(ot);
    const bool clean = dis.ok() && q.classes_consistent && q.decorations_match && q.betti == 0;
    CHECK_FALSE(clean);
}

TEST_CASE("dot output")
{
    const auto s = free_product(3, 2, 2, 1);
    const auto ot = build_orbit_tree(s, 2, s.radius());
    const std::string od = orbit_dot(ot), qd = quotient_dot(ot);
    CHECK(od.rfind("graph orbit {", 0) == 0);
    CHECK(qd.rfind("graph quotient {", 0) == 0);
    CHECK(qd.find("Z_2") != std::string::npos);
    CHECK(qd.find("dir=forward") != std::string::npos);
}
