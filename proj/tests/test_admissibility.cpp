#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bt/admissibility.hpp"
#include "bt/gallery.hpp"
#include "bt/literal.hpp"

using namespace bt;
using json = nlohmann::json;

namespace {

Verdict verdict_of(const CheckReport& r, int k) { return r.conditions[k - 1].verdict; }

// one Z_3 vertex over F_4 with a single end: the star of the vertex has two
// fixed neighbours on the mirror but T offers only one edge
json lonely_vertex()
{
    return json::parse(R"J({
      "field": {"p": 2, "f": 2, "e": 1, "precision": 32},
      "vertices": [{"id": "A", "group": {"type": "cyclic", "n": 3}}],
      "edges": [],
      "rays": [{"id": "a0", "attach": "A", "tail_group": {"type": "cyclic", "n": 3}}],
      "vertex_map": {"A": "(0; 0)"},
      "ray_ends": {"a0": "0"},
      "generators": {"A": {"g": "zeta(3), 0; 0, 1"}}
    })J");
}

}  // namespace

TEST_CASE("spec parsing")
{
    const auto s = free_product(3, 2, 2, 1);
    CHECK(s.field->p() == 3);
    CHECK(s.tog.vertices.size() == 7);
    CHECK(s.iota.size() == s.tog.vertices.size());
    CHECK(s.iota[static_cast<size_t>(s.tog.index_of("A"))] == parse_vertex(s.field, "(1; 0)"));
    CHECK(s.reps[static_cast<size_t>(s.tog.index_of("A"))].size() == 2);
    CHECK(s.nonidentity_elements().size() == 2);
    CHECK(s.default_radius() == 8);
    CHECK(s.to_json() == free_product_json(3, 2, 2, 1));
}

TEST_CASE("rays continue toward their ends")
{
    const auto s = free_product(5, 2, 4, 1);
    const int r = s.tog.ray_index("b1");
    const ProjPoint inf = ProjPoint::infinity(s.field);
    BtVertex prev = s.iota[static_cast<size_t>(s.tog.index_of("B"))];
    for (long k = 1; k <= 5; ++k) {
        const BtVertex v = s.ray_vertex(r, k);
        CHECK(distance(prev, v) == 1);
        CHECK(step_toward(prev, inf) == v);
        prev = v;
    }
    const auto img = s.image(3);
    CHECK(img.is_tree());
    CHECK(img.vertices.size() == s.iota.size() + 4 * 3);
    const auto info = s.image_info(img, 3);
    size_t open = 0;
    for (const auto& i : info) open += i.open_end ? 1 : 0;
    CHECK(open == 4);
}

TEST_CASE("malformed embeddings are rejected")
{
    json j = free_product_json(3, 2, 2, 1);
    j["vertex_map"]["B"] = "(0; 0)";
    CHECK_THROWS_AS(EmbeddingSpec::from_json(j), SpecError);

    j = free_product_json(3, 2, 2, 1);
    j["generators"]["A"]["g"] = "1, 1; 0, 1";
    CHECK_THROWS_AS(EmbeddingSpec::from_json(j), SpecError);

    j = free_product_json(3, 2, 2, 1);
    j["vertex_map"].erase("c1");
    CHECK_THROWS_AS(EmbeddingSpec::from_json(j), SpecError);

    j = free_product_json(3, 2, 2, 1);
    j["vertex_map"]["B"] = "(-2; 0)";  // no longer adjacent to c1
    CHECK_THROWS_AS(EmbeddingSpec::from_json(j), SpecError);

    j = free_product_json(3, 2, 2, 1);
    j["ray_ends"]["b0"] = "0";  // same end as a0
    CHECK_THROWS_AS(EmbeddingSpec::from_json(j), SpecError);

    j = free_product_json(3, 2, 2, 1);
    j["edges"].push_back({{"a", "A"}, {"b", "B"}, {"group", "trivial"}});
    CHECK_THROWS_AS(EmbeddingSpec::from_json(j), SpecError);
}

TEST_CASE("generated groups")
{
    const auto F = Field::make(2, 2, 1, 32);
    const Pgl2 r(parse_matrix(F, "zeta(3), 0; 0, 1"));
    const Pgl2 s(parse_matrix(F, "0, 1; 1, 0"));
    bool capped = true;
    CHECK(generate_group({r, s}, F, 100, &capped).size() == 6);
    CHECK_FALSE(capped);
    const Pgl2 h(parse_matrix(F, "2, 0; 0, 1"));
    CHECK(generate_group({h}, F, 10, &capped).size() == 10);
    CHECK(capped);
}

TEST_CASE("fixed-point tree of a free product is the image")
{
    const auto s = free_product(3, 2, 2, 1);
    const long R = s.radius();
    const auto tt = build_tilde_tree(s, R);
    const auto img = s.image(R);
    CHECK(tt.tree.is_tree());
    for (const auto& v : img.vertices) CHECK(tt.tree.contains(v));
    CHECK(tt.tree.vertices.size() == img.vertices.size());
}

TEST_CASE("gallery embeddings verify")
{
    for (const auto& s : {free_product(3, 2, 2, 1), free_product(2, 3, 3, 1), triangle_dyadic(3, 1, 1)}) {
        const auto rep = check_admissible(s, 6, s.radius());
        for (int k = 1; k <= 5; ++k) {
            CAPTURE(k);
            CHECK(verdict_of(rep, k) == Verdict::Verified);
        }
        CHECK(rep.overall == Verdict::Verified);
        CHECK(rep.to_json()["overall"] == "verified");
    }
}

TEST_CASE("a misplaced mirror is refuted")
{
    json j = free_product_json(3, 2, 2, 1);
    j["generators"]["B"]["g"] = "zeta(2), -(zeta(2) - 1); 0, 1";  // mirror ]1, inf[ through c1
    const auto s = EmbeddingSpec::from_json(j);
    const auto rep = check_admissible(s, 6, s.radius());
    CHECK(rep.overall == Verdict::Refuted);
    CHECK(verdict_of(rep, 1) == Verdict::Refuted);
    CHECK(verdict_of(rep, 3) == Verdict::Refuted);
    CHECK(rep.conditions[2].witness["vertex"] == "c1");
    CHECK(verdict_of(rep, 4) == Verdict::Refuted);
}

TEST_CASE("a missing branch at a vertex is refuted")
{
    const auto s = EmbeddingSpec::from_json(lonely_vertex());
    const auto rep = check_admissible(s, 4, s.radius());
    CHECK(verdict_of(rep, 1) == Verdict::Verified);
    CHECK(verdict_of(rep, 3) == Verdict::Verified);
    CHECK(verdict_of(rep, 5) == Verdict::Refuted);
    CHECK(rep.overall == Verdict::Refuted);
}

TEST_CASE("short conjugator search is inconclusive")
{
    const auto s = triangle_dyadic(3, 1, 1);
    const auto rep = check_admissible(s, 0, s.radius());
    CHECK(verdict_of(rep, 2) == Verdict::Inconclusive);
    CHECK(rep.overall == Verdict::Inconclusive);
    CHECK(std::string(verdict_name(rep.overall)) == "inconclusive");
}
