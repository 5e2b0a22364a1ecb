#include "bt/gallery.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bt/literal.hpp"

namespace bt {

using json = nlohmann::json;

namespace {

json cyclic(int n) { return n == 1 ? json("trivial") : json{{"type", "cyclic"}, {"n", n}}; }

std::string gpow(int k) { return k == 0 ? "1" : k == 1 ? "g" : "g^" + std::to_string(k); }

json field_json(long p, int f, int e, int precision)
{
    return {{"p", p}, {"f", f}, {"e", e}, {"precision", precision}};
}

}  // namespace

json free_product_json(long p, int n, int m, int r, int precision)
{
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 2 || m < 2) throw std::invalid_argument("n and m must be at least 2");
    if (n % p == 0 || m % p == 0)
        throw std::invalid_argument("p divides n*m; this construction needs n and m prime to p "
                                    "(the variant with modified horizontal groups is not implemented)");
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    const int f = std::lcm(multiplicative_order(p, n), multiplicative_order(p, m));

    json j;
    j["field"] = field_json(p, f, 1, precision);
    const std::string rs = std::to_string(r);
    json verts = json::array(), edges = json::array();
    verts.push_back({{"id", "A"}, {"group", cyclic(n)}});
    std::string prev = "A";
    for (int i = 1; i <= 2 * r - 1; ++i) {
        const std::string id = "c" + std::to_string(i);
        verts.push_back({{"id", id}, {"group", "trivial"}});
        edges.push_back({{"a", prev}, {"b", id}, {"group", "trivial"}});
        prev = id;
    }
    verts.push_back({{"id", "B"}, {"group", cyclic(m)}});
    edges.push_back({{"a", prev}, {"b", "B"}, {"group", "trivial"}});
    j["vertices"] = verts;
    j["edges"] = edges;

    const json same = {{"prev", {{"g", "g"}}}, {"next", {{"g", "g"}}}};
    j["rays"] = json::array({
        {{"id", "a0"}, {"attach", "A"}, {"tail_group", cyclic(n)}, {"tail_injections", same}},
        {{"id", "a1"}, {"attach", "A"}, {"tail_group", cyclic(n)}, {"tail_injections", same}},
        {{"id", "b0"}, {"attach", "B"}, {"tail_group", cyclic(m)}, {"tail_injections", same}},
        {{"id", "b1"}, {"attach", "B"}, {"tail_group", cyclic(m)}, {"tail_injections", same}},
    });
    json vm = {{"A", "(" + rs + "; 0)"}, {"B", "(-" + rs + "; 0)"}};
    for (int i = 1; i <= 2 * r - 1; ++i) vm["c" + std::to_string(i)] = "(" + std::to_string(r - i) + "; 0)";
    j["vertex_map"] = vm;
    j["ray_ends"] = {{"a0", "0"}, {"a1", "pi^" + rs}, {"b0", "pi^-" + rs}, {"b1", "inf"}};
    const std::string zn = "zeta(" + std::to_string(n) + ")", zm = "zeta(" + std::to_string(m) + ")";
    j["generators"] = {
        {"A", {{"g", zn + "*pi^" + rs + ", 0; " + zn + " - 1, pi^" + rs}}},
        {"B", {{"g", zm + ", -(" + zm + " - 1)*pi^-" + rs + "; 0, 1"}}},
    };
    j["notes"] = json::array({"Z_" + std::to_string(n) + " * Z_" + std::to_string(m) + " acting on the tree of Q_" +
                              std::to_string(p) + (f > 1 ? " extended by degree " + std::to_string(f) : "")});
    return j;
}

EmbeddingSpec free_product(long p, int n, int m, int r, int precision)
{
    EmbeddingSpec s = EmbeddingSpec::from_json(free_product_json(p, n, m, r, precision));
    const FieldPtr& F = s.field;
    const Pgl2& g = s.reps[static_cast<size_t>(s.tog.index_of("A"))][1];
    const Pgl2& d = s.reps[static_cast<size_t>(s.tog.index_of("B"))][1];
    const auto og = order(g), od = order(d);
    if (og.status != OrderResult::Status::Finite || og.order != n || od.status != OrderResult::Status::Finite || od.order != m)
        throw std::logic_error("free_product: generator orders differ from n, m");
    const ProjPoint zero = ProjPoint::of(PAdic::zero(F)), inf = ProjPoint::infinity(F);
    const ProjPoint pr = ProjPoint::of(PAdic::pi_power(F, r)), pmr = ProjPoint::of(PAdic::pi_power(F, -r));
    const auto fg = fixed_points(g).points, fd = fixed_points(d).points;
    auto has = [](const std::vector<ProjPoint>& v, const ProjPoint& z) { return std::find(v.begin(), v.end(), z) != v.end(); };
    if (!has(fg, zero) || !has(fg, pr) || !has(fd, pmr) || !has(fd, inf))
        throw std::logic_error("free_product: fixed points misplaced");
    if (apartment_distance(zero, pr, pmr, inf) != 2 * r) throw std::logic_error("free_product: mirror distance is not 2r");
    return s;
}

json triangle_dyadic_json(int n, int m, int e, int precision)
{
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 3");
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("m must be odd and positive");
    if (e < 1) throw std::invalid_argument("e must be positive");
    const int f = std::lcm(multiplicative_order(2, n), m == 1 ? 1 : multiplicative_order(2, m));
    const FieldPtr F = Field::make(2, f, e, precision);

    json j;
    j["field"] = field_json(2, f, e, precision);
    const json Dn = {{"type", "dihedral"}, {"n", n}};
    const json Z2m = cyclic(2 * m);
    const BtVertex v0 = BtVertex::origin(F);
    const BtVertex v1 = apartment_projection(ProjPoint::of(PAdic::one(F)), ProjPoint::of(-PAdic::one(F)), v0);
    const auto seg = geodesic(v0, v1);

    json verts = json::array(), edges = json::array();
    json vm;
    verts.push_back({{"id", "v0"}, {"group", Dn}});
    vm["v0"] = v0.key();
    std::string prev = "v0";
    std::string into_prev = "s";
    for (size_t k = 1; k + 1 < seg.size(); ++k) {
        const std::string id = "w" + std::to_string(k);
        verts.push_back({{"id", id}, {"group", cyclic(2)}});
        vm[id] = seg[k].key();
        edges.push_back({{"a", prev}, {"b", id}, {"group", cyclic(2)}, {"injections", {{prev, {{"g", into_prev}}}, {id, {{"g", "g"}}}}}});
        prev = id;
        into_prev = "g";
    }
    verts.push_back({{"id", "v1"}, {"group", Z2m}});
    vm["v1"] = v1.key();
    edges.push_back({{"a", prev}, {"b", "v1"}, {"group", cyclic(2)}, {"injections", {{prev, {{"g", into_prev}}}, {"v1", {{"g", gpow(m)}}}}}});
    j["vertices"] = verts;
    j["edges"] = edges;
    j["vertex_map"] = vm;

    const json same = {{"prev", {{"g", "g"}}}, {"next", {{"g", "g"}}}};
    j["rays"] = json::array({
        {{"id", "up"}, {"attach", "v0"}, {"tail_group", cyclic(n)}, {"tail_injections", {{"prev", {{"g", "r"}}}, {"next", {{"g", "g"}}}}}},
        {{"id", "low0"}, {"attach", "v1"}, {"tail_group", Z2m}, {"tail_injections", same}},
        {{"id", "low1"}, {"attach", "v1"}, {"tail_group", Z2m}, {"tail_injections", same}},
    });
    j["ray_ends"] = {{"up", "inf"}, {"low0", "1"}, {"low1", "-1"}};
    const std::string zn = "zeta(" + std::to_string(n) + ")", zm = "zeta(" + std::to_string(m) + ")";
    j["generators"] = {
        {"v0", {{"r", zn + ", 0; 0, 1"}, {"s", "0, 1; 1, 0"}}},
        {"v1", {{"g", "1 - " + zm + ", 1 + " + zm + "; 1 + " + zm + ", 1 - " + zm}}},
    };
    const std::string N = std::to_string(n), M = std::to_string(m), M2 = std::to_string(2 * m);
    j["notes"] = json::array({"D_" + N + " *_{Z_2} Z_" + M2 + ", also written D_" + N + " *_{Z_2} Z_" + M +
                              "; the vertex group at v1 has order " + M2 + " and contains <chi> = Z_2"});
    return j;
}

EmbeddingSpec triangle_dyadic(int n, int m, int e, int precision)
{
    EmbeddingSpec s = EmbeddingSpec::from_json(triangle_dyadic_json(n, m, e, precision));
    const auto& V0 = s.tog.vertices[static_cast<size_t>(s.tog.index_of("v0"))].group;
    const Pgl2& chi = s.reps[static_cast<size_t>(s.tog.index_of("v0"))][static_cast<size_t>(*V0.find("s"))];
    const Pgl2& theta = s.reps[static_cast<size_t>(s.tog.index_of("v1"))][1];
    const auto ot = order(theta);
    if (ot.status != OrderResult::Status::Finite || ot.order != 2 * m) throw std::logic_error("triangle_dyadic: theta does not have order 2m");
    if (theta.pow(m) != chi) throw std::logic_error("triangle_dyadic: theta^m differs from chi");
    const auto mt = mirror(theta), mc = mirror(chi);
    if (!((mt.z == mc.z && mt.w == mc.w) || (mt.z == mc.w && mt.w == mc.z)))
        throw std::logic_error("triangle_dyadic: mirrors of theta and chi differ");
    return s;
}

FundamentalDomain dihedral_fundamental_domain(int n, int e, long R)
{
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 3");
    if (e < 1) throw std::invalid_argument("e must be positive");
    const FieldPtr F = Field::make(2, multiplicative_order(2, n), e, 64);
    const ProjPoint zero = ProjPoint::of(PAdic::zero(F)), inf = ProjPoint::infinity(F);
    const ProjPoint one = ProjPoint::of(PAdic::one(F)), mone = ProjPoint::of(-PAdic::one(F));
    const BtVertex v0 = BtVertex::origin(F);
    const BtVertex v1 = apartment_projection(one, mone, v0);

    FundamentalDomain out;
    out.mirror_distance = apartment_distance(zero, inf, one, mone);
    std::vector<BtVertex> vs{v0};
    std::vector<std::pair<BtVertex, BtVertex>> es;
    out.labels[v0.key()] = "D_" + std::to_string(n);
    auto add_path = [&](const std::vector<BtVertex>& path, const std::string& label) {
        for (size_t k = 0; k < path.size(); ++k) {
            if (!out.labels.count(path[k].key())) out.labels[path[k].key()] = label;
            vs.push_back(path[k]);
            if (k) es.emplace_back(path[k - 1], path[k]);
        }
    };
    auto up = halfline_toward(v0, inf, R);
    up.insert(up.begin(), v0);
    add_path(up, "Z_" + std::to_string(n));
    add_path(geodesic(v0, v1), "Z_2");
    add_path(apartment(one, mone, -R, R), "Z_2");
    out.tree = SubtreeTruncation::assemble(vs, es);
    out.tree.radius = R;
    out.tree.centre = v0;
    return out;
}

}  // namespace bt
