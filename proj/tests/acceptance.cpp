// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "bt/gallery.hpp"
#include "bt/literal.hpp"
#include "bt/report.hpp"
#include "oracles.hpp"

using namespace bt;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string join(const std::vector<size_t>& v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string join(const std::vector<int>& v)
{
    std::vector<size_t> w(v.begin(), v.end());
    return join(w);
}

std::pair<int, std::string> shell(const std::string& cmd)
{
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int st = pclose(pipe);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Pgl2 M(const FieldPtr& F, const std::string& s) { return Pgl2(parse_matrix(F, s)); }

Outcome mirror_distance()
{
    Outcome o;
    std::ostringstream d;
    for (int e : {1, 2}) {
        const auto F = Field::make(2, 2, e, 64);
        const Mirror mg = mirror(M(F, "zeta(3), 0; 0, 1"));
        const Mirror mc = mirror(M(F, "0, 1; 1, 0"));
        const long dist = apartment_distance(mg.z, mg.w, mc.z, mc.w);
        d << (e == 1 ? "" : ", ") << "e=" << e << ": d=" << dist;
        o.pass = o.pass && dist == e;
    }
    o.detail = "d(M(gamma), M(chi)) " + d.str();
    return o;
}

Outcome fixed_set_brute_force()
{
    Outcome o;
    std::ostringstream d;
    for (int e : {1, 2}) {
        const auto F = Field::make(2, 1, e, 64);
        const Pgl2 chi = M(F, "0, 1; 1, 0");
        const Mirror mir = mirror(chi);
        const auto window = apartment(mir.z, mir.w, -8, 8);
        auto dist_to_mirror = [&](const BtVertex& v) {
            long best = LONG_MAX;
            for (const auto& w : window) best = std::min(best, distance(v, w));
            return best;
        };
        std::set<std::string> seen;
        size_t checked = 0, mismatches = 0;
        for (const auto& c : apartment(mir.z, mir.w, -2, 2))
            for (const auto& v : oracle::ball(c, 4)) {
                if (!seen.insert(v.key()).second) continue;
                const long dv = dist_to_mirror(v);
                if (dv > 4) continue;
                ++checked;
                if ((chi(v) == v) != (dv <= e)) ++mismatches;
            }
        d << (e == 1 ? "" : "; ") << "e=" << e << ": " << checked << " vertices, " << mismatches << " mismatches against d<=" << e;
        o.pass = o.pass && mismatches == 0 && checked > 0;
    }
    o.detail = d.str();
    return o;
}

Outcome neighbour_orbits()
{
    const auto F = Field::make(2, 2, 1, 64);
    const Pgl2 g = M(F, "zeta(3), 0; 0, 1");
    const BtVertex v0 = BtVertex::origin(F);
    // permutation of the star computed directly
    const auto st = star(v0);
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < st.size(); ++i) index[st[i].vertex.key()] = i;
    std::vector<size_t> perm(st.size());
    for (size_t i = 0; i < st.size(); ++i) perm[i] = index.at(g(st[i].vertex).key());
    std::vector<size_t> sizes;
    std::vector<bool> done(st.size());
    for (size_t i = 0; i < st.size(); ++i) {
        if (done[i]) continue;
        size_t len = 0;
        for (size_t x = i; !done[x]; x = perm[x]) {
            done[x] = true;
            ++len;
        }
        sizes.push_back(len);
    }
    std::sort(sizes.begin(), sizes.end());
    const auto audit = neighbor_action_audit(g, v0);
    Outcome o;
    o.pass = st.size() == 5 && sizes == std::vector<size_t>{1, 1, 3} && audit.fixed == 2 && audit.free_off_mirror &&
             audit.orbits.size() == 3;
    o.detail = std::to_string(st.size()) + " neighbours, orbit sizes " + join(sizes) + ", audit reports " +
               std::to_string(audit.fixed) + " fixed";
    return o;
}

bool non_refuted(const json& check)
{
    for (const auto& [k, c] : check["conditions"].items())
        if (c["verdict"] == "refuted") return false;
    return true;
}

std::vector<int> sorted_orders(const json& branch)
{
    auto v = branch["stabilizer_orders"].get<std::vector<int>>();
    std::sort(v.begin(), v.end());
    return v;
}

Outcome free_product_pipelines()
{
    Outcome o;
    std::ostringstream d;
    for (auto [p, n, m, r] : {std::tuple<long, int, int, int>{3, 2, 2, 1}, {5, 2, 4, 1}, {2, 3, 3, 1}}) {
        const auto spec = free_product(p, n, m, r);
        const auto res = run_pipeline(spec, 6, spec.radius());
        const json& j = res.report;
        const auto& T = spec.tog;
        // A - (2r - 1 trivial vertices) - B, two ends at each extremity
        bool shape = T.path(T.index_of("A"), T.index_of("B")).size() == static_cast<size_t>(2 * r + 1) && T.rays.size() == 4;
        for (const auto& ray : T.rays) {
            const bool at_a = ray.attach == T.index_of("A");
            shape = shape && T.vertices[static_cast<size_t>(ray.tail())].group.size() == (at_a ? n : m);
        }
        for (size_t v = 0; v < T.vertices.size(); ++v)
            if (T.is_core(static_cast<int>(v)) && T.vertices[v].id[0] == 'c') shape = shape && T.vertices[v].group.size() == 1;
        const json& q = j["quotient"];
        shape = shape && q["classes_consistent"] == true && q["decorations_match"] == true && q["connected"] == true;
        std::vector<int> want{n, n, m, m};
        std::sort(want.begin(), want.end());
        const bool ok = non_refuted(j["check"]) && j["disjointness"]["ok"] == true && shape && q["betti"] == 0 &&
                        j["branch"]["ends"].size() == 4 && sorted_orders(j["branch"]) == want && res.exit_code == kExitOk;
        d << (d.tellp() ? "; " : "") << "(" << p << "," << n << "," << m << "," << r << "): check " << j["check"]["overall"].get<std::string>()
          << ", disjointness " << j["disjointness"]["checked"] << " words, betti " << q["betti"] << ", degrees "
          << join(sorted_orders(j["branch"])) << (ok ? "" : " [mismatch]");
        o.pass = o.pass && ok;
    }
    o.detail = d.str();
    return o;
}

Outcome triangle_pipelines()
{
    Outcome o;
    std::ostringstream d;
    for (auto [n, m] : {std::pair<int, int>{3, 1}, {3, 3}, {5, 3}}) {
        const auto spec = triangle_dyadic(n, m, 1);
        const auto res = run_pipeline(spec, 6, spec.radius());
        const json& j = res.report;
        const auto& T = spec.tog;
        const auto label = [&](const std::string& id) { return T.vertices[static_cast<size_t>(T.index_of(id))].group.label(); };
        const std::string z2m = "Z_" + std::to_string(2 * m);
        // D_n at v0, Z_n up the ray to infinity, Z_2m on the lower line
        bool shape = label("v0") == "D_" + std::to_string(n) && label("v1") == z2m && label("up.tail") == "Z_" + std::to_string(n) &&
                     label("low0.tail") == z2m && label("low1.tail") == z2m;
        const json& q = j["quotient"];
        shape = shape && q["classes_consistent"] == true && q["decorations_match"] == true && q["betti"] == 0;
        std::vector<int> want{n, 2 * m, 2 * m};
        std::sort(want.begin(), want.end());
        const bool ok = non_refuted(j["check"]) && shape && j["branch"]["ends"].size() == 3 && sorted_orders(j["branch"]) == want &&
                        res.exit_code == kExitOk;
        d << (d.tellp() ? "; " : "") << "(" << n << "," << m << "): v0 " << label("v0") << ", lower line " << label("low0.tail")
          << ", degrees " << join(sorted_orders(j["branch"])) << (ok ? "" : " [mismatch]");
        o.pass = o.pass && ok;
    }
    o.detail = d.str();
    return o;
}

Outcome word_counts()
{
    json j;
    j["vertices"] = json::array({{{"id", "A"}, {"group", {{"type", "cyclic"}, {"n", 2}}}},
                                 {{"id", "B"}, {"group", {{"type", "cyclic"}, {"n", 3}}}}});
    j["edges"] = json::array({{{"a", "A"}, {"b", "B"}, {"group", "trivial"}}});
    const auto counts = amalgam_enumerate(TreeOfGroups::from_json(j), 4).counts();
    const auto brute = oracle::psl2z_sphere_sizes(4);
    const auto formula = oracle::amalgam_sphere_sizes(2, 3, 1, 4);
    const std::vector<size_t> listed{1, 3, 4, 8, 12};
    Outcome o;
    const bool oracles_agree = counts == brute && counts == formula;
    o.pass = oracles_agree && counts == listed;
    o.detail = "enumeration " + join(counts) + ", PSL(2,Z) brute force " + join(brute) + ", syllable formula " + join(formula) +
               "; required values " + join(listed) + (o.pass ? "" : " are not the word counts of Z_2 * Z_3");
    return o;
}

Outcome stabilizers()
{
    Outcome o;
    std::ostringstream d;
    std::vector<EmbeddingSpec> specs{free_product(3, 2, 2, 1), free_product(5, 2, 4, 1), free_product(2, 3, 3, 1),
                                     triangle_dyadic(3, 1, 1), triangle_dyadic(3, 3, 1), triangle_dyadic(5, 3, 1)};
    size_t compared = 0;
    for (const auto& spec : specs) {
        const auto ot = build_orbit_tree(spec, 6, spec.radius());
        for (size_t v = 0; v < spec.iota.size(); ++v) {
            if (!spec.tog.is_core(static_cast<int>(v))) continue;
            std::vector<std::string> want;
            for (const auto& g : spec.reps[v]) want.push_back(g.key());
            std::sort(want.begin(), want.end());
            for (int L = 4; L <= 6; ++L) {
                std::vector<std::string> got;
                for (const auto& g : stabilizer_of_vertex(ot, spec.iota[v], L)) got.push_back(g.key());
                std::sort(got.begin(), got.end());
                ++compared;
                if (got != want) {
                    o.pass = false;
                    d << "; " << spec.tog.vertices[v].id << " at L=" << L << " has " << got.size() << " elements";
                }
            }
        }
    }
    o.detail = std::to_string(compared) + " (vertex, L) comparisons over " + std::to_string(specs.size()) + " embeddings" + d.str();
    return o;
}

Outcome property_suites()
{
    const auto [code, out] = shell(std::string(PROPERTIES_EXE) + " --success=false 2>&1");
    Outcome o;
    o.pass = code == 0 && out.find("Status: SUCCESS!") != std::string::npos;
    // "[doctest] test cases:    7 |    7 passed | ..." -> first count
    auto first_count = [&](const std::string& tag) {
        const auto at = out.find(tag);
        if (at == std::string::npos) return std::string("?");
        std::istringstream in(out.substr(at + tag.size()));
        std::string n;
        in >> n;
        return n;
    };
    const std::string summary = first_count("test cases:") + " suites, " + first_count("assertions:") + " assertions";
    o.detail = summary + ", 250 seeded cases per suite, exit " + std::to_string(code);
    return o;
}

Outcome determinism()
{
    const fs::path dir = fs::temp_directory_path() / "btree_acceptance";
    fs::create_directories(dir);
    const std::vector<std::string> commands{
        "gallery free-product --p 3 --n 2 --m 2 --r 1", "gallery free-product --p 5 --n 2 --m 4 --r 1",
        "gallery free-product --p 2 --n 3 --m 3 --r 1", "gallery triangle --n 3 --m 1",
        "gallery triangle --n 3 --m 3",                 "gallery triangle --n 5 --m 3"};
    Outcome o;
    size_t compared = 0;
    for (size_t k = 0; k < commands.size(); ++k) {
        std::string outs[2], dots[2], qdots[2];
        for (int run = 0; run < 2; ++run) {
            const fs::path od = dir / ("o" + std::to_string(k) + "_" + std::to_string(run) + ".dot");
            const fs::path qd = dir / ("q" + std::to_string(k) + "_" + std::to_string(run) + ".dot");
            const auto [code, out] = shell(std::string(BTREE_EXE) + " " + commands[k] + " --dot " + od.string() +
                                           " --quotient-dot " + qd.string() + " 2>/dev/null");
            outs[run] = out;
            dots[run] = slurp(od);
            qdots[run] = slurp(qd);
            if (code != 0) o.pass = false;
        }
        compared += 3;
        if (outs[0].empty() || outs[0] != outs[1] || dots[0].empty() || dots[0] != dots[1] || qdots[0] != qdots[1]) {
            o.pass = false;
            o.detail += "; differs: " + commands[k];
        }
    }
    o.detail = std::to_string(commands.size()) + " commands run twice, " + std::to_string(compared) + " JSON/DOT pairs compared" + o.detail;
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"mirror distance equals e", mirror_distance},
        {"fixed set of an involution by brute force", fixed_set_brute_force},
        {"neighbour orbits of diag(zeta_3, 1)", neighbour_orbits},
        {"free product pipelines", free_product_pipelines},
        {"dyadic triangle pipelines", triangle_pipelines},
        {"Z_2 * Z_3 word counts", word_counts},
        {"stabilizers equal vertex groups for L = 4..6", stabilizers},
        {"property suites", property_suites},
        {"deterministic gallery output", determinism},
    };
    int failed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[k].first << ": " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<size_t>(failed)) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
