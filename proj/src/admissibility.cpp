#include "bt/admissibility.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "bt/literal.hpp"

namespace bt {

using json = nlohmann::json;

namespace {

constexpr size_t kGroupCap = 256;

std::vector<Pgl2> reps_from_generators(const FiniteGroup& G, const std::string& vid,
                                       const std::vector<std::pair<int, Pgl2>>& gens, const FieldPtr& F)
{
    const auto n = static_cast<size_t>(G.size());
    std::vector<std::optional<Pgl2>> rep(n);
    rep[0] = Pgl2::identity(F);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (const auto& [g, m] : gens) {
            const int y = G.mul(x, g);
            if (!rep[static_cast<size_t>(y)]) {
                rep[static_cast<size_t>(y)] = *rep[static_cast<size_t>(x)] * m;
                queue.push_back(y);
            }
        }
    }
    std::vector<Pgl2> out;
    for (size_t x = 0; x < n; ++x) {
        if (!rep[x]) throw SpecError("vertex " + vid + ": generator matrices do not reach element " + G.name(static_cast<int>(x)));
        out.push_back(*rep[x]);
    }
    for (size_t x = 0; x < n; ++x)
        for (const auto& [g, m] : gens)
            if (out[static_cast<size_t>(G.mul(static_cast<int>(x), g))] != out[x] * m)
                throw SpecError("vertex " + vid + ": generator matrices violate the relations of " + G.label());
    std::set<std::string> keys;
    for (const auto& m : out) keys.insert(m.key());
    if (keys.size() != n) throw SpecError("vertex " + vid + ": generator matrices do not give a faithful action");
    return out;
}

long diameter(const std::vector<BtVertex>& vs)
{
    long d = 0;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) d = std::max(d, distance(vs[i], vs[j]));
    return d;
}

std::vector<std::vector<size_t>> adjacency(const SubtreeTruncation& t)
{
    std::vector<std::vector<size_t>> adj(t.vertices.size());
    for (const auto& [i, j] : t.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

std::set<std::string> key_set(const std::vector<Pgl2>& g)
{
    std::set<std::string> s;
    for (const auto& x : g) s.insert(x.key());
    return s;
}

}  // namespace

EmbeddingSpec EmbeddingSpec::from_json(const json& j)
{
    EmbeddingSpec s;
    s.source = j;
    try {
        const auto& f = j.at("field");
        s.field = Field::make(f.at("p").get<long>(), f.value("f", 1), f.value("e", 1), f.value("precision", 64));
    } catch (const json::exception& e) {
        throw SpecError(std::string("field: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SpecError(std::string("field: ") + e.what());
    }
    try {
        s.tog = TreeOfGroups::from_json(j);
    } catch (const json::exception& e) {
        throw SpecError(std::string("tree of groups: ") + e.what());
    }
    const auto vr = validate(s.tog);
    if (!vr.ok) {
        std::string msg = "tree of groups:";
        for (const auto& p : vr.problems) msg += " " + p + ";";
        throw SpecError(msg);
    }
    if (j.contains("bounds")) {
        s.L = j["bounds"].value("L", s.L);
        s.R = j["bounds"].value("R", s.R);
    }
    if (j.contains("notes"))
        for (const auto& n : j["notes"]) s.notes.push_back(n.get<std::string>());

    const auto& V = s.tog.vertices;
    const FieldPtr& F = s.field;
    try {
        // Core vertex images.
        s.iota.assign(V.size(), BtVertex::origin(F));
        std::vector<bool> placed(V.size(), false);
        for (const auto& [id, lit] : j.at("vertex_map").items()) {
            const int v = s.tog.index_of(id);
            if (v < 0) throw SpecError("vertex_map: unknown vertex " + id);
            s.iota[static_cast<size_t>(v)] = parse_vertex(F, lit.get<std::string>());
            placed[static_cast<size_t>(v)] = true;
        }
        for (size_t v = 0; v < V.size(); ++v)
            if (V[v].ray < 0 && !placed[v]) throw SpecError("vertex_map: no image for " + V[v].id);

        // Ray vertices follow the half-line toward the declared end.
        const json ends = j.contains("ray_ends") ? j["ray_ends"] : json::object();
        for (const auto& ray : s.tog.rays) {
            if (!ends.contains(ray.id)) throw SpecError("ray_ends: no end for ray " + ray.id);
            s.ray_ends.push_back(parse_point(F, ends[ray.id].get<std::string>()));
            for (size_t r = 0; r + 1 < s.ray_ends.size(); ++r)
                if (s.ray_ends[r] == s.ray_ends.back())
                    throw SpecError("ray_ends: rays " + s.tog.rays[r].id + " and " + ray.id + " share an end");
        }
        for (size_t r = 0; r < s.tog.rays.size(); ++r) {
            const auto& ray = s.tog.rays[r];
            const auto line = halfline_toward(s.iota[static_cast<size_t>(ray.attach)], s.ray_ends[r],
                                              static_cast<long>(ray.path.size()));
            for (size_t k = 0; k < ray.path.size(); ++k) s.iota[static_cast<size_t>(ray.path[k])] = line[k];
        }

        // Edges of T must go to edges of the tree, and distinct vertices to
        // distinct vertices.
        std::map<std::string, size_t> seen;
        for (size_t v = 0; v < V.size(); ++v) {
            auto [it, fresh] = seen.emplace(s.iota[v].key(), v);
            if (!fresh) throw SpecError("embedding not injective: " + V[it->second].id + " and " + V[v].id + " both map to " + s.iota[v].key());
        }
        for (const auto& e : s.tog.edges)
            if (distance(s.iota[static_cast<size_t>(e.a)], s.iota[static_cast<size_t>(e.b)]) != 1)
                throw SpecError("edge " + V[static_cast<size_t>(e.a)].id + " - " + V[static_cast<size_t>(e.b)].id + " does not map to an edge");
        for (size_t r = 0; r < s.tog.rays.size(); ++r) {
            const auto& ray = s.tog.rays[r];
            const BtVertex next = s.ray_vertex(static_cast<int>(r), static_cast<long>(ray.path.size()) + 1);
            if (seen.count(next.key())) throw SpecError("ray " + ray.id + " runs back into the image of T");
        }

        // Vertex-group matrices.
        std::vector<std::optional<std::vector<Pgl2>>> reps(V.size());
        const json gens = j.contains("generators") ? j["generators"] : json::object();
        for (const auto& [id, gm] : gens.items()) {
            const int v = s.tog.index_of(id);
            if (v < 0) throw SpecError("generators: unknown vertex " + id);
            const auto& G = V[static_cast<size_t>(v)].group;
            std::vector<std::pair<int, Pgl2>> list;
            for (const auto& [name, lit] : gm.items()) {
                const auto x = G.find(name);
                if (!x) throw SpecError("generators: " + id + " has no element " + name);
                list.emplace_back(*x, Pgl2(parse_matrix(F, lit.get<std::string>())));
            }
            reps[static_cast<size_t>(v)] = reps_from_generators(G, id, list, F);
        }
        for (size_t v = 0; v < V.size(); ++v)
            if (!reps[v] && V[v].group.size() == 1) reps[v] = std::vector<Pgl2>{Pgl2::identity(F)};
        // Carry matrices across edges whose group fills the target vertex group.
        for (bool progress = true; progress;) {
            progress = false;
            for (size_t e = 0; e < s.tog.edges.size(); ++e) {
                const auto& E = s.tog.edges[e];
                for (const auto& [from, to] : {std::pair{E.a, E.b}, std::pair{E.b, E.a}}) {
                    auto& rt = reps[static_cast<size_t>(to)];
                    const auto& rf = reps[static_cast<size_t>(from)];
                    if (rt || !rf || E.group.size() != V[static_cast<size_t>(to)].group.size()) continue;
                    const auto& mf = s.tog.map_into(static_cast<int>(e), from);
                    const auto& mt = s.tog.map_into(static_cast<int>(e), to);
                    std::vector<Pgl2> out(static_cast<size_t>(E.group.size()));
                    for (int x = 0; x < E.group.size(); ++x)
                        out[static_cast<size_t>(mt.image[static_cast<size_t>(x)])] = (*rf)[static_cast<size_t>(mf.image[static_cast<size_t>(x)])];
                    rt = std::move(out);
                    progress = true;
                }
            }
        }
        for (size_t v = 0; v < V.size(); ++v) {
            if (!reps[v]) throw SpecError("generators: no matrices for vertex " + V[v].id);
            s.reps.push_back(std::move(*reps[v]));
        }
        for (size_t e = 0; e < s.tog.edges.size(); ++e) {
            const auto& E = s.tog.edges[e];
            const auto& ma = s.tog.map_into(static_cast<int>(e), E.a);
            const auto& mb = s.tog.map_into(static_cast<int>(e), E.b);
            for (int x = 0; x < E.group.size(); ++x)
                if (s.reps[static_cast<size_t>(E.a)][static_cast<size_t>(ma.image[static_cast<size_t>(x)])] !=
                    s.reps[static_cast<size_t>(E.b)][static_cast<size_t>(mb.image[static_cast<size_t>(x)])])
                    throw SpecError("edge " + V[static_cast<size_t>(E.a)].id + " - " + V[static_cast<size_t>(E.b)].id +
                                    ": injections disagree on " + E.group.name(x));
        }
    } catch (const ParseError& e) {
        throw SpecError(std::string("literal: ") + e.what());
    } catch (const json::exception& e) {
        throw SpecError(std::string("embedding: ") + e.what());
    }
    return s;
}

BtVertex EmbeddingSpec::ray_vertex(int r, long k) const
{
    const auto& ray = tog.rays[static_cast<size_t>(r)];
    return halfline_toward(iota[static_cast<size_t>(ray.attach)], ray_ends[static_cast<size_t>(r)], k).back();
}

std::vector<Pgl2> EmbeddingSpec::nonidentity_elements() const
{
    std::vector<Pgl2> out;
    std::set<std::string> seen;
    for (const auto& rs : reps)
        for (const auto& g : rs)
            if (!g.is_identity() && seen.insert(g.key()).second) out.push_back(g);
    return out;
}

long EmbeddingSpec::default_radius() const
{
    long s = 0;
    for (const auto& g : nonidentity_elements()) {
        const auto o = order(g);
        if (o.status == OrderResult::Status::Finite) s = std::max(s, fixed_radius(g));
    }
    return diameter(iota) + 2 * s + 4;
}

SubtreeTruncation EmbeddingSpec::image(long Rad) const
{
    std::vector<BtVertex> vs = iota;
    std::vector<std::pair<BtVertex, BtVertex>> es;
    for (const auto& e : tog.edges) es.emplace_back(iota[static_cast<size_t>(e.a)], iota[static_cast<size_t>(e.b)]);
    for (size_t r = 0; r < tog.rays.size(); ++r) {
        const auto& ray = tog.rays[r];
        const auto P = static_cast<long>(ray.path.size());
        const auto line = halfline_toward(iota[static_cast<size_t>(ray.attach)], ray_ends[r], P + Rad);
        for (long k = P; k < P + Rad; ++k) {
            vs.push_back(line[static_cast<size_t>(k)]);
            es.emplace_back(line[static_cast<size_t>(k - 1)], line[static_cast<size_t>(k)]);
        }
    }
    auto t = SubtreeTruncation::assemble(vs, es);
    t.radius = Rad;
    t.centre = iota[0];
    return t;
}

std::vector<EmbeddingSpec::ImageVertex> EmbeddingSpec::image_info(const SubtreeTruncation& img, long Rad) const
{
    std::vector<ImageVertex> out(img.vertices.size());
    for (size_t v = 0; v < iota.size(); ++v)
        if (const auto i = img.index_of(iota[v])) out[*i] = {tog.vertices[v].id, static_cast<int>(v), false};
    for (size_t r = 0; r < tog.rays.size(); ++r) {
        const auto& ray = tog.rays[r];
        const auto P = static_cast<long>(ray.path.size());
        const auto line = halfline_toward(iota[static_cast<size_t>(ray.attach)], ray_ends[r], P + Rad);
        for (long k = P; k < P + Rad; ++k)
            if (const auto i = img.index_of(line[static_cast<size_t>(k)]))
                out[*i] = {ray.id + "+" + std::to_string(k - P + 1), ray.tail(), k == P + Rad - 1};
    }
    return out;
}

std::vector<Pgl2> generate_group(const std::vector<Pgl2>& gens, const FieldPtr& F, size_t cap, bool* capped)
{
    std::vector<Pgl2> out{Pgl2::identity(F)};
    std::set<std::string> seen{out[0].key()};
    if (capped) *capped = false;
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens) {
            Pgl2 y = out[i] * g;
            if (seen.insert(y.key()).second) {
                if (out.size() >= cap) {
                    if (capped) *capped = true;
                    return out;
                }
                out.push_back(std::move(y));
            }
        }
    return out;
}

TildeTree build_tilde_tree(const EmbeddingSpec& spec, long R)
{
    TildeTree out;
    const auto elems = spec.nonidentity_elements();
    std::vector<ProjPoint> ends;
    for (const auto& g : elems) {
        FixedPoints fp;
        try {
            fp = fixed_points(g);
        } catch (const FieldError&) {
            continue;
        }
        for (const auto& z : fp.points)
            if (std::find(ends.begin(), ends.end(), z) == ends.end()) ends.push_back(z);
    }
    if (ends.size() < 2) return out;

    // Start from the point of T(ends) nearest to the base image.
    const BtVertex& base = spec.iota[0];
    long best = -1;
    BtVertex start;
    for (size_t i = 0; i < ends.size(); ++i)
        for (size_t j = i + 1; j < ends.size(); ++j) {
            const long d = distance_to_apartment(base, ends[i], ends[j]);
            if (best < 0 || d < best) {
                best = d;
                start = apartment_projection(ends[i], ends[j], base);
            }
        }
    const auto& anchors = spec.iota;
    auto near = [&](const BtVertex& w, long) {
        for (const auto& a : anchors)
            if (distance(a, w) <= R) return true;
        return false;
    };
    if (!near(start, 0)) return out;
    out.tree = grow_tree_of_ends(ends, start, near);
    out.tree.radius = R;

    const FieldPtr& F = spec.field;
    for (const auto& w : out.tree.vertices) {
        std::vector<Pgl2> fixers;
        for (const auto& g : elems)
            if (g(w) == w) fixers.push_back(g);
        bool cap = false;
        out.groups.push_back(generate_group(fixers, F, kGroupCap, &cap));
        out.capped.push_back(cap);
    }
    return out;
}

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Verified:
        return "verified";
    case Verdict::Refuted:
        return "refuted";
    case Verdict::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

json CheckReport::to_json() const
{
    json j;
    j["overall"] = verdict_name(overall);
    j["bounds"] = {{"L", L}, {"R", R}, {"precision", precision}};
    json conds = json::object();
    for (int i = 0; i < 5; ++i) {
        json c = {{"verdict", verdict_name(conditions[i].verdict)}, {"detail", conditions[i].detail}};
        if (!conditions[i].witness.is_null()) c["witness"] = conditions[i].witness;
        conds[std::to_string(i + 1)] = c;
    }
    j["conditions"] = conds;
    return j;
}

namespace {

struct Context {
    const EmbeddingSpec& spec;
    SubtreeTruncation img;
    std::vector<std::string> img_label;          // T-vertex id for each image vertex
    std::vector<const std::vector<Pgl2>*> img_group;  // matrices of the T-vertex group
    std::vector<bool> open_end;                   // truncation point of a ray
    TildeTree tt;
};

void refute(ConditionResult& c, std::string detail, json witness = nullptr)
{
    if (c.verdict == Verdict::Refuted) return;
    c.verdict = Verdict::Refuted;
    c.detail = std::move(detail);
    c.witness = std::move(witness);
}

void condition_1(const Context& cx, ConditionResult& c)
{
    for (size_t i = 0; i < cx.img.vertices.size(); ++i)
        if (!cx.tt.tree.contains(cx.img.vertices[i])) {
            refute(c, "image vertex outside the fixed-point tree",
                   {{"vertex", cx.img_label[i]}, {"image", cx.img.vertices[i].key()}});
            return;
        }
    c.detail = std::to_string(cx.img.vertices.size()) + " image vertices inside a fixed-point tree of " +
               std::to_string(cx.tt.tree.vertices.size()) + " vertices";
}

void condition_2(const Context& cx, int L, ConditionResult& c)
{
    const auto& spec = cx.spec;
    const auto en = amalgam_enumerate(spec.tog, L);
    std::vector<Pgl2> deltas;
    std::vector<int> lengths;
    for (const auto& stratum : en.strata)
        for (const auto& w : stratum) {
            Pgl2 m = Pgl2::identity(spec.field);
            for (int li : w.letters) {
                const auto& a = en.letters[static_cast<size_t>(li)];
                m = m * spec.reps[static_cast<size_t>(a.vertex)][static_cast<size_t>(a.element)];
            }
            deltas.push_back(std::move(m));
            lengths.push_back(w.length());
        }
    std::set<std::string> done;
    size_t checked = 0;
    int longest = 0;
    for (size_t v = 0; v < spec.tog.vertices.size(); ++v) {
        const auto& G = spec.tog.vertices[v].group;
        for (int x = 1; x < G.size(); ++x) {
            const Pgl2& g = spec.reps[v][static_cast<size_t>(x)];
            if (!done.insert(g.key()).second) continue;
            ++checked;
            const json who = {{"vertex", spec.tog.vertices[v].id}, {"element", G.name(x)}};
            Mirror M;
            try {
                M = mirror(g);
            } catch (const FieldError&) {
                refute(c, "fixed points not rational over the field", who);
                return;
            }
            bool found = false;
            for (size_t d = 0; d < deltas.size() && !found; ++d) {
                const ProjPoint z = deltas[d](M.z), w = deltas[d](M.w);
                for (const auto& [i, j] : cx.img.edges)
                    if (distance_to_apartment(cx.img.vertices[i], z, w) == 0 &&
                        distance_to_apartment(cx.img.vertices[j], z, w) == 0) {
                        found = true;
                        longest = std::max(longest, lengths[d]);
                        break;
                    }
            }
            if (!found) {
                if (c.verdict == Verdict::Verified) {
                    c.verdict = Verdict::Inconclusive;
                    c.detail = "no conjugating word of length <= " + std::to_string(L) + " puts the mirror on an edge";
                    c.witness = who;
                }
            }
        }
    }
    if (c.verdict == Verdict::Verified)
        c.detail = std::to_string(checked) + " elements; conjugators of length <= " + std::to_string(longest) + " suffice";
}

void condition_3(const Context& cx, ConditionResult& c)
{
    for (size_t i = 0; i < cx.img.vertices.size(); ++i) {
        const auto t = cx.tt.tree.index_of(cx.img.vertices[i]);
        const json who = {{"vertex", cx.img_label[i]}, {"image", cx.img.vertices[i].key()}};
        if (!t) {
            refute(c, "image vertex outside the fixed-point tree", who);
            return;
        }
        const auto& gt = cx.tt.groups[*t];
        const auto want = key_set(*cx.img_group[i]);
        if (cx.tt.capped[*t] || key_set(gt) != want) {
            json w = who;
            w["expected_order"] = want.size();
            w["found_order"] = cx.tt.capped[*t] ? json("> " + std::to_string(kGroupCap)) : json(gt.size());
            refute(c, "stabilizer in the fixed-point tree differs from the vertex group", w);
            return;
        }
    }
    c.detail = std::to_string(cx.img.vertices.size()) + " vertex stabilizers match";
}

void condition_4(const Context& cx, ConditionResult& c)
{
    const auto& spec = cx.spec;
    const auto elems = spec.nonidentity_elements();
    // Edge groups of T, keyed by the image edge.
    std::map<std::pair<std::string, std::string>, std::vector<Pgl2>> expected;
    auto edge_key = [](const BtVertex& x, const BtVertex& y) {
        return x < y ? std::pair{x.key(), y.key()} : std::pair{y.key(), x.key()};
    };
    for (size_t e = 0; e < spec.tog.edges.size(); ++e) {
        const auto& E = spec.tog.edges[e];
        const auto& ma = spec.tog.map_into(static_cast<int>(e), E.a);
        std::vector<Pgl2> g;
        for (int x = 0; x < E.group.size(); ++x)
            g.push_back(spec.reps[static_cast<size_t>(E.a)][static_cast<size_t>(ma.image[static_cast<size_t>(x)])]);
        expected[edge_key(spec.iota[static_cast<size_t>(E.a)], spec.iota[static_cast<size_t>(E.b)])] = g;
    }
    size_t n = 0;
    for (const auto& [i, j] : cx.img.edges) {
        const auto& x = cx.img.vertices[i];
        const auto& y = cx.img.vertices[j];
        const auto k = edge_key(x, y);
        // Beyond the materialized part a ray edge carries the tail group.
        const std::vector<Pgl2>& want = expected.count(k) ? expected[k] : *cx.img_group[j];
        std::vector<Pgl2> fixers;
        for (const auto& g : elems)
            if (g(x) == x && g(y) == y) fixers.push_back(g);
        bool cap = false;
        const auto got = generate_group(fixers, spec.field, kGroupCap, &cap);
        if (cap || key_set(got) != key_set(want)) {
            refute(c, "edge stabilizer differs from the edge group",
                   {{"edge", cx.img_label[i] + " - " + cx.img_label[j]},
                    {"expected_order", want.size()},
                    {"found_order", cap ? json("> " + std::to_string(kGroupCap)) : json(got.size())}});
            return;
        }
        ++n;
    }
    c.detail = std::to_string(n) + " edge stabilizers match";
}

void condition_5(const Context& cx, ConditionResult& c)
{
    const auto adj_img = adjacency(cx.img);
    const auto adj_tt = adjacency(cx.tt.tree);
    std::set<size_t> tt_boundary(cx.tt.tree.boundary.begin(), cx.tt.tree.boundary.end());

    size_t checked = 0;
    for (size_t i = 0; i < cx.img.vertices.size(); ++i) {
        if (cx.open_end[i]) continue;
        const auto t = cx.tt.tree.index_of(cx.img.vertices[i]);
        const json who = {{"vertex", cx.img_label[i]}, {"image", cx.img.vertices[i].key()}};
        if (!t) {
            refute(c, "image vertex outside the fixed-point tree", who);
            return;
        }
        if (tt_boundary.count(*t)) {
            if (c.verdict == Verdict::Verified) {
                c.verdict = Verdict::Inconclusive;
                c.detail = "star truncated; increase R";
                c.witness = who;
            }
            continue;
        }
        // Orbits of the vertex group on the star of the image in the fixed-point tree.
        const auto& nbrs = adj_tt[*t];
        std::map<std::string, size_t> slot;
        for (size_t k = 0; k < nbrs.size(); ++k) slot[cx.tt.tree.vertices[nbrs[k]].key()] = k;
        std::vector<size_t> parent(nbrs.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (size_t k = 0; k < nbrs.size(); ++k)
            for (const auto& g : *cx.img_group[i]) {
                const auto it = slot.find(g(cx.tt.tree.vertices[nbrs[k]]).key());
                if (it != slot.end()) parent[find(k)] = find(it->second);
            }
        std::set<size_t> orbits;
        for (size_t k = 0; k < nbrs.size(); ++k) orbits.insert(find(k));

        std::map<size_t, std::string> hit;
        for (size_t jn : adj_img[i]) {
            const auto it = slot.find(cx.img.vertices[jn].key());
            if (it == slot.end()) {
                refute(c, "edge of T leaves the fixed-point tree", {{"vertex", cx.img_label[i]}, {"neighbour", cx.img_label[jn]}});
                return;
            }
            const size_t o = find(it->second);
            if (hit.count(o)) {
                refute(c, "two edges of T in one orbit of the star",
                       {{"vertex", cx.img_label[i]}, {"neighbours", {hit[o], cx.img_label[jn]}}});
                return;
            }
            hit[o] = cx.img_label[jn];
        }
        if (hit.size() != orbits.size()) {
            json missed = json::array();
            for (size_t o : orbits)
                if (!hit.count(o)) missed.push_back(cx.tt.tree.vertices[nbrs[o]].key());
            refute(c, "orbit of the star not represented in T",
                   {{"vertex", cx.img_label[i]}, {"orbit_count", orbits.size()}, {"missed", missed}});
            return;
        }
        ++checked;
    }
    if (c.verdict == Verdict::Verified) c.detail = std::to_string(checked) + " stars match the orbit quotients";
}

}  // namespace

CheckReport check_admissible(const EmbeddingSpec& spec, int L, long R)
{
    CheckReport rep;
    rep.L = L;
    rep.R = R;
    rep.precision = spec.field->precision();

    Context cx{spec, spec.image(R), {}, {}, {}, build_tilde_tree(spec, R)};
    for (const auto& info : spec.image_info(cx.img, R)) {
        cx.img_label.push_back(info.label);
        cx.img_group.push_back(&spec.reps[static_cast<size_t>(info.tvertex)]);
        cx.open_end.push_back(info.open_end);
    }

    condition_1(cx, rep.conditions[0]);
    condition_2(cx, L, rep.conditions[1]);
    condition_3(cx, rep.conditions[2]);
    condition_4(cx, rep.conditions[3]);
    condition_5(cx, rep.conditions[4]);

    rep.overall = Verdict::Verified;
    for (const auto& c : rep.conditions)
        if (c.verdict == Verdict::Refuted)
            rep.overall = Verdict::Refuted;
        else if (c.verdict == Verdict::Inconclusive && rep.overall == Verdict::Verified)
            rep.overall = Verdict::Inconclusive;
    return rep;
}

}  // namespace bt
