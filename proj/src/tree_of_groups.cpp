#include "bt/tree_of_groups.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace bt {

using nlohmann::json;

namespace {

FiniteGroup group_from_json(const json& g)
{
    if (g.is_string() && g.get<std::string>() == "trivial") return FiniteGroup::cyclic(1);
    const std::string type = g.at("type").get<std::string>();
    if (type == "trivial") return FiniteGroup::cyclic(1);
    if (type == "cyclic") return FiniteGroup::cyclic(g.at("n").get<int>());
    if (type == "dihedral") return FiniteGroup::dihedral(g.at("n").get<int>());
    if (type == "table") {
        std::vector<std::string> gens;
        if (g.contains("generators")) gens = g.at("generators").get<std::vector<std::string>>();
        return FiniteGroup::table(g.at("elements").get<std::vector<std::string>>(),
                                  g.at("table").get<std::vector<std::vector<int>>>(), gens);
    }
    throw std::invalid_argument("unknown group type " + type);
}

json group_to_json(const FiniteGroup& G)
{
    switch (G.kind()) {
        case FiniteGroup::Kind::Cyclic: return {{"type", "cyclic"}, {"n", G.param()}};
        case FiniteGroup::Kind::Dihedral: return {{"type", "dihedral"}, {"n", G.param()}};
        case FiniteGroup::Kind::Table: {
            std::vector<std::string> names;
            std::vector<std::vector<int>> table(static_cast<size_t>(G.size()));
            for (int x = 0; x < G.size(); ++x) {
                names.push_back(G.name(x));
                for (int y = 0; y < G.size(); ++y) table[static_cast<size_t>(x)].push_back(G.mul(x, y));
            }
            return {{"type", "table"}, {"elements", names}, {"table", table}, {"generators", G.generator_names()}};
        }
    }
    return {};
}

GroupMap map_from_json(const FiniteGroup& src, const FiniteGroup& dst, const json* j, const std::string& where,
                       std::vector<std::string>& issues)
{
    std::vector<int> images;
    const auto& names = src.generator_names();
    for (size_t i = 0; i < names.size(); ++i) {
        if (!j || !j->contains(names[i])) {
            // identity-by-generator default between groups of the same shape
            if (src.label() == dst.label()) {
                images.push_back(dst.generators()[i]);
                continue;
            }
            issues.push_back(where + ": no image given for generator " + names[i]);
            GroupMap bad;
            bad.problem = "missing generator image";
            return bad;
        }
        const std::string target = j->at(names[i]).get<std::string>();
        auto idx = dst.find(target);
        if (!idx) {
            issues.push_back(where + ": unknown element " + target + " of " + dst.label());
            GroupMap bad;
            bad.problem = "unknown element";
            return bad;
        }
        images.push_back(*idx);
    }
    return extend_generators(src, dst, images);
}

json map_to_json(const FiniteGroup& src, const FiniteGroup& dst, const GroupMap& m)
{
    json out = json::object();
    if (m.image.empty()) return out;
    for (size_t i = 0; i < src.generators().size(); ++i)
        out[src.generator_names()[i]] = dst.name(m.image[static_cast<size_t>(src.generators()[i])]);
    return out;
}

}  // namespace

TreeOfGroups TreeOfGroups::from_json(const json& j)
{
    TreeOfGroups T;
    for (const auto& v : j.at("vertices")) {
        TogVertex tv;
        tv.id = v.at("id").get<std::string>();
        tv.group = group_from_json(v.at("group"));
        if (T.index_of(tv.id) >= 0) T.issues.push_back("duplicate vertex id " + tv.id);
        T.vertices.push_back(std::move(tv));
    }
    auto add_edge = [&](int a, int b, const FiniteGroup& G, const json* ja, const json* jb, const std::string& where) {
        TogEdge e;
        e.a = a;
        e.b = b;
        e.group = G;
        e.into_a = map_from_json(G, T.vertices[static_cast<size_t>(a)].group, ja, where, T.issues);
        e.into_b = map_from_json(G, T.vertices[static_cast<size_t>(b)].group, jb, where, T.issues);
        T.edges.push_back(std::move(e));
    };
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            const std::string a = e.at("a").get<std::string>();
            const std::string b = e.at("b").get<std::string>();
            const int ia = T.index_of(a), ib = T.index_of(b);
            if (ia < 0 || ib < 0) {
                T.issues.push_back("edge " + a + " - " + b + " names an unknown vertex");
                continue;
            }
            const json* inj = e.contains("injections") ? &e.at("injections") : nullptr;
            const json* ja = inj && inj->contains(a) ? &inj->at(a) : nullptr;
            const json* jb = inj && inj->contains(b) ? &inj->at(b) : nullptr;
            add_edge(ia, ib, group_from_json(e.at("group")), ja, jb, "edge " + a + " - " + b);
        }
    if (j.contains("rays"))
        for (const auto& r : j.at("rays")) {
            TogRay ray;
            ray.id = r.at("id").get<std::string>();
            if (T.ray_index(ray.id) >= 0) T.issues.push_back("duplicate ray id " + ray.id);
            ray.attach = T.index_of(r.at("attach").get<std::string>());
            if (ray.attach < 0) {
                T.issues.push_back("ray " + ray.id + " attaches to an unknown vertex");
                continue;
            }
            const int rid = static_cast<int>(T.rays.size());
            int prev = ray.attach;
            auto step = [&](const std::string& vid, const FiniteGroup& G, const FiniteGroup& EG, const json* inj, bool tail) {
                TogVertex tv;
                tv.id = vid;
                tv.group = G;
                tv.ray = rid;
                tv.tail = tail;
                T.vertices.push_back(std::move(tv));
                const int cur = static_cast<int>(T.vertices.size()) - 1;
                const json* jp = inj && inj->contains("prev") ? &inj->at("prev") : nullptr;
                const json* jn = inj && inj->contains("next") ? &inj->at("next") : nullptr;
                add_edge(prev, cur, EG, jp, jn, "ray " + ray.id + " step to " + vid);
                ray.path.push_back(cur);
                prev = cur;
            };
            int k = 1;
            if (r.contains("prefix"))
                for (const auto& s : r.at("prefix")) {
                    const FiniteGroup G = group_from_json(s.at("group"));
                    const FiniteGroup EG = s.contains("edge_group") ? group_from_json(s.at("edge_group")) : G;
                    step(ray.id + "." + std::to_string(k++), G, EG, s.contains("injections") ? &s.at("injections") : nullptr, false);
                }
            const FiniteGroup tailG = group_from_json(r.at("tail_group"));
            const FiniteGroup tailE = r.contains("tail_edge_group") ? group_from_json(r.at("tail_edge_group")) : tailG;
            step(ray.id + ".tail", tailG, tailE, r.contains("tail_injections") ? &r.at("tail_injections") : nullptr, true);
            T.rays.push_back(std::move(ray));
        }
    return T;
}

json TreeOfGroups::to_json() const
{
    json out;
    out["vertices"] = json::array();
    out["edges"] = json::array();
    out["rays"] = json::array();
    for (const auto& v : vertices)
        if (v.ray < 0) out["vertices"].push_back({{"id", v.id}, {"group", group_to_json(v.group)}});
    for (const auto& e : edges) {
        const auto& A = vertices[static_cast<size_t>(e.a)];
        const auto& B = vertices[static_cast<size_t>(e.b)];
        if (A.ray >= 0 || B.ray >= 0) continue;
        json inj;
        inj[A.id] = map_to_json(e.group, A.group, e.into_a);
        inj[B.id] = map_to_json(e.group, B.group, e.into_b);
        out["edges"].push_back({{"a", A.id}, {"b", B.id}, {"group", group_to_json(e.group)}, {"injections", inj}});
    }
    for (const auto& r : rays) {
        json jr;
        jr["id"] = r.id;
        jr["attach"] = vertices[static_cast<size_t>(r.attach)].id;
        jr["prefix"] = json::array();
        int prev = r.attach;
        for (int v : r.path) {
            const auto& e = edges[static_cast<size_t>(edge_between(prev, v))];
            const auto& P = vertices[static_cast<size_t>(prev)];
            const auto& V = vertices[static_cast<size_t>(v)];
            json inj{{"prev", map_to_json(e.group, P.group, map_into(edge_between(prev, v), prev))},
                     {"next", map_to_json(e.group, V.group, map_into(edge_between(prev, v), v))}};
            if (V.tail) {
                jr["tail_group"] = group_to_json(V.group);
                jr["tail_edge_group"] = group_to_json(e.group);
                jr["tail_injections"] = inj;
            } else {
                jr["prefix"].push_back({{"group", group_to_json(V.group)}, {"edge_group", group_to_json(e.group)}, {"injections", inj}});
            }
            prev = v;
        }
        out["rays"].push_back(jr);
    }
    return out;
}

int TreeOfGroups::index_of(const std::string& id) const
{
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

int TreeOfGroups::ray_index(const std::string& id) const
{
    for (size_t i = 0; i < rays.size(); ++i)
        if (rays[i].id == id) return static_cast<int>(i);
    return -1;
}

std::vector<std::vector<int>> TreeOfGroups::incidence() const
{
    std::vector<std::vector<int>> inc(vertices.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        inc[static_cast<size_t>(edges[e].a)].push_back(static_cast<int>(e));
        inc[static_cast<size_t>(edges[e].b)].push_back(static_cast<int>(e));
    }
    return inc;
}

std::vector<int> TreeOfGroups::path(int u, int v) const
{
    const auto inc = incidence();
    std::vector<int> par(vertices.size(), -2);
    std::deque<int> q{u};
    par[static_cast<size_t>(u)] = -1;
    while (!q.empty()) {
        const int x = q.front();
        q.pop_front();
        if (x == v) break;
        for (int e : inc[static_cast<size_t>(x)]) {
            const int y = other_end(e, x);
            if (par[static_cast<size_t>(y)] == -2) {
                par[static_cast<size_t>(y)] = x;
                q.push_back(y);
            }
        }
    }
    if (par[static_cast<size_t>(v)] == -2) return {};
    std::vector<int> out;
    for (int x = v; x != -1; x = par[static_cast<size_t>(x)]) out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
}

const GroupMap& TreeOfGroups::map_into(int edge, int v) const
{
    const auto& e = edges[static_cast<size_t>(edge)];
    return e.a == v ? e.into_a : e.into_b;
}

int TreeOfGroups::edge_between(int u, int v) const
{
    for (size_t e = 0; e < edges.size(); ++e)
        if ((edges[e].a == u && edges[e].b == v) || (edges[e].a == v && edges[e].b == u)) return static_cast<int>(e);
    return -1;
}

// ---------------------------------------------------------------------------

ValidationReport validate(const TreeOfGroups& T)
{
    ValidationReport rep;
    for (const auto& s : T.issues) rep.problems.push_back(s);
    std::set<std::string> ids;
    for (const auto& v : T.vertices)
        if (!ids.insert(v.id).second) rep.problems.push_back("duplicate vertex id " + v.id);
    if (T.vertices.empty()) rep.problems.push_back("no vertices");
    if (!T.vertices.empty()) {
        if (T.edges.size() + 1 != T.vertices.size())
            rep.problems.push_back("core with rays is not a tree: " + std::to_string(T.vertices.size()) + " vertices, " +
                                   std::to_string(T.edges.size()) + " edges");
        for (size_t v = 1; v < T.vertices.size(); ++v)
            if (T.path(0, static_cast<int>(v)).empty()) {
                rep.problems.push_back("vertex " + T.vertices[v].id + " is not connected to " + T.vertices[0].id);
                break;
            }
    }
    for (const auto& e : T.edges) {
        const std::string where = "edge " + T.vertices[static_cast<size_t>(e.a)].id + " - " + T.vertices[static_cast<size_t>(e.b)].id;
        for (const GroupMap* m : {&e.into_a, &e.into_b})
            if (!m->homomorphism || !m->injective)
                rep.problems.push_back(where + ": invalid injection (" + m->problem + ")");
    }
    for (const auto& r : T.rays) {
        const auto& tail = T.vertices[static_cast<size_t>(r.tail())];
        if (tail.group.size() == 1)
            rep.problems.push_back("ray " + r.id + ": trivial tail group, a half-line carrying only trivial groups");
    }
    rep.ok = rep.problems.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// Amalgam normal forms

std::string NormalForm::key() const
{
    std::string s;
    for (const auto& st : steps) {
        s += std::to_string(st.vertex) + ':' + std::to_string(st.edge) + ':' + std::to_string(st.rep) + ',';
    }
    s += '|';
    s += std::to_string(r);
    return s;
}

struct Amalgam::State {
    std::vector<NormalForm::Step> stack;
    int cur = 0;
    int carry = 0;
};

Amalgam::Amalgam(const TreeOfGroups& tog) : tog_(&tog)
{
    const auto& T = tog;
    auto build = [&](int edge, int v) {
        const auto& G = T.vertices[static_cast<size_t>(v)].group;
        const auto& e = T.edges[static_cast<size_t>(edge)];
        const auto& m = T.map_into(edge, v);
        if (!m.homomorphism || !m.injective) throw std::invalid_argument("amalgam needs valid edge injections");
        std::vector<int> pre(static_cast<size_t>(G.size()), -1);
        for (int h = 0; h < e.group.size(); ++h) pre[static_cast<size_t>(m.image[static_cast<size_t>(h)])] = h;
        Side s;
        s.rep.assign(static_cast<size_t>(G.size()), -1);
        s.edge_elem.assign(static_cast<size_t>(G.size()), -1);
        for (int x = 0; x < G.size(); ++x) {
            int best = x;
            for (int h = 0; h < e.group.size(); ++h) best = std::min(best, G.mul(x, m.image[static_cast<size_t>(h)]));
            s.rep[static_cast<size_t>(x)] = best;
            s.edge_elem[static_cast<size_t>(x)] = pre[static_cast<size_t>(G.mul(G.inv(best), x))];
        }
        return s;
    };
    for (size_t e = 0; e < T.edges.size(); ++e) {
        side_a_.push_back(build(static_cast<int>(e), T.edges[e].a));
        side_b_.push_back(build(static_cast<int>(e), T.edges[e].b));
    }
    parent_.assign(T.vertices.size(), -1);
    parent_edge_.assign(T.vertices.size(), -1);
    const auto inc = T.incidence();
    std::vector<bool> seen(T.vertices.size(), false);
    std::deque<int> q{0};
    seen[0] = true;
    while (!q.empty()) {
        const int x = q.front();
        q.pop_front();
        for (int e : inc[static_cast<size_t>(x)]) {
            const int y = T.other_end(e, x);
            if (seen[static_cast<size_t>(y)]) continue;
            seen[static_cast<size_t>(y)] = true;
            parent_[static_cast<size_t>(y)] = x;
            parent_edge_[static_cast<size_t>(y)] = e;
            q.push_back(y);
        }
    }
}

void Amalgam::feed(State& s, int edge, int next_vertex, int next_elem) const
{
    const auto& T = *tog_;
    const auto& e = T.edges[static_cast<size_t>(edge)];
    const Side& side = e.a == s.cur ? side_a_[static_cast<size_t>(edge)] : side_b_[static_cast<size_t>(edge)];
    const int rep = side.rep[static_cast<size_t>(s.carry)];
    const int h = side.edge_elem[static_cast<size_t>(s.carry)];
    const int moved = T.map_into(edge, next_vertex).image[static_cast<size_t>(h)];
    const auto& G = T.vertices[static_cast<size_t>(next_vertex)].group;
    if (rep == 0 && !s.stack.empty() && s.stack.back().edge == edge) {
        const int prev_rep = s.stack.back().rep;
        s.stack.pop_back();
        s.carry = G.mul(prev_rep, G.mul(moved, next_elem));
    } else {
        s.stack.push_back({s.cur, edge, rep});
        s.carry = G.mul(moved, next_elem);
    }
    s.cur = next_vertex;
}

NormalForm Amalgam::multiply(const NormalForm& x, const Letter& a) const
{
    const auto& T = *tog_;
    State s;
    s.stack = x.steps;
    s.cur = 0;
    s.carry = x.r;
    if (a.vertex == 0) {
        s.carry = T.vertices[0].group.mul(s.carry, a.element);
        return {std::move(s.stack), s.carry};
    }
    std::vector<int> down;  // vertices from the base (exclusive) to a.vertex
    for (int v = a.vertex; v != 0; v = parent_[static_cast<size_t>(v)]) down.push_back(v);
    std::reverse(down.begin(), down.end());
    for (size_t i = 0; i < down.size(); ++i) {
        const int v = down[i];
        feed(s, parent_edge_[static_cast<size_t>(v)], v, i + 1 == down.size() ? a.element : 0);
    }
    for (size_t i = down.size(); i-- > 0;) {
        const int v = down[i];
        feed(s, parent_edge_[static_cast<size_t>(v)], parent_[static_cast<size_t>(v)], 0);
    }
    return {std::move(s.stack), s.carry};
}

NormalForm Amalgam::of_word(const std::vector<Letter>& word) const
{
    NormalForm x;
    for (const auto& a : word) x = multiply(x, a);
    return x;
}

std::vector<size_t> Enumeration::counts() const
{
    std::vector<size_t> c;
    for (const auto& s : strata) c.push_back(s.size());
    return c;
}

std::string Enumeration::letter_str(const TreeOfGroups& tog, int letter) const
{
    const auto& l = letters[static_cast<size_t>(letter)];
    const auto& v = tog.vertices[static_cast<size_t>(l.vertex)];
    return v.group.name(l.element) + "[" + v.id + "]";
}

std::string Enumeration::word_str(const TreeOfGroups& tog, const AmalgamWord& w) const
{
    if (w.letters.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += " * ";
        s += letter_str(tog, w.letters[i]);
    }
    return s;
}

Enumeration amalgam_enumerate(const TreeOfGroups& tog, int L, size_t cap)
{
    const auto report = validate(tog);
    if (!report.ok) throw std::invalid_argument("tree of groups is not valid: " + report.problems.front());
    Amalgam A(tog);
    Enumeration out;
    std::unordered_set<std::string> seen;
    AmalgamWord one;
    seen.insert(one.nf.key());
    out.strata.push_back({one});
    std::vector<NormalForm> letter_nf;
    for (size_t v = 0; v < tog.vertices.size(); ++v) {
        const auto& G = tog.vertices[v].group;
        for (int x = 1; x < G.size(); ++x) {
            Letter l{static_cast<int>(v), x};
            NormalForm nf = A.of_letter(l);
            if (!seen.insert(nf.key()).second) continue;
            out.letters.push_back(l);
            letter_nf.push_back(std::move(nf));
        }
    }
    if (L >= 1) {
        std::vector<AmalgamWord> s1;
        for (size_t i = 0; i < out.letters.size(); ++i) s1.push_back({{static_cast<int>(i)}, letter_nf[i]});
        out.strata.push_back(std::move(s1));
    }
    size_t total = 1 + out.letters.size();
    for (int m = 2; m <= L; ++m) {
        std::vector<AmalgamWord> next;
        for (const auto& w : out.strata[static_cast<size_t>(m - 1)]) {
            for (size_t i = 0; i < out.letters.size(); ++i) {
                NormalForm nf = A.multiply(w.nf, out.letters[i]);
                if (seen.count(nf.key())) continue;
                if (total == cap) {
                    out.truncated = true;
                    out.strata.push_back(std::move(next));
                    return out;
                }
                seen.insert(nf.key());
                AmalgamWord nw{w.letters, std::move(nf)};
                nw.letters.push_back(static_cast<int>(i));
                next.push_back(std::move(nw));
                ++total;
            }
        }
        out.strata.push_back(std::move(next));
    }
    return out;
}

EndStabilizer end_stabilizer(const TreeOfGroups& tog, const std::string& ray_id)
{
    const int r = tog.ray_index(ray_id);
    if (r < 0) throw std::invalid_argument("unknown ray " + ray_id);
    const auto& G = tog.vertices[static_cast<size_t>(tog.rays[static_cast<size_t>(r)].tail())].group;
    if (G.size() == 1) throw std::invalid_argument("ray " + ray_id + " has trivial tail group");
    if (!G.is_cyclic()) throw std::invalid_argument("ray " + ray_id + " has non-cyclic tail group " + G.label());
    return {ray_id, G, G.size()};
}

ContractionVerdict contraction_check(const TreeOfGroups& inner, const TreeOfGroups& outer,
                                     const std::map<std::string, std::string>& embedding)
{
    std::vector<int> img(inner.vertices.size(), -1);
    std::set<int> used;
    for (size_t v = 0; v < inner.vertices.size(); ++v) {
        auto it = embedding.find(inner.vertices[v].id);
        if (it == embedding.end()) throw std::invalid_argument("embedding misses vertex " + inner.vertices[v].id);
        const int w = outer.index_of(it->second);
        if (w < 0) throw std::invalid_argument("embedding targets unknown vertex " + it->second);
        if (!used.insert(w).second) throw std::invalid_argument("embedding is not injective at " + it->second);
        if (inner.vertices[v].group.label() != outer.vertices[static_cast<size_t>(w)].group.label())
            throw std::invalid_argument("embedding changes the group at " + inner.vertices[v].id);
        img[v] = w;
    }
    for (const auto& e : inner.edges)
        if (outer.edge_between(img[static_cast<size_t>(e.a)], img[static_cast<size_t>(e.b)]) < 0)
            throw std::invalid_argument("embedding does not map edge " + inner.vertices[static_cast<size_t>(e.a)].id + " - " +
                                        inner.vertices[static_cast<size_t>(e.b)].id + " to an edge");

    ContractionVerdict out;
    std::set<int> matched;
    for (const auto& r : inner.rays) {
        const int w = img[static_cast<size_t>(r.tail())];
        const int oray = outer.vertices[static_cast<size_t>(w)].ray;
        if (oray < 0 || !outer.vertices[static_cast<size_t>(w)].tail) {
            out.reasons.push_back("end " + r.id + " does not map to an end of the outer tree");
            continue;
        }
        if (!matched.insert(oray).second) out.reasons.push_back("two ends map to outer end " + outer.rays[static_cast<size_t>(oray)].id);
    }
    for (size_t r = 0; r < outer.rays.size(); ++r)
        if (!matched.count(static_cast<int>(r))) out.reasons.push_back("outer end " + outer.rays[r].id + " has no preimage");

    // stabilizers must increase toward the image
    const auto inc = outer.incidence();
    std::vector<int> toward(outer.vertices.size(), -2);
    std::deque<int> q;
    for (int w : used) {
        toward[static_cast<size_t>(w)] = -1;
        q.push_back(w);
    }
    while (!q.empty()) {
        const int x = q.front();
        q.pop_front();
        for (int e : inc[static_cast<size_t>(x)]) {
            const int y = outer.other_end(e, x);
            if (toward[static_cast<size_t>(y)] != -2) continue;
            toward[static_cast<size_t>(y)] = e;
            q.push_back(y);
        }
    }
    for (size_t y = 0; y < outer.vertices.size(); ++y) {
        const int e = toward[y];
        if (e < 0) continue;
        if (outer.edges[static_cast<size_t>(e)].group.size() != outer.vertices[y].group.size())
            out.reasons.push_back("group at " + outer.vertices[y].id + " does not embed into its neighbour toward the image");
    }
    out.contraction = out.reasons.empty();
    return out;
}

}  // namespace bt
