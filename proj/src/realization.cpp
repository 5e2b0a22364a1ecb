#include "bt/realization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bt {

using json = nlohmann::json;

OrbitTree build_orbit_tree(const EmbeddingSpec& spec, int L, long R, Kernel kernel)
{
    OrbitTree ot;
    ot.spec = &spec;
    ot.L = L;
    ot.R = R;
    ot.words = amalgam_enumerate(spec.tog, L);
    ot.base = spec.image(R);
    for (const auto& info : spec.image_info(ot.base, R)) ot.base_label.push_back(info.label);

    // Word matrices, stratum by stratum.
    for (const auto& stratum : ot.words.strata)
        for (const auto& w : stratum) {
            Pgl2 m = Pgl2::identity(spec.field);
            for (int li : w.letters) {
                const auto& a = ot.words.letters[static_cast<size_t>(li)];
                m = m * spec.reps[static_cast<size_t>(a.vertex)][static_cast<size_t>(a.element)];
            }
            ot.matrix.push_back(std::move(m));
            ot.length.push_back(w.length());
            ot.name.push_back(ot.words.word_str(spec.tog, w));
        }

    std::vector<Mat2> gs;
    gs.reserve(ot.matrix.size());
    for (const auto& m : ot.matrix) gs.push_back(m.matrix());
    const auto table = kernel == Kernel::Parallel ? translate_parallel(gs, ot.base.vertices) : translate_serial(gs, ot.base.vertices);

    // Deterministic merge in word order.
    std::vector<BtVertex> verts;
    std::vector<std::pair<BtVertex, BtVertex>> edges;
    for (size_t w = 0; w < table.size(); ++w) {
        for (const auto& v : table[w]) verts.push_back(v);
        for (const auto& [i, j] : ot.base.edges) edges.emplace_back(table[w][i], table[w][j]);
    }
    ot.tree = SubtreeTruncation::assemble(verts, edges);
    ot.tree.radius = R;
    ot.tree.centre = spec.iota[0];
    ot.image.assign(table.size(), {});
    ot.origins.assign(ot.tree.vertices.size(), {});
    for (size_t w = 0; w < table.size(); ++w)
        for (size_t i = 0; i < table[w].size(); ++i) {
            const size_t k = *ot.tree.index_of(table[w][i]);
            ot.image[w].push_back(k);
            ot.origins[k].emplace_back(w, i);
        }
    return ot;
}

DisjointnessAudit disjointness_audit(const OrbitTree& ot)
{
    DisjointnessAudit a;
    std::set<size_t> base_set;
    for (const auto& v : ot.base.vertices) base_set.insert(*ot.tree.index_of(v));
    for (size_t w = 0; w < ot.word_count(); ++w) {
        if (ot.length[w] == 0) continue;
        ++a.checked;
        const bool meets = std::any_of(ot.image[w].begin(), ot.image[w].end(), [&](size_t k) { return base_set.count(k) > 0; });
        if (ot.length[w] == 1 && !meets) a.missing.push_back(w);
        if (ot.length[w] >= 2 && meets) a.violations.push_back(w);
    }
    return a;
}

std::vector<Pgl2> stabilizer_of_vertex(const OrbitTree& ot, const BtVertex& v, int max_length)
{
    std::vector<Pgl2> out;
    std::set<std::string> seen;
    const auto base_i = ot.base.index_of(v);
    const auto tree_k = ot.tree.index_of(v);
    for (size_t w = 0; w < ot.word_count(); ++w) {
        if (max_length >= 0 && ot.length[w] > max_length) continue;
        const bool fixes = base_i && tree_k ? ot.image[w][*base_i] == *tree_k : ot.matrix[w](v) == v;
        if (fixes && seen.insert(ot.matrix[w].key()).second) out.push_back(ot.matrix[w]);
    }
    return out;
}

QuotientReport quotient_graph(const OrbitTree& ot)
{
    QuotientReport q;
    const auto& spec = *ot.spec;
    for (size_t k = 0; k < ot.tree.vertices.size(); ++k) {
        std::set<size_t> cls;
        for (const auto& o : ot.origins[k]) cls.insert(o.second);
        if (cls.size() > 1) {
            q.classes_consistent = false;
            std::string msg = ot.tree.vertices[k].key() + ":";
            for (size_t i : cls) msg += " " + ot.base_label[i];
            q.conflicts.push_back(msg);
        }
    }
    // Quotient graph: base classes joined by images of orbit-tree edges.
    std::vector<size_t> cls(ot.tree.vertices.size());
    for (size_t k = 0; k < cls.size(); ++k) cls[k] = ot.origins[k].front().second;
    std::set<std::pair<size_t, size_t>> qedges;
    long loops = 0;
    for (const auto& [i, j] : ot.tree.edges) {
        const size_t a = cls[i], b = cls[j];
        if (a == b)
            ++loops;
        else
            qedges.insert({std::min(a, b), std::max(a, b)});
    }
    std::set<size_t> qverts(cls.begin(), cls.end());
    q.vertices = qverts.size();
    q.edges = qedges.size() + (loops ? 1 : 0);

    auto components = [](size_t n, const auto& es) {
        std::vector<size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        long c = static_cast<long>(n);
        for (const auto& [i, j] : es) {
            const size_t a = find(i), b = find(j);
            if (a != b) {
                parent[a] = b;
                --c;
            }
        }
        return c;
    };
    const long qc = components(ot.base.vertices.size(), qedges);
    q.betti = static_cast<long>(qedges.size()) + (loops ? 1 : 0) - static_cast<long>(ot.base.vertices.size()) + qc;
    const long uc = components(ot.tree.vertices.size(), ot.tree.edges);
    q.connected = uc == 1;
    q.union_betti = static_cast<long>(ot.tree.edges.size()) - static_cast<long>(ot.tree.vertices.size()) + uc;

    for (size_t v = 0; v < spec.iota.size(); ++v) {
        const auto stab = stabilizer_of_vertex(ot, spec.iota[v]);
        std::set<std::string> got, want;
        for (const auto& g : stab) got.insert(g.key());
        for (const auto& g : spec.reps[v]) want.insert(g.key());
        if (got != want) {
            q.decorations_match = false;
            q.decoration_problems.push_back(spec.tog.vertices[v].id + ": stabilizer order " + std::to_string(got.size()) +
                                            ", vertex group order " + std::to_string(want.size()));
        }
    }
    return q;
}

bool BranchReport::ok() const
{
    return stabilizer_orders == expected_orders && std::all_of(cyclic.begin(), cyclic.end(), [](bool b) { return b; });
}

BranchReport branch_report(const OrbitTree& ot)
{
    BranchReport b;
    const auto& spec = *ot.spec;
    for (size_t r = 0; r < spec.tog.rays.size(); ++r) {
        const auto& ray = spec.tog.rays[r];
        const auto stab = stabilizer_of_vertex(ot, spec.iota[static_cast<size_t>(ray.tail())]);
        b.ends.push_back(ray.id);
        b.stabilizer_orders.push_back(static_cast<int>(stab.size()));
        b.expected_orders.push_back(end_stabilizer(spec.tog, ray.id).order);
        bool cyc = stab.size() == 1;
        for (const auto& g : stab) {
            const auto o = order(g, static_cast<long>(stab.size()) + 1);
            if (o.status == OrderResult::Status::Finite && o.order == static_cast<long>(stab.size())) cyc = true;
        }
        b.cyclic.push_back(cyc);
    }
    b.genus = quotient_graph(ot).betti;
    return b;
}

DiscretenessAudit discreteness_audit(const OrbitTree& ot, int V)
{
    DiscretenessAudit d;
    d.V = V;
    const BtVertex& v0 = ot.spec->iota[0];
    d.stabilizer_short = stabilizer_of_vertex(ot, v0, std::max(0, ot.L - 2)).size();
    d.stabilizer_full = stabilizer_of_vertex(ot, v0).size();
    for (size_t w = 0; w < ot.word_count(); ++w) {
        const Pgl2& g = ot.matrix[w];
        if (g.is_identity()) continue;
        const Mat2& m = g.matrix();
        const PAdic one = PAdic::one(g.field());
        auto small = [&](const PAdic& x) { return x.is_zero() || x.valuation() >= V; };
        if (!(small(m.a - one) && small(m.b) && small(m.c) && small(m.d - one))) continue;
        const auto o = order(g);
        if (o.status != OrderResult::Status::Finite) d.near_identity.push_back(ot.name[w]);
    }
    return d;
}

LimitTreeReport limit_tree_approx(const OrbitTree& ot, int hyper_length, long radius)
{
    LimitTreeReport r;
    std::vector<ProjPoint> ends;
    for (size_t w = 0; w < ot.word_count(); ++w) {
        if (ot.length[w] > hyper_length) continue;
        if (classify(ot.matrix[w]).kind != ElementKind::Hyperbolic) continue;
        ++r.hyperbolic;
        const Axis ax = hyperbolic_axis(ot.matrix[w]);
        for (const auto& z : {ax.attracting, ax.repelling})
            if (std::find(ends.begin(), ends.end(), z) == ends.end()) ends.push_back(z);
    }
    const auto lt = tree_of_ends(ends, radius);
    r.limit_vertices = lt.vertices.size();
    for (const auto& v : lt.vertices)
        if (ot.tree.contains(v))
            ++r.contained;
        else
            r.missing.push_back(v.key());
    return r;
}

json to_json(const DisjointnessAudit& a, const OrbitTree& ot)
{
    json v = json::array(), m = json::array();
    for (size_t w : a.violations) v.push_back(ot.name[w]);
    for (size_t w : a.missing) m.push_back(ot.name[w]);
    return {{"checked", a.checked}, {"violations", v}, {"letters_missing_base", m}, {"ok", a.ok()}};
}

json to_json(const QuotientReport& q)
{
    return {{"classes_consistent", q.classes_consistent}, {"conflicts", q.conflicts}, {"vertices", q.vertices},
            {"edges", q.edges}, {"betti", q.betti}, {"orbit_tree_betti", q.union_betti}, {"connected", q.connected},
            {"decorations_match", q.decorations_match}, {"decoration_problems", q.decoration_problems}};
}

json to_json(const BranchReport& b)
{
    return {{"ends", b.ends}, {"stabilizer_orders", b.stabilizer_orders}, {"expected_orders", b.expected_orders},
            {"cyclic", b.cyclic}, {"genus", b.genus}, {"ok", b.ok()}};
}

json to_json(const DiscretenessAudit& d)
{
    return {{"stabilizer_orders", {d.stabilizer_short, d.stabilizer_full}}, {"stable", d.stable()},
            {"near_identity", d.near_identity}, {"V", d.V}, {"verdict", d.discrete() ? "discrete" : "inconclusive"}};
}

json to_json(const LimitTreeReport& l)
{
    return {{"hyperbolic_words", l.hyperbolic}, {"limit_vertices", l.limit_vertices}, {"contained", l.contained},
            {"missing", l.missing}, {"ok", l.ok()}};
}

std::string orbit_dot(const OrbitTree& ot)
{
    std::ostringstream os;
    os << "graph orbit {\n";
    os << "  node [shape=point];\n";
    for (size_t k = 0; k < ot.tree.vertices.size(); ++k) {
        const auto& [w, i] = ot.origins[k].front();
        os << "  v" << k;
        if (ot.length[w] == 0)
            os << " [shape=box, fontname=\"monospace\", label=\"" << ot.base_label[i] << "\\n" << ot.tree.vertices[k].key() << "\"]";
        os << ";\n";
    }
    for (const auto& [i, j] : ot.tree.edges) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string quotient_dot(const OrbitTree& ot)
{
    const auto& tog = ot.spec->tog;
    std::ostringstream os;
    os << "graph quotient {\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (size_t v = 0; v < tog.vertices.size(); ++v)
        os << "  q" << v << " [label=\"" << tog.vertices[v].id << "\\n" << tog.vertices[v].group.label() << "\"];\n";
    for (const auto& e : tog.edges) {
        os << "  q" << e.a << " -- q" << e.b;
        if (e.group.size() > 1) os << " [label=\"" << e.group.label() << "\"]";
        os << ";\n";
    }
    for (size_t r = 0; r < tog.rays.size(); ++r) {
        os << "  end" << r << " [shape=plaintext, label=\"" << tog.rays[r].id << "\"];\n";
        os << "  q" << tog.rays[r].tail() << " -- end" << r << " [dir=forward, style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace bt
