#include "bt/report.hpp"

#include <algorithm>

namespace bt {

using json = nlohmann::json;

namespace {

json valuation_json(long v) { return v == kInfiniteValuation ? json("inf") : json(v); }

json bounds_json(const EmbeddingSpec& spec, int L, long R)
{
    return {{"L", L}, {"R", R}, {"precision", spec.field->precision()}};
}

int worse(int a, int b)
{
    // refuted > inconclusive > ok; precision failures are handled by the caller
    auto rank = [](int c) { return c == kExitRefuted ? 2 : c == kExitInconclusive ? 1 : 0; };
    return rank(a) >= rank(b) ? a : b;
}

}  // namespace

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json field_report(const Field& F)
{
    return {{"p", F.p()}, {"f", F.f()}, {"e", F.e()}, {"q", F.q()}, {"precision", F.precision()},
            {"unramified_poly", F.unramified_poly()}, {"describe", F.describe()}};
}

json classify_report(const Pgl2& g)
{
    const auto cls = classify(g);
    json j;
    j["matrix"] = g.str();
    j["mobius"] = g.mobius_str();
    j["class"] = kind_name(cls.kind);
    j["certificate"] = cls.certificate;
    j["trace_valuation"] = valuation_json(cls.trace_valuation);
    j["det_valuation"] = valuation_json(cls.det_valuation);
    j["bounds"] = {{"precision", g.field()->precision()}};
    if (cls.kind == ElementKind::Identity) return j;
    try {
        const auto fp = fixed_points(g);
        json pts = json::array();
        for (const auto& z : fp.points) pts.push_back(z.str());
        j["fixed_points"] = pts;
    } catch (const FieldError& e) {
        j["fixed_points"] = "not rational: " + std::string(e.what());
    }
    if (cls.kind == ElementKind::Elliptic) {
        const auto o = order(g);
        j["order"] = o.str();
        try {
            const Mirror M = mirror(g);
            j["mirror"] = {M.z.str(), M.w.str()};
            if (o.status == OrderResult::Status::Finite) j["fixed_radius"] = fixed_radius(g);
        } catch (const FieldError&) {
            j["mirror"] = nullptr;
        }
    }
    if (cls.kind == ElementKind::Hyperbolic) {
        const Axis ax = hyperbolic_axis(g);
        j["axis"] = {{"attracting", ax.attracting.str()}, {"repelling", ax.repelling.str()},
                     {"translation_length", ax.translation_length}};
    }
    return j;
}

RunResult run_check(const EmbeddingSpec& spec, int L, long R)
{
    RunResult out;
    const auto rep = check_admissible(spec, L, R);
    out.report["check"] = rep.to_json();
    out.report["bounds"] = bounds_json(spec, L, R);
    out.report["field"] = field_report(*spec.field);
    if (!spec.notes.empty()) out.report["notes"] = spec.notes;
    out.exit_code = rep.overall == Verdict::Refuted ? kExitRefuted : rep.overall == Verdict::Inconclusive ? kExitInconclusive : kExitOk;
    return out;
}

RunResult run_realize(const EmbeddingSpec& spec, int L, long R, Kernel kernel)
{
    RunResult out;
    const auto ot = build_orbit_tree(spec, L, R, kernel);
    json& j = out.report;
    j["bounds"] = bounds_json(spec, L, R);
    j["field"] = field_report(*spec.field);
    if (!spec.notes.empty()) j["notes"] = spec.notes;
    j["orbit_tree"] = {{"word_counts", ot.words.counts()},
                       {"words_truncated", ot.words.truncated},
                       {"vertices", ot.tree.vertices.size()},
                       {"edges", ot.tree.edges.size()},
                       {"is_tree", ot.tree.is_tree()}};

    const auto dis = disjointness_audit(ot);
    const auto quo = quotient_graph(ot);
    j["disjointness"] = to_json(dis, ot);
    j["quotient"] = to_json(quo);
    int code = dis.ok() && quo.classes_consistent && quo.connected && quo.decorations_match && quo.betti == 0 && ot.tree.is_tree()
                   ? kExitOk
                   : kExitRefuted;

    json stabs = json::array();
    for (size_t v = 0; v < spec.iota.size(); ++v) {
        if (!spec.tog.is_core(static_cast<int>(v))) continue;
        const auto full = stabilizer_of_vertex(ot, spec.iota[v]);
        const auto shorter = stabilizer_of_vertex(ot, spec.iota[v], std::max(0, L - 2));
        std::vector<std::string> got, want;
        for (const auto& g : full) got.push_back(g.key());
        for (const auto& g : spec.reps[v]) want.push_back(g.key());
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        stabs.push_back({{"vertex", spec.tog.vertices[v].id},
                         {"image", spec.iota[v].key()},
                         {"group", spec.tog.vertices[v].group.label()},
                         {"order", full.size()},
                         {"equals_vertex_group", got == want},
                         {"stable", shorter.size() == full.size()}});
        if (got != want) code = worse(code, kExitRefuted);
    }
    j["stabilizers"] = stabs;

    try {
        const auto br = branch_report(ot);
        j["branch"] = to_json(br);
        if (!br.ok()) code = worse(code, kExitRefuted);
    } catch (const std::invalid_argument& e) {
        j["branch"] = {{"error", e.what()}, {"ok", false}};
        code = worse(code, kExitRefuted);
    }

    const auto disc = discreteness_audit(ot);
    j["discreteness"] = to_json(disc);
    if (!disc.discrete()) code = worse(code, kExitInconclusive);

    const auto lim = limit_tree_approx(ot, std::min(L, 3), 3);
    j["limit_tree"] = to_json(lim);
    if (!lim.ok()) code = worse(code, kExitInconclusive);

    out.orbit_dot = orbit_dot(ot);
    out.quotient_dot = quotient_dot(ot);
    out.exit_code = code;
    return out;
}

RunResult run_pipeline(const EmbeddingSpec& spec, int L, long R, Kernel kernel)
{
    RunResult c = run_check(spec, L, R);
    RunResult r = run_realize(spec, L, R, kernel);
    r.report["check"] = c.report["check"];
    r.report["spec"] = spec.to_json();
    r.exit_code = worse(c.exit_code, r.exit_code);
    return r;
}

}  // namespace bt
