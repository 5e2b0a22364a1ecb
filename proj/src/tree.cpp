#include "bt/tree.hpp"

#include <algorithm>
#include <functional>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace bt {

// ---------------------------------------------------------------------------
// Mat2

Mat2 Mat2::identity(const FieldPtr& F)
{
    return {PAdic::one(F), PAdic::zero(F), PAdic::zero(F), PAdic::one(F)};
}

Mat2 Mat2::diag(const PAdic& x, const PAdic& y)
{
    return {x, PAdic::zero(x.field()), PAdic::zero(x.field()), y};
}

Mat2 Mat2::operator*(const Mat2& o) const
{
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const
{
    const PAdic r = det().inverse();
    return {d * r, -b * r, -c * r, a * r};
}

Mat2 Mat2::pow(long n) const
{
    if (n < 0) return adjugate().pow(-n);
    Mat2 r = identity(field());
    Mat2 base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return r;
}

long Mat2::min_valuation() const
{
    return std::min({a.valuation(), b.valuation(), c.valuation(), d.valuation()});
}

std::string Mat2::str() const
{
    return "[" + short_str(a) + ", " + short_str(b) + "; " + short_str(c) + ", " + short_str(d) + "]";
}

// ---------------------------------------------------------------------------
// ProjPoint

ProjPoint::ProjPoint(const PAdic& x0, const PAdic& x1)
{
    const FieldPtr& F = x0.field() ? x0.field() : x1.field();
    if (x0.is_zero() && x1.is_zero()) throw ArithmeticError("(0:0) is not a point");
    if (x1.is_zero()) {
        x0_ = PAdic::one(F);
        x1_ = PAdic::zero(F);
    } else if (x0.is_zero()) {
        x0_ = PAdic::zero(F);
        x1_ = PAdic::one(F);
    } else if (x0.valuation() <= x1.valuation()) {
        x0_ = PAdic::one(F);
        x1_ = x1 / x0;
    } else {
        x0_ = x0 / x1;
        x1_ = PAdic::one(F);
    }
}

ProjPoint ProjPoint::infinity(const FieldPtr& F) { return {PAdic::one(F), PAdic::zero(F)}; }

ProjPoint ProjPoint::of(const PAdic& z) { return {z, PAdic::one(z.field())}; }

PAdic ProjPoint::value() const
{
    if (is_infinity()) throw ArithmeticError("affine value of the point at infinity");
    return x0_ / x1_;
}

bool ProjPoint::operator==(const ProjPoint& o) const
{
    return x0_.approx_equal(o.x0_) && x1_.approx_equal(o.x1_);
}

std::string ProjPoint::str() const
{
    if (is_infinity()) return "inf";
    return short_str(value());
}

ProjPoint operator*(const Mat2& g, const ProjPoint& z)
{
    return {g.a * z.x0() + g.b * z.x1(), g.c * z.x0() + g.d * z.x1()};
}

// ---------------------------------------------------------------------------
// BtVertex

BtVertex::BtVertex(long n, const PAdic& b) : n_(n), b_(b.reduce_mod(n))
{
    key_ = "(" + std::to_string(n_) + "; " + b_.expansion_below(n_) + ")";
}

BtVertex BtVertex::origin(const FieldPtr& F) { return BtVertex(0, PAdic::zero(F)); }

Mat2 BtVertex::matrix() const
{
    const FieldPtr& F = field();
    return {PAdic::pi_power(F, n_), b_, PAdic::zero(F), PAdic::one(F)};
}

bool BtVertex::operator<(const BtVertex& o) const
{
    if (n_ != o.n_) return n_ < o.n_;
    return key_ < o.key_;
}

BtVertex vertex_from_matrix(const Mat2& M)
{
    if (M.c.is_zero() && M.d.is_zero()) throw ArithmeticError("singular lattice matrix");
    const PAdic det = M.det();
    if (det.is_zero()) throw ArithmeticError("singular lattice matrix");
    const bool second = M.d.valuation() <= M.c.valuation();
    const PAdic& B = second ? M.b : M.a;
    const PAdic& D = second ? M.d : M.c;
    const long n = det.valuation() - 2 * D.valuation();
    return BtVertex(n, B / D);
}

BtVertex act(const Mat2& g, const BtVertex& v) { return vertex_from_matrix(g * v.matrix()); }

long distance(const BtVertex& v, const BtVertex& w)
{
    const Mat2 N = v.matrix().adjugate() * w.matrix();
    return N.det().valuation() - 2 * N.min_valuation();
}

std::vector<BtVertex> geodesic(const BtVertex& v, const BtVertex& w)
{
    const FieldPtr& F = v.field();
    const Mat2 Mv = v.matrix();
    const BtVertex local = vertex_from_matrix(Mv.adjugate() * w.matrix());
    const long m = local.n();
    const PAdic& c = local.b();
    const long a = std::min({m, c.valuation(), 0L});
    std::vector<BtVertex> path;
    path.reserve(static_cast<size_t>(m - 2 * a + 1));
    for (long k = 0; k >= a; --k) path.push_back(act(Mv, BtVertex(k, PAdic::zero(F))));
    for (long k = a + 1; k <= m; ++k) path.push_back(act(Mv, BtVertex(k, c)));
    return path;
}

namespace {

PAdic residue_lift(const FieldPtr& F, long t)
{
    if (t == 0) return PAdic::zero(F);
    return PAdic::from_digits(F, 0, {t}, true);
}

// Gromov product at the standard vertex: the distance from it to ]x, y[.
long gromov(const ProjPoint& x, const ProjPoint& y)
{
    if (x == y) return kInfiniteValuation;
    const PAdic det = x.x0() * y.x1() - x.x1() * y.x0();
    return det.valuation();
}

long sat_add(long a, long b)
{
    if (a == kInfiniteValuation || b == kInfiniteValuation) return kInfiniteValuation;
    return a + b;
}

Mat2 columns(const ProjPoint& z, const ProjPoint& w) { return {z.x0(), w.x0(), z.x1(), w.x1()}; }

}  // namespace

std::vector<StarEntry> star(const BtVertex& v)
{
    const FieldPtr& F = v.field();
    const long q = F->q();
    if (q > (1L << 20)) throw FieldError("residue field too large to enumerate a star");
    const Mat2 Mv = v.matrix();
    std::vector<StarEntry> out;
    out.reserve(static_cast<size_t>(q) + 1);
    for (long t = 0; t < q; ++t) out.push_back({act(Mv, BtVertex(1, residue_lift(F, t))), t});
    out.push_back({act(Mv, BtVertex(-1, PAdic::zero(F))), q});
    return out;
}

BtVertex step_toward(const BtVertex& v, const ProjPoint& z)
{
    const FieldPtr& F = v.field();
    const Mat2 Mv = v.matrix();
    const ProjPoint local = Mv.adjugate() * z;
    if (!local.x1().is_zero() && local.x1().valuation() == 0) {
        const long r = (local.x0() / local.x1()).residue();
        return act(Mv, BtVertex(1, residue_lift(F, r)));
    }
    return act(Mv, BtVertex(-1, PAdic::zero(F)));
}

std::vector<BtVertex> halfline_toward(const BtVertex& v, const ProjPoint& z, long steps)
{
    std::vector<BtVertex> out;
    out.reserve(static_cast<size_t>(std::max(steps, 0L)));
    BtVertex cur = v;
    for (long i = 0; i < steps; ++i) {
        cur = step_toward(cur, z);
        out.push_back(cur);
    }
    return out;
}

long distance_to_apartment(const BtVertex& v, const ProjPoint& z, const ProjPoint& w)
{
    const Mat2 inv = v.matrix().adjugate();
    return gromov(inv * z, inv * w);
}

long apartment_distance(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d)
{
    const long s1 = sat_add(gromov(a, b), gromov(c, d));
    const long s2 = sat_add(gromov(a, c), gromov(b, d));
    const long s3 = sat_add(gromov(a, d), gromov(b, c));
    const long m = std::max(s2, s3);
    if (m == kInfiniteValuation || s1 <= m) return 0;
    return s1 - m;
}

BtVertex apartment_projection(const ProjPoint& z, const ProjPoint& w, const BtVertex& from)
{
    if (z == w) throw ArithmeticError("apartment needs two distinct ends");
    const Mat2 g = columns(z, w);
    const BtVertex local = vertex_from_matrix(g.adjugate() * from.matrix());
    const long d = std::min(local.n(), local.b().valuation());
    return act(g, BtVertex(d, PAdic::zero(z.x0().field())));
}

std::vector<BtVertex> apartment(const ProjPoint& z, const ProjPoint& w, long lo, long hi)
{
    if (z == w) throw ArithmeticError("apartment needs two distinct ends");
    const FieldPtr& F = z.x0().field();
    const Mat2 g = columns(z, w);
    const BtVertex local = vertex_from_matrix(g.adjugate());
    const long d = std::min(local.n(), local.b().valuation());
    std::vector<BtVertex> out;
    for (long i = lo; i <= hi; ++i) out.push_back(act(g, BtVertex(d + i, PAdic::zero(F))));
    return out;
}

BtVertex tripod_centre(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c)
{
    if (a == b || a == c || b == c) throw ArithmeticError("tripod needs three distinct ends");
    const Mat2 g = columns(a, b);
    const ProjPoint local = g.adjugate() * c;
    const long k = local.x0().valuation() - local.x1().valuation();
    return act(g, BtVertex(k, PAdic::zero(a.x0().field())));
}

// ---------------------------------------------------------------------------
// SubtreeTruncation

void SubtreeTruncation::reindex()
{
    index_.clear();
    for (size_t i = 0; i < vertices.size(); ++i) index_.emplace(vertices[i].key(), i);
}

std::optional<size_t> SubtreeTruncation::index_of(const BtVertex& v) const
{
    auto it = index_.find(v.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool SubtreeTruncation::is_tree() const
{
    if (vertices.empty()) return edges.empty();
    if (edges.size() + 1 != vertices.size()) return false;
    std::vector<size_t> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [i, j] : edges) {
        const size_t a = find(i), b = find(j);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

SubtreeTruncation SubtreeTruncation::assemble(const std::vector<BtVertex>& vs,
                                              const std::vector<std::pair<BtVertex, BtVertex>>& es)
{
    SubtreeTruncation t;
    t.vertices = vs;
    std::sort(t.vertices.begin(), t.vertices.end());
    t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
    t.reindex();
    std::set<std::pair<size_t, size_t>> seen;
    for (const auto& [u, v] : es) {
        auto i = t.index_of(u);
        auto j = t.index_of(v);
        if (!i || !j) throw std::invalid_argument("edge endpoint outside the vertex set");
        if (*i == *j) continue;
        seen.insert({std::min(*i, *j), std::max(*i, *j)});
    }
    t.edges.assign(seen.begin(), seen.end());
    return t;
}

namespace {

std::vector<ProjPoint> distinct_points(const std::vector<ProjPoint>& L)
{
    std::vector<ProjPoint> out;
    for (const auto& z : L)
        if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
    return out;
}

// Centre of a finite tree given by adjacency: middle of a diameter, ties to
// the canonically smaller vertex.
BtVertex hull_centre(const std::vector<BtVertex>& vs, const std::vector<std::pair<size_t, size_t>>& es)
{
    std::vector<std::vector<size_t>> adj(vs.size());
    for (const auto& [i, j] : es) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    auto bfs = [&](size_t s, std::vector<long>& dist, std::vector<size_t>& par) {
        dist.assign(vs.size(), -1);
        par.assign(vs.size(), s);
        std::deque<size_t> dq{s};
        dist[s] = 0;
        size_t far = s;
        while (!dq.empty()) {
            const size_t x = dq.front();
            dq.pop_front();
            if (dist[x] > dist[far] || (dist[x] == dist[far] && vs[x] < vs[far])) far = x;
            for (size_t y : adj[x])
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    par[y] = x;
                    dq.push_back(y);
                }
        }
        return far;
    };
    std::vector<long> dist;
    std::vector<size_t> par;
    const size_t a = bfs(0, dist, par);
    const size_t b = bfs(a, dist, par);
    std::vector<size_t> path{b};
    while (path.back() != a) path.push_back(par[path.back()]);
    const size_t len = path.size() - 1;
    if (len % 2 == 0) return vs[path[len / 2]];
    const BtVertex& x = vs[path[len / 2]];
    const BtVertex& y = vs[path[len / 2 + 1]];
    return y < x ? y : x;
}

}  // namespace

SubtreeTruncation tree_of_ends(const std::vector<ProjPoint>& input, long R)
{
    const auto L = distinct_points(input);
    SubtreeTruncation out;
    out.radius = R;
    if (L.size() < 2) return out;
    const FieldPtr& F = L[0].x0().field();

    BtVertex centre;
    if (L.size() == 2) {
        centre = apartment_projection(L[0], L[1], BtVertex::origin(F));
    } else {
        std::vector<BtVertex> branch;
        std::set<std::string> seen;
        for (size_t i = 1; i < L.size(); ++i)
            for (size_t j = i + 1; j < L.size(); ++j) {
                BtVertex c = tripod_centre(L[0], L[i], L[j]);
                if (seen.insert(c.key()).second) branch.push_back(std::move(c));
            }
        std::sort(branch.begin(), branch.end());
        std::vector<BtVertex> hull;
        std::vector<std::pair<BtVertex, BtVertex>> hull_edges;
        for (const auto& c : branch) {
            const auto path = geodesic(branch[0], c);
            for (size_t k = 0; k < path.size(); ++k) {
                hull.push_back(path[k]);
                if (k) hull_edges.emplace_back(path[k - 1], path[k]);
            }
        }
        const auto h = SubtreeTruncation::assemble(hull, hull_edges);
        centre = hull_centre(h.vertices, h.edges);
    }

    auto out_t = grow_tree_of_ends(L, centre, [R](const BtVertex&, long depth) { return depth <= R; });
    out_t.radius = R;
    return out_t;
}

SubtreeTruncation grow_tree_of_ends(const std::vector<ProjPoint>& input, const BtVertex& root,
                                    const std::function<bool(const BtVertex&, long)>& keep)
{
    const auto L = distinct_points(input);
    // Breadth-first growth; each vertex carries the ends whose half-lines
    // from the root pass through it.
    struct Item {
        BtVertex v;
        std::vector<size_t> ends;
        long depth;
    };
    std::vector<BtVertex> verts{root};
    std::vector<std::pair<BtVertex, BtVertex>> edges;
    std::vector<BtVertex> frontier;
    std::vector<std::optional<BtVertex>> exit(L.size());
    std::deque<Item> queue;
    {
        std::vector<size_t> all(L.size());
        std::iota(all.begin(), all.end(), 0);
        queue.push_back({root, all, 0});
    }
    while (!queue.empty()) {
        Item it = std::move(queue.front());
        queue.pop_front();
        std::vector<std::pair<BtVertex, std::vector<size_t>>> children;
        for (size_t e : it.ends) {
            BtVertex w = step_toward(it.v, L[e]);
            auto found = std::find_if(children.begin(), children.end(), [&](const auto& c) { return c.first == w; });
            if (found == children.end())
                children.push_back({std::move(w), {e}});
            else
                found->second.push_back(e);
        }
        bool cut = false;
        for (auto& [w, ends] : children) {
            if (!keep(w, it.depth + 1)) {
                cut = true;
                for (size_t e : ends) exit[e] = it.v;
                continue;
            }
            verts.push_back(w);
            edges.emplace_back(it.v, w);
            queue.push_back({w, std::move(ends), it.depth + 1});
        }
        if (cut) frontier.push_back(it.v);
    }
    SubtreeTruncation out = SubtreeTruncation::assemble(verts, edges);
    out.centre = root;
    for (const auto& v : frontier) out.boundary.push_back(*out.index_of(v));
    std::sort(out.boundary.begin(), out.boundary.end());
    for (size_t e = 0; e < L.size(); ++e) out.ends.emplace_back(L[e], *out.index_of(*exit[e]));
    return out;
}

std::string to_dot(const SubtreeTruncation& t, const std::string& name)
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (size_t i = 0; i < t.vertices.size(); ++i) {
        os << "  v" << i << " [label=\"" << t.vertices[i].key() << "\"";
        if (t.centre && t.vertices[i] == *t.centre) os << ", style=bold";
        os << "];\n";
    }
    for (const auto& [i, j] : t.edges) os << "  v" << i << " -- v" << j << ";\n";
    for (size_t k = 0; k < t.ends.size(); ++k) {
        os << "  end" << k << " [shape=plaintext, label=\"" << t.ends[k].first.str() << "\"];\n";
        os << "  v" << t.ends[k].second << " -- end" << k << " [dir=forward, style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace bt
