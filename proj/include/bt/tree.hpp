#ifndef BT_TREE_HPP
#define BT_TREE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bt/padic.hpp"

namespace bt {

struct Mat2 {
    PAdic a, b, c, d;

    static Mat2 identity(const FieldPtr& F);
    static Mat2 diag(const PAdic& x, const PAdic& y);

    const FieldPtr& field() const { return a.field(); }
    PAdic det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& o) const;
    /// Adjugate; the inverse up to the scalar det.
    Mat2 adjugate() const { return {d, -b, -c, a}; }
    Mat2 inverse() const;
    Mat2 pow(long n) const;
    /// Smallest valuation among the entries.
    long min_valuation() const;
    std::string str() const;
};

/// A point (x0 : x1) of P^1(K), z = x0 / x1.
class ProjPoint {
public:
    ProjPoint() = default;
    ProjPoint(const PAdic& x0, const PAdic& x1);

    static ProjPoint infinity(const FieldPtr& F);
    static ProjPoint of(const PAdic& z);

    const PAdic& x0() const { return x0_; }
    const PAdic& x1() const { return x1_; }
    bool is_infinity() const { return x1_.is_zero(); }
    /// Affine coordinate; requires a finite point.
    PAdic value() const;

    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    std::string str() const;

private:
    PAdic x0_, x1_;
};

ProjPoint operator*(const Mat2& g, const ProjPoint& z);

/// Vertex of the tree: the class of the lattice spanned by the columns of
/// [[pi^n, b], [0, 1]], with b an exact value reduced modulo pi^n.
class BtVertex {
public:
    BtVertex() = default;
    BtVertex(long n, const PAdic& b);

    static BtVertex origin(const FieldPtr& F);

    const FieldPtr& field() const { return b_.field(); }
    long n() const { return n_; }
    const PAdic& b() const { return b_; }
    Mat2 matrix() const;
    /// "(n; b)" with b written as a finite pi-adic expansion.
    const std::string& key() const { return key_; }

    bool operator==(const BtVertex& o) const { return n_ == o.n_ && key_ == o.key_; }
    bool operator!=(const BtVertex& o) const { return !(*this == o); }
    /// Canonical order: by n, then by printed b.
    bool operator<(const BtVertex& o) const;

private:
    long n_ = 0;
    PAdic b_;
    std::string key_;
};

BtVertex vertex_from_matrix(const Mat2& M);
BtVertex act(const Mat2& g, const BtVertex& v);

long distance(const BtVertex& v, const BtVertex& w);
std::vector<BtVertex> geodesic(const BtVertex& v, const BtVertex& w);

struct StarEntry {
    BtVertex vertex;
    /// P^1(k) index: residue index t in [0, q), or q for the point at infinity.
    long line;
};
std::vector<StarEntry> star(const BtVertex& v);

/// The first vertex after v on the half-line [v, z[.
BtVertex step_toward(const BtVertex& v, const ProjPoint& z);
/// The first `steps` vertices of [v, z[ after v.
std::vector<BtVertex> halfline_toward(const BtVertex& v, const ProjPoint& z, long steps);

/// Distance from v to the apartment ]z, w[.
long distance_to_apartment(const BtVertex& v, const ProjPoint& z, const ProjPoint& w);
/// Distance between ]a, b[ and ]c, d[ (0 when they meet).
long apartment_distance(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d);
/// Vertex of ]z, w[ nearest to `from`.
BtVertex apartment_projection(const ProjPoint& z, const ProjPoint& w, const BtVertex& from);
/// Vertices of ]z, w[ at signed offsets lo..hi from the vertex nearest to the
/// standard vertex; increasing offsets move toward w.
std::vector<BtVertex> apartment(const ProjPoint& z, const ProjPoint& w, long lo, long hi);
/// The common vertex of the three apartments joining a, b, c.
BtVertex tripod_centre(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

struct SubtreeTruncation {
    std::vector<BtVertex> vertices;               // sorted canonically
    std::vector<std::pair<size_t, size_t>> edges;  // indices into vertices, i < j
    std::vector<size_t> boundary;
    std::vector<std::pair<ProjPoint, size_t>> ends;  // declared end, frontier vertex
    long radius = 0;
    std::optional<BtVertex> centre;

    bool empty() const { return vertices.empty(); }
    std::optional<size_t> index_of(const BtVertex& v) const;
    bool contains(const BtVertex& v) const { return index_of(v).has_value(); }
    bool is_tree() const;

    /// Sorts vertices and rebuilds indices; `edges` may be given in any order.
    static SubtreeTruncation assemble(const std::vector<BtVertex>& vertices,
                                      const std::vector<std::pair<BtVertex, BtVertex>>& edges);

private:
    std::map<std::string, size_t> index_;
    void reindex();
    friend struct TruncationBuilder;
};

/// The tree spanned by the end set L, truncated to the ball of radius R
/// around its centre. Empty when |L| < 2.
SubtreeTruncation tree_of_ends(const std::vector<ProjPoint>& L, long R);
/// The part of the tree spanned by L reachable from `root` (which must lie
/// on it) through vertices accepted by keep(vertex, depth).
SubtreeTruncation grow_tree_of_ends(const std::vector<ProjPoint>& L, const BtVertex& root,
                                    const std::function<bool(const BtVertex&, long)>& keep);

std::string to_dot(const SubtreeTruncation& t, const std::string& name = "T");

}  // namespace bt

#endif
