#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bt/tree.hpp"

namespace bt {

/// Projective class of an invertible 2x2 matrix. The first entry (reading
/// order) of minimal valuation is scaled to 1.
class Pgl2 {
public:
    Pgl2() = default;
    explicit Pgl2(const Mat2& m);

    static Pgl2 identity(const FieldPtr& F) { return Pgl2(Mat2::identity(F)); }

    const Mat2& matrix() const { return m_; }
    const FieldPtr& field() const { return m_.field(); }

    Pgl2 operator*(const Pgl2& o) const { return Pgl2(m_ * o.m_); }
    Pgl2 inverse() const { return Pgl2(m_.adjugate()); }
    Pgl2 pow(long n) const { return Pgl2(m_.pow(n)); }
    ProjPoint operator()(const ProjPoint& z) const { return m_ * z; }
    BtVertex operator()(const BtVertex& v) const { return act(m_, v); }

    bool is_identity() const;
    bool operator==(const Pgl2& o) const;
    bool operator!=(const Pgl2& o) const { return !(*this == o); }

    /// Digit string of the canonical entries; equal classes give equal keys.
    const std::string& key() const { return key_; }
    std::string str() const { return m_.str(); }
    /// "(a*z + b)/(c*z + d)".
    std::string mobius_str() const;

private:
    Mat2 m_;
    std::string key_;
};

enum class ElementKind { Identity, Parabolic, Elliptic, Hyperbolic };
const char* kind_name(ElementKind k);

struct ElementClass {
    ElementKind kind = ElementKind::Identity;
    long trace_valuation = 0;  // of the scaled matrix; infinite for trace 0
    long det_valuation = 0;
    std::string certificate;
};

ElementClass classify(const Pgl2& g);

struct FixedPoints {
    std::vector<ProjPoint> points;  // one point for parabolic elements
    bool doubled = false;
};

/// Throws FieldError when the fixed points are not K-rational.
FixedPoints fixed_points(const Pgl2& g);

struct Mirror {
    Pgl2 owner;
    ProjPoint z, w;
};
Mirror mirror(const Pgl2& g);

struct OrderResult {
    enum class Status { Finite, Infinite, ExceedsBound } status = Status::Finite;
    long order = 0;
    std::string str() const;
};
OrderResult order(const Pgl2& g, long bound = 1000);

/// Radius s with Fix(g) = {v : d(v, M(g)) <= s}.
long fixed_radius(const Pgl2& g, long bound = 1000);

bool fixed_vertex_test(const Pgl2& g, const BtVertex& v);

struct NeighborAudit {
    std::vector<std::vector<long>> orbits;  // P^1(k) line indices, orbits sorted
    long fixed = 0;
    bool free_off_mirror = true;
};
NeighborAudit neighbor_action_audit(const Pgl2& g, const BtVertex& v0);

struct Axis {
    ProjPoint attracting, repelling;
    long translation_length = 0;
};
Axis hyperbolic_axis(const Pgl2& g);

struct CommonFixedVerdict {
    int common = 0;
    bool obstruction = false;
    std::optional<ElementClass> commutator;
};
CommonFixedVerdict parabolic_commutator_check(const Pgl2& a, const Pgl2& b);

}  // namespace bt
