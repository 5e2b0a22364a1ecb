#include "bt/pgl2.hpp"

#include <algorithm>
#include <map>

namespace bt {

namespace {

std::string entry_key(const PAdic& x, long depth)
{
    std::string s;
    if (x.is_zero()) return "0";
    if (x.absolute_precision() < depth) throw PrecisionError("matrix entry known to fewer digits than the key depth");
    const auto ds = x.leading_digits(depth - x.valuation());
    for (long pos = 0; pos < depth; ++pos) {
        const long k = pos - x.valuation();
        const long d = k < 0 ? 0 : ds[static_cast<size_t>(k)];
        s += std::to_string(d);
        s += '.';
    }
    return s;
}

bool same(const PAdic& x, const PAdic& y) { return x.approx_equal(y); }

}  // namespace

Pgl2::Pgl2(const Mat2& m)
{
    const PAdic* entries[4] = {&m.a, &m.b, &m.c, &m.d};
    const long v = m.min_valuation();
    if (v == kInfiniteValuation) throw ArithmeticError("zero matrix");
    const PAdic* pivot = nullptr;
    for (const PAdic* e : entries)
        if (!e->is_zero() && e->valuation() == v) {
            pivot = e;
            break;
        }
    const PAdic s = pivot->inverse();
    m_ = {m.a * s, m.b * s, m.c * s, m.d * s};
    if (m_.det().is_zero()) throw ArithmeticError("singular matrix");
    const long depth = std::max(4, field()->precision() / 2);
    key_ = entry_key(m_.a, depth) + "|" + entry_key(m_.b, depth) + "|" + entry_key(m_.c, depth) + "|" +
           entry_key(m_.d, depth);
}

bool Pgl2::is_identity() const
{
    return m_.b.is_zero() && m_.c.is_zero() && same(m_.a, m_.d);
}

bool Pgl2::operator==(const Pgl2& o) const { return key_ == o.key_; }

std::string Pgl2::mobius_str() const
{
    return "((" + short_str(m_.a) + ")*z + (" + short_str(m_.b) + ")) / ((" + short_str(m_.c) + ")*z + (" +
           short_str(m_.d) + "))";
}

const char* kind_name(ElementKind k)
{
    switch (k) {
        case ElementKind::Identity: return "identity";
        case ElementKind::Parabolic: return "parabolic";
        case ElementKind::Elliptic: return "elliptic";
        case ElementKind::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

ElementClass classify(const Pgl2& g)
{
    ElementClass out;
    const Mat2& m = g.matrix();
    const PAdic t = m.a + m.d;
    const PAdic D = m.det();
    out.trace_valuation = t.valuation();
    out.det_valuation = D.valuation();
    if (g.is_identity()) {
        out.kind = ElementKind::Identity;
        out.certificate = "scalar matrix";
        return out;
    }
    PAdic disc;
    try {
        disc = t * t - PAdic::from_int(g.field(), 4) * D;
    } catch (const PrecisionError&) {
        throw PrecisionError("discriminant indistinguishable from zero at the working precision");
    }
    if (disc.is_zero()) {
        out.kind = ElementKind::Parabolic;
        out.certificate = "discriminant t^2 - 4 det is exactly 0";
        return out;
    }
    const long vt = out.trace_valuation;
    const long vD = out.det_valuation;
    if (vt != kInfiniteValuation && 2 * vt < vD) {
        out.kind = ElementKind::Hyperbolic;
        out.certificate = "eigenvalue valuations " + std::to_string(vt) + ", " + std::to_string(vD - vt);
    } else {
        out.kind = ElementKind::Elliptic;
        out.certificate = "eigenvalue valuations " + std::to_string(vD) + "/2, " + std::to_string(vD) + "/2";
    }
    return out;
}

FixedPoints fixed_points(const Pgl2& g)
{
    if (g.is_identity()) throw ArithmeticError("the identity fixes every point");
    const FieldPtr& F = g.field();
    const Mat2& m = g.matrix();
    FixedPoints out;
    if (m.c.is_zero()) {
        out.points.push_back(ProjPoint::infinity(F));
        const PAdic dma = m.d - m.a;
        if (dma.is_zero())
            out.doubled = true;
        else
            out.points.push_back(ProjPoint::of(m.b / dma));
        return out;
    }
    const PAdic amd = m.a - m.d;
    const PAdic disc = amd * amd + PAdic::from_int(F, 4) * m.b * m.c;
    const PAdic two_c = PAdic::from_int(F, 2) * m.c;
    if (disc.is_zero()) {
        out.points.push_back(ProjPoint::of(amd / two_c));
        out.doubled = true;
        return out;
    }
    const auto root = sqrt(disc);
    if (!root.root)
        throw FieldError("fixed points are not K-rational (" + root.obstruction + "); enlarge K");
    out.points.push_back(ProjPoint::of((amd + *root.root) / two_c));
    out.points.push_back(ProjPoint::of((amd - *root.root) / two_c));
    return out;
}

Mirror mirror(const Pgl2& g)
{
    if (classify(g).kind != ElementKind::Elliptic) throw ArithmeticError("mirror of a non-elliptic element");
    const auto fp = fixed_points(g);
    return {g, fp.points[0], fp.points[1]};
}

std::string OrderResult::str() const
{
    switch (status) {
        case Status::Finite: return std::to_string(order);
        case Status::Infinite: return "infinite";
        case Status::ExceedsBound: return "exceeds-bound";
    }
    return "?";
}

OrderResult order(const Pgl2& g, long bound)
{
    OrderResult out;
    const auto cls = classify(g);
    if (cls.kind == ElementKind::Identity) {
        out.order = 1;
        return out;
    }
    if (cls.kind != ElementKind::Elliptic) {
        out.status = OrderResult::Status::Infinite;
        return out;
    }
    // s_k = rho^k + rho^-k for the eigenvalue ratio rho; rho^k = 1 iff s_k = 2.
    const FieldPtr& F = g.field();
    const Mat2& m = g.matrix();
    const PAdic t = m.a + m.d;
    const PAdic two = PAdic::from_int(F, 2);
    const PAdic s1 = t * t / m.det() - two;
    PAdic prev = two, cur = s1;
    for (long k = 1; k <= bound; ++k) {
        if (cur.approx_equal(two)) {
            out.order = k;
            return out;
        }
        PAdic next = s1 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    out.status = OrderResult::Status::ExceedsBound;
    return out;
}

long fixed_radius(const Pgl2& g, long bound)
{
    const auto o = order(g, bound);
    if (o.status != OrderResult::Status::Finite) throw ArithmeticError("fixed radius needs an element of finite order");
    if (o.order == 1) throw ArithmeticError("the identity fixes every vertex");
    const FieldPtr& F = g.field();
    const long p = F->p();
    long n = o.order, r = 0;
    while (n % p == 0) {
        n /= p;
        ++r;
    }
    if (r == 0) return 0;
    long phi = p - 1;
    for (long i = 1; i < r; ++i) phi *= p;
    if (F->e() % phi != 0)
        throw FieldError("K does not contain the p-power roots of unity needed here; enlarge K");
    return F->e() / phi;
}

bool fixed_vertex_test(const Pgl2& g, const BtVertex& v) { return g(v) == v; }

NeighborAudit neighbor_action_audit(const Pgl2& g, const BtVertex& v0)
{
    NeighborAudit out;
    const auto nbrs = star(v0);
    std::map<std::string, long> line_of;
    for (const auto& s : nbrs) line_of[s.vertex.key()] = s.line;
    std::map<long, long> perm;
    for (const auto& s : nbrs) {
        const BtVertex img = g(s.vertex);
        auto it = line_of.find(img.key());
        if (it == line_of.end()) throw ArithmeticError("element does not fix the given vertex");
        perm[s.line] = it->second;
    }
    long n = 1;
    if (!g.is_identity()) {
        const auto cls = classify(g);
        if (cls.kind != ElementKind::Elliptic) throw ArithmeticError("neighbor audit needs an elliptic element");
        const auto mir = mirror(g);
        if (distance_to_apartment(v0, mir.z, mir.w) != 0) throw ArithmeticError("vertex is not on the mirror");
        const auto o = order(g);
        if (o.status != OrderResult::Status::Finite) throw ArithmeticError("element of unknown order");
        n = o.order;
        if (n % g.field()->p() == 0) throw ArithmeticError("order is divisible by p");
    }
    std::map<long, bool> done;
    for (const auto& [start, _] : perm) {
        if (done[start]) continue;
        std::vector<long> orbit;
        long x = start;
        while (!done[x]) {
            done[x] = true;
            orbit.push_back(x);
            x = perm[x];
        }
        std::sort(orbit.begin(), orbit.end());
        if (orbit.size() == 1)
            ++out.fixed;
        else if (static_cast<long>(orbit.size()) != n)
            out.free_off_mirror = false;
        out.orbits.push_back(orbit);
    }
    std::sort(out.orbits.begin(), out.orbits.end());
    if (n > 1 && out.fixed != 2) out.free_off_mirror = false;
    return out;
}

Axis hyperbolic_axis(const Pgl2& g)
{
    const auto cls = classify(g);
    if (cls.kind != ElementKind::Hyperbolic) throw ArithmeticError("axis of a non-hyperbolic element");
    const auto fp = fixed_points(g);
    const Mat2& m = g.matrix();
    auto eigen = [&](const ProjPoint& z) { return z.is_infinity() ? m.a : m.c * z.value() + m.d; };
    Axis out;
    const long v0 = eigen(fp.points[0]).valuation();
    const long v1 = eigen(fp.points[1]).valuation();
    out.attracting = v0 < v1 ? fp.points[0] : fp.points[1];
    out.repelling = v0 < v1 ? fp.points[1] : fp.points[0];
    out.translation_length = std::abs(cls.det_valuation - 2 * cls.trace_valuation);
    return out;
}

CommonFixedVerdict parabolic_commutator_check(const Pgl2& a, const Pgl2& b)
{
    CommonFixedVerdict out;
    const auto fa = fixed_points(a);
    const auto fb = fixed_points(b);
    for (const auto& x : fa.points)
        for (const auto& y : fb.points)
            if (x == y) ++out.common;
    if (out.common == 1) {
        out.obstruction = true;
        out.commutator = classify(a * b * a.inverse() * b.inverse());
    }
    return out;
}

}  // namespace bt
