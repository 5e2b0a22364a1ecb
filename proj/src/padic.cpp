#include "bt/padic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bt {

using Raw = std::vector<mpz_class>;

bool is_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int multiplicative_order(long p, long n)
{
    if (n <= 1) return 1;
    if (std::gcd(p, n) != 1) throw FieldError("multiplicative order undefined: gcd(p, n) != 1");
    long x = p % n;
    int k = 1;
    while (x != 1) {
        x = (x * p) % n;
        ++k;
    }
    return k;
}

namespace {

long ceil_div(long a, long b)
{
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

std::vector<long> poly_mod_p(std::vector<long> a, long p)
{
    for (auto& c : a) c = ((c % p) + p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Remainder of a modulo the monic polynomial m over F_p.
std::vector<long> poly_rem(std::vector<long> a, const std::vector<long>& m, long p)
{
    a = poly_mod_p(std::move(a), p);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const long t = a.back();
        const size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - t * m[i]) % p + p) % p;
        a = poly_mod_p(std::move(a), p);
    }
    return a;
}

bool poly_irreducible(const std::vector<long>& g, long p)
{
    const int f = static_cast<int>(g.size()) - 1;
    for (int d = 1; 2 * d <= f; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            std::vector<long> h(static_cast<size_t>(d) + 1, 0);
            long t = idx;
            for (int i = 0; i < d; ++i) {
                h[static_cast<size_t>(i)] = t % p;
                t /= p;
            }
            h[static_cast<size_t>(d)] = 1;
            if (poly_rem(g, h, p).empty()) return false;
        }
    }
    return true;
}

unsigned long p_valuation(const mpz_class& c, long p)
{
    if (c == 0) return ULONG_MAX;
    if (p == 2) return mpz_scan1(c.get_mpz_t(), 0);
    mpz_class t;
    return mpz_remove(t.get_mpz_t(), c.get_mpz_t(), mpz_class(p).get_mpz_t());
}

void mod_in_place(mpz_class& x, const mpz_class& m)
{
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
}

// Ring operations in O_K / p^K.
struct RawOps {
    const Field& F;
    int e, f, K;
    const mpz_class& mod;

    explicit RawOps(const Field& field)
        : F(field), e(field.e()), f(field.f()), K(field.storage_exponent()), mod(field.p_power(field.storage_exponent()))
    {
    }

    Raw zero() const { return Raw(static_cast<size_t>(e * f)); }

    Raw one() const
    {
        Raw r = zero();
        r[0] = 1;
        return r;
    }

    void reduce(Raw& a) const
    {
        for (auto& c : a) mod_in_place(c, mod);
    }

    // product of W elements a, b (f coefficients each) accumulated into out * scale
    void w_mul_acc(const mpz_class* a, const mpz_class* b, mpz_class* out, long scale) const
    {
        const auto& g = F.unramified_poly();
        std::vector<mpz_class> prod(static_cast<size_t>(2 * f - 1));
        for (int i = 0; i < f; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < f; ++j) prod[static_cast<size_t>(i + j)] += a[i] * b[j];
        }
        for (int k = 2 * f - 2; k >= f; --k) {
            const mpz_class t = prod[static_cast<size_t>(k)];
            if (t == 0) continue;
            for (int i = 0; i <= f; ++i) prod[static_cast<size_t>(k - f + i)] -= t * g[static_cast<size_t>(i)];
        }
        for (int i = 0; i < f; ++i) out[i] += scale * prod[static_cast<size_t>(i)];
    }

    Raw mul(const Raw& a, const Raw& b) const
    {
        Raw r = zero();
        const long p = F.p();
        for (int j1 = 0; j1 < e; ++j1) {
            for (int j2 = 0; j2 < e; ++j2) {
                const int j = j1 + j2;
                if (j < e)
                    w_mul_acc(&a[static_cast<size_t>(j1 * f)], &b[static_cast<size_t>(j2 * f)], &r[static_cast<size_t>(j * f)], 1);
                else
                    w_mul_acc(&a[static_cast<size_t>(j1 * f)], &b[static_cast<size_t>(j2 * f)], &r[static_cast<size_t>((j - e) * f)], p);
            }
        }
        reduce(r);
        return r;
    }

    Raw add(const Raw& a, const Raw& b) const
    {
        Raw r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        reduce(r);
        return r;
    }

    Raw sub(const Raw& a, const Raw& b) const
    {
        Raw r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
        reduce(r);
        return r;
    }

    Raw neg(const Raw& a) const
    {
        Raw r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
        reduce(r);
        return r;
    }

    Raw mul_pi(const Raw& a) const
    {
        Raw r = zero();
        for (int i = 0; i < f; ++i) r[static_cast<size_t>(i)] = F.p() * a[static_cast<size_t>((e - 1) * f + i)];
        for (int j = 1; j < e; ++j)
            for (int i = 0; i < f; ++i) r[static_cast<size_t>(j * f + i)] = a[static_cast<size_t>((j - 1) * f + i)];
        reduce(r);
        return r;
    }

    Raw shift_up(Raw a, long s) const
    {
        const long qq = s / e;
        const long rr = s % e;
        if (qq >= K) return zero();
        if (qq > 0) {
            const mpz_class& m = F.p_power(static_cast<int>(qq));
            for (auto& c : a) c *= m;
            reduce(a);
        }
        for (long i = 0; i < rr; ++i) a = mul_pi(a);
        return a;
    }

    Raw div_pi(const Raw& a) const
    {
        Raw r = zero();
        for (int j = 0; j + 1 < e; ++j)
            for (int i = 0; i < f; ++i) r[static_cast<size_t>(j * f + i)] = a[static_cast<size_t>((j + 1) * f + i)];
        for (int i = 0; i < f; ++i) {
            mpz_class c = a[static_cast<size_t>(i)];
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(F.p()));
            r[static_cast<size_t>((e - 1) * f + i)] = c;
        }
        return r;
    }

    // Requires a divisible by pi^s.
    Raw shift_down(Raw a, long s) const
    {
        const long qq = s / e;
        const long rr = s % e;
        if (qq > 0) {
            const mpz_class& m = F.p_power(static_cast<int>(qq));
            for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        }
        for (long i = 0; i < rr; ++i) a = div_pi(a);
        return a;
    }

    // Canonical representative modulo pi^prec.
    void truncate(Raw& a, long prec) const
    {
        for (int j = 0; j < e; ++j) {
            const long k = std::min<long>(ceil_div(prec - j, e), K);
            for (int i = 0; i < f; ++i) {
                auto& c = a[static_cast<size_t>(j * f + i)];
                if (k <= 0)
                    c = 0;
                else
                    mod_in_place(c, F.p_power(static_cast<int>(k)));
            }
        }
    }

    // pi-adic valuation, capped at `limit`.
    long valuation(const Raw& a, long limit) const
    {
        long best = limit;
        for (int j = 0; j < e; ++j) {
            for (int i = 0; i < f; ++i) {
                const auto v = p_valuation(a[static_cast<size_t>(j * f + i)], F.p());
                if (v == ULONG_MAX) continue;
                const long cand = static_cast<long>(v) * e + j;
                best = std::min(best, cand);
            }
        }
        return best;
    }

    long residue(const Raw& a) const
    {
        std::vector<long> coeffs(static_cast<size_t>(f));
        for (int i = 0; i < f; ++i) {
            mpz_class c = a[static_cast<size_t>(i)];
            mod_in_place(c, F.p_power(1));
            coeffs[static_cast<size_t>(i)] = c.get_si();
        }
        return F.res_index(coeffs);
    }

    Raw lift(long residue) const
    {
        Raw r = zero();
        const auto coeffs = F.res_coeffs(residue);
        for (int i = 0; i < f; ++i) r[static_cast<size_t>(i)] = coeffs[static_cast<size_t>(i)];
        return r;
    }

    Raw inverse(const Raw& a) const
    {
        Raw x = lift(F.res_inv(residue(a)));
        const Raw two = [&] {
            Raw t = zero();
            t[0] = 2;
            return t;
        }();
        long known = 1;
        while (known < static_cast<long>(e) * K) {
            x = mul(x, sub(two, mul(a, x)));
            known *= 2;
        }
        return x;
    }

    Raw pow(Raw base, mpz_class n) const
    {
        Raw r = one();
        while (n > 0) {
            if (mpz_odd_p(n.get_mpz_t())) r = mul(r, base);
            n >>= 1;
            if (n > 0) base = mul(base, base);
        }
        return r;
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Field

std::vector<long> least_irreducible_poly(long p, int f)
{
    if (f == 1) return {0, 1};
    long count = 1;
    for (int i = 0; i < f; ++i) count *= p;
    // c_0 is the most significant digit of the enumeration index
    for (long idx = 0; idx < count; ++idx) {
        std::vector<long> g(static_cast<size_t>(f) + 1, 0);
        long t = idx;
        for (int i = f - 1; i >= 0; --i) {
            g[static_cast<size_t>(i)] = t % p;
            t /= p;
        }
        g[static_cast<size_t>(f)] = 1;
        if (g[0] == 0) continue;
        if (poly_irreducible(g, p)) return g;
    }
    throw FieldError("no irreducible polynomial found");
}

std::shared_ptr<const Field> Field::make(long p, int f, int e, int precision)
{
    if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
    if (f < 1 || e < 1) throw FieldError("f and e must be positive");
    if (precision < 4) throw FieldError("precision must be at least 4 digits");
    auto F = std::shared_ptr<Field>(new Field());
    F->p_ = p;
    F->f_ = f;
    F->e_ = e;
    F->precision_ = precision;
    long q = 1;
    for (int i = 0; i < f; ++i) {
        if (q > (1L << 40) / p) throw FieldError("residue field too large");
        q *= p;
    }
    F->q_ = q;
    F->poly_ = least_irreducible_poly(p, f);
    F->storage_k_ = static_cast<int>(ceil_div(precision, e)) + 2;
    F->p_pows_.resize(static_cast<size_t>(F->storage_k_) + 1);
    F->p_pows_[0] = 1;
    for (int k = 1; k <= F->storage_k_; ++k) F->p_pows_[static_cast<size_t>(k)] = F->p_pows_[static_cast<size_t>(k) - 1] * p;
    F->generator_ = 1;
    if (q > 2) {
        for (long a = 1; a < q; ++a) {
            if (F->res_order(a) == q - 1) {
                F->generator_ = a;
                break;
            }
        }
    }
    return F;
}

std::string Field::describe() const
{
    std::ostringstream os;
    os << "K/Q_" << p_ << " f=" << f_ << " e=" << e_ << " q=" << q_ << " precision=" << precision_;
    return os.str();
}

std::vector<long> Field::res_coeffs(long a) const
{
    std::vector<long> c(static_cast<size_t>(f_));
    for (int i = 0; i < f_; ++i) {
        c[static_cast<size_t>(i)] = a % p_;
        a /= p_;
    }
    return c;
}

long Field::res_index(const std::vector<long>& coeffs) const
{
    long idx = 0;
    for (int i = f_ - 1; i >= 0; --i) idx = idx * p_ + (((coeffs[static_cast<size_t>(i)] % p_) + p_) % p_);
    return idx;
}

long Field::res_add(long a, long b) const
{
    auto ca = res_coeffs(a);
    const auto cb = res_coeffs(b);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % p_;
    return res_index(ca);
}

long Field::res_neg(long a) const
{
    auto ca = res_coeffs(a);
    for (auto& c : ca) c = (p_ - c) % p_;
    return res_index(ca);
}

long Field::res_mul(long a, long b) const
{
    const auto ca = res_coeffs(a);
    const auto cb = res_coeffs(b);
    std::vector<long> prod(static_cast<size_t>(2 * f_ - 1), 0);
    for (int i = 0; i < f_; ++i)
        for (int j = 0; j < f_; ++j)
            prod[static_cast<size_t>(i + j)] = (prod[static_cast<size_t>(i + j)] + ca[static_cast<size_t>(i)] * cb[static_cast<size_t>(j)]) % p_;
    auto rem = poly_rem(prod, poly_, p_);
    rem.resize(static_cast<size_t>(f_), 0);
    return res_index(rem);
}

long Field::res_pow(long a, long n) const
{
    long r = 1;
    while (n > 0) {
        if (n & 1) r = res_mul(r, a);
        a = res_mul(a, a);
        n >>= 1;
    }
    return r;
}

long Field::res_inv(long a) const
{
    if (a == 0) throw ArithmeticError("residue zero has no inverse");
    return res_pow(a, q_ - 2);
}

long Field::res_order(long a) const
{
    if (a == 0) throw ArithmeticError("order of residue zero");
    long n = q_ - 1;
    long order = n;
    long m = n;
    for (long l = 2; l * l <= m; ++l) {
        if (m % l != 0) continue;
        while (m % l == 0) m /= l;
        while (order % l == 0 && res_pow(a, order / l) == 1) order /= l;
    }
    if (m > 1)
        while (order % m == 0 && res_pow(a, order / m) == 1) order /= m;
    return order;
}

std::string residue_str(const Field& field, long residue)
{
    if (field.f() == 1) return std::to_string(residue);
    const auto c = field.res_coeffs(residue);
    std::vector<std::string> terms;
    for (int i = 0; i < field.f(); ++i) {
        const long a = c[static_cast<size_t>(i)];
        if (a == 0) continue;
        std::string t;
        if (i == 0)
            t = std::to_string(a);
        else {
            t = (a == 1 ? "" : std::to_string(a) + "*") + "u";
            if (i > 1) t += "^" + std::to_string(i);
        }
        terms.push_back(t);
    }
    if (terms.empty()) return "0";
    if (terms.size() == 1) return terms[0];
    std::string s = "(";
    for (size_t i = 0; i < terms.size(); ++i) s += (i ? "+" : "") + terms[i];
    return s + ")";
}

// ---------------------------------------------------------------------------
// PAdic

PAdic PAdic::make_unit(FieldPtr field, long val, Raw raw, int prec, bool exact)
{
    PAdic r;
    r.field_ = std::move(field);
    r.zero_ = false;
    r.exact_ = exact;
    r.val_ = val;
    r.prec_ = std::min(prec, r.field_->precision());
    RawOps(*r.field_).truncate(raw, r.prec_);
    r.unit_ = std::move(raw);
    return r;
}

struct PAdicAccess {
    static PAdic unit(const FieldPtr& f, long val, Raw raw, int prec, bool exact)
    {
        return PAdic::make_unit(f, val, std::move(raw), prec, exact);
    }
    static const Raw& raw(const PAdic& a) { return a.unit_; }
};

namespace {

// Normalizes pi^val * raw where raw is known modulo pi^avail.
PAdic normalize(const FieldPtr& field, long val, Raw raw, long avail, bool exact)
{
    RawOps ops(*field);
    ops.truncate(raw, avail);
    const long t = ops.valuation(raw, avail);
    if (t >= avail) {
        if (exact) return PAdic::zero(field);
        throw PrecisionError("all known digits cancelled");
    }
    raw = ops.shift_down(std::move(raw), t);
    return PAdicAccess::unit(field, val + t, std::move(raw), static_cast<int>(avail - t), exact);
}

void check_same_field(const PAdic& a, const PAdic& b)
{
    if (!a.field() || !b.field()) throw ArithmeticError("operation on an element without a field");
    if (a.field() != b.field() && !(*a.field() == *b.field()))
        throw ArithmeticError("operands belong to different fields");
}

}  // namespace

PAdic PAdic::zero(FieldPtr field)
{
    PAdic r;
    r.field_ = std::move(field);
    return r;
}

PAdic PAdic::one(FieldPtr field)
{
    RawOps ops(*field);
    const int n = field->precision();
    return make_unit(field, 0, ops.one(), n, true);
}

PAdic PAdic::from_int(FieldPtr field, const mpz_class& n)
{
    if (n == 0) return zero(std::move(field));
    RawOps ops(*field);
    mpz_class m = n;
    mpz_class pz(field->p());
    const unsigned long v = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
    Raw raw = ops.zero();
    raw[0] = m;
    ops.reduce(raw);
    const int prec = field->precision();
    return make_unit(field, static_cast<long>(v) * field->e(), std::move(raw), prec, true);
}

PAdic PAdic::pi(FieldPtr field) { return pi_power(std::move(field), 1); }

PAdic PAdic::pi_power(FieldPtr field, long k)
{
    RawOps ops(*field);
    const int prec = field->precision();
    return make_unit(field, k, ops.one(), prec, true);
}

PAdic PAdic::unramified_generator(FieldPtr field)
{
    if (field->f() == 1) return from_int(field, -field->unramified_poly()[0]);
    RawOps ops(*field);
    Raw raw = ops.zero();
    raw[1] = 1;
    const int prec = field->precision();
    return make_unit(field, 0, std::move(raw), prec, true);
}

PAdic PAdic::from_digits(FieldPtr field, long val, const std::vector<long>& digits, bool exact)
{
    RawOps ops(*field);
    Raw acc = ops.zero();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = ops.add(ops.mul_pi(acc), ops.lift(*it));
    const long avail = exact ? field->precision() : static_cast<long>(digits.size());
    if (avail == 0) {
        if (exact) return zero(field);
        throw PrecisionError("no digits given");
    }
    return normalize(field, val, std::move(acc), avail, exact);
}

PAdic PAdic::teichmuller(FieldPtr field, long residue)
{
    if (residue == 0) return zero(field);
    RawOps ops(*field);
    Raw t = ops.lift(residue);
    const long iterations = static_cast<long>(field->e()) * field->storage_exponent() + 1;
    for (long i = 0; i < iterations; ++i) t = ops.pow(t, mpz_class(field->q()));
    const int prec = field->precision();
    return make_unit(field, 0, std::move(t), prec, true);
}

long PAdic::digit_at(long pos) const
{
    if (zero_) return 0;
    if (pos < val_) return 0;
    if (pos >= val_ + prec_) throw PrecisionError("digit requested beyond known precision");
    RawOps ops(*field_);
    Raw r = unit_;
    for (long k = val_; k < pos; ++k) {
        const long d = ops.residue(r);
        r = ops.div_pi(ops.sub(r, ops.lift(d)));
    }
    return ops.residue(r);
}

std::vector<long> PAdic::digits() const { return leading_digits(prec_); }

std::vector<long> PAdic::leading_digits(long count) const
{
    std::vector<long> out;
    if (zero_) return out;
    count = std::min<long>(count, prec_);
    RawOps ops(*field_);
    Raw r = unit_;
    out.reserve(static_cast<size_t>(std::max<long>(count, 0)));
    for (long k = 0; k < count; ++k) {
        const long d = ops.residue(r);
        out.push_back(d);
        if (k + 1 < count) r = ops.div_pi(ops.sub(r, ops.lift(d)));
    }
    return out;
}

long PAdic::residue() const
{
    if (zero_ || val_ > 0) return 0;
    if (val_ < 0) throw ArithmeticError("residue of a non-integral element");
    return RawOps(*field_).residue(unit_);
}

PAdic PAdic::reduce_mod(long level) const
{
    if (zero_ || val_ >= level) return zero(field_);
    if (absolute_precision() < level) throw PrecisionError("value not known modulo pi^" + std::to_string(level));
    Raw raw = unit_;
    RawOps(*field_).truncate(raw, level - val_);
    return make_unit(field_, val_, std::move(raw), field_->precision(), true);
}

PAdic PAdic::with_precision(int rel_prec) const
{
    if (zero_ || rel_prec >= prec_) return *this;
    if (rel_prec <= 0) throw PrecisionError("precision must be positive");
    return make_unit(field_, val_, unit_, rel_prec, exact_);
}

PAdic PAdic::operator-() const
{
    if (zero_) return *this;
    PAdic r = *this;
    r.unit_ = RawOps(*field_).neg(unit_);
    return r;
}

PAdic PAdic::operator+(const PAdic& o) const
{
    check_same_field(*this, o);
    if (zero_ && exact_) return o;
    if (o.zero_ && o.exact_) return *this;
    RawOps ops(*field_);
    const long vmin = std::min(val_, o.val_);
    const long avail = std::min(absolute_precision(), o.absolute_precision()) - vmin;
    Raw sum = ops.zero();
    if (val_ - vmin < avail) sum = ops.add(sum, ops.shift_up(unit_, val_ - vmin));
    if (o.val_ - vmin < avail) sum = ops.add(sum, ops.shift_up(o.unit_, o.val_ - vmin));
    return normalize(field_, vmin, std::move(sum), avail, exact_ && o.exact_);
}

PAdic PAdic::operator-(const PAdic& o) const { return *this + (-o); }

PAdic PAdic::operator*(const PAdic& o) const
{
    check_same_field(*this, o);
    if (zero_ || o.zero_) return zero(field_);
    RawOps ops(*field_);
    return make_unit(field_, val_ + o.val_, ops.mul(unit_, o.unit_), std::min(prec_, o.prec_), exact_ && o.exact_);
}

PAdic PAdic::inverse() const
{
    if (zero_) throw ArithmeticError("division by zero");
    RawOps ops(*field_);
    return make_unit(field_, -val_, ops.inverse(unit_), prec_, exact_);
}

PAdic PAdic::operator/(const PAdic& o) const
{
    check_same_field(*this, o);
    return *this * o.inverse();
}

PAdic PAdic::pow(long n) const
{
    if (n < 0) return inverse().pow(-n);
    PAdic r = one(field_);
    PAdic b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n > 0) b = b * b;
    }
    return r;
}

PAdic PAdic::shift(long k) const
{
    if (zero_) return *this;
    PAdic r = *this;
    r.val_ += k;
    return r;
}

bool PAdic::approx_equal(const PAdic& o) const
{
    try {
        return (*this - o).is_zero();
    } catch (const PrecisionError&) {
        return true;
    }
}

bool PAdic::is_one() const { return approx_equal(one(field_)); }

std::string PAdic::expansion_below(long level) const
{
    if (zero_ || val_ >= level) return "0";
    if (level > absolute_precision()) throw PrecisionError("expansion requested beyond known precision");
    const auto ds = leading_digits(level - val_);
    std::string out;
    for (long pos = val_; pos < level; ++pos) {
        const long d = ds[static_cast<size_t>(pos - val_)];
        if (d == 0) continue;
        std::string c = residue_str(*field_, d);
        std::string term;
        if (pos == 0)
            term = c;
        else {
            const std::string pw = pos == 1 ? "pi" : "pi^" + std::to_string(pos);
            term = c == "1" ? pw : c + "*" + pw;
        }
        out += (out.empty() ? "" : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

std::string PAdic::str() const
{
    if (zero_) return "0";
    const long abs = absolute_precision();
    return expansion_below(abs) + " + O(pi^" + std::to_string(abs) + ")";
}

std::string short_str(const PAdic& a, int digits)
{
    if (a.is_zero()) return "0";
    const auto ds = a.digits();
    const size_t shown = std::min(ds.size(), static_cast<size_t>(digits));
    const bool more = a.is_exact() ? std::any_of(ds.begin() + static_cast<long>(shown), ds.end(), [](long d) { return d != 0; })
                                   : true;
    const long level = a.valuation() + static_cast<long>(shown);
    std::string s = a.expansion_below(level);
    if (more) s += " + O(pi^" + std::to_string(level) + ")";
    return s;
}

// ---------------------------------------------------------------------------

SqrtResult sqrt(const PAdic& a)
{
    const auto& F = a.field();
    if (a.is_zero()) return {a, {}};
    if (a.valuation() % 2 != 0) return {std::nullopt, "odd valuation " + std::to_string(a.valuation())};
    const PAdic u = a.shift(-a.valuation());
    const long nu2 = F->p() == 2 ? F->e() : 0;
    const long need = 2 * nu2 + 1;
    if (u.absolute_precision() < need) throw PrecisionError("not enough digits to decide squareness");
    const int lead = F->p() == 2 ? F->e() + 1 : 1;

    RawOps ops(*F);
    std::optional<PAdic> start;
    std::vector<long> ds(static_cast<size_t>(lead), 0);
    long total = 1;
    for (int i = 0; i < lead; ++i) total *= F->q();
    for (long idx = 0; idx < total && !start; ++idx) {
        long t = idx;
        for (int i = 0; i < lead; ++i) {
            ds[static_cast<size_t>(i)] = t % F->q();
            t /= F->q();
        }
        if (ds[0] == 0) continue;
        const PAdic x = PAdic::from_digits(F, 0, ds, true);
        const PAdic diff = x * x - u;
        if (diff.is_zero() || diff.valuation() >= need) start = x;
    }
    if (!start) {
        if (F->p() == 2) return {std::nullopt, "unit is not a square modulo 4*pi"};
        return {std::nullopt, "leading digit is not a square in the residue field"};
    }

    Raw x = PAdicAccess::raw(*start);
    const Raw& ur = PAdicAccess::raw(u);
    Raw inv2;
    if (F->p() != 2) {
        inv2 = ops.zero();
        inv2[0] = 2;
        inv2 = ops.inverse(inv2);
    }
    long iterations = 3;
    for (long k = 1; k < static_cast<long>(F->e()) * F->storage_exponent(); k *= 2) ++iterations;
    for (long it = 0; it < iterations; ++it) {
        Raw w = ops.sub(ops.mul(x, x), ur);
        if (ops.valuation(w, LONG_MAX) == LONG_MAX) break;
        Raw corr = F->p() == 2 ? ops.shift_down(w, F->e()) : ops.mul(w, inv2);
        corr = ops.mul(corr, ops.inverse(x));
        x = ops.sub(x, corr);
    }
    const int prec = static_cast<int>(std::min<long>(F->precision(), u.relative_precision() - nu2));
    if (prec <= 0) throw PrecisionError("square root has no certified digits");
    PAdic root = PAdicAccess::unit(F, a.valuation() / 2, std::move(x), prec, u.is_exact());
    PAdic other = -root;
    if (other.digits() < root.digits()) root = other;
    return {root, {}};
}

PAdic root_of_unity(const FieldPtr& field, long n)
{
    if (n <= 0) throw FieldError("root of unity order must be positive");
    if (n == 1) return PAdic::one(field);
    const long q = field->q();
    if ((q - 1) % n == 0) {
        const long r = field->res_pow(field->res_generator(), (q - 1) / n);
        return PAdic::teichmuller(field, r);
    }
    if (n == 2) return -PAdic::one(field);
    if (n % field->p() == 0)
        throw FieldError("roots of unity of order divisible by p need a wildly ramified extension");
    const int f_needed = multiplicative_order(field->p(), n);
    throw FieldError("zeta_" + std::to_string(n) + " is not in K; enlarge f to " + std::to_string(f_needed), f_needed);
}

}  // namespace bt
