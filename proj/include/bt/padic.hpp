#pragma once

#include <climits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bt {

/// Raised when every stored digit of a result cancelled, or a digit was
/// requested past the known precision of a value.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for invalid field parameters, or when a requested object needs a
/// larger field (`suggested_f` holds the unramified degree that would work).
class FieldError : public std::runtime_error {
public:
    explicit FieldError(const std::string& what, int suggested_f = 0)
        : std::runtime_error(what), suggested_f(suggested_f) {}
    int suggested_f;
};

class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr long kInfiniteValuation = LONG_MAX;

bool is_prime(long n);
/// Least k >= 1 with p^k = 1 mod n (requires gcd(p, n) = 1).
int multiplicative_order(long p, long n);

/*
 * A finite extension K/Q_p built as a tower: the unramified extension W of
 * degree f defined by a monic lift of an irreducible polynomial over F_p,
 * followed by the totally ramified step pi^e = p.
 *
 * Elements of O_K are stored as sum_{j<e} c_j pi^j with c_j in W, and each
 * c_j is a coefficient vector in the basis 1, u, ..., u^{f-1} taken modulo
 * p^K (K = storage_exponent()). Residue field elements are encoded as
 * integers sum a_i p^i with 0 <= a_i < p.
 */
class Field : public std::enable_shared_from_this<Field> {
public:
    static std::shared_ptr<const Field> make(long p, int f, int e, int precision = 64);

    long p() const { return p_; }
    int f() const { return f_; }
    int e() const { return e_; }
    long q() const { return q_; }
    int precision() const { return precision_; }
    int degree() const { return e_ * f_; }
    /// Coefficients c_0..c_f of the monic unramified polynomial.
    const std::vector<long>& unramified_poly() const { return poly_; }
    std::string describe() const;

    int storage_exponent() const { return storage_k_; }
    const mpz_class& p_power(int k) const { return p_pows_.at(static_cast<size_t>(k)); }
    int width() const { return e_ * f_; }

    // residue field F_q, elements encoded as integers in [0, q)
    long res_add(long a, long b) const;
    long res_neg(long a) const;
    long res_mul(long a, long b) const;
    long res_pow(long a, long n) const;
    long res_inv(long a) const;
    long res_order(long a) const;
    /// Canonical primitive element: the least index of multiplicative order q - 1.
    long res_generator() const { return generator_; }
    std::vector<long> res_coeffs(long a) const;
    long res_index(const std::vector<long>& coeffs) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && f_ == o.f_ && e_ == o.e_ && precision_ == o.precision_;
    }

private:
    Field() = default;
    long p_ = 2;
    int f_ = 1;
    int e_ = 1;
    long q_ = 2;
    int precision_ = 64;
    int storage_k_ = 0;
    std::vector<long> poly_;
    std::vector<mpz_class> p_pows_;
    long generator_ = 1;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Picks the lexicographically least monic irreducible polynomial of degree f
/// over F_p (coefficient vectors compared from the constant term upward).
std::vector<long> least_irreducible_poly(long p, int f);

/*
 * Bounded-precision element pi^v * (d_0 + d_1 pi + ...) of K.
 *
 * `exact` marks values obtained from exactly known constants (integers, pi,
 * u, roots of unity) through field operations. When such values cancel at
 * the working precision the result is the exact zero; a cancellation that
 * involves an approximate value raises PrecisionError instead.
 */
class PAdic {
public:
    PAdic() = default;

    static PAdic zero(FieldPtr field);
    static PAdic one(FieldPtr field);
    static PAdic from_int(FieldPtr field, const mpz_class& n);
    static PAdic from_int(FieldPtr field, long n) { return from_int(std::move(field), mpz_class(n)); }
    static PAdic pi(FieldPtr field);
    static PAdic pi_power(FieldPtr field, long k);
    /// The class of the variable u of the unramified polynomial (a unit of W).
    static PAdic unramified_generator(FieldPtr field);
    /// pi^val * sum digits[k] pi^k; digits are residue indices, digits[0] != 0.
    static PAdic from_digits(FieldPtr field, long val, const std::vector<long>& digits, bool exact);
    /// Teichmuller representative of a residue-field element.
    static PAdic teichmuller(FieldPtr field, long residue);

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return zero_; }
    bool is_exact() const { return exact_; }
    long valuation() const { return zero_ ? kInfiniteValuation : val_; }
    int relative_precision() const { return zero_ ? INT_MAX : prec_; }
    long absolute_precision() const { return zero_ ? kInfiniteValuation : val_ + prec_; }
    bool is_unit() const { return !zero_ && val_ == 0; }
    bool is_integral() const { return zero_ || val_ >= 0; }

    /// Residue-field digit at absolute position `pos` (0 for pos < valuation).
    long digit_at(long pos) const;
    /// Unit digits d_0 .. d_{prec-1}.
    std::vector<long> digits() const;
    /// The first `count` unit digits (fewer when the precision runs out).
    std::vector<long> leading_digits(long count) const;
    /// Residue class of an integral element modulo pi.
    long residue() const;

    /// Canonical representative of this value modulo pi^level (an exact value).
    PAdic reduce_mod(long level) const;
    PAdic with_precision(int rel_prec) const;

    PAdic operator-() const;
    PAdic operator+(const PAdic& o) const;
    PAdic operator-(const PAdic& o) const;
    PAdic operator*(const PAdic& o) const;
    PAdic operator/(const PAdic& o) const;
    PAdic& operator+=(const PAdic& o) { return *this = *this + o; }
    PAdic& operator-=(const PAdic& o) { return *this = *this - o; }
    PAdic& operator*=(const PAdic& o) { return *this = *this * o; }
    PAdic inverse() const;
    PAdic pow(long n) const;
    /// Multiplies by pi^k.
    PAdic shift(long k) const;

    /// True when the two values agree at their common precision.
    bool approx_equal(const PAdic& o) const;
    bool is_one() const;

    std::string str() const;
    /// Finite pi-adic expansion of the digits below absolute position `level`
    /// in the literal grammar (e.g. "1 + 2*pi^3"), "0" when empty.
    std::string expansion_below(long level) const;

private:
    FieldPtr field_;
    bool zero_ = true;
    bool exact_ = true;
    long val_ = 0;
    int prec_ = 0;
    std::vector<mpz_class> unit_;

    static PAdic make_unit(FieldPtr field, long val, std::vector<mpz_class> raw, int prec, bool exact);
    friend struct PAdicAccess;
};

struct SqrtResult {
    std::optional<PAdic> root;
    std::string obstruction;  // set when `root` is empty
};

/// Square root with a deterministic sign: of the two roots the one whose unit
/// digit sequence is lexicographically smaller is returned.
SqrtResult sqrt(const PAdic& a);

/// Primitive n-th root of unity. Throws FieldError when K lacks one.
PAdic root_of_unity(const FieldPtr& field, long n);

std::string residue_str(const Field& field, long residue);

/// At most `digits` leading digits; appends "+ O(pi^k)" when the value
/// continues past them.
std::string short_str(const PAdic& a, int digits = 8);

}  // namespace bt
