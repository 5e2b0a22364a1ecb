#include "bt/literal.hpp"

#include <cctype>
#include <vector>

namespace bt {

namespace {

class Parser {
public:
    Parser(const FieldPtr& F, const std::string& s) : F_(F), s_(s) {}

    PAdic parse_all()
    {
        PAdic v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    const FieldPtr& F_;
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool accept_word(const std::string& w)
    {
        skip();
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        const size_t end = pos_ + w.size();
        if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
        pos_ = end;
        return true;
    }

    std::string digits()
    {
        skip();
        const size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return s_.substr(start, pos_ - start);
    }

    long small_int()
    {
        const std::string d = digits();
        if (d.size() > 9) fail("integer too large");
        return std::stol(d);
    }

    PAdic expr()
    {
        PAdic v = term();
        for (;;) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    PAdic term()
    {
        PAdic v = unary();
        for (;;) {
            if (accept('*'))
                v = v * unary();
            else if (accept('/')) {
                const PAdic d = unary();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else
                return v;
        }
    }

    PAdic unary()
    {
        if (accept('-')) return -unary();
        return power();
    }

    PAdic power()
    {
        PAdic base = atom();
        if (!accept('^')) return base;
        const bool neg = accept('-');
        const long k = small_int();
        if (base.is_zero() && neg) fail("zero to a negative power");
        return base.pow(neg ? -k : k);
    }

    PAdic atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (accept('(')) {
            PAdic v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return PAdic::from_int(F_, mpz_class(digits()));
        if (accept_word("pi")) return PAdic::pi(F_);
        if (accept_word("p")) return PAdic::from_int(F_, F_->p());
        if (accept_word("u")) return PAdic::unramified_generator(F_);
        if (accept_word("zeta")) {
            expect('(');
            const long n = small_int();
            expect(')');
            return root_of_unity(F_, n);
        }
        fail("unexpected token");
    }
};

std::string trim(const std::string& s)
{
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

PAdic parse_scalar(const FieldPtr& F, const std::string& text) { return Parser(F, text).parse_all(); }

Mat2 parse_matrix(const FieldPtr& F, const std::string& text)
{
    const auto rows = split(text, ';');
    if (rows.size() != 2) throw ParseError("matrix literal needs two rows separated by ';': \"" + text + "\"");
    std::vector<PAdic> e;
    for (const auto& r : rows) {
        const auto cols = split(r, ',');
        if (cols.size() != 2) throw ParseError("matrix row needs two entries separated by ',': \"" + r + "\"");
        for (const auto& c : cols) e.push_back(parse_scalar(F, c));
    }
    return {e[0], e[1], e[2], e[3]};
}

ProjPoint parse_point(const FieldPtr& F, const std::string& text)
{
    const std::string t = trim(text);
    if (t == "inf" || t == "oo") return ProjPoint::infinity(F);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        const auto parts = split(t.substr(1, t.size() - 2), ':');
        if (parts.size() == 2) return {parse_scalar(F, parts[0]), parse_scalar(F, parts[1])};
    }
    return ProjPoint::of(parse_scalar(F, t));
}

BtVertex parse_vertex(const FieldPtr& F, const std::string& text)
{
    const std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw ParseError("vertex literal must look like \"(n; b)\": \"" + text + "\"");
    const auto parts = split(t.substr(1, t.size() - 2), ';');
    if (parts.size() != 2) throw ParseError("vertex literal must look like \"(n; b)\": \"" + text + "\"");
    long n = 0;
    try {
        n = std::stol(trim(parts[0]));
    } catch (const std::exception&) {
        throw ParseError("vertex level is not an integer: \"" + text + "\"");
    }
    return BtVertex(n, parse_scalar(F, parts[1]));
}

}  // namespace bt
