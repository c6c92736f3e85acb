// parse
// -----
// Textual input for the CLI: rational expressions in q — and, for deformation
// polynomials, the symbol C — with integer literals, + - * / ^, unary minus,
// and parentheses.  ^ binds tighter than * and /; negative exponents are
// accepted (q^-1); whitespace is insignificant.  Errors are reported as
// ParseError with the offending position.  parse(print(x)) = x holds for both
// scalars and deformation polynomials.
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include <qosc/pbw.hpp>
#include <qosc/verma.hpp>

namespace qosc {

namespace detail {

// Values during parsing: polynomials in C with Scalar coefficients.  Scalars
// are the degree-<=0 case.  Trailing zero coefficients are trimmed so the
// degree test is exact.
struct CValue {
    std::vector<Scalar> c; // c[i] multiplies C^i

    static CValue scalar(Scalar s) {
        CValue v;
        if (!s.is_zero()) v.c.push_back(std::move(s));
        return v;
    }
    static CValue symbol_c() {
        CValue v;
        v.c = {Scalar(0), Scalar(1)};
        return v;
    }
    bool is_scalar() const { return c.size() <= 1; }
    Scalar as_scalar() const { return c.empty() ? Scalar(0) : c[0]; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    CValue operator+(const CValue& o) const {
        CValue v = *this;
        if (v.c.size() < o.c.size()) v.c.resize(o.c.size(), Scalar(0));
        for (std::size_t i = 0; i < o.c.size(); ++i) v.c[i] += o.c[i];
        v.trim();
        return v;
    }
    CValue operator-() const {
        CValue v = *this;
        for (Scalar& s : v.c) s = -s;
        return v;
    }
    CValue operator-(const CValue& o) const { return *this + (-o); }
    CValue operator*(const CValue& o) const {
        CValue v;
        if (c.empty() || o.c.empty()) return v;
        v.c.assign(c.size() + o.c.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) v.c[i + j] += c[i] * o.c[j];
        v.trim();
        return v;
    }
};

class ExprParser {
public:
    ExprParser(const std::string& text, bool allow_c) : s_(text), allow_c_(allow_c) {}

    CValue parse() {
        CValue v = expr();
        skip_space();
        if (pos_ != s_.size())
            throw ParseError("unexpected trailing input '" + s_.substr(pos_) + "'", pos_);
        return v;
    }

private:
    CValue expr() {
        CValue v = term();
        while (true) {
            skip_space();
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    // * and / at equal precedence, left associative.
    CValue term() {
        CValue v = unary();
        while (true) {
            skip_space();
            std::size_t at = pos_;
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                CValue d = unary();
                if (!d.is_scalar())
                    throw ParseError("division by an expression containing C", at);
                v = v * CValue::scalar(d.as_scalar().inverse());
            } else {
                return v;
            }
        }
    }

    CValue unary() {
        skip_space();
        if (eat('-')) return -unary();
        return power();
    }

    CValue power() {
        CValue base = atom();
        skip_space();
        if (!eat('^')) return base;
        std::size_t at = pos_;
        long e = exponent();
        if (e >= 0) {
            CValue v = CValue::scalar(Scalar(1));
            for (long k = 0; k < e; ++k) v = v * base;
            return v;
        }
        if (!base.is_scalar())
            throw ParseError("negative power of an expression containing C", at);
        Scalar b = base.as_scalar().inverse();
        CValue v = CValue::scalar(Scalar(1));
        for (long k = 0; k < -e; ++k) v = v * CValue::scalar(b);
        return v;
    }

    long exponent() {
        skip_space();
        bool neg = eat('-');
        skip_space();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected an integer exponent", pos_);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        return neg ? -v : v;
    }

    CValue atom() {
        skip_space();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char ch = s_[pos_];
        if (ch == '(') {
            std::size_t open = pos_++;
            CValue v = expr();
            skip_space();
            if (!eat(')')) throw ParseError("unbalanced '(' ", open);
            return v;
        }
        if (ch == 'q') {
            ++pos_;
            return CValue::scalar(Scalar::q());
        }
        if (ch == 'C') {
            if (!allow_c_) throw ParseError("the symbol C is not allowed here", pos_);
            ++pos_;
            return CValue::symbol_c();
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return CValue::scalar(Scalar(mpz_class(digits)));
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& s_;
    bool allow_c_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Scalar parse_scalar(const std::string& text) {
    return detail::ExprParser(text, /*allow_c=*/false).parse().as_scalar();
}

inline CenterPolynomial parse_center_poly(const std::string& text) {
    return CenterPolynomial(detail::ExprParser(text, /*allow_c=*/true).parse().c);
}

inline Weight parse_weight(const std::string& text) { return Weight(parse_scalar(text)); }

} // namespace qosc
