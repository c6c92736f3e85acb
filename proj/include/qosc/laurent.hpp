// laurent.hpp
// -----------
// Sparse Laurent polynomials over Q(q) in one formal unit variable.  The
// variable is tagged by a single character (we use 'K' for Cartan parts,
// 'T' for weight arguments and 'U' for q^{-m} substitution targets); mixing
// tags in arithmetic is a bug and throws.
//
// On top of the arithmetic live three exactness devices used throughout the
// weight computations:
//   * geometric_partial_sum -- closed form of  sum_{j=0}^{M-1} phi(q^{-j} s)
//     as a Laurent polynomial in U = q^{-M};
//   * integer_power_roots   -- the exact set { m in Z : P(q^{-m}) = 0 };
//   * classify_signed_power -- detects r = eps * q^n.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <qosc/errors.hpp>
#include <qosc/rational.hpp>

namespace qosc {

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(char tag) : tag_(tag) {}
    LaurentPoly(char tag, const Scalar& constant) : tag_(tag) { add_term(0, constant); }

    static LaurentPoly variable(char tag, long exponent = 1) {
        LaurentPoly p(tag);
        p.add_term(exponent, Scalar(1));
        return p;
    }

    char tag() const { return tag_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(long e, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    long min_exp() const { require_nonzero(); return terms_.begin()->first; }
    long max_exp() const { require_nonzero(); return terms_.rbegin()->first; }
    const std::map<long, Scalar>& terms() const { return terms_; }

    LaurentPoly operator-() const {
        LaurentPoly r(tag_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        r.check_tag(o);
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        r.check_tag(o);
        for (auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        check_tag(o);
        LaurentPoly r(tag_);
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly operator*(const Scalar& s) const {
        LaurentPoly r(tag_);
        if (s.is_zero()) return r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }
    friend LaurentPoly operator*(const Scalar& s, const LaurentPoly& p) { return p * s; }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Substitute the variable by a concrete nonzero Scalar.
    Scalar evaluate(const Scalar& x) const {
        Scalar acc(0);
        for (auto& [e, c] : terms_) acc += c * x.pow(e);
        return acc;
    }

    // The image under var -> var^{-1}.
    LaurentPoly invert_variable() const {
        LaurentPoly r(tag_);
        for (auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        // Descending exponents read like handwritten math.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = c.to_string();
            bool negated = false;
            if (cs.front() == '-' && c.num().term_count() == 1) {
                negated = true;
                cs.erase(0, 1);
            }
            if (!out.empty()) out += negated ? " - " : " + ";
            else if (negated) out += "-";
            bool needs_parens = cs.find_first_of("+-") != std::string::npos ||
                                cs.find('/') != std::string::npos;
            std::string var;
            if (e == 1) var = std::string(1, tag_);
            else if (e != 0) var = std::string(1, tag_) + "^" + std::to_string(e);
            if (var.empty()) out += needs_parens ? "(" + cs + ")" : cs;
            else if (cs == "1") out += var;
            else out += (needs_parens ? "(" + cs + ")" : cs) + "*" + var;
        }
        return out;
    }

private:
    void require_nonzero() const {
        if (terms_.empty()) throw ZeroArgument("exponent range of the zero Laurent polynomial");
    }
    void check_tag(const LaurentPoly& o) const {
        if (tag_ != o.tag_)
            throw DimensionMismatch(std::string("Laurent variable mismatch: ") + tag_ +
                                    " vs " + o.tag_);
    }

    char tag_ = 'T';
    std::map<long, Scalar> terms_;
};

// Evaluate an ordinary polynomial (coefficient list, index = degree) at a
// Laurent-polynomial argument.  Used to form h(T) = p((T + T^{-1})/(q-q^{-1})^2).
inline LaurentPoly poly_eval(const std::vector<Scalar>& coeffs, const LaurentPoly& arg) {
    LaurentPoly acc(arg.tag());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * arg;
        acc.add_term(0, *it);
    }
    return acc;
}

// Closed form of the partial sums  S(M) = sum_{j=0}^{M-1} phi(q^{-j} s).
// Interchanging the sums termwise turns each phi_i T^i into a geometric
// series, giving
//     P(U) = sum_{i != 0} phi_i s^i (1 - U^i) / (1 - q^{-i}),   U = q^{-M},
// which satisfies P(q^{-M}) = S(M) for every M >= 0.  A nonzero constant
// term phi_0 would contribute a summand linear in M, which is not a Laurent
// polynomial in q^{-M}, so it is rejected.
inline LaurentPoly geometric_partial_sum(const LaurentPoly& phi, const Scalar& s) {
    if (s.is_zero()) throw ZeroArgument("geometric_partial_sum base point");
    if (!phi.coeff(0).is_zero())
        throw NonzeroConstantTerm("geometric_partial_sum needs phi_0 = 0, got " +
                                  phi.coeff(0).to_string());
    LaurentPoly P('U');
    for (auto& [i, phi_i] : phi.terms()) {
        Scalar ratio = phi_i * s.pow(i) / (Scalar(1) - Scalar::q_power(-i));
        P.add_term(0, ratio);
        P.add_term(i, -ratio);
    }
    return P;
}

// The exact set { m in Z : P(q^{-m}) = 0 }.
//
// Clearing denominators turns P into  B(q,U) = sum_i U^i b_i(q)  with integer
// coefficients.  At U = q^{-m} the monomial q^j of b_i lands at exponent
// j - m i.  Since each b_i alone never cancels internally, total vanishing
// forces a collision  j1 - m i1 = j2 - m i2  between distinct i, whence
// |m| = |j1 - j2| / |i1 - i2| <= (global q-exponent spread of B).  Each
// candidate in that window is then checked by exact substitution.
inline std::set<long> integer_power_roots(const LaurentPoly& P) {
    if (P.is_zero())
        throw IdenticallyZero("integer_power_roots of the zero Laurent polynomial");

    // Common denominator of all coefficients; multiplying through by it does
    // not change the root set.
    ZPoly common(1);
    for (auto& [i, c] : P.terms()) {
        (void)i;
        common = exact_div(common * c.den(), poly_gcd(common, c.den()));
    }
    int jmin = 0, jmax = 0;
    bool first = true;
    for (auto& [i, c] : P.terms()) {
        (void)i;
        ZPoly b = c.num() * exact_div(common, c.den());
        if (first) { jmin = b.low_degree(); jmax = b.degree(); first = false; }
        else {
            jmin = std::min(jmin, b.low_degree());
            jmax = std::max(jmax, b.degree());
        }
    }
    long spread = jmax - jmin;

    std::set<long> roots;
    for (long m = -spread; m <= spread; ++m)
        if (P.evaluate(Scalar::q_power(-m)).is_zero()) roots.insert(m);
    return roots;
}

// Detects r = eps * q^n exactly.  In canonical form this happens iff both
// numerator and denominator are monomials, the denominator is q^b and the
// numerator is +-q^a; then n = a - b.
inline std::optional<std::pair<int, long>> classify_signed_power(const Scalar& r) {
    if (r.is_zero()) throw ZeroArgument("classify_signed_power of 0");
    const ZPoly& num = r.num();
    const ZPoly& den = r.den();
    if (num.term_count() != 1 || den.term_count() != 1) return std::nullopt;
    if (den.leading() != 1) return std::nullopt;
    int eps;
    if (num.leading() == 1) eps = 1;
    else if (num.leading() == -1) eps = -1;
    else return std::nullopt;
    return std::make_pair(eps, static_cast<long>(num.degree() - den.degree()));
}

} // namespace qosc
