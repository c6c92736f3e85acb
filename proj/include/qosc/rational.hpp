// rational.hpp
// ------------
// Exact arithmetic in Q(q), the field of rational functions in the quantum
// parameter q with rational coefficients.  A Scalar is kept in the canonical
// form num/den with
//   * num, den in Z[q] with gcd(num, den) = 1 (polynomial gcd including
//     integer content),
//   * den != 0 and the leading coefficient of den positive,
//   * zero represented as 0/1.
// Every arithmetic operation re-canonicalizes, so equality is coefficient
// equality and an is_zero() test is trustworthy.  Because q is a formal
// (transcendental) parameter, q is never a root of unity here: q^n - 1 is
// invertible for every n != 0, which the whole representation theory relies
// on.
//
// ZPoly is the dense Z[q] workhorse underneath: primitive-PRS gcd, exact
// division, and pseudo-remainders, all on GMP integers so coefficient growth
// is harmless.

#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace qosc {

// ---------------------------------------------------------------------------
// ZPoly: dense univariate polynomials over Z, variable q.
// ---------------------------------------------------------------------------

class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long v) { if (v != 0) c_.assign(1, mpz_class(v)); }
    ZPoly(const mpz_class& v) { if (v != 0) c_.assign(1, v); }

    static ZPoly monomial(const mpz_class& coeff, int deg) {
        ZPoly p;
        if (coeff != 0) {
            p.c_.assign(static_cast<size_t>(deg) + 1, mpz_class(0));
            p.c_.back() = coeff;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Smallest exponent with a nonzero coefficient (-1 for the zero polynomial).
    int low_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    const mpz_class& coeff(int i) const {
        static const mpz_class zero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(i)];
    }
    const mpz_class& leading() const {
        assert(!c_.empty());
        return c_.back();
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] -= b.c_[i];
        }
        r.trim();
        return r;
    }
    ZPoly operator-() const {
        ZPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        ZPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    // Total order (degree, then coefficients from the top); used only to make
    // containers deterministic, no mathematical meaning.
    friend std::strong_ordering operator<=>(const ZPoly& a, const ZPoly& b) {
        if (a.c_.size() != b.c_.size())
            return a.c_.size() <=> b.c_.size();
        for (size_t i = a.c_.size(); i-- > 0;) {
            int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    // Exact division; throws DomainError if the division leaves a remainder.
    // Classical long division over Z (checks coefficient divisibility).
    friend ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        if (a.is_zero()) return {};
        if (a.degree() < b.degree())
            throw DomainError("inexact polynomial division");
        ZPoly rem = a, quot;
        quot.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, mpz_class(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            mpz_class qc, r;
            mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(),
                        rem.leading().get_mpz_t(), b.leading().get_mpz_t());
            if (r != 0) throw DomainError("inexact polynomial division");
            int shift = rem.degree() - b.degree();
            quot.c_[static_cast<size_t>(shift)] = qc;
            // rem -= qc * q^shift * b
            for (size_t i = 0; i < b.c_.size(); ++i)
                rem.c_[static_cast<size_t>(shift) + i] -= qc * b.c_[i];
            rem.trim();
        }
        if (!rem.is_zero()) throw DomainError("inexact polynomial division");
        quot.trim();
        return quot;
    }

    // gcd of the integer coefficients, sign-normalized to be positive
    // (0 for the zero polynomial).
    mpz_class content() const {
        mpz_class g(0);
        for (const auto& x : c_) g = gcd(g, x);
        return g;
    }
    ZPoly primitive_part() const {
        if (is_zero()) return {};
        return exact_div(*this, ZPoly(content()));
    }

    // Polynomial gcd in Z[q] via the primitive PRS; result has positive
    // leading coefficient.  Includes the integer-content part, so
    // gcd(2q+2, 4) = 2.
    friend ZPoly poly_gcd(ZPoly a, ZPoly b) {
        if (a.is_zero() && b.is_zero()) return {};
        mpz_class cont = gcd(a.content(), b.content());
        if (a.is_zero() || b.is_zero()) {
            ZPoly g = (a.is_zero() ? b : a).primitive_part();
            if (g.leading() < 0) g = -g;
            return ZPoly(cont) * g;
        }
        a = a.primitive_part();
        b = b.primitive_part();
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            ZPoly r = pseudo_rem(a, b);
            a = b;
            b = r.primitive_part();
        }
        if (a.leading() < 0) a = -a;
        return ZPoly(cont) * a;
    }

    // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
    friend ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
        assert(!b.is_zero());
        int k = a.degree() - b.degree() + 1;
        if (k <= 0) return a;
        while (!a.is_zero() && a.degree() >= b.degree() && k > 0) {
            mpz_class lead = a.leading();
            int shift = a.degree() - b.degree();
            for (auto& x : a.c_) x *= b.leading();
            for (size_t i = 0; i < b.c_.size(); ++i)
                a.c_[static_cast<size_t>(shift) + i] -= lead * b.c_[i];
            a.trim();
            --k;
        }
        // Pad remaining powers of lc(b) so the definition is met exactly.
        while (k-- > 0)
            for (auto& x : a.c_) x *= b.leading();
        return a;
    }

    std::string to_string(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const mpz_class& ci = coeff(i);
            if (ci == 0) continue;
            mpz_class a = abs(ci);
            if (s.empty())
                s += (ci < 0) ? "-" : "";
            else
                s += (ci < 0) ? "-" : "+";
            if (a != 1 || i == 0) {
                s += a.get_str();
                if (i != 0) s += "*";
            }
            if (i > 0) {
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

    size_t term_count() const {
        size_t n = 0;
        for (const auto& x : c_) n += (x != 0);
        return n;
    }

private:
    std::vector<mpz_class> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// ---------------------------------------------------------------------------
// Scalar: canonical fractions num/den over Z[q].
// ---------------------------------------------------------------------------

class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}
    Scalar(const mpz_class& v) : num_(v), den_(1) {}
    Scalar(const ZPoly& p) : num_(p), den_(1) {}
    Scalar(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    // q^k for any integer k (negative k puts the power in the denominator).
    static Scalar q_power(long k) {
        if (k >= 0) return Scalar(ZPoly::monomial(1, static_cast<int>(k)), ZPoly(1));
        return Scalar(ZPoly(1), ZPoly::monomial(1, static_cast<int>(-k)));
    }
    static Scalar q() { return q_power(1); }
    static Scalar rational(long num, long den) { return Scalar(ZPoly(num), ZPoly(den)); }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == ZPoly(1) && den_ == ZPoly(1); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DomainError("scalar division by zero");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Scalar(den_, num_);
    }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // Deterministic (but mathematically meaningless) total order for maps.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        auto c = a.num_ <=> b.num_;
        if (c != std::strong_ordering::equal) return c;
        return a.den_ <=> b.den_;
    }

    std::string to_string() const {
        if (den_ == ZPoly(1)) return num_.to_string();
        std::string n = num_.to_string();
        if (num_.term_count() > 1) n = "(" + n + ")";
        std::string d = den_.to_string();
        // Parenthesize multi-term denominators, and single-term ones that
        // carry both a coefficient and a power of q ("4*q"): under the usual
        // left-associative reading "n/4*q" would mean "(n/4)*q".
        if (den_.term_count() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    ZPoly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw DomainError("scalar with zero denominator");
        if (num_.is_zero()) {
            den_ = ZPoly(1);
            return;
        }
        ZPoly g = poly_gcd(num_, den_);
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

// The balanced q-bracket <a> = (a - a^{-1}) / (q - q^{-1}).  <q^n> is the
// quantum integer [n]; <1> = <-1> = 0, which is exactly the vanishing that
// constrains structure constants at signed q-power weights.
inline Scalar bracket(const Scalar& a) {
    if (a.is_zero()) throw ZeroArgument("bracket of 0");
    static const Scalar denom = Scalar::q() - Scalar::q_power(-1);
    return (a - a.inverse()) / denom;
}

} // namespace qosc
