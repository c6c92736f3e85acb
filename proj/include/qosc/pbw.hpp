// pbw.hpp
// -------
// Elements of the algebra A in their canonical basis of ordered monomials
// F^a Y^b K^c X^d E^e (a,b,d,e >= 0, c in Z, with negative c meaning powers
// of K^{-1}).  Multiplication concatenates words and lets the rewrite engine
// restore order, so there is a single source of truth for the relations; the
// deformation polynomial p (with C0 = p(C)) is threaded through every product
// because the algebra genuinely depends on it.

#pragma once

#include <initializer_list>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <qosc/errors.hpp>
#include <qosc/laurent.hpp>
#include <qosc/rational.hpp>
#include <qosc/rewrite.hpp>

namespace qosc {

// p(t) = sum coeffs[i] t^i.  The zero polynomial is representable; operations
// that mathematically require C0 != 0 reject it at their own boundary.
class CenterPolynomial {
public:
    CenterPolynomial() = default;
    CenterPolynomial(std::initializer_list<Scalar> cs) : coeffs_(cs) { trim(); }
    explicit CenterPolynomial(std::vector<Scalar> cs) : coeffs_(std::move(cs)) { trim(); }

    // p(t) = t, the Casimir itself.
    static CenterPolynomial identity() { return {Scalar(0), Scalar(1)}; }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Scalar evaluate(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool operator==(const CenterPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const CenterPolynomial& o) const { return !(*this == o); }
    // Map-key order for the reduction-system cache.
    bool operator<(const CenterPolynomial& o) const { return coeffs_ < o.coeffs_; }

    std::string to_string(const std::string& var = "t") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Scalar> coeffs_;
};

struct PbwMonomial {
    long a = 0, b = 0, c = 0, d = 0, e = 0; // F^a Y^b K^c X^d E^e

    auto operator<=>(const PbwMonomial&) const = default;

    Word to_word() const {
        Word w;
        w.reserve(static_cast<std::size_t>(a + b + (c < 0 ? -c : c) + d + e));
        for (long i = 0; i < a; ++i) w.push_back(Letter::F);
        for (long i = 0; i < b; ++i) w.push_back(Letter::Y);
        for (long i = 0; i < c; ++i) w.push_back(Letter::K);
        for (long i = 0; i < -c; ++i) w.push_back(Letter::L);
        for (long i = 0; i < d; ++i) w.push_back(Letter::X);
        for (long i = 0; i < e; ++i) w.push_back(Letter::E);
        return w;
    }

    // Inverse of to_word on ordered words; nullopt for anything else.
    static std::optional<PbwMonomial> from_word(const Word& w) {
        PbwMonomial m;
        std::size_t i = 0;
        while (i < w.size() && w[i] == Letter::F) { ++m.a; ++i; }
        while (i < w.size() && w[i] == Letter::Y) { ++m.b; ++i; }
        while (i < w.size() && w[i] == Letter::K) { ++m.c; ++i; }
        if (m.c == 0)
            while (i < w.size() && w[i] == Letter::L) { --m.c; ++i; }
        while (i < w.size() && w[i] == Letter::X) { ++m.d; ++i; }
        while (i < w.size() && w[i] == Letter::E) { ++m.e; ++i; }
        if (i != w.size()) return std::nullopt;
        return m;
    }

    std::string to_string() const {
        std::string s;
        auto emit = [&](const char* g, long n) {
            if (n == 0) return;
            if (!s.empty()) s += " ";
            s += g;
            if (n != 1) s += "^" + std::to_string(n);
        };
        emit("F", a);
        emit("Y", b);
        emit("K", c);
        emit("X", d);
        emit("E", e);
        return s.empty() ? "1" : s;
    }
};

class PbwElement {
public:
    using TermMap = std::map<PbwMonomial, Scalar>;

    PbwElement() = default;
    static PbwElement term(PbwMonomial m, Scalar c = Scalar(1)) {
        PbwElement x;
        x.add_term(m, c);
        return x;
    }
    static PbwElement one() { return term({}); }
    static PbwElement generator(Letter l) {
        switch (l) {
            case Letter::F: return term({.a = 1});
            case Letter::Y: return term({.b = 1});
            case Letter::L: return term({.c = -1});
            case Letter::K: return term({.c = 1});
            case Letter::X: return term({.d = 1});
            case Letter::E: return term({.e = 1});
        }
        throw DomainError("unreachable generator");
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Scalar coeff(const PbwMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(const PbwMonomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PbwElement operator-() const {
        PbwElement r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    PbwElement operator+(const PbwElement& o) const {
        PbwElement r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    PbwElement operator-(const PbwElement& o) const {
        PbwElement r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    PbwElement operator*(const Scalar& s) const {
        PbwElement r;
        if (s.is_zero()) return r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }
    friend PbwElement operator*(const Scalar& s, const PbwElement& x) { return x * s; }
    PbwElement& operator+=(const PbwElement& o) { return *this = *this + o; }
    PbwElement& operator-=(const PbwElement& o) { return *this = *this - o; }

    bool operator==(const PbwElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const PbwElement& o) const { return !(*this == o); }

    FreeElement to_free() const {
        FreeElement x;
        for (auto& [m, c] : terms_) x.add_term(m.to_word(), c);
        return x;
    }
    // Requires every word of x to be an ordered monomial.
    static PbwElement from_free(const FreeElement& x) {
        PbwElement r;
        for (auto& [w, c] : x.terms()) {
            auto m = PbwMonomial::from_word(w);
            if (!m)
                throw DomainError("word is not an ordered monomial: " + word_to_string(w));
            r.add_term(*m, c);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [m, c] : terms_) {
            std::string cs = c.to_string();
            bool negated = false;
            if (cs.front() == '-' && c.num().term_count() == 1) {
                negated = true;
                cs.erase(0, 1);
            }
            if (!out.empty()) out += negated ? " - " : " + ";
            else if (negated) out += "-";
            bool parens = cs.find_first_of("+-") != std::string::npos ||
                          cs.find('/') != std::string::npos;
            if (parens) cs = "(" + cs + ")";
            std::string ms = m.to_string();
            if (ms == "1") out += cs;
            else if (cs == "1") out += ms;
            else out += cs + "*" + ms;
        }
        return out;
    }

private:
    TermMap terms_;
};

// C = FE + (qK + q^{-1}K^{-1})/(q - q^{-1})^2.
inline PbwElement casimir_element() {
    Scalar D2 = (Scalar::q() - Scalar::q_power(-1)).pow(2);
    PbwElement C = PbwElement::term({.a = 1, .e = 1});
    C.add_term({.c = 1}, Scalar::q() / D2);
    C.add_term({.c = -1}, Scalar::q_power(-1) / D2);
    return C;
}

// The reduction system for the algebra with C0 = p(C), built on demand and
// memoized per polynomial.  Expanding p(C) itself requires rewriting, but the
// words involved contain no X or Y, so the X Y rule (the only rule that
// mentions C0) never fires during the expansion and a placeholder system with
// C0 = 0 computes the correct normal form.
inline const ReductionSystem& reduction_system(const CenterPolynomial& p) {
    static std::map<CenterPolynomial, ReductionSystem> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;

    ReductionSystem bootstrap = ReductionSystem::standard(FreeElement{});
    FreeElement c_free = casimir_element().to_free();
    FreeElement c0;
    FreeElement power = FreeElement::one();
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        c0 += p.coeffs()[i] * power;
        power = bootstrap.normal_form(power * c_free);
    }
    c0 = bootstrap.normal_form(c0);
    return cache.emplace(p, ReductionSystem::standard(c0)).first->second;
}

inline PbwElement c0_element(const CenterPolynomial& p) {
    return PbwElement::from_free(reduction_system(p).c0_expansion());
}

inline PbwElement multiply(const PbwElement& x, const PbwElement& y,
                           const CenterPolynomial& p) {
    return PbwElement::from_free(reduction_system(p).normal_form(x.to_free() * y.to_free()));
}

inline PbwElement commutator(const PbwElement& x, const PbwElement& y,
                             const CenterPolynomial& p) {
    return multiply(x, y, p) - multiply(y, x, p);
}

// Projection onto the purely Cartan part: keeps the monomials K^c and reads
// them as a Laurent polynomial in K.  Evaluating that polynomial at a weight
// r gives the scalar by which the projected element acts on a highest-weight
// vector of weight r.
inline LaurentPoly xi_projection(const PbwElement& x) {
    LaurentPoly xi('K');
    for (auto& [m, coef] : x.terms())
        if (m.a == 0 && m.b == 0 && m.d == 0 && m.e == 0) xi.add_term(m.c, coef);
    return xi;
}

// The anti-involution determined by
//   i(E) = -FK,  i(F) = -K^{-1}E,  i(K) = K,  i(X) = Y,  i(Y) = X,
// extended by i(uv) = i(v) i(u) and renormalized to the ordered basis.
inline PbwElement anti_involution(const PbwElement& x, const CenterPolynomial& p) {
    using enum Letter;
    const FreeElement iE = -FreeElement::term({F, K});
    const FreeElement iF = -FreeElement::term({L, E});
    auto image = [&](Letter l) -> FreeElement {
        switch (l) {
            case E: return iE;
            case F: return iF;
            case K: return FreeElement::term({K});
            case L: return FreeElement::term({L});
            case X: return FreeElement::term({Y});
            case Y: return FreeElement::term({X});
        }
        throw DomainError("unreachable generator");
    };
    FreeElement total;
    for (auto& [m, coef] : x.terms()) {
        Word w = m.to_word();
        FreeElement prod = FreeElement::one();
        // Anti-homomorphism: images multiply in reverse order.
        for (auto it = w.rbegin(); it != w.rend(); ++it) prod = prod * image(*it);
        total += coef * prod;
    }
    return PbwElement::from_free(reduction_system(p).normal_form(total));
}

inline std::string CenterPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Scalar& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool negated = false;
        if (cs.front() == '-' && c.num().term_count() == 1) {
            negated = true;
            cs.erase(0, 1);
        }
        if (!out.empty()) out += negated ? " - " : " + ";
        else if (negated) out += "-";
        bool parens = cs.find_first_of("+-") != std::string::npos ||
                      cs.find('/') != std::string::npos;
        if (parens) cs = "(" + cs + ")";
        std::string v;
        if (i == 1) v = var;
        else if (i > 1) v = var + "^" + std::to_string(i);
        if (v.empty()) out += cs;
        else if (cs == "1") out += v;
        else out += cs + "*" + v;
    }
    return out;
}

} // namespace qosc
