// verma.hpp
// ---------
// The Verma module Z(r) = A / (A N_+ + A(K - r)) with its free basis
// { F^i Y^j v_r }, generator actions computed through the PBW engine, the
// weight constants c_r, c_{0,r}, alpha_{r,m}, d_{r,m}, the inductively
// defined structure vectors v_{t_n} (t_n = q^{-n} r), and exact solvers for
// maximal vectors.
//
// Design note: the action of a generator is multiply-then-project (monomials
// ending in X or E annihilate v_r; K^c contributes r^c).  The closed-form
// commutation formulas for X and E against F^n Y^m exist in the test suite
// as independent oracles, deliberately not here.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <qosc/errors.hpp>
#include <qosc/laurent.hpp>
#include <qosc/linalg.hpp>
#include <qosc/pbw.hpp>
#include <qosc/rational.hpp>
#include <qosc/rewrite.hpp>

namespace qosc {

class Weight {
public:
    Weight(Scalar v) : value_(std::move(v)) {
        if (value_.is_zero()) throw ZeroArgument("a weight must be nonzero");
        signed_power_ = classify_signed_power(value_);
    }
    Weight(const ZPoly& v) : Weight(Scalar(v)) {}

    const Scalar& value() const { return value_; }
    // (eps, n) when the weight is exactly eps * q^n.
    const std::optional<std::pair<int, long>>& signed_power() const { return signed_power_; }

    bool operator==(const Weight& o) const { return value_ == o.value_; }
    bool operator!=(const Weight& o) const { return !(*this == o); }

    std::string to_string() const { return value_.to_string(); }

private:
    Scalar value_;
    std::optional<std::pair<int, long>> signed_power_;
};

// An element  sum c_{ij} F^i Y^j v_r  of Z(r).
class VermaElement {
public:
    using Index = std::pair<long, long>; // (i, j) with i = F-power, j = Y-power
    using TermMap = std::map<Index, Scalar>;

    explicit VermaElement(Weight r) : r_(std::move(r)) {}
    static VermaElement highest_weight_vector(const Weight& r) {
        VermaElement v(r);
        v.add_term(0, 0, Scalar(1));
        return v;
    }

    const Weight& ambient() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Scalar coeff(long i, long j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(long i, long j, const Scalar& c) {
        if (c.is_zero()) return;
        if (i < 0 || j < 0) throw DomainError("negative F/Y power in a Verma element");
        auto [it, fresh] = terms_.emplace(Index{i, j}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    VermaElement operator-() const {
        VermaElement v(r_);
        for (auto& [ij, c] : terms_) v.terms_.emplace(ij, -c);
        return v;
    }
    VermaElement operator+(const VermaElement& o) const {
        check_ambient(o);
        VermaElement v = *this;
        for (auto& [ij, c] : o.terms_) v.add_term(ij.first, ij.second, c);
        return v;
    }
    VermaElement operator-(const VermaElement& o) const { return *this + (-o); }
    VermaElement operator*(const Scalar& s) const {
        VermaElement v(r_);
        if (s.is_zero()) return v;
        for (auto& [ij, c] : terms_) v.terms_.emplace(ij, c * s);
        return v;
    }
    friend VermaElement operator*(const Scalar& s, const VermaElement& v) { return v * s; }
    VermaElement& operator+=(const VermaElement& o) { return *this = *this + o; }
    VermaElement& operator-=(const VermaElement& o) { return *this = *this - o; }

    bool operator==(const VermaElement& o) const {
        return r_ == o.r_ && terms_ == o.terms_;
    }
    bool operator!=(const VermaElement& o) const { return !(*this == o); }

    // Multiply by F (index shift; F commutes with Y inside B_-).
    VermaElement shift_F() const {
        VermaElement v(r_);
        for (auto& [ij, c] : terms_) v.terms_.emplace(Index{ij.first + 1, ij.second}, c);
        return v;
    }
    // Multiply by Y.
    VermaElement shift_Y() const {
        VermaElement v(r_);
        for (auto& [ij, c] : terms_) v.terms_.emplace(Index{ij.first, ij.second + 1}, c);
        return v;
    }

    // Weight-space index: every term of a homogeneous element has 2i + j
    // equal; -1 for 0.  Throws if the element is not homogeneous.
    long weight_index() const {
        long n = -1;
        for (auto& [ij, c] : terms_) {
            (void)c;
            long m = 2 * ij.first + ij.second;
            if (n == -1) n = m;
            else if (n != m)
                throw DomainError("weight_index of a non-homogeneous element");
        }
        return n;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        // Leading Y-power first, matching the monic + lower-order convention.
        std::vector<std::pair<Index, Scalar>> ordered(terms_.begin(), terms_.end());
        std::sort(ordered.begin(), ordered.end(), [](auto& a, auto& b) {
            if (a.first.second != b.first.second) return a.first.second > b.first.second;
            return a.first.first < b.first.first;
        });
        std::string out;
        for (auto& [ij, c] : ordered) {
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
            std::string mono;
            auto emit = [&](const char* g, long n) {
                if (n == 0) return;
                if (!mono.empty()) mono += " ";
                mono += g;
                if (n != 1) mono += "^" + std::to_string(n);
            };
            emit("F", ij.first);
            emit("Y", ij.second);
            mono = mono.empty() ? "v" : mono + " v";
            if (cs == "1") out += mono;
            else out += cs + "*" + mono;
        }
        return out;
    }

private:
    void check_ambient(const VermaElement& o) const {
        if (r_ != o.r_)
            throw DimensionMismatch("Verma elements over different weights: " +
                                    r_.to_string() + " vs " + o.r_.to_string());
    }

    Weight r_;
    TermMap terms_;
};

// Action of a single generator, through the rewrite engine: form the product
// g * F^i Y^j in PBW form, then apply each ordered monomial to v_r (X and E
// kill it, K^c scales by r^c, F and Y shift indices).
inline VermaElement act(Letter g, const VermaElement& v, const CenterPolynomial& p) {
    const Scalar& r = v.ambient().value();
    VermaElement out(v.ambient());
    for (auto& [ij, c] : v.terms()) {
        PbwElement prod = multiply(PbwElement::generator(g),
                                   PbwElement::term({.a = ij.first, .b = ij.second}), p);
        for (auto& [m, mc] : prod.terms()) {
            if (m.d > 0 || m.e > 0) continue; // N_+ annihilates v_r
            out.add_term(m.a, m.b, c * mc * r.pow(m.c));
        }
    }
    return out;
}

// Action of a whole PBW element, monomial by monomial, rightmost factor
// first.
inline VermaElement act(const PbwElement& z, const VermaElement& v,
                        const CenterPolynomial& p) {
    VermaElement out(v.ambient());
    for (auto& [m, c] : z.terms()) {
        VermaElement w = v * c;
        for (long k = 0; k < m.e; ++k) w = act(Letter::E, w, p);
        for (long k = 0; k < m.d; ++k) w = act(Letter::X, w, p);
        for (long k = 0; k < m.c; ++k) w = act(Letter::K, w, p);
        for (long k = 0; k < -m.c; ++k) w = act(Letter::L, w, p);
        for (long k = 0; k < m.b; ++k) w = w.shift_Y();
        for (long k = 0; k < m.a; ++k) w = w.shift_F();
        out += w;
    }
    return out;
}

// --- weight constants -------------------------------------------------------

// c_r = (q r + q^{-1} r^{-1}) / (q - q^{-1})^2: the Casimir eigenvalue on the
// quantum-sl2 Verma module of highest weight r.
inline Scalar c_scalar(const Weight& r) {
    static const Scalar D2 = (Scalar::q() - Scalar::q_power(-1)).pow(2);
    return (Scalar::q() * r.value() + Scalar::q_power(-1) * r.value().inverse()) / D2;
}

inline Scalar c0_scalar(const CenterPolynomial& p, const Weight& r) {
    return p.evaluate(c_scalar(r));
}

// alpha_{r,m} = sum_{j=0}^{m-2} <q^{1-j} r> c_{0, q^{-j} r}; empty (0) for
// m <= 1.  This is the definitional sum; the root finders use the equivalent
// closed form (see alpha_series below) and the two routes are tested against
// each other.
inline Scalar alpha(const CenterPolynomial& p, const Weight& r, long m) {
    Scalar sum(0);
    for (long j = 0; j <= m - 2; ++j) {
        Scalar qj = Scalar::q_power(-j) * r.value();
        sum += bracket(Scalar::q() * qj) * c0_scalar(p, qj);
    }
    return sum;
}

// h(T) with c_{0,r} = h(q r): substitute (T + T^{-1})/(q - q^{-1})^2 into p.
inline LaurentPoly h_poly(const CenterPolynomial& p) {
    LaurentPoly t = LaurentPoly::variable('T');
    LaurentPoly arg = (t + t.invert_variable()) *
                      (Scalar::q() - Scalar::q_power(-1)).pow(2).inverse();
    return poly_eval(p.coeffs(), arg);
}

// g(T) = h(T) <T>, the summand of alpha: alpha_{r,m} = sum_{j=0}^{m-2} g(q^{1-j} r).
inline LaurentPoly g_poly(const CenterPolynomial& p) {
    LaurentPoly t = LaurentPoly::variable('T');
    LaurentPoly brack = (t - t.invert_variable()) *
                        (Scalar::q() - Scalar::q_power(-1)).inverse();
    return h_poly(p) * brack;
}

// The closed form: a Laurent polynomial P with P(q^{-(m-1)}) = alpha_{r,m}
// for every m >= 1.  Exists because g has zero constant term (g is
// antisymmetric under T -> T^{-1}).
inline LaurentPoly alpha_series(const CenterPolynomial& p, const Weight& r) {
    return geometric_partial_sum(g_poly(p), Scalar::q() * r.value());
}

// d_{r,m} = alpha_{r,m} / (<q^{2-m} r> <q^{3-m} r>).  Exact refusal when a
// denominator bracket vanishes, naming the culprit.
inline Scalar d_const(const CenterPolynomial& p, const Weight& r, long m) {
    auto check = [&](long k) -> Scalar {
        Scalar arg = Scalar::q_power(k) * r.value();
        Scalar b = bracket(arg);
        if (b.is_zero())
            throw DenominatorVanishes("d_{r,m} with r = " + r.to_string() + ", m = " +
                                      std::to_string(m) + ": the bracket <q^" +
                                      std::to_string(k) + " r> = <" + arg.to_string() +
                                      "> vanishes");
        return b;
    };
    Scalar b2 = check(2 - m);
    Scalar b3 = check(3 - m);
    return alpha(p, r, m) / (b2 * b3);
}

// v_{t_n} via the recursion  v_{t_n} = Y v_{t_{n-1}} + d_{r,n} F v_{t_{n-2}},
// starting from v_{t_0} = v_r and v_{t_1} = Y v_r.
inline VermaElement structure_vector(const CenterPolynomial& p, const Weight& r, long n) {
    if (n < 0) throw DomainError("structure_vector index must be nonnegative");
    VermaElement prev2 = VermaElement::highest_weight_vector(r); // v_{t_0}
    if (n == 0) return prev2;
    VermaElement prev1 = prev2.shift_Y(); // v_{t_1}
    for (long k = 2; k <= n; ++k) {
        VermaElement next = prev1.shift_Y() + d_const(p, r, k) * prev2.shift_F();
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

// --- weight-space solvers ---------------------------------------------------

// Basis of the weight space Z(r)_{q^{-n} r}: monomials F^i Y^j with
// 2i + j = n, ordered by decreasing Y-power (so the first entry is Y^n).
inline std::vector<VermaElement::Index> weight_space_basis(long n) {
    std::vector<VermaElement::Index> basis;
    for (long i = 0; 2 * i <= n; ++i) basis.push_back({i, n - 2 * i});
    return basis;
}

namespace detail {

// Solve for the joint kernel of the listed generators on weight space n;
// vectors come back normalized monic in their highest Y-power.
inline std::vector<VermaElement> weight_kernel(const std::vector<Letter>& gens,
                                               const CenterPolynomial& p, const Weight& r,
                                               long n) {
    auto basis = weight_space_basis(n);
    std::vector<VermaElement> images;
    images.reserve(basis.size() * gens.size());

    // Column k = image of basis[k]; rows = coordinates of all images in the
    // target weight spaces, one block per generator.
    std::vector<std::map<VermaElement::Index, std::size_t>> row_index(gens.size());
    std::vector<std::vector<VermaElement>> acted(gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (auto& ij : basis) {
            VermaElement b(r);
            b.add_term(ij.first, ij.second, Scalar(1));
            VermaElement img = act(gens[gi], b, p);
            for (auto& [mono, c] : img.terms()) {
                (void)c;
                row_index[gi].emplace(mono, row_index[gi].size());
            }
            acted[gi].push_back(std::move(img));
        }

    std::size_t total_rows = 0;
    for (auto& ri : row_index) total_rows += ri.size();
    Matrix M(total_rows == 0 ? 1 : total_rows, basis.size()); // all-zero rows are fine
    std::size_t row_base = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (auto& [mono, c] : acted[gi][k].terms())
                M.at(row_base + row_index[gi].at(mono), k) = c;
        row_base += row_index[gi].size();
    }

    std::vector<VermaElement> result;
    for (auto& x : kernel_basis(M)) {
        VermaElement v(r);
        for (std::size_t k = 0; k < basis.size(); ++k)
            v.add_term(basis[k].first, basis[k].second, x[k]);
        // Monic in the highest Y-power present: basis is sorted by
        // decreasing j, so the first nonzero coordinate is the leader.
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!x[k].is_zero()) {
                v = v * x[k].inverse();
                break;
            }
        result.push_back(std::move(v));
    }
    return result;
}

} // namespace detail

// All maximal vectors (killed by both E and X) in the weight space of index
// n, up to scalars.  By uniqueness of maximal weights this has at most one
// element; more indicates an internal inconsistency.
inline std::vector<VermaElement> maximal_vectors(const CenterPolynomial& p, const Weight& r,
                                                 long n) {
    auto res = detail::weight_kernel({Letter::E, Letter::X}, p, r, n);
    if (res.size() > 1)
        throw ConstructionInconsistent("maximal vector space at weight index " +
                                       std::to_string(n) + " has dimension " +
                                       std::to_string(res.size()));
    return res;
}

// Kernel of E alone on the weight space (quantum-sl2 maximal vectors).
inline std::vector<VermaElement> sl2_maximal_vectors(const CenterPolynomial& p,
                                                     const Weight& r, long n) {
    return detail::weight_kernel({Letter::E}, p, r, n);
}

} // namespace qosc
