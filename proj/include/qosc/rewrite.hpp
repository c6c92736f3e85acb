// rewrite.hpp
// -----------
// The free algebra on the six generators E, F, K, L (= K^{-1}), X, Y over
// Q(q), and the reduction system that rewrites every element onto the ordered
// monomials F^a Y^b K^c X^d E^e.  Confluence of the system is not assumed:
// verify_confluence() mechanically enumerates all length-3 overlap
// ambiguities of the rule set and checks each one resolves.
//
// Words are compared by a semigroup total order: first by the number of X,Y
// letters, then by length, then lexicographically with F < Y < L < K < X < E.
// Every rule's right-hand side is strictly smaller than its left-hand side,
// which is what makes the rewriting terminate.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <qosc/errors.hpp>
#include <qosc/rational.hpp>

namespace qosc {

enum class Letter : std::uint8_t { F = 0, Y = 1, L = 2, K = 3, X = 4, E = 5 };

inline char letter_char(Letter l) { return "FYLKXE"[static_cast<int>(l)]; }

inline std::optional<Letter> letter_from_char(char c) {
    switch (c) {
        case 'F': return Letter::F;
        case 'Y': return Letter::Y;
        case 'L': return Letter::L;
        case 'K': return Letter::K;
        case 'X': return Letter::X;
        case 'E': return Letter::E;
        default: return std::nullopt;
    }
}

using Word = std::vector<Letter>;

inline Word word_from_string(const std::string& s) {
    Word w;
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto l = letter_from_char(s[i]);
        if (!l) throw ParseError(std::string("unknown generator '") + s[i] + "'", i);
        w.push_back(*l);
    }
    return w;
}

inline std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (Letter l : w) s += letter_char(l);
    return s;
}

// Number of X and Y letters: the first key of the word order.
inline int xy_count(const Word& w) {
    int n = 0;
    for (Letter l : w)
        if (l == Letter::X || l == Letter::Y) ++n;
    return n;
}

inline std::strong_ordering order_compare(const Word& w1, const Word& w2) {
    if (auto c = xy_count(w1) <=> xy_count(w2); c != 0) return c;
    if (auto c = w1.size() <=> w2.size(); c != 0) return c;
    for (std::size_t i = 0; i < w1.size(); ++i)
        if (auto c = static_cast<int>(w1[i]) <=> static_cast<int>(w2[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        return order_compare(a, b) < 0;
    }
};

// A finite Q(q)-linear combination of words.
class FreeElement {
public:
    using TermMap = std::map<Word, Scalar, WordOrder>;

    FreeElement() = default;
    static FreeElement term(Word w, Scalar c = Scalar(1)) {
        FreeElement x;
        x.add_term(std::move(w), c);
        return x;
    }
    static FreeElement one() { return term(Word{}); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(Word w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(w), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FreeElement operator-() const {
        FreeElement r;
        for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    FreeElement operator+(const FreeElement& o) const {
        FreeElement r = *this;
        for (auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    FreeElement operator-(const FreeElement& o) const {
        FreeElement r = *this;
        for (auto& [w, c] : o.terms_) r.add_term(w, -c);
        return r;
    }
    // Concatenation product of the free algebra.
    FreeElement operator*(const FreeElement& o) const {
        FreeElement r;
        for (auto& [w1, c1] : terms_)
            for (auto& [w2, c2] : o.terms_) {
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                r.add_term(std::move(w), c1 * c2);
            }
        return r;
    }
    FreeElement operator*(const Scalar& s) const {
        FreeElement r;
        if (s.is_zero()) return r;
        for (auto& [w, c] : terms_) r.terms_.emplace(w, c * s);
        return r;
    }
    friend FreeElement operator*(const Scalar& s, const FreeElement& x) { return x * s; }

    FreeElement& operator+=(const FreeElement& o) { return *this = *this + o; }
    FreeElement& operator-=(const FreeElement& o) { return *this = *this - o; }

    bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const FreeElement& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [w, c] : terms_) {
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
            if (w.empty()) out += cs;
            else if (cs == "1") out += word_to_string(w);
            else out += cs + "*" + word_to_string(w);
        }
        return out;
    }

private:
    TermMap terms_;
};

enum class Strategy { leftmost, rightmost };

// An ordered rewriting system with two-letter left-hand sides.
class ReductionSystem {
public:
    ReductionSystem() = default;

    // The sixteen rules presenting the algebra, with the X Y -> q Y X - C0
    // rule taking the given pre-expanded C0 (which must itself be in normal
    // form: a combination of ordered monomials without X or Y letters).
    static ReductionSystem standard(const FreeElement& c0_expansion) {
        using enum Letter;
        const Scalar q = Scalar::q();
        const Scalar qi = Scalar::q_power(-1);
        const Scalar D = q - qi;
        auto mono = [](std::initializer_list<Letter> ls, Scalar c = Scalar(1)) {
            return FreeElement::term(Word(ls), c);
        };

        ReductionSystem sys;
        // sl2 part
        sys.add_rule(E, K, mono({K, E}, qi * qi));
        sys.add_rule(E, L, mono({L, E}, q * q));
        sys.add_rule(K, F, mono({F, K}, qi * qi));
        sys.add_rule(L, F, mono({F, L}, q * q));
        sys.add_rule(L, K, FreeElement::one());
        sys.add_rule(K, L, FreeElement::one());
        sys.add_rule(E, F, mono({F, E}) + mono({K}, D.inverse()) - mono({L}, D.inverse()));
        // mixed part
        sys.add_rule(E, X, mono({X, E}, q));
        sys.add_rule(E, Y, mono({X}) + mono({Y, E}, qi));
        sys.add_rule(X, F, mono({F, X}) - mono({Y, L}));
        sys.add_rule(Y, F, mono({F, Y}));
        // Weyl-algebra part
        sys.add_rule(X, K, mono({K, X}, qi));
        sys.add_rule(X, L, mono({L, X}, q));
        sys.add_rule(K, Y, mono({Y, K}, qi));
        sys.add_rule(L, Y, mono({Y, L}, q));
        sys.add_rule(X, Y, mono({Y, X}, q) - c0_expansion);
        sys.c0_ = c0_expansion;
        return sys;
    }

    // Install or replace one rule.  Every word on the right must be strictly
    // smaller than the left-hand side, which keeps any system built through
    // this interface terminating.
    void add_rule(Letter a, Letter b, FreeElement rhs) {
        Word lhs{a, b};
        for (auto& [w, c] : rhs.terms()) {
            (void)c;
            if (order_compare(w, lhs) >= 0)
                throw DomainError("rewrite rule does not decrease the word order: " +
                                  word_to_string(lhs) + " -> " + word_to_string(w));
        }
        rules_[key(a, b)] = std::move(rhs);
    }

    const FreeElement* rule(Letter a, Letter b) const {
        auto it = rules_.find(key(a, b));
        return it == rules_.end() ? nullptr : &it->second;
    }

    const FreeElement& c0_expansion() const { return c0_; }

    void set_step_budget(std::size_t steps) { budget_ = steps; }
    std::size_t step_budget() const { return budget_; }

    // Fully reduce, processing the currently largest word first so rewrite
    // products merge with smaller pending terms instead of fanning out.
    FreeElement normal_form(const FreeElement& elem, Strategy strat = Strategy::leftmost) const {
        FreeElement::TermMap pending = elem.terms();
        FreeElement out;
        std::size_t steps = 0;
        while (!pending.empty()) {
            auto top = std::prev(pending.end());
            Word w = top->first;
            Scalar c = top->second;
            pending.erase(top);
            if (c.is_zero()) continue;

            auto pos = find_redex(w, strat);
            if (!pos) {
                out.add_term(std::move(w), c);
                continue;
            }
            if (++steps > budget_)
                throw StepLimitExceeded("rewrite budget of " + std::to_string(budget_) +
                                        " steps exhausted reducing " + word_to_string(w));
            const FreeElement& rhs = rules_.at(key(w[*pos], w[*pos + 1]));
            for (auto& [rw, rc] : rhs.terms()) {
                Word nw;
                nw.reserve(w.size() - 2 + rw.size());
                nw.insert(nw.end(), w.begin(), w.begin() + *pos);
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), w.begin() + *pos + 2, w.end());
                Scalar nc = c * rc;
                if (nc.is_zero()) continue;
                auto [it, fresh] = pending.emplace(std::move(nw), nc);
                if (!fresh) {
                    it->second += nc;
                    if (it->second.is_zero()) pending.erase(it);
                }
            }
        }
        return out;
    }

    bool is_irreducible(const Word& w) const {
        return !find_redex(w, Strategy::leftmost).has_value();
    }

    struct Ambiguity {
        Word word;                // ABC with rules on AB and BC
        bool resolved = false;
        FreeElement reduce_left;  // rewrite AB first, then normalize
        FreeElement reduce_right; // rewrite BC first, then normalize
    };

    // Enumerate every overlap of the rule set's left-hand sides (words ABC
    // where both AB and BC carry rules) and check both reductions agree.
    std::vector<Ambiguity> verify_confluence() const {
        std::vector<Ambiguity> report;
        for (auto& [k1, rhs1] : rules_)
            for (auto& [k2, rhs2] : rules_) {
                auto [a, b1] = unkey(k1);
                auto [b2, c] = unkey(k2);
                if (b1 != b2) continue;
                Ambiguity amb;
                amb.word = Word{a, b1, c};
                FreeElement tail = FreeElement::term(Word{c});
                FreeElement head = FreeElement::term(Word{a});
                amb.reduce_left = normal_form(rhs1 * tail);
                amb.reduce_right = normal_form(head * rhs2);
                amb.resolved = (amb.reduce_left == amb.reduce_right);
                report.push_back(std::move(amb));
            }
        return report;
    }

private:
    static std::uint8_t key(Letter a, Letter b) {
        return static_cast<std::uint8_t>(static_cast<int>(a) * 6 + static_cast<int>(b));
    }
    static std::pair<Letter, Letter> unkey(std::uint8_t k) {
        return {static_cast<Letter>(k / 6), static_cast<Letter>(k % 6)};
    }

    std::optional<std::size_t> find_redex(const Word& w, Strategy strat) const {
        if (w.size() < 2) return std::nullopt;
        if (strat == Strategy::leftmost) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (rules_.count(key(w[i], w[i + 1]))) return i;
        } else {
            for (std::size_t i = w.size() - 1; i-- > 0;)
                if (rules_.count(key(w[i], w[i + 1]))) return i;
        }
        return std::nullopt;
    }

    std::map<std::uint8_t, FreeElement> rules_;
    FreeElement c0_;
    std::size_t budget_ = 10'000'000;
};

inline FreeElement normal_form(const FreeElement& elem, const ReductionSystem& sys,
                               Strategy strat = Strategy::leftmost) {
    return sys.normal_form(elem, strat);
}

} // namespace qosc
