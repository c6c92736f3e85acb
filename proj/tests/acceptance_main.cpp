// Acceptance gate: eleven end-to-end checks of the exact engine, each
// printing a single PASS/FAIL line with a short factual detail and its
// runtime.  Checks with a stated time budget fail when they exceed it.
//
// Usage:  qosc-acceptance [N ...]   (numbers 1..11; no arguments = all)
// Exit code 0 iff every selected check passes.
//
// These checks are deliberately independent of the Catch2 unit suites: they
// re-verify the headline results end to end, and where a required value
// disagrees with what the engine computes, the check states both and fails
// honestly rather than adjusting either side.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <qosc/blocks.hpp>
#include <qosc/center.hpp>
#include <qosc/repn.hpp>

#include "oracles.hpp"

using namespace qosc;

namespace {

const Scalar Q = Scalar::q();

// p_ex(t) = (q - q^{-1})^3 t - (q - q^{-1})(q^{-2} + q^2), the running
// example deformation.
CenterPolynomial p_example() {
    Scalar D = Q - Q.inverse();
    return CenterPolynomial{-D * (Q.pow(2) + Q.pow(-2)), D.pow(3)};
}

std::vector<CenterPolynomial> standard_deformations() {
    return {CenterPolynomial{}, CenterPolynomial::identity(), p_example()};
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Deterministic scalar sampler.  Every value is a one- or two-term Laurent
// polynomial in q with positive leading integer >= 2, hence nonzero,
// invertible, and never equal to +-q^m (so no bracket in its q-shifted
// orbit vanishes).
struct ScalarSampler {
    std::mt19937 rng;
    explicit ScalarSampler(unsigned seed) : rng(seed) {}

    long pick(long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    }

    Scalar nonzero() {
        long n = pick(2, 9);
        long k = pick(-6, 6);
        Scalar s = Scalar(n) * Scalar::q_power(k);
        if (pick(0, 1)) s = -s;
        if (pick(0, 2) == 0) s += Scalar(pick(1, 5)) * Scalar::q_power(k + pick(1, 3));
        return s;
    }

    CenterPolynomial poly() {
        std::vector<Scalar> coeffs;
        long deg = pick(0, 3);
        for (long i = 0; i <= deg; ++i) coeffs.emplace_back(mpz_class(pick(-4, 4)));
        return CenterPolynomial(coeffs);
    }
};

// ---------------------------------------------------------------------------
// 1. Reduction-system confluence.  The sixteen overlap words below must all
//    be detected and resolve under every deformation, and the mechanical
//    detector is required to find exactly those sixteen.
// ---------------------------------------------------------------------------
Outcome criterion_1() {
    const std::set<std::string> expected = {"LYF", "KYF", "XYF", "EYF", "EXF", "XLF",
                                            "XKF", "KLY", "XLY", "ELY", "XKY", "EKY",
                                            "EXY", "XKL", "EXL", "EXK"};
    bool listed_ok = true;   // every expected word detected and resolved, each p
    bool all_resolved = true;
    std::set<std::string> found;
    for (const CenterPolynomial& p : standard_deformations()) {
        std::set<std::string> here;
        std::set<std::string> resolved_here;
        for (const auto& amb : reduction_system(p).verify_confluence()) {
            std::string w = word_to_string(amb.word);
            here.insert(w);
            if (amb.resolved)
                resolved_here.insert(w);
            else
                all_resolved = false;
        }
        for (const std::string& w : expected)
            if (!resolved_here.count(w)) listed_ok = false;
        found = here;
    }
    bool exact = (found == expected);

    Outcome out;
    out.ok = listed_ok && exact;
    std::ostringstream d;
    if (listed_ok)
        d << "all 16 expected overlap words resolve under each of the three deformations";
    else
        d << "some expected overlap word is missing or unresolved";
    if (!exact) {
        d << "; the detector found " << found.size() << " overlap words where exactly 16 were"
          << " required (every one of them "
          << (all_resolved ? "resolves" : "does NOT resolve") << "); extras:";
        for (const std::string& w : found)
            if (!expected.count(w)) d << " " << w;
    }
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------------
// 2. Freeness of the ordered basis at bounded degree: every monomial with
//    a+b+|c|+d+e <= 4 is a fixed point of normal_form, and random nontrivial
//    linear combinations keep their exact coefficients (so none maps to 0).
// ---------------------------------------------------------------------------
Outcome criterion_2() {
    std::vector<PbwMonomial> all;
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; a + b <= 4; ++b)
            for (long c = -(4 - a - b); c <= 4 - a - b; ++c)
                for (long d = 0; a + b + std::labs(c) + d <= 4; ++d)
                    for (long e = 0; a + b + std::labs(c) + d + e <= 4; ++e)
                        all.push_back({a, b, c, d, e});

    Outcome out;
    if (all.size() != 182) {
        out.ok = false;
        out.detail = "expected 182 bounded monomials, enumerated " + std::to_string(all.size());
        return out;
    }

    for (const CenterPolynomial& p : standard_deformations()) {
        ReductionSystem rs = reduction_system(p);
        for (const PbwMonomial& m : all) {
            FreeElement w = FreeElement::term(m.to_word());
            if (PbwElement::from_free(rs.normal_form(w)) != PbwElement::term(m)) {
                out.ok = false;
                out.detail = "monomial " + m.to_string() + " is not fixed by normal_form";
                return out;
            }
        }
    }

    ScalarSampler s(20260814);
    ReductionSystem rs = reduction_system(p_example());
    for (int round = 0; round < 25; ++round) {
        std::set<std::size_t> idx;
        while (idx.size() < 5) idx.insert(static_cast<std::size_t>(s.pick(0, 181)));
        FreeElement total;
        PbwElement direct;
        for (std::size_t i : idx) {
            Scalar c = s.nonzero();
            total.add_term(all[i].to_word(), c);
            direct += PbwElement::term(all[i], c);
        }
        PbwElement back = PbwElement::from_free(rs.normal_form(total));
        if (back != direct || back.is_zero()) {
            out.ok = false;
            out.detail = "a nontrivial 5-term combination changed under normal_form";
            return out;
        }
    }
    out.detail = "182 monomials fixed under all three deformations; 25 random 5-term "
                 "combinations kept their exact coefficients";
    return out;
}

// ---------------------------------------------------------------------------
// 3. Bracket and alpha identities on randomized instances:
//      a<b> - b<a> = <a^{-1}b>,   <a^{-1}> = -<a>,   q^{-1}<b> + b = <qb>,
//      <q^{1-n}r> d_{r,n+1} = <q^{3-n}r> d_{r,n} + c_{0,q^{1-n}r},
//      alpha_{q^n r, n+m+1} = alpha_{q^n r, n+1} + alpha_{r, m+1}.
// ---------------------------------------------------------------------------
Outcome criterion_3() {
    ScalarSampler s(7);
    Outcome out;
    for (int i = 0; i < 100; ++i) {
        Scalar a = s.nonzero(), b = s.nonzero();
        if (a * bracket(b) - b * bracket(a) != bracket(a.inverse() * b)) {
            out.ok = false;
            out.detail = "cross identity failed at a = " + a.to_string() +
                         ", b = " + b.to_string();
            return out;
        }
        if (bracket(a.inverse()) != -bracket(a)) {
            out.ok = false;
            out.detail = "inversion antisymmetry failed at a = " + a.to_string();
            return out;
        }
        if (Scalar::q_power(-1) * bracket(b) + b != bracket(Q * b)) {
            out.ok = false;
            out.detail = "q-shift identity failed at b = " + b.to_string();
            return out;
        }
    }
    for (int i = 0; i < 100; ++i) {
        CenterPolynomial p = s.poly();
        Weight r{s.nonzero()};
        long n = s.pick(1, 8);
        Scalar lhs = bracket(Q.pow(1 - n) * r.value()) * d_const(p, r, n + 1);
        Scalar rhs = bracket(Q.pow(3 - n) * r.value()) * d_const(p, r, n) +
                     c0_scalar(p, Weight(Q.pow(1 - n) * r.value()));
        if (lhs != rhs) {
            out.ok = false;
            out.detail = "d-constant recurrence failed at r = " + r.value().to_string() +
                         ", n = " + std::to_string(n);
            return out;
        }
    }
    for (int i = 0; i < 100; ++i) {
        CenterPolynomial p = s.poly();
        Scalar rv = s.nonzero();
        long n = s.pick(0, 8), m = s.pick(0, 8);
        Weight shifted{Q.pow(n) * rv};
        if (alpha(p, shifted, n + m + 1) !=
            alpha(p, shifted, n + 1) + alpha(p, Weight(rv), m + 1)) {
            out.ok = false;
            out.detail = "alpha additivity failed at r = " + rv.to_string() + ", n = " +
                         std::to_string(n) + ", m = " + std::to_string(m);
            return out;
        }
    }
    out.detail = "3 bracket identities x 100, d-constant recurrence x 100, "
                 "alpha additivity x 100, all exact";
    return out;
}

// ---------------------------------------------------------------------------
// 4. Engine actions equal the closed-form commutation oracles on the grid
//    0 <= n,m <= 5, for three deformations and three sample weights.
// ---------------------------------------------------------------------------
Outcome criterion_4() {
    Outcome out;
    long checked = 0;
    for (const CenterPolynomial& p : standard_deformations())
        for (const Scalar& rv : {Scalar(2), Q.pow(3), -Q.pow(2)}) {
            Weight r{rv};
            for (long n = 0; n <= 5; ++n)
                for (long m = 0; m <= 5; ++m) {
                    VermaElement mono(r);
                    mono.add_term(n, m, Scalar(1));
                    if (act(Letter::X, mono, p) != oracles::X_on_monomial(p, r, n, m) ||
                        act(Letter::E, mono, p) != oracles::E_on_monomial(p, r, n, m)) {
                        out.ok = false;
                        out.detail = "mismatch at r = " + rv.to_string() + ", F^" +
                                     std::to_string(n) + " Y^" + std::to_string(m);
                        return out;
                    }
                    ++checked;
                }
        }
    out.detail = "X and E actions match the closed forms on " + std::to_string(checked) +
                 " monomials (3 deformations x 3 weights x 36 exponent pairs)";
    return out;
}

// ---------------------------------------------------------------------------
// 5. Structure vectors: the descent identity
//      X v_{n-1} = -(alpha_{r,n} / <q^{3-n} r>) v_{n-2}    (2 <= n <= 8)
//    by direct action, monic shape of every structure vector, and kernel
//    dimension <= 1 on all sampled weight spaces with n <= 10 (the solver
//    itself faults if a kernel ever has dimension two or more).
// ---------------------------------------------------------------------------
Outcome criterion_5() {
    Outcome out;
    for (const CenterPolynomial& p : {CenterPolynomial::identity(), p_example()})
        for (const Scalar& rv : {Scalar(2), Scalar(3) * Q}) {
            Weight r{rv};
            for (long n = 2; n <= 8; ++n) {
                VermaElement lhs = act(Letter::X, structure_vector(p, r, n - 1), p);
                VermaElement rhs = -(alpha(p, r, n) / bracket(Q.pow(3 - n) * rv)) *
                                   structure_vector(p, r, n - 2);
                if (lhs != rhs) {
                    out.ok = false;
                    out.detail = "descent identity failed at r = " + rv.to_string() +
                                 ", n = " + std::to_string(n);
                    return out;
                }
            }
            for (long n = 0; n <= 10; ++n) {
                VermaElement vn = structure_vector(p, r, n);
                if (vn.coeff(0, n) != Scalar(1) || vn.weight_index() != n ||
                    !act(Letter::E, vn, p).is_zero()) {
                    out.ok = false;
                    out.detail = "structure vector not monic/maximal at r = " +
                                 rv.to_string() + ", n = " + std::to_string(n);
                    return out;
                }
            }
        }
    long spaces = 0;
    for (const CenterPolynomial& p : standard_deformations())
        for (const Scalar& rv : {Scalar(2), Q.pow(3), -Q.pow(2)}) {
            Weight r{rv};
            for (long n = 0; n <= 10; ++n) {
                if (maximal_vectors(p, r, n).size() > 1) { // > 1 also throws internally
                    out.ok = false;
                    out.detail = "kernel dimension exceeds 1 at r = " + rv.to_string() +
                                 ", n = " + std::to_string(n);
                    return out;
                }
                ++spaces;
            }
        }
    out.detail = "descent identity for n = 2..8 on two deformations x two generic weights; "
                 "monic maximal structure vectors for n <= 10; kernel dimension <= 1 on " +
                 std::to_string(spaces) + " weight spaces";
    return out;
}

// ---------------------------------------------------------------------------
// 6. The running example end to end: its alpha-root set at weight q, the
//    sweep for finite-dimensional simples over +-q^n (n <= 15), the matrix
//    model at weight q, and the bounded semisimplicity scan.
// ---------------------------------------------------------------------------
Outcome criterion_6() {
    CenterPolynomial pex = p_example();
    Outcome out;
    std::ostringstream d;

    std::set<long> roots = alpha_root_set(pex, Weight(Q));
    const std::set<long> required = {1, 4};
    bool roots_ok = (roots == required);
    {
        d << "alpha-root set at weight q computed {";
        bool first = true;
        for (long k : roots) {
            d << (first ? "" : ", ") << k;
            first = false;
        }
        d << "}, required exactly {1, 4}";
    }

    std::vector<std::string> hits;
    std::vector<std::string> anomalies;
    long simple_dim = 0;
    for (int eps : {1, -1})
        for (long n = 0; n <= 15; ++n) {
            Weight r{Scalar(eps) * Q.pow(n)};
            try {
                auto fd = finite_dim_test(pex, r);
                if (fd) {
                    hits.push_back(r.value().to_string());
                    simple_dim = fd->second;
                }
            } catch (const DomainError& e) {
                anomalies.push_back(r.value().to_string() + ": " + e.what());
            }
        }
    bool sweep_ok = anomalies.empty() && hits.size() == 1 && hits[0] == "q" && simple_dim == 2;

    ModuleMatrices M = build_simple(pex, Weight(Q));
    bool rel_ok = (M.dim() == 2) && verify_module_relations(M, pex).all_pass;

    SemisimplicityReport ss = semisimplicity_check(pex, 15);

    out.ok = roots_ok && sweep_ok && rel_ok && ss.pass;
    d << "; finite-dimensional sweep over +-q^n (n <= 15): " << hits.size()
      << " hit(s) [weight q, dim " << simple_dim << "]"
      << (anomalies.empty() ? "" : " with anomalies") << "; matrix model at weight q "
      << (rel_ok ? "passes all relations" : "FAILS relations") << "; semisimplicity scan "
      << (ss.pass ? "passes" : "fails") << " at n_max = 15";
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------------
// 7. The symmetric alpha root: alpha_{eps q^n, 2n+4} = 0 for n <= 10, both
//    signs, three deformations.
// ---------------------------------------------------------------------------
Outcome criterion_7() {
    Outcome out;
    CenterPolynomial t = CenterPolynomial::identity();
    CenterPolynomial t2{Scalar(0), Scalar(0), Scalar(1)};
    long checked = 0;
    for (const CenterPolynomial& p : {t, t2, p_example()})
        for (int eps : {1, -1})
            for (long n = 0; n <= 10; ++n) {
                Weight r{Scalar(eps) * Q.pow(n)};
                if (!alpha(p, r, 2 * n + 4).is_zero()) {
                    out.ok = false;
                    out.detail = "alpha_{r,2n+4} nonzero at eps = " + std::to_string(eps) +
                                 ", n = " + std::to_string(n);
                    return out;
                }
                ++checked;
            }
    out.detail = "alpha_{eps q^n, 2n+4} = 0 exactly in all " + std::to_string(checked) +
                 " cases (3 deformations x 2 signs x n <= 10)";
    return out;
}

// ---------------------------------------------------------------------------
// 8. The undeformed three-dimensional module: relations pass, the submodule
//    lattice is exactly {0, the middle line, everything}, and the middle
//    line has no invariant complement.
// ---------------------------------------------------------------------------
Outcome criterion_8() {
    Outcome out;
    auto [M, lat] = c0_zero_counterexample(); // re-verifies relations internally
    bool rel_ok = verify_module_relations(M, CenterPolynomial{}).all_pass;
    const std::vector<std::vector<std::size_t>> expected_supports = {{}, {1}, {0, 1, 2}};
    bool lattice_ok = (lat.submodule_supports == expected_supports);
    bool complement_ok = !lat.v0_line_has_complement && lat.verdict == "not semisimple";
    out.ok = rel_ok && lattice_ok && complement_ok;
    std::ostringstream d;
    d << "relations " << (rel_ok ? "pass" : "FAIL") << "; invariant subspaces: "
      << lat.submodule_supports.size() << " (trivial, middle eigenline, full)"
      << (lattice_ok ? "" : " UNEXPECTED") << "; complement to the middle line: "
      << (lat.v0_line_has_complement ? "exists (unexpected)" : "none");
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------------
// 9. Maximality obstructions beyond alpha roots.
//    (1) p(t) = t: at weight index n+2 in the module of highest weight
//        eps q^n, the E-kernel is one-dimensional with zero top coefficient
//        (no monic extension), consistent with maximality only at alpha
//        roots, and alpha_{r,n+3} != 0 there, for n <= 5 and both signs.
//    (2) p(t) = 2t: alpha_{eps,4} = 0 yet the weight space of index 3 holds
//        no maximal vector, and the explicit obstruction scalar equals
//        -8 q^2 (q^2+1)^2 (q^4+q^2+1) / (q^2-1)^6, a nonzero multiple of
//        q^6 - 1 (so it can vanish only where q^6 = 1).
// ---------------------------------------------------------------------------
Outcome criterion_9() {
    Outcome out;
    CenterPolynomial pt = CenterPolynomial::identity();
    for (int eps : {1, -1})
        for (long n = 0; n <= 5; ++n) {
            Weight r{Scalar(eps) * Q.pow(n)};
            auto B = sl2_maximal_vectors(pt, r, n + 2);
            bool one_dim = (B.size() == 1);
            bool no_monic = one_dim && B[0].coeff(0, n + 2).is_zero();
            bool alpha_nonzero = !alpha(pt, r, n + 3).is_zero();
            if (!(one_dim && no_monic && alpha_nonzero)) {
                out.ok = false;
                out.detail = "part (1) failed at eps = " + std::to_string(eps) +
                             ", n = " + std::to_string(n);
                return out;
            }
        }

    CenterPolynomial p2t{Scalar(0), Scalar(2)};
    Scalar pinned = Scalar(-8) * Q.pow(2) * (Q.pow(2) + Scalar(1)).pow(2) *
                    (Q.pow(4) + Q.pow(2) + Scalar(1)) / (Q.pow(2) - Scalar(1)).pow(6);
    Scalar multiple = Scalar(-8) * Q.pow(2) * (Q.pow(2) + Scalar(1)).pow(2) /
                      (Q.pow(2) - Scalar(1)).pow(7);
    for (int s : {1, -1}) {
        Scalar eps{mpz_class(s)};
        Weight r{eps};
        bool root = alpha(p2t, r, 4).is_zero();
        bool empty = maximal_vectors(p2t, r, 3).empty();
        Scalar c = c_scalar(r);
        Scalar c0 = c0_scalar(p2t, r);
        Scalar c0q = c0_scalar(p2t, Weight(eps * Q.inverse()));
        Scalar obstruction = c0 * (c - c0) * eps * ((Q + Q.inverse()) * c0 + c0q) +
                             c0 * (c0 - p2t.evaluate(c0));
        bool value_ok = (obstruction == pinned) && !obstruction.is_zero() &&
                        (obstruction == multiple * (Q.pow(6) - Scalar(1)));
        if (!(root && empty && value_ok)) {
            out.ok = false;
            out.detail = "part (2) failed at eps = " + std::to_string(s) +
                         (root ? "" : " [alpha root missing]") +
                         (empty ? "" : " [unexpected maximal vector]") +
                         (value_ok ? "" : " [obstruction value mismatch]");
            return out;
        }
    }
    out.detail = "part (1): one-dimensional E-kernels, no monic extension, alpha nonzero "
                 "(n <= 5, both signs); part (2): alpha root present, no maximal vector, "
                 "obstruction scalar pinned and a nonzero multiple of q^6 - 1";
    return out;
}

// ---------------------------------------------------------------------------
// 10. Bounded centralizer: within exponent bounds (2,2,2,2,2) under the
//     running example deformation the centralizer is required to consist of
//     the scalars alone (dimension exactly 1).
// ---------------------------------------------------------------------------
Outcome criterion_10() {
    Outcome out;
    CentralizerResult res = centralizer_basis({p_example(), 2, 2, 2, 2, 2, 200});
    out.ok = (res.dimension == 1);
    std::ostringstream d;
    d << "computed dimension " << res.dimension << " on a span of " << res.span_size
      << " weight-zero candidates, required exactly 1";
    for (const PbwElement& b : res.basis) {
        if (b.terms().size() <= 1) continue; // the scalar line
        d << "; besides the scalars the basis contains a " << b.terms().size()
          << "-term element (least monomial " << b.terms().begin()->first.to_string()
          << ", top term " << b.terms().rbegin()->first.to_string()
          << ") whose commutators with all six generators re-verify to zero; "
             "the unit suite pins it exactly";
    }
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------------
// 11. Undeformed Verma maximality: with the zero deformation, Y^n of the
//     highest weight vector is killed by both E and X for n <= 6, and X
//     maps each quotient generator F^k into Y-degree >= 1, at two weights.
// ---------------------------------------------------------------------------
Outcome criterion_11() {
    Outcome out;
    for (const Scalar& rv : {Scalar(2), Q.pow(3)}) {
        C0ZeroReport rep = c0_zero_verma_report(Weight(rv), 6);
        if (!rep.all_pass) {
            out.ok = false;
            out.detail = "report failed at r = " + rv.to_string();
            return out;
        }
    }
    out.detail = "Y^n maximal and X lifts quotient generators into Y-degree >= 1 "
                 "for n <= 6 at weights 2 and q^3";
    return out;
}

struct Criterion {
    int num;
    const char* label;
    double budget_s; // 0 = no stated budget
    Outcome (*fn)();
};

const Criterion TABLE[] = {
    {1, "reduction-system confluence", 5.0, criterion_1},
    {2, "ordered-basis freeness at bounded degree", 30.0, criterion_2},
    {3, "bracket and alpha identities", 10.0, criterion_3},
    {4, "generator actions match the closed forms", 60.0, criterion_4},
    {5, "structure vectors and kernel uniqueness", 0.0, criterion_5},
    {6, "running example end to end", 120.0, criterion_6},
    {7, "symmetric alpha roots", 30.0, criterion_7},
    {8, "undeformed three-dimensional counterexample", 5.0, criterion_8},
    {9, "maximality obstructions beyond alpha roots", 60.0, criterion_9},
    {10, "bounded centralizer dimension", 300.0, criterion_10},
    {11, "undeformed Verma maximality", 0.0, criterion_11},
};

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        int n = std::atoi(argv[i]);
        if (n < 1 || n > 11) {
            std::cerr << "usage: qosc-acceptance [N ...]  with N in 1..11\n";
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty())
        for (const Criterion& c : TABLE) selected.push_back(c.num);

    int passed = 0;
    for (int n : selected) {
        const Criterion& c = TABLE[n - 1];
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("unexpected error: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && secs > c.budget_s) {
            out.ok = false;
            out.detail += "; exceeded the " + std::to_string(static_cast<long>(c.budget_s)) +
                          " s time budget";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << (n < 10 ? " " : "") << n << ": " << (out.ok ? "PASS" : "FAIL")
             << "  " << c.label << " — " << out.detail << "  [" << secs << " s]";
        std::cout << line.str() << std::endl;
        if (out.ok) ++passed;
    }
    std::cout << "acceptance: " << passed << "/" << selected.size() << " criteria passed"
              << std::endl;
    return passed == static_cast<int>(selected.size()) ? 0 : 1;
}
