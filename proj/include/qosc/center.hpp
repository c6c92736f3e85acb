// center
// ------
// Degree-bounded centralizer computation.  Candidates are the weight-zero
// PBW monomials F^a Y^b K^c X^d E^e (2a + b = d + 2e) inside the requested
// bounds; the centralizer within those bounds is the joint exact kernel of
// the commutator maps with all five generators, computed through the rewrite
// engine and exact linear algebra.  This is a bounded verification: a
// dimension of 1 certifies that the scalars are the only central elements
// *within the bounds*, nothing beyond them.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <qosc/linalg.hpp>
#include <qosc/pbw.hpp>

namespace qosc {

struct CentralizerQuery {
    CenterPolynomial p;
    long max_a = 0;
    long max_b = 0;
    long max_c = 0; // bound on |c|; K-exponents range over [-max_c, max_c]
    long max_d = 0;
    long max_e = 0;
    std::size_t max_span = 200;
};

struct CentralizerResult {
    long dimension = 0;
    std::vector<PbwElement> basis; // leading coefficient 1, sorted by leading monomial
    std::size_t span_size = 0;     // number of weight-zero candidates considered
};

// Joint exact kernel of v |-> [g, v] over g in {K, E, F, X, Y} on the bounded
// weight-zero span.  The kernel is narrowed one generator at a time: after
// each stage the surviving space is re-expressed in candidate coordinates, so
// the final vectors are exact solutions of the full joint system.  Every
// returned element is then re-verified against all five commutators through
// the engine; failure of that check is a construction error, not a result.
inline CentralizerResult centralizer_basis(const CentralizerQuery& q) {
    std::vector<PbwMonomial> cand;
    for (long a = 0; a <= q.max_a; ++a)
        for (long b = 0; b <= q.max_b; ++b)
            for (long c = -q.max_c; c <= q.max_c; ++c)
                for (long d = 0; d <= q.max_d; ++d)
                    for (long e = 0; e <= q.max_e; ++e) {
                        if (2 * a + b != d + 2 * e) continue;
                        cand.push_back({a, b, c, d, e});
                        if (cand.size() > q.max_span)
                            throw SpanTooLarge(
                                "centralizer_basis: more than " + std::to_string(q.max_span) +
                                " weight-zero candidates inside the requested bounds");
                    }

    // Current solution space as coefficient vectors over cand; starts as the
    // full span.
    std::vector<std::vector<Scalar>> space;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        std::vector<Scalar> e_i(cand.size(), Scalar(0));
        e_i[i] = Scalar(1);
        space.push_back(std::move(e_i));
    }

    auto assemble = [&](const std::vector<Scalar>& v) {
        PbwElement x;
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (!v[i].is_zero()) x.add_term(cand[i], v[i]);
        return x;
    };

    const Letter gens[] = {Letter::K, Letter::E, Letter::F, Letter::X, Letter::Y};
    for (Letter g : gens) {
        if (space.empty()) break;
        PbwElement gen = PbwElement::generator(g);
        std::vector<PbwElement> comms;
        std::map<PbwMonomial, std::size_t> row_of;
        for (const auto& v : space) {
            PbwElement c = commutator(gen, assemble(v), q.p);
            for (const auto& [m, coef] : c.terms()) {
                (void)coef;
                row_of.emplace(m, row_of.size());
            }
            comms.push_back(std::move(c));
        }
        if (row_of.empty()) continue; // this generator constrains nothing further

        Matrix M(row_of.size(), space.size());
        for (std::size_t j = 0; j < comms.size(); ++j)
            for (const auto& [m, coef] : comms[j].terms()) M.at(row_of.at(m), j) = coef;

        std::vector<std::vector<Scalar>> next;
        for (const auto& w : kernel_basis(M)) {
            std::vector<Scalar> u(cand.size(), Scalar(0));
            for (std::size_t j = 0; j < space.size(); ++j)
                if (!w[j].is_zero())
                    for (std::size_t i = 0; i < cand.size(); ++i) u[i] += w[j] * space[j][i];
            next.push_back(std::move(u));
        }
        space = std::move(next);
    }

    CentralizerResult res;
    res.span_size = cand.size();
    for (const auto& v : space) {
        PbwElement x = assemble(v);
        if (x.is_zero())
            throw ConstructionInconsistent("centralizer_basis: zero vector in the kernel");
        Scalar lead = x.terms().begin()->second;
        res.basis.push_back(x * lead.inverse());
    }
    std::sort(res.basis.begin(), res.basis.end(),
              [](const PbwElement& x, const PbwElement& y) {
                  return x.terms().begin()->first < y.terms().begin()->first;
              });
    res.dimension = static_cast<long>(res.basis.size());

    // Soundness gate: every claimed central element commutes with all five
    // generators, exactly.
    for (const PbwElement& x : res.basis)
        for (Letter g : gens)
            if (!commutator(PbwElement::generator(g), x, q.p).is_zero())
                throw ConstructionInconsistent(
                    "centralizer_basis: a solved element fails the commutator re-check");
    return res;
}

} // namespace qosc
