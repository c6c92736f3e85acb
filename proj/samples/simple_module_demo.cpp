// Representation-theory walkthrough under the running example deformation:
// locate the alpha roots at weight q, build the two-dimensional simple
// module living there, verify its defining relations, and show the
// composition series of the Verma module it comes from.

#include <iostream>

#include <qosc/blocks.hpp>
#include <qosc/repn.hpp>

using namespace qosc;

namespace {

void print_matrix(const char* name, const Matrix& m) {
    std::cout << name << " =\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::cout << (j ? ", " : "") << m.at(i, j).to_string();
        std::cout << "]\n";
    }
}

} // namespace

int main() {
    const Scalar q = Scalar::q();
    const Scalar D = q - q.inverse();
    const CenterPolynomial p{-D * (q.pow(2) + q.pow(-2)), D.pow(3)};
    const Weight r{q};

    std::cout << "alpha roots at weight q: {";
    bool first = true;
    for (long k : alpha_root_set(p, r)) {
        std::cout << (first ? "" : ", ") << k;
        first = false;
    }
    std::cout << "}\n";

    ModuleMatrices M = build_simple(p, r);
    std::cout << "simple module at weight q has dimension " << M.dim() << "\n";
    print_matrix("K", M.K);
    print_matrix("E", M.E);
    print_matrix("F", M.F);
    print_matrix("X", M.X);
    print_matrix("Y", M.Y);
    std::cout << "all defining relations hold: "
              << (verify_module_relations(M, p).all_pass ? "yes" : "NO") << "\n";

    CompositionSeries series = composition_series(p, r);
    std::cout << "composition factors of the Verma module at weight q:\n";
    for (const CompositionFactor& f : series.factors) {
        std::cout << "  highest weight " << f.highest_weight.to_string();
        if (f.dim)
            std::cout << ", dimension " << *f.dim << "\n";
        else
            std::cout << ", infinite dimensional\n";
    }
    return 0;
}
