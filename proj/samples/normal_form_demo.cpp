// Minimal library walkthrough: reduce free words to the ordered basis
// F^a Y^b K^c X^d E^e and multiply elements exactly over Q(q), under the
// running example deformation p(t) = (q - q^{-1})^3 t - (q - q^{-1})(q^2 + q^{-2}).

#include <iostream>

#include <qosc/pbw.hpp>

using namespace qosc;

int main() {
    const Scalar q = Scalar::q();
    const Scalar D = q - q.inverse();
    const CenterPolynomial p{-D * (q.pow(2) + q.pow(-2)), D.pow(3)};

    // Words use one letter per generator: F, Y, K, L (= K^-1), X, E.
    ReductionSystem rs = reduction_system(p);
    for (const char* w : {"XY", "EF", "EYXF"}) {
        FreeElement nf = rs.normal_form(FreeElement::term(word_from_string(w)));
        std::cout << w << "  ->  " << PbwElement::from_free(nf).to_string() << "\n";
    }

    // Products and commutators stay exact.
    PbwElement s = PbwElement::generator(Letter::E) + PbwElement::generator(Letter::F);
    std::cout << "(E + F)^2 = " << multiply(s, s, p).to_string() << "\n";

    // The deformation element C0 = p(C) written in the ordered basis.  It
    // commutes with E, F, K but not with X, Y.
    PbwElement c0 = c0_element(p);
    std::cout << "C0 = " << c0.to_string() << "\n";
    std::cout << "[E, C0] = " << commutator(PbwElement::generator(Letter::E), c0, p).to_string()
              << "\n";
    std::cout << "[X, C0] = " << commutator(PbwElement::generator(Letter::X), c0, p).to_string()
              << "\n";
    return 0;
}
