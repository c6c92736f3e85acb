// Exact linear algebra: kernels and ranks cross-checked against a naive
// field-division elimination oracle on random matrices over Q(q).

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <qosc/linalg.hpp>

using namespace qosc;

namespace {

Scalar small_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-2, 2);
    std::uniform_int_distribution<int> kind(0, 2);
    Scalar s(c(rng));
    if (kind(rng) == 0) s += Scalar(c(rng)) * Scalar::q();
    return s;
}

Matrix random_matrix(std::mt19937& rng, std::size_t m, std::size_t n) {
    Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = small_scalar(rng);
    return a;
}

// Plain Gaussian elimination with division, as an independent rank oracle.
std::size_t naive_rank(Matrix a) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col) / a.at(r, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace

TEST_CASE("kernels of simple matrices", "[linalg]") {
    REQUIRE(kernel_basis(Matrix::identity(4)).empty());

    Matrix zero(3, 5);
    auto basis = kernel_basis(zero);
    REQUIRE(basis.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) REQUIRE(basis[i][i] == Scalar(1));

    // x + q y = 0 has the one-dimensional kernel through (-q, 1).
    Matrix m(1, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar::q();
    basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    REQUIRE(basis[0][0] == -Scalar::q());
    REQUIRE(basis[0][1] == Scalar(1));
}

TEST_CASE("kernel vectors actually lie in the kernel", "[linalg]") {
    std::mt19937 rng(1999);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 7);
        Matrix a = random_matrix(rng, dim(rng), dim(rng));
        auto basis = kernel_basis(a);
        REQUIRE(rank(a) + basis.size() == a.cols()); // rank-nullity
        REQUIRE(rank(a) == naive_rank(a));
        for (auto& x : basis) {
            auto y = a.apply(x);
            for (auto& c : y) REQUIRE(c.is_zero());
        }
        // The kernel basis is independent.
        REQUIRE(rank_of_vectors(basis) == basis.size());
    }
}

TEST_CASE("span membership", "[linalg]") {
    std::vector<std::vector<Scalar>> basis = {
        {Scalar(1), Scalar(0), Scalar::q()},
        {Scalar(0), Scalar(1), Scalar(1)},
    };
    REQUIRE(in_span(basis, {Scalar(2), Scalar(3), Scalar(2) * Scalar::q() + Scalar(3)}));
    REQUIRE(!in_span(basis, {Scalar(0), Scalar(0), Scalar(1)}));
    REQUIRE(in_span({}, {Scalar(0), Scalar(0)}));
}

TEST_CASE("matrix arithmetic", "[linalg]") {
    std::mt19937 rng(77);
    Matrix a = random_matrix(rng, 4, 3), b = random_matrix(rng, 3, 5);
    std::vector<Scalar> v;
    for (int i = 0; i < 5; ++i) v.push_back(small_scalar(rng));
    // (A B) v = A (B v)
    REQUIRE((a * b).apply(v) == a.apply(b.apply(v)));
    REQUIRE_THROWS_AS(b * a, DimensionMismatch);
    REQUIRE_THROWS_AS(a + b, DimensionMismatch);
    REQUIRE((Matrix::identity(4) * a) == a);
    REQUIRE((a - a).is_zero());
}
