#include <doctest.h>

#include <random>

#include "jc/exactla.hpp"
#include "oracle.hpp"

using namespace jc::la;

namespace {

SparseMatrix randomMatrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    std::bernoulli_distribution sparse(0.4);
    SparseMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (sparse(rng)) continue;
            m.set(r, c, Rational(num(rng), den(rng)));
        }
    }
    return m;
}

}  // namespace

TEST_CASE("rationals render canonically") {
    CHECK(toCanonicalString(Rational(6, 4)) == "3/2");
    CHECK(toCanonicalString(Rational(3)) == "3/1");
    CHECK(toCanonicalString(Rational(0)) == "0/1");
    CHECK(toCanonicalString(Rational(-2, -6)) == "1/3");
    CHECK(parseRational("-4/6") == Rational(-2, 3));
    CHECK(parseRational("7") == Rational(7));
    CHECK_THROWS(parseRational("1/0"));
    CHECK_THROWS(parseRational("abc"));
}

TEST_CASE("sparse matrices never store zeros") {
    SparseMatrix m(2, 2);
    m.set(0, 1, 5);
    m.set(0, 1, 0);
    CHECK(m.isZero());
    CHECK_THROWS(m.set(2, 0, 1));
}

TEST_CASE("kernel examples") {
    CHECK(kernel(SparseMatrix(0, 0)).dim() == 0);
    CHECK(kernel(SparseMatrix(1, 1)).dim() == 1);

    const SparseMatrix m = SparseMatrix::fromDense({{1, 0, 1}, {0, 1, 1}});
    const Subspace k = kernel(m);
    REQUIRE(k.dim() == 1);
    CHECK(k == Subspace::span(3, {{-1, -1, 1}}));
    CHECK(m.apply(k.basis()[0]) == Vector{0, 0});
}

TEST_CASE("cokernel examples") {
    CHECK(cokernelBasis(SparseMatrix::identity(2)).dim() == 0);
    const Subspace c = cokernelBasis(SparseMatrix::fromDense({{1}, {0}}));
    CHECK(c == Subspace::span(2, {{0, 1}}));
    CHECK(cokernelBasis(SparseMatrix(3, 3)) == Subspace::full(3));
}

TEST_CASE("rank examples") {
    CHECK(rank(SparseMatrix::identity(4)) == 4);
    CHECK(rank(SparseMatrix(3, 5)) == 0);
    CHECK(rank(SparseMatrix::fromDense({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("subspace equality ignores the spanning set") {
    CHECK(Subspace::span(2, {{1, 1}, {2, 2}}) == Subspace::span(2, {{-3, -3}}));
    CHECK(Subspace::span(2, {{1, 0}}) != Subspace::span(2, {{0, 1}}));
    CHECK(Subspace::span(3, {{2, 4, 6}}).isCanonical());
}

TEST_CASE("random matrices against the Bareiss oracle") {
    std::mt19937 rng(20260);
    std::uniform_int_distribution<std::size_t> size(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = size(rng);
        const std::size_t cols = size(rng);
        const SparseMatrix m = randomMatrix(rng, rows, cols);
        const std::size_t r = rank(m);
        CHECK(r == oracle::rank(m));

        const Subspace k = kernel(m);
        CHECK(r + k.dim() == cols);
        for (const auto& v : k.basis()) CHECK(m.apply(v) == Vector(rows, 0));
        CHECK(k.isCanonical());
        CHECK(Subspace::span(cols, k.basis()) == k);

        const Subspace c = cokernelBasis(m);
        CHECK(c.dim() == rows - r);
        // Image and cokernel representatives together span the target.
        std::vector<Vector> all = image(m).basis();
        all.insert(all.end(), c.basis().begin(), c.basis().end());
        CHECK(Subspace::span(rows, all).dim() == rows);
        CHECK(image(m).dim() == r);
    }
}

TEST_CASE("matrix algebra") {
    const SparseMatrix a = SparseMatrix::fromDense({{1, 2}, {0, 1}});
    const SparseMatrix b = SparseMatrix::fromDense({{0, 1}, {1, 0}});
    CHECK(a * b == SparseMatrix::fromDense({{2, 1}, {1, 0}}));
    CHECK(a + b - b == a);
    CHECK(a.transposed().transposed() == a);
    CHECK((-a).scaled(-1) == a);
    CHECK_THROWS(a * SparseMatrix(3, 1));
}
