#include "doctest.h"

#include "logbundle/linalg.hpp"
#include "logbundle/poly.hpp"

#include <random>

using namespace logbundle;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound, double zero_rate) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    std::bernoulli_distribution zero(zero_rate);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = zero(rng) ? Rational(0) : Rational(entry(rng));
    return m;
}

// Laplace expansion along the first row; independent of elimination.
Rational cofactor_det(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Rational sum;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cj = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor(i - 1, cj++) = m(i, k);
            }
        }
        const Rational term = m(0, j) * cofactor_det(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(10, 5).to_string() == "2");
    CHECK(Rational::parse("-21/14") == Rational(-3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(binomial(10, 3) == 120);
}

TEST_CASE("rref of a rank one matrix") {
    const Matrix m = Matrix::from_rows({{1, 2}, {2, 4}});
    const auto r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.reduced == Matrix::from_rows({{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("nullspace basis is canonical") {
    const auto ns = nullspace(Matrix::from_rows({{1, 1, 0}}));
    REQUIRE(ns.size() == 2);
    CHECK(ns[0] == Vector{-1, 1, 0});
    CHECK(ns[1] == Vector{0, 0, 1});
    CHECK(nullspace(Matrix::identity(3)).empty());
}

TEST_CASE("solve, inverse and determinant") {
    const Matrix m = Matrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    const auto x = solve(m, {1, 2, 3});
    REQUIRE(x);
    CHECK(m.apply(*x) == Vector{1, 2, 3});
    CHECK(determinant(m) == cofactor_det(m));
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(*inv * m == Matrix::identity(3));
    const Matrix sing = Matrix::from_rows({{1, 2}, {2, 4}});
    CHECK_FALSE(inverse(sing));
    CHECK(determinant(sing) == 0);
    CHECK_FALSE(solve(sing, {1, 0}));
}

TEST_CASE("random matrices satisfy rank-nullity and rref idempotence") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng() % 7;
        const std::size_t c = 1 + rng() % 7;
        const Matrix m = random_matrix(rng, r, c, 5, 0.4);
        const auto red = rref(m);
        CHECK(red.rank == rank(m));
        const auto ns = nullspace(m);
        CHECK(red.rank + ns.size() == c);
        for (const auto& v : ns) CHECK(is_zero(m.apply(v)));
        CHECK(rref(red.reduced).reduced == red.reduced);
        // a row permutation does not change the reduced form
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < r; ++i) rows.push_back(m.row(r - 1 - i));
        CHECK(rref(Matrix::from_rows(rows)).reduced == red.reduced);
        if (r == c) CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("row space membership") {
    RowSpace rs(3);
    CHECK(rs.insert({1, 2, 3}));
    CHECK(rs.insert({0, 1, 1}));
    CHECK_FALSE(rs.insert({2, 5, 7}));
    CHECK(rs.contains({1, 3, 4}));
    CHECK_FALSE(rs.contains({0, 0, 1}));
    CHECK(rs.rank() == 2);
    CHECK_FALSE(rs.insert({0, 0, 0}));
}

TEST_CASE("monomial basis order and polynomial arithmetic") {
    const auto& m2 = monomials(2);
    REQUIRE(m2.size() == 6);
    CHECK(m2[0] == Exponent{2, 0, 0});
    CHECK(m2[1] == Exponent{1, 1, 0});
    CHECK(m2[5] == Exponent{0, 0, 2});
    for (std::size_t i = 0; i < m2.size(); ++i) CHECK(monomial_index(m2[i]) == i);
    const HomPoly f = HomPoly::x() * HomPoly::y() + HomPoly::z() * HomPoly::z();
    CHECK(f.partial(2) == HomPoly::z().scaled(2));
    CHECK(f.evaluate({1, 2, 3}) == 11);
    CHECK(HomPoly::from_coefficients(2, f.coefficients()) == f);
    CHECK_THROWS(HomPoly::x() + f);
}

TEST_CASE("gcd degree of binary forms") {
    const BinaryForm a = BinaryForm::linear(1, -1) * BinaryForm::linear(0, 1);  // (s - t) t
    const BinaryForm b = BinaryForm::linear(0, 1) * BinaryForm::linear(1, 2);   // t (s + 2t)
    CHECK(gcd_degree(a, b) == 1);
    CHECK(gcd_degree(a, a) == 2);
    CHECK(gcd_degree(BinaryForm::linear(1, 0).pow(3), BinaryForm::linear(1, 0).pow(2)) == 2);
    CHECK(gcd_degree(BinaryForm(2), a) == 2);
}
