#pragma once

#include "logbundle/linalg.hpp"
#include "logbundle/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace logbundle {

/// Exponent triple of a monomial x^i y^j z^k.
struct Exponent {
    unsigned x = 0;
    unsigned y = 0;
    unsigned z = 0;

    [[nodiscard]] unsigned degree() const { return x + y + z; }
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

using Point3 = std::array<Rational, 3>;

/// Number of monomials of degree k in three variables, C(k+2, 2).
std::size_t monomial_count(int k);

/// Position of a degree-k monomial in the fixed basis order: x-exponent
/// descending, then y-exponent descending.
std::size_t monomial_index(const Exponent& e);

/// All degree-k monomials in basis order.
const std::vector<Exponent>& monomials(unsigned k);

/// Homogeneous polynomial in x, y, z with rational coefficients. The zero
/// polynomial keeps its nominal degree so that entries of graded vectors
/// and matrices carry their degree even when they vanish.
class HomPoly {
public:
    HomPoly() = default;
    explicit HomPoly(unsigned degree) : degree_(degree) {}

    static HomPoly monomial(const Exponent& e, const Rational& c = 1);
    static HomPoly linear(const Rational& a, const Rational& b, const Rational& c);
    static HomPoly x() { return linear(1, 0, 0); }
    static HomPoly y() { return linear(0, 1, 0); }
    static HomPoly z() { return linear(0, 0, 1); }
    static HomPoly constant(const Rational& c);
    /// Inverse of coefficients(): entry i multiplies monomials(degree)[i].
    static HomPoly from_coefficients(unsigned degree, const Vector& coeffs);

    [[nodiscard]] unsigned degree() const { return degree_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<Exponent, Rational>& terms() const { return terms_; }
    [[nodiscard]] Rational coefficient(const Exponent& e) const;
    /// Coefficient vector in the monomial basis of degree(); length monomial_count(degree()).
    [[nodiscard]] Vector coefficients() const;

    void add_term(const Exponent& e, const Rational& c);

    /// Partial derivative with respect to variable 0 (x), 1 (y) or 2 (z). Requires degree >= 1.
    [[nodiscard]] HomPoly partial(int var) const;
    [[nodiscard]] Rational evaluate(const Point3& p) const;
    /// Returns g with g(v) = f(m v), i.e. substitutes the rows of m for (x, y, z).
    [[nodiscard]] HomPoly substitute(const Matrix& m) const;
    [[nodiscard]] HomPoly scaled(const Rational& c) const;
    [[nodiscard]] HomPoly pow(unsigned k) const;

    [[nodiscard]] std::string to_string() const;

    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    friend HomPoly operator-(const HomPoly& a) { return a.scaled(-1); }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend bool operator==(const HomPoly&, const HomPoly&) = default;

private:
    unsigned degree_ = 0;
    std::map<Exponent, Rational> terms_;
};

/// Binary form of degree e in the line parameters (s, t); coefficient i
/// multiplies s^(e-i) t^i.
class BinaryForm {
public:
    BinaryForm() = default;
    explicit BinaryForm(unsigned degree) : coeffs_(degree + 1) {}
    explicit BinaryForm(Vector coeffs);
    /// a s + b t
    static BinaryForm linear(const Rational& a, const Rational& b);

    [[nodiscard]] unsigned degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    [[nodiscard]] const Vector& coefficients() const { return coeffs_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] Rational evaluate(const Rational& s, const Rational& t) const;
    [[nodiscard]] BinaryForm pow(unsigned k) const;
    [[nodiscard]] std::string to_string() const;

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

private:
    Vector coeffs_{Rational(0)};
};

/// Degree of gcd(a, b) as binary forms, counting the root (1:0) with
/// multiplicity. gcd(0, b) = b; both zero is reported as -1 (unbounded).
int gcd_degree(const BinaryForm& a, const BinaryForm& b);

}  // namespace logbundle
