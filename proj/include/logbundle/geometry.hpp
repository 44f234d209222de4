#pragma once

#include "logbundle/linalg.hpp"
#include "logbundle/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logbundle {

/// Nonzero rational triple up to scaling, stored as its canonical
/// representative: primitive integer vector whose first nonzero entry is
/// positive. Equality of representatives is projective equality.
template <class Tag>
class ProjectiveTriple {
public:
    ProjectiveTriple(const Rational& a, const Rational& b, const Rational& c);
    explicit ProjectiveTriple(const Point3& v) : ProjectiveTriple(v[0], v[1], v[2]) {}

    [[nodiscard]] const Point3& coords() const { return v_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return v_[i]; }
    [[nodiscard]] std::string to_string() const {
        return "(" + v_[0].to_string() + ":" + v_[1].to_string() + ":" + v_[2].to_string() + ")";
    }

    friend bool operator==(const ProjectiveTriple&, const ProjectiveTriple&) = default;
    friend auto operator<=>(const ProjectiveTriple& a, const ProjectiveTriple& b) { return a.v_ <=> b.v_; }

private:
    Point3 v_;
};

struct LineTag {};
struct PointTag {};

/// Line alpha x + beta y + gamma z = 0.
using LinearForm = ProjectiveTriple<LineTag>;
using ProjPoint = ProjectiveTriple<PointTag>;

Point3 normalize_triple(const Point3& v);

template <class Tag>
ProjectiveTriple<Tag>::ProjectiveTriple(const Rational& a, const Rational& b, const Rational& c)
    : v_(normalize_triple({a, b, c})) {}

Rational dot(const Point3& a, const Point3& b);
Point3 cross(const Point3& a, const Point3& b);

HomPoly to_poly(const LinearForm& l);
bool incident(const LinearForm& l, const ProjPoint& p);

/// Common zero of two distinct lines. Throws std::invalid_argument("coincident lines").
ProjPoint intersection(const LinearForm& l1, const LinearForm& l2);
/// Line through two distinct points.
LinearForm join(const ProjPoint& p, const ProjPoint& q);

/// The two points spanning the canonical parametrization (s:t) -> s*P1 + t*P2 of l.
/// With pivot = first nonzero coefficient index and q < r the other two indices,
/// P1 = e_q - (l_q/l_p) e_p and P2 = e_r - (l_r/l_p) e_p.
std::pair<Point3, Point3> parametrization(const LinearForm& l);

/// f restricted to l through the canonical parametrization; degree preserved.
BinaryForm restrict_to_line(const HomPoly& f, const LinearForm& l);

/// The three partial derivatives (f_x, f_y, f_z). Throws when degree(f) = 0.
std::array<HomPoly, 3> partials(const HomPoly& f);

/// Projective coordinate change g (invertible 3x3): points map by P -> gP,
/// lines by l -> l g^{-1}, forms by f -> f o g^{-1}.
class ProjectiveMap {
public:
    explicit ProjectiveMap(Matrix g);

    [[nodiscard]] const Matrix& matrix() const { return g_; }
    [[nodiscard]] const Matrix& inverse_matrix() const { return inv_; }
    [[nodiscard]] ProjPoint apply(const ProjPoint& p) const;
    [[nodiscard]] LinearForm apply(const LinearForm& l) const;
    [[nodiscard]] HomPoly apply(const HomPoly& f) const;

private:
    Matrix g_;
    Matrix inv_;
};

/// A reduced union of distinct lines, in input order.
class Arrangement {
public:
    Arrangement() = default;
    /// Throws std::invalid_argument("duplicate line ...") when two lines coincide.
    explicit Arrangement(std::vector<LinearForm> lines);

    [[nodiscard]] const std::vector<LinearForm>& lines() const { return lines_; }
    [[nodiscard]] std::size_t size() const { return lines_.size(); }
    [[nodiscard]] const LinearForm& operator[](std::size_t i) const { return lines_[i]; }
    [[nodiscard]] std::optional<std::size_t> index_of(const LinearForm& l) const;
    [[nodiscard]] bool contains(const LinearForm& l) const { return index_of(l).has_value(); }

    [[nodiscard]] Arrangement with_line(const LinearForm& l) const;
    [[nodiscard]] Arrangement without_line(const LinearForm& l) const;
    [[nodiscard]] Arrangement transformed(const ProjectiveMap& g) const;

private:
    std::vector<LinearForm> lines_;
};

/// Defining polynomial: product of the normalized linear forms.
HomPoly product_form(const Arrangement& arr);

struct LatticePoint {
    ProjPoint point;
    std::vector<std::size_t> lines;  // ascending indices into the arrangement

    [[nodiscard]] std::size_t multiplicity() const { return lines.size(); }
};

/// Intersection points of an arrangement with their incidences, sorted by
/// canonical point representative.
struct Lattice {
    std::vector<LatticePoint> points;

    /// Indices into points of the points lying on line `line_index`.
    [[nodiscard]] std::vector<std::size_t> points_on(std::size_t line_index) const;
    [[nodiscard]] std::optional<std::size_t> find(const ProjPoint& p) const;
};

/// Requires at least two lines.
Lattice lattice(const Arrangement& arr);

/// t = N - n - 1 for a line of the arrangement, N = |arr| and n = number of
/// intersection points on it. Throws std::invalid_argument when l is not a line of arr.
int euler_t(const Arrangement& arr, const LinearForm& l);
/// The multiplicity-weighted triple point count sum over p in l of (m_p - 2).
int weighted_triple_count(const Arrangement& arr, const LinearForm& l);

/// Line bijection witness: witness[i] = index in a2 of the image of line i of a1.
std::optional<std::vector<std::size_t>> lattice_isomorphism(const Arrangement& a1, const Arrangement& a2);
inline bool lattice_isomorphic(const Arrangement& a1, const Arrangement& a2) {
    return lattice_isomorphism(a1, a2).has_value();
}

}  // namespace logbundle
