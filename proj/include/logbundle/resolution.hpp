#pragma once

#include "logbundle/geometry.hpp"
#include "logbundle/poly.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace logbundle {

/// No presentation certified within the degree search window.
class DegreeBoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// (rho0, rho1, rho2) of equal degree with rho0 f_x + rho1 f_y + rho2 f_z = 0.
struct SyzygyTriple {
    unsigned degree = 0;
    std::array<HomPoly, 3> components;

    /// Coefficients of the three components concatenated in monomial basis order.
    [[nodiscard]] Vector coefficients() const;
    static SyzygyTriple from_coefficients(unsigned degree, const Vector& v);
};

/// Graded presentation 0 -> (+)O(-e_j) -> (+)O(-d_i) -> E -> 0 of a rank-2
/// bundle. relations[j][i] is the entry pairing relation j with generator i;
/// it has degree e_j - d_i and is the zero form when that degree is negative.
struct Presentation {
    std::vector<int> generator_degrees;          // ascending
    std::vector<SyzygyTriple> generators;        // empty for presentations not derived from a curve
    std::vector<int> relation_degrees;           // ascending
    std::vector<std::vector<HomPoly>> relations;

    /// dim of the graded piece in degree k for k = 0..graded_dims.size()-1,
    /// recorded when the presentation was computed from a curve.
    std::vector<std::size_t> graded_dims;

    [[nodiscard]] int rank() const {
        return static_cast<int>(generator_degrees.size()) - static_cast<int>(relation_degrees.size());
    }
    [[nodiscard]] int c1() const;
    [[nodiscard]] long c2() const;
    /// Sum of h(k - d_i) minus sum of h(k - e_j) with h(m) = C(m+2, 2) for m >= 0.
    [[nodiscard]] long predicted_dim(int k) const;
    /// Entry degree e_j - d_i.
    [[nodiscard]] int entry_degree(std::size_t relation, std::size_t generator) const {
        return relation_degrees[relation] - generator_degrees[generator];
    }
};

/// Builds a presentation from a relation matrix given column by column,
/// checking that every entry has the degree its position demands.
Presentation make_presentation(std::vector<int> generator_degrees, std::vector<int> relation_degrees,
                               std::vector<std::vector<HomPoly>> relations);

struct Free {
    int a = 0;
    int b = 0;
    friend bool operator==(const Free&, const Free&) = default;
};
struct NearlyFree {
    int a = 0;
    int b = 0;
    std::optional<ProjPoint> jumping_point;  // present iff a < b
    friend bool operator==(const NearlyFree&, const NearlyFree&) = default;
};
struct OtherClass {
    std::vector<int> generator_degrees;
    std::vector<int> relation_degrees;
    friend bool operator==(const OtherClass&, const OtherClass&) = default;
};
using BundleClass = std::variant<Free, NearlyFree, OtherClass>;

std::string class_name(const BundleClass& c);

struct ChernData {
    int degree = 0;
    int c1 = 0;
    long c2 = 0;
    long tjurina = 0;
};

enum class Stability { Stable, Semistable, Unstable };
std::string to_string(Stability s);

/// Rows are the degree-(e+d-1) monomials, columns the 3*h(e) unknown
/// coefficients of (rho0, rho1, rho2).
Matrix jacobian_matrix(const std::array<HomPoly, 3>& gradient, unsigned e);

/// Basis of the degree-e syzygies of the partials of f (canonical nullspace basis).
std::vector<SyzygyTriple> syzygy_basis(const HomPoly& f, unsigned e);

/// Minimal graded presentation of the module of Jacobian syzygies of f.
/// Throws DegreeBoundExceeded when no certified presentation appears.
Presentation minimal_presentation(const HomPoly& f);

/// Classification from a presentation; the jumping point is filled in for
/// nearly free shapes with a < b.
BundleClass classify(const Presentation& p);
BundleClass classify(const HomPoly& f);

/// Common zero of the two linear entries of the unique relation of a nearly
/// free presentation with a < b. Throws std::invalid_argument for a = b or a
/// presentation of another shape.
ProjPoint jumping_point(const Presentation& p);

/// Degree of the Jacobian scheme: codimension of the Jacobian ideal in degree
/// 3d, required to agree in degrees 3d, 3d+1, 3d+2. Throws std::runtime_error
/// ("Jacobian scheme not finite") otherwise.
long tjurina(const HomPoly& f);

ChernData chern_data(const HomPoly& f);

/// Throws std::invalid_argument("not computed") for OtherClass.
Stability stability_class(const BundleClass& c);

/// One-line freeness criterion: Chern data (c1, c2) = (-(a+b), ab) for
/// integers a <= b and splitting type (a, b) on l. False when (a, b) does
/// not exist.
bool free_test_one_line(const Presentation& p, const ChernData& chern, const LinearForm& l);
bool free_test_one_line(const HomPoly& f, const LinearForm& l);

/// One-line nearly free criterion for bundles with c1 = -r (r >= 0) and
/// c2 = 1: true iff the splitting type on l is (0, r). Throws
/// std::invalid_argument when the Chern precondition fails.
bool nf_test_c2_one(const Presentation& p, const LinearForm& l);

}  // namespace logbundle
