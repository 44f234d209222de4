#pragma once

#include "logbundle/geometry.hpp"
#include "logbundle/resolution.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace logbundle {

struct Prediction {
    enum class Kind { NearlyFree, Free, Unknown };
    Kind kind = Kind::Unknown;
    int a = 0;  // exponents when kind == NearlyFree
    int b = 0;
    int t = 0;
    std::string rule;

    [[nodiscard]] std::string to_string() const;
};

/// Removing l from a free arrangement with exponents (a, b).
Prediction predict_delete(const Arrangement& arr, const Free& exponents, const LinearForm& l);
/// Classifies arr first; throws std::invalid_argument("arrangement is not free") otherwise.
Prediction predict_delete(const Arrangement& arr, const LinearForm& l);

/// Adding l to a free arrangement with exponents (a, b).
Prediction predict_add(const Arrangement& arr, const Free& exponents, const LinearForm& l);
Prediction predict_add(const Arrangement& arr, const LinearForm& l);

/// z, x - i z (i < b), y - j z (j < a - 1) and x - y.
Arrangement family_C0(int a, int b);
/// family_C0(a, b) without the line x.
Arrangement family_deletion(int a, int b);

struct AdditionResult {
    Arrangement arrangement;
    LinearForm added;
};
/// family_C0(a, b) plus the first line found whose count t in the enlarged
/// arrangement is a - 1. Throws std::runtime_error("no admissible line").
AdditionResult family_addition_search(int a, int b);
inline Arrangement family_addition(int a, int b) { return family_addition_search(a, b).arrangement; }

using Params = std::map<std::string, Rational>;
using NamedObject = std::variant<Arrangement, HomPoly>;

/// Ids: b3, ex1 (t), exline, exline_shift, exinout (t), conic_pencil,
/// c0 / deletion / addition (a, b).
NamedObject named_example(const std::string& id, const Params& params = {});
std::vector<std::string> named_example_ids();

/// Relation column [m^(b-a+1), l1, l2] on generators (a, b, b), the image of
/// [z^(b-a+1), x, y] under a coordinate change taking (0:0:1) to p.
Presentation canonical_nf(int a, int b, const ProjPoint& p);

/// Kernel data (f, g, h) of a relation O(-e) -> O(-d0) + O(-d1) + O(-d2).
struct KernelBundleSpec {
    std::array<HomPoly, 3> entries;
    std::array<int, 3> generator_degrees{};
    int relation_degree = 0;

    [[nodiscard]] Presentation presentation() const;
};

/// (f, x^2, y^2) on generators of degrees (1, 2, 2) with the relation in
/// degree 4. Throws std::invalid_argument("common zero at P") when f(0,0,1) = 0.
KernelBundleSpec stable_exceptional(const HomPoly& f);

struct SecantWitness {
    Rational lambda;
    Rational mu;
    LinearForm line;
    int length = 0;  // length of the intersection of the line with the scheme
};

struct SecantSearch {
    std::optional<SecantWitness> witness;
    std::string budget;
};

/// Scans the pencil lambda g + mu h over a rational grid and candidate lines
/// avoiding (0:0:1) for a line meeting {lambda g + mu h = f = 0} in length >= 3.
/// g, h are forms of degree n >= 3 in x, y without common factor and f is a
/// cubic with f(0,0,1) != 0; std::invalid_argument otherwise. Without a witness
/// the budget reads "none found (budget): ..."; nonexistence is never claimed.
SecantSearch three_secant_search(const HomPoly& g, const HomPoly& h, const HomPoly& f);

/// Bundle whose jumping lines off (0:0:1) correspond to 3-secants of the pencil.
KernelBundleSpec pencil_bundle(const HomPoly& g, const HomPoly& h, const HomPoly& f);

}  // namespace logbundle
