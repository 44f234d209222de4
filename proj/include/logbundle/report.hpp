#pragma once

#include "logbundle/constructions.hpp"
#include "logbundle/splitting.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace logbundle {

using Json = nlohmann::ordered_json;

/// Malformed or non-reduced input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Request outside what a command handles, e.g. plotting a curve.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Input {
    Json echo;
    std::optional<Arrangement> arrangement;
    HomPoly curve;
};

/// Exactly one of "lines", "curve", "family" must be present.
Input parse_input(const Json& j);
Input read_input(const std::string& path);
/// Rationals may be given as strings or integers.
Params parse_params(const Json& j);

Json to_json(const Rational& r);
/// Primitive integer coordinates with the last nonzero coordinate positive.
Json to_json(const ProjPoint& p);
Json to_json(const LinearForm& l);
Json arrangement_json(const Arrangement& arr);
Json curve_json(const HomPoly& f);

/// "Free", "NearlyFree" or "Other".
std::string class_kind(const BundleClass& c);

struct ReportOptions {
    bool tjurina = true;
    bool timing = false;
};

/// Classification, Chern data, splitting table, lattice summary and a
/// self-audit block. Throws DegreeBoundExceeded from the presentation search.
Json analyze(const Input& in, const ReportOptions& options = {});

/// One row per parameter value from `from` to `to`; per-row failures become
/// error rows and rows whose class differs from the most common one are flagged.
Json sweep(const std::string& family, const std::string& param, const Rational& from, const Rational& to,
           const Rational& step, const Params& fixed = {});

/// Arrangement or curve JSON of a named family.
Json construct(const std::string& family, const Params& params);

/// Arrangements only: Unsupported("plot supports arrangements only") for curves.
std::string plot_svg(const Input& in, const Rational& box);

Json compare(const Input& a, const Input& b);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace logbundle
