#pragma once

#include "logbundle/geometry.hpp"
#include "logbundle/resolution.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace logbundle {

/// E restricted to a line is O(-u) + O(-v) with u <= v.
struct SplitType {
    int u = 0;
    int v = 0;

    [[nodiscard]] int gap() const { return v - u; }
    [[nodiscard]] std::string to_string() const { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }
    friend bool operator==(const SplitType&, const SplitType&) = default;
};

/// Splitting type on l computed from the dual of the presentation. Throws
/// std::invalid_argument when p is not of rank 2.
SplitType split_on_line(const Presentation& p, const LinearForm& l);

struct MultiPoint {
    BinaryForm root;        // linear form in the line parameters vanishing at the point
    ProjPoint point;
    int multiplicity = 1;
};

struct MultiRestriction {
    LinearForm line;
    std::vector<MultiPoint> points;  // multiplicity descending, then point order

    [[nodiscard]] int total() const;
};

/// Points of l met by the other lines, each weighted by the number of other
/// lines through it. Throws std::invalid_argument when l is not in arr.
MultiRestriction ziegler(const Arrangement& arr, const LinearForm& l);

/// Exponents (e1, e2), e1 <= e2, of the multiarrangement from the
/// divisibility system on pairs of binary forms.
SplitType multi_exponents(const MultiRestriction& mr);

struct PositionDependent {};
using RuleResult = std::variant<SplitType, PositionDependent>;

/// Closed-form splitting for the two cases determined by the multiplicities
/// alone; PositionDependent otherwise.
RuleResult rule_split(const MultiRestriction& mr, int line_count);

struct LineSplit {
    LinearForm line;
    SplitType split;
    int order = 0;
    bool jumping = false;
    bool contains_jumping_point = false;
};

struct JumpReport {
    SplitType generic;
    bool generic_confirmed = false;
    std::vector<LineSplit> arrangement_lines;
    std::vector<LineSplit> lines_through_point;
};

/// Smallest gap allowed for a line given c1 and the lowest generator degree.
int minimal_gap(const Presentation& p);

/// Fixed pseudo-random sample of lines. Lines through any of `avoid` are
/// rejected; when `through` is set every line passes through it.
std::vector<LinearForm> sample_lines(std::size_t count, unsigned seed, const std::vector<ProjPoint>& avoid,
                                     const std::optional<ProjPoint>& through = std::nullopt);

/// Generic type from sampled lines avoiding the lattice, then every line of
/// arr and, for nearly free shapes with a < b, sampled lines through the
/// jumping point. The generic type is lowered if a listed line has a smaller gap.
JumpReport jump_report(const Presentation& p, const std::optional<Arrangement>& arr);

}  // namespace logbundle
