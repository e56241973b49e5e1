#pragma once

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "sqtile/geometry.hpp"

namespace sqtile {

struct OverlapViolation {
    std::size_t first = 0;
    std::size_t second = 0;
    friend bool operator==(const OverlapViolation&, const OverlapViolation&) = default;
};

// Witness point: the uncovered lattice point with smallest y, then smallest x.
struct GapViolation {
    Int x = 0;
    Int y = 0;
    friend bool operator==(const GapViolation&, const GapViolation&) = default;
};

struct DuplicateSideViolation {
    Int side = 0;
    friend bool operator==(const DuplicateSideViolation&, const DuplicateSideViolation&) = default;
};

struct OutOfRegionViolation {
    std::size_t index = 0;
    friend bool operator==(const OutOfRegionViolation&, const OutOfRegionViolation&) = default;
};

using Violation =
    std::variant<OverlapViolation, GapViolation, DuplicateSideViolation, OutOfRegionViolation>;

struct VerificationReport {
    bool passed = false;
    std::optional<Violation> violation;
    std::vector<Int> odd_sides;  // distinct odd sides, ascending, filled on pass and fail alike
};

struct OddCensus {
    std::size_t count = 0;
    std::vector<Int> sides;
};

// Exact-cover check: placements pairwise disjoint, sides pairwise distinct,
// region covered with no gap; rect regions additionally contain every square.
// Pure function of the tiling; malformed geometry is a violation, not an error.
[[nodiscard]] VerificationReport verify(const Tiling& t);

// True iff the sum of squared sides equals w*h. Sides must be distinct and nonempty.
[[nodiscard]] bool area_identity(const std::vector<Int>& sides, Int w, Int h);

[[nodiscard]] OddCensus odd_census(const Tiling& t);

// Multiplies every coordinate, side and the region by an odd m >= 1.
// Even factors are rejected: the operation's contract is parity preservation.
[[nodiscard]] Tiling scale_tiling(const Tiling& t, Int m);

}  // namespace sqtile
