#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqtile/geometry.hpp"

namespace sqtile {

// Strictly ascending, pairwise distinct positive sides.
struct SquareSet {
    std::vector<Int> sides;
};

[[nodiscard]] SquareSet make_square_set(std::vector<Int> sides);

struct SolveOptions {
    std::uint64_t node_budget = 100'000'000;
};

enum class SolveStatus {
    found,
    no_solution,       // complete search exhausted
    area_mismatch,     // sum of squares != w*h, search skipped
    budget_exhausted,  // search cut off; absence NOT established
};

struct SolveResult {
    SolveStatus status = SolveStatus::no_solution;
    std::optional<Tiling> tiling;
    std::uint64_t nodes = 0;
};

// Complete, deterministic decision search: does `set` tile the w x h
// rectangle using every side exactly once? Fills the lowest-then-leftmost
// uncovered cell, trying candidate sides in descending order, with
// dead-state memoization on (skyline, used-set).
[[nodiscard]] SolveResult solve(const SquareSet& set, Int w, Int h, const SolveOptions& = {});

struct EnumerateOptions {
    std::uint64_t node_budget = 100'000'000;
};

struct EnumeratedRect {
    SquareSet set;
    Int w = 0;
    Int h = 0;
    Tiling tiling;
};

struct EnumerationResult {
    std::vector<EnumeratedRect> rects;
    bool budget_exhausted = false;
    std::uint64_t nodes = 0;
};

// All perfect squared rectangles with exactly `order` squares and sides
// <= max_side, canonicalized up to the 8 rectangle symmetries, reported once
// each with w >= h.
[[nodiscard]] EnumerationResult enumerate_perfect_rects(int order, Int max_side,
                                                        const EnumerateOptions& = {});

// Compact row-by-row listing of side lengths (left to right, top to bottom)
// for eyeballing rectangle tilings.
[[nodiscard]] std::string bouwkamp_text(const Tiling& t);

}  // namespace sqtile
