#include "sqtile/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqtile {

namespace {

std::vector<Int> distinct_odd_sides(const std::vector<Placement>& squares) {
    std::vector<Int> odds;
    for (const auto& p : squares) {
        if (p.side % 2 != 0) {
            odds.push_back(p.side);
        }
    }
    std::sort(odds.begin(), odds.end());
    odds.erase(std::unique(odds.begin(), odds.end()), odds.end());
    return odds;
}

void validate_tiling(const Tiling& t) {
    for (const auto& p : t.squares) {
        if (p.side < 1) {
            throw std::invalid_argument("placement side must be >= 1");
        }
    }
    Box rb = region_box(t.region);
    if (rb.empty()) {
        throw std::invalid_argument("region must be non-empty");
    }
}

// First duplicated value, smallest first, or nullopt.
std::optional<Int> smallest_duplicate_side(const std::vector<Placement>& squares) {
    std::vector<Int> sides;
    sides.reserve(squares.size());
    for (const auto& p : squares) {
        sides.push_back(p.side);
    }
    std::sort(sides.begin(), sides.end());
    for (std::size_t i = 1; i < sides.size(); ++i) {
        if (sides[i] == sides[i - 1]) {
            return sides[i];
        }
    }
    return std::nullopt;
}

std::optional<Violation> find_overlap(const std::vector<Placement>& squares) {
    for (std::size_t i = 0; i < squares.size(); ++i) {
        Box bi = placement_box(squares[i]);
        for (std::size_t j = i + 1; j < squares.size(); ++j) {
            if (boxes_intersect(bi, placement_box(squares[j]))) {
                return Violation{OverlapViolation{i, j}};
            }
        }
    }
    return std::nullopt;
}

// Slab sweep over the region box. Assumes placements are pairwise disjoint,
// so per-slab intervals never overlap; reports the uncovered lattice point
// with smallest y, then smallest x.
std::optional<Violation> find_gap(const std::vector<Placement>& squares, const Box& rb) {
    std::vector<Box> clipped;
    clipped.reserve(squares.size());
    for (const auto& p : squares) {
        Box b = box_intersection(placement_box(p), rb);
        if (!b.empty()) {
            clipped.push_back(b);
        }
    }
    std::vector<Int> ys{rb.y0, rb.y1};
    for (const auto& b : clipped) {
        ys.push_back(b.y0);
        ys.push_back(b.y1);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
        Int ya = ys[k];
        Int yb = ys[k + 1];
        if (ya < rb.y0 || yb > rb.y1) {
            continue;
        }
        std::vector<std::pair<Int, Int>> intervals;
        for (const auto& b : clipped) {
            if (b.y0 <= ya && b.y1 >= yb) {
                intervals.emplace_back(b.x0, b.x1);
            }
        }
        std::sort(intervals.begin(), intervals.end());
        Int cursor = rb.x0;
        for (const auto& [x0, x1] : intervals) {
            if (x0 > cursor) {
                return Violation{GapViolation{cursor, ya}};
            }
            cursor = std::max(cursor, x1);
        }
        if (cursor < rb.x1) {
            return Violation{GapViolation{cursor, ya}};
        }
    }
    return std::nullopt;
}

}  // namespace

VerificationReport verify(const Tiling& t) {
    validate_tiling(t);
    VerificationReport report;
    report.odd_sides = distinct_odd_sides(t.squares);

    Box rb = region_box(t.region);

    if (region_is_rect(t.region)) {
        for (std::size_t i = 0; i < t.squares.size(); ++i) {
            if (!box_contains(rb, placement_box(t.squares[i]))) {
                report.violation = OutOfRegionViolation{i};
                return report;
            }
        }
    }

    if (auto dup = smallest_duplicate_side(t.squares)) {
        report.violation = DuplicateSideViolation{*dup};
        return report;
    }

    if (auto overlap = find_overlap(t.squares)) {
        report.violation = *overlap;
        return report;
    }

    if (auto gap = find_gap(t.squares, rb)) {
        report.violation = *gap;
        return report;
    }

    report.passed = true;
    return report;
}

bool area_identity(const std::vector<Int>& sides, Int w, Int h) {
    if (sides.empty()) {
        throw std::invalid_argument("area_identity requires a nonempty side set");
    }
    if (w < 1 || h < 1) {
        throw std::invalid_argument("area_identity requires positive dimensions");
    }
    std::vector<Int> sorted = sides;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1) {
            throw std::invalid_argument("sides must be positive");
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw std::invalid_argument("sides must be pairwise distinct");
        }
    }
    Int total = 0;
    for (Int s : sorted) {
        total = checked_add(total, checked_mul(s, s));
    }
    return total == checked_mul(w, h);
}

OddCensus odd_census(const Tiling& t) {
    OddCensus census;
    census.sides = distinct_odd_sides(t.squares);
    census.count = census.sides.size();
    return census;
}

Tiling scale_tiling(const Tiling& t, Int m) {
    if (m < 1 || m % 2 == 0) {
        throw std::invalid_argument("scale_tiling requires an odd factor >= 1");
    }
    Tiling scaled;
    if (const auto* rect = std::get_if<RectRegion>(&t.region)) {
        scaled.region = RectRegion{checked_mul(rect->w, m), checked_mul(rect->h, m)};
    } else {
        const auto& win = std::get<WindowRegion>(t.region);
        scaled.region = WindowRegion{checked_mul(win.x0, m), checked_mul(win.y0, m),
                                     checked_mul(win.x1, m), checked_mul(win.y1, m)};
    }
    scaled.squares.reserve(t.squares.size());
    for (const auto& p : t.squares) {
        scaled.squares.push_back(
            Placement{checked_mul(p.x, m), checked_mul(p.y, m), checked_mul(p.side, m)});
    }
    return scaled;
}

}  // namespace sqtile
