#pragma once

#include <vector>

#include "sqtile/geometry.hpp"
#include "sqtile/verify.hpp"

namespace sqtile {

// Closed quarter-plane. dir = +1 covers cells at or beyond the corner
// coordinate, dir = -1 covers cells strictly below it, so four quadrants
// whose corners sit on the corners of a central block partition its
// complement exactly.
struct Quadrant {
    Int corner_x = 0;
    Int corner_y = 0;
    int dir_x = 1;  // +1 or -1
    int dir_y = 1;
};

enum class GrowthAxis { horizontal, vertical };

// Whirl generator: a verified base rectangle tiling, an integer scale, and
// the axis of the first growth square. Appended squares alternate axes and
// their sides follow the Fibonacci recurrence seeded by the base dimensions.
struct WhirlSpec {
    Tiling base;
    Int scale = 1;
    GrowthAxis first_growth = GrowthAxis::horizontal;
};

// Places the scaled base at the quadrant corner and appends whirl squares
// until the accumulated rectangle covers window-inside-quadrant (plus one
// margin step), returning every placement that intersects the window.
// The window is any finite region box; a window disjoint from the quadrant
// yields an empty list.
[[nodiscard]] std::vector<Placement> quadrant_whirl_patch(const WhirlSpec& spec, const Quadrant& q,
                                                          const Region& window);

// Whirl squares only, around an uncovered seed_w x seed_h notch at the
// quadrant corner: covers quadrant-minus-seed. Used by constructions whose
// seed rectangle is filled by foreign squares rather than a base tiling.
[[nodiscard]] std::vector<Placement> whirl_tail_cover(Int seed_w, Int seed_h, GrowthAxis first,
                                                      const Quadrant& q, const Region& window);

[[nodiscard]] bool quadrant_contains(const Quadrant& q, Int x, Int y);

}  // namespace sqtile
