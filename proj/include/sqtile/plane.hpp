#pragma once

#include <string>

#include "sqtile/whirl.hpp"

namespace sqtile {

// Pinwheel plane construction around one odd square: the central x-square at
// [0,x)^2 plus four quadrant whirls (scales 23, 24, 25, 26 of the 66 x 64
// base, counterclockwise from the east quadrant), clipped to a finite window.
// The window must be a WindowRegion; x must be odd.
[[nodiscard]] Tiling pinwheel_patch(Int x, const Region& window);

[[nodiscard]] Tiling pinwheel_patch_scaled(Int x, const Region& window, const Int (&scales)[4]);

// Three-odds plane construction: squares 3, 5, 11 interlock the seed notches
// of two whirls (sides 14,20,34,... and 16,24,40,...) while two more
// quadrants carry the 23x and 24x scaled base whirls.
[[nodiscard]] Tiling three_odds_patch(const Region& window);

enum class PlaneFeasibility { possible, impossible, unknown };

struct PlaneVerdict {
    PlaneFeasibility feasibility = PlaneFeasibility::unknown;
    int odd_count = 0;
    std::string construction;  // "pinwheel" or "three-odds" when possible
    int lemma = 0;             // catalog entry 2 when impossible
};

// k = 1 and k = 3 are possible (constructions above), k = 2 is impossible,
// anything else is unsettled.
[[nodiscard]] PlaneVerdict plane_odd_count_verdict(int k);

// The 66 wide x 64 tall rectangle tiled by {2,8,14,16,18,20,28,30,36},
// solved once; seed of every scaled whirl.
[[nodiscard]] const Tiling& whirl_base_tiling();

}  // namespace sqtile
