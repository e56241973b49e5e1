#include "sqtile/plane.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "sqtile/solver.hpp"

namespace sqtile {

namespace {

std::vector<Placement> sorted_by_position(std::vector<Placement> squares) {
    std::sort(squares.begin(), squares.end(), [](const Placement& a, const Placement& b) {
        return std::tie(a.y, a.x) < std::tie(b.y, b.x);
    });
    return squares;
}

const WindowRegion& require_window(const Region& region) {
    const auto* win = std::get_if<WindowRegion>(&region);
    if (win == nullptr) {
        throw std::invalid_argument("plane patches require a window region");
    }
    if (win->x0 >= win->x1 || win->y0 >= win->y1) {
        throw std::invalid_argument("window bounds must satisfy x0 < x1 and y0 < y1");
    }
    return *win;
}

void append_if_visible(std::vector<Placement>& out, const Placement& p, const Box& window) {
    if (boxes_intersect(placement_box(p), window)) {
        out.push_back(p);
    }
}

}  // namespace

const Tiling& whirl_base_tiling() {
    static const Tiling tiling = [] {
        SolveResult result =
            solve(make_square_set({2, 8, 14, 16, 18, 20, 28, 30, 36}), 66, 64);
        if (result.status != SolveStatus::found) {
            throw std::logic_error("66x64 whirl base did not solve");
        }
        return *result.tiling;
    }();
    return tiling;
}

Tiling pinwheel_patch_scaled(Int x, const Region& window, const Int (&scales)[4]) {
    if (x < 1 || x % 2 == 0) {
        throw std::invalid_argument("pinwheel requires a positive odd central side");
    }
    for (Int k : scales) {
        if (k < 1) {
            throw std::invalid_argument("quadrant scales must be positive");
        }
    }
    const WindowRegion& win = require_window(window);
    Box wbox{win.x0, win.y0, win.x1, win.y1};

    // Quadrant corners walk the central square's corners counterclockwise;
    // together with [0,x)^2 the four quarter-planes partition the plane.
    const Quadrant quads[4] = {
        Quadrant{x, 0, +1, +1},
        Quadrant{x, x, -1, +1},
        Quadrant{0, x, -1, -1},
        Quadrant{0, 0, +1, -1},
    };

    std::vector<Placement> squares;
    append_if_visible(squares, Placement{0, 0, x}, wbox);
    for (int i = 0; i < 4; ++i) {
        WhirlSpec spec{whirl_base_tiling(), scales[i], GrowthAxis::horizontal};
        auto part = quadrant_whirl_patch(spec, quads[i], window);
        squares.insert(squares.end(), part.begin(), part.end());
    }
    return Tiling{win, sorted_by_position(std::move(squares))};
}

Tiling pinwheel_patch(Int x, const Region& window) {
    return pinwheel_patch_scaled(x, window, {23, 24, 25, 26});
}

// The three odd squares and four whirl regions fit together as follows
// (quadrant P1 = {x>=0, y>=0}, P2 = {x<0, y>=19}, P3 = {x<3, y<19},
//  P4 = {x>=3, y<0}; P1 and P3 overlap exactly on [0,3) x [0,19)):
//
//   - P1 carries the 14,20,34,... whirl around an uncovered 6 x 14 seed
//     notch at [0,6) x [0,14).
//   - P3 carries the 16,24,40,... whirl around an uncovered 8 x 16 seed
//     notch at [-5,3) x [3,19).
//   - P2 and P4 are full quadrant whirls of the scaled base (23x and 24x).
//
// Inside the P1/P3 overlap each cell lies in at least one seed: where it is
// in exactly one seed the other quadrant's whirl covers it, and where the
// seeds intersect ([0,3) x [3,14)) the 11-square does. The rest of the seed
// notches is exactly the area of the odd squares:
//
//   3  at [3,6) x [0,3)    (bottom of the first seed, 3 + 11 = 14 tall)
//   11 at [-5,6) x [3,14)  (spans both seeds)
//   5  at [-5,0) x [14,19) (top of the second seed, 11 + 5 = 16 tall)
Tiling three_odds_patch(const Region& window) {
    const WindowRegion& win = require_window(window);
    Box wbox{win.x0, win.y0, win.x1, win.y1};

    std::vector<Placement> squares;
    append_if_visible(squares, Placement{3, 0, 3}, wbox);
    append_if_visible(squares, Placement{-5, 3, 11}, wbox);
    append_if_visible(squares, Placement{-5, 14, 5}, wbox);

    // First area: seed 6 x 14, first square 14.
    auto part = whirl_tail_cover(6, 14, GrowthAxis::horizontal, Quadrant{0, 0, +1, +1}, window);
    squares.insert(squares.end(), part.begin(), part.end());
    // Third area: seed 8 x 16, first square 16.
    part = whirl_tail_cover(8, 16, GrowthAxis::horizontal, Quadrant{3, 19, -1, -1}, window);
    squares.insert(squares.end(), part.begin(), part.end());
    // Remaining areas: scaled base whirls.
    part = quadrant_whirl_patch(WhirlSpec{whirl_base_tiling(), 23, GrowthAxis::horizontal},
                                Quadrant{0, 19, -1, +1}, window);
    squares.insert(squares.end(), part.begin(), part.end());
    part = quadrant_whirl_patch(WhirlSpec{whirl_base_tiling(), 24, GrowthAxis::horizontal},
                                Quadrant{3, 0, +1, -1}, window);
    squares.insert(squares.end(), part.begin(), part.end());

    return Tiling{win, sorted_by_position(std::move(squares))};
}

PlaneVerdict plane_odd_count_verdict(int k) {
    if (k < 0) {
        throw std::invalid_argument("odd count must be non-negative");
    }
    PlaneVerdict verdict;
    verdict.odd_count = k;
    if (k == 1) {
        verdict.feasibility = PlaneFeasibility::possible;
        verdict.construction = "pinwheel";
    } else if (k == 3) {
        verdict.feasibility = PlaneFeasibility::possible;
        verdict.construction = "three-odds";
    } else if (k == 2) {
        verdict.feasibility = PlaneFeasibility::impossible;
        verdict.lemma = 2;
    }
    return verdict;
}

}  // namespace sqtile
