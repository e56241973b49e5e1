#pragma once

#include <compare>
#include <variant>
#include <vector>

#include "sqtile/ints.hpp"

namespace sqtile {

// One axis-aligned square with integer side. Occupies the half-open box
// [x, x+side) x [y, y+side); shared edges are never overlaps.
struct Placement {
    Int x = 0;
    Int y = 0;
    Int side = 1;

    friend bool operator==(const Placement&, const Placement&) = default;
    friend auto operator<=>(const Placement&, const Placement&) = default;
};

// Half-open axis-aligned box [x0, x1) x [y0, y1).
struct Box {
    Int x0 = 0;
    Int y0 = 0;
    Int x1 = 0;
    Int y1 = 0;

    [[nodiscard]] bool empty() const { return x0 >= x1 || y0 >= y1; }
    [[nodiscard]] Int width() const { return x1 - x0; }
    [[nodiscard]] Int height() const { return y1 - y0; }
    [[nodiscard]] Int area() const { return empty() ? 0 : checked_mul(width(), height()); }

    friend bool operator==(const Box&, const Box&) = default;
};

// Rectangle anchored at the origin: cells [0, w) x [0, h).
struct RectRegion {
    Int w = 1;
    Int h = 1;

    friend bool operator==(const RectRegion&, const RectRegion&) = default;
};

// Finite view onto an unbounded construction. Placements may extend past the
// window; the window itself must be covered exactly.
struct WindowRegion {
    Int x0 = 0;
    Int y0 = 0;
    Int x1 = 0;
    Int y1 = 0;

    friend bool operator==(const WindowRegion&, const WindowRegion&) = default;
};

using Region = std::variant<RectRegion, WindowRegion>;

struct Tiling {
    Region region = RectRegion{1, 1};
    std::vector<Placement> squares;
};

[[nodiscard]] inline Box placement_box(const Placement& p) {
    return Box{p.x, p.y, checked_add(p.x, p.side), checked_add(p.y, p.side)};
}

[[nodiscard]] inline Box region_box(const Region& r) {
    if (const auto* rect = std::get_if<RectRegion>(&r)) {
        return Box{0, 0, rect->w, rect->h};
    }
    const auto& w = std::get<WindowRegion>(r);
    return Box{w.x0, w.y0, w.x1, w.y1};
}

[[nodiscard]] inline bool boxes_intersect(const Box& a, const Box& b) {
    return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

[[nodiscard]] inline Box box_intersection(const Box& a, const Box& b) {
    Box r{std::max(a.x0, b.x0), std::max(a.y0, b.y0), std::min(a.x1, b.x1), std::min(a.y1, b.y1)};
    if (r.empty()) {
        return Box{0, 0, 0, 0};
    }
    return r;
}

[[nodiscard]] inline bool box_contains(const Box& outer, const Box& inner) {
    return outer.x0 <= inner.x0 && inner.x1 <= outer.x1 && outer.y0 <= inner.y0 &&
           inner.y1 <= outer.y1;
}

[[nodiscard]] inline bool region_is_rect(const Region& r) {
    return std::holds_alternative<RectRegion>(r);
}

}  // namespace sqtile
