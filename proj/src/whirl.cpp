#include "sqtile/whirl.hpp"

#include <stdexcept>

namespace sqtile {

namespace {

void validate_quadrant(const Quadrant& q) {
    if ((q.dir_x != 1 && q.dir_x != -1) || (q.dir_y != 1 && q.dir_y != -1)) {
        throw std::invalid_argument("quadrant directions must be +1 or -1");
    }
}

// Local box [u0, u1) x [v0, v1) in quadrant coordinates -> global placement.
Placement to_global(const Quadrant& q, Int u0, Int v0, Int side) {
    Int gx = q.dir_x > 0 ? checked_add(q.corner_x, u0)
                         : checked_sub(q.corner_x, checked_add(u0, side));
    Int gy = q.dir_y > 0 ? checked_add(q.corner_y, v0)
                         : checked_sub(q.corner_y, checked_add(v0, side));
    return Placement{gx, gy, side};
}

// Extent of window-inside-quadrant along each local axis; <= 0 means the
// window does not meet the quadrant.
Int local_need(Int corner, int dir, Int lo, Int hi) {
    return dir > 0 ? hi - corner : corner - lo;
}

std::vector<Placement> cover(Int seed_w, Int seed_h, GrowthAxis first,
                             const std::vector<Placement>& local_base, const Quadrant& q,
                             const Box& window) {
    validate_quadrant(q);
    if (seed_w < 1 || seed_h < 1) {
        throw std::invalid_argument("whirl seed must have positive dimensions");
    }
    if (window.empty()) {
        throw std::invalid_argument("window must be non-empty");
    }

    Int u_need = local_need(q.corner_x, q.dir_x, window.x0, window.x1);
    Int v_need = local_need(q.corner_y, q.dir_y, window.y0, window.y1);
    if (u_need <= 0 || v_need <= 0) {
        return {};
    }

    std::vector<Placement> local = local_base;
    Int w = seed_w;
    Int h = seed_h;
    GrowthAxis axis = first;
    bool margin_done = false;
    while (true) {
        bool covered = w >= u_need && h >= v_need;
        if (covered && margin_done) {
            break;
        }
        if (axis == GrowthAxis::horizontal) {
            local.push_back(Placement{w, 0, h});
            w = checked_add(w, h);
            axis = GrowthAxis::vertical;
        } else {
            local.push_back(Placement{0, h, w});
            h = checked_add(h, w);
            axis = GrowthAxis::horizontal;
        }
        if (covered) {
            margin_done = true;
        }
    }

    std::vector<Placement> out;
    out.reserve(local.size());
    for (const auto& p : local) {
        Placement g = to_global(q, p.x, p.y, p.side);
        if (boxes_intersect(placement_box(g), window)) {
            out.push_back(g);
        }
    }
    return out;
}

}  // namespace

std::vector<Placement> quadrant_whirl_patch(const WhirlSpec& spec, const Quadrant& q,
                                            const Region& window) {
    const auto* rect = std::get_if<RectRegion>(&spec.base.region);
    if (rect == nullptr) {
        throw std::invalid_argument("whirl base must be a rectangle tiling");
    }
    if (spec.scale < 1) {
        throw std::invalid_argument("whirl scale must be positive");
    }
    if (!verify(spec.base).passed) {
        throw std::invalid_argument("whirl base must be a verified tiling");
    }
    std::vector<Placement> local_base;
    local_base.reserve(spec.base.squares.size());
    for (const auto& p : spec.base.squares) {
        local_base.push_back(Placement{checked_mul(p.x, spec.scale), checked_mul(p.y, spec.scale),
                                       checked_mul(p.side, spec.scale)});
    }
    return cover(checked_mul(rect->w, spec.scale), checked_mul(rect->h, spec.scale),
                 spec.first_growth, local_base, q, region_box(window));
}

std::vector<Placement> whirl_tail_cover(Int seed_w, Int seed_h, GrowthAxis first,
                                        const Quadrant& q, const Region& window) {
    return cover(seed_w, seed_h, first, {}, q, region_box(window));
}

bool quadrant_contains(const Quadrant& q, Int x, Int y) {
    validate_quadrant(q);
    bool in_x = q.dir_x > 0 ? x >= q.corner_x : x < q.corner_x;
    bool in_y = q.dir_y > 0 ? y >= q.corner_y : y < q.corner_y;
    return in_x && in_y;
}

}  // namespace sqtile
