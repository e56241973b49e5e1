#include "sqtile/extend.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace sqtile {

namespace {

std::vector<Placement> sorted_by_position(std::vector<Placement> squares) {
    std::sort(squares.begin(), squares.end(), [](const Placement& a, const Placement& b) {
        return std::tie(a.y, a.x) < std::tie(b.y, b.x);
    });
    return squares;
}

Tiling double_tiling(const Tiling& t) {
    const auto& rect = std::get<RectRegion>(t.region);
    Tiling doubled{RectRegion{checked_mul(rect.w, 2), checked_mul(rect.h, 2)}, {}};
    doubled.squares.reserve(t.squares.size());
    for (const auto& p : t.squares) {
        doubled.squares.push_back(
            Placement{checked_mul(p.x, 2), checked_mul(p.y, 2), checked_mul(p.side, 2)});
    }
    return doubled;
}

}  // namespace

Tiling fib_extend_rect(const Tiling& t) {
    const auto* rect = std::get_if<RectRegion>(&t.region);
    if (rect == nullptr) {
        throw std::invalid_argument("fib_extend_rect requires a rectangle tiling");
    }
    if (!verify(t).passed) {
        throw std::invalid_argument("fib_extend_rect requires a verified tiling");
    }
    Int w = rect->w;
    Int h = rect->h;
    Int appended = std::max(w, h);
    for (const auto& p : t.squares) {
        if (p.side == appended) {
            throw DuplicateSideError(appended);
        }
    }

    Tiling out;
    out.squares.reserve(t.squares.size() + 1);
    if (w >= h) {
        // Transpose so the long edge becomes the height, then grow rightward.
        for (const auto& p : t.squares) {
            out.squares.push_back(Placement{p.y, p.x, p.side});
        }
        out.squares.push_back(Placement{h, 0, appended});
        out.region = RectRegion{checked_add(h, appended), appended};
    } else {
        out.squares = t.squares;
        out.squares.push_back(Placement{w, 0, appended});
        out.region = RectRegion{checked_add(w, appended), appended};
    }
    out.squares = sorted_by_position(std::move(out.squares));
    return out;
}

const Tiling& moron_tiling() {
    static const Tiling tiling = [] {
        SolveResult result = solve(make_square_set({1, 4, 7, 8, 9, 10, 14, 15, 18}), 33, 32);
        if (result.status != SolveStatus::found) {
            throw std::logic_error("33x32 base rectangle did not solve");
        }
        return *result.tiling;
    }();
    return tiling;
}

std::pair<SquareSet, Tiling> witness_for_odd_count(int k) {
    if (k < 4) {
        throw std::invalid_argument("witness_for_odd_count requires k >= 4");
    }
    Tiling t = moron_tiling();
    std::size_t odd = odd_census(t).count;
    while (odd < static_cast<std::size_t>(k)) {
        t = fib_extend_rect(t);
        odd = odd_census(t).count;
    }
    std::vector<Int> sides;
    sides.reserve(t.squares.size());
    for (const auto& p : t.squares) {
        sides.push_back(p.side);
    }
    return {make_square_set(std::move(sides)), std::move(t)};
}

RectVerdict rect_odd_count_verdict(int k) {
    if (k < 0) {
        throw std::invalid_argument("odd count must be non-negative");
    }
    if (k >= 1 && k <= 3) {
        return RectInfeasible{k, 3 + k};
    }
    if (k == 0) {
        Tiling doubled = double_tiling(moron_tiling());
        std::vector<Int> sides;
        for (const auto& p : doubled.squares) {
            sides.push_back(p.side);
        }
        return RectWitness{make_square_set(std::move(sides)), std::move(doubled), 0, true};
    }
    auto [set, tiling] = witness_for_odd_count(k);
    return RectWitness{std::move(set), std::move(tiling), k, false};
}

}  // namespace sqtile
