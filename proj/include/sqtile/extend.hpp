#pragma once

#include <stdexcept>
#include <utility>
#include <variant>

#include "sqtile/solver.hpp"
#include "sqtile/verify.hpp"

namespace sqtile {

class DuplicateSideError : public std::runtime_error {
  public:
    explicit DuplicateSideError(Int side)
        : std::runtime_error("appended side already used: " + std::to_string(side)), side_(side) {}

    [[nodiscard]] Int side() const { return side_; }

  private:
    Int side_;
};

// One Fibonacci growth step: a verified w x h rectangle tiling gains a square
// of side max(w, h) flush against its longer edge, giving (w+h) x max(w, h).
// The tiling is oriented (transposing when needed, which keeps the origin
// square at the origin) so the new square always lands on the right.
// Throws DuplicateSideError when max(w, h) is already in the side set.
[[nodiscard]] Tiling fib_extend_rect(const Tiling& t);

// The 33 x 32 nine-square rectangle {1,4,7,8,9,10,14,15,18}, solved once.
[[nodiscard]] const Tiling& moron_tiling();

// A verified rectangle tiling whose side set has exactly k odd members,
// k >= 4: the 33 x 32 base extended step by step until the census matches.
[[nodiscard]] std::pair<SquareSet, Tiling> witness_for_odd_count(int k);

struct RectInfeasible {
    int odd_count = 0;
    int lemma = 0;  // catalog entry: 4 = one odd, 5 = two odds, 6 = three odds
};

struct RectWitness {
    SquareSet set;
    Tiling tiling;
    int odd_count = 0;
    // k = 0 is answered constructively (doubled 33 x 32) although the
    // catalog does not cover all-even sets; flagged so consumers know.
    bool beyond_catalog = false;
};

using RectVerdict = std::variant<RectInfeasible, RectWitness>;

// k in {1,2,3}: no set with exactly k odd sides tiles any rectangle (catalog
// entries 4/5/6). k >= 4: constructive witness. k = 0: flagged witness.
[[nodiscard]] RectVerdict rect_odd_count_verdict(int k);

}  // namespace sqtile
