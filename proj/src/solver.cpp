#include "sqtile/solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace sqtile {

namespace {

constexpr Int kMaxWidth = 1'000'000;  // skyline array guard
constexpr std::size_t kMemoCap = 1u << 22;

struct BudgetHit {};

struct SkylineKey {
    std::uint64_t mask;
    std::vector<Int> heights;

    friend bool operator==(const SkylineKey&, const SkylineKey&) = default;
};

struct SkylineKeyHash {
    std::size_t operator()(const SkylineKey& k) const {
        std::uint64_t h = k.mask * 0x9e3779b97f4a7c15ULL;
        for (Int v : k.heights) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// Shared skeleton for decision search and enumeration. The filled area is
// always a union of full columns, so the frontier is a per-column height
// array; the square covering the lowest-leftmost empty cell must sit exactly
// there, which makes the search complete.
class CornerSearch {
  public:
    CornerSearch(Int w, Int h, std::uint64_t budget, std::uint64_t& nodes)
        : w_(w), h_(h), heights_(static_cast<std::size_t>(w), 0), budget_(budget), nodes_(nodes) {}

    Int w_;
    Int h_;
    std::vector<Int> heights_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    std::vector<Placement> placed_;
    std::uint64_t mask_ = 0;
    std::unordered_set<SkylineKey, SkylineKeyHash> dead_;

    // Lowest level, then leftmost column; run = columns at that level.
    bool frontier(Int& x, Int& y, Int& run) const {
        Int best = h_;
        std::size_t bx = heights_.size();
        for (std::size_t i = 0; i < heights_.size(); ++i) {
            if (heights_[i] < best) {
                best = heights_[i];
                bx = i;
            }
        }
        if (bx == heights_.size()) {
            return false;  // fully filled
        }
        std::size_t end = bx;
        while (end < heights_.size() && heights_[end] == best) {
            ++end;
        }
        x = static_cast<Int>(bx);
        y = best;
        run = static_cast<Int>(end - bx);
        return true;
    }

    void place(Int x, Int y, Int s) {
        placed_.push_back(Placement{x, y, s});
        for (Int i = x; i < x + s; ++i) {
            heights_[static_cast<std::size_t>(i)] += s;
        }
    }

    void unplace(Int x, Int s) {
        placed_.pop_back();
        for (Int i = x; i < x + s; ++i) {
            heights_[static_cast<std::size_t>(i)] -= s;
        }
    }

    void count_node() {
        if (++nodes_ > budget_) {
            throw BudgetHit{};
        }
    }

    bool is_dead() const { return dead_.contains(SkylineKey{mask_, heights_}); }

    void mark_dead() {
        if (dead_.size() < kMemoCap) {
            dead_.insert(SkylineKey{mask_, heights_});
        }
    }

    // The frontier run's bottom row is always partitioned exactly by bottom
    // edges of future squares (its side walls are strictly higher), so the
    // run length must be a sum of distinct unused sides that fit vertically.
    // On success the reachable-sum bitset is exported so candidate sides can
    // be screened: placing s at the run's left end needs run - s reachable.
    template <typename UnusedSides>
    bool run_fillable(Int run, Int v_space, std::uint64_t (&dp)[9],
                      UnusedSides&& for_each_unused) const {
        dp[0] = 1;
        for (std::size_t i = 1; i < 9; ++i) {
            dp[i] = 0;
        }
        if (run > 512) {
            for (auto& word : dp) {
                word = ~0ULL;  // beyond desk scale: treat every sum as reachable
            }
            return true;
        }
        const std::size_t words = static_cast<std::size_t>(run) / 64 + 1;
        for_each_unused([&](Int s) {
            if (s > run || s > v_space) {
                return;
            }
            const std::size_t word_shift = static_cast<std::size_t>(s) / 64;
            const unsigned bit_shift = static_cast<unsigned>(s) % 64;
            for (std::size_t i = words; i-- > word_shift;) {
                std::uint64_t v = dp[i - word_shift] << bit_shift;
                if (bit_shift != 0 && i > word_shift) {
                    v |= dp[i - word_shift - 1] >> (64 - bit_shift);
                }
                dp[i] |= v;
            }
        });
        return (dp[static_cast<std::size_t>(run) / 64] >>
                (static_cast<unsigned>(run) % 64)) & 1;
    }

    static bool dp_bit(const std::uint64_t (&dp)[9], Int v) {
        return ((dp[static_cast<std::size_t>(v) / 64] >> (static_cast<unsigned>(v) % 64)) & 1) !=
               0;
    }
};

void check_dims(Int w, Int h) {
    if (w < 1 || h < 1) {
        throw std::invalid_argument("rectangle dimensions must be positive");
    }
    if (w > kMaxWidth) {
        throw std::invalid_argument("rectangle width beyond supported bound");
    }
}

// Search over a fixed side set. Finds the first tiling in candidate order,
// or every tiling when collect_all is set (dead states are then only
// memoized when their subtree produced nothing).
class SetSolver : CornerSearch {
  public:
    SetSolver(std::vector<Int> sides, Int w, Int h, std::uint64_t budget, std::uint64_t& nodes)
        : CornerSearch(w, h, budget, nodes), sides_(std::move(sides)) {}

    std::optional<std::vector<Placement>> run() {
        if (dfs(nullptr)) {
            return placed_;
        }
        return std::nullopt;
    }

    // Exhaustive listing; prunes to the symmetry representative whose
    // bottom-left corner square is the largest of the four corner squares
    // (the caller canonicalizes, so one representative per orbit suffices).
    void run_all(std::vector<std::vector<Placement>>& out) {
        corner_pruning_ = true;
        dfs(&out);
    }

  private:
    std::vector<Int> sides_;  // ascending
    bool corner_pruning_ = false;

    // Squares crossing a column partition it vertically, so the space left
    // above a placed square must be a sum of distinct unused sides.
    bool column_gap_fillable(Int gap) const {
        if (gap == 0) {
            return true;
        }
        if (gap > 512) {
            return true;
        }
        std::uint64_t dp[9] = {1, 0, 0, 0, 0, 0, 0, 0, 0};
        const std::size_t words = static_cast<std::size_t>(gap) / 64 + 1;
        for (std::size_t idx = 0; idx < sides_.size(); ++idx) {
            Int s = sides_[idx];
            if ((mask_ & (1ULL << idx)) || s > gap) {
                continue;
            }
            const std::size_t ws = static_cast<std::size_t>(s) / 64;
            const unsigned bs = static_cast<unsigned>(s) % 64;
            for (std::size_t i = words; i-- > ws;) {
                std::uint64_t v = dp[i - ws] << bs;
                if (bs != 0 && i > ws) {
                    v |= dp[i - ws - 1] >> (64 - bs);
                }
                dp[i] |= v;
            }
        }
        return ((dp[static_cast<std::size_t>(gap) / 64] >>
                 (static_cast<unsigned>(gap) % 64)) & 1) != 0;
    }

    bool corner_allowed(Int x, Int y, Int s) const {
        if (!corner_pruning_ || placed_.empty()) {
            return true;
        }
        Int first = placed_.front().side;  // bottom-left corner square
        bool corner_br = (y == 0 && x + s == w_);
        bool corner_tl = (x == 0 && y + s == h_);
        bool corner_tr = (x + s == w_ && y + s == h_);
        if ((corner_br || corner_tl || corner_tr) && s > first) {
            return false;
        }
        return true;
    }

    bool dfs(std::vector<std::vector<Placement>>* all) {
        Int x = 0, y = 0, run = 0;
        if (!frontier(x, y, run)) {
            bool complete = mask_ == (1ULL << sides_.size()) - 1;
            if (complete && all != nullptr) {
                all->push_back(placed_);
            }
            return complete;
        }
        if (is_dead()) {
            return false;
        }
        std::uint64_t run_sums[9];
        bool fillable = run_fillable(run, h_ - y, run_sums, [&](auto&& visit) {
            for (std::size_t idx = 0; idx < sides_.size(); ++idx) {
                if (!(mask_ & (1ULL << idx))) {
                    visit(sides_[idx]);
                }
            }
        });
        if (!fillable) {
            mark_dead();
            return false;
        }
        Int cap = std::min(run, h_ - y);
        bool any = false;
        // Descending candidate order.
        for (std::size_t idx = sides_.size(); idx-- > 0;) {
            if (mask_ & (1ULL << idx)) {
                continue;
            }
            Int s = sides_[idx];
            if (s > cap) {
                continue;
            }
            // The rest of the run must stay reachable without s in hand;
            // dp includes s, so this is a necessary-condition screen. Only
            // meaningful (and only indexable) at desk-scale run lengths.
            if (run <= 512 && !dp_bit(run_sums, run - s)) {
                continue;
            }
            if (!corner_allowed(x, y, s)) {
                continue;
            }
            count_node();
            mask_ |= 1ULL << idx;
            if (column_gap_fillable(h_ - y - s)) {
                place(x, y, s);
                if (dfs(all)) {
                    any = true;
                    if (all == nullptr) {
                        mask_ &= ~(1ULL << idx);
                        return true;
                    }
                }
                unplace(x, s);
            }
            mask_ &= ~(1ULL << idx);
        }
        if (!any) {
            mark_dead();
        }
        return any;
    }
};

std::vector<Placement> sorted_by_position(std::vector<Placement> squares) {
    std::sort(squares.begin(), squares.end(), [](const Placement& a, const Placement& b) {
        return std::tie(a.y, a.x) < std::tie(b.y, b.x);
    });
    return squares;
}

// Dihedral transforms mapping a w x h tiling onto itself (w != h: 4 of them;
// w == h: all 8). Canonical form = least sorted placement list.
std::vector<Placement> canonical_placements(const std::vector<Placement>& squares, Int w, Int h) {
    std::vector<std::vector<Placement>> variants;
    auto add = [&](auto&& f) {
        std::vector<Placement> v;
        v.reserve(squares.size());
        for (const auto& p : squares) {
            v.push_back(f(p));
        }
        variants.push_back(sorted_by_position(std::move(v)));
    };
    add([&](const Placement& p) { return p; });
    add([&](const Placement& p) { return Placement{w - p.x - p.side, p.y, p.side}; });
    add([&](const Placement& p) { return Placement{p.x, h - p.y - p.side, p.side}; });
    add([&](const Placement& p) {
        return Placement{w - p.x - p.side, h - p.y - p.side, p.side};
    });
    if (w == h) {
        add([&](const Placement& p) { return Placement{p.y, p.x, p.side}; });
        add([&](const Placement& p) { return Placement{h - p.y - p.side, p.x, p.side}; });
        add([&](const Placement& p) { return Placement{p.y, w - p.x - p.side, p.side}; });
        add([&](const Placement& p) {
            return Placement{h - p.y - p.side, w - p.x - p.side, p.side};
        });
    }
    return *std::min_element(variants.begin(), variants.end());
}

}  // namespace

SquareSet make_square_set(std::vector<Int> sides) {
    if (sides.empty()) {
        throw std::invalid_argument("square set must be nonempty");
    }
    std::sort(sides.begin(), sides.end());
    for (std::size_t i = 0; i < sides.size(); ++i) {
        if (sides[i] < 1) {
            throw std::invalid_argument("square sides must be positive");
        }
        if (i > 0 && sides[i] == sides[i - 1]) {
            throw std::invalid_argument("square sides must be pairwise distinct");
        }
    }
    return SquareSet{std::move(sides)};
}

SolveResult solve(const SquareSet& set, Int w, Int h, const SolveOptions& options) {
    check_dims(w, h);
    SquareSet validated = make_square_set(set.sides);
    if (validated.sides.size() > 63) {
        throw std::invalid_argument("square set beyond supported size (63)");
    }

    SolveResult result;
    Int total = 0;
    for (Int s : validated.sides) {
        total = checked_add(total, checked_mul(s, s));
    }
    if (total != checked_mul(w, h)) {
        result.status = SolveStatus::area_mismatch;
        return result;
    }

    try {
        SetSolver solver(validated.sides, w, h, options.node_budget, result.nodes);
        if (auto placements = solver.run()) {
            result.status = SolveStatus::found;
            result.tiling = Tiling{RectRegion{w, h}, sorted_by_position(std::move(*placements))};
        } else {
            result.status = SolveStatus::no_solution;
        }
    } catch (const BudgetHit&) {
        result.status = SolveStatus::budget_exhausted;
    }
    return result;
}

namespace {

// Enumeration is side-set first: choose `order` distinct sides, keep sets
// whose squared sum factors as w*h with min(w, h) >= the largest side, and
// run the complete fixed-set search for every tiling. Each subset visit and
// each placement attempt draws from the shared node budget.
class SubsetEnumerator {
  public:
    SubsetEnumerator(int order, Int max_side, std::uint64_t budget, EnumerationResult& result)
        : order_(order), max_side_(max_side), budget_(budget), result_(result) {}

    void run() {
        chosen_.reserve(static_cast<std::size_t>(order_));
        choose(1, 0);
    }

  private:
    int order_;
    Int max_side_;
    std::uint64_t budget_;
    EnumerationResult& result_;
    std::vector<Int> chosen_;
    std::unordered_set<std::string> seen_;

    void choose(Int next, Int sum_sq) {
        if (static_cast<int>(chosen_.size()) == order_) {
            process_set(sum_sq);
            return;
        }
        Int remaining = order_ - static_cast<Int>(chosen_.size());
        for (Int s = next; s + remaining - 1 <= max_side_; ++s) {
            if (++result_.nodes > budget_) {
                throw BudgetHit{};
            }
            chosen_.push_back(s);
            choose(s + 1, sum_sq + s * s);
            chosen_.pop_back();
        }
    }

    void process_set(Int area) {
        Int largest = chosen_.back();
        Int total = 0;
        for (Int s : chosen_) {
            total += s;
        }
        // Every rectangle edge is partitioned by distinct sides from the set,
        // so both dimensions must be subset sums.
        std::vector<std::uint64_t> sums(static_cast<std::size_t>(total) / 64 + 1, 0);
        sums[0] = 1;
        for (Int s : chosen_) {
            for (std::size_t i = sums.size(); i-- > 0;) {
                std::uint64_t v = sums[i];
                if (v == 0) {
                    continue;
                }
                std::size_t ws = static_cast<std::size_t>(s) / 64;
                unsigned bs = static_cast<unsigned>(s) % 64;
                if (i + ws < sums.size()) {
                    sums[i + ws] |= v << bs;
                }
                if (bs != 0 && i + ws + 1 < sums.size()) {
                    sums[i + ws + 1] |= v >> (64 - bs);
                }
            }
        }
        auto is_sum = [&](Int v) {
            if (v < 0 || v > total) {
                return false;
            }
            return ((sums[static_cast<std::size_t>(v) / 64] >>
                     (static_cast<unsigned>(v) % 64)) & 1) != 0;
        };
        for (Int h = largest; h * h <= area; ++h) {
            if (area % h != 0) {
                continue;
            }
            Int w = area / h;
            if (!is_sum(w) || !is_sum(h)) {
                continue;
            }
            std::vector<std::vector<Placement>> found;
            SetSolver solver(chosen_, w, h, budget_, result_.nodes);
            solver.run_all(found);
            for (const auto& raw : found) {
                record(raw, w, h);
            }
        }
    }

    void record(const std::vector<Placement>& raw, Int w, Int h) {
        auto canon = canonical_placements(raw, w, h);
        std::ostringstream key;
        key << w << "x" << h;
        for (const auto& p : canon) {
            key << ";" << p.x << "," << p.y << "," << p.side;
        }
        if (!seen_.insert(key.str()).second) {
            return;
        }
        result_.rects.push_back(
            EnumeratedRect{make_square_set(chosen_), w, h, Tiling{RectRegion{w, h}, canon}});
    }
};

}  // namespace

EnumerationResult enumerate_perfect_rects(int order, Int max_side,
                                          const EnumerateOptions& options) {
    if (order < 1 || order > 63) {
        throw std::invalid_argument("order must be in [1, 63]");
    }
    if (max_side < 1 || max_side > 64) {
        throw std::invalid_argument("max_side must be in [1, 64]");
    }
    EnumerationResult result;
    if (order > max_side) {
        return result;  // not enough distinct sides
    }
    try {
        SubsetEnumerator enumerator(order, max_side, options.node_budget, result);
        enumerator.run();
    } catch (const BudgetHit&) {
        result.budget_exhausted = true;
    }
    // Deterministic output order: dimensions, then placement lists.
    std::sort(result.rects.begin(), result.rects.end(),
              [](const EnumeratedRect& a, const EnumeratedRect& b) {
                  return std::tie(a.w, a.h, a.tiling.squares) <
                         std::tie(b.w, b.h, b.tiling.squares);
              });
    return result;
}

std::string bouwkamp_text(const Tiling& t) {
    std::vector<Placement> squares = t.squares;
    std::sort(squares.begin(), squares.end(), [](const Placement& a, const Placement& b) {
        Int ta = a.y + a.side;
        Int tb = b.y + b.side;
        if (ta != tb) {
            return ta > tb;  // top row first
        }
        return a.x < b.x;
    });
    std::ostringstream out;
    std::size_t i = 0;
    while (i < squares.size()) {
        Int top = squares[i].y + squares[i].side;
        out << "(";
        bool first = true;
        while (i < squares.size() && squares[i].y + squares[i].side == top) {
            if (!first) {
                out << ",";
            }
            out << squares[i].side;
            first = false;
            ++i;
        }
        out << ")";
    }
    return out.str();
}

}  // namespace sqtile
