// Acceptance suite: one check per shipping criterion, one PASS/FAIL line
// each, nonzero exit if anything fails. Time limits are wall-clock bounds
// for a release build on commodity hardware.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracle.hpp"
#include "sqtile/disjoint.hpp"
#include "sqtile/extend.hpp"
#include "sqtile/json_io.hpp"
#include "sqtile/plane.hpp"

using namespace sqtile;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
    if (!ok) {
        throw Failure(what);
    }
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<Int>& moron_sides() {
    static const std::vector<Int> sides{1, 4, 7, 8, 9, 10, 14, 15, 18};
    return sides;
}

// ---------------------------------------------------------------- criterion 1
void moron_reproduction() {
    auto start = Clock::now();
    auto result = solve(make_square_set(moron_sides()), 33, 32);
    double elapsed = seconds_since(start);
    check(result.status == SolveStatus::found, "33x32 did not solve");
    check(verify(*result.tiling).passed, "33x32 tiling failed verification");
    auto census = odd_census(*result.tiling);
    check(census.count == 4, "odd count != 4");
    check(census.sides == std::vector<Int>{1, 7, 9, 15}, "odd sides != {1,7,9,15}");
    check(elapsed < 1.0, "33x32 solve took " + std::to_string(elapsed) + "s (limit 1s)");
}

// ---------------------------------------------------------------- criterion 2
void doubled_set_reproduction() {
    std::vector<Int> doubled;
    for (Int s : moron_sides()) {
        doubled.push_back(2 * s);
    }
    check(doubled == std::vector<Int>{2, 8, 14, 16, 18, 20, 28, 30, 36},
          "doubled set mismatch");
    check(area_identity(doubled, 64, 66), "area identity 4224 = 64*66 failed");

    auto start = Clock::now();
    auto result = solve(make_square_set(doubled), 66, 64);
    double elapsed = seconds_since(start);
    check(result.status == SolveStatus::found, "66x64 did not solve");
    check(verify(*result.tiling).passed, "66x64 tiling failed verification");
    check(elapsed < 1.0, "66x64 solve took " + std::to_string(elapsed) + "s (limit 1s)");
}

// ---------------------------------------------------------------- criterion 3
void scaled_table_recomputation() {
    // Columns: the twelve leading terms of the block-extended sequence.
    // Rows as printed in the reference listing; two entries there are known
    // transcription errors, pinned below against the computed values.
    const Int printed[4][12] = {
        {46, 184, 322, 368, 414, 460, 644, 690, 828, 1472, 2990, 4462},
        {48, 192, 336, 384, 432, 480, 670, 720, 864, 1536, 3120, 4656},
        {50, 200, 350, 400, 450, 500, 700, 750, 900, 1600, 3250, 4850},
        {52, 208, 364, 416, 468, 520, 728, 780, 936, 1664, 3380, 5044},
    };
    const Int scales[4] = {23, 24, 25, 26};
    int deviations = 0;
    for (int r = 0; r < 4; ++r) {
        auto computed = terms(scale_seq(seq_a(), scales[r]), 12);
        for (int c = 0; c < 12; ++c) {
            if (computed[static_cast<std::size_t>(c)] != printed[r][c]) {
                ++deviations;
                check(scales[r] == 24 && c == 6, "unexpected table deviation");
                check(computed[static_cast<std::size_t>(c)] == 672 && printed[r][c] == 670,
                      "the 24x row deviation is not the known 672-vs-670 one");
            }
        }
    }
    check(deviations == 1, "expected exactly one table deviation (24*28)");

    // Restatement of the 23x row elsewhere in the reference listing: one
    // digit-swapped entry (1742 for the computed 1472).
    const Int restated_23[11] = {46, 184, 322, 368, 414, 460, 644, 690, 828, 1742, 2990};
    auto computed_23 = terms(scale_seq(seq_a(), 23), 11);
    int restated_deviations = 0;
    for (int c = 0; c < 11; ++c) {
        if (computed_23[static_cast<std::size_t>(c)] != restated_23[c]) {
            ++restated_deviations;
            check(c == 9 && computed_23[9] == 1472 && restated_23[9] == 1742,
                  "the restated-row deviation is not the known 1472-vs-1742 one");
        }
    }
    check(restated_deviations == 1, "expected exactly one restated-row deviation");
}

// ---------------------------------------------------------------- criterion 4
void disjointness_certificates() {
    std::vector<LabeledSeq> scaled{{"23A", scale_seq(seq_a(), 23)},
                                   {"24A", scale_seq(seq_a(), 24)},
                                   {"25A", scale_seq(seq_a(), 25)},
                                   {"26A", scale_seq(seq_a(), 26)}};
    auto first = pairwise_disjoint(scaled, 12);
    auto* cert1 = std::get_if<DisjointnessCertificate>(&first);
    check(cert1 != nullptr && cert1->valid(), "scaled family certificate invalid");
    check(cert1->onset == 9, "scaled family onset != 9");
    {
        std::vector<std::string> cycle;
        for (std::size_t idx : cert1->cycle_order) {
            cycle.push_back(cert1->sequences[idx]);
        }
        std::set<std::string> expect{"23A", "24A", "25A", "26A"};
        check(std::set<std::string>(cycle.begin(), cycle.end()) == expect,
              "scaled family cycle does not visit each sequence once");
    }

    std::vector<LabeledSeq> mixed{{"B", seq_b()},
                                  {"C", seq_c()},
                                  {"23A", scale_seq(seq_a(), 23)},
                                  {"24A", scale_seq(seq_a(), 24)}};
    auto second = pairwise_disjoint(mixed, 16);
    auto* cert2 = std::get_if<DisjointnessCertificate>(&second);
    check(cert2 != nullptr && cert2->valid(), "mixed family certificate invalid");
    check(cert2->onset <= 16, "mixed family onset > 16");
    // Cyclic order B -> 23A -> 24A -> C (checked up to rotation).
    {
        std::vector<std::string> cycle;
        for (std::size_t idx : cert2->cycle_order) {
            cycle.push_back(cert2->sequences[idx]);
        }
        bool match = false;
        std::vector<std::string> expected{"B", "23A", "24A", "C"};
        for (std::size_t r = 0; r < 4; ++r) {
            if (cycle == expected) {
                match = true;
            }
            std::rotate(expected.begin(), expected.begin() + 1, expected.end());
        }
        check(match, "mixed family cycle is not (B, 23A, 24A, C)");
    }

    for (const auto& family : {scaled, mixed}) {
        std::vector<std::vector<Int>> mats;
        for (const auto& s : family) {
            mats.push_back(terms(s.seq, 64));
        }
        check(!test_oracle::smallest_shared_value(mats).has_value(),
              "brute-force intersection found a collision in 64 terms");
    }
}

// ---------------------------------------------------------------- criterion 5
void witness_chain() {
    const std::pair<int, std::pair<Int, Int>> expected[] = {
        {4, {33, 32}}, {5, {65, 33}}, {6, {98, 65}}, {7, {261, 163}}};
    for (const auto& [k, dims] : expected) {
        auto [set, tiling] = witness_for_odd_count(k);
        const auto& rect = std::get<RectRegion>(tiling.region);
        check(rect.w == dims.first && rect.h == dims.second,
              "witness dims wrong for k=" + std::to_string(k));
        check(verify(tiling).passed, "witness failed verification for k=" + std::to_string(k));
        check(odd_census(tiling).count == static_cast<std::size_t>(k),
              "witness odd count wrong for k=" + std::to_string(k));
    }

    Tiling t = witness_for_odd_count(6).second;
    for (int step = 0; step < 30; ++step) {
        const auto& rect = std::get<RectRegion>(t.region);
        Int appended = std::max(rect.w, rect.h);
        bool expect_even = (step % 3 == 0);
        check((appended % 2 == 0) == expect_even,
              "appended-side parity breaks the (odd, odd, even) pattern at step " +
                  std::to_string(step));
        t = fib_extend_rect(t);
    }
    check(verify(t).passed, "30-step extension failed verification");
}

// ---------------------------------------------------------------- criterion 6
void impossibility_consistency() {
    auto start = Clock::now();
    std::mt19937_64 rng(20240805);
    int rect_instances = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int odd_count = 1 + trial % 3;
        std::set<Int> sides;
        while (static_cast<int>(sides.size()) < odd_count) {
            sides.insert(static_cast<Int>(rng() % 12) * 2 + 1);  // odd, <= 23
        }
        // A lone odd square tiles its own bounding square, so the sets here
        // always have at least two members.
        std::size_t min_total = static_cast<std::size_t>(odd_count == 1 ? 2 : odd_count);
        std::size_t total = min_total + rng() % (8 - min_total);
        while (sides.size() < total) {
            sides.insert((static_cast<Int>(rng() % 12) + 1) * 2);  // even, <= 24
        }
        std::vector<Int> list(sides.begin(), sides.end());
        Int area = 0;
        for (Int s : list) {
            area += s * s;
        }
        Int largest = *sides.rbegin();
        for (Int h = largest; h * h <= area; ++h) {
            if (area % h != 0) {
                continue;
            }
            auto result = solve(make_square_set(list), area / h, h);
            check(result.status == SolveStatus::no_solution,
                  "a set with 1-3 odd sides tiled a rectangle (or hit the budget)");
            ++rect_instances;
        }
    }
    double elapsed = seconds_since(start);
    check(rect_instances > 50, "random sample exercised too few rectangles");
    check(elapsed < 60.0,
          "impossibility sweep took " + std::to_string(elapsed) + "s (limit 60s)");
}

// ---------------------------------------------------------------- criterion 7
void pinwheel_window() {
    auto start = Clock::now();
    Tiling patch = pinwheel_patch(9, Region{WindowRegion{-3000, -3000, 3000, 3000}});
    auto report = verify(patch);
    double elapsed = seconds_since(start);
    check(report.passed, "pinwheel window failed verification");
    check(report.odd_sides == std::vector<Int>{9}, "pinwheel odd sides != {9}");
    check(elapsed < 5.0, "pinwheel took " + std::to_string(elapsed) + "s (limit 5s)");
}

// ---------------------------------------------------------------- criterion 8
void three_odds_window() {
    auto start = Clock::now();
    Tiling patch = three_odds_patch(Region{WindowRegion{-2000, -2000, 2000, 2000}});
    auto report = verify(patch);
    double elapsed = seconds_since(start);
    check(report.passed, "three-odds window failed verification");
    check(report.odd_sides == std::vector<Int>{3, 5, 11}, "odd sides != {3,5,11}");
    check(elapsed < 5.0, "three-odds took " + std::to_string(elapsed) + "s (limit 5s)");
}

// ---------------------------------------------------------------- criterion 9
void verdict_catalog() {
    check(plane_odd_count_verdict(1).feasibility == PlaneFeasibility::possible,
          "plane k=1 not possible");
    check(plane_odd_count_verdict(2).feasibility == PlaneFeasibility::impossible,
          "plane k=2 not impossible");
    check(plane_odd_count_verdict(3).feasibility == PlaneFeasibility::possible,
          "plane k=3 not possible");
    for (int k : {0, 4, 5, 6, 19}) {
        check(plane_odd_count_verdict(k).feasibility == PlaneFeasibility::unknown,
              "plane k=" + std::to_string(k) + " not unknown");
    }

    for (int k = 1; k <= 3; ++k) {
        auto verdict = rect_odd_count_verdict(k);
        auto* infeasible = std::get_if<RectInfeasible>(&verdict);
        check(infeasible != nullptr && infeasible->lemma == 3 + k,
              "rect k=" + std::to_string(k) + " verdict wrong");
    }
    for (int k = 4; k <= 20; ++k) {
        auto verdict = rect_odd_count_verdict(k);
        auto* witness = std::get_if<RectWitness>(&verdict);
        check(witness != nullptr, "rect k=" + std::to_string(k) + " has no witness");
        check(verify(witness->tiling).passed,
              "rect witness failed verification for k=" + std::to_string(k));
        check(odd_census(witness->tiling).count == static_cast<std::size_t>(k),
              "rect witness odd count wrong for k=" + std::to_string(k));
    }
}

// --------------------------------------------------------------- criterion 10
void mutation_suite() {
    std::vector<Tiling> bases;
    bases.push_back(moron_tiling());
    bases.push_back(whirl_base_tiling());
    bases.push_back(witness_for_odd_count(6).second);
    bases.push_back(scale_tiling(moron_tiling(), 3));

    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        Tiling t = bases[rng() % bases.size()];
        std::size_t victim = rng() % t.squares.size();
        switch (rng() % 3) {
            case 0: {  // translate
                Int dx = (rng() % 2 == 0) ? 1 : 0;
                Int dy = dx == 1 ? 0 : 1;
                t.squares[victim].x += dx;
                t.squares[victim].y += dy;
                break;
            }
            case 1:  // delete
                t.squares.erase(t.squares.begin() + static_cast<std::ptrdiff_t>(victim));
                break;
            default:  // resize
                t.squares[victim].side += (t.squares[victim].side > 1 && rng() % 2 == 0) ? -1 : 1;
                break;
        }
        auto report = verify(t);
        check(!report.passed, "mutation left the tiling passing");
        check(report.violation.has_value(), "failing report carries no violation");

        // The named violation must really hold for the mutated tiling.
        const auto& violation = *report.violation;
        if (const auto* overlap = std::get_if<OverlapViolation>(&violation)) {
            check(boxes_intersect(placement_box(t.squares[overlap->first]),
                                  placement_box(t.squares[overlap->second])),
                  "reported overlap pair does not intersect");
        } else if (const auto* gap = std::get_if<GapViolation>(&violation)) {
            Box cell{gap->x, gap->y, gap->x + 1, gap->y + 1};
            check(box_contains(region_box(t.region), cell), "gap witness outside region");
            check(test_oracle::covered_cells_once(t.squares, cell) == 0,
                  "gap witness is actually covered");
        } else if (const auto* dup = std::get_if<DuplicateSideViolation>(&violation)) {
            int times = 0;
            for (const auto& p : t.squares) {
                if (p.side == dup->side) {
                    ++times;
                }
            }
            check(times >= 2, "reported duplicate side is unique");
        } else {
            const auto& out = std::get<OutOfRegionViolation>(violation);
            check(!box_contains(region_box(t.region), placement_box(t.squares[out.index])),
                  "reported out-of-region square is inside");
        }
    }
}

// --------------------------------------------------------------- criterion 11
void enumeration_sanity() {
    auto result = enumerate_perfect_rects(9, 18);
    check(!result.budget_exhausted, "enumeration blew the default node budget");
    bool found = false;
    for (const auto& rect : result.rects) {
        if (rect.w == 33 && rect.h == 32 &&
            rect.set.sides == std::vector<Int>{1, 4, 7, 8, 9, 10, 14, 15, 18}) {
            check(verify(rect.tiling).passed, "enumerated 33x32 failed verification");
            found = true;
        }
    }
    check(found, "order-9 enumeration did not find the 33x32 rectangle");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"1  solver reproduces the 33x32 nine-square rectangle (< 1 s)", moron_reproduction},
        {"2  solver reproduces the doubled-set 66x64 rectangle (< 1 s)",
         doubled_set_reproduction},
        {"3  scaled-sequence table recomputation flags the two known typos",
         scaled_table_recomputation},
        {"4  disjointness certificates for both sequence families + brute check",
         disjointness_certificates},
        {"5  witness chain k=4..7 and the (odd, odd, even) extension pattern", witness_chain},
        {"6  1-3 odd sides never tile an area-compatible rectangle (200 sets, < 60 s)",
         impossibility_consistency},
        {"7  pinwheel patch on [-3000,3000]^2 verifies with one odd side (< 5 s)",
         pinwheel_window},
        {"8  three-odds patch on [-2000,2000]^2 verifies with odds {3,5,11} (< 5 s)",
         three_odds_window},
        {"9  verdict catalog: plane k=1/2/3 and rect k=1..20", verdict_catalog},
        {"10 mutation suite: 100 corrupted tilings each fail with a true violation",
         mutation_suite},
        {"11 enumeration at order 9, max side 18 finds the 33x32 rectangle",
         enumeration_sanity},
    };

    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        auto start = Clock::now();
        try {
            fn();
            std::cout << "PASS  " << name << "  [" << static_cast<int>(seconds_since(start) * 1000)
                      << " ms]\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  " << name << "  -- " << e.what() << "\n";
        }
    }
    if (failures > 0) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
