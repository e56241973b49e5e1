// Randomized soundness checks: certificates against deep brute-force
// intersection, and the verifier against a cell-by-cell oracle.

#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sqtile/disjoint.hpp"
#include "sqtile/verify.hpp"

using namespace sqtile;

namespace {

FibSeq random_seq(std::mt19937_64& rng) {
    FibSeq seq;
    seq.seed1 = static_cast<Int>(rng() % 200 + 1);
    seq.seed2 = static_cast<Int>(rng() % 200 + 1);
    seq.scale = static_cast<Int>(rng() % 30 + 1);
    if (rng() % 3 == 0) {
        std::size_t len = rng() % 6 + 1;
        Int v = static_cast<Int>(rng() % 8 + 1);
        for (std::size_t i = 0; i < len; ++i) {
            seq.prefix.push_back(v);
            v += static_cast<Int>(rng() % 9 + 1);
        }
    }
    return seq;
}

}  // namespace

TEST_CASE("certificates and counterexamples are sound on random families") {
    std::mt19937_64 rng(20240806);
    int proven = 0;
    int refuted = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t count = 2 + rng() % 3;
        std::vector<LabeledSeq> family;
        FibSeq base = random_seq(rng);
        for (std::size_t i = 0; i < count; ++i) {
            // Half the families are scaled copies of one base (adversarial for
            // the interleave detector), half are unrelated sequences.
            FibSeq seq = (rng() % 2 == 0) ? scale_seq(base, static_cast<Int>(rng() % 6 + 1))
                                          : random_seq(rng);
            family.push_back(LabeledSeq{"s" + std::to_string(i), seq});
        }
        Int horizon = static_cast<Int>(rng() % 12 + 4);
        auto result = pairwise_disjoint(family, horizon);

        std::vector<std::vector<Int>> deep;
        for (const auto& s : family) {
            // Materialize far beyond the horizon; stop short of overflow.
            std::size_t len = static_cast<std::size_t>(horizon) * 4 + 8;
            deep.push_back(terms(s.seq, len));
        }

        if (const auto* cert = std::get_if<DisjointnessCertificate>(&result)) {
            if (cert->valid()) {
                ++proven;
                CHECK_FALSE(test_oracle::smallest_shared_value(deep).has_value());
            }
        } else {
            ++refuted;
            const auto& ce = std::get<Counterexample>(result);
            bool in_i = false;
            bool in_j = false;
            for (Int v : deep[ce.seq_i]) {
                in_i = in_i || v == ce.value;
            }
            for (Int v : deep[ce.seq_j]) {
                in_j = in_j || v == ce.value;
            }
            CHECK(in_i);
            CHECK(in_j);
        }
    }
    // The sample must exercise both outcomes to mean anything.
    CHECK(proven > 30);
    CHECK(refuted > 30);
}

TEST_CASE("verifier agrees with a cell-by-cell oracle on random tilings") {
    std::mt19937_64 rng(20240807);
    int passes = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        bool windowed = rng() % 2 == 0;
        Int w = static_cast<Int>(rng() % 10 + 1);
        Int h = static_cast<Int>(rng() % 10 + 1);
        Tiling t;
        Box box{0, 0, w, h};
        if (windowed) {
            Int x0 = static_cast<Int>(rng() % 8) - 4;
            Int y0 = static_cast<Int>(rng() % 8) - 4;
            box = Box{x0, y0, x0 + w, y0 + h};
            t.region = WindowRegion{box.x0, box.y0, box.x1, box.y1};
        } else {
            t.region = RectRegion{w, h};
        }
        if (trial % 10 == 0) {
            // Seed genuine covers: one square over the whole box (windows may
            // protrude), occasionally nudged to stay exact.
            Int side = std::max(w, h) + (windowed ? static_cast<Int>(rng() % 3) : 0);
            if (!windowed && w != h) {
                side = std::max(w, h);  // leaves a gap: a near-miss fixture
            }
            t.squares.push_back(Placement{box.x0, box.y0, side});
        } else {
            std::size_t n = rng() % 5;
            for (std::size_t i = 0; i < n; ++i) {
                t.squares.push_back(Placement{box.x0 + static_cast<Int>(rng() % (w + 4)) - 2,
                                              box.y0 + static_cast<Int>(rng() % (h + 4)) - 2,
                                              static_cast<Int>(rng() % 6 + 1)});
            }
        }

        // Oracle: distinct sides, pairwise-disjoint cells, exact cover of the
        // box, and containment for rect regions.
        bool ok = true;
        std::set<Int> sides;
        for (const auto& p : t.squares) {
            ok = ok && sides.insert(p.side).second;
        }
        for (std::size_t i = 0; ok && i < t.squares.size(); ++i) {
            for (std::size_t j = i + 1; j < t.squares.size(); ++j) {
                Box a = placement_box(t.squares[i]);
                Box b = placement_box(t.squares[j]);
                if (boxes_intersect(a, b)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && !windowed) {
            for (const auto& p : t.squares) {
                ok = ok && box_contains(box, placement_box(p));
            }
        }
        if (ok) {
            ok = test_oracle::covered_cells_once(t.squares, box) == box.area();
        }

        auto report = verify(t);
        CHECK(report.passed == ok);
        if (ok) {
            ++passes;
        }
    }
    CHECK(passes > 5);  // random fixtures include genuine tilings
}
