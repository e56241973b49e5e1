#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "sqtile/disjoint.hpp"

using namespace sqtile;

namespace {

std::vector<LabeledSeq> scaled_family() {
    return {{"23A", scale_seq(seq_a(), 23)},
            {"24A", scale_seq(seq_a(), 24)},
            {"25A", scale_seq(seq_a(), 25)},
            {"26A", scale_seq(seq_a(), 26)}};
}

std::vector<LabeledSeq> mixed_family() {
    return {{"B", seq_b()},
            {"C", seq_c()},
            {"23A", scale_seq(seq_a(), 23)},
            {"24A", scale_seq(seq_a(), 24)}};
}

// Cyclic equality of the certified order.
bool cycle_is(const DisjointnessCertificate& cert, std::vector<std::string> expected) {
    std::vector<std::string> got;
    got.reserve(cert.cycle_order.size());
    for (std::size_t idx : cert.cycle_order) {
        got.push_back(cert.sequences[idx]);
    }
    if (got.size() != expected.size()) {
        return false;
    }
    for (std::size_t r = 0; r < got.size(); ++r) {
        if (got == expected) {
            return true;
        }
        std::rotate(expected.begin(), expected.begin() + 1, expected.end());
    }
    return false;
}

}  // namespace

TEST_CASE("four scaled copies stay interleaved forever") {
    auto result = pairwise_disjoint(scaled_family(), 12);
    auto* cert = std::get_if<DisjointnessCertificate>(&result);
    REQUIRE(cert != nullptr);
    CHECK(cert->valid());
    CHECK(cert->prefix_check);
    CHECK(cert->tail_proven);
    CHECK(cert->onset == 9);
    CHECK(cycle_is(*cert, {"23A", "24A", "25A", "26A"}));
    for (Int off : cert->cycle_offsets) {
        CHECK(off >= 0);
        CHECK(off <= 1);
    }
    for (const auto& check : cert->base_checks) {
        CHECK(check.lhs_value < check.rhs_value);
    }
}

TEST_CASE("certified families survive a deep brute-force intersection") {
    for (auto family : {scaled_family(), mixed_family()}) {
        auto result = pairwise_disjoint(family, 16);
        REQUIRE(std::holds_alternative<DisjointnessCertificate>(result));
        std::vector<std::vector<Int>> materialized;
        for (const auto& s : family) {
            materialized.push_back(terms(s.seq, 64));
        }
        CHECK_FALSE(test_oracle::smallest_shared_value(materialized).has_value());
    }
}

TEST_CASE("the mixed family interleaves with index offsets") {
    auto result = pairwise_disjoint(mixed_family(), 16);
    auto* cert = std::get_if<DisjointnessCertificate>(&result);
    REQUIRE(cert != nullptr);
    CHECK(cert->valid());
    CHECK(cert->onset <= 16);
    CHECK(cycle_is(*cert, {"B", "23A", "24A", "C"}));
}

TEST_CASE("a scaled copy sharing terms is refuted with the smallest witness") {
    std::vector<LabeledSeq> family{{"A", seq_a()}, {"2A", scale_seq(seq_a(), 2)}};
    auto result = pairwise_disjoint(family, 16);
    auto* ce = std::get_if<Counterexample>(&result);
    REQUIRE(ce != nullptr);
    CHECK(ce->value == 16);
    CHECK(((ce->seq_i == 0 && ce->seq_j == 1) || (ce->seq_i == 1 && ce->seq_j == 0)));
}

TEST_CASE("tail induction persists for fifty further cycles") {
    auto result = pairwise_disjoint(mixed_family(), 16);
    auto* cert = std::get_if<DisjointnessCertificate>(&result);
    REQUIRE(cert != nullptr);
    REQUIRE(cert->tail_proven);

    auto family = mixed_family();
    std::vector<std::vector<Int>> mats;
    for (const auto& s : family) {
        mats.push_back(terms(s.seq, 80));
    }
    const auto& order = cert->cycle_order;
    const auto& off = cert->cycle_offsets;
    for (Int n = cert->onset; n + 2 + *std::max_element(off.begin(), off.end()) < 78; ++n) {
        for (std::size_t k = 0; k + 1 < order.size(); ++k) {
            Int lhs = mats[order[k]][static_cast<std::size_t>(n + off[k])];
            Int rhs = mats[order[k + 1]][static_cast<std::size_t>(n + off[k + 1])];
            CHECK(lhs < rhs);
        }
        Int last = mats[order.back()][static_cast<std::size_t>(n + off.back())];
        Int wrap = mats[order.front()][static_cast<std::size_t>(n + 1 + off.front())];
        CHECK(last < wrap);
    }
}

TEST_CASE("sequences without a provable tail still get the finite check") {
    // Same growth constant and no collisions in range, but no clean interleave:
    // identical sequences shifted by a non-recurrence prefix.
    std::vector<LabeledSeq> family{{"P", FibSeq{5, 9, 1, {3}}}, {"Q", FibSeq{6, 9, 1, {}}}};
    auto result = pairwise_disjoint(family, 8);
    if (auto* cert = std::get_if<DisjointnessCertificate>(&result)) {
        CHECK(cert->prefix_check);
    }
}

TEST_CASE("pairwise_disjoint validates its inputs") {
    CHECK_THROWS_AS(pairwise_disjoint({{"A", seq_a()}}, 12), std::invalid_argument);
    CHECK_THROWS_AS(pairwise_disjoint(scaled_family(), 1), std::invalid_argument);
}

TEST_CASE("golden ratio filter on the listed examples") {
    CHECK(golden_ratio_filter(std::vector<Int>{1, 2}) == 0);
    CHECK_FALSE(golden_ratio_filter(std::vector<Int>{4, 6, 9}).has_value());
    CHECK(golden_ratio_filter(std::vector<Int>{13, 21, 34}) == 1);
    CHECK_FALSE(golden_ratio_filter(std::vector<Int>{42}).has_value());
    CHECK_THROWS_AS(golden_ratio_filter(std::vector<Int>{3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(golden_ratio_filter(std::vector<Int>{5, 4}), std::invalid_argument);
    CHECK_THROWS_AS(golden_ratio_filter(std::vector<Int>{0, 4}), std::invalid_argument);
}

TEST_CASE("filter index is the first ratio beyond the threshold") {
    auto idx = golden_ratio_filter(std::vector<Int>{1, 2, 3, 5, 8, 13});
    CHECK(idx == 0);  // the doubling step; later ratios alternate around the bound
    auto none = golden_ratio_filter(std::vector<Int>{10, 16, 25, 40});
    CHECK_FALSE(none.has_value());  // 1.6, 1.5625, 1.6 all stay below
}
