#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sqtile/ints.hpp"

namespace sqtile {

// Integer sequence: an optional prefix block, then seed1, seed2 and their
// Fibonacci continuation, all multiplied by `scale`. The prefix terms need
// not satisfy the recurrence; everything after the prefix does.
struct FibSeq {
    Int seed1 = 1;
    Int seed2 = 1;
    Int scale = 1;
    std::vector<Int> prefix;

    // First index n with terms[n] == terms[n-1] + terms[n-2] for all m >= n.
    [[nodiscard]] std::size_t recurrence_start() const { return prefix.size() + 2; }

    friend bool operator==(const FibSeq&, const FibSeq&) = default;
};

// First n materialized terms (scaled). Throws IntOverflowError when the
// continuation leaves the 64-bit range.
[[nodiscard]] std::vector<Int> terms(const FibSeq& seq, std::size_t n);

[[nodiscard]] Int term_at(const FibSeq& seq, std::size_t index);

// Every term multiplied by k; recurrence structure preserved.
[[nodiscard]] FibSeq scale_seq(const FibSeq& seq, Int k);

// The nine-term block 2, 8, 14, 16, 18, 20, 28, 30, 36.
[[nodiscard]] const std::vector<Int>& base_prefix();

// Built-in sequences: A continues the block above with seeds 64, 130;
// B and C are the pure recurrences from (14, 20) and (16, 24).
[[nodiscard]] FibSeq seq_a();
[[nodiscard]] FibSeq seq_b();
[[nodiscard]] FibSeq seq_c();

// CLI mini-grammar, e.g. "fib(14,20)", "23*fib(64,130;prefix=2,8,14,16,18,20,28,30,36)",
// and the shorthand names A, B, C (optionally scaled: "24*A").
[[nodiscard]] FibSeq parse_seq_spec(std::string_view spec);

[[nodiscard]] std::string seq_spec_string(const FibSeq& seq);

}  // namespace sqtile
