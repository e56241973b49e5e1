#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sqtile/fibseq.hpp"

namespace sqtile {

struct LabeledSeq {
    std::string label;
    FibSeq seq;
};

// One verified strict inequality between two materialized terms.
struct IneqCheck {
    std::string lhs_label;
    Int lhs_index = 0;
    Int lhs_value = 0;
    std::string rhs_label;
    Int rhs_index = 0;
    Int rhs_value = 0;
};

// Disjointness certificate: a finite pairwise-distinctness check over all
// terms up to `horizon`, plus an inductive interleaving order on the tails.
//
// The tail order is a cycle visiting each sequence once per index step; the
// position of sequence j inside cycle n is term index n + cycle_offsets[j].
// If the full chain holds at cycles n0 and n0+1 and every sequence obeys the
// recurrence from there on, adding consecutive inequalities pushes the chain
// to every later cycle, so the tails stay strictly interleaved forever.
struct DisjointnessCertificate {
    std::vector<std::string> sequences;
    Int horizon = 0;       // last 0-based index covered by the finite check
    bool prefix_check = false;
    bool tail_proven = false;
    Int onset = -1;        // n0: first cycle of the proven interleave
    std::vector<std::size_t> cycle_order;  // sequence positions in ascending value order
    std::vector<Int> cycle_offsets;        // parallel to cycle_order
    std::vector<IneqCheck> base_checks;    // chain at cycles n0 and n0+1
    std::string tail_rule;                 // human-readable chain statement

    [[nodiscard]] bool valid() const { return prefix_check && tail_proven; }
};

struct Counterexample {
    Int value = 0;
    std::size_t seq_i = 0;
    std::size_t seq_j = 0;
};

using DisjointnessResult = std::variant<DisjointnessCertificate, Counterexample>;

// Certifies that the materialized sequences share no value, or returns the
// smallest shared value. Requires >= 2 sequences and horizon >= 2. When no
// persistent interleave can be established the certificate is returned with
// tail_proven = false (finite check only).
[[nodiscard]] DisjointnessResult pairwise_disjoint(const std::vector<LabeledSeq>& seqs,
                                                   Int horizon);

// Smallest index i with sides[i+1]/sides[i] > (1+sqrt(5))/2, or nullopt.
// Input must be strictly ascending and positive; comparison is exact.
[[nodiscard]] std::optional<std::size_t> golden_ratio_filter(std::span<const Int> sides);

}  // namespace sqtile
