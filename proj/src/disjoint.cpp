#include "sqtile/disjoint.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sqtile {

namespace {

struct Entry {
    Int value;
    std::size_t seq;
    std::size_t index;
};

std::string offset_expr(Int offset) {
    std::ostringstream out;
    out << "(n";
    if (offset > 0) {
        out << "+" << offset;
    } else if (offset < 0) {
        out << offset;
    }
    out << ")";
    return out.str();
}

IneqCheck make_check(const std::vector<LabeledSeq>& seqs,
                     const std::vector<std::vector<Int>>& mats, std::size_t si, Int ii,
                     std::size_t sj, Int ij) {
    return IneqCheck{seqs[si].label,
                     ii,
                     mats[si][static_cast<std::size_t>(ii)],
                     seqs[sj].label,
                     ij,
                     mats[sj][static_cast<std::size_t>(ij)]};
}

// Chain for cycle n: value(order[0], n+off[0]) < ... < value(order[m-1], n+off[m-1])
// and the wrap link value(order[m-1], n+off[m-1]) < value(order[0], n+1+off[0]).
bool cycle_chain_holds(const std::vector<std::vector<Int>>& mats,
                       const std::vector<std::size_t>& order, const std::vector<Int>& off, Int n) {
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        Int a = mats[order[k]][static_cast<std::size_t>(n + off[k])];
        Int b = mats[order[k + 1]][static_cast<std::size_t>(n + off[k + 1])];
        if (!(a < b)) {
            return false;
        }
    }
    Int last = mats[order.back()][static_cast<std::size_t>(n + off.back())];
    Int wrap = mats[order.front()][static_cast<std::size_t>(n + 1 + off.front())];
    return last < wrap;
}

}  // namespace

DisjointnessResult pairwise_disjoint(const std::vector<LabeledSeq>& seqs, Int horizon) {
    const std::size_t m = seqs.size();
    if (m < 2) {
        throw std::invalid_argument("pairwise_disjoint requires at least two sequences");
    }
    if (horizon < 2) {
        throw std::invalid_argument("pairwise_disjoint requires horizon >= 2");
    }

    const std::size_t len = static_cast<std::size_t>(horizon) + 3;
    std::vector<std::vector<Int>> mats;
    mats.reserve(m);
    for (const auto& s : seqs) {
        mats.push_back(terms(s.seq, len));
    }

    // Finite check over everything materialized: report the smallest value
    // appearing in two different sequences.
    {
        std::map<Int, std::pair<std::size_t, std::size_t>> seen;  // value -> (seq, index)
        std::optional<Counterexample> best;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < len; ++k) {
                Int v = mats[i][k];
                auto it = seen.find(v);
                if (it != seen.end() && it->second.first != i) {
                    if (!best || v < best->value) {
                        best = Counterexample{v, it->second.first, i};
                    }
                } else {
                    seen.emplace(v, std::make_pair(i, k));
                }
            }
        }
        if (best) {
            return *best;
        }
    }

    DisjointnessCertificate cert;
    for (const auto& s : seqs) {
        cert.sequences.push_back(s.label);
    }
    cert.horizon = horizon;
    cert.prefix_check = true;

    // Sequences must be strictly ascending for any tail argument.
    for (const auto& mat : mats) {
        for (std::size_t k = 1; k < mat.size(); ++k) {
            if (mat[k] <= mat[k - 1]) {
                return cert;  // tail unproven
            }
        }
    }

    // Steady cyclic order, read off the merged tail below the smallest final
    // term (beyond that value the merge is ragged because the sequences stop
    // at the same index, not the same magnitude).
    std::vector<Entry> merged;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < len; ++k) {
            merged.push_back(Entry{mats[i][k], i, k});
        }
    }
    std::sort(merged.begin(), merged.end(),
              [](const Entry& a, const Entry& b) { return a.value < b.value; });
    Int cutoff = mats[0].back();
    for (const auto& mat : mats) {
        cutoff = std::min(cutoff, mat.back());
    }
    std::vector<Entry> bounded;
    for (const auto& e : merged) {
        if (e.value <= cutoff) {
            bounded.push_back(e);
        }
    }
    if (bounded.size() < 2 * m) {
        return cert;
    }

    // Last m bounded entries give the candidate cycle; the m before them must
    // repeat the same sequence order with every index one lower.
    std::vector<Entry> last(bounded.end() - static_cast<std::ptrdiff_t>(m), bounded.end());
    std::vector<Entry> prev(bounded.end() - static_cast<std::ptrdiff_t>(2 * m),
                            bounded.end() - static_cast<std::ptrdiff_t>(m));
    for (std::size_t k = 0; k < m; ++k) {
        if (prev[k].seq != last[k].seq || prev[k].index + 1 != last[k].index) {
            return cert;
        }
    }
    std::vector<bool> present(m, false);
    for (const auto& e : last) {
        if (present[e.seq]) {
            return cert;
        }
        present[e.seq] = true;
    }

    std::vector<std::size_t> order;
    std::vector<Int> off;
    const Int anchor = static_cast<Int>(last.front().index);
    for (const auto& e : last) {
        order.push_back(e.seq);
        off.push_back(static_cast<Int>(e.index) - anchor);
    }

    // Smallest onset n0 satisfying:
    //  - the chain holds at every materialized cycle from n0 on,
    //  - induction only uses indices past each sequence's recurrence start,
    //  - the chain coverage connects to the finite check without a hole.
    const Int top_cycle = anchor;  // cycles n0..top_cycle are materialized
    Int min_n0 = 0;
    for (std::size_t k = 0; k < m; ++k) {
        Int rec = static_cast<Int>(seqs[order[k]].seq.recurrence_start());
        min_n0 = std::max(min_n0, rec - 2 - off[k]);
        min_n0 = std::max(min_n0, -off[k]);
    }
    std::optional<Int> onset;
    for (Int n0 = min_n0; n0 + 1 <= top_cycle; ++n0) {
        bool hole = false;
        for (std::size_t k = 0; k < m; ++k) {
            if (n0 + off[k] > horizon + 1) {
                hole = true;
                break;
            }
        }
        if (hole) {
            continue;
        }
        bool all = true;
        for (Int n = n0; n + 1 <= top_cycle; ++n) {
            if (!cycle_chain_holds(mats, order, off, n)) {
                all = false;
                break;
            }
        }
        if (all) {
            onset = n0;
            break;
        }
    }
    if (!onset) {
        return cert;
    }

    // Terms below each sequence's chain start are only covered by the finite
    // check; they must sit below every unmaterialized value. Unmaterialized
    // terms exceed their sequence's final materialized term, so it suffices
    // that the largest pre-chain term is at most the smallest final term.
    Int max_prechain = 0;
    for (std::size_t k = 0; k < m; ++k) {
        Int start = *onset + off[k];
        if (start >= 1) {
            max_prechain =
                std::max(max_prechain, mats[order[k]][static_cast<std::size_t>(start - 1)]);
        }
    }
    Int min_final = mats[0].back();
    for (const auto& mat : mats) {
        min_final = std::min(min_final, mat.back());
    }
    if (max_prechain > min_final) {
        return cert;
    }

    cert.tail_proven = true;
    cert.onset = *onset;
    cert.cycle_order = order;
    cert.cycle_offsets = off;

    for (Int n = *onset; n <= *onset + 1; ++n) {
        for (std::size_t k = 0; k + 1 < m; ++k) {
            cert.base_checks.push_back(
                make_check(seqs, mats, order[k], n + off[k], order[k + 1], n + off[k + 1]));
        }
        cert.base_checks.push_back(
            make_check(seqs, mats, order.back(), n + off.back(), order.front(), n + 1 + off.front()));
    }

    std::ostringstream rule;
    for (std::size_t k = 0; k < m; ++k) {
        rule << seqs[order[k]].label << offset_expr(off[k]) << " < ";
    }
    rule << seqs[order.front()].label << offset_expr(off.front() + 1);
    rule << " for n >= " << *onset;
    cert.tail_rule = rule.str();

    return cert;
}

std::optional<std::size_t> golden_ratio_filter(std::span<const Int> sides) {
    for (std::size_t i = 0; i < sides.size(); ++i) {
        if (sides[i] < 1) {
            throw std::invalid_argument("golden_ratio_filter requires positive sides");
        }
        if (i > 0 && sides[i] <= sides[i - 1]) {
            throw std::invalid_argument("golden_ratio_filter requires strictly ascending input");
        }
    }
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
        if (ratio_exceeds_golden(sides[i], sides[i + 1])) {
            return i;
        }
    }
    return std::nullopt;
}

}  // namespace sqtile
