#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/code_builder.hpp"

namespace lrc {

// For every position i and every j in [0, t), the positions sharing all
// coordinates with i except y_{j+1}.  Sets for one j have size d_{h_j} - 1,
// exclude i, and are pairwise disjoint across j.
struct RecoveryIndex {
    std::uint64_t t = 0;
    std::vector<std::uint64_t> set_sizes;       // locality r_j = d_{h_j} - 1
    std::vector<std::uint32_t> sets;            // flattened [i][j][0..r_j)
    std::vector<std::uint64_t> j_offsets;       // prefix sums of set_sizes

    std::span<const std::uint32_t> set(std::uint64_t pos, std::uint64_t j) const {
        std::uint64_t stride = j_offsets[t];
        return {sets.data() + pos * stride + j_offsets[j], set_sizes[j]};
    }
};

RecoveryIndex build_recovery_index(const EvaluationSet& eval,
                                   const std::vector<std::uint64_t>& map_degrees);
RecoveryIndex build_recovery_index(const LrcCode& code);

// A word with explicit per-position presence; zero is a legal symbol, so
// erasures are never encoded as a sentinel value.
struct ErasureWord {
    std::vector<std::uint32_t> symbols;
    std::vector<std::uint8_t> present;

    static ErasureWord complete(std::vector<std::uint32_t> syms);
    std::uint64_t erased_count() const;
};

// Repairs position pos using recovery set j: Lagrange interpolation of the
// degree <= d_{h_j}-2 polynomial through the set's (abscissa, symbol) pairs,
// evaluated at the erased position's abscissa.  All set positions must be
// present.
std::uint32_t recover(const EvaluationSet& eval, const RecoveryIndex& index,
                      const ErasureWord& word, std::uint64_t pos, std::uint64_t j);

struct RepairStep {
    std::uint32_t position;
    std::uint32_t set_used;  // j
};

struct RepairReport {
    ErasureWord word;                  // symbols after repair
    std::vector<RepairStep> repaired;  // in repair order
    std::vector<std::uint32_t> failed; // still erased
    bool complete() const { return failed.empty(); }
};

// Greedy scheduling: repeatedly repair any erased position that has some
// recovery set fully intact.  Unrepairable residue is reported, not thrown.
RepairReport recover_multi(const EvaluationSet& eval, const RecoveryIndex& index,
                           ErasureWord word);

}  // namespace lrc
