#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lrc/curves.hpp"

namespace lrc {

// Exponent tuples (j, e_1, ..., e_t) with 0 <= j <= l and 0 <= e_i <= d_{h_i}-2,
// in lexicographic order (j major, e_t fastest).  The first tuple is all zeros,
// so the first generator row is the all-ones word.
struct MonomialBasis {
    std::uint64_t l = 0;
    std::vector<std::uint64_t> caps;              // d_{h_i} - 2
    std::vector<std::vector<std::uint64_t>> tuples;

    static MonomialBasis build(const FamilyShape& shape, std::uint64_t l);
    std::uint64_t size() const { return tuples.size(); }
};

struct CodeParams {
    std::uint64_t n = 0, k = 0;
    std::int64_t d_lower = 0;       // clamped to >= 1
    std::int64_t d_lower_raw = 0;   // the construction bound itself
    std::vector<std::uint64_t> localities;
    BigRat rate;
};

// A built evaluation code: the ordered point set, the monomial basis, and the
// generator matrix (row r = evaluations of monomial r over B).  Immutable.
struct LrcCode {
    std::shared_ptr<const FiberProduct> fiber;
    EvaluationSet eval;
    MonomialBasis basis;
    std::vector<std::uint32_t> G;  // k x n, row major
    CodeParams params;

    const Field& field() const { return fiber->field(); }
    std::span<const std::uint32_t> row(std::uint64_t r) const {
        return {G.data() + r * params.n, params.n};
    }
};

// Assembles the generator matrix and verifies rank == basis size (the
// evaluation map must be injective).  Throws LTooLarge when l >= |S|.
LrcCode build_code(std::shared_ptr<const FiberProduct> fiber, std::uint64_t l,
                   const std::function<bool(std::uint64_t)>& filter = nullptr,
                   unsigned jobs = 1);

// message * G over the field; message length must equal k.
std::vector<std::uint32_t> encode(const LrcCode& code, std::span<const std::uint32_t> message);
std::vector<FieldElement> encode(const LrcCode& code, const std::vector<FieldElement>& message);

// Row rank by Gaussian elimination (destroys its working copy).
std::uint64_t matrix_rank(const Field& f, std::vector<std::uint32_t> m, std::uint64_t rows,
                          std::uint64_t cols);

std::uint64_t codeword_weight(std::span<const std::uint32_t> word);

}  // namespace lrc
