#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/rational.hpp"

namespace lrc {

std::int64_t singleton_bound(std::int64_t n, std::int64_t k);

struct TamoBargBound {
    std::int64_t d_bound;
    BigRat rate_cap;
};
// d <= n - sum_{i=0}^t floor((k-1)/r^i) and R <= 1 / prod_{j=1}^t (1 + 1/(jr))
// for uniform locality r.
TamoBargBound tamo_barg(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t);
BigRat tamo_barg_rate_cap(std::int64_t r, std::int64_t t);

// d <= n - k + 1 - sum_{i=1}^t floor((k-1) / prod_{j<=i} r_j), localities
// taken in ascending order.  sorted_applied reports whether sorting changed
// the input order.
struct AscendingBound {
    std::int64_t d_bound;
    bool sorted_applied;
};
AscendingBound bhadane_thangaraj(std::int64_t n, std::int64_t k,
                                 std::vector<std::int64_t> localities);

// d <= n - k - ceil(((k-1)t + 1) / (1 + sum r_i)) + 2.
std::int64_t bmq(std::int64_t n, std::int64_t k, const std::vector<std::int64_t>& localities);

struct CodePoint {
    BigInt n, k, d;
    BigRat rate;
};
struct ReferenceConstructions {
    CodePoint product;  // [(r+1)^t, r^t, 2^t]
    CodePoint wang;     // [C(r+t,t), C(r+t,t)-C(r+t-1,t-1), t+1]
};
ReferenceConstructions reference_constructions(std::uint64_t r, std::uint64_t t);

// Defect of the length q^3-q availability-2 Hermitian code against the
// ascending-locality bound: q^2 - 2q, relative (q^2-2q)/(q^3-q).
std::pair<BigInt, BigRat> hermitian_defect(std::uint64_t q);

struct BoundReport {
    std::int64_t singleton;
    std::int64_t tamo_barg_d;     // with r = max locality
    std::int64_t bhadane_thangaraj;
    std::int64_t bmq;
    BigRat tb_rate_cap;
    BigRat product_rate;
    BigRat wang_rate;
    std::optional<std::int64_t> defect;       // selected bound minus exact d
    std::optional<BigRat> relative_defect;
};

// Builds all four bounds; the defect (when an exact distance is supplied)
// uses the ascending-locality bound, the one the comparison tables quote.
BoundReport bound_report(std::int64_t n, std::int64_t k,
                         const std::vector<std::int64_t>& localities,
                         std::optional<std::int64_t> exact_d = std::nullopt);

}  // namespace lrc
