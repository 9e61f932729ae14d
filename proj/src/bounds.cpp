#include "lrc/bounds.hpp"

#include <algorithm>

#include "lrc/errors.hpp"

namespace lrc {

namespace {
void check_nk(std::int64_t n, std::int64_t k) {
    if (k < 1 || k > n) throw BadParams("need 1 <= k <= n");
}
}  // namespace

std::int64_t singleton_bound(std::int64_t n, std::int64_t k) {
    check_nk(n, k);
    return n - k + 1;
}

TamoBargBound tamo_barg(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t) {
    check_nk(n, k);
    if (r < 1 || t < 1) throw BadParams("need r >= 1 and t >= 1");
    std::int64_t sum = 0, rpow = 1;
    for (std::int64_t i = 0; i <= t; ++i) {
        sum += (k - 1) / rpow;
        if (i < t) rpow *= r;
    }
    return {n - sum, tamo_barg_rate_cap(r, t)};
}

BigRat tamo_barg_rate_cap(std::int64_t r, std::int64_t t) {
    if (r < 1 || t < 1) throw BadParams("need r >= 1 and t >= 1");
    BigRat denom = 1;
    for (std::int64_t j = 1; j <= t; ++j) denom *= BigRat(BigInt(j * r + 1), BigInt(j * r));
    return BigRat(1) / denom;
}

AscendingBound bhadane_thangaraj(std::int64_t n, std::int64_t k,
                                 std::vector<std::int64_t> localities) {
    check_nk(n, k);
    for (auto r : localities)
        if (r < 1) throw BadParams("localities must be positive");
    bool sorted = std::is_sorted(localities.begin(), localities.end());
    std::sort(localities.begin(), localities.end());
    std::int64_t d = n - k + 1, prod = 1;
    for (auto r : localities) {
        prod *= r;
        d -= (k - 1) / prod;
    }
    return {d, !sorted};
}

std::int64_t bmq(std::int64_t n, std::int64_t k, const std::vector<std::int64_t>& localities) {
    check_nk(n, k);
    if (localities.empty()) throw BadParams("need at least one locality");
    std::int64_t t = std::int64_t(localities.size()), rsum = 0;
    for (auto r : localities) {
        if (r < 1) throw BadParams("localities must be positive");
        rsum += r;
    }
    std::int64_t num = (k - 1) * t + 1, den = 1 + rsum;
    std::int64_t ceil_q = (num + den - 1) / den;
    return n - k - ceil_q + 2;
}

namespace {
BigInt binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);
    }
    return r;
}
}  // namespace

ReferenceConstructions reference_constructions(std::uint64_t r, std::uint64_t t) {
    if (r < 1 || t < 1) throw BadParams("need r >= 1 and t >= 1");
    ReferenceConstructions out;
    out.product.n = big_pow(BigInt(r + 1), t);
    out.product.k = big_pow(BigInt(r), t);
    out.product.d = big_pow(BigInt(2), t);
    out.product.rate = BigRat(out.product.k, out.product.n);
    out.wang.n = binom(r + t, t);
    out.wang.k = out.wang.n - binom(r + t - 1, t - 1);
    out.wang.d = t + 1;
    out.wang.rate = BigRat(BigInt(r), BigInt(r + t));
    return out;
}

std::pair<BigInt, BigRat> hermitian_defect(std::uint64_t q) {
    if (q < 2) throw BadParams("need q >= 2");
    BigInt qq = q;
    BigInt defect = qq * qq - 2 * qq;
    return {defect, BigRat(defect, qq * qq * qq - qq)};
}

BoundReport bound_report(std::int64_t n, std::int64_t k,
                         const std::vector<std::int64_t>& localities,
                         std::optional<std::int64_t> exact_d) {
    if (localities.empty()) throw BadParams("need at least one locality");
    BoundReport rep;
    rep.singleton = singleton_bound(n, k);
    std::int64_t rmax = *std::max_element(localities.begin(), localities.end());
    std::int64_t t = std::int64_t(localities.size());
    auto tb = tamo_barg(n, k, rmax, t);
    rep.tamo_barg_d = tb.d_bound;
    rep.tb_rate_cap = tb.rate_cap;
    rep.bhadane_thangaraj = bhadane_thangaraj(n, k, localities).d_bound;
    rep.bmq = bmq(n, k, localities);
    auto refs = reference_constructions(std::uint64_t(rmax), std::uint64_t(t));
    rep.product_rate = refs.product.rate;
    rep.wang_rate = refs.wang.rate;
    if (exact_d) {
        rep.defect = rep.bhadane_thangaraj - *exact_d;
        rep.relative_defect = BigRat(BigInt(*rep.defect), BigInt(n));
    }
    return rep;
}

}  // namespace lrc
