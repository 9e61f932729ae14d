#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lrc/code_builder.hpp"

using namespace lrc;

namespace {

LrcCode build_family(Family f, std::uint64_t p, std::uint64_t h, std::uint64_t t,
                     std::uint64_t l) {
    return build_code(FiberProduct::make(FamilyShape::make(f, p, h, t)), l);
}

// Gaussian-elimination decode oracle: solve for the message on k independent
// positions of a codeword.
std::vector<std::uint32_t> solve_message(const LrcCode& code,
                                         const std::vector<std::uint32_t>& word) {
    const Field& f = code.field();
    std::uint64_t k = code.params.k, n = code.params.n;
    // augmented system G^T restricted to pivot columns
    std::vector<std::uint64_t> cols;
    std::vector<std::vector<std::uint32_t>> m;  // rows over chosen positions
    // collect k positions whose G-columns are linearly independent
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::uint64_t c = 0; c < n && cols.size() < k; ++c) {
        std::vector<std::uint32_t> col(k + 0);
        for (std::uint64_t r = 0; r < k; ++r) col[r] = code.G[r * n + c];
        auto trial = basis;
        trial.push_back(col);
        std::vector<std::uint32_t> flat;
        for (auto& row : trial) flat.insert(flat.end(), row.begin(), row.end());
        if (matrix_rank(f, flat, trial.size(), k) == trial.size()) {
            basis = trial;
            cols.push_back(c);
        }
    }
    REQUIRE(cols.size() == k);
    // solve m * G[:, cols] = word[cols] by elimination on the k x (k+1) system
    std::vector<std::uint32_t> a((k + 1) * k);
    for (std::uint64_t i = 0; i < k; ++i) {   // equations, one per chosen position
        for (std::uint64_t r = 0; r < k; ++r) a[i * (k + 1) + r] = code.G[r * n + cols[i]];
        a[i * (k + 1) + k] = word[cols[i]];
    }
    // forward elimination with partial pivoting
    for (std::uint64_t c = 0; c < k; ++c) {
        std::uint64_t piv = c;
        while (piv < k && a[piv * (k + 1) + c] == 0) ++piv;
        REQUIRE(piv < k);
        for (std::uint64_t j = 0; j <= k; ++j) std::swap(a[c * (k + 1) + j], a[piv * (k + 1) + j]);
        std::uint64_t inv = f.inv(a[c * (k + 1) + c]);
        for (std::uint64_t j = 0; j <= k; ++j)
            a[c * (k + 1) + j] = std::uint32_t(f.mul(a[c * (k + 1) + j], inv));
        for (std::uint64_t r = 0; r < k; ++r) {
            if (r == c) continue;
            std::uint64_t factor = a[r * (k + 1) + c];
            if (!factor) continue;
            for (std::uint64_t j = 0; j <= k; ++j)
                a[r * (k + 1) + j] = std::uint32_t(
                    f.sub(a[r * (k + 1) + j], f.mul(factor, a[c * (k + 1) + j])));
        }
    }
    std::vector<std::uint32_t> msg(k);
    for (std::uint64_t r = 0; r < k; ++r) msg[r] = a[r * (k + 1) + k];
    return msg;
}

}  // namespace

TEST_CASE("monomial basis shape") {
    auto shape = FamilyShape::make(Family::HermitianProduct, 2, 2);
    auto basis = MonomialBasis::build(shape, 4);
    CHECK(basis.size() == 60);
    CHECK(basis.tuples.front() == std::vector<std::uint64_t>{0, 0, 0});
    // lexicographic, l major
    CHECK(basis.tuples[1] == std::vector<std::uint64_t>{0, 0, 1});
    CHECK(basis.tuples.back() == std::vector<std::uint64_t>{4, 3, 2});
}

TEST_CASE("built parameters match the published instances") {
    auto x3 = build_family(Family::HermitianProduct, 3, 1, 0, 3);
    CHECK(x3.params.n == 72);
    CHECK(x3.params.k == 24);
    CHECK(x3.params.d_lower == 2);

    auto a92 = build_family(Family::ArtinSchreier, 3, 2, 2, 0);
    CHECK(a92.params.n == 729);
    CHECK(a92.params.k == 4);
    CHECK(a92.params.d_lower == 669);

    auto ch4 = build_family(Family::HermitianLrc2, 2, 2, 0, 0);
    CHECK(ch4.params.n == 60);
    CHECK(ch4.params.k == 12);
    CHECK(ch4.params.localities == std::vector<std::uint64_t>{3, 4});
}

TEST_CASE("rank equals the basis size across instances and l") {
    for (std::uint64_t l = 0; l <= 3; ++l) {
        auto code = build_family(Family::HermitianProduct, 3, 1, 0, l);
        CHECK(code.params.k == 6 * (l + 1));  // verified at build time
    }
    for (std::uint64_t l : {0, 5, 74}) {
        auto code = build_family(Family::ArtinSchreier, 3, 2, 2, l);
        CHECK(code.params.k == 4 * (l + 1));
    }
    auto rational = build_family(Family::HermitianRational, 3, 1, 0, 4);
    CHECK(rational.params.k == 10);
    CHECK(build_family(Family::HermitianLrc2, 2, 1, 0, 0).params.n == 6);
}

TEST_CASE("l bound") {
    CHECK_THROWS_AS((void)build_family(Family::HermitianProduct, 3, 1, 0, 6), LTooLarge);
}

TEST_CASE("encode basics") {
    auto code = build_family(Family::ArtinSchreier, 3, 2, 2, 1);
    std::vector<std::uint32_t> zero(code.params.k, 0);
    auto zw = encode(code, std::span<const std::uint32_t>(zero));
    CHECK(codeword_weight(zw) == 0);

    // unit message on the first monomial (the constant 1) gives all ones
    std::vector<std::uint32_t> e1(code.params.k, 0);
    e1[0] = 1;
    auto ones = encode(code, std::span<const std::uint32_t>(e1));
    for (auto s : ones) CHECK(s == 1);

    std::vector<std::uint32_t> wrong(code.params.k + 1, 0);
    CHECK_THROWS_AS((void)encode(code, std::span<const std::uint32_t>(wrong)), LengthMismatch);
}

TEST_CASE("random encode round trip via a linear-algebra oracle") {
    auto code = build_family(Family::HermitianLrc2, 3, 1, 0, 0);
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::uint32_t> msg(code.params.k);
        for (auto& m : msg) m = std::uint32_t(rng() % code.field().order());
        auto word = encode(code, std::span<const std::uint32_t>(msg));
        CHECK(solve_message(code, word) == msg);
    }
}

TEST_CASE("matrix columns depend only on the point coordinates") {
    auto code = build_family(Family::HermitianProduct, 3, 1, 0, 2);
    const Field& f = code.field();
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint64_t r = rng() % code.params.k;
        std::uint64_t c = rng() % code.params.n;
        const auto& tuple = code.basis.tuples[r];
        const std::uint32_t* pt = code.eval.point(c);
        std::uint64_t v = 1;
        for (std::uint64_t i = 0; i < tuple.size(); ++i)
            v = f.mul(v, f.pow(pt[i], tuple[i]));
        CHECK(code.G[r * code.params.n + c] == v);
    }
}

TEST_CASE("built rate matches the closed form") {
    auto code = build_family(Family::ArtinSchreier, 3, 2, 2, 7);
    auto shape = code.fiber->shape();
    CHECK(code.params.rate == shape.rate(7));
    CHECK(BigInt(code.params.n) == shape.length());
    CHECK(BigInt(code.params.k) == shape.dimension(7));
}
