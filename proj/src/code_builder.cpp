#include "lrc/code_builder.hpp"

#include <algorithm>

#include "lrc/parallel.hpp"

namespace lrc {

MonomialBasis MonomialBasis::build(const FamilyShape& shape, std::uint64_t l) {
    MonomialBasis basis;
    basis.l = l;
    for (auto dh : shape.factor_degrees()) basis.caps.push_back(dh - 2);
    std::vector<std::uint64_t> tuple(shape.t + 1, 0);
    while (true) {
        basis.tuples.push_back(tuple);
        std::size_t i = tuple.size();
        bool done = true;
        while (i-- > 0) {
            std::uint64_t cap = i == 0 ? l : basis.caps[i - 1];
            if (++tuple[i] <= cap) {
                done = false;
                break;
            }
            tuple[i] = 0;
        }
        if (done) break;
    }
    return basis;
}

LrcCode build_code(std::shared_ptr<const FiberProduct> fiber, std::uint64_t l,
                   const std::function<bool(std::uint64_t)>& filter, unsigned jobs) {
    LrcCode code;
    code.fiber = fiber;
    code.eval = fiber->evaluation_set(filter, jobs);
    if (l >= code.eval.S.size())
        throw LTooLarge("l = " + std::to_string(l) + " must be smaller than |S| = " +
                        std::to_string(code.eval.S.size()));
    code.basis = MonomialBasis::build(fiber->shape(), l);

    const Field& f = fiber->field();
    std::uint64_t n = code.eval.size(), k = code.basis.size(), width = fiber->shape().t + 1;
    code.G.assign(k * n, 0);

    // Per point, powers of every coordinate up to its exponent cap; each row
    // entry is then a short product of lookups.
    parallel_chunks(n, jobs, [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::vector<std::uint32_t>> pows(width);
        for (std::uint64_t c = lo; c < hi; ++c) {
            const std::uint32_t* pt = code.eval.point(c);
            for (std::uint64_t i = 0; i < width; ++i) {
                std::uint64_t cap = i == 0 ? l : code.basis.caps[i - 1];
                pows[i].assign(cap + 1, 1);
                for (std::uint64_t e = 1; e <= cap; ++e)
                    pows[i][e] = std::uint32_t(f.mul(pows[i][e - 1], pt[i]));
            }
            for (std::uint64_t r = 0; r < k; ++r) {
                const auto& tuple = code.basis.tuples[r];
                std::uint64_t v = pows[0][tuple[0]];
                for (std::uint64_t i = 1; i < width; ++i) v = f.mul(v, pows[i][tuple[i]]);
                code.G[r * n + c] = std::uint32_t(v);
            }
        }
    });

    std::uint64_t rank = matrix_rank(f, code.G, k, n);
    if (rank != k)
        throw RankDeficient("evaluation map is not injective: rank " + std::to_string(rank) +
                            " < " + std::to_string(k));

    auto& shape = fiber->shape();
    code.params.n = n;
    code.params.k = k;
    BigInt raw = shape.distance_lower_bound(l);
    code.params.d_lower_raw = raw.convert_to<std::int64_t>();
    code.params.d_lower = std::max<std::int64_t>(1, code.params.d_lower_raw);
    code.params.localities = shape.localities();
    code.params.rate = BigRat(BigInt(k), BigInt(n));
    return code;
}

std::vector<std::uint32_t> encode(const LrcCode& code, std::span<const std::uint32_t> message) {
    if (message.size() != code.params.k)
        throw LengthMismatch("message length " + std::to_string(message.size()) +
                             " != dimension " + std::to_string(code.params.k));
    const Field& f = code.field();
    std::vector<std::uint32_t> word(code.params.n, 0);
    for (std::uint64_t r = 0; r < code.params.k; ++r) {
        std::uint32_t m = message[r];
        if (!m) continue;
        auto row = code.row(r);
        for (std::uint64_t c = 0; c < code.params.n; ++c)
            word[c] = std::uint32_t(f.add(word[c], f.mul(m, row[c])));
    }
    return word;
}

std::vector<FieldElement> encode(const LrcCode& code, const std::vector<FieldElement>& message) {
    const Field& f = code.field();
    std::vector<std::uint32_t> raw;
    raw.reserve(message.size());
    for (const auto& m : message) {
        if (m.field && *m.field != f) throw FieldMismatch("message symbol from a different field");
        raw.push_back(std::uint32_t(m.enc));
    }
    auto word = encode(code, std::span<const std::uint32_t>(raw));
    std::vector<FieldElement> out;
    out.reserve(word.size());
    for (auto w : word) out.emplace_back(f, w);
    return out;
}

std::uint64_t matrix_rank(const Field& f, std::vector<std::uint32_t> m, std::uint64_t rows,
                          std::uint64_t cols) {
    std::uint64_t rank = 0;
    for (std::uint64_t c = 0; c < cols && rank < rows; ++c) {
        std::uint64_t piv = rank;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            std::swap_ranges(m.begin() + piv * cols, m.begin() + (piv + 1) * cols,
                             m.begin() + rank * cols);
        std::uint64_t inv = f.inv(m[rank * cols + c]);
        for (std::uint64_t cc = c; cc < cols; ++cc)
            m[rank * cols + cc] = std::uint32_t(f.mul(m[rank * cols + cc], inv));
        for (std::uint64_t r = rank + 1; r < rows; ++r) {
            std::uint64_t factor = m[r * cols + c];
            if (!factor) continue;
            for (std::uint64_t cc = c; cc < cols; ++cc)
                m[r * cols + cc] = std::uint32_t(
                    f.sub(m[r * cols + cc], f.mul(factor, m[rank * cols + cc])));
        }
        ++rank;
    }
    return rank;
}

std::uint64_t codeword_weight(std::span<const std::uint32_t> word) {
    std::uint64_t w = 0;
    for (auto x : word) w += x != 0;
    return w;
}

}  // namespace lrc
