#include "lrc/recovery.hpp"

#include <algorithm>
#include <map>

namespace lrc {

RecoveryIndex build_recovery_index(const EvaluationSet& eval,
                                   const std::vector<std::uint64_t>& map_degrees) {
    RecoveryIndex index;
    index.t = eval.t;
    index.set_sizes.reserve(eval.t);
    for (auto d : map_degrees) index.set_sizes.push_back(d - 1);
    index.j_offsets.assign(eval.t + 1, 0);
    for (std::uint64_t j = 0; j < eval.t; ++j)
        index.j_offsets[j + 1] = index.j_offsets[j] + index.set_sizes[j];

    std::uint64_t n = eval.size(), width = eval.t + 1, stride = index.j_offsets[eval.t];
    index.sets.assign(n * stride, 0);

    // Group positions by the coordinates other than y_{j+1}.  Points are lex
    // ordered, so grouping keys are ordered too and groups come out sorted.
    std::vector<std::uint32_t> key(width - 1);
    for (std::uint64_t j = 0; j < eval.t; ++j) {
        std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> groups;
        for (std::uint64_t pos = 0; pos < n; ++pos) {
            const std::uint32_t* pt = eval.point(pos);
            key.clear();
            for (std::uint64_t i = 0; i < width; ++i)
                if (i != j + 1) key.push_back(pt[i]);
            groups[key].push_back(std::uint32_t(pos));
        }
        for (const auto& [k, members] : groups) {
            if (members.size() != map_degrees[j])
                throw MalformedFiber("recovery group has size " +
                                     std::to_string(members.size()) + ", expected " +
                                     std::to_string(map_degrees[j]));
            for (auto pos : members) {
                std::uint32_t* slot = index.sets.data() + pos * stride + index.j_offsets[j];
                std::uint64_t w = 0;
                for (auto other : members)
                    if (other != pos) slot[w++] = other;
            }
        }
    }
    return index;
}

RecoveryIndex build_recovery_index(const LrcCode& code) {
    std::vector<std::uint64_t> degs;
    for (const auto& rel : code.fiber->factors()) degs.push_back(rel.map_degree(code.field()));
    return build_recovery_index(code.eval, degs);
}

ErasureWord ErasureWord::complete(std::vector<std::uint32_t> syms) {
    ErasureWord w;
    w.present.assign(syms.size(), 1);
    w.symbols = std::move(syms);
    return w;
}

std::uint64_t ErasureWord::erased_count() const {
    std::uint64_t c = 0;
    for (auto p : present) c += !p;
    return c;
}

std::uint32_t recover(const EvaluationSet& eval, const RecoveryIndex& index,
                      const ErasureWord& word, std::uint64_t pos, std::uint64_t j) {
    const Field& f = *eval.field;
    auto set = index.set(pos, j);
    for (auto a : set)
        if (!word.present[a])
            throw NotEnoughSurvivors("recovery set for position " + std::to_string(pos) +
                                     " is not fully present");

    std::uint64_t x_star = eval.coord(pos, j + 1);
    // Lagrange evaluation at x_star; the sets are tiny, so the direct basis
    // is fine.
    std::uint64_t acc = 0;
    for (std::size_t a = 0; a < set.size(); ++a) {
        std::uint64_t xa = eval.coord(set[a], j + 1);
        std::uint64_t num = 1, den = 1;
        for (std::size_t b = 0; b < set.size(); ++b) {
            if (b == a) continue;
            std::uint64_t xb = eval.coord(set[b], j + 1);
            if (xb == xa) throw RepeatedAbscissa("repeated interpolation abscissa");
            num = f.mul(num, f.sub(x_star, xb));
            den = f.mul(den, f.sub(xa, xb));
        }
        acc = f.add(acc, f.mul(word.symbols[set[a]], f.div(num, den)));
    }
    return std::uint32_t(acc);
}

RepairReport recover_multi(const EvaluationSet& eval, const RecoveryIndex& index,
                           ErasureWord word) {
    RepairReport report;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::uint64_t pos = 0; pos < word.symbols.size(); ++pos) {
            if (word.present[pos]) continue;
            for (std::uint64_t j = 0; j < index.t; ++j) {
                auto set = index.set(pos, j);
                bool intact = std::all_of(set.begin(), set.end(),
                                          [&](std::uint32_t a) { return word.present[a]; });
                if (!intact) continue;
                word.symbols[pos] = recover(eval, index, word, pos, j);
                word.present[pos] = 1;
                report.repaired.push_back({std::uint32_t(pos), std::uint32_t(j)});
                progress = true;
                break;
            }
        }
    }
    for (std::uint64_t pos = 0; pos < word.symbols.size(); ++pos)
        if (!word.present[pos]) report.failed.push_back(std::uint32_t(pos));
    report.word = std::move(word);
    return report;
}

}  // namespace lrc
