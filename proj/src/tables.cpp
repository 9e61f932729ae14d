#include "lrc/tables.hpp"

#include <algorithm>
#include <sstream>

namespace lrc {

TableId table_from_string(const std::string& id) {
    if (id == "hermitian") return TableId::Hermitian;
    if (id == "thc") return TableId::HermitianProduct;
    if (id == "as_p3t2") return TableId::AsP3T2;
    if (id == "as_p5t2") return TableId::AsP5T2;
    if (id == "as_rate") return TableId::AsRate;
    if (id == "as_dist") return TableId::AsDist;
    throw UnknownTable("unknown table '" + id + "'");
}

std::string table_id_name(TableId id) {
    switch (id) {
        case TableId::Hermitian: return "hermitian";
        case TableId::HermitianProduct: return "thc";
        case TableId::AsP3T2: return "as_p3t2";
        case TableId::AsP5T2: return "as_p5t2";
        case TableId::AsRate: return "as_rate";
        case TableId::AsDist: return "as_dist";
    }
    throw UnknownTable("unknown table id");
}

namespace {

std::int64_t i64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

std::vector<std::int64_t> loc_i64(const FamilyShape& shape) {
    std::vector<std::int64_t> out;
    for (auto r : shape.localities()) out.push_back(std::int64_t(r));
    return out;
}

struct ShapeL {
    FamilyShape shape;
    std::uint64_t l;
};

// (p, h) decomposition of a prime power; the tables index rows by q.
std::pair<std::uint64_t, std::uint64_t> prime_power(std::uint64_t q) {
    for (std::uint64_t p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p) continue;
        std::uint64_t h = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++h;
        }
        if (v == 1) return {p, h};
    }
    throw BadParams(std::to_string(q) + " is not a prime power");
}

// Certification annotation for enumerate mode; rows whose field is too large
// fall back to the closed form with a note.
std::string certify_annotation(const ShapeL& row, const TableOptions& opts) {
    std::uint64_t order = 1;
    for (std::uint64_t i = 0; i < row.shape.field_degree(); ++i) {
        order *= row.shape.p;
        if (order > opts.max_field_order) return "closed-form (field above enumeration cap)";
    }
    auto fp = FiberProduct::make(row.shape);
    auto eval = fp->evaluation_set(nullptr, opts.jobs);
    CertifyOptions copts;
    copts.search_budget = opts.search_budget;
    copts.jobs = opts.jobs;
    Certificate cert = certify_distance(*fp, eval, row.l, copts);
    if (!cert.exact) {
        // a small generator matrix makes the brute-force route feasible
        BigInt space = big_pow(BigInt(order), i64(row.shape.dimension(row.l)));
        BigInt work = row.shape.dimension(row.l) * row.shape.dimension(row.l) *
                      row.shape.length();
        if (space <= opts.bruteforce_cap && work <= BigInt(200000000)) {
            LrcCode code = build_code(fp, row.l, nullptr, opts.jobs);
            copts.bruteforce_cap = opts.bruteforce_cap;
            cert = certify_distance(code, copts);
        }
    }
    if (cert.exact)
        return "certified-exact " + std::to_string(cert.lower) + " (" + cert.upper_provenance +
               ")";
    return "interval [" + std::to_string(cert.lower) + ", " + std::to_string(cert.upper) + "]";
}

void maybe_annotate(Table& table, const std::vector<ShapeL>& shapes, const TableOptions& opts) {
    if (opts.mode != TableMode::Enumerate) return;
    table.header.push_back("certification");
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        table.rows[i].push_back(certify_annotation(shapes[i], opts));
}

}  // namespace

std::vector<HermitianRow> hermitian_rows() {
    std::vector<HermitianRow> rows;
    for (std::uint64_t p : {2, 3, 5, 7}) {
        std::uint64_t q = 1;
        for (std::uint64_t h = 1; h <= 4; ++h) {
            q *= p;
            auto shape = FamilyShape::make(Family::HermitianLrc2, p, h);
            HermitianRow row;
            row.q = q;
            row.n = shape.length();
            row.k = shape.dimension(0);
            row.d = *shape.witness_distance_formula(0);
            auto bt = bhadane_thangaraj(i64(row.n), i64(row.k), loc_i64(shape));
            row.bound = bt.d_bound;
            row.rel_defect = BigRat(row.bound - row.d, row.n);
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<HermitianProductRow> hermitian_product_rows() {
    static const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> plan = {
        {4, {0, 1, 2, 3, 4}}, {5, {0, 3, 5}}, {7, {0, 3, 7}}, {11, {0, 5, 11}}, {13, {0, 13}}};
    std::vector<HermitianProductRow> rows;
    for (const auto& [q, ls] : plan) {
        auto [p, h] = prime_power(q);
        auto shape = FamilyShape::make(Family::HermitianProduct, p, h);
        for (auto l : ls) {
            HermitianProductRow row;
            row.q = q;
            row.l = l;
            row.n = shape.length();
            row.k = shape.dimension(l);
            row.d = *shape.witness_distance_formula(l);
            row.bound = bhadane_thangaraj(i64(row.n), i64(row.k), loc_i64(shape)).d_bound;
            row.rel_defect = BigRat(row.bound - row.d, row.n);
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<AsSmallRow> as_small_rows(std::uint64_t p) {
    std::vector<std::uint64_t> ls;
    if (p == 3)
        ls = {0, 60, 74};
    else if (p == 5)
        ls = {0, 572, 593};
    else
        throw BadParams("small-table rows exist for p = 3 and p = 5");
    auto shape = FamilyShape::make(Family::ArtinSchreier, p, 2, 2);
    std::vector<AsSmallRow> rows;
    for (auto l : ls) {
        AsSmallRow row;
        row.l = l;
        row.k = shape.dimension(l);
        row.rate = shape.rate(l);
        auto exact = shape.witness_distance_formula(l);
        row.d_exact = exact.has_value();
        row.d = exact ? *exact : shape.distance_lower_bound(l);
        row.tb_bound =
            tamo_barg(i64(shape.length()), i64(row.k), std::int64_t(p - 1), 2).d_bound;
        rows.push_back(row);
    }
    return rows;
}

std::vector<AsRateRow> as_rate_rows() {
    std::vector<AsRateRow> rows;
    for (std::uint64_t p : {3, 5, 7}) {
        for (std::uint64_t t = 2; t <= 4; ++t) {
            auto shape = FamilyShape::make(Family::ArtinSchreier, p, t, t);
            AsRateRow row;
            row.p = p;
            row.t = t;
            row.r = p - 1;
            row.l = shape.max_l_positive();
            row.q2 = BigInt(shape.q()) * shape.q();
            row.n = shape.length();
            row.k = shape.dimension(row.l);
            row.d_low = shape.distance_lower_bound(row.l);
            row.d_high = *shape.witness_distance_formula(
                std::min(row.l, shape.witness_l_cap()));
            row.rate = shape.rate(row.l);
            row.rate_cap = tamo_barg_rate_cap(std::int64_t(p - 1), std::int64_t(t));
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<AsDistRow> as_dist_rows() {
    std::vector<AsDistRow> rows;
    for (std::uint64_t p : {3, 5, 7}) {
        for (std::uint64_t t = 2; t <= 4; ++t) {
            auto shape = FamilyShape::make(Family::ArtinSchreier, p, t, t);
            AsDistRow row;
            row.p = p;
            row.t = t;
            row.r = p - 1;
            row.n = shape.length();
            row.k = shape.dimension(0);
            row.d = *shape.witness_distance_formula(0);
            row.tb_bound = tamo_barg(i64(row.n), i64(row.k), std::int64_t(p - 1),
                                     std::int64_t(t))
                               .d_bound;
            row.rel_defect = BigRat(row.tb_bound - row.d, row.n);
            rows.push_back(row);
        }
    }
    return rows;
}

Table make_table(TableId id, const TableOptions& opts) {
    Table table;
    table.id = table_id_name(id);
    std::vector<ShapeL> shapes;
    switch (id) {
        case TableId::Hermitian: {
            table.header = {"q2", "r1", "r2", "n", "k", "d", "upper_bound", "relative_defect"};
            for (const auto& row : hermitian_rows()) {
                auto [p, h] = prime_power(row.q);
                auto shape = FamilyShape::make(Family::HermitianLrc2, p, h);
                shapes.push_back({shape, 0});
                table.rows.push_back({std::to_string(row.q * row.q), std::to_string(row.q - 1),
                                      std::to_string(row.q), row.n.str(), row.k.str(), row.d.str(),
                                      row.bound.str(), render_decimal(row.rel_defect, 4)});
            }
            break;
        }
        case TableId::HermitianProduct: {
            table.header = {"q", "n", "l", "k", "d", "upper_bound", "relative_defect"};
            for (const auto& row : hermitian_product_rows()) {
                auto [p, h] = prime_power(row.q);
                shapes.push_back({FamilyShape::make(Family::HermitianProduct, p, h), row.l});
                table.rows.push_back({std::to_string(row.q), row.n.str(), std::to_string(row.l),
                                      row.k.str(), row.d.str(), row.bound.str(),
                                      render_decimal(row.rel_defect, 4)});
            }
            break;
        }
        case TableId::AsP3T2:
        case TableId::AsP5T2: {
            std::uint64_t p = id == TableId::AsP3T2 ? 3 : 5;
            table.header = {"l", "k", "rate", "d", "d_status", "tb_bound"};
            for (const auto& row : as_small_rows(p)) {
                shapes.push_back({FamilyShape::make(Family::ArtinSchreier, p, 2, 2), row.l});
                table.rows.push_back({std::to_string(row.l), row.k.str(),
                                      render_decimal(row.rate, 3), row.d.str(),
                                      row.d_exact ? "exact" : "lower-bound", row.tb_bound.str()});
            }
            break;
        }
        case TableId::AsRate: {
            table.header = {"p", "t", "l", "q2", "r", "n", "k", "d_low", "d_high", "rate",
                            "rate_bound"};
            for (const auto& row : as_rate_rows()) {
                shapes.push_back({FamilyShape::make(Family::ArtinSchreier, row.p, row.t, row.t),
                                  std::uint64_t(i64(row.l))});
                table.rows.push_back({std::to_string(row.p), std::to_string(row.t), row.l.str(),
                                      row.q2.str(), std::to_string(row.r), row.n.str(),
                                      row.k.str(), row.d_low.str(), row.d_high.str(),
                                      render_decimal(row.rate, 3),
                                      render_decimal(row.rate_cap, 3)});
            }
            break;
        }
        case TableId::AsDist: {
            table.header = {"p", "t", "r", "n", "k", "d", "tb_bound", "relative_defect"};
            for (const auto& row : as_dist_rows()) {
                shapes.push_back({FamilyShape::make(Family::ArtinSchreier, row.p, row.t, row.t),
                                  0});
                table.rows.push_back({std::to_string(row.p), std::to_string(row.t),
                                      std::to_string(row.r), row.n.str(), row.k.str(),
                                      row.d.str(), row.tb_bound.str(),
                                      render_decimal(row.rel_defect, 4)});
            }
            break;
        }
    }
    maybe_annotate(table, shapes, opts);
    return table;
}

std::string table_to_csv(const Table& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.header.size(); ++i)
        out << t.header[i] << (i + 1 < t.header.size() ? "," : "");
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "");
        out << "\n";
    }
    return out.str();
}

json table_to_json(const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj;
        for (std::size_t i = 0; i < t.header.size() && i < row.size(); ++i)
            obj[t.header[i]] = row[i];
        rows.push_back(obj);
    }
    return json{{"table", t.id}, {"rows", rows}};
}

std::string table_to_pretty(const Table& t) {
    std::vector<std::size_t> widths(t.header.size(), 0);
    for (std::size_t i = 0; i < t.header.size(); ++i) widths[i] = t.header[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size()) out << std::string(widths[i] - row[i].size() + 2, ' ');
        }
        out << "\n";
    };
    emit(t.header);
    std::size_t total = 0;
    for (auto w : widths) total += w + 2;
    out << std::string(total > 2 ? total - 2 : total, '-') << "\n";
    for (const auto& row : t.rows) emit(row);
    return out.str();
}

std::vector<FigureRow> figure_rows(std::uint64_t p, std::uint64_t t_min, std::uint64_t t_max,
                                   bool maximize_rate, std::uint64_t h_override) {
    if (t_min < 1 || t_max < t_min) throw BadParams("bad availability range");
    std::vector<FigureRow> rows;
    for (std::uint64_t t = t_min; t <= t_max; ++t) {
        std::uint64_t h = h_override ? h_override : t;
        if (t > h) throw BadParams("availability t cannot exceed h");
        auto shape = FamilyShape::make(Family::ArtinSchreier, p, h, t);
        FigureRow row;
        row.t = t;
        row.l = maximize_rate ? shape.max_l_positive() : BigInt(0);
        row.n = shape.length();
        row.k = shape.dimension(row.l);
        row.rate = shape.rate(row.l);
        row.rate_cap = tamo_barg_rate_cap(std::int64_t(p - 1), std::int64_t(t));
        auto refs = reference_constructions(p - 1, t);
        row.product_rate = refs.product.rate;
        row.wang_rate = refs.wang.rate;
        rows.push_back(row);
    }
    return rows;
}

Table figure_table(std::uint64_t p, std::uint64_t t_min, std::uint64_t t_max, bool maximize_rate,
                   std::uint64_t h_override) {
    Table table;
    table.id = "figure";
    table.header = {"t", "l", "n", "k", "rate", "rate_bound", "product_rate", "wang_rate"};
    for (const auto& row : figure_rows(p, t_min, t_max, maximize_rate, h_override)) {
        table.rows.push_back({std::to_string(row.t), row.l.str(), row.n.str(), row.k.str(),
                              render_decimal(row.rate, 6), render_decimal(row.rate_cap, 6),
                              render_decimal(row.product_rate, 6),
                              render_decimal(row.wang_rate, 6)});
    }
    return table;
}

}  // namespace lrc
