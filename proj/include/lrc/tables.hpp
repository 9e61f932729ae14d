#pragma once

#include <string>
#include <vector>

#include "lrc/distance.hpp"
#include "lrc/json_io.hpp"

namespace lrc {

// The six parameter tables the library reproduces.
enum class TableId { Hermitian, HermitianProduct, AsP3T2, AsP5T2, AsRate, AsDist };

TableId table_from_string(const std::string& id);
std::string table_id_name(TableId id);

enum class TableMode { ClosedForm, Enumerate };

struct TableOptions {
    TableMode mode = TableMode::ClosedForm;
    std::uint64_t max_field_order = 256;  // enumerate falls back above this
    std::uint64_t bruteforce_cap = 10000000;
    std::uint64_t search_budget = 10000;
    unsigned jobs = 1;
};

struct Table {
    std::string id;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Table make_table(TableId id, const TableOptions& opts = {});

std::string table_to_csv(const Table& t);
json table_to_json(const Table& t);
std::string table_to_pretty(const Table& t);

// Typed closed-form rows (the string tables are rendered from these).
struct HermitianRow {
    std::uint64_t q;
    BigInt n, k, d, bound;
    BigRat rel_defect;
};
std::vector<HermitianRow> hermitian_rows();

struct HermitianProductRow {
    std::uint64_t q, l;
    BigInt n, k, d, bound;
    BigRat rel_defect;
};
std::vector<HermitianProductRow> hermitian_product_rows();

struct AsSmallRow {
    std::uint64_t l;
    BigInt k;
    BigRat rate;
    BigInt d;
    bool d_exact;  // false rows carry the construction lower bound only
    BigInt tb_bound;
};
std::vector<AsSmallRow> as_small_rows(std::uint64_t p);  // p = 3 or 5; h = t = 2

struct AsRateRow {
    std::uint64_t p, t, r;
    BigInt l, q2, n, k, d_low, d_high;
    BigRat rate, rate_cap;
};
std::vector<AsRateRow> as_rate_rows();

struct AsDistRow {
    std::uint64_t p, t, r;
    BigInt n, k, d, tb_bound;
    BigRat rel_defect;
};
std::vector<AsDistRow> as_dist_rows();

// Closed-form rate comparison per availability t: the fiber-product rate,
// the availability rate cap, and the product-code and parity-splitting
// reference rates.  h defaults to t (the smallest extension with t factors).
struct FigureRow {
    std::uint64_t t;
    BigInt l, n, k;
    BigRat rate, rate_cap, product_rate, wang_rate;
};
std::vector<FigureRow> figure_rows(std::uint64_t p, std::uint64_t t_min, std::uint64_t t_max,
                                   bool maximize_rate, std::uint64_t h_override = 0);
Table figure_table(std::uint64_t p, std::uint64_t t_min, std::uint64_t t_max, bool maximize_rate,
                   std::uint64_t h_override = 0);

}  // namespace lrc
