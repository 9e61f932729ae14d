// Command-line front end: field/curve inspection, code building, erasure
// recovery, distance certification, bound reports, and the parameter tables.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "lrc/json_io.hpp"
#include "lrc/parallel.hpp"
#include "lrc/recovery.hpp"
#include "lrc/tables.hpp"

namespace fs = std::filesystem;
using namespace lrc;

namespace {

struct GlobalOpts {
    std::string format = "pretty";
    std::uint64_t seed = 0;
    unsigned jobs = default_jobs();
    std::string out_dir = ".";
};

std::vector<std::uint32_t> parse_u32_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::uint32_t(std::stoul(item)));
    }
    return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoull(item));
    }
    return out;
}

void emit_json(const json& j, const GlobalOpts& g) {
    if (g.format == "pretty")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

struct FamilyArgs {
    std::string family = "as";
    std::uint64_t p = 3, h = 2, t = 0, l = 0;
    std::string as_coeffs;     // comma separated encs
    std::string modulus;       // comma separated coefficients, low degree first

    void add_options(CLI::App* cmd, bool with_l = true) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--family", family,
                        "hermitian_rational | hermitian_lrc2 | thc | as")
            ->capture_default_str();
        cmd->add_option("--p", p, "prime characteristic")->capture_default_str();
        cmd->add_option("--h", h, "extension exponent; q = p^h")->capture_default_str();
        cmd->add_option("--t", t, "availability (Artin-Schreier family; default h)");
        if (with_l) cmd->add_option("--l", l, "maximum y0-degree")->capture_default_str();
        cmd->add_option("--as-coeffs", as_coeffs,
                        "Artin-Schreier coefficients a_i as enc values, comma separated");
        cmd->add_option("--modulus", modulus,
                        "field modulus coefficients c0,c1,... (low degree first)");
    }

    FamilyShape shape() const {
        return FamilyShape::make(family_from_name(family), p, h, t);
    }

    std::shared_ptr<const FiberProduct> fiber() const {
        auto s = shape();
        FieldPtr field;
        if (!modulus.empty()) field = Field::make(p, s.field_degree(), parse_u32_list(modulus));
        return FiberProduct::make(s, field, parse_u64_list(as_coeffs));
    }
};

// CLI `build` mirrors the positive-distance region; larger l is rejected as
// a parameter error even when the evaluation map stays injective.
void check_l_bound(const FamilyShape& shape, std::uint64_t l) {
    BigInt cap = shape.max_l_positive();
    if (BigInt(l) > cap)
        throw LTooLarge("l = " + std::to_string(l) + " exceeds max_l_positive = " + cap.str());
}

json recovery_index_json(const LrcCode& code, const RecoveryIndex& index) {
    json sets = json::array();
    for (std::uint64_t pos = 0; pos < code.params.n; ++pos) {
        json per_j = json::array();
        for (std::uint64_t j = 0; j < index.t; ++j) {
            auto s = index.set(pos, j);
            per_j.push_back(std::vector<std::uint32_t>(s.begin(), s.end()));
        }
        sets.push_back(per_j);
    }
    return json{{"t", index.t}, {"localities", code.params.localities}, {"sets", sets}};
}

std::string points_csv(const EvaluationSet& eval) {
    std::ostringstream out;
    out << "index";
    for (std::uint64_t i = 0; i <= eval.t; ++i) out << ",y" << i;
    out << "\n";
    for (std::uint64_t pos = 0; pos < eval.size(); ++pos) {
        out << pos;
        for (std::uint64_t i = 0; i <= eval.t; ++i) out << "," << eval.coord(pos, i);
        out << "\n";
    }
    return out.str();
}

std::string matrix_csv(const LrcCode& code) {
    std::ostringstream out;
    for (std::uint64_t c = 0; c < code.params.n; ++c) out << (c ? "," : "") << "c" << c;
    out << "\n";
    for (std::uint64_t r = 0; r < code.params.k; ++r) {
        auto row = code.row(r);
        for (std::uint64_t c = 0; c < code.params.n; ++c) out << (c ? "," : "") << row[c];
        out << "\n";
    }
    return out.str();
}

ErasureWord read_word_csv(const fs::path& path, std::uint64_t n) {
    std::ifstream in(path);
    if (!in) throw BadParams("cannot read " + path.string());
    ErasureWord word;
    word.symbols.assign(n, 0);
    word.present.assign(n, 0);
    std::string line;
    bool header = true;
    std::uint64_t seen = 0;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw BadParams("malformed codeword row: " + line);
        std::uint64_t idx = std::stoull(line.substr(0, comma));
        std::string sym = line.substr(comma + 1);
        if (!sym.empty() && sym.back() == '\r') sym.pop_back();
        if (idx >= n) throw BadParams("position out of range in codeword file");
        if (sym != "?") {
            word.symbols[idx] = std::uint32_t(std::stoul(sym));
            word.present[idx] = 1;
        }
        ++seen;
    }
    if (seen != n) throw BadParams("codeword file has " + std::to_string(seen) +
                                   " rows, expected " + std::to_string(n));
    return word;
}

std::string word_csv(const ErasureWord& word) {
    std::ostringstream out;
    out << "index,symbol\n";
    for (std::uint64_t i = 0; i < word.symbols.size(); ++i) {
        out << i << ",";
        if (word.present[i])
            out << word.symbols[i];
        else
            out << "?";
        out << "\n";
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"locally recoverable codes from fiber products of curves"};
    app.set_help_flag("--help", "print help");  // --h stays free for q = p^h
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "csv | json | pretty")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized demos")->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads")->capture_default_str();
    app.add_option("--out", g.out_dir, "output directory for artifacts")->capture_default_str();

    // field
    auto* field_cmd = app.add_subcommand("field", "construct a field and print its spec");
    std::uint64_t f_p = 2, f_degree = 1;
    std::string f_modulus;
    bool f_kernel = false;
    field_cmd->add_option("--p", f_p, "prime characteristic")->required();
    field_cmd->add_option("--degree", f_degree, "extension degree over GF(p)")->required();
    field_cmd->add_option("--modulus", f_modulus, "modulus coefficients c0,c1,...");
    field_cmd->add_flag("--kernel-basis", f_kernel, "include the relative trace kernel basis");

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "describe a fiber product family instance");
    FamilyArgs curve_args;
    curve_args.add_options(curve_cmd, false);
    bool curve_enumerate = false;
    std::uint64_t curve_cap = 1u << 20;
    curve_cmd->add_flag("--enumerate", curve_enumerate, "enumerate points and verify counts");
    curve_cmd->add_option("--max-order", curve_cap, "enumeration cap on the field order");

    // build
    auto* build_cmd = app.add_subcommand("build", "build a code and write its artifacts");
    FamilyArgs build_args;
    build_args.add_options(build_cmd);

    // recover
    auto* recover_cmd = app.add_subcommand("recover", "repair erasures in a codeword");
    FamilyArgs recover_args;
    recover_args.add_options(recover_cmd);
    std::string word_file;
    std::uint64_t demo_erasures = 0;
    recover_cmd->add_option("--word", word_file, "codeword CSV (index,symbol; '?' = erased)");
    recover_cmd->add_option("--demo", demo_erasures,
                            "erase this many random positions of a random codeword");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "certify the minimum distance");
    FamilyArgs certify_args;
    certify_args.add_options(certify_cmd);
    std::uint64_t brute_cap = 100000000, search_budget = 10000;
    bool no_search = false;
    certify_cmd->add_option("--brute-cap", brute_cap, "message-space cap for brute force");
    certify_cmd->add_option("--search-budget", search_budget, "witness search node budget");
    certify_cmd->add_flag("--no-search", no_search, "skip the witness search");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "upper bounds and reference rates");
    std::int64_t b_n = 0, b_k = 0;
    std::string b_localities;
    std::int64_t b_d = -1;
    bounds_cmd->add_option("--n", b_n, "length")->required();
    bounds_cmd->add_option("--k", b_k, "dimension")->required();
    bounds_cmd->add_option("--localities", b_localities, "comma separated localities")->required();
    bounds_cmd->add_option("--d", b_d, "exact distance (enables defect columns)");

    // table
    auto* table_cmd = app.add_subcommand("table", "reproduce a parameter table");
    std::string t_id = "hermitian", t_mode = "closed_form";
    std::uint64_t t_max_order = 256;
    table_cmd->add_option("--id", t_id, "hermitian | thc | as_p3t2 | as_p5t2 | as_rate | as_dist")
        ->capture_default_str();
    table_cmd->add_option("--mode", t_mode, "closed_form | enumerate")->capture_default_str();
    table_cmd->add_option("--max-order", t_max_order, "enumeration cap on the field order")
        ->capture_default_str();

    // figure-data
    auto* fig_cmd = app.add_subcommand("figure-data", "rate comparison data per availability");
    std::uint64_t fig_p = 3, fig_tmin = 2, fig_tmax = 10, fig_h = 0;
    std::string fig_policy = "max_rate";
    fig_cmd->add_option("--p", fig_p, "prime characteristic")->capture_default_str();
    fig_cmd->add_option("--t-min", fig_tmin, "first availability")->capture_default_str();
    fig_cmd->add_option("--t-max", fig_tmax, "last availability")->capture_default_str();
    fig_cmd->add_option("--policy", fig_policy, "max_rate | zero")->capture_default_str();
    fig_cmd->add_option("--fixed-h", fig_h, "fix h instead of h = t");

    for (auto* sub : {field_cmd, curve_cmd, build_cmd, recover_cmd, certify_cmd, bounds_cmd,
                      table_cmd, fig_cmd})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    fs::create_directories(g.out_dir);

    if (*field_cmd) {
        auto field = Field::make(f_p, f_degree,
                                 f_modulus.empty() ? std::vector<std::uint32_t>{}
                                                   : parse_u32_list(f_modulus));
        json j = field_to_json(*field);
        j["order"] = field->order();
        if (f_kernel) {
            json basis = json::array();
            for (const auto& e : trace_kernel_basis(*field))
                basis.push_back({{"enc", e.enc}, {"poly", field->to_string(e.enc)}});
            j["trace_kernel_basis"] = basis;
        }
        emit_json(j, g);
        return 0;
    }

    if (*curve_cmd) {
        auto fp = curve_args.fiber();
        const auto& shape = fp->shape();
        json j;
        j["family"] = family_name(shape.family);
        j["p"] = shape.p;
        j["h"] = shape.h;
        j["t"] = shape.t;
        j["field"] = field_to_json(fp->field());
        json factors = json::array();
        for (const auto& rel : fp->factors()) factors.push_back(factor_to_json(rel));
        j["factors"] = factors;
        j["d_g"] = shape.product_degree();
        j["d_h"] = shape.factor_degrees();
        json dy = json::array();
        for (const auto& d : shape.coordinate_degrees()) dy.push_back(d.str());
        j["d_y"] = dy;
        json psi = json::array();  // degree of y_i on its own factor curve
        for (const auto& d : shape.factor_coordinate_degrees()) psi.push_back(d.str());
        j["d_y_factor"] = psi;
        j["split_count_closed_form"] = shape.split_count().str();
        j["n_closed_form"] = shape.length().str();
        if (curve_enumerate) {
            if (fp->field().order() > curve_cap)
                throw TooLargeToEnumerate("field order exceeds --max-order");
            auto eval = fp->evaluation_set(nullptr, g.jobs);
            j["split_count"] = eval.S.size();
            j["omega"] = eval.omega;
            j["n"] = eval.size();
            auto rep = fp->point_count_check(curve_cap);
            j["point_count"] = {{"enumerated", rep.enumerated},
                                {"affine", rep.affine_count.str()},
                                {"infinity", rep.infinity_points},
                                {"closed_form_total", rep.closed_form_total.str()},
                                {"match", rep.match}};
        }
        emit_json(j, g);
        return 0;
    }

    auto build_and_index = [&](const FamilyArgs& args) {
        check_l_bound(args.shape(), args.l);
        auto fp = args.fiber();
        LrcCode code = build_code(fp, args.l, nullptr, g.jobs);
        return code;
    };

    if (*build_cmd) {
        LrcCode code = build_and_index(build_args);
        RecoveryIndex index = build_recovery_index(code);
        fs::path out(g.out_dir);
        write_file(out / "metadata.json", code_metadata_to_json(code).dump(2) + "\n");
        write_file(out / "generator_matrix.csv", matrix_csv(code));
        write_file(out / "points.csv", points_csv(code.eval));
        write_file(out / "recovery_index.json", recovery_index_json(code, index).dump() + "\n");
        emit_json(code_metadata_to_json(code), g);
        return 0;
    }

    if (*recover_cmd) {
        LrcCode code = build_and_index(recover_args);
        RecoveryIndex index = build_recovery_index(code);
        ErasureWord word;
        if (!word_file.empty()) {
            word = read_word_csv(word_file, code.params.n);
        } else {
            std::mt19937_64 rng(g.seed);
            std::vector<std::uint32_t> message(code.params.k);
            for (auto& m : message)
                m = std::uint32_t(rng() % code.field().order());
            word = ErasureWord::complete(encode(code, std::span<const std::uint32_t>(message)));
            std::uint64_t erase = std::max<std::uint64_t>(demo_erasures, 1);
            for (std::uint64_t i = 0; i < erase; ++i)
                word.present[rng() % code.params.n] = 0;
        }
        RepairReport report = recover_multi(code.eval, index, std::move(word));
        json j;
        json repaired = json::array(), sets_used = json::array();
        for (const auto& step : report.repaired) {
            repaired.push_back(step.position);
            sets_used.push_back(step.set_used);
        }
        j["repaired"] = repaired;
        j["sets_used"] = sets_used;
        j["failed"] = report.failed;
        j["complete"] = report.complete();
        fs::path out(g.out_dir);
        write_file(out / "repaired.csv", word_csv(report.word));
        write_file(out / "recovery_report.json", j.dump(2) + "\n");
        emit_json(j, g);
        return report.complete() ? 0 : 1;
    }

    if (*certify_cmd) {
        check_l_bound(certify_args.shape(), certify_args.l);
        auto fp = certify_args.fiber();
        auto eval = fp->evaluation_set(nullptr, g.jobs);
        CertifyOptions opts;
        opts.bruteforce_cap = brute_cap;
        opts.search_budget = search_budget;
        opts.try_search = !no_search;
        opts.jobs = g.jobs;
        // brute force needs the generator matrix; build it when affordable
        std::optional<LrcCode> code;
        BigInt space = big_pow(BigInt(fp->field().order()),
                               fp->shape().dimension(certify_args.l).convert_to<std::uint64_t>());
        if (space <= brute_cap) {
            code = build_code(fp, certify_args.l, nullptr, g.jobs);
            opts.code = &*code;
        }
        Certificate cert = certify_distance(*fp, eval, certify_args.l, opts);
        json j = certificate_to_json(cert);
        write_file(fs::path(g.out_dir) / "certificate.json", j.dump(2) + "\n");
        emit_json(j, g);
        return 0;
    }

    if (*bounds_cmd) {
        std::vector<std::int64_t> locs;
        for (auto r : parse_u64_list(b_localities)) locs.push_back(std::int64_t(r));
        auto rep = bound_report(b_n, b_k, locs,
                                b_d >= 0 ? std::optional<std::int64_t>(b_d) : std::nullopt);
        emit_json(bound_report_to_json(rep), g);
        return 0;
    }

    if (*table_cmd) {
        TableOptions opts;
        opts.mode = t_mode == "enumerate" ? TableMode::Enumerate : TableMode::ClosedForm;
        if (t_mode != "enumerate" && t_mode != "closed_form")
            throw BadParams("unknown table mode '" + t_mode + "'");
        opts.max_field_order = t_max_order;
        opts.jobs = g.jobs;
        Table table = make_table(table_from_string(t_id), opts);
        if (g.format == "csv")
            std::cout << table_to_csv(table);
        else if (g.format == "json")
            std::cout << table_to_json(table).dump() << "\n";
        else
            std::cout << table_to_pretty(table);
        return 0;
    }

    if (*fig_cmd) {
        if (fig_policy != "max_rate" && fig_policy != "zero")
            throw BadParams("unknown l policy '" + fig_policy + "'");
        Table table = figure_table(fig_p, fig_tmin, fig_tmax, fig_policy == "max_rate", fig_h);
        if (g.format == "json")
            std::cout << table_to_json(table).dump() << "\n";
        else if (g.format == "pretty")
            std::cout << table_to_pretty(table);
        else
            std::cout << table_to_csv(table);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BadParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleScale& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
