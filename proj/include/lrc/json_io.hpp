#pragma once

#include <json.hpp>

#include "lrc/bounds.hpp"
#include "lrc/code_builder.hpp"
#include "lrc/distance.hpp"

namespace lrc {

using nlohmann::json;

inline json field_to_json(const Field& f) {
    return json{{"p", f.characteristic()}, {"degree", f.degree()}, {"modulus", f.modulus()}};
}

inline FieldPtr field_from_json(const json& j) {
    return Field::make(j.at("p").get<std::uint64_t>(), j.at("degree").get<std::uint64_t>(),
                       j.at("modulus").get<std::vector<std::uint32_t>>());
}

inline json factor_to_json(const FactorRelation& rel) {
    const char* fam = rel.form == FactorForm::ArtinSchreier ? "AS"
                      : rel.form == FactorForm::Trace       ? "trace"
                                                            : "norm";
    return json{{"family", fam}, {"c", rel.coeff}, {"m", rel.exponent}, {"swapped", rel.swapped}};
}

inline FactorRelation factor_from_json(const json& j) {
    FactorRelation rel;
    std::string fam = j.at("family").get<std::string>();
    if (fam == "AS")
        rel.form = FactorForm::ArtinSchreier;
    else if (fam == "trace")
        rel.form = FactorForm::Trace;
    else if (fam == "norm")
        rel.form = FactorForm::Norm;
    else
        throw BadParams("unknown factor family '" + fam + "'");
    rel.coeff = j.at("c").get<std::uint64_t>();
    rel.exponent = j.at("m").get<std::uint64_t>();
    rel.swapped = j.value("swapped", false);
    return rel;
}

inline json witness_to_json(const WitnessSpec& w) {
    json j{{"l", w.l},
           {"F0", w.F0},
           {"F", w.F},
           {"certified_weight", w.certified_weight}};
    j["origin"] = w.origin == WitnessOrigin::Theorem    ? "constructed-by-theorem"
                  : w.origin == WitnessOrigin::Searched ? "searched"
                                                        : "user-supplied";
    return j;
}

inline json certificate_to_json(const Certificate& c) {
    json j;
    j["status"] = c.exact ? "exact" : "interval";
    if (c.exact) {
        j["d"] = c.lower;
    } else {
        j["interval"] = {c.lower, c.upper};
    }
    j["lower_provenance"] = c.lower_provenance;
    j["upper_provenance"] = c.upper_provenance;
    if (c.brute_force) j["brute_force"] = *c.brute_force;
    if (c.witness) j["witness"] = witness_to_json(*c.witness);
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

inline json bound_report_to_json(const BoundReport& r) {
    json j{{"singleton", r.singleton},
           {"tamo_barg_d", r.tamo_barg_d},
           {"bhadane_thangaraj", r.bhadane_thangaraj},
           {"bmq", r.bmq},
           {"tb_rate_cap", render_decimal(r.tb_rate_cap, 3)},
           {"product_rate", render_decimal(r.product_rate, 3)},
           {"wang_rate", render_decimal(r.wang_rate, 3)}};
    if (r.defect) {
        j["defect"] = *r.defect;
        j["relative_defect"] = render_decimal(*r.relative_defect, 4);
    }
    return j;
}

inline json code_metadata_to_json(const LrcCode& code) {
    const auto& shape = code.fiber->shape();
    json j;
    j["family"] = family_name(shape.family);
    j["p"] = shape.p;
    j["h"] = shape.h;
    j["t"] = shape.t;
    j["l"] = code.basis.l;
    j["field"] = field_to_json(code.field());
    j["n"] = code.params.n;
    j["k"] = code.params.k;
    j["d_lower"] = code.params.d_lower;
    j["localities"] = code.params.localities;
    j["rate"] = render_decimal(code.params.rate, 6);
    json factors = json::array();
    for (const auto& rel : code.fiber->factors()) factors.push_back(factor_to_json(rel));
    j["factors"] = factors;
    return j;
}

}  // namespace lrc
