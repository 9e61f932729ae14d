#include "lrc/curves.hpp"

#include <algorithm>

#include "lrc/parallel.hpp"

namespace lrc {

std::uint64_t FactorRelation::map_degree(const Field& f) const {
    switch (form) {
        case FactorForm::ArtinSchreier: return f.characteristic();
        case FactorForm::Trace: return f.subfield_order();
        case FactorForm::Norm: return f.subfield_order() + 1;
    }
    throw BadParams("unknown factor form");
}

FiberProduct::FiberProduct(FamilyShape shape, FieldPtr field, std::vector<FactorRelation> factors)
    : shape_(shape), field_(std::move(field)), factors_(std::move(factors)) {
    if (!field_) throw BadParams("fiber product needs a field");
    if (field_->degree() != shape_.field_degree())
        throw DegreeMismatch("field degree does not match the family shape");
    if (factors_.size() != shape_.t) throw BadParams("factor count does not match availability");
    auto expected = shape_.factor_degrees();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].coeff == 0) throw BadParams("factor coefficient must be nonzero");
        if (factors_[i].map_degree(*field_) != expected[i])
            throw BadParams("factor form degree does not match the family shape");
    }

    const Field& f = *field_;
    trace_pre_.resize(f.order());
    norm_pre_.resize(f.order());
    as_pre_.resize(f.order());
    for (std::uint64_t x = 0; x < f.order(); ++x) {
        trace_pre_[f.rel_trace(x)].push_back(std::uint32_t(x));
        norm_pre_[f.rel_norm(x)].push_back(std::uint32_t(x));
        as_pre_[f.artin_schreier(x)].push_back(std::uint32_t(x));
    }
}

std::shared_ptr<const FiberProduct> FiberProduct::make(FamilyShape shape, FieldPtr field,
                                                       std::vector<std::uint64_t> as_coeffs) {
    if (!field) field = Field::make(shape.p, shape.field_degree());
    if (field->characteristic() != shape.p)
        throw FieldMismatch("field characteristic does not match the family shape");
    std::uint64_t q = shape.q();

    std::vector<FactorRelation> factors;
    switch (shape.family) {
        case Family::HermitianRational:
            factors.push_back({FactorForm::Trace, 1, q + 1, false});
            break;
        case Family::HermitianLrc2:
            factors.push_back({FactorForm::Trace, 1, 1, false});
            factors.push_back({FactorForm::Norm, 1, 1, false});
            break;
        case Family::HermitianProduct:
            factors.push_back({FactorForm::Norm, 1, 1, true});
            factors.push_back({FactorForm::Trace, 1, q + 1, false});
            break;
        case Family::ArtinSchreier: {
            if (as_coeffs.empty()) {
                auto basis = trace_kernel_basis(*field);
                for (std::uint64_t i = 0; i < shape.t; ++i) as_coeffs.push_back(basis[i].enc);
            } else {
                if (as_coeffs.size() != shape.t)
                    throw BadParams("expected " + std::to_string(shape.t) +
                                    " Artin-Schreier coefficients");
                for (auto c : as_coeffs) {
                    field->element(c);  // range check
                    if (field->rel_trace(c) != 0)
                        throw NotAKernelElement("coefficient " + field->to_string(c) +
                                                " is not in the trace kernel");
                }
                if (!fp_independent(*field, as_coeffs))
                    throw NotIndependent("Artin-Schreier coefficients are dependent over GF(p)");
            }
            for (auto c : as_coeffs) factors.push_back({FactorForm::ArtinSchreier, c, q + 1, false});
            break;
        }
    }
    return std::make_shared<FiberProduct>(shape, field, std::move(factors));
}

std::vector<std::uint64_t> FiberProduct::as_coeffs() const {
    std::vector<std::uint64_t> out;
    for (const auto& rel : factors_)
        if (rel.form == FactorForm::ArtinSchreier) out.push_back(rel.coeff);
    return out;
}

const std::vector<std::vector<std::uint32_t>>& FiberProduct::preimages(FactorForm form) const {
    switch (form) {
        case FactorForm::ArtinSchreier: return as_pre_;
        case FactorForm::Trace: return trace_pre_;
        case FactorForm::Norm: return norm_pre_;
    }
    throw BadParams("unknown factor form");
}

std::uint64_t FiberProduct::rhs_value(const FactorRelation& rel, std::uint64_t alpha) const {
    const Field& f = *field_;
    std::uint64_t v = rel.swapped ? f.rel_trace(alpha) : f.pow(alpha, rel.exponent);
    return f.mul(rel.coeff, v);
}

std::vector<std::vector<std::uint32_t>> FiberProduct::factor_solutions(std::uint64_t alpha) const {
    std::vector<std::vector<std::uint32_t>> sols;
    sols.reserve(factors_.size());
    for (const auto& rel : factors_) sols.push_back(preimages(rel.form)[rhs_value(rel, alpha)]);
    return sols;
}

std::vector<std::vector<std::uint32_t>> FiberProduct::fiber(std::uint64_t alpha) const {
    auto sols = factor_solutions(alpha);
    std::vector<std::vector<std::uint32_t>> out;
    std::uint64_t count = 1;
    for (const auto& s : sols) count *= s.size();
    if (count == 0) return out;
    out.reserve(count);
    std::vector<std::size_t> idx(sols.size(), 0);
    while (true) {
        std::vector<std::uint32_t> tuple(sols.size());
        for (std::size_t i = 0; i < sols.size(); ++i) tuple[i] = sols[i][idx[i]];
        out.push_back(std::move(tuple));
        std::size_t i = sols.size();
        while (i-- > 0) {
            if (++idx[i] < sols[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::uint64_t FiberProduct::fiber_size(std::uint64_t alpha) const {
    std::uint64_t count = 1;
    for (const auto& rel : factors_) count *= preimages(rel.form)[rhs_value(rel, alpha)].size();
    return count;
}

FiberProduct::SplitLocus FiberProduct::split_locus() const {
    SplitLocus out;
    std::uint64_t d_g = shape_.product_degree();
    out.fiber_sizes.resize(field_->order());
    for (std::uint64_t a = 0; a < field_->order(); ++a) {
        std::uint64_t s = fiber_size(a);
        out.fiber_sizes[a] = std::uint32_t(s);
        if (s == d_g)
            out.S.push_back(std::uint32_t(a));
        else if (s > 0)
            out.omega.push_back(std::uint32_t(a));
    }
    return out;
}

EvaluationSet FiberProduct::evaluation_set(const std::function<bool(std::uint64_t)>& filter,
                                           unsigned jobs) const {
    auto locus = split_locus();
    EvaluationSet out;
    out.field = field_;
    out.t = shape_.t;
    out.omega = locus.omega;
    out.fiber_sizes = locus.fiber_sizes;
    for (auto a : locus.S)
        if (!filter || filter(a)) out.S.push_back(a);
    if (out.S.empty()) throw EmptyEvaluationSet("no split base values remain");

    std::uint64_t d_g = shape_.product_degree();
    std::uint64_t width = shape_.t + 1;
    out.pts.resize(out.S.size() * d_g * width);
    parallel_chunks(out.S.size(), jobs, [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t si = lo; si < hi; ++si) {
            std::uint32_t alpha = out.S[si];
            auto tuples = fiber(alpha);
            std::uint64_t base = si * d_g * width;
            for (std::uint64_t ti = 0; ti < tuples.size(); ++ti) {
                out.pts[base + ti * width] = alpha;
                for (std::uint64_t i = 0; i < shape_.t; ++i)
                    out.pts[base + ti * width + 1 + i] = tuples[ti][i];
            }
        }
    });
    return out;
}

PointCountReport FiberProduct::point_count_check(std::uint64_t enumeration_cap) const {
    PointCountReport rep;
    BigInt qq = shape_.q();
    BigInt closed_affine;
    switch (shape_.family) {
        case Family::HermitianRational:
        case Family::HermitianLrc2: closed_affine = qq * qq * qq; break;
        case Family::HermitianProduct: closed_affine = qq * qq * qq * qq; break;
        case Family::ArtinSchreier:
            closed_affine = big_pow(shape_.p, shape_.t) * qq * qq;
            break;
    }
    rep.infinity_points = 1;
    rep.closed_form_total = closed_affine + rep.infinity_points;
    if (field_->order() > enumeration_cap) {
        rep.enumerated = false;
        rep.affine_count = closed_affine;
        rep.match = true;
        return rep;
    }
    rep.enumerated = true;
    BigInt total = 0;
    for (std::uint64_t a = 0; a < field_->order(); ++a) total += fiber_size(a);
    rep.affine_count = total;
    rep.match = (total == closed_affine);
    return rep;
}

}  // namespace lrc
