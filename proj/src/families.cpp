#include "lrc/families.hpp"

#include "lrc/errors.hpp"

namespace lrc {

std::string family_name(Family f) {
    switch (f) {
        case Family::HermitianRational: return "hermitian_rational";
        case Family::HermitianLrc2: return "hermitian_lrc2";
        case Family::HermitianProduct: return "thc";
        case Family::ArtinSchreier: return "as";
    }
    throw BadParams("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "hermitian_rational") return Family::HermitianRational;
    if (name == "hermitian_lrc2") return Family::HermitianLrc2;
    if (name == "thc") return Family::HermitianProduct;
    if (name == "as") return Family::ArtinSchreier;
    throw BadParams("unknown family '" + name + "'");
}

FamilyShape FamilyShape::make(Family f, std::uint64_t p, std::uint64_t h, std::uint64_t t) {
    FamilyShape s;
    s.family = f;
    s.p = p;
    s.h = h;
    switch (f) {
        case Family::HermitianRational: s.t = 1; break;
        case Family::HermitianLrc2:
        case Family::HermitianProduct: s.t = 2; break;
        case Family::ArtinSchreier:
            if (t == 0) t = h;
            if (t < 1 || t > h)
                throw BadParams("availability t must satisfy 1 <= t <= h");
            s.t = t;
            break;
    }
    if (p < 2 || h < 1) throw BadParams("need prime p and h >= 1");
    return s;
}

std::uint64_t FamilyShape::q() const {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < h; ++i) r *= p;
    return r;
}

std::vector<std::uint64_t> FamilyShape::factor_degrees() const {
    std::uint64_t qq = q();
    switch (family) {
        case Family::HermitianRational: return {qq};
        case Family::HermitianLrc2: return {qq, qq + 1};
        case Family::HermitianProduct: return {qq + 1, qq};
        case Family::ArtinSchreier: return std::vector<std::uint64_t>(t, p);
    }
    throw BadParams("unknown family");
}

std::uint64_t FamilyShape::product_degree() const {
    std::uint64_t d = 1;
    for (auto dh : factor_degrees()) d *= dh;
    return d;
}

std::vector<BigInt> FamilyShape::coordinate_degrees() const {
    BigInt qq = q();
    switch (family) {
        case Family::HermitianRational: return {qq + 1};
        case Family::HermitianLrc2: return {qq + 1, qq};
        case Family::HermitianProduct: return {qq * qq, (qq + 1) * (qq + 1)};
        case Family::ArtinSchreier: {
            BigInt d = (qq + 1) * big_pow(p, t - 1);
            return std::vector<BigInt>(t, d);
        }
    }
    throw BadParams("unknown family");
}

std::vector<BigInt> FamilyShape::factor_coordinate_degrees() const {
    BigInt qq = q();
    switch (family) {
        case Family::HermitianRational: return {qq + 1};
        // Both Hermitian-LRC2 factor curves are rational in their own
        // coordinate, so y_i has degree 1 there.
        case Family::HermitianLrc2: return {BigInt(1), BigInt(1)};
        case Family::HermitianProduct: return {qq, qq + 1};
        case Family::ArtinSchreier: return std::vector<BigInt>(t, qq + 1);
    }
    throw BadParams("unknown family");
}

std::vector<std::uint64_t> FamilyShape::localities() const {
    auto d = factor_degrees();
    for (auto& x : d) --x;
    return d;
}

BigInt FamilyShape::split_count() const {
    BigInt qq = q();
    switch (family) {
        case Family::HermitianRational: return qq * qq;
        case Family::HermitianLrc2: return qq - 1;
        case Family::HermitianProduct: return qq * qq - qq;
        case Family::ArtinSchreier: return qq * qq;
    }
    throw BadParams("unknown family");
}

BigInt FamilyShape::length() const { return split_count() * product_degree(); }

BigInt FamilyShape::dimension(const BigInt& l) const {
    BigInt k = l + 1;
    for (auto dh : factor_degrees()) k *= dh - 1;
    return k;
}

BigInt FamilyShape::distance_lower_bound(const BigInt& l) const {
    BigInt d = length() - l * product_degree();
    auto dh = factor_degrees();
    auto dy = coordinate_degrees();
    for (std::size_t i = 0; i < dh.size(); ++i) d -= BigInt(dh[i] - 2) * dy[i];
    return d;
}

BigRat FamilyShape::rate(const BigInt& l) const { return BigRat(dimension(l), length()); }

BigInt FamilyShape::max_l_positive() const {
    // largest l with distance_lower_bound(l) >= 1
    BigInt fixed = distance_lower_bound(0);
    return floor_div(fixed - 1, BigInt(product_degree()));
}

BigInt FamilyShape::witness_l_cap() const {
    BigInt qq = q();
    switch (family) {
        case Family::HermitianRational: return qq * qq - qq - 2;
        case Family::HermitianLrc2: return 0;
        case Family::HermitianProduct: return qq;
        case Family::ArtinSchreier: return qq * qq - t * qq - t - 1;
    }
    throw BadParams("unknown family");
}

std::optional<BigInt> FamilyShape::witness_distance_formula(const BigInt& l) const {
    if (l < 0 || l > witness_l_cap()) return std::nullopt;
    if (family == Family::HermitianProduct && q() <= 3) return std::nullopt;
    return distance_lower_bound(l);
}

ClosedFormParams closed_form_params(const FamilyShape& shape, const BigInt& l) {
    if (l < 0 || l >= shape.split_count())
        throw LTooLarge("l must satisfy 0 <= l < |S|");
    ClosedFormParams out;
    out.n = shape.length();
    out.k = shape.dimension(l);
    out.d_lower = shape.distance_lower_bound(l);
    out.localities = shape.localities();
    out.rate = shape.rate(l);
    return out;
}

}  // namespace lrc
