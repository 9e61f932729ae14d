#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/rational.hpp"

namespace lrc {

// The four concrete construction families.  All of them evaluate on a curve
// fibered over the projective line in y0, with points over GF(q^2), q = p^h.
//
//   HermitianRational: one trace factor  y1^q + y1 = y0^{q+1}   (t = 1)
//   HermitianLrc2:     trace factor y1^q + y1 = y0 and norm factor
//                      y2^{q+1} = y0                            (t = 2)
//   HermitianProduct:  norm factor y1^{q+1} = y0^q + y0 and trace factor
//                      y2^q + y2 = y0^{q+1}                     (t = 2)
//   ArtinSchreier:     t factors y_i^p - y_i = a_i y0^{q+1}, the a_i spanning
//                      part of the relative trace kernel        (1 <= t <= h)
enum class Family { HermitianRational, HermitianLrc2, HermitianProduct, ArtinSchreier };

std::string family_name(Family f);           // hermitian_rational, hermitian_lrc2, thc, as
Family family_from_name(const std::string&); // throws BadParams

struct FamilyShape {
    Family family;
    std::uint64_t p = 0;  // prime characteristic
    std::uint64_t h = 0;  // q = p^h
    std::uint64_t t = 1;  // availability (number of factor curves)

    static FamilyShape make(Family f, std::uint64_t p, std::uint64_t h, std::uint64_t t = 0);

    std::uint64_t q() const;
    std::uint64_t field_degree() const { return 2 * h; }

    std::uint64_t availability() const { return t; }
    std::vector<std::uint64_t> factor_degrees() const;   // d_{h_i}
    std::uint64_t product_degree() const;                // d_g = prod d_{h_i}
    // Degree of the coordinate function y_i on the full fiber product; the
    // l-term of the distance bound uses d_g (the degree of y0).
    std::vector<BigInt> coordinate_degrees() const;
    // Degree of y_i on its own factor curve (the counting check uses these).
    std::vector<BigInt> factor_coordinate_degrees() const;
    std::vector<std::uint64_t> localities() const;       // d_{h_i} - 1

    BigInt split_count() const;                          // |S|
    BigInt length() const;                               // n = d_g * |S|
    BigInt dimension(const BigInt& l) const;             // (l+1) * prod(d_{h_i}-1)
    BigInt distance_lower_bound(const BigInt& l) const;  // may be non-positive
    BigRat rate(const BigInt& l) const;
    BigInt max_l_positive() const;  // largest l with lower bound >= 1

    // Largest l for which the family's minimum-weight witness construction is
    // defined (HermitianLrc2 admits only l = 0).
    BigInt witness_l_cap() const;
    // Weight the family witness attains when its validity conditions hold;
    // nullopt outside the construction's l-range.
    std::optional<BigInt> witness_distance_formula(const BigInt& l) const;
};

struct ClosedFormParams {
    BigInt n, k, d_lower;
    std::vector<std::uint64_t> localities;
    BigRat rate;
};

ClosedFormParams closed_form_params(const FamilyShape& shape, const BigInt& l);

}  // namespace lrc
