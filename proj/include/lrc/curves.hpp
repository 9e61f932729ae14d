#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "lrc/families.hpp"
#include "lrc/gf.hpp"
#include "lrc/rational.hpp"

namespace lrc {

enum class FactorForm { ArtinSchreier, Trace, Norm };  // y^p - y, y^q + y, y^{q+1}

// One factor curve, relating its coordinate y_i to the base coordinate y0.
// Normally  form(y_i) = c * y0^m.  With `swapped` set the right-hand side is
// c * (y0^q + y0) instead, as in the norm-form factor y1^{q+1} = y0^q + y0.
struct FactorRelation {
    FactorForm form;
    std::uint64_t coeff = 1;     // enc of c, nonzero
    std::uint64_t exponent = 1;  // m
    bool swapped = false;

    std::uint64_t map_degree(const Field& f) const;  // p / q / q+1
};

// The ordered evaluation set B over the split locus S, plus the fiber
// classification of every base value.
struct EvaluationSet {
    FieldPtr field;
    std::uint64_t t = 0;
    std::vector<std::uint32_t> S;         // split base values, enc ascending
    std::vector<std::uint32_t> omega;     // partially split base values
    std::vector<std::uint32_t> pts;       // n * (t+1) coordinates, lex order
    std::vector<std::uint32_t> fiber_sizes;  // indexed by base enc

    std::uint64_t size() const { return t + 1 ? pts.size() / (t + 1) : 0; }
    std::uint32_t coord(std::uint64_t pos, std::uint64_t i) const {
        return pts[pos * (t + 1) + i];
    }
    const std::uint32_t* point(std::uint64_t pos) const { return &pts[pos * (t + 1)]; }
};

struct PointCountReport {
    bool enumerated = false;
    BigInt affine_count = 0;       // enumerated when possible, else closed form
    std::uint64_t infinity_points = 1;
    BigInt closed_form_total = 0;  // affine closed form + points at infinity
    bool match = true;
};

// A fiber product of factor curves over the y0-line, tied to a concrete
// field.  Construction precomputes per-form preimage tables, so fibers are
// assembled by lookup.
class FiberProduct {
  public:
    FiberProduct(FamilyShape shape, FieldPtr field, std::vector<FactorRelation> factors);

    // Builds the family's standard factor list.  A null field gets the
    // default (lexicographically least modulus) field of the right size.
    // For the Artin-Schreier family, coefficients default to the first t
    // trace-kernel generators; explicit coefficients are validated.
    static std::shared_ptr<const FiberProduct> make(FamilyShape shape, FieldPtr field = nullptr,
                                                    std::vector<std::uint64_t> as_coeffs = {});

    const Field& field() const { return *field_; }
    FieldPtr field_ptr() const { return field_; }
    const FamilyShape& shape() const { return shape_; }
    const std::vector<FactorRelation>& factors() const { return factors_; }
    // Coefficients a_i of the Artin-Schreier factors (empty otherwise).
    std::vector<std::uint64_t> as_coeffs() const;

    // Per-factor solution sets {y_i : relation holds at y0 = alpha}, each
    // sorted by enc; the fiber is their Cartesian product.
    std::vector<std::vector<std::uint32_t>> factor_solutions(std::uint64_t alpha) const;
    std::vector<std::vector<std::uint32_t>> fiber(std::uint64_t alpha) const;  // tuples (y1..yt)
    std::uint64_t fiber_size(std::uint64_t alpha) const;

    struct SplitLocus {
        std::vector<std::uint32_t> S;
        std::vector<std::uint32_t> omega;        // 0 < size < d_g
        std::vector<std::uint32_t> fiber_sizes;  // by base enc
    };
    SplitLocus split_locus() const;

    EvaluationSet evaluation_set(const std::function<bool(std::uint64_t)>& filter = nullptr,
                                 unsigned jobs = 1) const;

    PointCountReport point_count_check(std::uint64_t enumeration_cap = (1u << 20)) const;

  private:
    std::uint64_t rhs_value(const FactorRelation& rel, std::uint64_t alpha) const;

    FamilyShape shape_;
    FieldPtr field_;
    std::vector<FactorRelation> factors_;
    // preimage lists per form, indexed by image enc
    std::vector<std::vector<std::uint32_t>> trace_pre_, norm_pre_, as_pre_;
    const std::vector<std::vector<std::uint32_t>>& preimages(FactorForm form) const;
};

}  // namespace lrc
