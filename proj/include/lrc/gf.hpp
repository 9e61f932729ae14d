#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// An element of a concrete Field, identified by its integer encoding
// enc(x) = sum c_i p^i over the coefficient vector.  Elements keep a pointer
// to their field; mixing fields throws FieldMismatch.
struct FieldElement {
    const Field* field = nullptr;
    std::uint64_t enc = 0;

    FieldElement() = default;
    FieldElement(const Field& f, std::uint64_t e) : field(&f), enc(e) {}

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement inv() const;
    bool is_zero() const { return enc == 0; }

    bool operator==(const FieldElement& o) const { return enc == o.enc && same_field(o); }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    bool same_field(const FieldElement& o) const;
};

// GF(p^degree) in the polynomial basis over GF(p).  Immutable after
// construction; all operations are const and safe to share across threads.
class Field {
  public:
    // When modulus is omitted, picks the lexicographically least monic
    // irreducible polynomial of the requested degree, comparing coefficient
    // vectors (c0, c1, ..., c_{degree-1}) low-degree-first.  Deterministic.
    static FieldPtr make(std::uint64_t p, std::uint64_t degree,
                         std::vector<std::uint32_t> modulus = {});

    std::uint64_t characteristic() const { return p_; }
    std::uint64_t degree() const { return degree_; }
    std::uint64_t order() const { return order_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement element(std::uint64_t enc) const;
    FieldElement zero() const { return {*this, 0}; }
    FieldElement one() const { return {*this, 1}; }
    // Embeds an integer as a prime-subfield constant (reduced mod p).
    FieldElement from_int(std::uint64_t c) const { return {*this, c % p_}; }

    // Raw arithmetic on encodings.  Hot paths use these directly.
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    // Quadratic-subfield structure: for degree 2h the field is a degree-2
    // extension of GF(q), q = p^h, realized as the fixed field of x -> x^q.
    bool has_quadratic_subfield() const { return degree_ % 2 == 0; }
    std::uint64_t subfield_order() const;          // q; throws OddDegree
    std::uint64_t rel_trace(std::uint64_t x) const;  // x^q + x
    std::uint64_t rel_norm(std::uint64_t x) const;   // x^{q+1}
    std::uint64_t artin_schreier(std::uint64_t x) const;  // x^p - x
    bool in_subfield(std::uint64_t x) const;       // x^q == x
    // Trace down to GF(p): sum of x^{p^i} over 0 <= i < degree.
    std::uint64_t absolute_trace(std::uint64_t x) const;

    std::vector<std::uint32_t> coeffs(std::uint64_t enc) const;
    std::uint64_t from_coeffs(const std::vector<std::uint32_t>& c) const;

    // "c0+c1*b+... (mod p)" with zero terms omitted; plain decimal when
    // poly=false.  parse() accepts both forms.
    std::string to_string(std::uint64_t enc, bool poly = true) const;
    std::uint64_t parse(std::string_view text) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && degree_ == o.degree_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

  private:
    Field(std::uint64_t p, std::uint64_t degree, std::vector<std::uint32_t> modulus);

    std::uint64_t mul_poly(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t p_, degree_, order_;
    std::vector<std::uint32_t> modulus_;
    // Dense tables for small fields; larger fields fall back to polynomial
    // arithmetic per operation.
    std::vector<std::uint32_t> add_table_, mul_table_, inv_table_;
    bool tabled_ = false;
};

enum class PreimageMap { RelTrace, RelNorm, ArtinSchreier };

// Exact solution set of map(x) = target by exhaustive scan, sorted by enc.
// An Artin-Schreier preimage is empty or has exactly p elements.
std::vector<FieldElement> preimage_set(const Field& f, PreimageMap map, FieldElement target);

// h = degree/2 elements generating ker(rel_trace) over GF(p).  The default
// scan keeps elements in enc order, discarding dependent ones.  Overrides are
// validated for kernel membership and GF(p)-independence.
std::vector<FieldElement> trace_kernel_basis(const Field& f,
                                             const std::vector<FieldElement>& overrides = {});

// GF(p)-linear independence of the coefficient vectors.
bool fp_independent(const Field& f, const std::vector<std::uint64_t>& encs);

bool is_prime(std::uint64_t n);

}  // namespace lrc
