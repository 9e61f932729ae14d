#include "lrc/gf.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace lrc {

namespace {

// Fields bigger than this do per-operation polynomial arithmetic instead of
// carrying order^2 lookup tables.
constexpr std::uint64_t kTableCap = 1024;

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

int poly_deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
    std::size_t d = mod.size() - 1;
    std::vector<std::uint64_t> conv(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            conv[i + j] = (conv[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    // reduce by the monic modulus
    for (std::size_t i = conv.size(); i-- > d;) {
        std::uint64_t c = conv[i];
        if (!c) continue;
        conv[i] = 0;
        for (std::size_t j = 0; j <= d; ++j) {
            std::uint64_t& slot = conv[i - d + j];
            slot = (slot + p - (c * mod[j]) % p) % p;
        }
    }
    Poly out(d, 0);
    for (std::size_t i = 0; i < d && i < conv.size(); ++i) out[i] = std::uint32_t(conv[i]);
    return out;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& mod, std::uint64_t p) {
    Poly r(mod.size() - 1, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    auto inv_mod_p = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (poly_deg(b) >= 0) {
        // a mod b
        int db = poly_deg(b);
        std::uint64_t lead_inv = inv_mod_p(b[db]);
        Poly r = a;
        for (int i = poly_deg(r); i >= db; i = poly_deg(r)) {
            std::uint64_t c = std::uint64_t(r[i]) * lead_inv % p;
            if (!c) { r[i] = 0; continue; }
            for (int j = 0; j <= db; ++j)
                r[i - db + j] = std::uint32_t((r[i - db + j] + p - (c * b[j]) % p) % p);
        }
        a = std::move(b);
        b = std::move(r);
        b.resize(a.size(), 0);
    }
    return a;
}

// Rabin irreducibility: f of degree d over GF(p) is irreducible iff
// x^{p^d} == x (mod f) and gcd(x^{p^{d/r}} - x, f) = 1 for every prime r | d.
bool poly_irreducible(const Poly& f, std::uint64_t p) {
    int d = poly_deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    std::uint64_t pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;

    Poly x(f.size() - 1, 0);
    if (x.size() < 2) return false;
    x[1] = 1;

    Poly xpd = poly_pow_mod(x, pd, f, p);
    if (xpd != x) return false;

    std::vector<int> prime_divisors;
    int dd = d;
    for (int r = 2; r * r <= dd; ++r) {
        if (dd % r == 0) {
            prime_divisors.push_back(r);
            while (dd % r == 0) dd /= r;
        }
    }
    if (dd > 1) prime_divisors.push_back(dd);

    for (int r : prime_divisors) {
        std::uint64_t e = 1;
        for (int i = 0; i < d / r; ++i) e *= p;
        Poly g = poly_pow_mod(x, e, f, p);
        // g - x
        Poly diff = g;
        diff[1] = std::uint32_t((diff[1] + p - 1) % p);
        Poly h = poly_gcd(f, diff, p);
        if (poly_deg(h) != 0) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool FieldElement::same_field(const FieldElement& o) const {
    if (field == o.field) return true;
    if (!field || !o.field) return false;
    return *field == *o.field;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (!same_field(o)) throw FieldMismatch("elements belong to different fields");
    return {*field, field->add(enc, o.enc)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (!same_field(o)) throw FieldMismatch("elements belong to different fields");
    return {*field, field->sub(enc, o.enc)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (!same_field(o)) throw FieldMismatch("elements belong to different fields");
    return {*field, field->mul(enc, o.enc)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (!same_field(o)) throw FieldMismatch("elements belong to different fields");
    return {*field, field->div(enc, o.enc)};
}
FieldElement FieldElement::operator-() const { return {*field, field->neg(enc)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {*field, field->pow(enc, e)}; }
FieldElement FieldElement::inv() const { return {*field, field->inv(enc)}; }

Field::Field(std::uint64_t p, std::uint64_t degree, std::vector<std::uint32_t> modulus)
    : p_(p), degree_(degree), modulus_(std::move(modulus)) {
    order_ = 1;
    for (std::uint64_t i = 0; i < degree_; ++i) order_ *= p_;

    if (order_ <= kTableCap) {
        tabled_ = true;
        add_table_.resize(order_ * order_);
        mul_table_.resize(order_ * order_);
        inv_table_.assign(order_, 0);
        for (std::uint64_t a = 0; a < order_; ++a) {
            for (std::uint64_t b = a; b < order_; ++b) {
                // digit-wise addition
                std::uint64_t x = a, y = b, s = 0, scale = 1;
                for (std::uint64_t i = 0; i < degree_; ++i) {
                    s += (x % p_ + y % p_) % p_ * scale;
                    x /= p_;
                    y /= p_;
                    scale *= p_;
                }
                add_table_[a * order_ + b] = add_table_[b * order_ + a] = std::uint32_t(s);
                std::uint64_t m = mul_poly(a, b);
                mul_table_[a * order_ + b] = mul_table_[b * order_ + a] = std::uint32_t(m);
                if (m == 1) {
                    inv_table_[a] = std::uint32_t(b);
                    inv_table_[b] = std::uint32_t(a);
                }
            }
        }
    }
}

FieldPtr Field::make(std::uint64_t p, std::uint64_t degree, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
    if (degree < 1) throw BadParams("extension degree must be at least 1");
    if (degree >= 64 || std::pow(double(p), double(degree)) > 9e18)
        throw InfeasibleScale("field order does not fit in 64 bits");

    if (!modulus.empty()) {
        if (modulus.size() != degree + 1)
            throw DegreeMismatch("modulus must have degree " + std::to_string(degree));
        for (auto c : modulus)
            if (c >= p) throw BadParams("modulus coefficient out of range");
        if (modulus.back() != 1) throw DegreeMismatch("modulus must be monic");
        if (!poly_irreducible(modulus, p))
            throw ReducibleModulus("modulus is reducible over GF(" + std::to_string(p) + ")");
        return FieldPtr(new Field(p, degree, std::move(modulus)));
    }

    // Lexicographically least monic irreducible: iterate coefficient tuples
    // (c0, ..., c_{degree-1}) with c0 most significant.
    std::vector<std::uint32_t> c(degree, 0);
    while (true) {
        Poly f(c.begin(), c.end());
        f.push_back(1);
        if (poly_irreducible(f, p)) return FieldPtr(new Field(p, degree, std::move(f)));
        // increment with c_{degree-1} fastest
        std::size_t i = degree;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) throw ReducibleModulus("no irreducible polynomial found");  // unreachable
        }
    }
}

FieldElement Field::element(std::uint64_t enc) const {
    if (enc >= order_) throw BadParams("element encoding out of range");
    return {*this, enc};
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
    if (tabled_) return add_table_[a * order_ + b];
    std::uint64_t s = 0, scale = 1;
    for (std::uint64_t i = 0; i < degree_; ++i) {
        s += (a % p_ + b % p_) % p_ * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return s;
}

std::uint64_t Field::neg(std::uint64_t a) const {
    std::uint64_t s = 0, scale = 1;
    for (std::uint64_t i = 0; i < degree_; ++i) {
        s += (p_ - a % p_) % p_ * scale;
        a /= p_;
        scale *= p_;
    }
    return s;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul_poly(std::uint64_t a, std::uint64_t b) const {
    Poly pa = coeffs(a), pb = coeffs(b);
    Poly r = poly_mul_mod(pa, pb, modulus_, p_);
    std::uint64_t s = 0;
    for (std::size_t i = r.size(); i-- > 0;) s = s * p_ + r[i];
    return s;
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
    if (tabled_) return mul_table_[a * order_ + b];
    return mul_poly(a, b);
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (tabled_) return inv_table_[a];
    return pow(a, order_ - 2);
}

std::uint64_t Field::div(std::uint64_t a, std::uint64_t b) const {
    if (b == 0) throw DivisionByZero("division by zero");
    return mul(a, inv(b));
}

std::uint64_t Field::subfield_order() const {
    if (!has_quadratic_subfield())
        throw OddDegree("field of degree " + std::to_string(degree_) +
                        " has no index-2 subfield");
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < degree_ / 2; ++i) q *= p_;
    return q;
}

std::uint64_t Field::rel_trace(std::uint64_t x) const { return add(pow(x, subfield_order()), x); }

std::uint64_t Field::rel_norm(std::uint64_t x) const { return mul(pow(x, subfield_order()), x); }

std::uint64_t Field::artin_schreier(std::uint64_t x) const { return sub(pow(x, p_), x); }

bool Field::in_subfield(std::uint64_t x) const { return pow(x, subfield_order()) == x; }

std::uint64_t Field::absolute_trace(std::uint64_t x) const {
    std::uint64_t acc = 0, frob = x;
    for (std::uint64_t i = 0; i < degree_; ++i) {
        acc = add(acc, frob);
        frob = pow(frob, p_);
    }
    return acc;
}

std::vector<std::uint32_t> Field::coeffs(std::uint64_t enc) const {
    std::vector<std::uint32_t> c(degree_);
    for (std::uint64_t i = 0; i < degree_; ++i) {
        c[i] = std::uint32_t(enc % p_);
        enc /= p_;
    }
    return c;
}

std::uint64_t Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() > degree_) throw DegreeMismatch("too many coefficients");
    std::uint64_t s = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw BadParams("coefficient out of range");
        s = s * p_ + c[i];
    }
    return s;
}

std::string Field::to_string(std::uint64_t enc, bool poly) const {
    if (!poly) return std::to_string(enc);
    if (enc == 0) return "0 (mod " + std::to_string(p_) + ")";
    auto c = coeffs(enc);
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << c[i];
        } else {
            if (c[i] != 1) out << c[i] << "*";
            out << "b";
            if (i > 1) out << "^" << i;
        }
    }
    out << " (mod " << p_ << ")";
    return out.str();
}

std::uint64_t Field::parse(std::string_view text) const {
    // strip whitespace and a trailing "(mod p)" marker
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (auto pos = s.find("(mod"); pos != std::string::npos) s.erase(pos);
    if (s.empty()) throw BadParams("empty element literal");

    bool plain = std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    if (plain) {
        std::uint64_t v = std::stoull(s);
        if (v >= order_) throw BadParams("element encoding out of range");
        return v;
    }

    std::vector<std::uint32_t> c(degree_, 0);
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '+') { ++i; continue; }
        std::uint64_t coef = 1;
        bool saw_digits = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            coef = std::stoull(std::string(s.substr(i, j - i)));
            saw_digits = true;
            i = j;
        }
        if (i < s.size() && s[i] == '*') ++i;
        std::uint64_t expo = 0;
        if (i < s.size() && s[i] == 'b') {
            expo = 1;
            ++i;
            if (i < s.size() && s[i] == '^') {
                ++i;
                j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw BadParams("malformed exponent in element literal");
                expo = std::stoull(std::string(s.substr(i, j - i)));
                i = j;
            }
        } else if (!saw_digits) {
            throw BadParams("malformed element literal");
        }
        if (expo >= degree_) throw BadParams("monomial degree exceeds field degree");
        c[expo] = std::uint32_t((c[expo] + coef) % p_);
    }
    return from_coeffs(c);
}

std::vector<FieldElement> preimage_set(const Field& f, PreimageMap map, FieldElement target) {
    if (target.field && *target.field != f)
        throw FieldMismatch("target element belongs to a different field");
    std::vector<FieldElement> out;
    for (std::uint64_t x = 0; x < f.order(); ++x) {
        std::uint64_t img;
        switch (map) {
            case PreimageMap::RelTrace: img = f.rel_trace(x); break;
            case PreimageMap::RelNorm: img = f.rel_norm(x); break;
            default: img = f.artin_schreier(x); break;
        }
        if (img == target.enc) out.emplace_back(f, x);
    }
    return out;
}

namespace {

// Rank over GF(p) of coefficient vectors, used for the independence check.
bool extends_independent(const Field& f, const std::vector<std::uint64_t>& kept,
                         std::uint64_t cand) {
    std::uint64_t p = f.characteristic();
    std::vector<std::vector<std::uint32_t>> rows;
    for (auto e : kept) rows.push_back(f.coeffs(e));
    rows.push_back(f.coeffs(cand));
    std::size_t rank = 0, cols = f.degree();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        // normalize and eliminate
        std::uint64_t inv = 1, e = p - 2, base = rows[rank][c];
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (auto& x : rows[rank]) x = std::uint32_t(std::uint64_t(x) * inv % p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            std::uint64_t m = rows[r][c];
            for (std::size_t cc = 0; cc < cols; ++cc)
                rows[r][cc] = std::uint32_t((rows[r][cc] + (p - m) * rows[rank][cc]) % p);
        }
        ++rank;
    }
    return rank == rows.size();
}

}  // namespace

bool fp_independent(const Field& f, const std::vector<std::uint64_t>& encs) {
    std::vector<std::uint64_t> kept;
    for (auto e : encs) {
        if (!extends_independent(f, kept, e)) return false;
        kept.push_back(e);
    }
    return true;
}

std::vector<FieldElement> trace_kernel_basis(const Field& f,
                                             const std::vector<FieldElement>& overrides) {
    std::uint64_t h = f.degree() / 2;
    if (!f.has_quadratic_subfield()) throw OddDegree("trace kernel needs an even-degree field");

    if (!overrides.empty()) {
        if (overrides.size() != h)
            throw BadParams("expected " + std::to_string(h) + " kernel generators");
        std::vector<std::uint64_t> kept;
        for (const auto& e : overrides) {
            if (e.field && *e.field != f) throw FieldMismatch("override from a different field");
            if (f.rel_trace(e.enc) != 0)
                throw NotAKernelElement(f.to_string(e.enc) + " has nonzero relative trace");
            if (!extends_independent(f, kept, e.enc))
                throw NotIndependent(f.to_string(e.enc) + " is dependent on earlier generators");
            kept.push_back(e.enc);
        }
        return overrides;
    }

    std::vector<std::uint64_t> kept;
    for (std::uint64_t x = 1; x < f.order() && kept.size() < h; ++x) {
        if (f.rel_trace(x) != 0) continue;
        if (extends_independent(f, kept, x)) kept.push_back(x);
    }
    if (kept.size() != h) throw std::runtime_error("trace kernel scan failed");  // unreachable
    std::vector<FieldElement> out;
    out.reserve(h);
    for (auto e : kept) out.emplace_back(f, e);
    return out;
}

}  // namespace lrc
