/* Copyright 2026 The flagspread Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/**
 * @file gf.hpp
 * @brief Finite fields built as towers F_p -> F_q -> F_{q^k}.
 *
 * Elements are plain integer codes. For an extension step of degree d over a
 * base field with b elements, the code of c_0 + c_1 a + ... + c_{d-1} a^{d-1}
 * is c_0 + c_1 b + ... + c_{d-1} b^{d-1}, where every c_i is itself a code of
 * the base field. Code 0 is the additive identity and code 1 the
 * multiplicative identity at every level of the tower.
 *
 * Fields are immutable once built and are passed around as
 * std::shared_ptr<const FiniteField>.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagspread {

using Code = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// Polynomial over some field, coefficient codes with the constant term first.
/// Normalized polynomials carry no trailing zero coefficient; the zero
/// polynomial has an empty coefficient list.
struct Poly {
    std::vector<Code> coeffs;

    Poly() = default;
    Poly(std::initializer_list<Code> c) : coeffs(c) { normalize(); }
    explicit Poly(std::vector<Code> c) : coeffs(std::move(c)) { normalize(); }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    [[nodiscard]] bool is_zero() const { return coeffs.empty(); }
    /// Degree, with -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    [[nodiscard]] Code lead() const { return coeffs.empty() ? 0 : coeffs.back(); }
    [[nodiscard]] bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    [[nodiscard]] Code operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

    friend bool operator==(const Poly&, const Poly&) = default;
};

namespace details {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Fields up to this order get full addition and multiplication tables.
inline constexpr std::uint64_t kTableLimit = 256;

}  // namespace details

/**
 * @brief A finite field, either prime or a simple extension of another FiniteField.
 *
 * Arithmetic works on raw codes and never checks that its arguments are in
 * range; use Element for checked, field-tagged values.
 */
class FiniteField {
   public:
    /// The prime field F_p.
    static FieldPtr prime(std::uint32_t p) {
        if (!details::is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
        if (p >= (1u << 16)) throw std::invalid_argument("characteristic too large");
        return FieldPtr(new FiniteField(p));
    }

    /**
     * @brief Extension of @p base of the given degree.
     *
     * Without an explicit modulus the lexicographically smallest monic
     * irreducible polynomial of that degree is used, comparing coefficient
     * codes from the highest degree down.
     */
    static FieldPtr extend(FieldPtr base, unsigned degree, std::optional<Poly> modulus = std::nullopt);

    /// Tower F_p -> ... with one extension step per entry of @p degrees.
    static FieldPtr create(std::uint32_t p, std::span<const unsigned> degrees, std::span<const Poly> moduli = {}) {
        if (!moduli.empty() && moduli.size() != degrees.size())
            throw std::invalid_argument("number of moduli does not match number of extension steps");
        FieldPtr f = prime(p);
        for (std::size_t i = 0; i < degrees.size(); ++i)
            f = extend(f, degrees[i], moduli.empty() ? std::nullopt : std::optional<Poly>(moduli[i]));
        return f;
    }
    static FieldPtr create(std::uint32_t p, std::initializer_list<unsigned> degrees) {
        return create(p, std::span<const unsigned>(degrees.begin(), degrees.size()));
    }

    [[nodiscard]] std::uint32_t characteristic() const { return p_; }
    [[nodiscard]] Code order() const { return order_; }
    [[nodiscard]] bool is_prime_field() const { return base_ == nullptr; }
    /// Degree of the top extension step (1 for a prime field).
    [[nodiscard]] unsigned degree() const { return base_ ? degree_ : 1; }
    /// Degree over the prime field.
    [[nodiscard]] unsigned absolute_degree() const { return base_ ? degree_ * base_->absolute_degree() : 1; }
    [[nodiscard]] const FieldPtr& base() const { return base_; }
    [[nodiscard]] const Poly& modulus() const { return modulus_; }
    [[nodiscard]] std::size_t height() const { return base_ ? base_->height() + 1 : 0; }

    /// Extension degrees from the bottom of the tower up.
    [[nodiscard]] std::vector<unsigned> degrees() const {
        std::vector<unsigned> out = base_ ? base_->degrees() : std::vector<unsigned>{};
        if (base_) out.push_back(degree_);
        return out;
    }
    /// Moduli from the bottom of the tower up, each over the field directly below it.
    [[nodiscard]] std::vector<Poly> moduli() const {
        std::vector<Poly> out = base_ ? base_->moduli() : std::vector<Poly>{};
        if (base_) out.push_back(modulus_);
        return out;
    }

    [[nodiscard]] bool contains(Code x) const { return x < order_; }

    [[nodiscard]] Code add(Code a, Code b) const {
        if (!base_) return static_cast<Code>((a + b) % p_);
        if (!add_table_.empty()) return add_table_[a * order_ + b];
        return add_digits(a, b);
    }
    [[nodiscard]] Code neg(Code a) const {
        if (!base_) return a == 0 ? 0 : p_ - a;
        if (!neg_table_.empty()) return neg_table_[a];
        const Code bq = base_->order();
        Code out = 0, w = 1;
        for (unsigned i = 0; i < degree_; ++i, w *= bq) out += base_->neg(a / w % bq) * w;
        return out;
    }
    [[nodiscard]] Code sub(Code a, Code b) const { return add(a, neg(b)); }

    [[nodiscard]] Code mul(Code a, Code b) const {
        if (!base_) return static_cast<Code>(static_cast<std::uint64_t>(a) * b % p_);
        if (!mul_table_.empty()) return mul_table_[a * order_ + b];
        return mul_digits(a, b);
    }

    [[nodiscard]] Code pow(Code a, std::uint64_t e) const {
        Code r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    [[nodiscard]] Code inv(Code a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        if (!inv_table_.empty()) return inv_table_[a];
        return pow(a, order_ - 2);
    }
    [[nodiscard]] Code div(Code a, Code b) const { return mul(a, inv(b)); }

    /// Coefficients of @p x over the base field, constant term first, always degree() long.
    [[nodiscard]] std::vector<Code> digits(Code x) const {
        std::vector<Code> d(degree());
        if (!base_) {
            d[0] = x;
            return d;
        }
        const Code bq = base_->order();
        for (unsigned i = 0; i < degree_; ++i, x /= bq) d[i] = x % bq;
        return d;
    }
    [[nodiscard]] Code from_digits(std::span<const Code> d) const {
        if (!base_) return d.empty() ? 0 : d[0];
        const Code bq = base_->order();
        Code out = 0, w = 1;
        for (std::size_t i = 0; i < d.size() && i < degree_; ++i, w *= bq) out += d[i] * w;
        return out;
    }

    /// Structural equality: same characteristic and the same moduli at every level.
    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        if (&a == &b) return true;
        if (a.p_ != b.p_ || a.order_ != b.order_ || a.height() != b.height()) return false;
        if (!a.base_) return true;
        return a.modulus_ == b.modulus_ && *a.base_ == *b.base_;
    }

    /// Short human-readable name such as "GF(2^2)".
    [[nodiscard]] std::string name() const {
        if (!base_) return "GF(" + std::to_string(p_) + ")";
        return "GF(" + std::to_string(p_) + "^" + std::to_string(absolute_degree()) + ")";
    }

   private:
    explicit FiniteField(std::uint32_t p) : p_(p), order_(p) {}
    FiniteField(FieldPtr base, unsigned degree, Poly modulus)
        : p_(base->characteristic()), degree_(degree), base_(std::move(base)), modulus_(std::move(modulus)) {
        std::uint64_t ord = 1;
        for (unsigned i = 0; i < degree_; ++i) {
            ord *= base_->order();
            if (ord >= (1ull << 31)) throw std::invalid_argument("field order exceeds 2^31");
        }
        order_ = static_cast<Code>(ord);
        if (order_ <= details::kTableLimit) build_tables();
    }

    Code add_digits(Code a, Code b) const {
        const Code bq = base_->order();
        Code out = 0, w = 1;
        for (unsigned i = 0; i < degree_; ++i, w *= bq) out += base_->add(a / w % bq, b / w % bq) * w;
        return out;
    }

    Code mul_digits(Code a, Code b) const {
        const FiniteField& B = *base_;
        const auto da = digits(a), db = digits(b);
        std::vector<Code> prod(2 * degree_ - 1, 0);
        for (unsigned i = 0; i < degree_; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < degree_; ++j) prod[i + j] = B.add(prod[i + j], B.mul(da[i], db[j]));
        }
        // reduce with the monic modulus, highest degree first
        for (std::size_t i = prod.size(); i-- > degree_;) {
            const Code c = prod[i];
            if (c == 0) continue;
            for (unsigned j = 0; j < degree_; ++j)
                prod[i - degree_ + j] = B.sub(prod[i - degree_ + j], B.mul(c, modulus_[j]));
            prod[i] = 0;
        }
        return from_digits(prod);
    }

    void build_tables() {
        const std::size_t q = order_;
        add_table_.resize(q * q);
        mul_table_.resize(q * q);
        neg_table_.resize(q);
        inv_table_.assign(q, 0);
        for (Code a = 0; a < q; ++a) {
            for (Code b = 0; b < q; ++b) {
                add_table_[a * q + b] = add_digits(a, b);
                mul_table_[a * q + b] = mul_digits(a, b);
            }
        }
        for (Code a = 0; a < q; ++a) {
            for (Code b = 0; b < q; ++b) {
                if (add_table_[a * q + b] == 0) neg_table_[a] = b;
                if (mul_table_[a * q + b] == 1) inv_table_[a] = b;
            }
        }
    }

    std::uint32_t p_;
    unsigned degree_ = 1;
    Code order_;
    FieldPtr base_;
    Poly modulus_;
    std::vector<Code> add_table_, mul_table_, neg_table_, inv_table_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------------------
// Polynomials over a field
// ---------------------------------------------------------------------------

namespace poly {

/// Remainder of @p a modulo the nonzero polynomial @p m.
inline Poly mod(const FiniteField& F, Poly a, const Poly& m) {
    if (m.is_zero()) throw std::domain_error("polynomial division by zero");
    const Code lead_inv = F.inv(m.lead());
    const int dm = m.degree();
    while (a.degree() >= dm) {
        const int shift = a.degree() - dm;
        const Code c = F.mul(a.lead(), lead_inv);
        for (int j = 0; j <= dm; ++j)
            a.coeffs[shift + j] = F.sub(a.coeffs[shift + j], F.mul(c, m.coeffs[j]));
        a.normalize();
    }
    return a;
}

inline Poly mul(const FiniteField& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Code> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    return Poly(std::move(out));
}

/// Value of @p f at @p x by Horner's rule.
inline Code eval(const FiniteField& F, const Poly& f, Code x) {
    Code acc = 0;
    for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.coeffs[i]);
    return acc;
}

/// The monic polynomial of degree @p d whose lower coefficients are the base-q digits of @p index.
inline Poly monic_from_index(const FiniteField& F, unsigned d, std::uint64_t index) {
    std::vector<Code> c(d + 1);
    for (unsigned i = 0; i < d; ++i, index /= F.order()) c[i] = static_cast<Code>(index % F.order());
    c[d] = 1;
    return Poly(std::move(c));
}

/// Irreducibility by trial division with every monic polynomial of degree up to deg/2.
inline bool is_irreducible(const FiniteField& F, const Poly& f) {
    const int d = f.degree();
    if (d < 1) return false;
    for (unsigned e = 1; 2 * e <= static_cast<unsigned>(d); ++e) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < e; ++i) count *= F.order();
        for (std::uint64_t idx = 0; idx < count; ++idx)
            if (mod(F, f, monic_from_index(F, e, idx)).is_zero()) return false;
    }
    return true;
}

/// Smallest monic irreducible of degree @p d, ordering by coefficients from the top down.
inline Poly smallest_irreducible(const FiniteField& F, unsigned d) {
    if (d == 0) throw std::invalid_argument("irreducible polynomial degree must be at least 1");
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= F.order();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = monic_from_index(F, d, idx);
        if (is_irreducible(F, f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable for finite fields
}

}  // namespace poly

inline FieldPtr FiniteField::extend(FieldPtr base, unsigned degree, std::optional<Poly> modulus) {
    if (!base) throw std::invalid_argument("null base field");
    if (degree == 0) throw std::invalid_argument("extension degree must be at least 1");
    Poly m;
    if (modulus) {
        m = *modulus;
        if (m.degree() != static_cast<int>(degree))
            throw std::invalid_argument("modulus degree " + std::to_string(m.degree()) + " does not match extension degree " +
                                        std::to_string(degree));
        for (Code c : m.coeffs)
            if (!base->contains(c)) throw std::invalid_argument("modulus coefficient outside the base field");
        if (!m.is_monic()) throw std::invalid_argument("modulus is not monic");
        if (!poly::is_irreducible(*base, m)) throw std::invalid_argument("modulus is reducible over the base field");
    } else {
        m = poly::smallest_irreducible(*base, degree);
    }
    return FieldPtr(new FiniteField(std::move(base), degree, std::move(m)));
}

/**
 * @brief A field element tagged with its field.
 *
 * Mixing elements of different fields throws std::invalid_argument; inverting
 * zero throws std::domain_error.
 */
class Element {
   public:
    Element(FieldPtr f, Code c) : field_(std::move(f)), code_(c) {
        if (!field_) throw std::invalid_argument("element without a field");
        if (!field_->contains(c)) throw std::out_of_range("element code " + std::to_string(c) + " outside " + field_->name());
    }

    [[nodiscard]] Code code() const { return code_; }
    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] bool is_zero() const { return code_ == 0; }

    friend Element operator+(const Element& a, const Element& b) { return {a.check(b), a.field_->add(a.code_, b.code_)}; }
    friend Element operator-(const Element& a, const Element& b) { return {a.check(b), a.field_->sub(a.code_, b.code_)}; }
    friend Element operator*(const Element& a, const Element& b) { return {a.check(b), a.field_->mul(a.code_, b.code_)}; }
    friend Element operator/(const Element& a, const Element& b) { return {a.check(b), a.field_->div(a.code_, b.code_)}; }
    Element operator-() const { return {field_, field_->neg(code_)}; }
    [[nodiscard]] Element inv() const { return {field_, field_->inv(code_)}; }
    [[nodiscard]] Element pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

    friend bool operator==(const Element& a, const Element& b) { return a.code_ == b.code_ && same_field(a.field_, b.field_); }

   private:
    const FieldPtr& check(const Element& other) const {
        if (!same_field(field_, other.field_))
            throw std::invalid_argument("operands from different fields: " + field_->name() + " and " + other.field_->name());
        return field_;
    }

    FieldPtr field_;
    Code code_;
};

}  // namespace flagspread
