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
 * @file subspace.hpp
 * @brief Canonical subspaces of F^n, Grassmannian enumeration and constant dimension codes.
 *
 * A Subspace is stored as its RREF generator matrix without zero rows, so two
 * subspaces are equal exactly when their generators are. The same
 * representation defines the canonical order: ambient dimension, dimension,
 * pivot columns (lexicographic), then entries row by row. Within one
 * Grassmannian this is the order in which grassmannian() lists subspaces.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf.hpp"
#include "matrix.hpp"

namespace flagspread {

/// Thrown when an enumeration would list more objects than the configured cap.
class CapExceeded : public std::length_error {
   public:
    using std::length_error::length_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// b^e, throwing std::overflow_error past 64 bits.
inline std::uint64_t checked_pow(std::uint64_t b, unsigned e) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= b;
        if (r > UINT64_MAX) throw std::overflow_error("integer power overflows 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

/// Number of m-dimensional subspaces of F_q^s.
inline std::uint64_t gaussian_binomial(unsigned s, unsigned m, std::uint64_t q) {
    if (m > s) throw std::invalid_argument("gaussian_binomial: m > s");
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q < 2");
    // [s, i+1] = [s, i] * (q^{s-i} - 1) / (q^{i+1} - 1), exact at every step
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < m; ++i) {
        r *= checked_pow(q, s - i) - 1;
        r /= checked_pow(q, i + 1) - 1;
        if (r > UINT64_MAX) throw std::overflow_error("gaussian_binomial overflows 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

/// (q^n - 1) / (q^k - 1), the size of a k-spread of F_q^n (floored when k does not divide n).
inline std::uint64_t spread_size(std::uint64_t q, unsigned n, unsigned k) {
    if (k == 0) throw std::invalid_argument("spread_size: k = 0");
    return (checked_pow(q, n) - 1) / (checked_pow(q, k) - 1);
}

class Subspace {
   public:
    /// Row space of @p generators; rows need not be independent.
    static Subspace span(const Matrix& generators) { return Subspace(row_space_basis(generators)); }

    /// The zero subspace of F^n.
    static Subspace zero(FieldPtr field, std::size_t n) { return Subspace(Matrix(std::move(field), 0, n)); }
    static Subspace whole(FieldPtr field, std::size_t n) { return Subspace(Matrix::identity(std::move(field), n)); }

    [[nodiscard]] const Matrix& generator() const { return gen_; }
    [[nodiscard]] std::size_t dim() const { return gen_.rows(); }
    [[nodiscard]] std::size_t ambient() const { return gen_.cols(); }
    [[nodiscard]] const FieldPtr& field() const { return gen_.field(); }

    [[nodiscard]] std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> out;
        out.reserve(dim());
        std::size_t c = 0;
        for (std::size_t r = 0; r < dim(); ++r) {
            while (gen_(r, c) == 0) ++c;
            out.push_back(c);
        }
        return out;
    }

    [[nodiscard]] Subspace operator+(const Subspace& o) const { return span(stack(gen_, o.gen_)); }

    /// Intersection as (U^perp + V^perp)^perp.
    [[nodiscard]] Subspace intersect(const Subspace& o) const {
        check_compatible(o);
        return (complement() + o.complement()).complement();
    }

    [[nodiscard]] Subspace complement() const {
        if (dim() == 0) return whole(field(), ambient());
        return Subspace(orthogonal_complement(gen_));
    }

    [[nodiscard]] std::size_t intersection_dim(const Subspace& o) const {
        check_compatible(o);
        return dim() + o.dim() - stack(gen_, o.gen_).rank();
    }

    /// True when @p o is a subspace of this one.
    [[nodiscard]] bool contains(const Subspace& o) const {
        check_compatible(o);
        if (o.dim() > dim()) return false;
        return stack(gen_, o.gen_).rank() == dim();
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.gen_ == b.gen_; }

    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
        if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
        if (auto c = a.dim() <=> b.dim(); c != 0) return c;
        if (auto c = a.pivots() <=> b.pivots(); c != 0) return c;
        return a.gen_.data() <=> b.gen_.data();
    }

   private:
    explicit Subspace(Matrix rref_basis) : gen_(std::move(rref_basis)) {}

    void check_compatible(const Subspace& o) const {
        if (ambient() != o.ambient())
            throw std::invalid_argument("subspaces of F^" + std::to_string(ambient()) + " and F^" + std::to_string(o.ambient()));
        if (!same_field(field(), o.field())) throw std::invalid_argument("subspaces over different fields");
    }

    Matrix gen_;
};

/// dim(U + V) - dim(U cap V).
inline std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
    const std::size_t meet = u.intersection_dim(v);
    return u.dim() + v.dim() - 2 * meet;
}

/// Largest possible distance between two m-dimensional subspaces of F^n.
inline std::size_t max_subspace_distance(std::size_t m, std::size_t n) {
    if (m == 0 || m >= n)
        throw std::invalid_argument("max_subspace_distance: need 0 < m < n, got m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n));
    return 2 * m <= n ? 2 * m : 2 * (n - m);
}

/**
 * @brief Every m-dimensional subspace of F^s in canonical order.
 *
 * Pivot patterns are visited lexicographically; within a pattern the free
 * entries (row-major) run through all codes like an odometer whose first free
 * entry is the most significant digit.
 */
inline std::vector<Subspace> grassmannian(const FieldPtr& field, unsigned m, unsigned s,
                                          std::uint64_t cap = kDefaultEnumerationCap) {
    if (m == 0 || m >= s)
        throw std::invalid_argument("grassmannian: need 0 < m < s, got m=" + std::to_string(m) + ", s=" + std::to_string(s));
    const std::uint64_t q = field->order();
    const std::uint64_t total = gaussian_binomial(s, m, q);
    if (total > cap)
        throw CapExceeded("grassmannian G(" + std::to_string(m) + "," + std::to_string(s) + ") over " + field->name() + " has " +
                          std::to_string(total) + " members, above the cap of " + std::to_string(cap));

    std::vector<Subspace> out;
    out.reserve(total);
    std::vector<unsigned> piv(m);
    for (unsigned i = 0; i < m; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_pivot(s, false);
        for (unsigned p : piv) is_pivot[p] = true;
        std::vector<std::pair<unsigned, unsigned>> free;
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = piv[r] + 1; c < s; ++c)
                if (!is_pivot[c]) free.emplace_back(r, c);

        Matrix base(field, m, s);
        for (unsigned r = 0; r < m; ++r) base(r, piv[r]) = 1;
        const std::uint64_t count = checked_pow(q, static_cast<unsigned>(free.size()));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Matrix g = base;
            std::uint64_t rest = idx;
            for (std::size_t f = free.size(); f-- > 0; rest /= q) g(free[f].first, free[f].second) = static_cast<Code>(rest % q);
            out.push_back(Subspace::span(g));
        }

        // next pivot combination in lexicographic order
        int i = static_cast<int>(m) - 1;
        while (i >= 0 && piv[i] == s - m + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++piv[i];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < m; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

/**
 * @brief A constant dimension code: distinct subspaces of one dimension in one ambient space.
 *
 * Members keep the order in which they were inserted; duplicates (by canonical
 * generator) are rejected.
 */
class CDCode {
   public:
    CDCode(FieldPtr field, std::size_t ambient, std::size_t dim) : field_(std::move(field)), ambient_(ambient), dim_(dim) {}

    /// Throws on an empty list, mixed dimensions, or a repeated member.
    static CDCode from_members(const std::vector<Subspace>& members) {
        if (members.empty()) throw std::invalid_argument("a constant dimension code needs at least one member");
        CDCode c(members.front().field(), members.front().ambient(), members.front().dim());
        for (const auto& u : members)
            if (!c.insert(u)) throw std::invalid_argument("duplicate member in constant dimension code");
        return c;
    }

    /// Adds @p u unless already present; returns whether it was added.
    bool insert(const Subspace& u) {
        if (u.ambient() != ambient_ || u.dim() != dim_)
            throw std::invalid_argument("member of dimension " + std::to_string(u.dim()) + " in F^" + std::to_string(u.ambient()) +
                                        " does not fit a code of dimension " + std::to_string(dim_) + " in F^" +
                                        std::to_string(ambient_));
        if (!same_field(u.field(), field_)) throw std::invalid_argument("member over a different field");
        if (!index_.insert(u).second) return false;
        members_.push_back(u);
        return true;
    }

    [[nodiscard]] const std::vector<Subspace>& members() const { return members_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] bool contains(const Subspace& u) const { return index_.count(u) != 0; }
    [[nodiscard]] const Subspace& operator[](std::size_t i) const { return members_[i]; }

    /// Same members regardless of order.
    [[nodiscard]] bool same_set(const CDCode& o) const { return index_ == o.index_; }

   private:
    FieldPtr field_;
    std::size_t ambient_, dim_;
    std::vector<Subspace> members_;
    std::set<Subspace> index_;
};

struct CodeReport {
    std::size_t size = 0;
    std::size_t min_distance = 0;
    std::size_t max_distance = 0;  // best possible for the dimension
    bool meets_max_distance = false;
    bool is_partial_spread = false;
    std::uint64_t partial_spread_bound = 0;  // floor((q^n - 1)/(q^k - 1))
    bool within_partial_spread_bound = true;
    std::optional<std::size_t> equidistant_c;  // common intersection dimension, when every pair shares it
};

/// Pairwise diagnostics of a code with at least two members.
inline CodeReport code_diagnose(const CDCode& c) {
    if (c.size() < 2) throw std::invalid_argument("code_diagnose needs at least two members");
    CodeReport rep;
    rep.size = c.size();
    rep.max_distance = max_subspace_distance(c.dim(), c.ambient());
    rep.min_distance = SIZE_MAX;
    bool all_trivial = true, equal_meets = true;
    std::optional<std::size_t> first_meet;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const std::size_t meet = c[i].intersection_dim(c[j]);
            rep.min_distance = std::min(rep.min_distance, 2 * (c.dim() - meet));
            if (meet != 0) all_trivial = false;
            if (!first_meet) first_meet = meet;
            else if (*first_meet != meet) equal_meets = false;
        }
    rep.is_partial_spread = all_trivial;
    if (equal_meets) rep.equidistant_c = first_meet;
    rep.meets_max_distance = rep.min_distance == rep.max_distance;
    rep.partial_spread_bound = spread_size(c.field()->order(), static_cast<unsigned>(c.ambient()), static_cast<unsigned>(c.dim()));
    if (rep.is_partial_spread) rep.within_partial_spread_bound = rep.size <= rep.partial_spread_bound;
    return rep;
}

/// {U^perp : U in C}, in the order of C.
inline CDCode dual_code(const CDCode& c) {
    CDCode out(c.field(), c.ambient(), c.ambient() - c.dim());
    for (const auto& u : c.members()) out.insert(u.complement());
    return out;
}

}  // namespace flagspread
