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
 * @file flag_code.hpp
 * @brief Flags, flag codes and the optimum distance constructions from a k-spread.
 *
 * Construction pipeline for n = ks, s >= 3:
 *  - a perfect matching l -> M(l) between lines and hyperplanes of F_{q^k}^s
 *    gives the type (1, s-1) code {(l, M(l))};
 *  - field reduction turns it into the type (k, n-k) code whose first
 *    projected code is the Segre spread;
 *  - writing every hyperplane M(l_i) as a direct sum of lines gives an
 *    n x n matrix W_i, and the nested row spans of W_i form a flag of the full
 *    admissible type (1, ..., k, n-k, ..., n-1);
 *  - dropping positions (puncturing) yields every other admissible type.
 *
 * Flag positions are 0-based throughout.
 */

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matching.hpp"
#include "spread.hpp"
#include "subspace.hpp"

namespace flagspread {

/// Strictly increasing dimensions 0 < t_1 < ... < t_r < n.
class TypeVector {
   public:
    TypeVector(std::vector<std::size_t> dims, std::size_t ambient) : dims_(std::move(dims)), ambient_(ambient) {
        if (dims_.empty()) throw std::invalid_argument("type vector is empty");
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            if (dims_[i] == 0 || dims_[i] >= ambient_)
                throw std::invalid_argument("type vector entry " + std::to_string(dims_[i]) + " outside (0, " +
                                            std::to_string(ambient_) + ")");
            if (i > 0 && dims_[i] <= dims_[i - 1]) throw std::invalid_argument("type vector is not strictly increasing");
        }
    }

    [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] std::size_t length() const { return dims_.size(); }
    [[nodiscard]] std::size_t operator[](std::size_t i) const { return dims_[i]; }

    /// Position of dimension @p d, if present.
    [[nodiscard]] std::optional<std::size_t> position(std::size_t d) const {
        auto it = std::find(dims_.begin(), dims_.end(), d);
        if (it == dims_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - dims_.begin());
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < dims_.size(); ++i) s += (i ? "," : "") + std::to_string(dims_[i]);
        return s + ")";
    }

    friend bool operator==(const TypeVector&, const TypeVector&) = default;

   private:
    std::vector<std::size_t> dims_;
    std::size_t ambient_;
};

/// (1, ..., k, n-k, ..., n-1).
inline TypeVector full_admissible_type(std::size_t n, std::size_t k) {
    if (k == 0 || 2 * k > n) throw std::invalid_argument("full admissible type needs 0 < k <= n/2");
    std::set<std::size_t> d;
    for (std::size_t t = 1; t <= k; ++t) d.insert(t);
    for (std::size_t t = n - k; t < n; ++t) d.insert(t);
    return {std::vector<std::size_t>(d.begin(), d.end()), n};
}

/**
 * @brief Why @p t cannot carry a k-spread in an optimum distance flag code, or
 * nothing when it can: k must occur and no dimension may lie strictly between
 * k and n-k.
 */
inline std::optional<std::string> admissibility_violation(std::size_t n, std::size_t k, const TypeVector& t) {
    if (k == 0 || n % k != 0)
        throw std::invalid_argument("k=" + std::to_string(k) + " does not divide n=" + std::to_string(n));
    if (t.ambient() != n) throw std::invalid_argument("type vector lives in dimension " + std::to_string(t.ambient()));
    if (!t.position(k)) return "dimension k=" + std::to_string(k) + " is missing from type " + t.to_string();
    for (std::size_t d : t.dims())
        if (d > k && d < n - k)
            return "dimension " + std::to_string(d) + " lies strictly between k=" + std::to_string(k) +
                   " and n-k=" + std::to_string(n - k);
    return std::nullopt;
}

inline bool admissible_type(std::size_t n, std::size_t k, const TypeVector& t) { return !admissibility_violation(n, k, t); }

/// 2 (sum of t_i for t_i <= n/2, plus n - t_i for the rest).
inline std::size_t max_flag_distance(const TypeVector& t) {
    const std::size_t n = t.ambient(), half = n / 2;
    std::size_t sum = 0;
    for (std::size_t d : t.dims()) sum += d <= half ? d : n - d;
    return 2 * sum;
}

class Flag {
   public:
    /// Checks dimensions against @p type and strict nesting of consecutive subspaces.
    Flag(TypeVector type, std::vector<Subspace> subspaces) : type_(std::move(type)), subs_(std::move(subspaces)) {
        if (subs_.size() != type_.length())
            throw std::invalid_argument("flag has " + std::to_string(subs_.size()) + " subspaces, type " + type_.to_string() +
                                        " needs " + std::to_string(type_.length()));
        for (std::size_t i = 0; i < subs_.size(); ++i) {
            if (subs_[i].ambient() != type_.ambient())
                throw std::invalid_argument("flag subspace " + std::to_string(i) + " has the wrong ambient dimension");
            if (subs_[i].dim() != type_[i])
                throw std::invalid_argument("flag subspace " + std::to_string(i) + " has dimension " +
                                            std::to_string(subs_[i].dim()) + ", type requires " + std::to_string(type_[i]));
            if (i > 0 && !subs_[i].contains(subs_[i - 1]))
                throw std::invalid_argument("nesting violation: flag subspace " + std::to_string(i - 1) + " is not contained in subspace " +
                                            std::to_string(i));
        }
    }

    [[nodiscard]] const TypeVector& type() const { return type_; }
    [[nodiscard]] const std::vector<Subspace>& subspaces() const { return subs_; }
    [[nodiscard]] const Subspace& operator[](std::size_t i) const { return subs_[i]; }
    [[nodiscard]] std::size_t length() const { return subs_.size(); }
    [[nodiscard]] const FieldPtr& field() const { return subs_.front().field(); }

    friend bool operator==(const Flag& a, const Flag& b) { return a.type_ == b.type_ && a.subs_ == b.subs_; }
    friend bool operator<(const Flag& a, const Flag& b) { return a.subs_ < b.subs_; }

   private:
    TypeVector type_;
    std::vector<Subspace> subs_;
};

/// Sum of position-wise subspace distances.
inline std::size_t flag_distance(const Flag& a, const Flag& b) {
    if (!(a.type() == b.type())) throw std::invalid_argument("flag_distance: flags of types " + a.type().to_string() + " and " + b.type().to_string());
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.length(); ++i) d += subspace_distance(a[i], b[i]);
    return d;
}

/// Distinct flags of one type, in insertion order.
class FlagCode {
   public:
    FlagCode(FieldPtr field, TypeVector type) : field_(std::move(field)), type_(std::move(type)) {}

    bool insert(const Flag& f) {
        if (!(f.type() == type_)) throw std::invalid_argument("flag of type " + f.type().to_string() + " in a code of type " + type_.to_string());
        if (!same_field(f.field(), field_)) throw std::invalid_argument("flag over a different field");
        if (!index_.insert(f).second) return false;
        members_.push_back(f);
        return true;
    }

    [[nodiscard]] const std::vector<Flag>& members() const { return members_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] const TypeVector& type() const { return type_; }
    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] std::size_t ambient() const { return type_.ambient(); }
    [[nodiscard]] const Flag& operator[](std::size_t i) const { return members_[i]; }

    friend bool operator==(const FlagCode& a, const FlagCode& b) {
        return a.type_ == b.type_ && same_field(a.field_, b.field_) && a.members_ == b.members_;
    }

   private:
    FieldPtr field_;
    TypeVector type_;
    std::vector<Flag> members_;
    std::set<Flag> index_;
};

/// The set of subspaces at position @p pos, duplicates collapsed, in first-occurrence order.
inline CDCode projected_code(const FlagCode& c, std::size_t pos) {
    if (pos >= c.type().length())
        throw std::out_of_range("projection index " + std::to_string(pos) + " outside type " + c.type().to_string());
    CDCode out(c.field(), c.ambient(), c.type()[pos]);
    for (const auto& f : c.members()) out.insert(f[pos]);
    return out;
}

inline bool is_disjoint(const FlagCode& c) {
    for (std::size_t i = 0; i < c.type().length(); ++i)
        if (projected_code(c, i).size() != c.size()) return false;
    return true;
}

inline std::size_t min_flag_distance(const FlagCode& c) {
    if (c.size() < 2) throw std::invalid_argument("minimum distance needs at least two flags");
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) best = std::min(best, flag_distance(c[i], c[j]));
    return best;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/**
 * @brief Everything the builders share: the Segre spread over F_q, the
 * line/hyperplane graph of F_{q^k}^s and a perfect matching on it.
 */
struct SpreadConstruction {
    Spread spread;
    IncidenceGraph graph;
    Matching matching;

    [[nodiscard]] std::size_t n() const { return spread.ambient(); }
    [[nodiscard]] std::size_t k() const { return spread.k; }
    [[nodiscard]] std::size_t s() const { return spread.s; }
    [[nodiscard]] std::size_t size() const { return spread.size(); }
    /// phi(M(l_i)).
    [[nodiscard]] Subspace reduced_hyperplane(std::size_t i) const {
        return field_reduction(graph.right[matching.map[i]], spread.embedding);
    }
};

/**
 * @param matching a perfect matching of the graph over F_{q^k}^s; computed when absent.
 * Throws std::invalid_argument for s < 3 or an invalid supplied matching.
 */
inline SpreadConstruction prepare_construction(const FieldPtr& base, unsigned k, unsigned s,
                                               std::optional<Matching> matching = std::nullopt,
                                               std::optional<Poly> modulus = std::nullopt,
                                               std::uint64_t cap = kDefaultEnumerationCap) {
    if (s < 3) throw std::invalid_argument("constructions need s >= 3 (n = 2k is the planar case)");
    Spread spread = segre_spread(base, k, s, std::move(modulus), cap);
    IncidenceGraph graph = build_incidence_graph(spread.extension_field(), s, cap);
    Matching m;
    if (matching) {
        if (!validate_matching(graph, *matching)) throw std::invalid_argument("supplied matching is not a valid perfect matching");
        m = std::move(*matching);
    } else {
        m = perfect_matching(graph);
    }
    return {std::move(spread), std::move(graph), std::move(m)};
}

/// {(l, M(l))} on F^s: type (1, s-1), one flag per line.
inline FlagCode build_type1_code(const FieldPtr& field, unsigned s, std::optional<Matching> matching = std::nullopt,
                                 std::uint64_t cap = kDefaultEnumerationCap) {
    if (s < 3) throw std::invalid_argument("type (1, s-1) construction needs s >= 3");
    IncidenceGraph g = build_incidence_graph(field, s, cap);
    Matching m;
    if (matching) {
        if (!validate_matching(g, *matching)) throw std::invalid_argument("supplied matching is not a valid perfect matching");
        m = std::move(*matching);
    } else {
        m = perfect_matching(g);
    }
    TypeVector t({1, s - 1}, s);
    FlagCode code(field, t);
    for (std::size_t i = 0; i < g.size(); ++i) code.insert(Flag(t, {g.left[i], g.right[m.map[i]]}));
    return code;
}

/// {(phi(l), phi(M(l)))}: type (k, n-k) on F_q^n with the spread as first projected code.
inline FlagCode build_type_k_code(const SpreadConstruction& sc) {
    const std::size_t n = sc.n(), k = sc.k();
    TypeVector t({k, n - k}, n);
    FlagCode code(sc.spread.base_field(), t);
    for (std::size_t i = 0; i < sc.size(); ++i) code.insert(Flag(t, {sc.spread.members[i], sc.reduced_hyperplane(i)}));
    return code;
}

inline FlagCode build_type_k_code(const FieldPtr& base, unsigned k, unsigned s, std::optional<Matching> matching = std::nullopt) {
    return build_type_k_code(prepare_construction(base, k, s, std::move(matching)));
}

/**
 * @brief Basis matrix W_i of F_q^n adapted to S_i and phi(H_i).
 *
 * Rows 0..k-1 generate S_i and rows 0..n-k-1 generate phi(H_i); `lines` lists
 * the line indices whose spread generators were stacked, in row order.
 */
struct WMatrix {
    std::size_t index = 0;
    Matrix matrix;
    std::size_t k = 0;
    std::vector<std::size_t> lines;

    [[nodiscard]] std::size_t n() const { return matrix.rows(); }
    /// Row span of the first @p j rows.
    [[nodiscard]] Subspace prefix(std::size_t j) const { return Subspace::span(matrix.top_rows(j)); }
};

/**
 * @brief Decomposes H_i = M(l_i) as l_i + l_{i_2} + ... + l_{i_{s-1}} and adds a line outside H_i.
 *
 * The completing lines are picked greedily in canonical line order, taking
 * each line of H_i that enlarges the running span.
 */
inline WMatrix decompose_W(std::size_t i, const SpreadConstruction& sc) {
    const auto& lines = sc.spread.lines;
    const Subspace& hyper = sc.graph.right[sc.matching.map[i]];
    const std::size_t s = sc.s(), k = sc.k(), n = sc.n();

    std::vector<std::size_t> chosen{i};
    Subspace span = lines[i];
    for (std::size_t j = 0; j < lines.size() && span.dim() < s - 1; ++j) {
        if (!hyper.contains(lines[j])) continue;
        Subspace bigger = span + lines[j];
        if (bigger.dim() > span.dim()) {
            chosen.push_back(j);
            span = std::move(bigger);
        }
    }
    if (span.dim() != s - 1 || !(span == hyper)) throw std::logic_error("hyperplane decomposition failed; matching is corrupted");
    std::size_t outside = lines.size();
    for (std::size_t j = 0; j < lines.size(); ++j)
        if (!hyper.contains(lines[j])) {
            outside = j;
            break;
        }
    if (outside == lines.size()) throw std::logic_error("no line outside the hyperplane");
    chosen.push_back(outside);

    Matrix w(sc.spread.base_field(), 0, n);
    for (std::size_t j : chosen) w = stack(w, sc.spread.members[j].generator());

    WMatrix out{i, std::move(w), k, std::move(chosen)};
    if (out.matrix.rank() != n) throw std::logic_error("W matrix is not invertible");
    if (!(out.prefix(k) == sc.spread.members[i]) || !(out.prefix(n - k) == sc.reduced_hyperplane(i)))
        throw std::logic_error("W matrix prefixes do not reproduce the spread element and hyperplane");
    return out;
}

/// The flag (W^(1), ..., W^(k), W^(n-k), ..., W^(n-1)) attached to a W matrix.
inline Flag flag_from_W(const WMatrix& w) {
    TypeVector t = full_admissible_type(w.n(), w.k);
    std::vector<Subspace> subs;
    subs.reserve(t.length());
    for (std::size_t d : t.dims()) subs.push_back(w.prefix(d));
    return Flag(std::move(t), std::move(subs));
}

inline FlagCode build_full_admissible_code(const SpreadConstruction& sc) {
    FlagCode code(sc.spread.base_field(), full_admissible_type(sc.n(), sc.k()));
    for (std::size_t i = 0; i < sc.size(); ++i) code.insert(flag_from_W(decompose_W(i, sc)));
    return code;
}

inline FlagCode build_full_admissible_code(const FieldPtr& base, unsigned k, unsigned s,
                                           std::optional<Matching> matching = std::nullopt) {
    return build_full_admissible_code(prepare_construction(base, k, s, std::move(matching)));
}

/// The k for which @p t is the full admissible type, if any.
inline std::optional<std::size_t> full_admissible_k(const TypeVector& t) {
    const std::size_t n = t.ambient();
    for (std::size_t k = 1; 2 * k <= n; ++k)
        if (n % k == 0 && full_admissible_type(n, k) == t) return k;
    return std::nullopt;
}

/**
 * @brief Keeps only the positions of @p c whose dimensions appear in @p t.
 *
 * @p c must have a full admissible type for some k, and @p t must be
 * admissible for that k.
 */
inline FlagCode puncture(const FlagCode& c, const TypeVector& t) {
    const auto k = full_admissible_k(c.type());
    if (!k) throw std::invalid_argument("puncture: code type " + c.type().to_string() + " is not a full admissible type");
    if (auto why = admissibility_violation(c.ambient(), *k, t)) throw std::invalid_argument("puncture: type " + t.to_string() + " is not admissible: " + *why);
    std::vector<std::size_t> pos;
    for (std::size_t d : t.dims()) {
        auto p = c.type().position(d);
        if (!p) throw std::invalid_argument("puncture: dimension " + std::to_string(d) + " not in code type");
        pos.push_back(*p);
    }
    FlagCode out(c.field(), t);
    for (const auto& f : c.members()) {
        std::vector<Subspace> subs;
        for (std::size_t p : pos) subs.push_back(f[p]);
        out.insert(Flag(t, std::move(subs)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct OptimumReport {
    std::size_t min_distance = 0;
    std::size_t bound = 0;
    bool optimum = false;          // min_distance == bound
    bool disjoint = false;
    std::vector<bool> projections_at_max;  // per position
    bool characterization = false;  // disjoint and every projection attains its max distance

    [[nodiscard]] bool routes_agree() const { return optimum == characterization; }
};

/// Both routes to optimality: brute-force distance against the bound, and disjointness plus projected-code distances.
inline OptimumReport is_optimum_distance(const FlagCode& c) {
    if (c.size() < 2) throw std::invalid_argument("is_optimum_distance needs at least two flags");
    OptimumReport r;
    r.min_distance = min_flag_distance(c);
    r.bound = max_flag_distance(c.type());
    r.optimum = r.min_distance == r.bound;
    r.disjoint = true;
    bool all_max = true;
    for (std::size_t i = 0; i < c.type().length(); ++i) {
        CDCode p = projected_code(c, i);
        if (p.size() != c.size()) r.disjoint = false;
        const bool at_max = p.size() >= 2 && code_diagnose(p).meets_max_distance;
        r.projections_at_max.push_back(at_max);
        all_max = all_max && at_max;
    }
    r.characterization = r.disjoint && all_max;
    return r;
}

/**
 * @brief |C| = (q^n-1)/(q^k-1), cross-checked against the projected code at
 * dimension k being a k-spread. Throws std::logic_error if the two disagree,
 * which cannot happen for an optimum distance code.
 */
inline bool max_cardinality_check(const FlagCode& c, std::size_t k) {
    const auto pos = c.type().position(k);
    if (!pos) throw std::invalid_argument("dimension " + std::to_string(k) + " is not in type " + c.type().to_string());
    const bool size_ok = c.size() == spread_size(c.field()->order(), static_cast<unsigned>(c.ambient()), static_cast<unsigned>(k));
    const bool spread_ok = is_spread(projected_code(c, *pos));
    if (size_ok != spread_ok) throw std::logic_error("cardinality and spread checks disagree; code is not optimum distance");
    return size_ok;
}

}  // namespace flagspread
