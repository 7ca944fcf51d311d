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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "flagspread/io.hpp"
#include "oracle.hpp"

using namespace flagspread;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitWorkedExample = 1.0;
constexpr double kLimitType12 = 0.1;
constexpr double kLimitFullType = 2.0;
constexpr double kLimitSweep = 30.0;

// Sample sizes.
constexpr int kFieldTriples = 1000;
constexpr int kReductionPairs = 100;
constexpr std::size_t kDualMaxMembers = 50;

const FieldPtr F2 = FiniteField::prime(2);

struct Check {
    std::ostringstream log;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    failed: " << what << '\n';
        }
    }
};

std::string fixture_path() { return std::string(FLAGSPREAD_DATA_DIR) + "/paper_s3_3.json"; }

bool equidistant(const CDCode& c, std::size_t m, std::size_t intersection) {
    if (c.dim() != m) return false;
    const CodeReport r = code_diagnose(c);
    return r.equidistant_c && *r.equidistant_c == intersection;
}

/// Every nonempty strictly increasing type vector on F^n.
std::vector<TypeVector> all_types(std::size_t n) {
    std::vector<TypeVector> out;
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<std::size_t> d;
        for (std::size_t t = 1; t < n; ++t)
            if (mask >> (t - 1) & 1) d.push_back(t);
        out.emplace_back(d, n);
    }
    return out;
}

/// Constant dimension codes produced along the way, for the dual check.
std::vector<CDCode>& constructed_codes() {
    static std::vector<CDCode> codes;
    return codes;
}

void record_projections(const FlagCode& c) {
    for (std::size_t i = 0; i < c.type().length(); ++i) constructed_codes().push_back(projected_code(c, i));
}

// 1. type (2,4) on F_2^6 from the 2-spread and the published matching
void worked_example(Check& c) {
    const SpreadConstruction plain = prepare_construction(F2, 2, 3);
    const Matching fixture = io::matching_from_json(io::read_json_file(fixture_path()), plain.graph);
    c.expect(validate_matching(plain.graph, fixture), "matching fixture is a bijection with l in M(l)");
    const SpreadConstruction sc = prepare_construction(F2, 2, 3, fixture);
    const FlagCode code = build_type_k_code(sc);
    c.expect(code.size() == 21 && code.size() == spread_size(2, 6, 2), "|C| = 21 = (2^6-1)/(2^2-1)");
    c.expect(min_flag_distance(code) == 8, "d_f = 8");
    c.expect(max_flag_distance(code.type()) == 8, "bound = 8");
    const CDCode c1 = projected_code(code, 0);
    c.expect(c1.same_set(sc.spread.members) && verify_spread(sc.spread) && is_spread(c1), "C_1 is the Segre spread");
    c.expect(c1.size() == 21 && projected_code(code, 1).size() == 21, "disjoint");
    c.expect(equidistant(projected_code(code, 1), 4, 2), "C_2 equidistant 2-intersecting of dim 4");
    record_projections(code);
    constructed_codes().push_back(sc.spread.members);
}

// 2. type (1,2) on F_2^3
void type_12(Check& c) {
    const FlagCode code = build_type1_code(F2, 3);
    c.expect(code.size() == 7 && code.size() == 4 + 2 + 1, "|C| = 7 = q^2+q+1");
    c.expect(min_flag_distance(code) == 4, "d_f = 4");
    c.expect(code_diagnose(projected_code(code, 0)).min_distance == 2, "C_1 attains distance 2");
    c.expect(code_diagnose(projected_code(code, 1)).min_distance == 2, "C_2 attains distance 2");
    record_projections(code);
}

// 3. full admissible type (1,2,4,5) on F_2^6
void full_type(Check& c) {
    const FlagCode code = build_full_admissible_code(F2, 2, 3);
    c.expect(code.type() == TypeVector({1, 2, 4, 5}, 6), "type (1,2,4,5)");
    c.expect(code.size() == 21, "|C| = 21");
    c.expect(min_flag_distance(code) == 12 && max_flag_distance(code.type()) == 2 * 2 * 3, "d_f = 12 = 2k(k+1)");
    const CodeReport r0 = code_diagnose(projected_code(code, 0));
    c.expect(projected_code(code, 0).dim() == 1 && r0.is_partial_spread && r0.size == 21, "C_1 partial spread of dim 1");
    c.expect(is_spread(projected_code(code, 1)) && projected_code(code, 1).dim() == 2, "C_2 spread of dim 2");
    c.expect(equidistant(projected_code(code, 2), 4, 2), "C_3 equidistant 2-intersecting of dim 4");
    c.expect(equidistant(projected_code(code, 3), 5, 4), "C_4 equidistant 4-intersecting of dim 5");
    record_projections(code);
}

// 4. bound consistency over every admissible type
void sweep(Check& c) {
    struct Case { Code q; unsigned k, s; };
    for (const Case cs : {Case{2, 1, 3}, Case{3, 1, 3}, Case{2, 1, 4}, Case{2, 2, 3}}) {
        const FieldPtr f = FiniteField::prime(cs.q);
        const std::size_t n = cs.k * cs.s;
        const FlagCode full = build_full_admissible_code(f, cs.k, cs.s);
        record_projections(full);
        std::size_t count = 0;
        for (const TypeVector& t : all_types(n)) {
            if (!admissible_type(n, cs.k, t)) continue;
            ++count;
            const FlagCode p = puncture(full, t);
            std::size_t brute = SIZE_MAX;
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = i + 1; j < p.size(); ++j) brute = std::min(brute, oracle::flag_distance(p[i], p[j]));
            const OptimumReport r = is_optimum_distance(p);
            const std::string tag = "q=" + std::to_string(cs.q) + " k=" + std::to_string(cs.k) + " s=" + std::to_string(cs.s) +
                                    " type " + t.to_string();
            c.expect(brute == max_flag_distance(t) && r.min_distance == brute, tag + ": distance equals bound");
            c.expect(r.optimum && r.routes_agree(), tag + ": both optimality routes agree");
        }
        c.expect(count > 0, "some admissible type");
    }
}

// 5. admissibility against a set-comprehension oracle
void admissibility(Check& c) {
    const std::size_t n = 6;
    for (std::size_t k : {1, 2, 3}) {
        std::set<std::vector<std::size_t>> expected, got;
        // all subsets of {d : d <= k or d >= n-k} that contain k
        std::vector<std::size_t> allowed;
        for (std::size_t d = 1; d < n; ++d)
            if (d <= k || d >= n - k) allowed.push_back(d);
        for (std::uint32_t mask = 0; mask < (1u << allowed.size()); ++mask) {
            std::set<std::size_t> dims;
            for (std::size_t i = 0; i < allowed.size(); ++i)
                if (mask >> i & 1) dims.insert(allowed[i]);
            if (dims.count(k)) expected.insert(std::vector<std::size_t>(dims.begin(), dims.end()));
        }
        std::size_t total = 0;
        for (const TypeVector& t : all_types(n)) {
            ++total;
            if (admissible_type(n, k, t)) got.insert(t.dims());
        }
        c.expect(total == 31, "31 type vectors for n = 6");
        c.expect(got == expected, "k=" + std::to_string(k) + ": admissible set matches oracle");
    }
}

// 6. field axioms, Frobenius, phi homomorphism, field reduction structure
void properties(Check& c) {
    std::mt19937_64 rng(2026);
    const std::vector<FieldPtr> fields = {F2,
                                          FiniteField::prime(3),
                                          FiniteField::prime(7),
                                          FiniteField::create(2, {2}),
                                          FiniteField::create(2, {3}),
                                          FiniteField::create(3, {2}),
                                          FiniteField::create(2, {6}),
                                          FiniteField::create(2, {2, 2}),
                                          FiniteField::create(2, {2, 3}),
                                          FiniteField::create(5, {2})};
    for (const auto& F : fields) {
        std::uniform_int_distribution<Code> d(0, F->order() - 1);
        bool ok = true;
        for (int t = 0; t < kFieldTriples; ++t) {
            const Code a = d(rng), b = d(rng), x = d(rng);
            ok &= F->add(a, b) == F->add(b, a) && F->mul(a, b) == F->mul(b, a);
            ok &= F->add(F->add(a, b), x) == F->add(a, F->add(b, x));
            ok &= F->mul(F->mul(a, b), x) == F->mul(a, F->mul(b, x));
            ok &= F->mul(a, F->add(b, x)) == F->add(F->mul(a, b), F->mul(a, x));
            ok &= F->add(a, 0) == a && F->mul(a, 1) == a && F->add(a, F->neg(a)) == 0;
            if (a != 0) ok &= F->mul(a, F->inv(a)) == 1;
        }
        c.expect(ok, F->name() + ": field axioms");
        if (F->order() <= 64) {
            bool frob = true;
            for (Code a = 0; a < F->order(); ++a)
                for (Code b = 0; b < F->order(); ++b) {
                    const auto p = F->characteristic();
                    frob &= F->pow(F->add(a, b), p) == F->add(F->pow(a, p), F->pow(b, p));
                }
            c.expect(frob, F->name() + ": Frobenius is additive");
        }
        if (!F->is_prime_field() && F->order() <= 64) {
            const FieldEmbedding phi(F);
            bool hom = true;
            for (Code a = 0; a < F->order(); ++a)
                for (Code b = 0; b < F->order(); ++b)
                    hom &= phi(F->add(a, b)) == phi(a) + phi(b) && phi(F->mul(a, b)) == phi(a) * phi(b);
            std::set<std::vector<Code>> images;
            for (Code a = 0; a < F->order(); ++a) images.insert(phi(a).data());
            c.expect(hom && images.size() == F->order(), F->name() + ": phi is an injective ring homomorphism");
        }
    }

    struct Case { Code q; unsigned k, s; };
    for (const Case cs : {Case{2, 2, 3}, Case{2, 3, 2}, Case{3, 2, 2}, Case{2, 2, 4}, Case{2, 1, 4}}) {
        const FieldPtr base = FiniteField::prime(cs.q);
        const FieldPtr ext = FiniteField::extend(base, cs.k);
        const FieldEmbedding phi(ext);
        bool inj = true, meet = true, contain = true, dims = true;
        for (int t = 0; t < kReductionPairs; ++t) {
            const Subspace u = oracle::random_subspace(ext, 1 + t % cs.s, cs.s, rng);
            const Subspace v = oracle::random_subspace(ext, 1 + (t / 2) % cs.s, cs.s, rng);
            const Subspace fu = field_reduction(u, phi), fv = field_reduction(v, phi);
            inj &= (u == v) == (fu == fv);
            const auto su = oracle::span_set(fu), sv = oracle::span_set(fv);
            const auto both = oracle::meet(su, sv);
            meet &= oracle::span_set(field_reduction(u.intersect(v), phi)) == both;
            contain &= v.contains(u) == (both.size() == su.size());
            const Subspace w = u + v;
            contain &= oracle::meet(su, oracle::span_set(field_reduction(w, phi))).size() == su.size();
            dims &= oracle::dim_of(su, cs.q) == cs.k * u.dim() && fu.ambient() == cs.k * cs.s;
        }
        const std::string tag = "q=" + std::to_string(cs.q) + " k=" + std::to_string(cs.k) + " s=" + std::to_string(cs.s);
        c.expect(inj, tag + ": phi injective on subspaces");
        c.expect(meet, tag + ": phi commutes with intersection");
        c.expect(contain, tag + ": phi preserves containment");
        c.expect(dims, tag + ": phi multiplies dimension by k");
    }
}

// 7. duals of every constructed constant dimension code with at most 50 members
void duals(Check& c) {
    for (int q : {2, 3})
        for (unsigned s : {3u, 4u}) constructed_codes().push_back(segre_spread(FiniteField::prime(q), 1, s).members);
    constructed_codes().push_back(segre_spread(F2, 3, 2).members);
    std::size_t checked = 0;
    for (const CDCode& code : constructed_codes()) {
        if (code.size() > kDualMaxMembers || code.size() < 2) continue;
        const CDCode dual = dual_code(code);
        ++checked;
        c.expect(dual.size() == code.size(), "|C^perp| = |C|");
        c.expect(code_diagnose(dual).min_distance == code_diagnose(code).min_distance, "d_S(C^perp) = d_S(C)");
    }
    c.expect(checked >= 10, "at least ten codes checked");
}

// 8. byte-identical serialization across independent runs
void determinism(Check& c) {
    const std::vector<std::pair<std::string, std::function<std::string()>>> builders = {
        {"type (1,s-1)", [] { return io::flag_code_to_json(build_type1_code(FiniteField::prime(3), 3)).dump(); }},
        {"type (k,n-k)", [] { return io::flag_code_to_json(build_type_k_code(F2, 2, 3)).dump(); }},
        {"full admissible", [] { return io::flag_code_to_json(build_full_admissible_code(F2, 2, 3)).dump(); }},
        {"puncture", [] { return io::flag_code_to_json(puncture(build_full_admissible_code(F2, 2, 3), TypeVector({1, 2, 5}, 6))).dump(); }},
        {"spread", [] { return io::spread_to_json(segre_spread(F2, 3, 2)).dump(); }},
        {"matching", [] {
             const IncidenceGraph g = build_incidence_graph(FiniteField::create(2, {2}), 3);
             return io::matching_to_json(g, perfect_matching(g)).dump();
         }},
    };
    for (const auto& [name, run] : builders) c.expect(run() == run(), name + ": identical output");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<void(Check&)> run;
        double limit;  // seconds, 0 for none
    };
    const std::vector<Criterion> criteria = {
        {1, "worked example, type (2,4) on F_2^6", worked_example, kLimitWorkedExample},
        {2, "type (1,2) on F_2^3", type_12, kLimitType12},
        {3, "full admissible type (1,2,4,5) on F_2^6", full_type, kLimitFullType},
        {4, "bound consistency sweep", sweep, kLimitSweep},
        {5, "admissibility oracle, n = 6", admissibility, 0},
        {6, "field and reduction properties", properties, 0},
        {7, "dual codes", duals, 0},
        {8, "determinism", determinism, 0},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.limit > 0) c.expect(secs < cr.limit, "runtime " + std::to_string(secs) + " s over " + std::to_string(cr.limit) + " s");
        std::printf("[%s] criterion %d: %s (%.3f s)\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name.c_str(), secs);
        std::fputs(c.log.str().c_str(), stdout);
        failures += !c.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
