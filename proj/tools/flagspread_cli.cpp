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

// flagspread: construct, verify, enumerate and export flag codes from spreads.
//
// Exit status: 0 when every check passes, 1 when a verification fails,
// 2 for usage, input or enumeration-cap errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flagspread/flagspread.hpp"
#include "flagspread/io.hpp"

using namespace flagspread;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

struct RunConfig {
    std::uint32_t p = 2;
    std::vector<unsigned> degrees;
    std::vector<Code> modulus;
    unsigned k = 0, s = 0, m = 0;
    std::vector<std::size_t> type;
    std::string matching, fixture = std::string(FLAGSPREAD_DATA_DIR) + "/paper_s3_3.json";
    std::string matching_mode = "fixture";
    std::string input, out, format = "json", what;
    std::uint64_t cap = kDefaultEnumerationCap;
    bool spread = false;
    std::optional<std::size_t> verify_k;
};

FieldPtr base_field(const RunConfig& c) { return FiniteField::create(c.p, c.degrees); }

std::optional<Poly> modulus(const RunConfig& c) {
    if (c.modulus.empty()) return std::nullopt;
    return Poly(c.modulus);
}

void emit(const RunConfig& c, const json& j) {
    if (c.out.empty()) return;
    io::write_json_file(c.out, j);
    std::printf("wrote %s\n", c.out.c_str());
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

/// Per-projection diagnostics, bound comparison and the spread check; true when all pass.
bool report_flag_code(const FlagCode& code, std::optional<std::size_t> k) {
    const std::size_t n = code.ambient();
    std::printf("field=%s n=%zu type=%s size=%zu\n", code.field()->name().c_str(), n, code.type().to_string().c_str(), code.size());
    if (code.size() < 2) {
        std::printf("fewer than two flags; nothing to verify\nresult: fail\n");
        return false;
    }
    const OptimumReport r = is_optimum_distance(code);
    std::printf("d_f=%zu bound=%zu optimum=%s\n", r.min_distance, r.bound, verdict(r.optimum));
    for (std::size_t i = 0; i < code.type().length(); ++i) {
        const CDCode p = projected_code(code, i);
        std::printf("  projection %zu: dim=%zu size=%zu", i + 1, p.dim(), p.size());
        if (p.size() >= 2) {
            const CodeReport d = code_diagnose(p);
            std::printf(" min_distance=%zu max_distance=%zu partial_spread=%s", d.min_distance, d.max_distance,
                        d.is_partial_spread ? "yes" : "no");
            if (d.equidistant_c) std::printf(" equidistant_c=%zu", *d.equidistant_c);
        }
        std::printf("\n");
    }
    std::printf("disjoint=%s characterization=%s routes_agree=%s\n", r.disjoint ? "yes" : "no", verdict(r.characterization),
                r.routes_agree() ? "yes" : "no");
    bool ok = r.optimum && r.routes_agree();
    if (k) {
        if (n % *k != 0 || !code.type().position(*k)) {
            std::printf("spread: fail (dimension %zu unusable for type %s)\n", *k, code.type().to_string().c_str());
            ok = false;
        } else {
            const bool sp = is_spread(projected_code(code, *code.type().position(*k)));
            std::printf("spread: %s (dimension %zu)\n", verdict(sp), *k);
            ok = ok && sp && max_cardinality_check(code, *k);
        }
    } else {
        for (std::size_t d : code.type().dims())
            if (n % d == 0 && 2 * d <= n)
                std::printf("spread at dimension %zu: %s\n", d, is_spread(projected_code(code, *code.type().position(d))) ? "yes" : "no");
    }
    std::printf("result: %s\n", verdict(ok));
    return ok;
}

int cmd_construct(const RunConfig& c) {
    if (c.k == 0 || c.s == 0) throw CLI::ValidationError("construct", "--k and --s are required");
    const std::size_t n = static_cast<std::size_t>(c.k) * c.s;
    const TypeVector full = full_admissible_type(n, c.k);
    const TypeVector t = c.type.empty() ? full : TypeVector(c.type, n);
    if (auto why = admissibility_violation(n, c.k, t)) {
        std::fprintf(stderr, "error: type %s is not admissible for k=%u, n=%zu: %s\n", t.to_string().c_str(), c.k, n, why->c_str());
        return kError;
    }
    std::optional<Matching> m;
    const FieldPtr base = base_field(c);
    SpreadConstruction sc = [&] {
        if (c.matching.empty()) return prepare_construction(base, c.k, c.s, std::nullopt, modulus(c), c.cap);
        SpreadConstruction plain = prepare_construction(base, c.k, c.s, std::nullopt, modulus(c), c.cap);
        const Matching given = io::matching_from_json(io::read_json_file(c.matching), plain.graph);
        if (!validate_matching(plain.graph, given)) throw io::ParseError("matching in " + c.matching + " is not a valid perfect matching");
        plain.matching = given;
        return plain;
    }();
    const TypeVector tk({c.k, n - c.k}, n);
    const FlagCode code = t == tk && 2 * c.k < n ? build_type_k_code(sc) : puncture(build_full_admissible_code(sc), t);
    emit(c, io::flag_code_to_json(code));
    return report_flag_code(code, c.k) ? kPass : kFail;
}

int cmd_verify(const RunConfig& c) {
    const json j = io::read_json_file(c.input);
    if (j.contains("flags")) return report_flag_code(io::flag_code_from_json(j), c.verify_k) ? kPass : kFail;
    const CDCode code = io::cdcode_from_json(j);
    std::printf("field=%s n=%zu dim=%zu size=%zu\n", code.field()->name().c_str(), code.ambient(), code.dim(), code.size());
    bool ok = true;
    if (code.size() >= 2) {
        const CodeReport d = code_diagnose(code);
        std::printf("min_distance=%zu max_distance=%zu partial_spread=%s partial_spread_bound=%llu\n", d.min_distance, d.max_distance,
                    d.is_partial_spread ? "yes" : "no", static_cast<unsigned long long>(d.partial_spread_bound));
        ok = d.meets_max_distance && d.within_partial_spread_bound;
    }
    if (c.verify_k) {
        const bool sp = code.dim() == *c.verify_k && is_spread(code);
        std::printf("spread: %s (dimension %zu)\n", verdict(sp), *c.verify_k);
        ok = ok && sp;
    }
    std::printf("result: %s\n", verdict(ok));
    return ok ? kPass : kFail;
}

void print_members(const std::vector<Subspace>& subs) {
    for (const auto& u : subs) std::printf("%s\n", io::matrix_to_json(u.generator()).dump().c_str());
}

int cmd_enumerate(const RunConfig& c) {
    if (c.spread) {
        if (c.k == 0 || c.s == 0) throw CLI::ValidationError("enumerate", "--spread needs --k and --s");
        const Spread sp = segre_spread(base_field(c), c.k, c.s, modulus(c), c.cap);
        std::printf("count=%zu\n", sp.size());
        print_members(sp.members.members());
        const bool ok = verify_spread(sp);
        std::printf("spread: %s\n", verdict(ok));
        emit(c, io::spread_to_json(sp));
        return ok ? kPass : kFail;
    }
    if (c.m == 0 || c.s == 0) throw CLI::ValidationError("enumerate", "--m and --s are required");
    const FieldPtr f = base_field(c);
    const auto g = grassmannian(f, c.m, c.s, c.cap);
    std::printf("count=%zu\n", g.size());
    print_members(g);
    if (!c.out.empty()) emit(c, io::cdcode_to_json(CDCode::from_members(g)));
    return g.size() == gaussian_binomial(c.s, c.m, f->order()) ? kPass : kFail;
}

int cmd_example(const RunConfig& c) {
    const FieldPtr F2 = FiniteField::prime(2);
    SpreadConstruction sc = prepare_construction(F2, 2, 3);
    if (c.matching_mode == "fixture") {
        const Matching m = io::matching_from_json(io::read_json_file(c.fixture), sc.graph);
        if (!validate_matching(sc.graph, m)) {
            std::printf("matching fixture is invalid: not a bijection of lines onto hyperplanes containing them\nresult: fail\n");
            return kFail;
        }
        std::printf("matching fixture: valid (%zu pairs)\n", m.map.size());
        sc.matching = m;
    } else {
        std::printf("matching: recomputed by Hopcroft-Karp\n");
    }
    const FlagCode code = build_type_k_code(sc);
    bool ok = true;
    auto check = [&](bool cond, const char* what) {
        std::printf("  %s: %s\n", what, verdict(cond));
        ok = ok && cond;
    };
    check(code.size() == 21, "|C| = 21");
    check(min_flag_distance(code) == 8, "d_f = 8");
    check(projected_code(code, 0).same_set(sc.spread.members) && verify_spread(sc.spread), "C_1 = S(3,2,P)");
    const CodeReport r2 = code_diagnose(projected_code(code, 1));
    check(r2.equidistant_c && *r2.equidistant_c == 2, "C_2 equidistant 2-intersecting");

    const FieldPtr F4 = sc.spread.extension_field();
    const Subspace l = Subspace::span(Matrix::from_rows(F4, {{0, 1, 2}}));
    const std::size_t i = sc.graph.left_index(l);
    const Flag& f = code[i];
    std::printf("flag for l = <(0,1,a)>:\n  F_1 = %s\n  F_2 = %s\n", io::matrix_to_json(f[0].generator()).dump().c_str(),
                io::matrix_to_json(f[1].generator()).dump().c_str());
    const Subspace f1 = Subspace::span(Matrix::from_rows(F2, {{0, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1}}));
    const Subspace f2 =
        Subspace::span(Matrix::from_rows(F2, {{0, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 1, 1}}));
    check(f[0] == f1, "F_1 = rowsp(0|I|P)");
    if (c.matching_mode == "fixture") check(f[1] == f2, "F_2 = rowsp(0|I|P ; I|0|P)");
    emit(c, io::flag_code_to_json(code));
    std::printf("result: %s\n", verdict(ok));
    return ok ? kPass : kFail;
}

int cmd_export(const RunConfig& c) {
    json j;
    if (c.what == "matching") {
        if (c.s == 0) throw CLI::ValidationError("export", "--s is required");
        const IncidenceGraph g = build_incidence_graph(base_field(c), c.s, c.cap);
        j = io::matching_to_json(g, perfect_matching(g));
    } else {
        if (c.k == 0 || c.s == 0) throw CLI::ValidationError("export", "--k and --s are required");
        j = io::spread_to_json(segre_spread(base_field(c), c.k, c.s, modulus(c), c.cap));
    }
    if (c.out.empty()) std::printf("%s\n", j.dump().c_str());
    else emit(c, j);
    return kPass;
}

void field_options(CLI::App* app, RunConfig& c) {
    app->add_option("--p", c.p, "field characteristic")->check(CLI::PositiveNumber);
    app->add_option("--degrees", c.degrees, "extension degrees of the base field tower")->delimiter(',');
    app->add_option("--modulus", c.modulus, "modulus of F_{q^k} over the base, constant term first")->delimiter(',');
    app->add_option("--cap", c.cap, "enumeration cap");
}

void output_options(CLI::App* app, RunConfig& c) {
    app->add_option("--out", c.out, "output file");
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimum distance flag codes from spreads"};
    app.require_subcommand(1);
    RunConfig c;

    auto* construct = app.add_subcommand("construct", "build a flag code of an admissible type");
    field_options(construct, c);
    output_options(construct, c);
    construct->add_option("--k", c.k, "spread dimension")->required();
    construct->add_option("--s", c.s, "n = k s")->required();
    construct->add_option("--type", c.type, "type vector; default the full admissible type")->delimiter(',');
    construct->add_option("--matching", c.matching, "matching file of [line, hyperplane] pairs");

    auto* verify = app.add_subcommand("verify", "verify a flag code or constant dimension code file");
    verify->add_option("path", c.input, "code file")->required();
    verify->add_option("--k", c.verify_k, "require a k-spread at dimension k");

    auto* enumerate = app.add_subcommand("enumerate", "list a Grassmannian or a Segre spread");
    field_options(enumerate, c);
    output_options(enumerate, c);
    enumerate->add_option("--m", c.m, "subspace dimension");
    enumerate->add_option("--s", c.s, "ambient dimension (or n/k with --spread)");
    enumerate->add_option("--k", c.k, "spread dimension");
    enumerate->add_flag("--spread", c.spread, "list the Segre spread S(s,k,P)");

    auto* example = app.add_subcommand("example-paper", "rebuild the type (2,4) example on F_2^6");
    output_options(example, c);
    example->add_option("--fixture", c.fixture, "matching fixture");
    example->add_option("--matching", c.matching_mode, "fixture or fresh")->check(CLI::IsMember({"fixture", "fresh"}));

    auto* exp = app.add_subcommand("export", "write a matching or spread as JSON");
    field_options(exp, c);
    output_options(exp, c);
    exp->add_option("what", c.what, "matching or spread")->required()->check(CLI::IsMember({"matching", "spread"}));
    exp->add_option("--k", c.k, "spread dimension");
    exp->add_option("--s", c.s, "ambient dimension (or n/k for a spread)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (construct->parsed()) return cmd_construct(c);
        if (verify->parsed()) return cmd_verify(c);
        if (enumerate->parsed()) return cmd_enumerate(c);
        if (example->parsed()) return cmd_example(c);
        return cmd_export(c);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const CapExceeded& e) {
        std::fprintf(stderr, "error: %s (raise --cap)\n", e.what());
    } catch (const io::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
    }
    return kError;
}
