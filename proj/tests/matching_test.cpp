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

#include <gtest/gtest.h>

#include "flagspread/io.hpp"
#include "flagspread/matching.hpp"
#include "oracle.hpp"

using namespace flagspread;

namespace {

const FieldPtr F2 = FiniteField::prime(2);
const FieldPtr F4 = FiniteField::create(2, {2});

Matching fixture_matching(const IncidenceGraph& g) {
    return io::matching_from_json(io::read_json_file(std::string(FLAGSPREAD_DATA_DIR) + "/paper_s3_3.json"), g);
}

}  // namespace

TEST(IncidenceGraph, RegularOfExpectedDegree) {
    for (const auto& [F, s] : std::vector<std::pair<FieldPtr, unsigned>>{
             {F2, 3}, {F4, 3}, {F2, 4}, {FiniteField::prime(3), 3}, {FiniteField::prime(3), 4}, {F2, 5}}) {
        const IncidenceGraph g = build_incidence_graph(F, s);
        const std::uint64_t q = F->order();
        const std::uint64_t deg = (checked_pow(q, s - 1) - 1) / (q - 1);
        ASSERT_EQ(g.left.size(), spread_size(q, s, 1));
        ASSERT_EQ(g.right.size(), g.left.size());
        std::vector<std::size_t> right_deg(g.right.size(), 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            ASSERT_EQ(g.adjacency[i].size(), deg) << F->name() << " s=" << s;
            for (std::size_t j : g.adjacency[i]) ++right_deg[j];
        }
        for (std::size_t d : right_deg) ASSERT_EQ(d, deg);
    }
    EXPECT_EQ(build_incidence_graph(F2, 3).adjacency[0].size(), 3u);
    EXPECT_EQ(build_incidence_graph(F4, 3).adjacency[0].size(), 5u);
}

TEST(IncidenceGraph, EdgesAreBruteForceContainment) {
    const IncidenceGraph g = build_incidence_graph(F4, 3);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto line = oracle::span_set(g.left[i]);
        std::vector<std::size_t> expect;
        for (std::size_t j = 0; j < g.right.size(); ++j) {
            const auto hyper = oracle::span_set(g.right[j]);
            if (oracle::meet(line, hyper).size() == line.size()) expect.push_back(j);
        }
        ASSERT_EQ(g.adjacency[i], expect);
    }
}

TEST(PerfectMatching, ValidAndDeterministic) {
    for (const auto& [F, s] : std::vector<std::pair<FieldPtr, unsigned>>{{F2, 3}, {F4, 3}, {F2, 4}, {FiniteField::prime(3), 4}}) {
        const IncidenceGraph g = build_incidence_graph(F, s);
        const Matching a = perfect_matching(g), b = perfect_matching(build_incidence_graph(F, s));
        EXPECT_TRUE(validate_matching(g, a));
        EXPECT_EQ(a, b);
    }
}

TEST(PerfectMatching, PlaneIsTheIdentity) {
    // in F^2 the hyperplanes are the lines themselves
    const IncidenceGraph g = build_incidence_graph(F4, 2);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g.adjacency[i], std::vector<std::size_t>{i});
    const Matching m = perfect_matching(g);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(m.map[i], i);
}

TEST(PerfectMatching, CorruptedGraphThrows) {
    IncidenceGraph g = build_incidence_graph(F2, 3);
    for (auto& adj : g.adjacency) adj = {0};
    EXPECT_THROW(perfect_matching(g), std::runtime_error);
}

TEST(ValidateMatching, PublishedFixture) {
    const IncidenceGraph g = build_incidence_graph(F4, 3);
    const Matching m = fixture_matching(g);
    EXPECT_TRUE(validate_matching(g, m));
    // l = <(0,1,a)> goes to <(0,1,a),(1,0,a)>
    const auto l = Subspace::span(Matrix::from_rows(F4, {{0, 1, 2}}));
    const auto h = Subspace::span(Matrix::from_rows(F4, {{0, 1, 2}, {1, 0, 2}}));
    EXPECT_EQ(g.right[m.map[g.left_index(l)]], h);
}

TEST(ValidateMatching, MutationsAreRejected) {
    const IncidenceGraph g = build_incidence_graph(F4, 3);
    Matching m = fixture_matching(g);
    std::swap(m.map[0], m.map[1]);
    EXPECT_FALSE(validate_matching(g, m));
    Matching dup = perfect_matching(g);
    dup.map[1] = dup.map[0];
    EXPECT_FALSE(validate_matching(g, dup));
    Matching shortm = perfect_matching(g);
    shortm.map.pop_back();
    EXPECT_FALSE(validate_matching(g, shortm));
}

TEST(MatchingFromPairs, Errors) {
    const IncidenceGraph g = build_incidence_graph(F2, 3);
    std::vector<std::pair<Subspace, Subspace>> pairs;
    const Matching m = perfect_matching(g);
    for (std::size_t i = 0; i < g.size(); ++i) pairs.emplace_back(g.left[i], g.right[m.map[i]]);
    EXPECT_EQ(matching_from_pairs(g, pairs), m);
    std::reverse(pairs.begin(), pairs.end());
    EXPECT_EQ(matching_from_pairs(g, pairs), m);
    pairs[1].first = pairs[0].first;
    EXPECT_THROW(matching_from_pairs(g, pairs), std::invalid_argument);
    pairs.pop_back();
    EXPECT_THROW(matching_from_pairs(g, pairs), std::invalid_argument);
}
