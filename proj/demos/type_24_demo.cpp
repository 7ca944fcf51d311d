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

// Type (2,4) flag code on F_2^6 built from the 2-spread, printed flag by flag.

#include <cstdio>

#include "flagspread/flagspread.hpp"

using namespace flagspread;

namespace {

void print_matrix(const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::printf("    ");
        for (std::size_t c = 0; c < m.cols(); ++c) std::printf("%u", static_cast<unsigned>(m(r, c)));
        std::printf("\n");
    }
}

}  // namespace

int main() {
    const FieldPtr F2 = FiniteField::prime(2);
    const SpreadConstruction sc = prepare_construction(F2, 2, 3);
    const FlagCode code = build_type_k_code(sc);
    for (std::size_t i = 0; i < code.size(); ++i) {
        std::printf("flag %zu\n  F_1\n", i);
        print_matrix(code[i][0].generator());
        std::printf("  F_2\n");
        print_matrix(code[i][1].generator());
    }
    const OptimumReport r = is_optimum_distance(code);
    std::printf("size=%zu d_f=%zu bound=%zu spread=%s\n", code.size(), r.min_distance, r.bound,
                is_spread(projected_code(code, 0)) ? "yes" : "no");
    return r.optimum ? 0 : 1;
}
