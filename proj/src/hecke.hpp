#pragma once

#include <vector>

#include "weyl.hpp"

namespace weylfold {

// The double-coset algebra C[W' \ W / W'] under convolution
// (f * g)(x) = sum_y f(y) g(y^{-1} x). The stored basis is
// T_a = (1/|W'|) 1_{D_a}, which makes the identity coset the algebra unit;
// structure-constant denominators divide |W'|^2.
struct HeckeAlgebra {
    unsigned long long group_order = 0;
    unsigned long long subgroup_order = 0;
    std::vector<int> reps;                 // element ids of coset representatives
    std::vector<std::vector<int>> cosets;  // element ids per double coset
    // counts[a][b][k] = #{y in D_a : y^{-1} x_k in D_b}; the structure
    // constants are c[a][b][k] = counts[a][b][k] / |W'|.
    std::vector<std::vector<std::vector<long long>>> counts;
    std::vector<std::vector<std::vector<Rat>>> c;
    bool unit_ok = false;
};

HeckeAlgebra build(const WeylGroup& w, const ParabolicSubgroup& sub,
                   unsigned long long budget = 1152);

bool associativity_check(const HeckeAlgebra& h);

struct InvariantModuleDims {
    unsigned long long left_cosets = 0;    // dim C[W]^{W'} = |W|/|W'|
    unsigned long long double_cosets = 0;  // dim End = dim H(W, W')
};

InvariantModuleDims invariant_module_dim(const WeylGroup& w, const ParabolicSubgroup& sub);

}  // namespace weylfold
