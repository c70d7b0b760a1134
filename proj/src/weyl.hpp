#pragma once

#include <map>
#include <vector>

#include "dynkin.hpp"
#include "linalg.hpp"

namespace weylfold {

constexpr unsigned long long kDefaultOrderBudget = 1000000;

// One Weyl group element: an exact integer matrix in simple-root coordinates
// together with one reduced word (0-based generator indices).
struct GroupElement {
    IMat matrix;
    std::vector<int> word;
};

// Fully enumerated Weyl group of a finite-type Cartan matrix. Elements are
// listed in breadth-first order, i.e. sorted by (word length, word lex);
// element 0 is the identity. Immutable after generation.
struct WeylGroup {
    IMat cartan;
    std::vector<IMat> generators;
    std::vector<GroupElement> elements;
    std::map<IMat, int> index;

    int rank() const { return cartan.n; }
    unsigned long long order() const { return elements.size(); }
    int id_of(const IMat& m) const;  // -1 if absent
    int mul(int a, int b) const;
    int inverse(int a) const;
    int generator_id(int j) const { return id_of(generators[j]); }
};

// Reflection matrix of simple root j for the given Cartan matrix.
IMat simple_reflection(const IMat& cartan, int j);

// Enumerates the group; the expected order is computed from the
// classification first and checked against the budget before any work, so
// E7/E8 scale inputs are rejected immediately under the default budget.
WeylGroup generate(const IMat& cartan, unsigned long long budget = kDefaultOrderBudget);

struct ParabolicSubgroup {
    std::vector<int> gens;      // generator indices (0-based) into the parent
    std::vector<int> elements;  // element ids in the parent, sorted
};

ParabolicSubgroup parabolic(const WeylGroup& w, std::vector<int> J);

// Subgroup generated by arbitrary elements, as sorted parent ids.
std::vector<int> generated_subgroup(const WeylGroup& w, const std::vector<int>& gen_ids);

// Dimension of the common fixed space of a set of matrices.
int fixed_space_dim(const std::vector<IMat>& gens, int n);
int fixed_space_dim(const WeylGroup& w, const ParabolicSubgroup& sub);

struct DoubleCosetDecomposition {
    std::vector<std::vector<int>> cosets;  // element ids, each sorted
    std::vector<int> reps;                 // minimal (length, lex word) member
};

DoubleCosetDecomposition double_cosets(const WeylGroup& w, const ParabolicSubgroup& sub);

// Verifies that every involution factors as a product of reflections in
// mutually orthogonal roots (exhaustive search over root subsets).
bool involutions_orthogonal_check(const WeylGroup& w);

// Lexicographically minimal vector in the orbit of v under the listed
// elements; models a point of the quotient by the subgroup.
QVec canonical_orbit_rep(const WeylGroup& w, const std::vector<int>& subgroup_elements,
                         const QVec& v);

int longest_element(const WeylGroup& w);
int longest_element(const WeylGroup& w, const ParabolicSubgroup& sub);

std::vector<QVec> orbit(const WeylGroup& w, const std::vector<int>& subgroup_elements,
                        const QVec& v);

// Independent cross-check: order of the group generated by the simple
// reflections acting as permutations of the root system.
unsigned long long permutation_order_oracle(const IMat& cartan,
                                            unsigned long long budget = kDefaultOrderBudget);

}  // namespace weylfold
