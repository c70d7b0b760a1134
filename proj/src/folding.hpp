#pragma once

#include <vector>

#include "dynkin.hpp"
#include "weyl.hpp"

namespace weylfold {

// A finite group of automorphisms of a simply-laced Dynkin diagram, stored
// extensionally. Permutations are image lists over node ids 1..n, always
// closed and containing the identity; construction validates and closes the
// generating set rather than trusting the caller.
struct FoldingAction {
    DynkinDiagram diagram;
    std::vector<std::vector<int>> elements;
};

FoldingAction make_action(const DynkinDiagram& d, const std::vector<std::vector<int>>& generators);
FoldingAction make_action(const DynkinType& t, const std::vector<std::vector<int>>& generators);

// Node orbit with the number of connected components of its induced subgraph.
struct Orbit {
    std::vector<int> nodes;  // 1-based, sorted
    int components = 1;
};

// Orbits sorted by minimal member; this order fixes the folded node numbering.
std::vector<Orbit> orbits(const FoldingAction& action);

// beta_j = (1/N) sum_{i in j} alpha_i in unfolded simple-root coordinates.
QVec beta(const Orbit& orbit, int ambient_rank);

struct FoldedDatum {
    std::vector<Orbit> orbit_list;
    std::vector<QVec> betas;
    IMat folded_cartan;                // in orbit order
    std::vector<ClassifiedBlock> blocks;  // classification of folded_cartan
    std::vector<DynkinType> folded_type;
};

// Folded Cartan c_jk = 2<beta_j,beta_k>/<beta_j,beta_j> and its
// classification. Raises consistency_error if the result is not an integral
// finite-type matrix (cannot happen for the classified free actions).
FoldedDatum fold(const FoldingAction& action);

// Permutation matrix of an automorphism acting on the unfolded Cartan space.
IMat permutation_matrix(const std::vector<int>& perm);

// Element ids of W = Whati^G, the subgroup fixed under conjugation by the
// induced action of every group element.
std::vector<int> invariant_subgroup(const WeylGroup& w_hat, const FoldingAction& action);

// Longest element of the parabolic generated by the orbit's nodes. Verifies
// it preserves the fixed space and restricts to the reflection in beta_j;
// a failure is a consistency error.
GroupElement w0_of_orbit(const Orbit& orbit, const WeylGroup& w_hat, const FoldingAction& action);

// True iff Whati' \cap W equals the parabolic of W generated by the w0_j for
// j in folded_subset (0-based orbit indices), compared element for element.
bool check_parabolic_intersection(const FoldingAction& action, const std::vector<int>& folded_subset,
                                  const WeylGroup& w_hat);

}  // namespace weylfold
