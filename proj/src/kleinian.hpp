#pragma once

#include <cstdint>
#include <vector>

#include "dynkin.hpp"
#include "weyl.hpp"

namespace weylfold {

// A Kleinian singularity of ADE type together with the node subset whose
// projective lines are contracted by the partial resolution.
struct KleinianPartial {
    DynkinType type;
    std::vector<int> contracted;  // node ids, 1-based, sorted unique
};

KleinianPartial make_kleinian(const DynkinType& t, std::vector<int> contracted);

struct SingularPointDatum {
    std::vector<int> nodes;  // connected component of the contracted subgraph
    DynkinType type;
    int rank = 0;
};

// Singular points of the partial resolution, one per connected component of
// the contracted subdiagram, each again Kleinian of the component's type.
std::vector<SingularPointDatum> singular_points(const KleinianPartial& kp);

struct FiberCohomology {
    int b0 = 1;
    int b2 = 0;
};

enum class FiberLevel { full, partial };

// Betti numbers of the central fiber: the full fiber is the tree of
// projective lines shaped like the diagram; the partial fiber is its image,
// which collapses exactly the contracted curves.
FiberCohomology fiber_cohomology(const KleinianPartial& kp, FiberLevel level);

// H^*(partial fiber) vs W_{S'}-invariants of H^*(full fiber): b2 of the
// partial fiber must equal the fixed-space dimension of the parabolic
// generated by the contracted nodes.
bool invariant_fiber_check(const KleinianPartial& kp);

struct DeformationDims {
    int total = 0;               // rank of the type
    int locally_trivial = 0;     // number of non-contracted nodes
    std::vector<int> local;      // one entry per singular point
};

DeformationDims deformation_dims(const KleinianPartial& kp);

// Basis of the span of the contracted simple roots; checks that it is
// complementary to the fixed space of W_{S'}.
std::vector<QVec> pushforward_kernel(const KleinianPartial& kp);

struct TowerReport {
    unsigned long long subgroup_degree = 0;  // |W_{S'}|
    unsigned long long group_degree = 0;     // |W|
    int samples = 0;
    bool consistent = false;
};

// Models h -> h/W_{S'} -> h/W on random generic rational points: generic
// fibers have |W_{S'}| and |W| points and the two quotient maps commute.
TowerReport quotient_tower(const KleinianPartial& kp, int samples, std::uint64_t seed,
                           unsigned long long budget = kDefaultOrderBudget);

// dim End(Spr') = number of top-dimensional components of the Steinberg-type
// fiber product: the diagonal plus one component per ordered pair of curves
// contracted to the same singular point.
long long end_spr_dim(const KleinianPartial& kp);

}  // namespace weylfold
