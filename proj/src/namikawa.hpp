#pragma once

#include <string>
#include <vector>

#include "folding.hpp"
#include "weyl.hpp"

namespace weylfold {

// Codimension-two leaf datum: Kleinian slice type plus the monodromy action
// on its diagram. A non-simply-laced slice is accepted only with trivial
// monodromy (it then contributes its own Weyl group unfolded).
struct LeafDatum {
    std::string id;
    DynkinType slice;
    std::vector<std::vector<int>> monodromy_generators;
};

struct SingularityData {
    std::vector<LeafDatum> leaves;  // ids must be unique
};

struct NamikawaFactor {
    std::string leaf_id;
    DynkinType slice;
    std::vector<DynkinType> folded_type;
    IMat folded_cartan;
    int offset = 0;  // first generator index of this factor in the product
    int rank = 0;
};

// The Namikawa Weyl group W_X = prod W_i realized as the Weyl group of the
// block-diagonal folded Cartan matrix. generator_tags[k] = "<leaf>:<node>"
// names the k-th simple generator, which is simultaneously the k-th
// generator of Ess(Y/X) under the bijection Phi.
struct NamikawaWeylGroup {
    std::vector<NamikawaFactor> factors;
    IMat cartan;
    WeylGroup group;
    std::vector<std::string> generator_tags;
};

NamikawaWeylGroup namikawa_weyl(const SingularityData& data,
                                unsigned long long budget = kDefaultOrderBudget);

// Abstract variant used for the nilpotent cone, where W_X is the full Weyl
// group of the Lie algebra; tags are plain node numbers.
NamikawaWeylGroup namikawa_weyl_abstract(const DynkinType& t,
                                         unsigned long long budget = kDefaultOrderBudget);

// A partial resolution is its contracted set of essential generators.
struct PartialResolutionSpec {
    std::vector<int> contracted;  // 0-based generator indices, sorted unique
};

int generator_index(const NamikawaWeylGroup& wx, const std::string& tag);
PartialResolutionSpec spec_from_tags(const NamikawaWeylGroup& wx,
                                     const std::vector<std::string>& tags);

ParabolicSubgroup partial_weyl(const NamikawaWeylGroup& wx, const PartialResolutionSpec& spec);

struct PsiEntry {
    PartialResolutionSpec spec;
    unsigned long long order = 0;
};

// All 2^g standard parabolics, ordered by subset bitmask; the image of Psi.
std::vector<PsiEntry> psi_image(const NamikawaWeylGroup& wx);

// All partial resolutions of the nilpotent cone of the given type, one per
// generator subset, each labeled with the order of its parabolic.
std::vector<PsiEntry> nilpotent_cone_partials(const DynkinType& t,
                                              unsigned long long budget = kDefaultOrderBudget);

}  // namespace weylfold
