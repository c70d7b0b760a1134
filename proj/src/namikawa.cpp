#include "namikawa.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace weylfold {

NamikawaWeylGroup namikawa_weyl(const SingularityData& data, unsigned long long budget) {
    std::set<std::string> ids;
    for (const auto& leaf : data.leaves)
        if (!ids.insert(leaf.id).second) throw invalid_input("duplicate leaf id '" + leaf.id + "'");

    NamikawaWeylGroup wx;
    int total = 0;
    for (const auto& leaf : data.leaves) {
        validate_type(leaf.slice);
        NamikawaFactor f;
        f.leaf_id = leaf.id;
        f.slice = leaf.slice;
        if (leaf.monodromy_generators.empty()) {
            f.folded_cartan = cartan_matrix(leaf.slice);
            f.folded_type = {leaf.slice};
        } else {
            if (!leaf.slice.simply_laced())
                throw invalid_input("leaf '" + leaf.id + "': monodromy requires a simply-laced slice");
            const FoldingAction action = make_action(leaf.slice, leaf.monodromy_generators);
            const FoldedDatum folded = fold(action);
            f.folded_cartan = folded.folded_cartan;
            f.folded_type = folded.folded_type;
        }
        f.offset = total;
        f.rank = f.folded_cartan.n;
        total += f.rank;
        wx.factors.push_back(std::move(f));
    }

    IMat c(total);
    for (int i = 0; i < total; ++i) c.at(i, i) = 2;
    for (const auto& f : wx.factors)
        for (int i = 0; i < f.rank; ++i)
            for (int j = 0; j < f.rank; ++j) c.at(f.offset + i, f.offset + j) = f.folded_cartan.at(i, j);
    wx.cartan = c;
    wx.group = generate(c, budget);
    for (const auto& f : wx.factors)
        for (int i = 0; i < f.rank; ++i)
            wx.generator_tags.push_back(f.leaf_id + ":" + std::to_string(i + 1));
    return wx;
}

NamikawaWeylGroup namikawa_weyl_abstract(const DynkinType& t, unsigned long long budget) {
    validate_type(t);
    NamikawaWeylGroup wx;
    NamikawaFactor f;
    f.leaf_id = "";
    f.slice = t;
    f.folded_cartan = cartan_matrix(t);
    f.folded_type = {t};
    f.offset = 0;
    f.rank = t.rank;
    wx.factors.push_back(std::move(f));
    wx.cartan = cartan_matrix(t);
    wx.group = generate(wx.cartan, budget);
    for (int i = 0; i < t.rank; ++i) wx.generator_tags.push_back(std::to_string(i + 1));
    return wx;
}

int generator_index(const NamikawaWeylGroup& wx, const std::string& tag) {
    for (size_t i = 0; i < wx.generator_tags.size(); ++i)
        if (wx.generator_tags[i] == tag) return static_cast<int>(i);
    throw invalid_input("unknown generator '" + tag + "'");
}

PartialResolutionSpec spec_from_tags(const NamikawaWeylGroup& wx,
                                     const std::vector<std::string>& tags) {
    PartialResolutionSpec spec;
    for (const auto& tag : tags) spec.contracted.push_back(generator_index(wx, tag));
    std::sort(spec.contracted.begin(), spec.contracted.end());
    spec.contracted.erase(std::unique(spec.contracted.begin(), spec.contracted.end()),
                          spec.contracted.end());
    return spec;
}

ParabolicSubgroup partial_weyl(const NamikawaWeylGroup& wx, const PartialResolutionSpec& spec) {
    for (int k : spec.contracted)
        if (k < 0 || k >= static_cast<int>(wx.generator_tags.size()))
            throw invalid_input("unknown generator index " + std::to_string(k + 1));
    return parabolic(wx.group, spec.contracted);
}

std::vector<PsiEntry> psi_image(const NamikawaWeylGroup& wx) {
    const int g = static_cast<int>(wx.generator_tags.size());
    if (g > 16) throw budget_exceeded("too many generators for subset enumeration");
    std::vector<PsiEntry> out;
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
        PsiEntry e;
        for (int k = 0; k < g; ++k)
            if (mask & (1u << k)) e.spec.contracted.push_back(k);
        e.order = partial_weyl(wx, e.spec).elements.size();
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<PsiEntry> nilpotent_cone_partials(const DynkinType& t, unsigned long long budget) {
    return psi_image(namikawa_weyl_abstract(t, budget));
}

}  // namespace weylfold
