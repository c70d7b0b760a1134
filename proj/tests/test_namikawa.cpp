#include <doctest.h>

#include <set>

#include "namikawa.hpp"

using namespace weylfold;

namespace {

SingularityData one_leaf(const char* slice, std::vector<std::vector<int>> gens = {}) {
    SingularityData d;
    d.leaves.push_back({"L1", parse_type(slice), std::move(gens)});
    return d;
}

}  // namespace

TEST_CASE("single leaf without monodromy is the slice Weyl group") {
    const NamikawaWeylGroup wx = namikawa_weyl(one_leaf("A2"));
    CHECK(wx.group.order() == 6);
    CHECK(wx.generator_tags == std::vector<std::string>{"L1:1", "L1:2"});
}

TEST_CASE("A4 leaf with flip monodromy folds to W(C2)") {
    const NamikawaWeylGroup wx = namikawa_weyl(one_leaf("A4", {{4, 3, 2, 1}}));
    CHECK(wx.group.order() == 8);
    CHECK(wx.generator_tags.size() == 2);
    REQUIRE(wx.factors.size() == 1);
    CHECK(wx.factors[0].folded_type[0] == DynkinType{Family::C, 2});
}

TEST_CASE("two-leaf product A1 x (D4 fold)") {
    SingularityData d;
    d.leaves.push_back({"L1", parse_type("A1"), {}});
    d.leaves.push_back({"L2", parse_type("D4"), {{3, 2, 4, 1}}});
    const NamikawaWeylGroup wx = namikawa_weyl(d);
    CHECK(wx.group.order() == 24);  // 2 x 12
    CHECK(wx.generator_tags == std::vector<std::string>{"L1:1", "L2:1", "L2:2"});
}

TEST_CASE("duplicate leaf ids are rejected") {
    SingularityData d;
    d.leaves.push_back({"L1", parse_type("A1"), {}});
    d.leaves.push_back({"L1", parse_type("A2"), {}});
    CHECK_THROWS_AS(namikawa_weyl(d), invalid_input);
}

TEST_CASE("monodromy on a non-simply-laced slice is rejected") {
    CHECK_THROWS_AS(namikawa_weyl(one_leaf("C2", {{2, 1}})), invalid_input);
}

TEST_CASE("generator count is invariant under pre-folding a leaf") {
    const NamikawaWeylGroup folded = namikawa_weyl(one_leaf("A4", {{4, 3, 2, 1}}));
    // Replace the folded leaf by its folded type with trivial monodromy.
    const NamikawaWeylGroup direct = namikawa_weyl(one_leaf("C2"));
    CHECK(folded.generator_tags.size() == direct.generator_tags.size());
    CHECK(folded.group.order() == direct.group.order());
}

TEST_CASE("partial_weyl on generator subsets") {
    const NamikawaWeylGroup wx = namikawa_weyl(one_leaf("A4", {{4, 3, 2, 1}}));
    CHECK(partial_weyl(wx, {}).elements.size() == 1);
    CHECK(partial_weyl(wx, {{0, 1}}).elements.size() == wx.group.order());
    CHECK(partial_weyl(wx, {{0}}).elements.size() == 2);
    CHECK_THROWS_AS(partial_weyl(wx, {{9}}), invalid_input);

    CHECK(spec_from_tags(wx, {"L1:1"}).contracted == std::vector<int>{0});
    CHECK_THROWS_AS(spec_from_tags(wx, {"L9:1"}), invalid_input);
}

TEST_CASE("partial_weyl is monotone in the contracted set") {
    SingularityData d;
    d.leaves.push_back({"L1", parse_type("A2"), {}});
    d.leaves.push_back({"L2", parse_type("A1"), {}});
    const NamikawaWeylGroup wx = namikawa_weyl(d);
    const int g = static_cast<int>(wx.generator_tags.size());
    for (unsigned small = 0; small < (1u << g); ++small)
        for (unsigned big = 0; big < (1u << g); ++big) {
            if ((small & big) != small) continue;
            PartialResolutionSpec s1, s2;
            for (int k = 0; k < g; ++k) {
                if (small & (1u << k)) s1.contracted.push_back(k);
                if (big & (1u << k)) s2.contracted.push_back(k);
            }
            const auto e1 = partial_weyl(wx, s1).elements;
            const auto e2 = partial_weyl(wx, s2).elements;
            CHECK(std::includes(e2.begin(), e2.end(), e1.begin(), e1.end()));
        }
}

TEST_CASE("psi image enumerates all generator subsets") {
    const NamikawaWeylGroup wx = namikawa_weyl(one_leaf("C2"));
    const auto entries = psi_image(wx);
    REQUIRE(entries.size() == 4);
    std::multiset<unsigned long long> orders;
    for (const auto& e : entries) orders.insert(e.order);
    CHECK(orders == std::multiset<unsigned long long>{1, 2, 2, 8});
}

TEST_CASE("psi image with no generators") {
    SingularityData empty;
    const NamikawaWeylGroup wx = namikawa_weyl(empty);
    const auto entries = psi_image(wx);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].order == 1);
}

TEST_CASE("nilpotent cone partial resolutions") {
    CHECK(nilpotent_cone_partials(parse_type("A1")).size() == 2);
    CHECK(nilpotent_cone_partials(parse_type("A3")).size() == 8);
    const auto a2 = nilpotent_cone_partials(parse_type("A2"));
    REQUIRE(a2.size() == 4);
    CHECK(a2[0].order == 1);                 // Springer resolution
    CHECK(a2[1].order == 2);                 // T*(G/P) for a minimal parabolic
    CHECK(a2[2].order == 2);                 // the other minimal parabolic
    CHECK(a2[3].order == 6);                 // the cone itself
}
