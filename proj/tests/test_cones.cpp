#include <doctest.h>

#include <algorithm>
#include <set>

#include "cones.hpp"
#include "rng.hpp"

using namespace weylfold;

namespace {

QVec qv(std::vector<long> entries) {
    QVec v;
    for (long e : entries) v.emplace_back(e);
    return v;
}

std::set<QVec> ray_set(const std::vector<QVec>& rays) { return {rays.begin(), rays.end()}; }

MoriFanData sl4_fan() {
    MoriFanData fan;
    fan.dim = 2;
    fan.hyperplanes.push_back({qv({0, 1}), "L1:1"});
    fan.hyperplanes.push_back({qv({3, -2}), ""});
    fan.hyperplanes.push_back({qv({3, 2}), ""});
    fan.chambers.push_back({{qv({-1, 0}), qv({-2, 3})}});
    fan.chambers.push_back({{qv({-2, 3}), qv({2, 3})}});
    fan.chambers.push_back({{qv({2, 3}), qv({1, 0})}});
    QMat refl(2, 2);
    refl.at(0, 0) = 1;
    refl.at(1, 1) = -1;
    fan.weyl_action.push_back(refl);
    return fan;
}

NamikawaWeylGroup one_a1_leaf() {
    SingularityData d;
    d.leaves.push_back({"L1", parse_type("A1"), {}});
    return namikawa_weyl(d);
}

MoriFanData quadrant_fan() {
    MoriFanData fan;
    fan.dim = 2;
    fan.hyperplanes.push_back({qv({1, 0}), "L1:1"});
    fan.hyperplanes.push_back({qv({0, 1}), "L2:1"});
    fan.chambers.push_back({{qv({1, 0}), qv({0, 1})}});
    return fan;
}

}  // namespace

TEST_CASE("canonical ray clears denominators and keeps the sign") {
    CHECK(canonical_ray({Rat(1, 2), Rat(3, 4)}) == qv({2, 3}));
    CHECK(canonical_ray({Rat(-2), Rat(3)}) == qv({-2, 3}));
    CHECK(canonical_ray({Rat(4), Rat(-6)}) == qv({2, -3}));
    CHECK_THROWS_AS(canonical_ray({Rat(0), Rat(0)}), invalid_input);
}

TEST_CASE("dual cone: quadrant is self-dual") {
    const auto dual = dual_rays(2, {qv({1, 0}), qv({0, 1})});
    CHECK(ray_set(dual) == ray_set({qv({1, 0}), qv({0, 1})}));
}

TEST_CASE("dual cone: half-space gives a ray and back") {
    const auto half = std::vector<QVec>{qv({1, 0}), qv({0, 1}), qv({0, -1})};
    const auto dual = dual_rays(2, half);
    CHECK(ray_set(dual) == ray_set({qv({1, 0})}));
    // Dual of the ray recovers the half-space generators.
    CHECK(ray_set(dual_rays(2, dual)) == ray_set(half));
}

TEST_CASE("dual of the sl4 movable cone is the essential ray") {
    const auto dual =
        dual_rays(2, {qv({1, 0}), qv({-1, 0}), qv({2, 3}), qv({-2, 3})});
    CHECK(ray_set(dual) == ray_set({qv({0, 1})}));
}

TEST_CASE("dual of the zero cone is everything") {
    const auto dual = dual_rays(2, {});
    CHECK(ray_set(dual) == ray_set({qv({1, 0}), qv({-1, 0}), qv({0, 1}), qv({0, -1})}));
}

TEST_CASE("double dual returns the cone on random desk-scale inputs") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = static_cast<int>(rng.uniform(1, 3));
        std::vector<QVec> rays;
        const int count = static_cast<int>(rng.uniform(1, 4));
        for (int i = 0; i < count; ++i) {
            QVec r(d);
            bool zero = true;
            for (int j = 0; j < d; ++j) {
                r[j] = Rat(rng.uniform(-3, 3));
                if (r[j] != 0) zero = false;
            }
            if (zero) r[0] = 1;
            rays.push_back(std::move(r));
        }
        const auto minimal = extreme_rays(d, rays);
        CHECK(ray_set(extreme_rays(d, minimal)) == ray_set(minimal));
        // Every original ray lies in the double dual.
        const auto dual = dual_rays(d, rays);
        for (const QVec& r : rays) CHECK(cone_contains(dual, r));
        // Every dual ray pairs non-negatively with every input ray.
        for (const QVec& y : dual)
            for (const QVec& r : rays) CHECK(rat_sign(dot(y, r)) >= 0);
    }
}

TEST_CASE("face lattice of the quadrant") {
    const auto faces = face_lattice(quadrant_fan());
    REQUIRE(faces.size() == 4);
    CHECK(faces[0].dim == 0);  // apex
    CHECK(faces[0].rays.empty());
    CHECK(faces[1].dim == 1);
    CHECK(faces[2].dim == 1);
    CHECK(faces[3].dim == 2);
    // The apex lies on both hyperplanes, the chamber on none.
    CHECK(faces[0].active == std::vector<int>{0, 1});
    CHECK(faces[3].active.empty());
}

TEST_CASE("face lattice in dimension one") {
    MoriFanData fan;
    fan.dim = 1;
    fan.chambers.push_back({{qv({1})}});
    const auto faces = face_lattice(fan);
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].dim == 0);
    CHECK(faces[1].dim == 1);
}

TEST_CASE("sl4 fan has eight faces classified 3 + 5") {
    const MoriFanData fan = sl4_fan();
    const NamikawaWeylGroup wx = one_a1_leaf();
    const auto faces = face_lattice(fan);
    REQUIRE(faces.size() == 8);

    int order2 = 0, trivial = 0;
    for (const Face& f : faces) {
        const auto sub = face_weyl(f, fan, wx);
        if (sub.elements.size() == 2) ++order2;
        if (sub.elements.size() == 1) ++trivial;
    }
    CHECK(order2 == 3);
    CHECK(trivial == 5);

    const auto psi = psi_face_map(faces, fan, wx);
    CHECK(psi.surjective);
    CHECK_FALSE(psi.injective);
    CHECK_FALSE(psi.bijective);
    CHECK(psi.chamber_count == 3);
}

TEST_CASE("face sample points lie on exactly the active hyperplanes") {
    const MoriFanData fan = sl4_fan();
    for (const Face& f : face_lattice(fan)) {
        for (int h = 0; h < static_cast<int>(fan.hyperplanes.size()); ++h) {
            const bool active = std::find(f.active.begin(), f.active.end(), h) != f.active.end();
            CHECK((dot(fan.hyperplanes[h].normal, f.sample) == 0) == active);
        }
    }
}

TEST_CASE("face lattice is graded") {
    for (const MoriFanData& fan : {sl4_fan(), quadrant_fan()}) {
        const auto faces = face_lattice(fan);
        int apexes = 0;
        for (const Face& f : faces)
            if (f.dim == 0) ++apexes;
        CHECK(apexes == 1);
        for (const Face& f : faces) {
            if (f.dim == 0) continue;
            bool has_smaller = false;
            for (const Face& g : faces) {
                if (g.dim != f.dim - 1) continue;
                bool contained = true;
                for (const QVec& r : g.rays)
                    if (std::find(f.rays.begin(), f.rays.end(), r) == f.rays.end()) contained = false;
                if (contained) has_smaller = true;
            }
            CHECK(has_smaller);
        }
    }
}

TEST_CASE("face_weyl is order-reversing under face inclusion") {
    const MoriFanData fan = sl4_fan();
    const NamikawaWeylGroup wx = one_a1_leaf();
    const auto faces = face_lattice(fan);
    for (const Face& small : faces)
        for (const Face& big : faces) {
            bool contained = true;
            for (const QVec& r : small.rays)
                if (std::find(big.rays.begin(), big.rays.end(), r) == big.rays.end())
                    contained = false;
            if (!contained) continue;
            const auto inner = face_weyl(big, fan, wx).elements;
            const auto outer = face_weyl(small, fan, wx).elements;
            CHECK(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
        }
}

TEST_CASE("single tagged chamber gives a bijection onto parabolics") {
    const MoriFanData fan = quadrant_fan();
    SingularityData d;
    d.leaves.push_back({"L1", parse_type("A1"), {}});
    d.leaves.push_back({"L2", parse_type("A1"), {}});
    const NamikawaWeylGroup wx = namikawa_weyl(d);
    const auto faces = face_lattice(fan);
    const auto psi = psi_face_map(faces, fan, wx);
    CHECK(psi.bijective);
    CHECK(psi.chamber_count == 1);
}

TEST_CASE("untagged interior wall maps every face to the trivial group") {
    MoriFanData fan;
    fan.dim = 2;
    fan.hyperplanes.push_back({qv({1, 0}), ""});  // interior wall x = 0
    fan.chambers.push_back({{qv({0, 1}), qv({1, 0})}});
    fan.chambers.push_back({{qv({0, 1}), qv({-1, 0})}});
    SingularityData empty;
    const NamikawaWeylGroup wx = namikawa_weyl(empty);
    const auto faces = face_lattice(fan);
    const auto psi = psi_face_map(faces, fan, wx);
    for (const auto& gens : psi.face_generators) CHECK(gens.empty());
    CHECK(psi.surjective);
    CHECK_FALSE(psi.bijective);
}

TEST_CASE("single chamber with an untagged facet trips the chamber-count assertion") {
    // Genuine single-chamber data has every boundary facet on a tagged
    // hyperplane; a missing tag breaks the bijectivity/chamber equivalence
    // and must surface as a consistency failure, not as a report.
    MoriFanData fan;
    fan.dim = 2;
    fan.hyperplanes.push_back({qv({1, 0}), "L1:1"});
    fan.chambers.push_back({{qv({1, 0}), qv({0, 1})}});
    SingularityData d;
    d.leaves.push_back({"L1", parse_type("A1"), {}});
    const NamikawaWeylGroup wx = namikawa_weyl(d);
    const auto faces = face_lattice(fan);
    CHECK_THROWS_AS(psi_face_map(faces, fan, wx), consistency_error);
}

TEST_CASE("degenerate chambers and overlaps are rejected") {
    MoriFanData fan;
    fan.dim = 2;
    fan.chambers.push_back({{qv({1, 0})}});  // not full-dimensional
    CHECK_THROWS_AS(face_lattice(fan), invalid_input);

    MoriFanData overlap;
    overlap.dim = 2;
    overlap.chambers.push_back({{qv({1, 0}), qv({0, 1})}});
    overlap.chambers.push_back({{qv({1, 1}), qv({1, -1})}});
    CHECK_THROWS_AS(face_lattice(overlap), invalid_input);
}

TEST_CASE("fundamental domain check on the sl4 fan") {
    CHECK(fundamental_domain_check(sl4_fan(), 100, 0));
}

TEST_CASE("fundamental domain fails for a proper cone with trivial action") {
    MoriFanData fan = quadrant_fan();
    fan.weyl_action.push_back(QMat::identity(2));
    CHECK_FALSE(fundamental_domain_check(fan, 50, 0));
}

TEST_CASE("sign flips make the quadrant a fundamental domain") {
    MoriFanData fan = quadrant_fan();
    QMat flip_x = QMat::identity(2), flip_y = QMat::identity(2);
    flip_x.at(0, 0) = -1;
    flip_y.at(1, 1) = -1;
    fan.weyl_action.push_back(flip_x);
    fan.weyl_action.push_back(flip_y);
    CHECK(fundamental_domain_check(fan, 100, 0));
}

TEST_CASE("missing weyl action is an input error") {
    CHECK_THROWS_AS(fundamental_domain_check(quadrant_fan(), 10, 0), invalid_input);
}
