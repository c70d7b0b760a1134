#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "namikawa.hpp"

namespace weylfold {

// Rays are canonicalized by positive scaling only: coprime integer
// coordinates with the sign preserved, so opposite boundary rays stay
// distinct.
QVec canonical_ray(const QVec& v);

// Generators of the dual cone {y : <y,r> >= 0 for all rays r} under the
// standard pairing. Handles lower-dimensional input: the orthogonal
// complement of the span contributes +-basis generators. Brute force over
// tight subsets; desk scale (d <= 4, few rays).
std::vector<QVec> dual_rays(int d, const std::vector<QVec>& rays);

// Minimal canonical generating set of cone(rays), via the double dual.
std::vector<QVec> extreme_rays(int d, const std::vector<QVec>& rays);

bool cone_contains(const std::vector<QVec>& dual, const QVec& p);

struct HyperplaneSpec {
    QVec normal;
    std::string tag;  // generator tag "<leaf>:<node>", empty when untagged
};

struct Chamber {
    std::vector<QVec> rays;
};

struct MoriFanData {
    int dim = 0;
    std::vector<HyperplaneSpec> hyperplanes;
    std::vector<Chamber> chambers;
    std::vector<QMat> weyl_action;  // optional generators of the W_X action
};

struct Face {
    std::vector<QVec> rays;     // canonical, sorted
    int dim = 0;                // rank of the ray set; 0 is the apex
    std::vector<int> active;    // input hyperplane indices containing the face
    std::vector<int> chambers;  // chambers having this face
    QVec sample;                // relative-interior point
};

// All faces of all chambers, deduplicated across chambers, including the
// apex and the chambers themselves; sorted by (dim, rays). Chamber facets
// not on a listed hyperplane are derived from the chamber geometry.
std::vector<Face> face_lattice(const MoriFanData& fan);

// Generator indices of the tagged hyperplanes containing the face.
std::vector<int> face_generator_indices(const Face& face, const MoriFanData& fan,
                                        const NamikawaWeylGroup& wx);

ParabolicSubgroup face_weyl(const Face& face, const MoriFanData& fan, const NamikawaWeylGroup& wx);

struct PsiFaceReport {
    std::vector<std::vector<int>> face_generators;  // aligned with the face list
    bool surjective = false;
    bool injective = false;
    bool bijective = false;
    int chamber_count = 0;
};

// Classifies every face and checks Psi: the map is always expected to be
// surjective onto generator subsets, and bijective exactly when the fan has
// a single chamber; a violation of that equivalence is a consistency error.
PsiFaceReport psi_face_map(const std::vector<Face>& faces, const MoriFanData& fan,
                           const NamikawaWeylGroup& wx);

// For `samples` seeded generic rational points, checks that the orbit under
// the group generated by weyl_action meets the union of chambers in exactly
// one point.
bool fundamental_domain_check(const MoriFanData& fan, int samples, std::uint64_t seed);

}  // namespace weylfold
