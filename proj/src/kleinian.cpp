#include "kleinian.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "rng.hpp"

namespace weylfold {

KleinianPartial make_kleinian(const DynkinType& t, std::vector<int> contracted) {
    validate_type(t);
    if (!t.ade()) throw invalid_input("Kleinian type must be ADE, got " + t.str());
    std::sort(contracted.begin(), contracted.end());
    contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());
    for (int v : contracted)
        if (v < 1 || v > t.rank) throw invalid_input("contracted node " + std::to_string(v) + " out of range");
    return {t, std::move(contracted)};
}

std::vector<SingularPointDatum> singular_points(const KleinianPartial& kp) {
    const DynkinDiagram d = diagram(kp.type);
    const IMat c = cartan_matrix(kp.type);
    std::set<int> left(kp.contracted.begin(), kp.contracted.end());
    std::vector<SingularPointDatum> out;
    while (!left.empty()) {
        std::vector<int> comp{*left.begin()};
        left.erase(left.begin());
        for (size_t head = 0; head < comp.size(); ++head) {
            for (auto it = left.begin(); it != left.end();) {
                if (d.adjacent(comp[head], *it)) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        // Classify the induced subdiagram (a subdiagram of an ADE diagram is ADE).
        const int m = static_cast<int>(comp.size());
        IMat sub(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sub.at(i, j) = c.at(comp[i] - 1, comp[j] - 1);
        const auto blocks = classify(sub);
        if (blocks.size() != 1) throw consistency_error("component classified as decomposable");
        out.push_back({comp, blocks[0].type, m});
    }
    std::sort(out.begin(), out.end(), [](const SingularPointDatum& a, const SingularPointDatum& b) {
        return a.nodes < b.nodes;
    });
    return out;
}

FiberCohomology fiber_cohomology(const KleinianPartial& kp, FiberLevel level) {
    FiberCohomology f;
    f.b0 = 1;  // the diagram is connected, and collapsing curves keeps it so
    f.b2 = (level == FiberLevel::full)
               ? kp.type.rank
               : kp.type.rank - static_cast<int>(kp.contracted.size());
    return f;
}

bool invariant_fiber_check(const KleinianPartial& kp) {
    const IMat c = cartan_matrix(kp.type);
    std::vector<IMat> gens;
    for (int node : kp.contracted) gens.push_back(simple_reflection(c, node - 1));
    const int fixed = fixed_space_dim(gens, kp.type.rank);
    const FiberCohomology partial = fiber_cohomology(kp, FiberLevel::partial);
    return partial.b2 == fixed && partial.b0 == 1;
}

DeformationDims deformation_dims(const KleinianPartial& kp) {
    DeformationDims d;
    d.total = kp.type.rank;
    d.locally_trivial = kp.type.rank - static_cast<int>(kp.contracted.size());
    int sum = 0;
    for (const auto& p : singular_points(kp)) {
        d.local.push_back(p.rank);
        sum += p.rank;
    }
    if (d.total != d.locally_trivial + sum)
        throw consistency_error("deformation dimension identity failed");
    return d;
}

std::vector<QVec> pushforward_kernel(const KleinianPartial& kp) {
    const int n = kp.type.rank;
    std::vector<QVec> basis;
    for (int node : kp.contracted) {
        QVec v(n, Rat(0));
        v[node - 1] = 1;
        basis.push_back(std::move(v));
    }
    // The kernel and the W_{S'}-fixed space are complementary in h.
    QMat m(static_cast<int>(basis.size()), n);
    for (size_t r = 0; r < basis.size(); ++r)
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(r), j) = basis[r][j];
    const int kdim = rank(std::move(m));
    const IMat c = cartan_matrix(kp.type);
    std::vector<IMat> gens;
    for (int node : kp.contracted) gens.push_back(simple_reflection(c, node - 1));
    if (kdim + fixed_space_dim(gens, n) != n)
        throw consistency_error("kernel and fixed space are not complementary");
    return basis;
}

TowerReport quotient_tower(const KleinianPartial& kp, int samples, std::uint64_t seed,
                           unsigned long long budget) {
    const IMat c = cartan_matrix(kp.type);
    const WeylGroup w = generate(c, budget);
    std::vector<int> J;
    for (int node : kp.contracted) J.push_back(node - 1);
    const ParabolicSubgroup sub = parabolic(w, J);
    const std::vector<IVec> rts = roots(c);
    const QMat gram = gram_matrix(c);
    const int n = kp.type.rank;

    std::vector<int> all(w.elements.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

    Rng rng(seed);
    TowerReport rep;
    rep.samples = samples;
    rep.subgroup_degree = sub.elements.size();
    rep.group_degree = w.order();
    rep.consistent = true;
    for (int s = 0; s < samples; ++s) {
        // Generic point: off every reflection hyperplane, i.e. not orthogonal
        // to any root, so the stabilizer is trivial.
        QVec v(n);
        bool generic = false;
        for (int tries = 0; tries < 500 && !generic; ++tries) {
            for (int i = 0; i < n; ++i) v[i] = Rat(rng.uniform(-9, 9));
            generic = true;
            for (const IVec& r : rts) {
                QVec rq(n);
                for (int i = 0; i < n; ++i) rq[i] = Rat(r[i]);
                if (bilinear(v, rq, gram) == 0) {
                    generic = false;
                    break;
                }
            }
        }
        if (!generic) throw consistency_error("failed to sample a generic point");

        const auto sub_orbit = orbit(w, sub.elements, v);
        const auto full_orbit = orbit(w, all, v);
        if (sub_orbit.size() != rep.subgroup_degree || full_orbit.size() != rep.group_degree)
            rep.consistent = false;
        // The two quotients commute: taking the refined representative first
        // does not change the coarse representative.
        const QVec refined = canonical_orbit_rep(w, sub.elements, v);
        if (canonical_orbit_rep(w, all, v) != canonical_orbit_rep(w, all, refined))
            rep.consistent = false;
    }
    return rep;
}

long long end_spr_dim(const KleinianPartial& kp) {
    // Enumerate components: the diagonal, then C_j x C_k for every ordered
    // pair of curves contracted to the same singular point.
    std::vector<std::pair<int, int>> offdiagonal;
    for (const auto& p : singular_points(kp))
        for (int a : p.nodes)
            for (int b : p.nodes) offdiagonal.emplace_back(a, b);
    return 1 + static_cast<long long>(offdiagonal.size());
}

}  // namespace weylfold
