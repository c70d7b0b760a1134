#include "selftest.hpp"

#include <functional>
#include <set>

#include "cones.hpp"
#include "errors.hpp"
#include "folding.hpp"
#include "hecke.hpp"
#include "kleinian.hpp"
#include "namikawa.hpp"

namespace weylfold {

using nlohmann::json;

namespace {

std::vector<int> flip_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = n - i;
    return p;
}

std::vector<int> d_swap_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::swap(p[n - 2], p[n - 1]);
    return p;
}

std::vector<int> d4_triality_perm() { return {3, 2, 4, 1}; }

std::vector<int> e6_flip_perm() { return {6, 2, 5, 4, 3, 1}; }

struct NamedAction {
    std::string name;
    DynkinType type;
    std::vector<int> generator;
};

// The four-family classification of diagram actions, up to the given rank.
std::vector<NamedAction> classified_actions(int max_rank) {
    std::vector<NamedAction> out;
    for (int n = 2; n <= max_rank; ++n)
        out.push_back({"A" + std::to_string(n) + "/Z2", {Family::A, n}, flip_perm(n)});
    for (int n = 3; n <= max_rank; ++n)
        out.push_back({"D" + std::to_string(n) + "/Z2", {Family::D, n}, d_swap_perm(n)});
    if (max_rank >= 4) out.push_back({"D4/Z3", {Family::D, 4}, d4_triality_perm()});
    if (max_rank >= 6) out.push_back({"E6/Z2", {Family::E, 6}, e6_flip_perm()});
    return out;
}

DynkinType expected_fold(const NamedAction& a) {
    if (a.type.family == Family::A) {
        const int m = (a.type.rank + 1) / 2;
        return m == 1 ? DynkinType{Family::A, 1} : DynkinType{Family::C, m};  // C1 = A1
    }
    if (a.type.family == Family::D && a.generator == d4_triality_perm() && a.type.rank == 4)
        return {Family::G, 2};
    if (a.type.family == Family::D) return {Family::B, a.type.rank - 1};
    return {Family::F, 4};
}

bool fold_matches(const FoldedDatum& folded, const DynkinType& expect) {
    if (folded.blocks.size() != 1) return false;
    if (!(folded.blocks[0].type == expect)) return false;
    const IMat target = cartan_matrix(expect);
    const auto& nodes = folded.blocks[0].nodes;
    for (int k = 0; k < target.n; ++k)
        for (int l = 0; l < target.n; ++l)
            if (folded.folded_cartan.at(nodes[k] - 1, nodes[l] - 1) != target.at(k, l)) return false;
    return true;
}

json criterion_folding_table() {
    int checked = 0;
    for (const NamedAction& a : classified_actions(8)) {
        const FoldedDatum folded = fold(make_action(a.type, {a.generator}));
        if (!fold_matches(folded, expected_fold(a)))
            return {{"pass", false}, {"detail", a.name + " folded wrong"}};
        ++checked;
    }
    return {{"pass", true}, {"detail", std::to_string(checked) + " foldings match the table"}};
}

json criterion_a4_example() {
    const FoldingAction action = make_action(DynkinType{Family::A, 4}, {flip_perm(4)});
    const FoldedDatum folded = fold(action);
    const QMat gram = gram_matrix(cartan_matrix(DynkinType{Family::A, 4}));
    const Rat b11 = bilinear(folded.betas[0], folded.betas[0], gram);
    const Rat b12 = bilinear(folded.betas[0], folded.betas[1], gram);
    const Rat b22 = bilinear(folded.betas[1], folded.betas[1], gram);
    const bool pass = b11 == 1 && b12 == -1 && b22 == 2;
    return {{"pass", pass},
            {"detail", "(" + rat_str(b11) + "," + rat_str(b12) + "," + rat_str(b22) + ")"}};
}

std::vector<NamedAction> bruteforce_actions() {
    return {{"A3/Z2", {Family::A, 3}, flip_perm(3)},
            {"A4/Z2", {Family::A, 4}, flip_perm(4)},
            {"D4/Z2", {Family::D, 4}, d_swap_perm(4)},
            {"D4/Z3", {Family::D, 4}, d4_triality_perm()}};
}

json criterion_folding_intersections(unsigned long long budget) {
    int checked = 0;
    for (const NamedAction& a : bruteforce_actions()) {
        const FoldingAction action = make_action(a.type, {a.generator});
        const WeylGroup w_hat = generate(cartan_matrix(a.type), budget);
        const int m = static_cast<int>(orbits(action).size());
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> subset;
            for (int j = 0; j < m; ++j)
                if (mask & (1u << j)) subset.push_back(j);
            if (!check_parabolic_intersection(action, subset, w_hat))
                return {{"pass", false}, {"detail", a.name + " subset failed"}};
            ++checked;
        }
    }
    return {{"pass", true}, {"detail", std::to_string(checked) + " subsets verified"}};
}

json criterion_steinberg(unsigned long long budget) {
    for (const NamedAction& a : bruteforce_actions()) {
        const FoldingAction action = make_action(a.type, {a.generator});
        const WeylGroup w_hat = generate(cartan_matrix(a.type), budget);
        const std::vector<int> invariant = invariant_subgroup(w_hat, action);
        std::vector<int> w0_ids;
        try {
            // w0_of_orbit raises if w0 fails to preserve the fixed space or to
            // restrict to the reflection in beta.
            for (const Orbit& o : orbits(action))
                w0_ids.push_back(w_hat.id_of(w0_of_orbit(o, w_hat, action).matrix));
        } catch (const consistency_error& e) {
            return {{"pass", false}, {"detail", a.name + ": " + e.what()}};
        }
        const std::set<int> inv_set(invariant.begin(), invariant.end());
        for (int id : w0_ids)
            if (!inv_set.count(id))
                return {{"pass", false}, {"detail", a.name + ": w0 not invariant"}};
        if (generated_subgroup(w_hat, w0_ids) != invariant)
            return {{"pass", false}, {"detail", a.name + ": w0s do not generate the invariants"}};
    }
    return {{"pass", true}, {"detail", "4 actions verified"}};
}

MoriFanData sl4_subregular_fan() {
    MoriFanData fan;
    fan.dim = 2;
    auto qv = [](long a, long b) { return QVec{Rat(a), Rat(b)}; };
    fan.hyperplanes.push_back({qv(0, 1), "L1:1"});
    fan.hyperplanes.push_back({qv(3, -2), ""});
    fan.hyperplanes.push_back({qv(3, 2), ""});
    fan.chambers.push_back({{qv(-1, 0), qv(-2, 3)}});
    fan.chambers.push_back({{qv(-2, 3), qv(2, 3)}});
    fan.chambers.push_back({{qv(2, 3), qv(1, 0)}});
    QMat refl(2, 2);
    refl.at(0, 0) = 1;
    refl.at(1, 1) = -1;
    fan.weyl_action.push_back(refl);
    return fan;
}

NamikawaWeylGroup sl4_wx(unsigned long long budget) {
    SingularityData data;
    data.leaves.push_back({"L1", {Family::A, 1}, {}});
    return namikawa_weyl(data, budget);
}

json criterion_sl4_fan(unsigned long long budget) {
    const MoriFanData fan = sl4_subregular_fan();
    const NamikawaWeylGroup wx = sl4_wx(budget);
    const std::vector<Face> faces = face_lattice(fan);
    if (faces.size() != 8)
        return {{"pass", false}, {"detail", "expected 8 faces, got " + std::to_string(faces.size())}};
    int order2 = 0, trivial = 0;
    for (const Face& f : faces) {
        const size_t ord = face_weyl(f, fan, wx).elements.size();
        if (ord == 2)
            ++order2;
        else if (ord == 1)
            ++trivial;
    }
    const PsiFaceReport psi = psi_face_map(faces, fan, wx);
    const bool pass = order2 == 3 && trivial == 5 && psi.surjective && !psi.bijective &&
                      psi.chamber_count == 3;
    return {{"pass", pass},
            {"detail", "faces=8 order2=" + std::to_string(order2) + " trivial=" +
                           std::to_string(trivial) + " surjective=" +
                           (psi.surjective ? "true" : "false") + " bijective=" +
                           (psi.bijective ? "true" : "false")}};
}

json criterion_single_chamber(unsigned long long budget) {
    for (int k = 1; k <= 4; ++k) {
        MoriFanData fan;
        fan.dim = k;
        Chamber ch;
        SingularityData data;
        for (int i = 0; i < k; ++i) {
            QVec e(k, Rat(0)), h(k, Rat(0));
            e[i] = 1;
            h[i] = 1;
            ch.rays.push_back(e);
            const std::string leaf = "L" + std::to_string(i + 1);
            fan.hyperplanes.push_back({h, leaf + ":1"});
            data.leaves.push_back({leaf, {Family::A, 1}, {}});
        }
        fan.chambers.push_back(ch);
        const NamikawaWeylGroup wx = namikawa_weyl(data, budget);
        const std::vector<Face> faces = face_lattice(fan);
        if (faces.size() != (1u << k))
            return {{"pass", false}, {"detail", "k=" + std::to_string(k) + ": wrong face count"}};
        const PsiFaceReport psi = psi_face_map(faces, fan, wx);
        if (!psi.bijective || psi.chamber_count != 1)
            return {{"pass", false}, {"detail", "k=" + std::to_string(k) + ": not bijective"}};
    }
    return {{"pass", true}, {"detail", "bijective for k=1..4"}};
}

std::vector<DynkinType> ade_types(int max_rank) {
    std::vector<DynkinType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= max_rank; ++n) out.push_back({Family::E, n});
    return out;
}

json criterion_kleinian_exhaustive() {
    int cases = 0;
    for (const DynkinType& t : ade_types(5)) {
        for (unsigned mask = 0; mask < (1u << t.rank); ++mask) {
            std::vector<int> contracted;
            for (int i = 0; i < t.rank; ++i)
                if (mask & (1u << i)) contracted.push_back(i + 1);
            const KleinianPartial kp = make_kleinian(t, contracted);
            if (!invariant_fiber_check(kp))
                return {{"pass", false}, {"detail", t.str() + ": fiber invariants failed"}};
            try {
                deformation_dims(kp);     // asserts total = lt + sum of locals
                pushforward_kernel(kp);   // asserts kernel + fixed space = h
            } catch (const consistency_error& e) {
                return {{"pass", false}, {"detail", t.str() + ": " + e.what()}};
            }
            ++cases;
        }
    }
    return {{"pass", true}, {"detail", std::to_string(cases) + " cases verified"}};
}

json criterion_tower(std::uint64_t seed, unsigned long long budget) {
    int cases = 0;
    for (const DynkinType& t : ade_types(4)) {
        for (unsigned mask = 0; mask < (1u << t.rank); ++mask) {
            std::vector<int> contracted;
            for (int i = 0; i < t.rank; ++i)
                if (mask & (1u << i)) contracted.push_back(i + 1);
            const TowerReport rep =
                quotient_tower(make_kleinian(t, contracted), 20, seed, budget);
            if (!rep.consistent)
                return {{"pass", false}, {"detail", t.str() + ": degrees off"}};
            ++cases;
        }
    }
    return {{"pass", true}, {"detail", std::to_string(cases) + " cases, 20 samples each"}};
}

std::vector<DynkinType> all_types(int max_rank) {
    std::vector<DynkinType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
    if (max_rank >= 4) out.push_back({Family::F, 4});
    if (max_rank >= 2) out.push_back({Family::G, 2});
    return out;
}

json criterion_end_hecke(unsigned long long budget) {
    const DynkinType a3{Family::A, 3};
    if (end_spr_dim(make_kleinian(a3, {1, 2, 3})) != 10)
        return {{"pass", false}, {"detail", "end_spr_dim(A3, all) != 10"}};
    if (end_spr_dim(make_kleinian(a3, {2})) != 2)
        return {{"pass", false}, {"detail", "end_spr_dim(A3,{2}) != 2"}};

    const WeylGroup wa2 = generate(cartan_matrix({Family::A, 2}), budget);
    if (build(wa2, parabolic(wa2, {0})).reps.size() != 2)
        return {{"pass", false}, {"detail", "dim H(W(A2),<s1>) != 2"}};
    const WeylGroup wc2 = generate(cartan_matrix({Family::C, 2}), budget);
    if (build(wc2, parabolic(wc2, {0})).reps.size() != 3)
        return {{"pass", false}, {"detail", "dim H(W(C2),<s1>) != 3"}};

    int checked = 0;
    for (const DynkinType& t : all_types(4)) {
        if (weyl_order(t) > 48) continue;
        const WeylGroup w = generate(cartan_matrix(t), budget);
        for (unsigned mask = 0; mask < (1u << t.rank); ++mask) {
            std::vector<int> J;
            for (int i = 0; i < t.rank; ++i)
                if (mask & (1u << i)) J.push_back(i);
            const HeckeAlgebra h = build(w, parabolic(w, J));
            if (!h.unit_ok || !associativity_check(h))
                return {{"pass", false}, {"detail", t.str() + ": associativity failed"}};
            ++checked;
        }
    }
    return {{"pass", true}, {"detail", std::to_string(checked) + " algebras associative"}};
}

json criterion_weyl_engine(unsigned long long budget) {
    for (const DynkinType& t : all_types(4)) {
        const IMat c = cartan_matrix(t);
        const WeylGroup w = generate(c, budget);
        if (w.order() != permutation_order_oracle(c, budget))
            return {{"pass", false}, {"detail", t.str() + ": permutation oracle disagrees"}};
        // Coxeter relations, matrix-exactly.
        for (int i = 0; i < t.rank; ++i)
            for (int j = 0; j < t.rank; ++j) {
                if (i == j) continue;
                const std::int64_t p = c.at(i, j) * c.at(j, i);
                const int m = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6;
                IMat prod = IMat::identity(t.rank);
                for (int rep = 0; rep < m; ++rep)
                    prod = imul(prod, imul(w.generators[i], w.generators[j]));
                if (!(prod == IMat::identity(t.rank)))
                    return {{"pass", false}, {"detail", t.str() + ": Coxeter relation failed"}};
            }
        if (!involutions_orthogonal_check(w))
            return {{"pass", false}, {"detail", t.str() + ": involution factorization failed"}};
    }
    return {{"pass", true}, {"detail", "orders, relations, involutions verified to rank 4"}};
}

json run_battery(std::uint64_t seed, unsigned long long budget) {
    struct Entry {
        int id;
        const char* name;
        std::function<json()> run;
    };
    const std::vector<Entry> entries = {
        {1, "folding_table", [&] { return criterion_folding_table(); }},
        {2, "a4_example_values", [&] { return criterion_a4_example(); }},
        {3, "folding_intersections", [&] { return criterion_folding_intersections(budget); }},
        {4, "steinberg_generators", [&] { return criterion_steinberg(budget); }},
        {5, "sl4_subregular_fan", [&] { return criterion_sl4_fan(budget); }},
        {6, "single_chamber_bijection", [&] { return criterion_single_chamber(budget); }},
        {7, "kleinian_exhaustive", [&] { return criterion_kleinian_exhaustive(); }},
        {8, "quotient_tower_degrees", [&] { return criterion_tower(seed, budget); }},
        {9, "end_and_hecke_dims", [&] { return criterion_end_hecke(budget); }},
        {10, "weyl_engine", [&] { return criterion_weyl_engine(budget); }},
    };
    json criteria = json::array();
    for (const Entry& e : entries) {
        json r;
        try {
            r = e.run();
        } catch (const std::exception& ex) {
            r = {{"pass", false}, {"detail", std::string("raised: ") + ex.what()}};
        }
        r["id"] = e.id;
        r["name"] = e.name;
        criteria.push_back(std::move(r));
    }
    return criteria;
}

}  // namespace

json selftest_report(std::uint64_t seed, unsigned long long budget) {
    json criteria = run_battery(seed, budget);
    {
        // Determinism: the whole battery serializes byte-identically when
        // re-run with the same seed.
        const json again = run_battery(seed, budget);
        json r;
        r["id"] = 11;
        r["name"] = "determinism";
        r["pass"] = criteria.dump() == again.dump();
        r["detail"] = "battery re-run compared byte for byte";
        criteria.push_back(std::move(r));
    }
    bool all = true;
    for (const json& c : criteria)
        if (!c.at("pass").get<bool>()) all = false;
    json report;
    report["criteria"] = std::move(criteria);
    report["all_pass"] = all;
    report["seed"] = seed;
    return report;
}

}  // namespace weylfold
