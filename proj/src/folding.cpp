#include "folding.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "errors.hpp"

namespace weylfold {

namespace {

bool is_automorphism(const DynkinDiagram& d, const std::vector<int>& perm) {
    std::set<std::pair<int, int>> edges;
    for (const auto& e : d.edges) edges.insert({std::min(e.i, e.j), std::max(e.i, e.j)});
    for (const auto& e : d.edges) {
        const int a = perm[e.i - 1], b = perm[e.j - 1];
        if (!edges.count({std::min(a, b), std::max(a, b)})) return false;
    }
    return true;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    // (f o g)(i) = f(g(i))
    std::vector<int> h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i] - 1];
    return h;
}

}  // namespace

FoldingAction make_action(const DynkinDiagram& d, const std::vector<std::vector<int>>& generators) {
    if (!d.simply_laced()) throw invalid_input("folding requires a simply-laced diagram");
    const int n = d.n;
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != n) throw invalid_input("automorphism has wrong length");
        std::vector<bool> hit(n, false);
        for (int v : p) {
            if (v < 1 || v > n || hit[v - 1]) throw invalid_input("not a permutation of the nodes");
            hit[v - 1] = true;
        }
        if (!is_automorphism(d, p)) throw invalid_input("permutation does not preserve the edge set");
    }
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i + 1;
    std::set<std::vector<int>> closed{id};
    std::deque<std::vector<int>> queue{id};
    while (!queue.empty()) {
        const std::vector<int> p = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            std::vector<int> q = compose(g, p);
            if (closed.insert(q).second) {
                if (closed.size() > 50000) throw budget_exceeded("automorphism group too large");
                queue.push_back(std::move(q));
            }
        }
    }
    FoldingAction a;
    a.diagram = d;
    a.elements.assign(closed.begin(), closed.end());
    return a;
}

FoldingAction make_action(const DynkinType& t, const std::vector<std::vector<int>>& generators) {
    return make_action(diagram(t), generators);
}

std::vector<Orbit> orbits(const FoldingAction& action) {
    const int n = action.diagram.n;
    std::vector<int> owner(n, -1);
    std::vector<Orbit> out;
    for (int s = 1; s <= n; ++s) {
        if (owner[s - 1] >= 0) continue;
        std::set<int> nodes;
        for (const auto& p : action.elements) nodes.insert(p[s - 1]);
        Orbit o;
        o.nodes.assign(nodes.begin(), nodes.end());
        for (int v : o.nodes) owner[v - 1] = static_cast<int>(out.size());

        // Connected components of the induced subgraph on the orbit.
        std::set<int> left(nodes.begin(), nodes.end());
        int comps = 0;
        while (!left.empty()) {
            ++comps;
            std::vector<int> stack{*left.begin()};
            left.erase(left.begin());
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (auto it = left.begin(); it != left.end();) {
                    if (action.diagram.adjacent(v, *it)) {
                        stack.push_back(*it);
                        it = left.erase(it);
                    } else {
                        ++it;
                    }
                }
            }
        }
        o.components = comps;
        out.push_back(std::move(o));
    }
    return out;
}

QVec beta(const Orbit& orbit, int ambient_rank) {
    QVec v(ambient_rank, Rat(0));
    for (int node : orbit.nodes) v[node - 1] = make_rat(1, orbit.components);
    return v;
}

FoldedDatum fold(const FoldingAction& action) {
    FoldedDatum out;
    out.orbit_list = orbits(action);
    const int n = action.diagram.n;
    const int m = static_cast<int>(out.orbit_list.size());
    for (const Orbit& o : out.orbit_list) out.betas.push_back(beta(o, n));

    const QMat gram = gram_matrix(cartan_of_diagram(action.diagram));
    QMat pairings(m, m);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) pairings.at(j, k) = bilinear(out.betas[j], out.betas[k], gram);

    IMat c(m);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
            const Rat v = 2 * pairings.at(j, k) / pairings.at(j, j);
            if (v.get_den() != 1) throw consistency_error("folded Cartan entry is not an integer");
            if (!v.get_num().fits_slong_p()) throw consistency_error("folded Cartan entry overflow");
            c.at(j, k) = v.get_num().get_si();
        }
    try {
        out.blocks = classify(c);
    } catch (const invalid_input&) {
        throw consistency_error("folded matrix is not finite type");
    }
    out.folded_cartan = c;
    for (const auto& b : out.blocks) out.folded_type.push_back(b.type);
    return out;
}

IMat permutation_matrix(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    IMat p(n);
    // alpha_i -> alpha_{perm(i)}: column i has a 1 in row perm(i)-1.
    for (int i = 0; i < n; ++i) p.at(perm[i] - 1, i) = 1;
    return p;
}

namespace {

void require_matching_group(const WeylGroup& w_hat, const FoldingAction& action) {
    if (!(w_hat.cartan == cartan_of_diagram(action.diagram)))
        throw invalid_input("Weyl group does not belong to the action's diagram");
}

}  // namespace

std::vector<int> invariant_subgroup(const WeylGroup& w_hat, const FoldingAction& action) {
    require_matching_group(w_hat, action);
    std::vector<IMat> perms;
    for (const auto& p : action.elements) perms.push_back(permutation_matrix(p));
    std::vector<int> out;
    for (int id = 0; id < static_cast<int>(w_hat.elements.size()); ++id) {
        const IMat& m = w_hat.elements[id].matrix;
        bool fixed = true;
        for (const IMat& p : perms) {
            if (!(imul(p, m) == imul(m, p))) {
                fixed = false;
                break;
            }
        }
        if (fixed) out.push_back(id);
    }
    return out;
}

GroupElement w0_of_orbit(const Orbit& orbit, const WeylGroup& w_hat, const FoldingAction& action) {
    require_matching_group(w_hat, action);
    std::vector<int> J;
    for (int node : orbit.nodes) J.push_back(node - 1);
    const ParabolicSubgroup sub = parabolic(w_hat, J);
    const GroupElement w0 = w_hat.elements[longest_element(w_hat, sub)];

    // The fixed space is spanned by the betas; check w0 preserves it and
    // restricts to the reflection in this orbit's beta.
    const std::vector<Orbit> all = orbits(action);
    std::vector<QVec> betas;
    int self = -1;
    for (size_t j = 0; j < all.size(); ++j) {
        betas.push_back(beta(all[j], action.diagram.n));
        if (all[j].nodes == orbit.nodes) self = static_cast<int>(j);
    }
    if (self < 0) throw invalid_input("orbit does not belong to the action");

    const int n = action.diagram.n;
    const int m = static_cast<int>(betas.size());
    QMat basis(n, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) basis.at(i, j) = betas[j][i];
    const QMat gram = gram_matrix(cartan_of_diagram(action.diagram));
    const QVec& b = betas[self];
    const Rat bb = bilinear(b, b, gram);
    for (int j = 0; j < m; ++j) {
        const QVec img = act(w0.matrix, betas[j]);
        QVec coeffs;
        if (!solve(basis, img, coeffs))
            throw consistency_error("w0 of orbit does not preserve the fixed space");
        // Reflection in beta: v - (2<v,beta>/<beta,beta>) beta.
        QVec expect = betas[j];
        const Rat f = 2 * bilinear(betas[j], b, gram) / bb;
        for (int i = 0; i < n; ++i) expect[i] -= f * b[i];
        if (img != expect)
            throw consistency_error("w0 of orbit does not restrict to the reflection in beta");
    }
    return w0;
}

bool check_parabolic_intersection(const FoldingAction& action, const std::vector<int>& folded_subset,
                                  const WeylGroup& w_hat) {
    require_matching_group(w_hat, action);
    const std::vector<Orbit> all = orbits(action);
    for (int j : folded_subset)
        if (j < 0 || j >= static_cast<int>(all.size()))
            throw invalid_input("unknown folded node index " + std::to_string(j + 1));

    // Whati' = parabolic on the union of the chosen orbits.
    std::vector<int> I;
    for (int j : folded_subset)
        for (int node : all[j].nodes) I.push_back(node - 1);
    const ParabolicSubgroup sub_hat = parabolic(w_hat, I);

    const std::vector<int> invariant = invariant_subgroup(w_hat, action);
    const std::set<int> invariant_set(invariant.begin(), invariant.end());
    std::vector<int> lhs;
    for (int id : sub_hat.elements)
        if (invariant_set.count(id)) lhs.push_back(id);

    std::vector<int> w0_ids;
    for (int j : folded_subset)
        w0_ids.push_back(w_hat.id_of(w0_of_orbit(all[j], w_hat, action).matrix));
    std::vector<int> rhs = generated_subgroup(w_hat, w0_ids);

    return lhs == rhs;
}

}  // namespace weylfold
