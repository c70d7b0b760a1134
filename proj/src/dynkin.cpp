#include "dynkin.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "errors.hpp"

namespace weylfold {

std::string DynkinType::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void validate_type(const DynkinType& t) {
    const int n = t.rank;
    bool ok = false;
    switch (t.family) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 2; break;
        case Family::C: ok = n >= 2; break;
        case Family::D: ok = n >= 3; break;
        case Family::E: ok = n >= 6 && n <= 8; break;
        case Family::F: ok = n == 4; break;
        case Family::G: ok = n == 2; break;
    }
    if (!ok) throw invalid_input("invalid Dynkin type " + t.str());
}

DynkinType parse_type(const std::string& s) {
    if (s.size() < 2) throw invalid_input("invalid Dynkin type '" + s + "'");
    const char f = s[0];
    if (f < 'A' || f > 'G') throw invalid_input("invalid Dynkin type '" + s + "'");
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw invalid_input("invalid Dynkin type '" + s + "'");
        rank = rank * 10 + (s[i] - '0');
        if (rank > 1000) throw invalid_input("invalid Dynkin type '" + s + "'");
    }
    DynkinType t{static_cast<Family>(f), rank};
    validate_type(t);
    return t;
}

bool DynkinDiagram::simply_laced() const {
    for (const auto& e : edges)
        if (e.mult != 1) return false;
    return true;
}

bool DynkinDiagram::adjacent(int a, int b) const {
    for (const auto& e : edges)
        if ((e.i == a && e.j == b) || (e.i == b && e.j == a)) return true;
    return false;
}

DynkinDiagram diagram(const DynkinType& t) {
    validate_type(t);
    const int n = t.rank;
    DynkinDiagram d;
    d.n = n;
    auto path = [&](int from, int to) {
        for (int i = from; i < to; ++i) d.edges.push_back({i, i + 1, 1, 0});
    };
    switch (t.family) {
        case Family::A:
            path(1, n);
            break;
        case Family::B:
            path(1, n - 1);
            d.edges.push_back({n - 1, n, 2, n});  // alpha_n short
            break;
        case Family::C:
            path(1, n - 1);
            d.edges.push_back({n - 1, n, 2, n - 1});  // alpha_n long
            break;
        case Family::D:
            path(1, n - 2);
            d.edges.push_back({n - 2, n - 1, 1, 0});
            d.edges.push_back({n - 2, n, 1, 0});
            break;
        case Family::E:
            // Bourbaki: 1-3-4-5-...-n path with 2 attached to 4.
            d.edges.push_back({1, 3, 1, 0});
            for (int i = 3; i < n; ++i) d.edges.push_back({i, i + 1, 1, 0});
            d.edges.push_back({2, 4, 1, 0});
            break;
        case Family::F:
            d.edges.push_back({1, 2, 1, 0});
            d.edges.push_back({2, 3, 2, 3});  // alpha_3, alpha_4 short
            d.edges.push_back({3, 4, 1, 0});
            break;
        case Family::G:
            d.edges.push_back({1, 2, 3, 1});  // alpha_1 short
            break;
    }
    std::sort(d.edges.begin(), d.edges.end(),
              [](const DiagramEdge& a, const DiagramEdge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    return d;
}

IMat cartan_of_diagram(const DynkinDiagram& d) {
    IMat c(d.n);
    for (int i = 0; i < d.n; ++i) c.at(i, i) = 2;
    for (const auto& e : d.edges) {
        const int i = e.i - 1, j = e.j - 1;
        if (e.mult == 1) {
            c.at(i, j) = -1;
            c.at(j, i) = -1;
        } else {
            // The short root's row carries the -mult entry:
            // c_jk = 2<a_j,a_k>/<a_j,a_j> is largest in magnitude when a_j is short.
            const int s = e.short_node - 1;
            const int l = (e.short_node == e.i) ? j : i;
            c.at(s, l) = -e.mult;
            c.at(l, s) = -1;
        }
    }
    return c;
}

IMat cartan_matrix(const DynkinType& t) { return cartan_of_diagram(diagram(t)); }

DynkinDiagram diagram_of_cartan(const IMat& c) {
    DynkinDiagram d;
    d.n = c.n;
    for (int i = 0; i < c.n; ++i)
        for (int j = i + 1; j < c.n; ++j) {
            const std::int64_t m = c.at(i, j) * c.at(j, i);
            if (m == 0) continue;
            DiagramEdge e{i + 1, j + 1, static_cast<int>(m), 0};
            if (m > 1) e.short_node = (c.at(i, j) < -1) ? i + 1 : j + 1;
            d.edges.push_back(e);
        }
    return d;
}

namespace {

void validate_cartan_shape(const IMat& c) {
    // The 0x0 matrix is the Cartan matrix of the empty product (trivial
    // group); it shows up for singularities with no codimension-two leaves.
    if (c.n < 0) throw invalid_input("not a finite-type Cartan matrix");
    for (int i = 0; i < c.n; ++i) {
        if (c.at(i, i) != 2) throw invalid_input("not a finite-type Cartan matrix");
        for (int j = 0; j < c.n; ++j) {
            if (i == j) continue;
            if (c.at(i, j) > 0) throw invalid_input("not a finite-type Cartan matrix");
            if ((c.at(i, j) == 0) != (c.at(j, i) == 0))
                throw invalid_input("not a finite-type Cartan matrix");
            if (c.at(i, j) * c.at(j, i) > 3) throw invalid_input("not a finite-type Cartan matrix");
        }
    }
}

std::vector<std::vector<int>> components(const IMat& c) {
    std::vector<int> comp(c.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < c.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, nodes;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            nodes.push_back(v);
            for (int w = 0; w < c.n; ++w)
                if (w != v && c.at(v, w) != 0 && comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(std::move(nodes));
    }
    return out;
}

// Tries to map the block (rows/cols `nodes` of c) onto the canonical Cartan
// matrix of t. On success fills `assignment` with assignment[k] = the element
// of `nodes` in canonical position k. Assignments are searched with input
// nodes in ascending order, so the result is deterministic.
bool match_block(const IMat& c, const std::vector<int>& nodes, const DynkinType& t,
                 std::vector<int>& assignment) {
    const int m = static_cast<int>(nodes.size());
    const IMat target = cartan_matrix(t);
    std::vector<int> pos(m, -1);     // canonical position -> index into nodes
    std::vector<bool> used(m, false);

    auto consistent = [&](int k, int cand) {
        for (int l = 0; l < k; ++l) {
            if (c.at(nodes[cand], nodes[pos[l]]) != target.at(k, l)) return false;
            if (c.at(nodes[pos[l]], nodes[cand]) != target.at(l, k)) return false;
        }
        return true;
    };
    std::function<bool(int)> go = [&](int k) -> bool {
        if (k == m) return true;
        for (int cand = 0; cand < m; ++cand) {
            if (used[cand] || !consistent(k, cand)) continue;
            used[cand] = true;
            pos[k] = cand;
            if (go(k + 1)) return true;
            used[cand] = false;
        }
        return false;
    };
    if (!go(0)) return false;
    assignment.resize(m);
    for (int k = 0; k < m; ++k) assignment[k] = nodes[pos[k]];
    return true;
}

std::vector<DynkinType> candidates_for_rank(int m) {
    std::vector<DynkinType> cs;
    cs.push_back({Family::A, m});
    if (m >= 2) cs.push_back({Family::B, m});
    if (m >= 2) cs.push_back({Family::C, m});
    if (m >= 3) cs.push_back({Family::D, m});
    if (m >= 6 && m <= 8) cs.push_back({Family::E, m});
    if (m == 4) cs.push_back({Family::F, m});
    if (m == 2) cs.push_back({Family::G, m});
    return cs;
}

}  // namespace

std::vector<ClassifiedBlock> classify(const IMat& c) {
    validate_cartan_shape(c);
    std::vector<ClassifiedBlock> out;
    for (const auto& nodes : components(c)) {
        const int m = static_cast<int>(nodes.size());
        ClassifiedBlock block;
        bool found = false;
        // Prefer a candidate matching under the identity assignment; this is
        // what keeps B2 and C2 (which are permutation-equivalent) apart.
        for (const DynkinType& t : candidates_for_rank(m)) {
            const IMat target = cartan_matrix(t);
            bool ident = true;
            for (int k = 0; k < m && ident; ++k)
                for (int l = 0; l < m && ident; ++l)
                    if (c.at(nodes[k], nodes[l]) != target.at(k, l)) ident = false;
            if (ident) {
                block.type = t;
                block.nodes = nodes;
                found = true;
                break;
            }
        }
        if (!found) {
            for (const DynkinType& t : candidates_for_rank(m)) {
                std::vector<int> assignment;
                if (match_block(c, nodes, t, assignment)) {
                    block.type = t;
                    block.nodes = assignment;
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw invalid_input("not a finite-type Cartan matrix");
        for (int& node : block.nodes) ++node;  // report 1-based node ids
        out.push_back(std::move(block));
    }
    return out;
}

std::vector<IVec> roots(const IMat& cartan) {
    classify(cartan);  // validates finite type
    const int n = cartan.n;
    std::set<IVec> seen;
    std::vector<IVec> queue;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    const size_t cap = 1000;  // |roots| <= 240 per component at rank <= 8
    while (!queue.empty()) {
        const IVec v = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            // s_i(v): coordinate i becomes v_i - sum_k c_ik v_k.
            IVec w = v;
            std::int64_t s = 0;
            for (int k = 0; k < n; ++k) s += cartan.at(i, k) * v[k];
            w[i] -= s;
            if (seen.insert(w).second) {
                if (seen.size() > cap) throw consistency_error("root closure exceeded cap");
                queue.push_back(w);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<IVec> roots(const DynkinType& t) { return roots(cartan_matrix(t)); }

QMat gram_matrix(const IMat& cartan) {
    validate_cartan_shape(cartan);
    const int n = cartan.n;
    // Symmetrizing weights d_i with d_i c_ij = d_j c_ji, long roots at 2.
    std::vector<Rat> d(n, Rat(0));
    for (const auto& nodes : components(cartan)) {
        d[nodes[0]] = 1;
        std::vector<int> stack{nodes[0]};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (w == v || cartan.at(v, w) == 0 || d[w] != 0) continue;
                d[w] = d[v] * Rat(cartan.at(v, w)) / Rat(cartan.at(w, v));
                stack.push_back(w);
            }
        }
        Rat mx = 0;
        for (int v : nodes) mx = std::max(mx, d[v]);
        for (int v : nodes) d[v] = d[v] * 2 / mx;
    }
    QMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = d[i] * Rat(cartan.at(i, j)) / 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.at(i, j) != g.at(j, i)) throw consistency_error("Cartan matrix not symmetrizable");
    return g;
}

unsigned long long weyl_order(const DynkinType& t) {
    validate_type(t);
    const int n = t.rank;
    auto fact = [](int k) {
        unsigned long long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    switch (t.family) {
        case Family::A: return fact(n + 1);
        case Family::B:
        case Family::C: return fact(n) << n;
        case Family::D: return fact(n) << (n - 1);
        case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

unsigned long long weyl_order(const IMat& cartan) {
    unsigned long long o = 1;
    for (const auto& b : classify(cartan)) {
        const unsigned long long f = weyl_order(b.type);
        if (o > (1ULL << 62) / f) throw budget_exceeded("Weyl group order overflows budget arithmetic");
        o *= f;
    }
    return o;
}

int coxeter_number(const DynkinType& t) {
    validate_type(t);
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n + 1;
        case Family::B:
        case Family::C: return 2 * n;
        case Family::D: return 2 * (n - 1);
        case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
        case Family::F: return 12;
        case Family::G: return 6;
    }
    return 0;
}

}  // namespace weylfold
