#include "weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "errors.hpp"

namespace weylfold {

int WeylGroup::id_of(const IMat& m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
}

int WeylGroup::mul(int a, int b) const {
    const int r = id_of(imul(elements[a].matrix, elements[b].matrix));
    if (r < 0) throw consistency_error("group not closed under multiplication");
    return r;
}

int WeylGroup::inverse(int a) const {
    // Generators are involutions, so the reversed word inverts the element.
    IMat m = IMat::identity(cartan.n);
    const auto& word = elements[a].word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = imul(m, generators[*it]);
    const int r = id_of(m);
    if (r < 0) throw consistency_error("inverse not found in group");
    return r;
}

IMat simple_reflection(const IMat& cartan, int j) {
    IMat s = IMat::identity(cartan.n);
    for (int k = 0; k < cartan.n; ++k) s.at(j, k) -= cartan.at(j, k);
    return s;
}

WeylGroup generate(const IMat& cartan, unsigned long long budget) {
    const unsigned long long expected = weyl_order(cartan);  // validates finite type
    if (expected > budget)
        throw budget_exceeded("enumeration budget exceeded: group order " +
                              std::to_string(expected) + " > budget " + std::to_string(budget));
    WeylGroup w;
    w.cartan = cartan;
    const int n = cartan.n;
    for (int j = 0; j < n; ++j) w.generators.push_back(simple_reflection(cartan, j));

    w.elements.push_back({IMat::identity(n), {}});
    w.index.emplace(w.elements[0].matrix, 0);
    // Breadth-first closure; the queue order makes element ids sorted by
    // (word length, word lex), which downstream code relies on for
    // deterministic coset representatives.
    for (size_t head = 0; head < w.elements.size(); ++head) {
        for (int j = 0; j < n; ++j) {
            IMat m = imul(w.elements[head].matrix, w.generators[j]);
            if (w.index.count(m)) continue;
            std::vector<int> word = w.elements[head].word;
            word.push_back(j);
            w.index.emplace(m, static_cast<int>(w.elements.size()));
            w.elements.push_back({std::move(m), std::move(word)});
            if (w.elements.size() > expected)
                throw consistency_error("enumeration exceeded the classified group order");
        }
    }
    if (w.elements.size() != expected)
        throw consistency_error("enumeration produced " + std::to_string(w.elements.size()) +
                                " elements, expected " + std::to_string(expected));
    return w;
}

std::vector<int> generated_subgroup(const WeylGroup& w, const std::vector<int>& gen_ids) {
    std::set<int> seen{0};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int g : gen_ids) {
            const int y = w.mul(x, g);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

ParabolicSubgroup parabolic(const WeylGroup& w, std::vector<int> J) {
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    for (int j : J)
        if (j < 0 || j >= w.rank()) throw invalid_input("unknown generator index " + std::to_string(j + 1));
    std::vector<int> gen_ids;
    for (int j : J) gen_ids.push_back(w.generator_id(j));
    ParabolicSubgroup sub;
    sub.gens = std::move(J);
    sub.elements = generated_subgroup(w, gen_ids);
    return sub;
}

int fixed_space_dim(const std::vector<IMat>& gens, int n) {
    if (gens.empty()) return n;
    QMat stacked(static_cast<int>(gens.size()) * n, n);
    int row = 0;
    for (const IMat& g : gens) {
        for (int i = 0; i < n; ++i, ++row)
            for (int j = 0; j < n; ++j)
                stacked.at(row, j) = Rat(g.at(i, j) - (i == j ? 1 : 0));
    }
    return n - rank(std::move(stacked));
}

int fixed_space_dim(const WeylGroup& w, const ParabolicSubgroup& sub) {
    std::vector<IMat> gens;
    for (int j : sub.gens) gens.push_back(w.generators[j]);
    return fixed_space_dim(gens, w.rank());
}

DoubleCosetDecomposition double_cosets(const WeylGroup& w, const ParabolicSubgroup& sub) {
    std::vector<int> gen_ids;
    for (int j : sub.gens) gen_ids.push_back(w.generator_id(j));
    DoubleCosetDecomposition out;
    std::vector<bool> assigned(w.elements.size(), false);
    for (int x = 0; x < static_cast<int>(w.elements.size()); ++x) {
        if (assigned[x]) continue;
        // x is the minimal (length, lex) member of its coset because element
        // ids are BFS-ordered.
        std::vector<int> coset;
        std::deque<int> queue{x};
        assigned[x] = true;
        while (!queue.empty()) {
            const int y = queue.front();
            queue.pop_front();
            coset.push_back(y);
            for (int g : gen_ids) {
                for (int z : {w.mul(g, y), w.mul(y, g)}) {
                    if (!assigned[z]) {
                        assigned[z] = true;
                        queue.push_back(z);
                    }
                }
            }
        }
        std::sort(coset.begin(), coset.end());
        out.reps.push_back(x);
        out.cosets.push_back(std::move(coset));
    }
    return out;
}

namespace {

QMat reflection_in_root(const QVec& r, const QMat& gram) {
    const int n = static_cast<int>(r.size());
    const Rat rr = bilinear(r, r, gram);
    // s_r(v) = v - (2<v,r>/<r,r>) r; column k of <.,r> is (G r)_k.
    QVec gr(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gr[i] += gram.at(i, j) * r[j];
    QMat s = QMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) s.at(i, k) -= 2 * r[i] * gr[k] / rr;
    return s;
}

}  // namespace

bool involutions_orthogonal_check(const WeylGroup& w) {
    const int n = w.rank();
    const std::vector<IVec> all_roots = roots(w.cartan);
    const QMat gram = gram_matrix(w.cartan);

    std::vector<QVec> pos;
    for (const IVec& r : all_roots) {
        bool positive = false;
        for (std::int64_t c : r) {
            if (c != 0) {
                positive = c > 0;
                break;
            }
        }
        if (!positive) continue;
        QVec q(n);
        for (int i = 0; i < n; ++i) q[i] = Rat(r[i]);
        pos.push_back(std::move(q));
    }

    const IMat id = IMat::identity(n);
    for (const GroupElement& el : w.elements) {
        if (el.matrix == id || !(imul(el.matrix, el.matrix) == id)) continue;
        const QMat wm = to_qmat(el.matrix);

        // Candidate roots are the positive roots negated by the involution.
        std::vector<int> cand;
        for (int i = 0; i < static_cast<int>(pos.size()); ++i) {
            QVec img = act(el.matrix, pos[i]);
            bool neg = true;
            for (int k = 0; k < n && neg; ++k)
                if (img[k] != -pos[i][k]) neg = false;
            if (neg) cand.push_back(i);
        }
        QMat diff(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) diff.at(i, j) = Rat(el.matrix.at(i, j) - (i == j ? 1 : 0));
        const int k = rank(std::move(diff));  // dimension of the (-1)-eigenspace

        std::vector<int> chosen;
        std::function<bool(int)> search = [&](int from) -> bool {
            if (static_cast<int>(chosen.size()) == k) {
                QMat prod = QMat::identity(n);
                for (int c : chosen) prod = qmul(prod, reflection_in_root(pos[c], gram));
                return prod == wm;
            }
            for (int i = from; i < static_cast<int>(cand.size()); ++i) {
                bool orth = true;
                for (int c : chosen)
                    if (bilinear(pos[cand[i]], pos[c], gram) != 0) {
                        orth = false;
                        break;
                    }
                if (!orth) continue;
                chosen.push_back(cand[i]);
                if (search(i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (!search(0)) return false;
    }
    return true;
}

std::vector<QVec> orbit(const WeylGroup& w, const std::vector<int>& subgroup_elements,
                        const QVec& v) {
    std::set<QVec> pts;
    for (int id : subgroup_elements) pts.insert(act(w.elements[id].matrix, v));
    return {pts.begin(), pts.end()};
}

QVec canonical_orbit_rep(const WeylGroup& w, const std::vector<int>& subgroup_elements,
                         const QVec& v) {
    bool first = true;
    QVec best;
    for (int id : subgroup_elements) {
        QVec img = act(w.elements[id].matrix, v);
        if (first || lex_less(img, best)) {
            best = std::move(img);
            first = false;
        }
    }
    return best;
}

int longest_element(const WeylGroup& w) {
    // BFS order: the last element has maximal word length.
    return static_cast<int>(w.elements.size()) - 1;
}

int longest_element(const WeylGroup& w, const ParabolicSubgroup& sub) {
    int best = -1;
    size_t best_len = 0;
    for (int id : sub.elements) {
        const size_t len = w.elements[id].word.size();
        if (best < 0 || len > best_len) {
            best = id;
            best_len = len;
        }
    }
    return best;
}

unsigned long long permutation_order_oracle(const IMat& cartan, unsigned long long budget) {
    const std::vector<IVec> rts = roots(cartan);
    const int nr = static_cast<int>(rts.size());
    const int n = cartan.n;
    std::map<IVec, int> root_index;
    for (int i = 0; i < nr; ++i) root_index.emplace(rts[i], i);

    std::vector<std::vector<int>> gens;
    for (int j = 0; j < n; ++j) {
        const IMat s = simple_reflection(cartan, j);
        std::vector<int> perm(nr);
        for (int i = 0; i < nr; ++i) {
            auto it = root_index.find(act(s, rts[i]));
            if (it == root_index.end()) throw consistency_error("reflection does not permute roots");
            perm[i] = it->second;
        }
        gens.push_back(std::move(perm));
    }

    std::vector<int> id(nr);
    for (int i = 0; i < nr; ++i) id[i] = i;
    std::set<std::vector<int>> seen{id};
    std::deque<std::vector<int>> queue{id};
    while (!queue.empty()) {
        const std::vector<int> p = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<int> q(nr);
            for (int i = 0; i < nr; ++i) q[i] = g[p[i]];
            if (seen.insert(q).second) {
                if (seen.size() > budget) throw budget_exceeded("enumeration budget exceeded");
                queue.push_back(std::move(q));
            }
        }
    }
    return seen.size();
}

}  // namespace weylfold
