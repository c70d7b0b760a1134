#include "hecke.hpp"

#include "errors.hpp"

namespace weylfold {

HeckeAlgebra build(const WeylGroup& w, const ParabolicSubgroup& sub, unsigned long long budget) {
    if (w.order() > budget)
        throw budget_exceeded("group order " + std::to_string(w.order()) + " exceeds Hecke budget " +
                              std::to_string(budget));
    HeckeAlgebra h;
    h.group_order = w.order();
    h.subgroup_order = sub.elements.size();

    const DoubleCosetDecomposition dc = double_cosets(w, sub);
    h.reps = dc.reps;
    h.cosets = dc.cosets;
    const int dim = static_cast<int>(dc.cosets.size());
    if (static_cast<unsigned long long>(dim) * dim * dim > (1ULL << 21))
        throw budget_exceeded("structure-constant tensor too large (dim " + std::to_string(dim) + ")");

    std::vector<int> coset_of(w.elements.size(), -1);
    for (int a = 0; a < dim; ++a)
        for (int e : dc.cosets[a]) coset_of[e] = a;

    // 1_{D_a} * 1_{D_b} = sum_c m[a][b][c] 1_{D_c} with
    // m[a][b][c] = #{y in D_a : y^{-1} x_c in D_b}; rescaling by 1/|W'| per
    // basis vector divides m by |W'|.
    const Rat scale = make_rat(1, static_cast<long>(h.subgroup_order));
    h.counts.assign(dim, std::vector<std::vector<long long>>(dim, std::vector<long long>(dim, 0)));
    for (int a = 0; a < dim; ++a) {
        for (int y : dc.cosets[a]) {
            const int y_inv = w.inverse(y);
            for (int cc = 0; cc < dim; ++cc)
                ++h.counts[a][coset_of[w.mul(y_inv, dc.reps[cc])]][cc];
        }
    }
    h.c.assign(dim, std::vector<std::vector<Rat>>(dim, std::vector<Rat>(dim, Rat(0))));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int k = 0; k < dim; ++k)
                h.c[a][b][k] = scale * static_cast<long>(h.counts[a][b][k]);

    // The identity coset is coset 0 (element 0 is the identity and is the
    // minimal member of its coset).
    h.unit_ok = true;
    for (int b = 0; b < dim && h.unit_ok; ++b)
        for (int k = 0; k < dim; ++k) {
            const Rat expect = (k == b) ? 1 : 0;
            if (h.c[0][b][k] != expect || h.c[b][0][k] != expect) {
                h.unit_ok = false;
                break;
            }
        }
    if (!h.unit_ok) throw consistency_error("identity coset is not the unit of the Hecke algebra");
    return h;
}

bool associativity_check(const HeckeAlgebra& h) {
    // Both sides of (T_a T_b) T_d = T_a (T_b T_d) carry the same 1/|W'|^2
    // scale, so the comparison runs on the integer counts. Counts are at
    // most |W| <= 1152, so the sums stay far below the int64 range.
    const int dim = static_cast<int>(h.reps.size());
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int d = 0; d < dim; ++d) {
                for (int k = 0; k < dim; ++k) {
                    long long lhs = 0, rhs = 0;
                    for (int m = 0; m < dim; ++m) {
                        lhs += h.counts[a][b][m] * h.counts[m][d][k];
                        rhs += h.counts[b][d][m] * h.counts[a][m][k];
                    }
                    if (lhs != rhs) return false;
                }
            }
    return true;
}

InvariantModuleDims invariant_module_dim(const WeylGroup& w, const ParabolicSubgroup& sub) {
    InvariantModuleDims d;
    d.left_cosets = w.order() / sub.elements.size();
    d.double_cosets = double_cosets(w, sub).cosets.size();
    return d;
}

}  // namespace weylfold
