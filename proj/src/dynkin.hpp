#pragma once

#include <string>
#include <vector>

#include "linalg.hpp"

namespace weylfold {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A finite type in Bourbaki numbering. Rank constraints: A n>=1, B n>=2,
// C n>=2, D n>=3, E n in {6,7,8}, F n=4, G n=2.
struct DynkinType {
    Family family = Family::A;
    int rank = 1;

    bool operator==(const DynkinType& o) const { return family == o.family && rank == o.rank; }
    std::string str() const;
    bool simply_laced() const { return family == Family::A || family == Family::D || family == Family::E; }
    bool ade() const { return simply_laced(); }
};

DynkinType parse_type(const std::string& s);      // throws invalid_input("invalid Dynkin type")
void validate_type(const DynkinType& t);

// Bond of a Dynkin diagram. mult in {1,2,3}; for mult > 1, short_node is the
// endpoint carrying the short root (the arrow points toward it).
struct DiagramEdge {
    int i = 0;
    int j = 0;  // node ids, 1-based, i < j
    int mult = 1;
    int short_node = 0;  // 0 when mult == 1
};

struct DynkinDiagram {
    int n = 0;  // nodes are 1..n
    std::vector<DiagramEdge> edges;

    bool simply_laced() const;
    bool adjacent(int a, int b) const;
};

DynkinDiagram diagram(const DynkinType& t);
IMat cartan_matrix(const DynkinType& t);
IMat cartan_of_diagram(const DynkinDiagram& d);
DynkinDiagram diagram_of_cartan(const IMat& c);  // requires a valid finite-type matrix

// One irreducible block of a decomposable finite-type Cartan matrix.
// nodes[k] is the input node id (1-based) playing the Bourbaki role k+1, so
// c_input[nodes[k]][nodes[l]] == cartan_matrix(type)[k][l] exactly.
struct ClassifiedBlock {
    DynkinType type;
    std::vector<int> nodes;
};

// Recognizes a (possibly decomposable) finite-type Cartan matrix, blocks
// ordered by their minimal input node. Throws invalid_input
// ("not a finite-type Cartan matrix") otherwise.
std::vector<ClassifiedBlock> classify(const IMat& c);

// Full root system in simple-root coordinates, closed under the simple
// reflections; deterministic order (sorted). Validates finite type first.
std::vector<IVec> roots(const IMat& cartan);
std::vector<IVec> roots(const DynkinType& t);

// Symmetrization of the Cartan matrix: gram[i][j] = <alpha_i, alpha_j>, with
// long roots in each component normalized to <a,a> = 2. For simply-laced
// matrices this is the Cartan matrix itself.
QMat gram_matrix(const IMat& cartan);

unsigned long long weyl_order(const DynkinType& t);
unsigned long long weyl_order(const IMat& cartan);
int coxeter_number(const DynkinType& t);

}  // namespace weylfold
