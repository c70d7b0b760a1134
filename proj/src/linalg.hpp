#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace weylfold {

using QVec = std::vector<Rat>;
using IVec = std::vector<std::int64_t>;

// Dense rational matrix, row major.
struct QMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static QMat identity(int n);
    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Square integer matrix; the representation for Weyl group elements and
// Cartan matrices, whose entries stay integral in the simple-root basis.
struct IMat {
    int n = 0;
    std::vector<std::int64_t> a;

    IMat() = default;
    explicit IMat(int nn) : n(nn), a(static_cast<size_t>(nn) * nn, 0) {}

    std::int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    std::int64_t at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

    static IMat identity(int n);
    bool operator==(const IMat& o) const { return n == o.n && a == o.a; }
    bool operator<(const IMat& o) const { return a < o.a; }
};

IMat imul(const IMat& x, const IMat& y);
QMat qmul(const QMat& x, const QMat& y);
QVec act(const QMat& m, const QVec& v);
QVec act(const IMat& m, const QVec& v);
IVec act(const IMat& m, const IVec& v);
QMat to_qmat(const IMat& m);

Rat dot(const QVec& v, const QVec& w);
// <v, w> with respect to a symmetric bilinear form given by gram.
Rat bilinear(const QVec& v, const QVec& w, const QMat& gram);

int rank(QMat m);  // by value: destroyed by elimination
std::vector<QVec> kernel_basis(QMat m);
// Solves m x = b if a solution exists; returns false otherwise.
bool solve(QMat m, QVec b, QVec& out);
bool lex_less(const QVec& v, const QVec& w);

}  // namespace weylfold
