#include "linalg.hpp"

#include "errors.hpp"

namespace weylfold {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::identity(int n) {
    IMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat imul(const IMat& x, const IMat& y) {
    const int n = x.n;
    IMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::int64_t xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

QMat qmul(const QMat& x, const QMat& y) {
    QMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

QVec act(const QMat& m, const QVec& v) {
    QVec r(m.rows, Rat(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

QVec act(const IMat& m, const QVec& v) {
    QVec r(m.n, Rat(0));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j) != 0) r[i] += Rat(m.at(i, j)) * v[j];
    return r;
}

IVec act(const IMat& m, const IVec& v) {
    IVec r(m.n, 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

QMat to_qmat(const IMat& m) {
    QMat r(m.n, m.n);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

Rat dot(const QVec& v, const QVec& w) {
    Rat s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
    return s;
}

Rat bilinear(const QVec& v, const QVec& w, const QMat& gram) {
    if (static_cast<int>(v.size()) != gram.rows || static_cast<int>(w.size()) != gram.cols)
        throw invalid_input("dimension mismatch in bilinear form");
    Rat s = 0;
    for (int i = 0; i < gram.rows; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < gram.cols; ++j)
            if (gram.at(i, j) != 0) s += v[i] * gram.at(i, j) * w[j];
    }
    return s;
}

// Row echelon over Q. Returns pivot columns; m is reduced in place.
static std::vector<int> echelon(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) swap(m.at(p, c), m.at(row, c));
        const Rat inv = 1 / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rat f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(QMat m) { return static_cast<int>(echelon(m).size()); }

std::vector<QVec> kernel_basis(QMat m) {
    const int n = m.cols;
    const std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        QVec v(n, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(QMat m, QVec b, QVec& out) {
    const int n = m.cols;
    QMat aug(m.rows, n + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n) = b[r];
    }
    std::vector<int> pivots = echelon(aug);
    if (!pivots.empty() && pivots.back() == n) return false;  // inconsistent
    out.assign(n, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) out[pivots[r]] = aug.at(static_cast<int>(r), n);
    return true;
}

bool lex_less(const QVec& v, const QVec& w) {
    for (size_t i = 0; i < v.size() && i < w.size(); ++i) {
        const int c = cmp(v[i], w[i]);
        if (c != 0) return c < 0;
    }
    return v.size() < w.size();
}

}  // namespace weylfold
