#include "util.hpp"

namespace pathact {

bool rat_invert(const RatMat &m, RatMat &out) {
    const int n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("inverse requires a square matrix");
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return false;
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        Rational d = a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0)
                continue;
            Rational f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    out = inv;
    return true;
}

int rat_rank(RatMat m) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (int c = 0; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            Rational f = m(r, col) / m(row, col);
            for (int c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(row, c);
        }
        ++rank;
        ++row;
    }
    return rank;
}

bool rat_solve(RatMat m, std::vector<Rational> b, std::vector<Rational> &x) {
    const int n = m.rows();
    if (n != m.cols() || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("rat_solve requires a square system");
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return false;
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(m(pivot, c), m(col, c));
            std::swap(b[pivot], b[col]);
        }
        Rational d = m(col, col);
        for (int c = 0; c < n; ++c)
            m(col, c) /= d;
        b[col] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col || m(r, col) == 0)
                continue;
            Rational f = m(r, col);
            for (int c = 0; c < n; ++c)
                m(r, c) -= f * m(col, c);
            b[r] -= f * b[col];
        }
    }
    x = std::move(b);
    return true;
}

} // namespace pathact
