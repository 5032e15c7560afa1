#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathact {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense row-major matrix, just enough for this project.
template <typename T> class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, const T &fill = T{})
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T &operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const T &operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Mat &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat &o) const { return !(*this == o); }

    Mat operator*(const Mat &o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix dimension mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T &a = (*this)(i, k);
                if (a == T{})
                    continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) += a * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat &o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix dimension mismatch");
        Mat r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    static Mat identity(int n) {
        Mat r(n, n);
        for (int i = 0; i < n; ++i)
            r(i, i) = T{1};
        return r;
    }

    const std::vector<T> &data() const { return data_; }
    std::vector<T> &data() { return data_; }

  private:
    int rows_, cols_;
    std::vector<T> data_;
};

using IntMat = Mat<long>;
using RatMat = Mat<Rational>;

inline bool is_prime(long n) {
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// mpq_class(a, b) does not canonicalize; this does.
inline Rational make_rational(const Integer &num, const Integer &den) {
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational &q) { return q.get_den() == 1; }

// Exact inverse of a rational matrix; empty result when singular.
bool rat_invert(const RatMat &m, RatMat &out);

// Rank over the rationals.
int rat_rank(RatMat m);

// Solve m * x = b exactly; false when the system is singular/inconsistent.
bool rat_solve(RatMat m, std::vector<Rational> b, std::vector<Rational> &x);

} // namespace pathact
