#pragma once

#include <stdexcept>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crosscap {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers. Small and simple; the heavy
/// lifting on large sparse systems happens in the sparse routines.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(long long rows, long long cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }

    static IntMatrix identity(long long n) {
        IntMatrix m(n, n);
        for (long long i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }

    Int& operator()(long long r, long long c) { return a_[static_cast<size_t>(r * cols_ + c)]; }
    const Int& operator()(long long r, long long c) const { return a_[static_cast<size_t>(r * cols_ + c)]; }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
        IntMatrix out(rows_, o.cols_);
        for (long long r = 0; r < rows_; ++r)
            for (long long k = 0; k < cols_; ++k) {
                const Int& x = (*this)(r, k);
                if (x == 0) continue;
                for (long long c = 0; c < o.cols_; ++c)
                    if (o(k, c) != 0) out(r, c) += x * o(k, c);
            }
        return out;
    }

    bool operator==(const IntMatrix& o) const = default;

private:
    long long rows_ = 0;
    long long cols_ = 0;
    std::vector<Int> a_;
};

/// Sparse integer matrix as a triplet list; duplicate positions accumulate.
struct SparseIntMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<std::tuple<long long, long long, Int>> triplets;

    SparseIntMatrix() = default;
    SparseIntMatrix(long long r, long long c) : rows(r), cols(c) {}

    void add(long long r, long long c, Int v) {
        if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("SparseIntMatrix::add");
        if (v != 0) triplets.emplace_back(r, c, std::move(v));
    }

    IntMatrix dense() const {
        IntMatrix m(rows, cols);
        for (const auto& [r, c, v] : triplets) m(r, c) += v;
        return m;
    }
};

} // namespace crosscap
