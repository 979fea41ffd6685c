#ifndef WALLKIT_INTMATRIX_HPP
#define WALLKIT_INTMATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace wallkit {

using BigInt = boost::multiprecision::cpp_int;

/// Dense arbitrary-precision integer matrix, row-major, 0-based access.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    bool is_zero() const;
    int nonzero_count() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> data_;
};

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
int rank_exact(const IntMatrix& m);

/// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<BigInt> smith_normal_form(const IntMatrix& m);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

} // namespace wallkit

#endif
