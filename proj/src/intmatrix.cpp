#include "wallkit/intmatrix.hpp"

#include <algorithm>

#include "wallkit/errors.hpp"

namespace wallkit {

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

int IntMatrix::nonzero_count() const {
    return static_cast<int>(std::count_if(data_.begin(), data_.end(),
                                          [](const BigInt& v) { return v != 0; }));
}

int rank_exact(const IntMatrix& m) {
    IntMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        // Bareiss step: entries stay integral, divisions are exact.
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a.at(i, j) = (a.at(rank, col) * a.at(i, j) - a.at(i, col) * a.at(rank, j)) / prev;
            a.at(i, col) = 0;
        }
        prev = a.at(rank, col);
        ++rank;
    }
    return rank;
}

std::vector<BigInt> smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    const int steps = std::min(rows, cols);
    std::vector<BigInt> diag;
    int t = 0;
    while (t < steps) {
        // Find the nonzero entry of least absolute value in the trailing block.
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (a.at(i, j) == 0) continue;
                BigInt v = abs(a.at(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        for (int j = 0; j < cols; ++j) std::swap(a.at(pi, j), a.at(t, j));
        for (int i = 0; i < rows; ++i) std::swap(a.at(i, pj), a.at(i, t));
        bool clean = true;
        for (int i = t + 1; i < rows; ++i) {
            BigInt q = a.at(i, t) / a.at(t, t);
            if (q != 0)
                for (int j = t; j < cols; ++j) a.at(i, j) -= q * a.at(t, j);
            if (a.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < cols; ++j) {
            BigInt q = a.at(t, j) / a.at(t, t);
            if (q != 0)
                for (int i = t; i < rows; ++i) a.at(i, j) -= q * a.at(i, t);
            if (a.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // remainder left somewhere, repeat with smaller pivot
        ++t;
    }
    for (int i = 0; i < t; ++i) diag.push_back(abs(a.at(i, i)));
    // Enforce the divisibility chain d1 | d2 | ...
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j)
            if (diag[j] % diag[i] != 0) {
                BigInt g = gcd(diag[i], diag[j]);
                BigInt l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
    std::sort(diag.begin(), diag.end());
    return diag;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "matmul: inner dimensions disagree");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const BigInt& v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += v * b.at(k, j);
        }
    return c;
}

} // namespace wallkit
