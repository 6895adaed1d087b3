#include "kernels_impl.hpp"

namespace tensortopsis::kernels::scalar {

void scale_columns(const double* src, const double* factors, double* dst, std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* in = src + r * cols;
        double* out = dst + r * cols;
        for (std::size_t c = 0; c < cols; ++c) out[c] = in[c] * factors[c];
    }
}

void column_extrema(const double* src, std::size_t rows, std::size_t cols, double* col_min, double* col_max) {
    for (std::size_t c = 0; c < cols; ++c) {
        col_min[c] = src[c];
        col_max[c] = src[c];
    }
    for (std::size_t r = 1; r < rows; ++r) {
        const double* row = src + r * cols;
        for (std::size_t c = 0; c < cols; ++c) {
            // Same selection rule as MINPD/MAXPD: keep the accumulator only on strict improvement.
            col_min[c] = col_min[c] < row[c] ? col_min[c] : row[c];
            col_max[c] = col_max[c] > row[c] ? col_max[c] : row[c];
        }
    }
}

void column_sum_squares(const double* src, std::size_t rows, std::size_t cols, double* out) {
    for (std::size_t c = 0; c < cols; ++c) out[c] = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row = src + r * cols;
        for (std::size_t c = 0; c < cols; ++c) out[c] += row[c] * row[c];
    }
}

void row_sq_distances(const double* src, std::size_t rows, std::size_t cols, const double* pos, const double* neg,
                      double* plus_sq, double* minus_sq) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row = src + r * cols;
        double dp = 0.0;
        double dm = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            const double a = row[c] - pos[c];
            const double b = row[c] - neg[c];
            dp += a * a;
            dm += b * b;
        }
        plus_sq[r] = dp;
        minus_sq[r] = dm;
    }
}

}  // namespace tensortopsis::kernels::scalar
