#pragma once

#include <cstddef>

namespace tensortopsis::kernels {

namespace scalar {
void scale_columns(const double* src, const double* factors, double* dst, std::size_t rows, std::size_t cols);
void column_extrema(const double* src, std::size_t rows, std::size_t cols, double* col_min, double* col_max);
void column_sum_squares(const double* src, std::size_t rows, std::size_t cols, double* out);
void row_sq_distances(const double* src, std::size_t rows, std::size_t cols, const double* pos, const double* neg,
                      double* plus_sq, double* minus_sq);
}  // namespace scalar

#if defined(TENSORTOPSIS_HAVE_AVX2)
namespace avx2 {
void scale_columns(const double* src, const double* factors, double* dst, std::size_t rows, std::size_t cols);
void column_extrema(const double* src, std::size_t rows, std::size_t cols, double* col_min, double* col_max);
void column_sum_squares(const double* src, std::size_t rows, std::size_t cols, double* out);
void row_sq_distances(const double* src, std::size_t rows, std::size_t cols, const double* pos, const double* neg,
                      double* plus_sq, double* minus_sq);
}  // namespace avx2
#endif

}  // namespace tensortopsis::kernels
