// Compiled with -mavx2 only (no -mfma): a fused multiply-add would round
// differently from the scalar reference.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace tensortopsis::kernels::avx2 {

namespace {
constexpr std::size_t kLanes = 4;
}

void scale_columns(const double* src, const double* factors, double* dst, std::size_t rows, std::size_t cols) {
    const std::size_t vec_end = cols - cols % kLanes;
    for (std::size_t r = 0; r < rows; ++r) {
        const double* in = src + r * cols;
        double* out = dst + r * cols;
        std::size_t c = 0;
        for (; c < vec_end; c += kLanes) {
            _mm256_storeu_pd(out + c, _mm256_mul_pd(_mm256_loadu_pd(in + c), _mm256_loadu_pd(factors + c)));
        }
        for (; c < cols; ++c) out[c] = in[c] * factors[c];
    }
}

void column_extrema(const double* src, std::size_t rows, std::size_t cols, double* col_min, double* col_max) {
    const std::size_t vec_end = cols - cols % kLanes;
    std::size_t c = 0;
    for (; c < vec_end; c += kLanes) {
        __m256d lo = _mm256_loadu_pd(src + c);
        __m256d hi = lo;
        for (std::size_t r = 1; r < rows; ++r) {
            const __m256d x = _mm256_loadu_pd(src + r * cols + c);
            lo = _mm256_min_pd(lo, x);
            hi = _mm256_max_pd(hi, x);
        }
        _mm256_storeu_pd(col_min + c, lo);
        _mm256_storeu_pd(col_max + c, hi);
    }
    for (; c < cols; ++c) {
        double lo = src[c];
        double hi = src[c];
        for (std::size_t r = 1; r < rows; ++r) {
            const double x = src[r * cols + c];
            lo = lo < x ? lo : x;
            hi = hi > x ? hi : x;
        }
        col_min[c] = lo;
        col_max[c] = hi;
    }
}

void column_sum_squares(const double* src, std::size_t rows, std::size_t cols, double* out) {
    const std::size_t vec_end = cols - cols % kLanes;
    std::size_t c = 0;
    for (; c < vec_end; c += kLanes) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t r = 0; r < rows; ++r) {
            const __m256d x = _mm256_loadu_pd(src + r * cols + c);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(x, x));
        }
        _mm256_storeu_pd(out + c, acc);
    }
    for (; c < cols; ++c) {
        double acc = 0.0;
        for (std::size_t r = 0; r < rows; ++r) acc += src[r * cols + c] * src[r * cols + c];
        out[c] = acc;
    }
}

void row_sq_distances(const double* src, std::size_t rows, std::size_t cols, const double* pos, const double* neg,
                      double* plus_sq, double* minus_sq) {
    // Four alternatives per vector; each lane walks its row in column order.
    const std::size_t vec_end = rows - rows % kLanes;
    const __m256i offsets = _mm256_setr_epi64x(0, static_cast<long long>(cols), static_cast<long long>(2 * cols),
                                               static_cast<long long>(3 * cols));
    std::size_t r = 0;
    for (; r < vec_end; r += kLanes) {
        const double* block = src + r * cols;
        __m256d dp = _mm256_setzero_pd();
        __m256d dm = _mm256_setzero_pd();
        for (std::size_t c = 0; c < cols; ++c) {
            const __m256d x = _mm256_i64gather_pd(block + c, offsets, 8);
            const __m256d a = _mm256_sub_pd(x, _mm256_broadcast_sd(pos + c));
            const __m256d b = _mm256_sub_pd(x, _mm256_broadcast_sd(neg + c));
            dp = _mm256_add_pd(dp, _mm256_mul_pd(a, a));
            dm = _mm256_add_pd(dm, _mm256_mul_pd(b, b));
        }
        _mm256_storeu_pd(plus_sq + r, dp);
        _mm256_storeu_pd(minus_sq + r, dm);
    }
    for (; r < rows; ++r) {
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

}  // namespace tensortopsis::kernels::avx2
