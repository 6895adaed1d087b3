#pragma once

#include <cstddef>
#include <string_view>

// Inner loops of the TOPSIS pipeline over a row-major matrix of `rows`
// alternatives by `cols` flattened (criterion, feature) columns.
//
// Every variant keeps the scalar reference's per-element operation order:
// vector lanes run across independent columns (or rows, for distances),
// never across a reduction. Results are therefore bit-identical between
// variants, and the choice of ISA never changes a ranking.

namespace tensortopsis::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
    Isa isa;

    /// dst[r, c] = src[r, c] * factors[c]
    void (*scale_columns)(const double* src, const double* factors, double* dst, std::size_t rows,
                          std::size_t cols);

    /// Per-column min and max over rows. rows >= 1.
    void (*column_extrema)(const double* src, std::size_t rows, std::size_t cols, double* col_min,
                           double* col_max);

    /// out[c] = sum over r of src[r, c]^2, accumulated in row order.
    void (*column_sum_squares)(const double* src, std::size_t rows, std::size_t cols, double* out);

    /// plus_sq[r] = sum over c of (src[r, c] - pos[c])^2, likewise minus_sq
    /// against neg, accumulated in column order.
    void (*row_sq_distances)(const double* src, std::size_t rows, std::size_t cols, const double* pos,
                             const double* neg, double* plus_sq, double* minus_sq);
};

const KernelTable& scalar_table() noexcept;

/// True when the variant was compiled in and the CPU supports it.
bool supported(Isa isa) noexcept;

/// Throws InvalidArgument if the ISA is unsupported.
const KernelTable& table_for(Isa isa);

Isa best_supported() noexcept;

/// Kernels used by the library; defaults to best_supported().
const KernelTable& active() noexcept;

/// Overrides the active kernels process-wide (tests, benchmarks, --isa).
void set_active(Isa isa);

}  // namespace tensortopsis::kernels
