#include <atomic>
#include <string>

#include "kernels_impl.hpp"
#include "tensortopsis/error.hpp"
#include "tensortopsis/kernels.hpp"

namespace tensortopsis::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, scalar::scale_columns, scalar::column_extrema,
                              scalar::column_sum_squares, scalar::row_sq_distances};

#if defined(TENSORTOPSIS_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, avx2::scale_columns, avx2::column_extrema, avx2::column_sum_squares,
                            avx2::row_sq_distances};
#endif

std::atomic<const KernelTable*>& active_slot() noexcept {
    static std::atomic<const KernelTable*> slot{&table_for(best_supported())};
    return slot;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

const KernelTable& scalar_table() noexcept { return kScalar; }

bool supported(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(TENSORTOPSIS_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table_for(Isa isa) {
    if (!supported(isa)) {
        throw Error(ErrorCode::InvalidArgument, "kernel variant '" + std::string(to_string(isa)) + "' not available");
    }
#if defined(TENSORTOPSIS_HAVE_AVX2)
    if (isa == Isa::Avx2) return kAvx2;
#endif
    return kScalar;
}

Isa best_supported() noexcept {
    return supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

const KernelTable& active() noexcept { return *active_slot().load(std::memory_order_acquire); }

void set_active(Isa isa) { active_slot().store(&table_for(isa), std::memory_order_release); }

}  // namespace tensortopsis::kernels
