#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tensortopsis/decision_tensor.hpp"
#include "tensortopsis/error.hpp"

#ifndef TENSORTOPSIS_DATA_DIR
#define TENSORTOPSIS_DATA_DIR "data"
#endif

namespace testing_support {

inline std::string data_path(const std::string& name) { return std::string(TENSORTOPSIS_DATA_DIR) + "/" + name; }

inline std::vector<std::string> labels(const std::string& prefix, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

/// Random tensor with entries in [lo, hi).
inline tensortopsis::DecisionTensor random_tensor(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t T,
                                                  double lo = 0.5, double hi = 10.0,
                                                  std::vector<tensortopsis::Direction> dirs = {}) {
    std::uniform_real_distribution<double> u(lo, hi);
    tensortopsis::Tensor3 values(m, n, T);
    for (auto& v : values.data()) v = u(rng);
    if (dirs.empty()) dirs.assign(n, tensortopsis::Direction::Benefit);
    return {std::move(values), labels("a", m), labels("c", n), labels("t", T), std::move(dirs)};
}

}  // namespace testing_support

/// Expects `stmt` to throw tensortopsis::Error with the given code.
#define EXPECT_ERROR_CODE(stmt, expected_code)                                   \
    do {                                                                         \
        bool thrown_ = false;                                                    \
        try {                                                                    \
            stmt;                                                                \
        } catch (const tensortopsis::Error& e_) {                                \
            thrown_ = true;                                                      \
            EXPECT_EQ(e_.code(), tensortopsis::ErrorCode::expected_code)         \
                << "actual: " << tensortopsis::to_string(e_.code()) << " " << e_.what(); \
        }                                                                        \
        EXPECT_TRUE(thrown_) << "expected " #expected_code;                     \
    } while (0)
