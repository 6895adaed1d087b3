#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "tensortopsis/decision_tensor.hpp"
#include "tensortopsis/weights.hpp"

// The bundled HDI panel: ten emerging economies, three benefit criteria
// (life expectancy c1, education c2, gross national income per capita c3),
// six samples 1990..2015 in five-year steps.

namespace tensortopsis::hdi {

inline constexpr std::array<std::string_view, 10> kCountries = {"BR", "CN", "IN", "ID", "MY",
                                                                "MX", "PH", "RU", "ZA", "TR"};
inline constexpr std::array<std::string_view, 3> kCriteria = {"c1", "c2", "c3"};
inline constexpr std::array<std::string_view, 6> kYears = {"1990", "1995", "2000", "2005", "2010", "2015"};

/// The four features used in the experiment, in tensor order.
inline constexpr std::array<std::string_view, 4> kFeatureNames = {"current", "average", "cv", "slope"};

/// The panel as an in-memory tensor (all criteria benefit).
DecisionTensor panel();

/// Equal criterion weights 0.333 renormalized to the simplex.
std::vector<double> criterion_weights();

/// Feature-weight specs of strategy 1..5 over kFeatureNames. Strategies 1-4
/// put all weight on one feature; strategy 5 samples.
std::vector<AlphaSpec> strategy(int number);

}  // namespace tensortopsis::hdi
