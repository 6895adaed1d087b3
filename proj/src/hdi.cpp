#include "tensortopsis/hdi.hpp"

#include <string>

#include "tensortopsis/error.hpp"

namespace tensortopsis::hdi {

namespace {

// Wide layout: per country, c1 x 6 years, c2 x 6 years, c3 x 6 years.
constexpr double kTable[10][18] = {
    {65.3, 67.6, 70.1, 71.9, 73.3, 74.8, 8.00, 8.95, 9.95, 10.15, 11.05, 11.60, 10065, 10959, 11161, 12032, 14420, 15062},
    {69.0, 69.9, 71.7, 73.7, 75.0, 76.0, 6.80, 7.25, 7.85, 8.75, 9.85, 10.30, 1520, 2508, 3632, 5632, 9387, 13347},
    {57.9, 60.4, 62.6, 64.5, 66.5, 68.4, 5.35, 5.90, 6.45, 7.35, 8.25, 8.55, 1754, 2046, 2522, 3239, 4499, 5814},
    {63.3, 65.0, 66.3, 67.2, 68.1, 69.1, 6.75, 7.20, 8.70, 9.30, 9.95, 10.30, 4337, 5930, 5308, 6547, 8267, 10130},
    {70.7, 71.8, 72.8, 73.6, 74.1, 74.8, 8.10, 8.90, 10.25, 10.15, 11.35, 11.35, 9772, 13439, 14500, 17157, 19725, 23712},
    {70.8, 72.8, 74.4, 75.3, 76.1, 77.0, 8.05, 8.55, 9.15, 9.85, 10.50, 10.80, 12074, 12028, 14388, 14693, 15395, 16249},
    {65.3, 66.1, 66.7, 67.2, 67.7, 68.3, 8.70, 8.95, 9.50, 9.75, 9.75, 10.20, 3962, 4111, 4994, 6058, 7478, 8232},
    {68.0, 66.0, 65.1, 65.8, 68.6, 70.3, 10.95, 10.85, 11.85, 12.60, 13.10, 13.35, 19461, 12011, 12933, 17797, 21075, 22094},
    {62.1, 61.4, 55.9, 51.6, 54.5, 57.9, 8.95, 10.65, 11.00, 11.15, 11.55, 11.75, 9987, 9566, 9719, 10935, 11833, 12110},
    {64.3, 67.0, 70.0, 72.5, 74.2, 75.6, 6.70, 7.20, 8.30, 8.95, 10.55, 11.05, 10494, 11317, 12807, 14987, 16506, 18976},
};

}  // namespace

DecisionTensor panel() {
    std::vector<double> values;
    values.reserve(std::size(kTable) * std::size(kTable[0]));
    for (const auto& row : kTable) values.insert(values.end(), std::begin(row), std::end(row));
    return DecisionTensor(Tensor3(kCountries.size(), kCriteria.size(), kYears.size(), std::move(values)),
                          {kCountries.begin(), kCountries.end()}, {kCriteria.begin(), kCriteria.end()},
                          {kYears.begin(), kYears.end()}, std::vector<Direction>(kCriteria.size(), Direction::Benefit));
}

std::vector<double> criterion_weights() {
    const double printed[] = {0.333, 0.333, 0.333};
    return renormalize(printed);
}

std::vector<AlphaSpec> strategy(int number) {
    switch (number) {
        case 1: return {PointAlpha{1}, PointAlpha{0}, PointAlpha{0}, PointAlpha{0}};
        case 2: return {PointAlpha{0}, PointAlpha{1}, PointAlpha{0}, PointAlpha{0}};
        case 3: return {PointAlpha{0}, PointAlpha{0}, PointAlpha{1}, PointAlpha{0}};
        case 4: return {PointAlpha{0}, PointAlpha{0}, PointAlpha{0}, PointAlpha{1}};
        case 5: return {RemainderAlpha{}, UniformAlpha{0.1, 0.2}, UniformAlpha{0.1, 0.2}, UniformAlpha{0.1, 0.2}};
        default: break;
    }
    throw Error(ErrorCode::ConfigError, "strategy must be 1..5, got " + std::to_string(number));
}

}  // namespace tensortopsis::hdi
