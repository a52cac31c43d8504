#include "phasespec/geometry.hpp"

#include <cmath>

namespace phasespec {

namespace {

// (x cos x - sin x)/x^3 and sin(x)/x, stable through x -> 0.
// Below the switch point the direct difference loses ~6 digits to
// cancellation, which would break the small-separation limit.
constexpr double kSeriesThreshold = 1e-3;

double cos_sin_combination(double x) {
    if (x < kSeriesThreshold) {
        const double x2 = x * x;
        return -1.0 / 3.0 + x2 * (1.0 / 30.0 + x2 * (-1.0 / 840.0 + x2 / 45360.0));
    }
    return (x * std::cos(x) - std::sin(x)) / (x * x * x);
}

double sinc(double x) {
    if (x < kSeriesThreshold) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

} // namespace

double collective_damping(const AtomPairGeometry& geom) {
    if (!(geom.kr12 > 0.0))
        throw DomainError("kr12 must be positive");
    if (std::abs(geom.cos_theta) > 1.0)
        throw DomainError("|cos_theta| must not exceed 1");
    const double c2 = geom.cos_theta * geom.cos_theta;
    const double x = geom.kr12;
    return 1.5 * ((1.0 - c2) * sinc(x) + (1.0 - 3.0 * c2) * cos_sin_combination(x));
}

} // namespace phasespec
