#include "fbgdirac/core.hpp"

#include <cmath>

namespace fbgdirac {

void DiracParams::validate() const
{
    if (!(m0 > 0.0) || !std::isfinite(m0)) {
        throw std::invalid_argument("DiracParams: m0 must be positive and finite");
    }
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument("DiracParams: a must be positive and finite");
    }
    if (!std::isfinite(V0)) {
        throw std::invalid_argument("DiracParams: V0 must be finite");
    }
    if (V1.has_value() && (!(*V1 > 0.0) || !(*V1 < m0))) {
        throw std::invalid_argument("DiracParams: Tamm problems require 0 < V1 < m0");
    }
}

void DiracParams::validate_tamm() const
{
    validate();
    if (!V1.has_value()) {
        throw std::invalid_argument("DiracParams: V1 missing (required for Tamm problems)");
    }
}

Complex kappa_of(Energy E, double m0)
{
    const double d = (E - m0) * (E + m0); // E^2 - m0^2 without loss near |E| ~ m0
    if (d >= 0.0) {
        return {std::sqrt(d), 0.0};
    }
    return {0.0, std::sqrt(-d)};
}

Complex sinc(Complex z)
{
    if (std::abs(z) < 1e-4) {
        const Complex z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

Complex sinhc(Complex z)
{
    if (std::abs(z) < 1e-4) {
        const Complex z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sinh(z) / z;
}

} // namespace fbgdirac
