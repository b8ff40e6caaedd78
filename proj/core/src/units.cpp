#include "fbgdirac/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fbgdirac {

PhysicalScales derive_scales(double n0, double delta_n, double lambda_B)
{
    if (!(n0 > 0.0) || !(delta_n > 0.0) || !(lambda_B > 0.0) ||
        !std::isfinite(n0) || !std::isfinite(delta_n) || !std::isfinite(lambda_B)) {
        throw std::invalid_argument("derive_scales: n0, delta_n, lambda_B must be positive");
    }
    PhysicalScales s;
    s.n0 = n0;
    s.delta_n = delta_n;
    s.lambda_B = lambda_B;
    const double k_B = 2.0 * std::numbers::pi * n0 / lambda_B;
    s.Z = 2.0 * n0 / (k_B * delta_n); // = lambda_B / (pi delta_n)
    const double v_g = kSpeedOfLight / n0;
    s.T = s.Z / v_g;
    s.f_unit = 1.0 / (2.0 * std::numbers::pi * s.T);
    return s;
}

double detuning_to_frequency(double E, const PhysicalScales& scales)
{
    return E * scales.f_unit;
}

double frequency_to_detuning(double f_hz, const PhysicalScales& scales)
{
    return f_hz / scales.f_unit;
}

double length_to_meters(double x, const PhysicalScales& scales)
{
    return x * scales.Z;
}

} // namespace fbgdirac
