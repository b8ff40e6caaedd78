// Constructors for the two grating designs studied here: the Kronig-Penney
// slip grating (uniform FBG + periodic phase slips, apodized) and the Tamm
// grating (linear phase ramp for x < 0 against a slip staircase for x > 0).

#pragma once

#include "fbgdirac/tmm.hpp"

namespace fbgdirac {

/// Super-Gaussian amplitude taper. The envelope is m0 on the central plateau
/// (plateau_fraction of the total length) and falls off as
/// exp(-((|x| - x_plateau)/ramp_width)^(2*order)) on both ramps; the
/// outermost sample must come out <= 1e-4 of the plateau value.
struct ApodizationSpec {
    int order = 3;                 // super-Gaussian exponent 2*order
    double ramp_width = 0.0;       // 0 = default L/12
    double plateau_fraction = 0.75;
};

/// Slip-lattice design: plateau coupling m0, slips of area V0 every a.
struct KpGratingSpec {
    double m0 = 1.0;
    double V0 = 0.0;
    double a = 2.0;
    double L = 50.0;
    ApodizationSpec apod{};
    int segments_per_ramp = 2500;
};

/// Surface-state design: adds the constant surface potential V1 (phase slope
/// 2*V1) on the x < 0 half; slips at x = n*a, n >= 1, on the x > 0 half.
///
/// Physically the two halves are adjacent uniform gratings with slightly
/// different periods: a constant slope d(phi)/dx = 2*V1 rewrites the
/// modulation as cos(2 pi z / Lambda') with a fractional period change
/// delta(Lambda)/Lambda = -V1 * delta_n / (2 n0), i.e. the left half's Bragg
/// resonance sits V1 detuning units above the right half's.
struct TammGratingSpec {
    double m0 = 1.0;
    double V0 = 0.0;
    double a = 2.0;
    double V1 = 0.0;
    double L = 50.0;
    ApodizationSpec apod{};
    int segments_per_ramp = 2500;
};

/// Slip position (left to right) paired with its running x coordinate;
/// used by tests and by the CLI metadata block.
struct SlipPosition {
    std::size_t element_index = 0;
    double x = 0.0;
};

/// Kronig-Penney grating on [-L/2, L/2]: apodized coupling envelope,
/// phase slips Delta_phi = 2*V0 at every lattice site x = n*a strictly
/// inside the support, zero phase slope everywhere.
/// Throws std::invalid_argument for invalid specs, a plateau holding fewer
/// than 2 slips ("lattice too short"), or an envelope that fails to decay
/// to <= 1e-4 m0 at the boundary.
GratingProfile build_kp_grating(const KpGratingSpec& spec);

/// Tamm grating on [-L/2, L/2]: x < 0 half carries phase slope 2*V1 (the
/// period-detuned section), x > 0 half carries the slip staircase at
/// x = a, 2a, ... strictly inside the support; no slip at x = 0.
GratingProfile build_tamm_grating(const TammGratingSpec& spec);

/// Unapodized uniform grating (constant kappa, optional phase slope); the
/// closed-form reference structure.
GratingProfile build_uniform_grating(double kappa, double L, double phase_slope = 0.0);

/// Slip coordinates of a built profile, recovered from cumulative segment
/// lengths.
std::vector<SlipPosition> slip_positions(const GratingProfile& g, double x_left);

} // namespace fbgdirac
