// Conversion between the normalized model units and physical fibre units:
// Z = 2 n0 / (k_B dn) = lambda_B / (pi dn), T = Z n0 / c, and one unit of
// detuning E equals 1/(2 pi T) of nonangular frequency.

#pragma once

namespace fbgdirac {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s, exact

struct PhysicalScales {
    // inputs
    double n0 = 0.0;       // effective mode index
    double delta_n = 0.0;  // peak index change
    double lambda_B = 0.0; // Bragg wavelength, meters
    // derived
    double Z = 0.0;      // characteristic length, meters
    double T = 0.0;      // characteristic time, seconds
    double f_unit = 0.0; // Hz of nonangular detuning per unit E

    /// Coupled-mode theory assumes a weak grating; false when
    /// delta_n / n0 > 0.01 (callers should warn).
    bool weak_grating() const { return delta_n / n0 <= 0.01; }
};

/// Derive Z, T and the frequency unit from fibre constants. The group
/// velocity is taken as c / n0 with no dispersion correction. Throws
/// std::invalid_argument on non-positive inputs.
PhysicalScales derive_scales(double n0, double delta_n, double lambda_B);

/// Signed physical detuning (Hz) from the Bragg frequency; E > 0 means
/// above the Bragg frequency.
double detuning_to_frequency(double E, const PhysicalScales& scales);

/// Inverse of detuning_to_frequency.
double frequency_to_detuning(double f_hz, const PhysicalScales& scales);

/// Physical length (meters) of a normalized length.
double length_to_meters(double x, const PhysicalScales& scales);

} // namespace fbgdirac
