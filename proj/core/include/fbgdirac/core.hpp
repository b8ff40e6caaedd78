// Shared domain types and unit conventions.
//
// Everything in this library works in the normalized units of the
// one-dimensional Dirac picture of Bragg scattering: lengths in units of the
// characteristic scale Z, times in units of T, and the energy E equal to the
// normalized optical frequency detuning from the Bragg reference (E > 0 means
// above the Bragg frequency). Conversion to physical fibre units lives in
// units.hpp and nowhere else.

#pragma once

#include <complex>
#include <optional>
#include <stdexcept>

namespace fbgdirac {

using Complex = std::complex<double>;

/// Normalized energy = frequency detuning from the Bragg frequency.
/// Both signs are physical.
using Energy = double;

/// Lattice parameters of the Dirac-Kronig-Penney model: rest mass m0 (the
/// coupling plateau of the realizing grating), delta-barrier area V0 (half
/// the phase-slip amplitude), lattice period a, and, for surface (Tamm)
/// problems only, the constant potential V1 on the x < 0 side.
struct DiracParams {
    double m0 = 1.0;
    double V0 = 0.0;
    double a = 1.0;
    std::optional<double> V1{};

    /// Throws std::invalid_argument unless m0 > 0, a > 0 and, when V1 is
    /// present, 0 < V1 < m0.
    void validate() const;

    /// Validate including the Tamm-side requirement that V1 is present.
    void validate_tamm() const;
};

/// State vector propagated by the transfer matrices: the slowly-varying
/// envelopes of the forward (phi1) and backward (phi2) waves. Scattering
/// states are not normalized.
struct AmplitudePair {
    Complex phi1{};
    Complex phi2{};
};

/// kappa = sqrt(E^2 - m0^2) on the branch that is real and >= 0 for
/// |E| >= m0 and positive imaginary inside the mass gap |E| < m0.
/// Continuous across the branch points E = +-m0, even in E.
Complex kappa_of(Energy E, double m0);

/// sin(z)/z with the removable singularity at z = 0 filled by its series.
Complex sinc(Complex z);

/// sinh(z)/z with the removable singularity at z = 0 filled by its series.
Complex sinhc(Complex z);

} // namespace fbgdirac
