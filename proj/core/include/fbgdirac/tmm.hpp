// Stationary transfer-matrix solver for the coupled-mode equations: piecewise
// uniform grating segments and lumped phase slips, with t(E), r(E) extracted
// from the left-incidence scattering solution.

#pragma once

#include "fbgdirac/core.hpp"

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace fbgdirac {

/// 2x2 complex matrix acting on (phi1, phi2) column vectors.
struct Mat2 {
    Complex m11{1.0}, m12{};
    Complex m21{}, m22{1.0};

    Complex det() const { return m11 * m22 - m12 * m21; }

    friend Mat2 operator*(const Mat2& A, const Mat2& B)
    {
        return {A.m11 * B.m11 + A.m12 * B.m21, A.m11 * B.m12 + A.m12 * B.m22,
                A.m21 * B.m11 + A.m22 * B.m21, A.m21 * B.m12 + A.m22 * B.m22};
    }

    AmplitudePair apply(const AmplitudePair& v) const
    {
        return {m11 * v.phi1 + m12 * v.phi2, m21 * v.phi1 + m22 * v.phi2};
    }
};

/// Uniform grating section: constant coupling kappa and constant phase slope
/// d(phi)/dx over a positive length. A linear phase ramp realizes the
/// constant potential V = phase_slope / 2 and enters the propagator only as
/// the local detuning shift delta = E - phase_slope/2.
struct Segment {
    double length = 0.0;
    double kappa = 0.0;
    double phase_slope = 0.0;
};

/// Lumped jump delta_phi of the modulation phase, realizing a delta barrier
/// of area V0 = delta_phi / 2. A 2*pi slip acts as the identity on every
/// power spectrum.
struct PhaseSlip {
    double delta_phi = 0.0;
};

using GratingElement = std::variant<Segment, PhaseSlip>;

/// Ordered left-to-right sequence of segments and phase slips.
struct GratingProfile {
    std::vector<GratingElement> elements;

    double total_length() const;

    /// Throws std::invalid_argument unless there is at least one segment,
    /// every segment has positive finite length, and all parameters are
    /// finite.
    void validate() const;
};

/// Result of a single-energy scattering solve. conservation_residual is
/// | |t|^2 + |r|^2 - 1 | (the lossless-grating health monitor) and growth is
/// the magnitude of the extraction entry M22 (the per-point condition
/// estimate; it grows like e^{|gamma| L} deep inside a gap).
struct ScatterResult {
    Complex t{};
    Complex r{};
    double conservation_residual = 0.0;
    double growth = 0.0;
};

/// Sampled complex transmission/reflection over an energy grid.
struct SpectralResponse {
    std::vector<double> energies;
    std::vector<Complex> t;
    std::vector<Complex> r;
    std::vector<double> conservation_residual;
    std::vector<std::uint8_t> ok; // conservation within 1e-8 at this point
};

/// Propagator across one segment: with delta = E - phase_slope/2 and
/// gamma = sqrt(kappa^2 - delta^2) (real or positive-imaginary branch),
///   M = [ cosh(gL) + i(delta/g) sinh(gL)    i(kappa/g) sinh(gL)  ]
///       [   -i(kappa/g) sinh(gL)      cosh(gL) - i(delta/g) sinh(gL) ],
/// with the gamma -> 0 entries filled by their series limits. det M = 1.
Mat2 segment_matrix(const Segment& s, Energy E);

/// diag(e^{-i dphi/2}, e^{+i dphi/2}): a jump in phi(x) re-phases the two
/// counterpropagating envelopes oppositely (they carry +-phi/2).
Mat2 slip_matrix(const PhaseSlip& ps);

/// Ordered product of the element matrices, leftmost element applied first.
Mat2 total_matrix(const GratingProfile& g, Energy E);

/// Left-incidence scattering solution: unit forward wave incident from
/// x -> -inf, no backward wave at x -> +inf, which for the total matrix M
/// (acting left to right) gives t = 1/M22 and r = -M21/M22.
/// Throws std::runtime_error("ill-conditioned") on |M22| underflow.
ScatterResult scattering(const GratingProfile& g, Energy E);

/// scattering() per grid point; per-point conservation flags are recorded
/// rather than thrown so a sweep always completes.
SpectralResponse sweep(const GratingProfile& g, std::span<const double> grid);

} // namespace fbgdirac
