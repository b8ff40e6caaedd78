// Dispersion relation and band structure of the infinite Dirac-Kronig-Penney
// lattice: cos(qa) = cos(V0) cos(kappa a) + (E/kappa) sin(V0) sin(kappa a).

#pragma once

#include "fbgdirac/core.hpp"

#include <optional>
#include <vector>

namespace fbgdirac {

/// Closed interval of allowed energies.
struct BandInterval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
    bool contains(double E) const { return E >= lo && E <= hi; }
};

/// Allowed-band decomposition of a search window, produced by find_bands().
struct BandStructure {
    std::vector<BandInterval> bands; // disjoint, sorted ascending
    DiracParams params;
    double window_lo = 0.0;
    double window_hi = 0.0;
    double edge_tolerance = 0.0;

    /// Gaps between consecutive bands, plus the window-edge remainders when
    /// the window starts or ends inside a forbidden region.
    std::vector<BandInterval> gaps() const;

    /// True when E lies strictly inside one of the gaps.
    bool in_gap(double E) const;

    /// True when E lies in one of the allowed bands (edges included).
    bool in_band(double E) const;
};

/// Right-hand side of the dispersion relation, cos(qa). Real for every real
/// E: inside the mass gap the kappa branch turns the trig functions into
/// their hyperbolic counterparts, and the imaginary residue is checked to be
/// below 1e-10 before being discarded. The kappa = 0 branch points use the
/// series limit cos(V0) + E a sin(V0).
double dispersion_rhs(Energy E, const DiracParams& p);

/// Non-relativistic (ordinary Kronig-Penney) reduction,
/// cos(kappa a) + (m0 V0 / kappa) sin(kappa a). Valid for V0 << 1 and E
/// close to m0; evaluated on the same kappa branch for any E.
double nonrel_dispersion_rhs(Energy E, const DiracParams& p);

/// Bloch wave number for energy E, reported as the positive representative
/// q = arccos(rhs)/a in [0, pi/a]; -q solves the lattice problem too.
/// Absent when |rhs| > 1 (E in a gap).
std::optional<double> bloch_momentum(Energy E, const DiracParams& p);

struct FindBandsOptions {
    int scan_points = 0;          // 0 = auto: 20000 per window span of 12, min 100
    double edge_tolerance = 1e-10;
};

/// Scan |dispersion_rhs| - 1 on a uniform grid (the branch points +-m0 are
/// always inserted as explicit samples), refine every crossing by bisection,
/// and assemble the maximal allowed intervals. Throws std::invalid_argument
/// when the requested resolution could step over a whole band
/// ("resolution too coarse").
BandStructure find_bands(const DiracParams& p, double E_min, double E_max,
                         FindBandsOptions opt = {});

} // namespace fbgdirac
