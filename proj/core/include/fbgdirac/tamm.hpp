// Relativistic Tamm surface states of the semi-infinite lattice: roots of
// kappa cot(kappa a) = V1 cot(V0) - K in the interval (m0, m0 + V1), with
// K = sqrt(m0^2 - (E - V1)^2), subject to E - V1 - K cot(V0) > 0 and to gap
// membership in the infinite-lattice band structure.

#pragma once

#include "fbgdirac/bands.hpp"
#include "fbgdirac/core.hpp"

#include <vector>

namespace fbgdirac {

struct TammState {
    double E0 = 0.0;       // surface-state energy, m0 < E0 < m0 + V1
    double K = 0.0;        // decay constant into the x < 0 region
    double kappa = 0.0;    // momentum sqrt(E0^2 - m0^2) in the lattice region
    double residual = 0.0; // |f(E0)| at convergence
};

/// Surface-state condition residual f(E) = kappa cot(kappa a) - V1 cot(V0) + K.
/// Defined on the open interval m0 < E < m0 + V1.
/// Throws std::invalid_argument when V1 is missing/out of range, when E is
/// outside the interval, or when V0 is an integer multiple of pi
/// ("V0 degenerate": cot(V0) blows up). Throws std::domain_error when
/// kappa*a is within 1e-9 of a cotangent pole n*pi; find_tamm_states splits
/// its scan intervals there.
double tamm_residual(Energy E, const DiracParams& p);

/// Locate every Tamm surface state: split (m0, m0+V1) at the cotangent
/// poles, scan each piece for sign changes of tamm_residual, refine roots by
/// bisection to |f| <= tolerance, and keep only roots that satisfy the
/// validity constraint E - V1 - K cot(V0) > 0 and lie in a gap of the
/// infinite lattice. Returns states sorted by E0; an empty list is a valid
/// outcome, not an error.
std::vector<TammState> find_tamm_states(const DiracParams& p, double tolerance = 1e-10,
                                        int scan_points_per_interval = 100000);

} // namespace fbgdirac
