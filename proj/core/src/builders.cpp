#include "fbgdirac/builders.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fbgdirac {

namespace {

constexpr double kBoundaryEnvelopeLimit = 1e-4; // relative to the plateau value

struct Taper {
    double plateau_edge; // envelope is m0 for |x| <= plateau_edge
    double width;
    int order;
    double m0;

    double operator()(double x) const
    {
        const double ax = std::abs(x);
        if (ax <= plateau_edge) {
            return m0;
        }
        const double u = (ax - plateau_edge) / width;
        return m0 * std::exp(-std::pow(u * u, order));
    }
};

void check_apod(const ApodizationSpec& apod, double L, double& ramp_width)
{
    if (apod.order < 1) {
        throw std::invalid_argument("builders: apodization order must be >= 1");
    }
    if (!(apod.plateau_fraction > 0.0) || !(apod.plateau_fraction < 1.0)) {
        throw std::invalid_argument("builders: plateau_fraction must be in (0, 1)");
    }
    ramp_width = apod.ramp_width > 0.0 ? apod.ramp_width : L / 12.0;
    if (!(L > 4.0 * ramp_width)) {
        throw std::invalid_argument("builders: L must exceed 4x the ramp width");
    }
}

// Assemble segments between sorted breakpoints, inserting a slip matrix
// element wherever a breakpoint is a slip site.
GratingProfile assemble(const std::vector<double>& slips_x, double delta_phi,
                        double half, const Taper& taper, int segments_per_ramp,
                        double slope_left, double m0)
{
    std::set<double> bps{-half, half, -taper.plateau_edge, taper.plateau_edge, 0.0};
    bps.insert(slips_x.begin(), slips_x.end());
    const double ramp_len = half - taper.plateau_edge;
    for (int k = 1; k < segments_per_ramp; ++k) {
        const double off = ramp_len * static_cast<double>(k) / segments_per_ramp;
        bps.insert(-half + off);
        bps.insert(taper.plateau_edge + off);
    }

    std::vector<double> breaks(bps.begin(), bps.end());
    // collapse breakpoints closer than rounding allows to distinguish
    const double merge_tol = 1e-9 * (2.0 * half);
    std::vector<double> merged;
    merged.reserve(breaks.size());
    for (const double b : breaks) {
        if (merged.empty() || b - merged.back() > merge_tol) {
            merged.push_back(b);
        }
    }
    // slip coordinates win over nearby ramp-sampling points, so slip sites
    // stay exact multiples of the lattice period
    for (const double sx : slips_x) {
        auto it = std::lower_bound(merged.begin(), merged.end(), sx - merge_tol);
        double* best = nullptr;
        for (; it != merged.end() && *it <= sx + merge_tol; ++it) {
            if (!best || std::abs(*it - sx) < std::abs(*best - sx)) {
                best = &*it;
            }
        }
        if (best) {
            *best = sx;
        }
    }

    const auto is_slip = [&](double x) {
        auto it = std::lower_bound(slips_x.begin(), slips_x.end(), x - merge_tol);
        return it != slips_x.end() && std::abs(*it - x) <= merge_tol;
    };

    GratingProfile g;
    g.elements.reserve(merged.size() + slips_x.size());
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        if (is_slip(merged[i])) {
            g.elements.emplace_back(PhaseSlip{delta_phi});
        }
        // midpoint envelope = second-order Magnus step for the varying taper
        const double xm = 0.5 * (merged[i] + merged[i + 1]);
        g.elements.emplace_back(Segment{merged[i + 1] - merged[i], taper(xm),
                                        xm < 0.0 ? slope_left : 0.0});
    }

    // Free-field asymptotics need a negligible boundary coupling.
    const double edge_kappa =
        std::max(std::get<Segment>(g.elements.front()).kappa,
                 std::get<Segment>(g.elements.back()).kappa);
    if (edge_kappa > kBoundaryEnvelopeLimit * m0) {
        throw std::invalid_argument(
            "builders: apodization too wide, boundary kappa exceeds 1e-4 of the plateau");
    }
    return g;
}

} // namespace

GratingProfile build_kp_grating(const KpGratingSpec& spec)
{
    if (!(spec.m0 > 0.0) || !(spec.a > 0.0) || !(spec.L > 0.0) || spec.segments_per_ramp < 1) {
        throw std::invalid_argument("build_kp_grating: m0, a, L must be positive");
    }
    double w = 0.0;
    check_apod(spec.apod, spec.L, w);
    const double half = 0.5 * spec.L;
    const double pe = spec.apod.plateau_fraction * half;

    std::vector<double> slips;
    const auto n_lo = static_cast<long>(std::floor(-half / spec.a)) - 1;
    const auto n_hi = static_cast<long>(std::ceil(half / spec.a)) + 1;
    for (long n = n_lo; n <= n_hi; ++n) {
        const double x = static_cast<double>(n) * spec.a;
        if (x > -half && x < half) {
            slips.push_back(x);
        }
    }
    const auto in_plateau = std::count_if(slips.begin(), slips.end(),
                                          [pe](double x) { return std::abs(x) < pe; });
    if (in_plateau < 2) {
        throw std::invalid_argument("build_kp_grating: lattice too short "
                                    "(plateau holds fewer than 2 slips)");
    }

    const Taper taper{pe, w, spec.apod.order, spec.m0};
    return assemble(slips, 2.0 * spec.V0, half, taper, spec.segments_per_ramp,
                    0.0, spec.m0);
}

GratingProfile build_tamm_grating(const TammGratingSpec& spec)
{
    if (!(spec.m0 > 0.0) || !(spec.a > 0.0) || !(spec.L > 0.0) || spec.segments_per_ramp < 1) {
        throw std::invalid_argument("build_tamm_grating: m0, a, L must be positive");
    }
    if (!(spec.V1 >= 0.0) || !(spec.V1 < spec.m0)) {
        throw std::invalid_argument("build_tamm_grating: V1 must satisfy 0 <= V1 < m0");
    }
    double w = 0.0;
    check_apod(spec.apod, spec.L, w);
    const double half = 0.5 * spec.L;
    const double pe = spec.apod.plateau_fraction * half;
    if (pe < 2.0 * spec.a) {
        throw std::invalid_argument("build_tamm_grating: interface must sit at least "
                                    "2a inside the plateau");
    }

    // slips at x = a, 2a, ... on the x > 0 half only; none at the interface
    std::vector<double> slips;
    for (long n = 1; static_cast<double>(n) * spec.a < half; ++n) {
        slips.push_back(static_cast<double>(n) * spec.a);
    }
    const auto in_plateau = std::count_if(slips.begin(), slips.end(),
                                          [pe](double x) { return x < pe; });
    if (in_plateau < 2) {
        throw std::invalid_argument("build_tamm_grating: lattice too short "
                                    "(plateau holds fewer than 2 slips)");
    }

    const Taper taper{pe, w, spec.apod.order, spec.m0};
    return assemble(slips, 2.0 * spec.V0, half, taper, spec.segments_per_ramp,
                    2.0 * spec.V1, spec.m0);
}

GratingProfile build_uniform_grating(double kappa, double L, double phase_slope)
{
    if (!(L > 0.0) || !(kappa >= 0.0) || !std::isfinite(kappa) || !std::isfinite(phase_slope)) {
        throw std::invalid_argument("build_uniform_grating: L must be positive, kappa >= 0");
    }
    GratingProfile g;
    g.elements.emplace_back(Segment{L, kappa, phase_slope});
    return g;
}

std::vector<SlipPosition> slip_positions(const GratingProfile& g, double x_left)
{
    std::vector<SlipPosition> out;
    double x = x_left;
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        if (const auto* s = std::get_if<Segment>(&g.elements[i])) {
            x += s->length;
        } else {
            out.push_back({i, x});
        }
    }
    return out;
}

} // namespace fbgdirac
