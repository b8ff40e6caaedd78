#include "fbgdirac/bands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fbgdirac {

namespace {

// Bands that merely touch |rhs| = 1 (e.g. V0 = n*pi, where the analytic rhs
// is -cos(kappa a) but floating-point sin(n*pi) != 0 leaves a ~1e-15 excess)
// must not be split by rounding noise. Genuine gaps exceed 1 by far more.
constexpr double kBandSlack = 1e-12;

double rhs_impl(Energy E, const DiracParams& p, bool nonrel)
{
    const Complex kappa = kappa_of(E, p.m0);
    const Complex ka = kappa * p.a;
    // sin(kappa a)/kappa = a * sinc(kappa a); finite at the branch points.
    const Complex sin_term = p.a * sinc(ka);
    const Complex value = nonrel
        ? std::cos(ka) + (p.m0 * p.V0) * sin_term
        : std::cos(p.V0) * std::cos(ka) + E * std::sin(p.V0) * sin_term;
    if (std::abs(value.imag()) > 1e-10) {
        throw std::logic_error("dispersion rhs acquired an imaginary part: " +
                               std::to_string(value.imag()));
    }
    return value.real();
}

} // namespace

double dispersion_rhs(Energy E, const DiracParams& p)
{
    p.validate();
    return rhs_impl(E, p, false);
}

double nonrel_dispersion_rhs(Energy E, const DiracParams& p)
{
    p.validate();
    return rhs_impl(E, p, true);
}

std::optional<double> bloch_momentum(Energy E, const DiracParams& p)
{
    const double rhs = dispersion_rhs(E, p);
    if (std::abs(rhs) > 1.0) {
        return std::nullopt;
    }
    return std::acos(rhs) / p.a;
}

std::vector<BandInterval> BandStructure::gaps() const
{
    std::vector<BandInterval> out;
    double cursor = window_lo;
    for (const auto& b : bands) {
        if (b.lo > cursor) {
            out.push_back({cursor, b.lo});
        }
        cursor = b.hi;
    }
    if (cursor < window_hi) {
        out.push_back({cursor, window_hi});
    }
    return out;
}

bool BandStructure::in_gap(double E) const
{
    for (const auto& g : gaps()) {
        if (E > g.lo && E < g.hi) {
            return true;
        }
    }
    return false;
}

bool BandStructure::in_band(double E) const
{
    return std::any_of(bands.begin(), bands.end(),
                       [E](const BandInterval& b) { return b.contains(E); });
}

BandStructure find_bands(const DiracParams& p, double E_min, double E_max,
                         FindBandsOptions opt)
{
    p.validate();
    if (!(E_min < E_max)) {
        throw std::invalid_argument("find_bands: window requires E_min < E_max");
    }
    const double span = E_max - E_min;
    int n = opt.scan_points;
    if (n == 0) {
        n = std::max(100, static_cast<int>(std::ceil(span / 12.0 * 20000.0)));
    }
    if (n < 100) {
        throw std::invalid_argument("find_bands: scan_points must be >= 100");
    }
    if (!(opt.edge_tolerance > 0.0)) {
        throw std::invalid_argument("find_bands: edge_tolerance must be positive");
    }
    // Bands can be narrower than the grid near high |E|; refuse scans that
    // could step over one entirely.
    const double e_abs = std::max(std::abs(E_min), std::abs(E_max));
    const double max_step = std::numbers::pi / (2.0 * p.a * e_abs);
    if (span / n > max_step) {
        throw std::invalid_argument("find_bands: resolution too coarse for this window"
                                    " (increase scan_points)");
    }

    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n) + 3);
    for (int i = 0; i <= n; ++i) {
        grid.push_back(E_min + span * static_cast<double>(i) / n);
    }
    for (const double bp : {-p.m0, p.m0}) { // kappa branch points
        if (bp > E_min && bp < E_max) {
            grid.push_back(bp);
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const auto excess = [&](double E) { return std::abs(rhs_impl(E, p, false)) - 1.0 - kBandSlack; };
    const auto allowed = [&](double E) { return excess(E) <= 0.0; };

    // Refine an allowed/forbidden transition inside [lo, hi] by bisection,
    // until both the bracket width and the |rhs| - 1 residual at the
    // midpoint are within the edge tolerance.
    const auto refine_edge = [&](double lo, double hi, bool lo_allowed) {
        double mid = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
            if ((hi - lo) <= 0.25 * opt.edge_tolerance &&
                std::abs(excess(mid) + kBandSlack) <= opt.edge_tolerance) {
                break;
            }
            if (allowed(mid) == lo_allowed) {
                lo = mid;
            } else {
                hi = mid;
            }
            mid = 0.5 * (lo + hi);
        }
        return mid;
    };

    BandStructure out;
    out.params = p;
    out.window_lo = E_min;
    out.window_hi = E_max;
    out.edge_tolerance = opt.edge_tolerance;

    bool prev_allowed = allowed(grid.front());
    double open_lo = prev_allowed ? E_min : 0.0;
    bool open = prev_allowed;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const bool cur_allowed = allowed(grid[i]);
        if (cur_allowed == prev_allowed) {
            continue;
        }
        const double edge = refine_edge(grid[i - 1], grid[i], prev_allowed);
        if (open) {
            out.bands.push_back({open_lo, edge});
            open = false;
        } else {
            open_lo = edge;
            open = true;
        }
        prev_allowed = cur_allowed;
    }
    if (open) {
        out.bands.push_back({open_lo, E_max});
    }
    return out;
}

} // namespace fbgdirac
