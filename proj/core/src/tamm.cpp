#include "fbgdirac/tamm.hpp"

#include <cmath>
#include <numbers>

namespace fbgdirac {

namespace {

constexpr double kEndpointMargin = 1e-9; // open interval: kappa=0 / K=0 ends are degenerate
constexpr double kPoleGuard = 1e-9;      // kappa*a this close to n*pi counts as a pole

double cot_V0(const DiracParams& p)
{
    const double s = std::sin(p.V0);
    if (std::abs(s) < 1e-12) {
        throw std::invalid_argument("tamm: V0 degenerate (integer multiple of pi)");
    }
    return std::cos(p.V0) / s;
}

double residual_impl(Energy E, const DiracParams& p, double cotV0)
{
    const double kappa = std::sqrt((E - p.m0) * (E + p.m0));
    const double ka = kappa * p.a;
    const double n = std::round(ka / std::numbers::pi);
    if (n >= 1.0 && std::abs(ka - n * std::numbers::pi) < kPoleGuard) {
        throw std::domain_error("tamm_residual: cotangent pole (kappa*a ~= n*pi)");
    }
    const double V1 = *p.V1;
    const double K = std::sqrt((p.m0 - (E - V1)) * (p.m0 + (E - V1)));
    // kappa cot(kappa a) = cos(ka) / (a sinc(ka)): finite at kappa -> 0.
    const double kcot = std::cos(ka) / (p.a * sinc(Complex(ka, 0.0)).real());
    return kcot - V1 * cotV0 + K;
}

} // namespace

double tamm_residual(Energy E, const DiracParams& p)
{
    p.validate_tamm();
    const double cotV0 = cot_V0(p);
    if (!(E > p.m0) || !(E < p.m0 + *p.V1)) {
        throw std::invalid_argument("tamm_residual: E outside the search interval (m0, m0+V1)");
    }
    return residual_impl(E, p, cotV0);
}

std::vector<TammState> find_tamm_states(const DiracParams& p, double tolerance,
                                        int scan_points_per_interval)
{
    p.validate_tamm();
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("find_tamm_states: tolerance must be positive");
    }
    if (scan_points_per_interval < 100) {
        throw std::invalid_argument("find_tamm_states: scan density too low");
    }
    const double cotV0 = cot_V0(p);
    const double V1 = *p.V1;
    const double lo = p.m0 + kEndpointMargin;
    const double hi = p.m0 + V1 - kEndpointMargin;
    if (!(lo < hi)) {
        return {};
    }

    // Cut the interval at every cotangent pole kappa*a = n*pi so each piece
    // is smooth and every remaining sign change is a genuine root.
    std::vector<double> cuts{lo};
    for (int n = 1;; ++n) {
        const double kp = n * std::numbers::pi / p.a;
        const double Ep = std::sqrt(p.m0 * p.m0 + kp * kp);
        if (Ep >= hi) {
            break;
        }
        if (Ep > lo) {
            cuts.push_back(Ep);
        }
    }
    cuts.push_back(hi);

    const int scan_points = scan_points_per_interval;
    constexpr double kPoleShrink = 1e-8;

    const auto f = [&](double E) { return residual_impl(E, p, cotV0); };

    std::vector<TammState> states;
    for (std::size_t piece = 0; piece + 1 < cuts.size(); ++piece) {
        const double s = cuts[piece] + (piece == 0 ? 0.0 : kPoleShrink);
        const double e = cuts[piece + 1] - (piece + 2 == cuts.size() ? 0.0 : kPoleShrink);
        if (!(s < e)) {
            continue;
        }
        double prevE = s;
        double prevF = f(s);
        for (int i = 1; i <= scan_points; ++i) {
            const double E = s + (e - s) * static_cast<double>(i) / scan_points;
            const double F = f(E);
            if (std::signbit(prevF) != std::signbit(F)) {
                double blo = prevE, bhi = E, flo = prevF;
                double mid = 0.5 * (blo + bhi);
                double fm = f(mid);
                for (int it = 0; it < 200 && std::abs(fm) > tolerance; ++it) {
                    if (std::signbit(flo) == std::signbit(fm)) {
                        blo = mid;
                        flo = fm;
                    } else {
                        bhi = mid;
                    }
                    mid = 0.5 * (blo + bhi);
                    fm = f(mid);
                }
                TammState st;
                st.E0 = mid;
                st.residual = std::abs(fm);
                st.kappa = std::sqrt((mid - p.m0) * (mid + p.m0));
                st.K = std::sqrt((p.m0 - (mid - V1)) * (p.m0 + (mid - V1)));
                states.push_back(st);
            }
            prevE = E;
            prevF = F;
        }
    }

    // Validity constraint from the boundary-condition analysis, then gap
    // membership in the infinite lattice.
    std::vector<TammState> kept;
    if (!states.empty()) {
        const BandStructure bs =
            find_bands(p, p.m0 - 1.0, p.m0 + V1 + 1.0);
        for (const auto& st : states) {
            if (st.E0 - V1 - st.K * cotV0 > 0.0 && bs.in_gap(st.E0)) {
                kept.push_back(st);
            }
        }
    }
    return kept;
}

} // namespace fbgdirac
