#include "fbgdirac/tmm.hpp"

#include <cmath>

namespace fbgdirac {

double GratingProfile::total_length() const
{
    double L = 0.0;
    for (const auto& el : elements) {
        if (const auto* s = std::get_if<Segment>(&el)) {
            L += s->length;
        }
    }
    return L;
}

void GratingProfile::validate() const
{
    bool has_segment = false;
    for (const auto& el : elements) {
        if (const auto* s = std::get_if<Segment>(&el)) {
            has_segment = true;
            if (!(s->length > 0.0) || !std::isfinite(s->length)) {
                throw std::invalid_argument("GratingProfile: segment length must be positive and finite");
            }
            if (!(s->kappa >= 0.0) || !std::isfinite(s->kappa) || !std::isfinite(s->phase_slope)) {
                throw std::invalid_argument("GratingProfile: segment kappa must be >= 0 "
                                            "and phase_slope finite");
            }
        } else {
            const auto& ps = std::get<PhaseSlip>(el);
            if (!std::isfinite(ps.delta_phi)) {
                throw std::invalid_argument("GratingProfile: slip delta_phi must be finite");
            }
        }
    }
    if (!has_segment) {
        throw std::invalid_argument("GratingProfile: at least one segment required");
    }
}

Mat2 segment_matrix(const Segment& s, Energy E)
{
    const double delta = E - 0.5 * s.phase_slope;
    const double g2 = (s.kappa - delta) * (s.kappa + delta); // kappa^2 - delta^2
    const Complex gamma = (g2 >= 0.0) ? Complex(std::sqrt(g2), 0.0)
                                      : Complex(0.0, std::sqrt(-g2));
    const Complex z = gamma * s.length;
    const Complex ch = std::abs(z) < 1e-4 ? 1.0 + z * z * (0.5 + z * z / 24.0)
                                          : std::cosh(z);
    const Complex sh_over_g = s.length * sinhc(z); // sinh(gamma L) / gamma
    const Complex i(0.0, 1.0);
    return {ch + i * delta * sh_over_g, i * s.kappa * sh_over_g,
            -i * s.kappa * sh_over_g, ch - i * delta * sh_over_g};
}

Mat2 slip_matrix(const PhaseSlip& ps)
{
    const Complex phase = std::polar(1.0, 0.5 * ps.delta_phi);
    return {std::conj(phase), 0.0, 0.0, phase};
}

Mat2 total_matrix(const GratingProfile& g, Energy E)
{
    g.validate();
    Mat2 M;
    for (const auto& el : g.elements) {
        const Mat2 m = std::holds_alternative<Segment>(el)
            ? segment_matrix(std::get<Segment>(el), E)
            : slip_matrix(std::get<PhaseSlip>(el));
        M = m * M;
    }
    return M;
}

ScatterResult scattering(const GratingProfile& g, Energy E)
{
    const Mat2 M = total_matrix(g, E);
    const double growth = std::abs(M.m22);
    if (growth < 1e-300) {
        throw std::runtime_error("scattering: ill-conditioned total matrix (|M22| underflow)");
    }
    ScatterResult res;
    res.t = 1.0 / M.m22;
    res.r = -M.m21 / M.m22;
    res.growth = growth;
    res.conservation_residual = std::abs(std::norm(res.t) + std::norm(res.r) - 1.0);
    return res;
}

SpectralResponse sweep(const GratingProfile& g, std::span<const double> grid)
{
    g.validate();
    SpectralResponse out;
    const std::size_t n = grid.size();
    out.energies.assign(grid.begin(), grid.end());
    out.t.resize(n);
    out.r.resize(n);
    out.conservation_residual.resize(n);
    out.ok.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ScatterResult res = scattering(g, grid[i]);
        out.t[i] = res.t;
        out.r[i] = res.r;
        out.conservation_residual[i] = res.conservation_residual;
        out.ok[i] = res.conservation_residual <= 1e-8 ? 1 : 0;
    }
    return out;
}

} // namespace fbgdirac
