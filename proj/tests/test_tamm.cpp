#include <doctest.h>

#include "fbgdirac/tamm.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace fbgdirac;

namespace {

const DiracParams kReference{1.0, std::numbers::pi / 2.0, 2.0, 0.8};

// Independent oracle: evaluate the surface-state condition directly and
// locate its roots by a dense scan plus bisection, sharing no code with
// find_tamm_states. Only valid when (m0, m0+V1) contains no cotangent pole
// (true for the parameter sets below).
double oracle_f(double E, double m0, double V0, double a, double V1)
{
    const double kappa = std::sqrt(E * E - m0 * m0);
    const double K = std::sqrt(m0 * m0 - (E - V1) * (E - V1));
    return kappa * (std::cos(kappa * a) / std::sin(kappa * a)) -
           V1 * (std::cos(V0) / std::sin(V0)) + K;
}

std::vector<double> oracle_roots(double m0, double V0, double a, double V1)
{
    const double lo = m0 + 1e-9;
    const double hi = m0 + V1 - 1e-9;
    const int n = 1000000;
    std::vector<double> roots;
    double prevE = lo;
    double prevF = oracle_f(lo, m0, V0, a, V1);
    for (int i = 1; i <= n; ++i) {
        const double E = lo + (hi - lo) * i / n;
        const double F = oracle_f(E, m0, V0, a, V1);
        if ((prevF < 0.0) != (F < 0.0)) {
            double blo = prevE, bhi = E, flo = prevF;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (blo + bhi);
                const double fm = oracle_f(mid, m0, V0, a, V1);
                if ((flo < 0.0) == (fm < 0.0)) {
                    blo = mid;
                    flo = fm;
                } else {
                    bhi = mid;
                }
            }
            const double root = 0.5 * (blo + bhi);
            const double K = std::sqrt(m0 * m0 - (root - V1) * (root - V1));
            if (root - V1 - K * (std::cos(V0) / std::sin(V0)) > 0.0) {
                roots.push_back(root);
            }
        }
        prevE = E;
        prevF = F;
    }
    return roots;
}

} // namespace

TEST_SUITE("tamm")
{

TEST_CASE("residual value frozen from the 30-digit evaluation at E = 1.2")
{
    CHECK(tamm_residual(1.2, kReference) == doctest::Approx(1.0817599431867537).epsilon(1e-12));
}

TEST_CASE("V0 = pi/2 removes the V1 cot(V0) term")
{
    for (const double E : {1.1, 1.3, 1.6, 1.75}) {
        const double kappa = std::sqrt(E * E - 1.0);
        const double K = std::sqrt(1.0 - (E - 0.8) * (E - 0.8));
        const double expect = kappa / std::tan(kappa * 2.0) + K;
        CHECK(tamm_residual(E, kReference) == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("residual near the reference root is small")
{
    CHECK(std::abs(tamm_residual(1.474, kReference)) <= 1e-2);
}

TEST_CASE("residual rejects out-of-interval energies and degenerate V0")
{
    CHECK_THROWS_AS(tamm_residual(0.9, kReference), std::invalid_argument);
    CHECK_THROWS_AS(tamm_residual(1.9, kReference), std::invalid_argument);
    const DiracParams degenerate{1.0, std::numbers::pi, 2.0, 0.8};
    CHECK_THROWS_WITH_AS(tamm_residual(1.2, degenerate), doctest::Contains("V0 degenerate"),
                         std::invalid_argument);
}

TEST_CASE("residual signals the cotangent pole")
{
    // a = 4 puts kappa a = pi at E = sqrt(1 + (pi/4)^2), inside (m0, m0+V1)
    const DiracParams p{1.0, std::numbers::pi / 2.0, 4.0, 0.8};
    const double E_pole = std::sqrt(1.0 + std::pow(std::numbers::pi / 4.0, 2));
    CHECK_THROWS_AS(tamm_residual(E_pole, p), std::domain_error);
    CHECK_NOTHROW(tamm_residual(E_pole + 1e-3, p));
}

TEST_CASE("reference parameters give exactly one state at E0 = 1.474 +- 0.001")
{
    const auto states = find_tamm_states(kReference, 1e-10);
    REQUIRE(states.size() == 1);
    const auto& st = states[0];
    CHECK(std::abs(st.E0 - 1.474) <= 1e-3);
    // frozen high-precision root
    CHECK(st.E0 == doctest::Approx(1.4749421704519284).epsilon(1e-9));
    CHECK(st.residual <= 1e-10);

    // recompute the identity from scratch
    CHECK(std::abs(tamm_residual(st.E0, kReference)) <= 1e-10);
    CHECK(st.kappa == doctest::Approx(std::sqrt(st.E0 * st.E0 - 1.0)).epsilon(1e-13));
    CHECK(st.K == doctest::Approx(std::sqrt(1.0 - (st.E0 - 0.8) * (st.E0 - 0.8))).epsilon(1e-13));

    // interval, validity constraint, and gap membership
    CHECK(st.E0 > 1.0);
    CHECK(st.E0 < 1.8);
    CHECK(st.E0 - 0.8 - st.K * std::cos(std::numbers::pi / 2.0) / std::sin(std::numbers::pi / 2.0) > 0.0);
    const auto bs = find_bands(kReference, -6.0, 6.0);
    CHECK(bs.in_gap(st.E0));
}

TEST_CASE("V1 = 0.5 matches the dense-scan oracle")
{
    DiracParams p = kReference;
    p.V1 = 0.5;
    const auto expect = oracle_roots(1.0, std::numbers::pi / 2.0, 2.0, 0.5);
    REQUIRE(expect.size() == 1);
    CHECK(expect[0] == doctest::Approx(1.4057556525483765).epsilon(1e-10));

    const auto states = find_tamm_states(p, 1e-12);
    REQUIRE(states.size() == expect.size());
    CHECK(states[0].E0 == doctest::Approx(expect[0]).epsilon(1e-9));
}

TEST_CASE("reference root agrees with the oracle too")
{
    const auto expect = oracle_roots(1.0, std::numbers::pi / 2.0, 2.0, 0.8);
    REQUIRE(expect.size() == 1);
    const auto states = find_tamm_states(kReference);
    REQUIRE(states.size() == 1);
    CHECK(states[0].E0 == doctest::Approx(expect[0]).epsilon(1e-9));
}

TEST_CASE("vanishing V1 collapses the search interval")
{
    DiracParams p = kReference;
    p.V1 = 1e-4;
    CHECK(find_tamm_states(p).empty());
}

TEST_CASE("degenerate V0 propagates")
{
    const DiracParams p{1.0, std::numbers::pi, 2.0, 0.8};
    CHECK_THROWS_AS(find_tamm_states(p), std::invalid_argument);
}

TEST_CASE("root set is stable under scan refinement")
{
    const auto coarse = find_tamm_states(kReference, 1e-10, 100000);
    const auto fine = find_tamm_states(kReference, 1e-10, 200000);
    REQUIRE(coarse.size() == fine.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        CHECK(std::abs(coarse[i].E0 - fine[i].E0) <= 1e-9);
    }
}

TEST_CASE("interval splitting at poles still finds self-consistent roots")
{
    // a = 6 has two cotangent poles inside (1, 1.8)
    const DiracParams p{1.0, std::numbers::pi / 2.0, 6.0, 0.8};
    const auto states = find_tamm_states(p, 1e-11);
    for (const auto& st : states) {
        CHECK(std::abs(tamm_residual(st.E0, p)) <= 1e-11);
        CHECK(st.E0 > 1.0);
        CHECK(st.E0 < 1.8);
    }
    // states must be sorted and in gaps
    const auto bs = find_bands(p, 0.0, 2.8);
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (i > 0) {
            CHECK(states[i - 1].E0 < states[i].E0);
        }
        CHECK(bs.in_gap(states[i].E0));
    }
}

} // TEST_SUITE
