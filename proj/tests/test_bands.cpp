#include <doctest.h>

#include "fbgdirac/bands.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace fbgdirac;

namespace {

const DiracParams kLattice{1.0, std::numbers::pi / 2.0, 2.0, {}};

// Band edges for m0=1, V0=pi/2, a=2 on [-6, 6], frozen from a
// 30-digit bisection of |rhs| = 1 (symmetric in E).
const double kReferenceEdges[] = {
    0.28841990894499146, 1.5198025612061855, 2.359754408215647,
    2.7330119533043889,  3.9277064372922685, 4.1697681317476018,
    5.4980429387500452,  5.6751510204622588,
};

} // namespace

TEST_SUITE("bands")
{

TEST_CASE("dispersion rhs at the kappa = 0 branch point uses the series limit")
{
    // cos(V0) + E a sin(V0) = 0 + 1*2*1
    CHECK(dispersion_rhs(1.0, kLattice) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(dispersion_rhs(-1.0, kLattice) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("dispersion rhs at E = 2 equals (2/sqrt 3) sin(2 sqrt 3)")
{
    // independent route: evaluate the closed form in long double
    const long double s3 = std::sqrt(3.0L);
    const long double expect = 2.0L / s3 * std::sin(2.0L * s3);
    const double rhs = dispersion_rhs(2.0, kLattice);
    CHECK(rhs == doctest::Approx(static_cast<double>(expect)).epsilon(1e-14));
    CHECK(rhs == doctest::Approx(-0.36597905998629731).epsilon(1e-13));
}

TEST_CASE("gap collapse: |rhs| <= 1 for every |E| >= m0 when V0 = n pi")
{
    for (const double V0 : {std::numbers::pi, 2.0 * std::numbers::pi}) {
        const DiracParams p{1.0, V0, 2.0, {}};
        for (int i = 0; i <= 5000; ++i) {
            const double E = 1.0 + 7.0 * i / 5000.0;
            CHECK(std::abs(dispersion_rhs(E, p)) <= 1.0 + 2e-15);
            CHECK(std::abs(dispersion_rhs(-E, p)) <= 1.0 + 2e-15);
        }
    }
}

TEST_CASE("rhs is 2 pi periodic in V0")
{
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> energy(-6.0, 6.0);
    std::uniform_real_distribution<double> barrier(-4.0, 4.0);
    for (int i = 0; i < 500; ++i) {
        const double E = energy(rng);
        const double V0 = barrier(rng);
        const DiracParams p1{1.0, V0, 2.0, {}};
        const DiracParams p2{1.0, V0 + 2.0 * std::numbers::pi, 2.0, {}};
        CHECK(std::abs(dispersion_rhs(E, p1) - dispersion_rhs(E, p2)) <= 1e-14);
    }
}

TEST_CASE("in-gap continuation is real and hyperbolic")
{
    // V0 = 0: rhs must equal cosh(|kappa| a) inside the mass gap
    const DiracParams p{1.0, 0.0, 2.0, {}};
    for (const double E : {0.0, 0.3, -0.5, 0.9}) {
        const double expect = std::cosh(std::sqrt(1.0 - E * E) * 2.0);
        CHECK(dispersion_rhs(E, p) == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("bloch momentum: band edges, interior value, gap")
{
    // E = 2 lies in a band; frozen q from the rhs value above
    const auto q = bloch_momentum(2.0, kLattice);
    REQUIRE(q.has_value());
    CHECK(*q == doctest::Approx(0.97274048016965755).epsilon(1e-12));
    CHECK(*q >= 0.0);
    CHECK(*q <= std::numbers::pi / kLattice.a);

    CHECK_FALSE(bloch_momentum(1.0, kLattice).has_value()); // rhs = 2, gap

    // rhs = +1 at zone center, -1 at zone boundary
    const DiracParams free_lattice{1.0, 0.0, 2.0, {}};
    const double E_center = std::sqrt(1.0 + std::pow(std::numbers::pi / 2.0, 2)); // kappa a = pi
    const auto q_edge = bloch_momentum(E_center, free_lattice);
    REQUIRE(q_edge.has_value());
    CHECK(*q_edge == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-9)); // q = pi/a, a = 2
    const auto q_zero = bloch_momentum(1.0, free_lattice); // kappa = 0, rhs = 1
    REQUIRE(q_zero.has_value());
    CHECK(*q_zero == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("find_bands: free particle (V0 = 0) shows only the mass gap")
{
    const auto bs = find_bands(DiracParams{1.0, 0.0, 2.0, {}}, -6.0, 6.0);
    REQUIRE(bs.bands.size() == 2);
    CHECK(bs.bands[0].lo == doctest::Approx(-6.0));
    CHECK(bs.bands[0].hi == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(bs.bands[1].lo == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(bs.bands[1].hi == doctest::Approx(6.0));
    REQUIRE(bs.gaps().size() == 1);
    CHECK(bs.in_gap(0.0));
    CHECK(!bs.in_gap(2.0));
}

TEST_CASE("find_bands reproduces the frozen reference edge set")
{
    const auto bs = find_bands(kLattice, -6.0, 6.0);
    REQUIRE(bs.bands.size() == 9);

    std::vector<double> edges;
    for (std::size_t i = 0; i < bs.bands.size(); ++i) {
        if (i > 0) {
            edges.push_back(bs.bands[i].lo);
        }
        if (i + 1 < bs.bands.size()) {
            edges.push_back(bs.bands[i].hi);
        }
    }
    REQUIRE(edges.size() == 16);
    std::vector<double> expect;
    for (auto it = std::rbegin(kReferenceEdges); it != std::rend(kReferenceEdges); ++it) {
        expect.push_back(-*it);
    }
    expect.insert(expect.end(), std::begin(kReferenceEdges), std::end(kReferenceEdges));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        CHECK(edges[i] == doctest::Approx(expect[i]).epsilon(1e-8));
    }

    // window edges belong to the outermost bands
    CHECK(bs.bands.front().lo == -6.0);
    CHECK(bs.bands.back().hi == 6.0);
}

TEST_CASE("every returned edge satisfies |rhs| = 1 within the edge tolerance")
{
    const auto bs = find_bands(kLattice, -6.0, 6.0);
    for (std::size_t i = 0; i < bs.bands.size(); ++i) {
        if (i > 0) {
            CHECK(std::abs(std::abs(dispersion_rhs(bs.bands[i].lo, kLattice)) - 1.0) <=
                  bs.edge_tolerance);
        }
        if (i + 1 < bs.bands.size()) {
            CHECK(std::abs(std::abs(dispersion_rhs(bs.bands[i].hi, kLattice)) - 1.0) <=
                  bs.edge_tolerance);
        }
    }
}

TEST_CASE("find_bands classification: inside bands |rhs| <= 1, inside gaps > 1")
{
    const auto bs = find_bands(kLattice, -6.0, 6.0);
    const double tol = 1e-6; // stay clear of the edges
    for (const auto& b : bs.bands) {
        for (int i = 1; i < 40; ++i) {
            const double E = b.lo + tol + (b.width() - 2 * tol) * i / 40.0;
            CHECK(std::abs(dispersion_rhs(E, bs.params)) <= 1.0 + 1e-12);
        }
    }
    for (const auto& g : bs.gaps()) {
        for (int i = 1; i < 40; ++i) {
            const double E = g.lo + tol + (g.hi - g.lo - 2 * tol) * i / 40.0;
            CHECK(std::abs(dispersion_rhs(E, bs.params)) > 1.0);
        }
    }
}

TEST_CASE("gap collapse in find_bands: V0 = n pi gives one interval above the mass gap")
{
    for (const double V0 : {std::numbers::pi, 2.0 * std::numbers::pi}) {
        const auto bs = find_bands(DiracParams{1.0, V0, 2.0, {}}, 1.0001, 6.0);
        REQUIRE(bs.bands.size() == 1);
        CHECK(bs.bands[0].lo == doctest::Approx(1.0001));
        CHECK(bs.bands[0].hi == doctest::Approx(6.0));
    }
}

TEST_CASE("find_bands with a window entirely inside a gap returns no bands")
{
    const auto bs = find_bands(DiracParams{1.0, 0.0, 2.0, {}}, -0.9, 0.9);
    CHECK(bs.bands.empty());
    REQUIRE(bs.gaps().size() == 1);
    CHECK(bs.gaps()[0].lo == -0.9);
    CHECK(bs.gaps()[0].hi == 0.9);
    CHECK(bs.in_gap(0.0));
    CHECK_FALSE(bs.in_band(0.0));
}

TEST_CASE("find_bands rejects scans that could step over a band")
{
    FindBandsOptions opt;
    opt.scan_points = 100;
    CHECK_THROWS_WITH_AS(find_bands(DiracParams{1.0, 1.0, 2.0, {}}, 0.0, 60.0, opt),
                         doctest::Contains("resolution too coarse"),
                         std::invalid_argument);
    CHECK_THROWS_AS(find_bands(DiracParams{1.0, 1.0, 2.0, {}}, 3.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("non-relativistic reduction")
{
    // V0 = 0 collapses to cos(kappa a)
    const DiracParams p0{1.0, 0.0, 2.0, {}};
    CHECK(nonrel_dispersion_rhs(2.0, p0) ==
          doctest::Approx(std::cos(std::sqrt(3.0) * 2.0)).epsilon(1e-13));

    // kappa -> 0 limit is 1 + m0 V0 a
    const DiracParams p{1.0, 0.01, 2.0, {}};
    CHECK(nonrel_dispersion_rhs(1.0, p) == doctest::Approx(1.02).epsilon(1e-12));

    // agreement with the full relativistic rhs near the band bottom
    for (int i = 0; i <= 200; ++i) {
        const double E = 1.0 + 0.01 * i / 200.0;
        CHECK(std::abs(dispersion_rhs(E, p) - nonrel_dispersion_rhs(E, p)) <= 1e-3);
    }
}

} // TEST_SUITE
