#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "slowlight/fresnel.hpp"

using namespace slowlight;

TEST_CASE("refractive index branch") {
    CHECK(complex_refractive_index(4.0) == std::complex<double>(2.0, 0.0));
    CHECK(complex_refractive_index(0.0) == std::complex<double>(0.0, 0.0));
    CHECK(complex_refractive_index(-1.0) == std::complex<double>(0.0, 1.0));
    CHECK(complex_refractive_index(-9.0) == std::complex<double>(0.0, 3.0));

    CHECK_THROWS_AS(complex_refractive_index(std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
    CHECK_THROWS_AS(complex_refractive_index(std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("boundary coefficients at textbook points") {
    const BoundaryCoefficients matched = boundary_coefficients(1.0);
    CHECK(matched.reflectance_R == 0.0);
    CHECK(matched.transmittance_T == 1.0);
    CHECK(matched.energy_T == 1.0);

    const BoundaryCoefficients glassy = boundary_coefficients(4.0);
    CHECK(glassy.reflectance_R == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(glassy.transmittance_T == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
    CHECK(glassy.energy_T == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
    CHECK(glassy.reflectance_R + glassy.energy_T == doctest::Approx(1.0).epsilon(1e-15));

    // low pulse tail of a c/vg = 5e7 medium: eps = 0.5
    const BoundaryCoefficients half = boundary_coefficients(0.5);
    CHECK(half.reflectance_R == doctest::Approx(0.029437251522859406).epsilon(1e-13));

    const BoundaryCoefficients evanescent = boundary_coefficients(-3.0);
    CHECK(evanescent.reflectance_R == 1.0);
    CHECK(evanescent.energy_T == 0.0);
}

TEST_CASE("eps = -1 reflects with unit magnitude through the +i branch") {
    const BoundaryCoefficients bc = boundary_coefficients(-1.0);
    // (1 - i)/(1 + i) = -i
    CHECK(bc.r_field.real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(bc.r_field.imag() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::norm(bc.r_field) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bc.reflectance_R == 1.0);
}

TEST_CASE("energy conservation across 1e4 random dielectric constants") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double eps = std::exp(std::log(1e-6) + u(rng) * std::log(1e10));  // (0, 1e4]
        const BoundaryCoefficients bc = boundary_coefficients(eps);
        worst = std::max(worst, std::abs(bc.reflectance_R + bc.energy_T - 1.0));
        CHECK(std::abs(bc.reflectance_R - std::norm(bc.r_field)) <= 1e-12);
        CHECK(std::abs(bc.transmittance_T - std::norm(bc.t_field)) == 0.0);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("unitarity below the cutoff") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1e4, 0.0);
    for (int i = 0; i < 1000; ++i) {
        const BoundaryCoefficients bc = boundary_coefficients(u(rng));
        CHECK(std::abs(std::abs(bc.r_field) - 1.0) <= 1e-12);
        CHECK(bc.energy_T == 0.0);
        CHECK(bc.reflectance_R == 1.0);
    }
}

TEST_CASE("reflection is asymmetric about the center frequency") {
    // n0 = 1: R vanishes at omega0 and the low-frequency side always reflects
    // harder than the mirrored high-frequency side.
    const MediumModel m(1.0, 1e8, 1e14);
    CHECK(boundary_coefficients(epsilon(m, m.omega0)).reflectance_R == 0.0);
    for (double scaled : {1e-10, 1e-9, 3e-9, 5e-9, 7e-9, 2e-8, 1e-7}) {
        const double d = scaled * m.omega0;
        const double r_low = boundary_coefficients(epsilon(m, m.omega0 - d)).reflectance_R;
        const double r_high = boundary_coefficients(epsilon(m, m.omega0 + d)).reflectance_R;
        CHECK(r_low > r_high);
    }
    // strictly decreasing toward omega0 from below, increasing above
    auto R_at = [&](double w) { return boundary_coefficients(epsilon(m, w)).reflectance_R; };
    CHECK(R_at(m.omega0 - 4e5) > R_at(m.omega0 - 2e5));
    CHECK(R_at(m.omega0 - 2e5) > 0.0);
    CHECK(R_at(m.omega0 + 2e5) < R_at(m.omega0 + 4e5));
}

TEST_CASE("reflectivity grows toward total with steeper dispersion") {
    const double omega = 1e14 * (1.0 + 1e-9);
    double prev = 0.0;
    for (double alpha : {1e10, 1e12, 1e14, 1e16, 1e18}) {
        const MediumModel m(1.0, alpha, 1e14);
        const double R = boundary_coefficients(epsilon(m, omega)).reflectance_R;
        CHECK(R > prev);
        prev = R;
    }
    CHECK(prev > 0.999);
}

TEST_CASE("reflectance spectrum") {
    const MediumModel m(1.0, 1e8, 1e14);
    const std::vector<double> center{m.omega0};
    CHECK(reflectance_spectrum(m, center) == std::vector<double>{0.0});

    // high tail of the steep model: eps = 11
    const MediumModel steep(1.0, 1e9, 1e14);
    const std::vector<double> high{1e14 + 5e5};
    CHECK(reflectance_spectrum(steep, high)[0] ==
          doctest::Approx(0.2880201006294081).epsilon(1e-12));

    // anything at or below the cutoff reflects totally
    std::vector<double> below;
    for (int i = 1; i <= 64; ++i) below.push_back(1e14 * (1.0 - 5e-9) * i / 65.0);
    for (double R : reflectance_spectrum(m, below)) CHECK(R == 1.0);

    CHECK_THROWS_AS(reflectance_spectrum(m, std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(reflectance_spectrum(m, std::vector<double>{-1.0}), std::domain_error);
}
