#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "slowlight/energy.hpp"
#include "slowlight/fresnel.hpp"
#include "slowlight/numerics.hpp"

using namespace slowlight;

namespace {

constexpr double w0 = 1e14;
constexpr double dw = 1e6;

MediumModel model_for_r(double r, double n0 = 1.0, double omega0 = w0,
                        double delta_omega = dw) {
    return MediumModel(n0, r * n0 * n0 * omega0 / delta_omega, omega0);
}

// The single-integral route: T_E = int (1-R)|A|^2 dw / int |A|^2 dw with the
// same node-trapezoid + cutoff-split geometry as the flux route.
double te_one_minus_R(const Spectrum& inc, const MediumModel& m) {
    const FrequencyGrid& g = inc.grid;
    std::vector<double> num(g.count), den(g.count);
    for (std::size_t i = 0; i < g.count; ++i) {
        const double a2 = std::norm(inc.amplitudes[i]);
        const double R = boundary_coefficients(epsilon(m, g.point(i))).reflectance_R;
        num[i] = (1.0 - R) * a2;
        den[i] = a2;
    }
    double flux = trapezoid_uniform(num, g.step);
    const double wc = cutoff_frequency(m);
    if (wc > g.point(0) && wc < g.back()) {
        std::size_t i = 0;
        while (i < g.count && g.point(i) <= wc) ++i;
        if (i > 0 && i < g.count && g.point(i - 1) < wc)
            flux -= num[i] * (g.step - (g.point(i) - wc)) / 2.0;
    }
    return flux / trapezoid_uniform(den, g.step);
}

}  // namespace

TEST_CASE("vacuum flux of a unit-peak gaussian matches the closed form") {
    const Spectrum s = gaussian_spectrum(w0, dw, 8.0, 1 << 14);
    const double sigma = dw / (2.0 * std::sqrt(std::log(2.0)));
    CHECK(energy_flux(s) == doctest::Approx(sigma * std::sqrt(pi)).epsilon(1e-8));
}

TEST_CASE("index-matched medium carries the vacuum flux") {
    const Spectrum s = gaussian_spectrum(w0, dw, 8.0, 1 << 12);
    const MediumModel vac(1.0, 1e-300, w0);
    CHECK(energy_flux(s, vac) == doctest::Approx(energy_flux(s)).epsilon(1e-14));
}

TEST_CASE("a spectrum entirely below the cutoff carries nothing") {
    const MediumModel m(1.0, 1e8, 2e14);  // cutoff just below 2e14
    const Spectrum s = gaussian_spectrum(1e14, 1e6, 8.0, 1 << 10);
    CHECK(energy_flux(s, m) == 0.0);
}

TEST_CASE("energy transfer ratio limits and oracle values") {
    const Spectrum inc = gaussian_spectrum(w0, dw, 8.0, 1 << 18);

    const MediumModel vac(1.0, 1e-300, w0);
    CHECK(energy_transfer_ratio(inc, vac).transfer_ratio_TE == 1.0);

    // adaptive-quadrature oracle: T_E(r = 1) = 0.8453061176
    CHECK(energy_transfer_ratio(inc, model_for_r(1.0)).transfer_ratio_TE ==
          doctest::Approx(0.8453061176081009).epsilon(1e-4));

    // steep-dispersion surrogate: T_E(r = 1e4) = 0.034272568; the boundary
    // turns into a mirror only like 1/sqrt(r)
    CHECK(energy_transfer_ratio(inc, model_for_r(1e4)).transfer_ratio_TE ==
          doctest::Approx(0.034272568).epsilon(1e-3));
}

TEST_CASE("flux route equals the (1-R)-weighted route") {
    const Spectrum inc = gaussian_spectrum(w0, dw, 8.0, 1 << 14);
    for (double r : {0.3, 1.0, 7.0, 330.0}) {
        const MediumModel m = model_for_r(r);
        const double te1 = energy_transfer_ratio(inc, m).transfer_ratio_TE;
        const double te2 = te_one_minus_R(inc, m);
        CHECK(te1 == doctest::Approx(te2).epsilon(1e-12));
    }
}

TEST_CASE("incident flux splits exactly into transmitted plus reflected") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double n0 = 1.0 + u(rng);
        const double omega0 = std::exp(std::log(1e13) + u(rng) * std::log(1e2));
        const double delta = omega0 * std::exp(std::log(1e-9) + u(rng) * std::log(1e2));
        const double r = std::exp(std::log(1e-3) + u(rng) * std::log(1e6));
        const MediumModel m = model_for_r(r, n0, omega0, delta);
        const Spectrum inc = gaussian_spectrum(omega0, delta, 8.0, 1 << 12);
        const EnergyReport rep = energy_transfer_ratio(inc, m);
        CHECK(std::abs(rep.transmitted_energy + rep.reflected_energy - rep.incident_energy) <=
              1e-10 * rep.incident_energy);
        CHECK(rep.transfer_ratio_TE >= 0.0);
        CHECK(rep.transfer_ratio_TE <= 1.0);
        CHECK(rep.transfer_ratio_TE ==
              rep.transmitted_energy / rep.incident_energy);
    }
}

TEST_CASE("T_E falls as the dispersion steepens") {
    const Spectrum inc = gaussian_spectrum(w0, dw, 8.0, 1 << 14);
    double prev = 2.0;
    for (double r = 0.1; r <= 100.0; r *= 2.0) {
        const double te = energy_transfer_ratio(inc, model_for_r(r)).transfer_ratio_TE;
        CHECK(te < prev);
        prev = te;
    }
}

TEST_CASE("T_E is grid-converged") {
    // The flux integrand has a square-root kink at the cutoff, so the
    // trapezoid error scales like h^1.5 with a sqrt(r) coefficient; 2^21 is
    // the first power of two whose doubling step sits below 1e-6 at r = 100.
    for (double r : {1.0, 100.0}) {
        const MediumModel m = model_for_r(r);
        const double a = energy_transfer_ratio(gaussian_spectrum(w0, dw, 8.0, 1 << 21), m)
                             .transfer_ratio_TE;
        const double b = energy_transfer_ratio(gaussian_spectrum(w0, dw, 8.0, 1 << 22), m)
                             .transfer_ratio_TE;
        CHECK(std::abs(b - a) <= 1e-6 * a);
    }
}

TEST_CASE("sweep over group velocity") {
    // negligible boundary effect at vg = c/2
    const std::vector<double> mid{speed_of_light / 2.0};
    const SweepResult quick = sweep_TE(1.0, w0, dw, mid, PacketOptions{8.0, 1 << 12});
    REQUIRE(quick.rows.size() == 1);
    CHECK(quick.rows[0].te == doctest::Approx(1.0).epsilon(1e-3));

    // nine decades' endpoints against the adaptive oracle, monotone between
    std::vector<double> vgs;
    for (int i = 0; i <= 8; ++i)
        vgs.push_back(speed_of_light * std::pow(10.0, -10.0 + 0.5 * i));
    const SweepResult sweep = sweep_TE(1.0, w0, dw, vgs, PacketOptions{8.0, 1 << 14});
    REQUIRE(sweep.rows.size() == vgs.size());
    CHECK(sweep.errors.empty());
    for (std::size_t i = 1; i < sweep.rows.size(); ++i) {
        CHECK(sweep.rows[i].vg_over_c > sweep.rows[i - 1].vg_over_c);
        CHECK(sweep.rows[i].te + 1e-10 >= sweep.rows[i - 1].te);
    }
    CHECK(sweep.rows.front().te == doctest::Approx(0.23179378653640736).epsilon(1e-3));
    CHECK(sweep.rows.back().te == doctest::Approx(0.9999954907).epsilon(1e-6));
    for (const SweepRow& row : sweep.rows) {
        CHECK(row.te >= 0.0);
        CHECK(row.te <= 1.0);
    }

    CHECK(sweep.metadata.omega0 == w0);
    CHECK(sweep.metadata.delta_omega == dw);
}

TEST_CASE("sweep records bad rows and keeps going") {
    const std::vector<double> vgs{0.5 * speed_of_light, 1.5 * speed_of_light};
    const SweepResult sweep = sweep_TE(1.0, w0, dw, vgs, PacketOptions{8.0, 1 << 10});
    REQUIRE(sweep.rows.size() == 1);
    REQUIRE(sweep.errors.size() == 1);
    CHECK(sweep.errors[0].index == 1);
    CHECK(sweep.errors[0].vg == 1.5 * speed_of_light);

    const std::vector<double> unsorted{speed_of_light / 2.0, speed_of_light / 4.0};
    CHECK_THROWS_AS(sweep_TE(1.0, w0, dw, unsorted, PacketOptions{8.0, 1 << 10}),
                    std::invalid_argument);
}

TEST_CASE("sweep rows are identical across worker counts") {
    std::vector<double> vgs;
    for (int i = 0; i <= 6; ++i)
        vgs.push_back(speed_of_light * std::pow(10.0, -9.0 + 0.5 * i));
    const SweepResult a = sweep_TE(1.0, w0, dw, vgs, PacketOptions{8.0, 1 << 12}, 1);
    const SweepResult b = sweep_TE(1.0, w0, dw, vgs, PacketOptions{8.0, 1 << 12}, 8);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].vg_over_c == b.rows[i].vg_over_c);
        CHECK(a.rows[i].te == b.rows[i].te);
    }
}
