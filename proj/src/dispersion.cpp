#include "slowlight/dispersion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace slowlight {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be positive and finite");
}

}  // namespace

MediumModel::MediumModel(double n0_, double alpha_, double omega0_)
    : n0(n0_), alpha(alpha_), omega0(omega0_) {
    require_positive(n0, "n0");
    require_positive(alpha, "alpha");
    require_positive(omega0, "omega0");
}

EITParameters::EITParameters(double density, double wavelength_, double gamma_, double rabi_)
    : density_N(density), wavelength(wavelength_), gamma(gamma_), rabi(rabi_) {
    require_positive(density_N, "density_N");
    require_positive(wavelength, "wavelength");
    require_positive(gamma, "gamma");
    require_positive(rabi, "rabi");
}

LayerProfile::LayerProfile(MediumModel start, MediumModel end, double length)
    : epsilon_start(start), epsilon_end(end), length_L(length) {
    if (!(length >= 0.0) || !std::isfinite(length))
        throw std::invalid_argument("length_L must be non-negative and finite");
}

double epsilon(const MediumModel& m, double omega) {
    if (!(omega > 0.0))
        throw std::domain_error("epsilon: omega must be positive");
    return m.n0 * m.n0 + (2.0 * m.alpha / m.omega0) * (omega - m.omega0);
}

double cutoff_frequency(const MediumModel& m) {
    return m.omega0 * (1.0 - m.n0 * m.n0 / (2.0 * m.alpha));
}

double passband_width(const MediumModel& m) {
    return m.omega0 * (m.n0 * m.n0 / (2.0 * m.alpha));
}

double group_velocity_center(const MediumModel& m) {
    // c/(n0 + alpha/n0), written so that group_velocity_at(m, omega0)
    // reproduces it bit for bit.
    return speed_of_light * m.n0 / (m.n0 * m.n0 + m.alpha);
}

double alpha_for_group_velocity(double n0, double vg) {
    require_positive(n0, "n0");
    if (!(vg > 0.0) || !(vg < speed_of_light / n0))
        throw std::domain_error(
            "alpha_for_group_velocity: vg must lie in (0, c/n0); "
            "no positive alpha achieves this");
    return n0 * (speed_of_light / vg - n0);
}

MediumModel model_for_group_velocity(double n0, double omega0, double vg) {
    return MediumModel(n0, alpha_for_group_velocity(n0, vg), omega0);
}

double group_velocity_at(const MediumModel& m, double omega) {
    const double eps = epsilon(m, omega);
    if (!(eps > 0.0))
        throw std::domain_error("group_velocity_at: evanescent region, no group velocity");
    return speed_of_light * std::sqrt(eps) / (eps + m.alpha * (omega / m.omega0));
}

double plasma_group_velocity(double omega_p, double omega) {
    require_positive(omega_p, "omega_p");
    if (!(omega > omega_p))
        throw std::domain_error("plasma_group_velocity: omega must exceed omega_p");
    const double ratio = omega_p / omega;
    return speed_of_light * std::sqrt(1.0 - ratio * ratio);
}

double boundary_parameter_r(const MediumModel& m, double delta_omega) {
    if (!(delta_omega > 0.0))
        throw std::domain_error("boundary_parameter_r: delta_omega must be positive");
    return (m.alpha / (m.n0 * m.n0)) * (delta_omega / m.omega0);
}

EitEstimate eit_boundary_parameter(const EITParameters& p) {
    const double lambda3 = p.wavelength * p.wavelength * p.wavelength;
    const double delta_omega = p.rabi * p.rabi / p.gamma;
    const double r = 3.0 / (8.0 * pi * pi) * p.density_N * lambda3 * p.gamma *
                     delta_omega / (p.rabi * p.rabi);
    const double omega0 = 2.0 * pi * speed_of_light / p.wavelength;
    const double vg = speed_of_light * (delta_omega / omega0) / r;
    return EitEstimate{r, delta_omega, vg};
}

MediumModel layer_effective_model(const LayerProfile& profile) {
    return profile.epsilon_end;
}

}  // namespace slowlight
