#pragma once

#include "slowlight/constants.hpp"

namespace slowlight {

/// Linearized dielectric medium around a center frequency:
///
///   eps(w) = n0^2 + (2*alpha/omega0) * (w - omega0)
///
/// n0 is the refractive index at omega0 and alpha (dimensionless) sets the
/// steepness of the dispersion; large alpha means small group velocity.
struct MediumModel {
    double n0;      ///< refractive index at omega0, > 0
    double alpha;   ///< dispersion steepness, > 0
    double omega0;  ///< center angular frequency, rad/s, > 0

    MediumModel(double n0_, double alpha_, double omega0_);
};

/// Parameters of an idealized driven atomic medium with purely radiative
/// transitions, used for the closed-form boundary-relevance estimate.
struct EITParameters {
    double density_N;   ///< atomic number density, m^-3
    double wavelength;  ///< optical wavelength, m
    double gamma;       ///< radiative transition rate, rad/s
    double rabi;        ///< driving Rabi frequency, rad/s

    EITParameters(double density, double wavelength, double gamma, double rabi);
};

struct EitEstimate {
    double r;            ///< boundary-relevance parameter
    double delta_omega;  ///< transparency-window width Omega^2/gamma, rad/s
    double vg_estimate;  ///< group velocity implied by r at n0 = 1, m/s
};

/// A layer of width L over which the dielectric function varies smoothly
/// between two endpoint models. Reflection from such a layer depends only on
/// the endpoint dielectric functions, so computations reduce to the z = L
/// model (see layer_effective_model).
struct LayerProfile {
    MediumModel epsilon_start;  ///< model at z = 0
    MediumModel epsilon_end;    ///< model at z = L
    double length_L;            ///< layer width, m (informational)

    LayerProfile(MediumModel start, MediumModel end, double length);
};

/// Dielectric function eps(omega). May be negative below the cutoff; callers
/// must handle the sign. Throws std::domain_error for omega <= 0.
double epsilon(const MediumModel& m, double omega);

/// Frequency where eps crosses zero: omega0 * (1 - n0^2/(2*alpha)).
/// Below it waves are evanescent and the boundary reflects totally.
/// Non-positive when alpha <= n0^2/2 (no cutoff at positive frequency).
double cutoff_frequency(const MediumModel& m);

/// Width of the passband omega0 - omega_c = omega0 * n0^2/(2*alpha),
/// evaluated without the cancellation of subtracting a stored cutoff.
double passband_width(const MediumModel& m);

/// Group velocity at the center frequency: c / (n0 + alpha/n0).
double group_velocity_center(const MediumModel& m);

/// Inverse of group_velocity_center: the alpha for which a medium with
/// index n0 has center group velocity vg. Requires 0 < vg < c/n0.
double alpha_for_group_velocity(double n0, double vg);

/// Builds the model with center group velocity vg at omega0.
MediumModel model_for_group_velocity(double n0, double omega0, double vg);

/// Group velocity d(omega)/dk on the propagating branch, from
/// k(w) = w*sqrt(eps(w))/c:
///
///   vg(w) = c * sqrt(eps) / (eps + alpha*w/omega0)
///
/// Reduces to group_velocity_center at omega0; tends to zero both toward the
/// cutoff and at high frequency, with a single interior maximum. Throws
/// std::domain_error at or below the cutoff.
double group_velocity_at(const MediumModel& m, double omega);

/// Group velocity for the ionosphere/waveguide dispersion eps = 1 - wp^2/w^2:
/// c*sqrt(1 - wp^2/w^2). Monotonically increasing, -> c at high frequency.
/// Throws std::domain_error for omega <= omega_p.
double plasma_group_velocity(double omega_p, double omega);

/// Boundary-relevance parameter r = (alpha/n0^2) * (delta_omega/omega0),
/// identically (delta_omega/2)/(omega0 - omega_c). r >~ 1 means the cutoff
/// sits inside the packet spectrum and boundary effects are strong.
double boundary_parameter_r(const MediumModel& m, double delta_omega);

/// Closed-form estimate for the ideal radiative medium: with the window
/// delta_omega = Omega^2/gamma the parameter reduces to
/// r = 3*N*lambda^3/(8*pi^2), and the implied group velocity at n0 = 1 is
/// vg = c*(delta_omega/omega0)/r with omega0 = 2*pi*c/lambda.
EitEstimate eit_boundary_parameter(const EITParameters& p);

/// Sharp-boundary equivalent of an adiabatic layer: reflection depends only
/// on the endpoint dielectric functions, so the z = L model applies verbatim.
MediumModel layer_effective_model(const LayerProfile& profile);

}  // namespace slowlight
