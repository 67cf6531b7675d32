#pragma once

#include <complex>
#include <span>
#include <vector>

#include "slowlight/dispersion.hpp"

namespace slowlight {

/// Normal-incidence boundary coefficients between vacuum and a medium with
/// (real) dielectric constant eps at one frequency.
struct BoundaryCoefficients {
    std::complex<double> r_field;  ///< field reflection (1 - n)/(1 + n)
    std::complex<double> t_field;  ///< field transmission 2/(1 + n)
    double reflectance_R;          ///< |r_field|^2, in [0, 1]; exactly 1 for eps <= 0
    double transmittance_T;        ///< |t_field|^2 (field intensity, can exceed 1)
    double energy_T;               ///< Re(n)*|t_field|^2, normal flux ratio in [0, 1]
};

/// sqrt(eps) on the branch that decays into the medium: the non-negative real
/// root for eps >= 0, +i*sqrt(|eps|) for eps < 0 (evanescent, |R| = 1).
/// Throws std::domain_error for non-finite input.
std::complex<double> complex_refractive_index(double eps);

/// Field and energy coefficients at the boundary. energy_T is the normal
/// Poynting-flux ratio Re(n)*|t|^2, distinct from the field intensity
/// transmittance |t|^2 (the classic index-factor trap); the two coincide only
/// at eps = 1. reflectance_R + energy_T = 1 for real eps.
BoundaryCoefficients boundary_coefficients(double eps);

/// Element-wise reflectance over a frequency grid: R(eps(m, w)) for each w.
/// Equals 1 exactly for every grid point at or below the cutoff.
std::vector<double> reflectance_spectrum(const MediumModel& m,
                                         std::span<const double> grid);

}  // namespace slowlight
