#include "slowlight/fresnel.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace slowlight {

std::complex<double> complex_refractive_index(double eps) {
    if (!std::isfinite(eps))
        throw std::domain_error("complex_refractive_index: eps must be finite");
    if (eps >= 0.0) return {std::sqrt(eps), 0.0};
    return {0.0, std::sqrt(-eps)};
}

BoundaryCoefficients boundary_coefficients(double eps) {
    const std::complex<double> n = complex_refractive_index(eps);
    const std::complex<double> denom = 1.0 + n;
    assert(std::norm(denom) > 0.0);  // 1 + n never vanishes on this branch

    BoundaryCoefficients bc;
    bc.r_field = (1.0 - n) / denom;
    bc.t_field = 2.0 / denom;
    // Below cutoff |1 - n|^2 and |1 + n|^2 are the same expression 1 + |eps|,
    // so unit reflectance is exact rather than a rounding accident.
    bc.reflectance_R = eps <= 0.0 ? 1.0 : std::norm(bc.r_field);
    bc.transmittance_T = std::norm(bc.t_field);
    bc.energy_T = n.real() * bc.transmittance_T;  // exactly 0 below cutoff
    return bc;
}

std::vector<double> reflectance_spectrum(const MediumModel& m,
                                         std::span<const double> grid) {
    if (grid.empty())
        throw std::invalid_argument("reflectance_spectrum: empty grid");
    std::vector<double> out;
    out.reserve(grid.size());
    for (double w : grid)
        out.push_back(boundary_coefficients(epsilon(m, w)).reflectance_R);
    return out;
}

}  // namespace slowlight
