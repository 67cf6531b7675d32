#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "slowlight/dispersion.hpp"

namespace slowlight {

/// Uniform ascending grid of angular frequencies, stored as (first, step,
/// count) so the spacing is constant by construction. count is a power of
/// two and all points are positive.
struct FrequencyGrid {
    double first = 0.0;      ///< lowest frequency, rad/s
    double step = 0.0;       ///< spacing, rad/s
    std::size_t count = 0;   ///< number of samples, power of two, >= 2

    FrequencyGrid() = default;
    FrequencyGrid(double first, double step, std::size_t count);

    double point(std::size_t i) const { return first + static_cast<double>(i) * step; }
    double back() const { return point(count - 1); }
    /// Center frequency (the carrier used by time synthesis).
    double center() const { return point(count / 2); }

    friend bool operator==(const FrequencyGrid&, const FrequencyGrid&) = default;
};

/// Sampled complex spectral amplitude A(w) on a frequency grid.
/// Immutable value semantics: operations return new spectra.
struct Spectrum {
    FrequencyGrid grid;
    std::vector<std::complex<double>> amplitudes;  ///< field * s, one per grid point
};

/// Complex field envelope sampled on a uniform time grid centered at zero,
/// with the carrier at the spectrum's center frequency removed.
/// dt * (grid step) = 2*pi / count, so discrete Parseval holds exactly.
struct TimeSeries {
    double t_first = 0.0;  ///< s
    double dt = 0.0;       ///< s
    std::vector<std::complex<double>> envelope;

    double time(std::size_t i) const { return t_first + static_cast<double>(i) * dt; }
};

/// Gaussian packet centered at omega0. delta_omega is the FWHM of the
/// spectral intensity |A|^2, i.e. A(w) = exp(-(w-omega0)^2/(2 sigma^2)) with
/// sigma = delta_omega / (2 sqrt(ln 2)), so |A(omega0 +- delta_omega/2)|^2 = 1/2.
/// The grid spans omega0 +- halfwidth*delta_omega (right endpoint exclusive)
/// with omega0 on a grid point. Requires count a power of two >= 64,
/// halfwidth >= 4, and delta_omega < omega0/halfwidth so the grid stays
/// positive; violations throw std::domain_error.
Spectrum gaussian_spectrum(double omega0, double delta_omega, double halfwidth,
                           std::size_t count);

struct BoundaryFields {
    Spectrum transmitted;  ///< t(eps(w)) * A(w); evanescent bins retained
    Spectrum reflected;    ///< r(eps(w)) * A(w)
};

/// Applies the per-frequency boundary coefficients to an incident spectrum.
/// Sub-cutoff transmitted amplitudes are retained (evanescent tail); they
/// carry no energy flux and are excluded from flux integrals by the energy
/// module. Throws std::invalid_argument on grid mismatch contracts.
BoundaryFields apply_boundary(const Spectrum& incident, const MediumModel& m);

/// Energy-flux spectral density of the transmitted field, as a spectrum:
/// amplitudes sqrt(Re n)*t*A, so |amplitude|^2 = (1 - R)|A|^2. This is the
/// spectrum whose centroid moves blue; sub-cutoff bins are exactly zero.
Spectrum transmitted_flux_density(const Spectrum& incident, const MediumModel& m);

/// Discrete inverse Fourier synthesis of the envelope (carrier removed).
/// Parseval: sum |envelope|^2 dt = sum |A|^2 dw / (2 pi) to rounding.
TimeSeries time_profile(const Spectrum& spec);

/// Forward transform back onto a frequency grid; inverse of time_profile.
Spectrum spectrum_from_time(const TimeSeries& series, const FrequencyGrid& grid);

/// Intensity-weighted mean frequency, trapezoidal on the grid:
/// int w |A|^2 dw / int |A|^2 dw. Throws std::domain_error for zero energy.
double spectral_centroid(const Spectrum& spec);

/// spectral_centroid(transmitted) - spectral_centroid(incident), both on the
/// same grid. For the energy blue shift, pass the transmitted flux density
/// (transmitted_flux_density); the raw transmitted amplitude spectrum can
/// shift either way.
double blue_shift(const Spectrum& incident, const Spectrum& transmitted);

}  // namespace slowlight
