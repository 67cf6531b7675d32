#include "slowlight/wavepacket.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "slowlight/fresnel.hpp"
#include "slowlight/numerics.hpp"

namespace slowlight {

namespace {

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

// Iterative radix-2 transform, sign = -1 forward / +1 inverse (unnormalized).
// Grid counts are powers of two by type invariant, so nothing fancier is
// needed here.
void fft_radix2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<std::complex<double>> rotate_half(const std::vector<std::complex<double>>& v) {
    const std::size_t n = v.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[(i + n / 2) % n];
    return out;
}

void require_same_grid(const FrequencyGrid& a, const FrequencyGrid& b, const char* what) {
    if (!(a == b))
        throw std::invalid_argument(std::string(what) + ": spectra must share one grid");
}

}  // namespace

FrequencyGrid::FrequencyGrid(double first_, double step_, std::size_t count_)
    : first(first_), step(step_), count(count_) {
    if (!is_power_of_two(count))
        throw std::domain_error("FrequencyGrid: count must be a power of two >= 2");
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::domain_error("FrequencyGrid: step must be positive");
    if (!(first > 0.0))
        throw std::domain_error("FrequencyGrid: all frequencies must be positive");
}

Spectrum gaussian_spectrum(double omega0, double delta_omega, double halfwidth,
                           std::size_t count) {
    if (!(omega0 > 0.0) || !(delta_omega > 0.0))
        throw std::domain_error("gaussian_spectrum: omega0 and delta_omega must be positive");
    if (!is_power_of_two(count) || count < 64)
        throw std::domain_error("gaussian_spectrum: count must be a power of two >= 64");
    if (!(halfwidth >= 4.0))
        throw std::domain_error("gaussian_spectrum: halfwidth must be >= 4");
    if (!(delta_omega < omega0 / halfwidth))
        throw std::domain_error(
            "gaussian_spectrum: grid would include non-positive frequencies "
            "(requires delta_omega < omega0/halfwidth)");

    const double step = 2.0 * halfwidth * delta_omega / static_cast<double>(count);
    const double first = omega0 - static_cast<double>(count / 2) * step;
    Spectrum s;
    s.grid = FrequencyGrid(first, step, count);
    s.amplitudes.resize(count);

    // delta_omega is the FWHM of |A|^2.
    const double sigma = delta_omega / (2.0 * std::sqrt(std::log(2.0)));
    for (std::size_t i = 0; i < count; ++i) {
        const double d = (static_cast<double>(i) - static_cast<double>(count / 2)) * step;
        s.amplitudes[i] = std::exp(-d * d / (2.0 * sigma * sigma));
    }
    return s;
}

BoundaryFields apply_boundary(const Spectrum& incident, const MediumModel& m) {
    BoundaryFields out;
    out.transmitted.grid = incident.grid;
    out.reflected.grid = incident.grid;
    const std::size_t n = incident.grid.count;
    if (incident.amplitudes.size() != n)
        throw std::invalid_argument("apply_boundary: amplitude/grid size mismatch");
    out.transmitted.amplitudes.resize(n);
    out.reflected.amplitudes.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const BoundaryCoefficients bc =
            boundary_coefficients(epsilon(m, incident.grid.point(i)));
        out.transmitted.amplitudes[i] = bc.t_field * incident.amplitudes[i];
        out.reflected.amplitudes[i] = bc.r_field * incident.amplitudes[i];
    }
    return out;
}

Spectrum transmitted_flux_density(const Spectrum& incident, const MediumModel& m) {
    Spectrum out;
    out.grid = incident.grid;
    const std::size_t n = incident.grid.count;
    if (incident.amplitudes.size() != n)
        throw std::invalid_argument("transmitted_flux_density: amplitude/grid size mismatch");
    out.amplitudes.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double eps = epsilon(m, incident.grid.point(i));
        const BoundaryCoefficients bc = boundary_coefficients(eps);
        const double re_n = complex_refractive_index(eps).real();
        out.amplitudes[i] = std::sqrt(re_n) * bc.t_field * incident.amplitudes[i];
    }
    return out;
}

TimeSeries time_profile(const Spectrum& spec) {
    const std::size_t n = spec.grid.count;
    if (spec.amplitudes.size() != n)
        throw std::invalid_argument("time_profile: amplitude/grid size mismatch");

    // e(t_j) = (dw/2pi) sum_k A_k exp(-i (w_k - w_center) t_j) with
    // t_j = (j - n/2) dt and dt dw = 2 pi / n; the half rotations map the
    // centered indices onto the standard transform.
    const double dw = spec.grid.step;
    const double dt = 2.0 * pi / (static_cast<double>(n) * dw);
    auto work = rotate_half(spec.amplitudes);
    fft_radix2(work, -1);
    work = rotate_half(work);

    TimeSeries ts;
    ts.dt = dt;
    ts.t_first = -static_cast<double>(n / 2) * dt;
    ts.envelope.resize(n);
    const double scale = dw / (2.0 * pi);
    for (std::size_t i = 0; i < n; ++i) ts.envelope[i] = scale * work[i];
    return ts;
}

Spectrum spectrum_from_time(const TimeSeries& series, const FrequencyGrid& grid) {
    const std::size_t n = grid.count;
    if (series.envelope.size() != n)
        throw std::invalid_argument("spectrum_from_time: envelope/grid size mismatch");
    auto work = rotate_half(series.envelope);
    fft_radix2(work, +1);
    work = rotate_half(work);

    Spectrum s;
    s.grid = grid;
    s.amplitudes.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.amplitudes[i] = series.dt * work[i];
    return s;
}

double spectral_centroid(const Spectrum& spec) {
    const std::size_t n = spec.grid.count;
    if (spec.amplitudes.size() != n)
        throw std::invalid_argument("spectral_centroid: amplitude/grid size mismatch");
    // First moment taken about the grid center for conditioning; the raw
    // moment at optical frequencies wastes ~9 digits on the offset.
    const double wc = spec.grid.center();
    std::vector<double> w2(n), dw2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = std::norm(spec.amplitudes[i]);
        w2[i] = p;
        dw2[i] = (spec.grid.point(i) - wc) * p;
    }
    const double energy = trapezoid_uniform(w2, spec.grid.step);
    if (!(energy > 0.0) || !std::isfinite(energy))
        throw std::domain_error("spectral_centroid: spectrum has no energy");
    return wc + trapezoid_uniform(dw2, spec.grid.step) / energy;
}

double blue_shift(const Spectrum& incident, const Spectrum& transmitted) {
    require_same_grid(incident.grid, transmitted.grid, "blue_shift");
    return spectral_centroid(transmitted) - spectral_centroid(incident);
}

}  // namespace slowlight
