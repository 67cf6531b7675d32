#include "slowlight/energy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "slowlight/fresnel.hpp"
#include "slowlight/numerics.hpp"

namespace slowlight {

namespace {

struct MediumFlux {
    double flux;
    // Weight removed from the straddling bin when splitting it at the
    // cutoff; the reflected-flux quadrature must absorb it to keep
    // incident = transmitted + reflected exact in the discrete sums.
    double straddle_complement;
    std::size_t straddle_index;  // node just above the cutoff, or count
};

MediumFlux medium_flux_parts(const Spectrum& spec, const MediumModel& m) {
    const FrequencyGrid& g = spec.grid;
    const std::size_t n = g.count;
    if (spec.amplitudes.size() != n)
        throw std::invalid_argument("energy_flux: amplitude/grid size mismatch");

    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double eps = epsilon(m, g.point(i));
        const double re_n = eps > 0.0 ? std::sqrt(eps) : 0.0;
        f[i] = re_n * std::norm(spec.amplitudes[i]);
    }
    MediumFlux out{trapezoid_uniform(f, g.step), 0.0, n};

    const double wc = cutoff_frequency(m);
    if (wc > g.point(0) && wc < g.back()) {
        // Locate the first node strictly above the cutoff. The float index
        // estimate can be off by one, so scan the neighborhood.
        auto est = static_cast<std::ptrdiff_t>((wc - g.first) / g.step);
        std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(est - 2, 0));
        while (i < n && g.point(i) <= wc) ++i;
        if (i > 0 && i < n && g.point(i - 1) < wc) {
            // Replace the chord over [w_{i-1}, w_i] by the split at wc: the
            // sub-cutoff part carries exactly zero, the rest is a trapezoid
            // from (wc, 0) to (w_i, f_i).
            const double delta = g.point(i) - wc;
            const double correction = f[i] * (g.step - delta) / 2.0;
            out.flux -= correction;
            out.straddle_complement = correction;
            out.straddle_index = i;
        }
    }
    if (out.flux < 0.0) out.flux = 0.0;
    return out;
}

}  // namespace

double energy_flux(const Spectrum& spec) {
    const std::size_t n = spec.grid.count;
    if (spec.amplitudes.size() != n)
        throw std::invalid_argument("energy_flux: amplitude/grid size mismatch");
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = std::norm(spec.amplitudes[i]);
    return trapezoid_uniform(f, spec.grid.step);
}

double energy_flux(const Spectrum& spec, const MediumModel& m) {
    return medium_flux_parts(spec, m).flux;
}

EnergyReport energy_transfer_ratio(const Spectrum& incident, const MediumModel& m) {
    const BoundaryFields fields = apply_boundary(incident, m);
    const double incident_energy = energy_flux(incident);
    const MediumFlux transmitted = medium_flux_parts(fields.transmitted, m);
    const double reflected_energy =
        energy_flux(fields.reflected) + transmitted.straddle_complement;
    EnergyReport report;
    report.incident_energy = incident_energy;
    report.transmitted_energy = transmitted.flux;
    report.reflected_energy = reflected_energy;
    report.transfer_ratio_TE = transmitted.flux / incident_energy;
    return report;
}

SweepResult sweep_TE(double n0, double omega0, double delta_omega,
                     std::span<const double> vg_list,
                     const PacketOptions& packet, int threads) {
    for (std::size_t i = 1; i < vg_list.size(); ++i)
        if (!(vg_list[i] > vg_list[i - 1]))
            throw std::invalid_argument("sweep_TE: vg_list must be strictly increasing");

    SweepResult result;
    result.metadata = SweepMetadata{n0, omega0, delta_omega, packet.halfwidth, packet.count};

    const std::size_t n = vg_list.size();
    std::vector<double> te(n, -1.0);
    std::vector<std::string> errors(n);

    auto run_row = [&](std::size_t i) {
        try {
            const MediumModel model = model_for_group_velocity(n0, omega0, vg_list[i]);
            const Spectrum packet_spec =
                gaussian_spectrum(omega0, delta_omega, packet.halfwidth, packet.count);
            te[i] = energy_transfer_ratio(packet_spec, model).transfer_ratio_TE;
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };

    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) run_row(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) run_row(i);
        };
        std::vector<std::thread> pool;
        const std::size_t pool_size =
            std::min<std::size_t>(static_cast<std::size_t>(threads), n);
        pool.reserve(pool_size);
        for (std::size_t t = 0; t < pool_size; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!errors[i].empty())
            result.errors.push_back(SweepError{i, vg_list[i], errors[i]});
        else
            result.rows.push_back(SweepRow{vg_list[i] / speed_of_light, te[i]});
    }
    return result;
}

}  // namespace slowlight
