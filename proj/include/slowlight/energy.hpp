#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "slowlight/dispersion.hpp"
#include "slowlight/wavepacket.hpp"

namespace slowlight {

/// Time- and area-integrated Poynting fluxes at the boundary, reduced to
/// spectral-domain integrals by Parseval. Lossless boundary, so
/// transmitted + reflected = incident to rounding.
struct EnergyReport {
    double incident_energy;
    double transmitted_energy;
    double reflected_energy;
    double transfer_ratio_TE;  ///< transmitted/incident, in [0, 1]
};

struct SweepRow {
    double vg_over_c;
    double te;
};

struct SweepError {
    std::size_t index;  ///< position in the requested vg list
    double vg;          ///< offending value, m/s
    std::string message;
};

struct SweepMetadata {
    double n0;
    double omega0;
    double delta_omega;
    double halfwidth;
    std::size_t count;
};

/// Energy-transfer table over group velocity; rows in input order.
struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<SweepError> errors;
    SweepMetadata metadata;
};

struct PacketOptions {
    double halfwidth = 8.0;
    std::size_t count = 16384;
};

/// Vacuum energy flux: int |A|^2 dw, trapezoidal on the grid.
double energy_flux(const Spectrum& spec);

/// In-medium energy flux: int Re(sqrt(eps(w))) |A(w)|^2 dw. Sub-cutoff grid
/// points contribute exactly zero, and the bin straddling the cutoff is
/// split at omega_c (the integrand vanishes there), so no evanescent weight
/// leaks into the result.
double energy_flux(const Spectrum& spec, const MediumModel& m);

/// Splits an incident packet at the boundary and books the energy. The
/// reflected-flux quadrature carries the exact complement of the transmitted
/// integral's cutoff-bin split, so the discrete fluxes conserve energy to
/// rounding, not just to O(grid step).
EnergyReport energy_transfer_ratio(const Spectrum& incident, const MediumModel& m);

/// T_E over a strictly increasing list of group velocities (m/s), each built
/// as a fresh Gaussian packet against the matching medium. Rows evaluate
/// independently (optionally on `threads` workers) and are collected in input
/// order; a vg outside (0, c/n0) produces an error entry and the sweep
/// continues. A non-increasing list throws std::invalid_argument.
SweepResult sweep_TE(double n0, double omega0, double delta_omega,
                     std::span<const double> vg_list,
                     const PacketOptions& packet = {}, int threads = 1);

}  // namespace slowlight
