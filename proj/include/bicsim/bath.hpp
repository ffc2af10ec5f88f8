// bath.hpp — one-dimensional coupled-cavity-array environments: dispersion,
// mode grids, degeneracy structure, and spectral density.

#pragma once

#include <vector>

#include "bicsim/errors.hpp"
#include "bicsim/types.hpp"

namespace bicsim {

enum class BathKind { NearestNeighbor, NextNearestNeighbor };

// Natural units: omega_c = 1, x0 = 1, hbar = 1.  n_modes must be odd so the
// plane-wave grid contains k = 0 and is exactly reflection symmetric.
struct BathModel {
    BathKind kind = BathKind::NearestNeighbor;
    double omega_c = 1.0;
    double xi = 0.2;        // nearest-neighbor hopping
    double xi_prime = 0.0;  // next-nearest hopping (zero for NearestNeighbor)
    int n_modes = 1201;
    double x0 = 1.0;        // lattice spacing

    static BathModel nearest(double xi, int n_modes);
    static BathModel next_nearest(double xi, double xi_prime, int n_modes);

    void validate() const;  // throws std::invalid_argument on bad parameters
    double zone_edge() const { return M_PI / x0; }
};

struct Band {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double omega) const { return omega >= lo && omega <= hi; }
    bool contains_strictly(double omega) const { return omega > lo && omega < hi; }
    double width() const { return hi - lo; }
};

// Discretized plane-wave modes, k_n = 2 pi n / (N x0) with n in (-N/2, N/2].
struct ModeGrid {
    std::vector<double> wavevectors;
    std::vector<double> frequencies;
    double coupling_scale = 0.0;  // g / sqrt(N), identical for every mode
};

// omega(k) = omega_c + 2 xi cos(k x0) + 2 xi' cos(2 k x0).
// k outside the first zone is reduced modulo 2 pi / x0; exact reflection
// symmetry dispersion(-k) == dispersion(k) holds bitwise.
double dispersion(const BathModel& bath, double k);

// d omega / dk and higher derivatives on the k > 0 half zone.
double dispersion_d1(const BathModel& bath, double k);
double dispersion_d2(const BathModel& bath, double k);
double dispersion_d3(const BathModel& bath, double k);

// Closed-form band extrema of the dispersion.
Band band(const BathModel& bath);

// Largest |d omega/dk| over the zone; sets the fastest signal speed and the
// finite-ring revival time N x0 / v_max.
double max_group_speed(const BathModel& bath);

ModeGrid mode_grid(const BathModel& bath, double g);

// All k in [-pi/x0, pi/x0] with dispersion(k) = omega to within tol, found by
// bracketed bisection on the continuum dispersion.  Empty if omega is outside
// the band.  Two-fold for NearestNeighbor interior frequencies; two- or
// four-fold for NextNearestNeighbor.
std::vector<double> degenerate_wavevectors(const BathModel& bath, double omega,
                                           double tol = 1e-10);

// Continuum spectral density J(omega) = sum_branches g^2 x0 / (2 pi |omega'|).
// Throws band_edge_error at van Hove points or outside the band.
double spectral_density(const BathModel& bath, double g, double omega);

// |dk/domega| on the principal (smallest positive k) branch.
double group_velocity_inverse(const BathModel& bath, double omega);

} // namespace bicsim
