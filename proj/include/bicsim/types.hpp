// types.hpp — domain types shared across modules

#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bicsim {

// Two emitters attached to lattice sites m1 and m2 (1-based).  All frequencies
// are in units of the cavity frequency, couplings likewise.
struct EmitterPair {
    double omega0 = 1.0;   // emitter transition frequency
    double g = 0.05;       // emitter-cavity coupling
    int site1 = 1;
    int site2 = 1;

    int separation() const { return site1 - site2; }

    // Places the pair symmetrically around the middle of an n_sites ring.
    static EmitterPair with_separation(double omega0, double g, int delta_m, int n_sites) {
        if (n_sites < 3) throw std::invalid_argument("with_separation: ring too small");
        if (std::abs(delta_m) >= n_sites)
            throw std::invalid_argument("with_separation: |delta_m| must be < n_sites");
        EmitterPair em;
        em.omega0 = omega0;
        em.g = g;
        em.site2 = (n_sites + 1) / 2 - delta_m / 2;
        em.site1 = em.site2 + delta_m;
        if (em.site1 < 1 || em.site1 > n_sites) {
            em.site2 = (delta_m >= 0) ? 1 : n_sites;
            em.site1 = em.site2 + delta_m;
        }
        return em;
    }

    void validate() const {
        if (!(g >= 0.0)) throw std::invalid_argument("EmitterPair: g must be >= 0");
        if (!std::isfinite(omega0)) throw std::invalid_argument("EmitterPair: omega0 not finite");
    }
};

// Which sign of the interference kernel 1 +/- cos(kR) a dark state lives on.
// "minus" is the antisymmetric superposition (even l), "plus" the symmetric
// one (odd l).
enum class BranchSign { plus, minus };

inline BranchSign branch_for_parity(long l) {
    return (l % 2 == 0) ? BranchSign::minus : BranchSign::plus;
}

inline const char* to_string(BranchSign s) {
    return s == BranchSign::plus ? "plus" : "minus";
}

// A candidate dark-state energy that failed the interference filter; kept for
// diagnostics.
struct BicCandidate {
    BranchSign branch = BranchSign::minus;
    double e0 = 0.0;
    double interference_residual = 0.0;  // max_b |l_b - round(l_b)|
};

// Verdict on the existence of the exact dark state, with its closed-form data.
struct DfsReport {
    bool exists = false;
    BranchSign branch_sign = BranchSign::minus;
    std::optional<long> l;
    double e0 = std::numeric_limits<double>::quiet_NaN();
    double weight_c2 = 0.0;            // |C|^2 in (0,1] when exists
    double steady_population = 0.0;    // |C|^4 / 2
    double steady_concurrence = 0.0;   // |C|^4 / 2
    std::vector<BicCandidate> rejected;
};

// Uniform time grid: samples t_j = j*h for j = 0..n_steps.
struct TimeGrid {
    double h = 0.02;
    std::size_t n_steps = 0;

    std::size_t n_samples() const { return n_steps + 1; }
    double horizon() const { return h * static_cast<double>(n_steps); }
    double time(std::size_t j) const { return h * static_cast<double>(j); }

    static TimeGrid for_horizon(double horizon, double h) {
        if (!(h > 0.0)) throw std::invalid_argument("TimeGrid: step must be positive");
        if (!(horizon >= 0.0)) throw std::invalid_argument("TimeGrid: horizon must be >= 0");
        TimeGrid grid;
        grid.h = h;
        grid.n_steps = static_cast<std::size_t>(std::llround(std::ceil(horizon / h - 1e-9)));
        return grid;
    }
};

} // namespace bicsim
