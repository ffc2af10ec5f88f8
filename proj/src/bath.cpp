#include "bicsim/bath.hpp"

#include <algorithm>
#include <cmath>

namespace bicsim {

BathModel BathModel::nearest(double xi, int n_modes) {
    BathModel b;
    b.kind = BathKind::NearestNeighbor;
    b.xi = xi;
    b.xi_prime = 0.0;
    b.n_modes = n_modes;
    b.validate();
    return b;
}

BathModel BathModel::next_nearest(double xi, double xi_prime, int n_modes) {
    BathModel b;
    b.kind = BathKind::NextNearestNeighbor;
    b.xi = xi;
    b.xi_prime = xi_prime;
    b.n_modes = n_modes;
    b.validate();
    return b;
}

void BathModel::validate() const {
    if (!(xi > 0.0)) throw std::invalid_argument("BathModel: xi must be > 0");
    if (!(xi_prime >= 0.0)) throw std::invalid_argument("BathModel: xi_prime must be >= 0");
    if (kind == BathKind::NearestNeighbor && xi_prime != 0.0)
        throw std::invalid_argument("BathModel: NearestNeighbor requires xi_prime == 0");
    if (n_modes < 3) throw std::invalid_argument("BathModel: n_modes must be >= 3");
    if (n_modes % 2 == 0)
        throw std::invalid_argument("BathModel: n_modes must be odd (symmetric mode grid)");
    if (!(x0 > 0.0)) throw std::invalid_argument("BathModel: x0 must be > 0");
    if (!(omega_c > 0.0)) throw std::invalid_argument("BathModel: omega_c must be > 0");
}

double dispersion(const BathModel& bath, double k) {
    // reduce to the first zone, then fold to |theta| so +/-k agree bitwise
    double theta = std::fabs(std::remainder(k * bath.x0, 2.0 * M_PI));
    return bath.omega_c + 2.0 * bath.xi * std::cos(theta) +
           2.0 * bath.xi_prime * std::cos(2.0 * theta);
}

double dispersion_d1(const BathModel& bath, double k) {
    const double theta = k * bath.x0;
    return -bath.x0 * (2.0 * bath.xi * std::sin(theta) +
                       4.0 * bath.xi_prime * std::sin(2.0 * theta));
}

double dispersion_d2(const BathModel& bath, double k) {
    const double theta = k * bath.x0;
    return -bath.x0 * bath.x0 *
           (2.0 * bath.xi * std::cos(theta) + 8.0 * bath.xi_prime * std::cos(2.0 * theta));
}

double dispersion_d3(const BathModel& bath, double k) {
    const double theta = k * bath.x0;
    return bath.x0 * bath.x0 * bath.x0 *
           (2.0 * bath.xi * std::sin(theta) + 16.0 * bath.xi_prime * std::sin(2.0 * theta));
}

Band band(const BathModel& bath) {
    // omega as a function of c = cos(k x0):
    //   omega(c) = omega_c + 2 xi c + 2 xi' (2 c^2 - 1)
    // extrema at c = +/-1 and, when xi' > 0, at the interior stationary point
    // c* = -xi / (4 xi').
    auto omega_of_c = [&](double c) {
        return bath.omega_c + 2.0 * bath.xi * c + 2.0 * bath.xi_prime * (2.0 * c * c - 1.0);
    };
    double lo = std::min(omega_of_c(1.0), omega_of_c(-1.0));
    double hi = std::max(omega_of_c(1.0), omega_of_c(-1.0));
    if (bath.xi_prime > 0.0) {
        const double cs = -bath.xi / (4.0 * bath.xi_prime);
        if (cs > -1.0 && cs < 1.0) {
            const double w = omega_of_c(cs);
            lo = std::min(lo, w);
            hi = std::max(hi, w);
        }
    }
    return Band{lo, hi};
}

double max_group_speed(const BathModel& bath) {
    if (bath.xi_prime == 0.0) return 2.0 * bath.xi * bath.x0;
    const int n = 8192;
    double best = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double k = (M_PI / bath.x0) * static_cast<double>(i) / n;
        best = std::max(best, std::fabs(dispersion_d1(bath, k)));
    }
    return best;
}

ModeGrid mode_grid(const BathModel& bath, double g) {
    bath.validate();
    if (!(g >= 0.0)) throw std::invalid_argument("mode_grid: g must be >= 0");
    const int N = bath.n_modes;
    ModeGrid grid;
    grid.wavevectors.reserve(N);
    grid.frequencies.reserve(N);
    const int half = (N - 1) / 2;
    for (int n = -half; n <= half; ++n) {
        const double k = 2.0 * M_PI * n / (N * bath.x0);
        grid.wavevectors.push_back(k);
        grid.frequencies.push_back(dispersion(bath, k));
    }
    grid.coupling_scale = g / std::sqrt(static_cast<double>(N));
    return grid;
}

namespace {

// Bisection for dispersion(k) = omega on a bracketing interval.
double bisect_root(const BathModel& bath, double omega, double a, double b) {
    double fa = dispersion(bath, a) - omega;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = dispersion(bath, m) - omega;
        if (fm == 0.0 || (b - a) < 1e-15) return m;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::vector<double> degenerate_wavevectors(const BathModel& bath, double omega, double tol) {
    const Band bd = band(bath);
    if (omega < bd.lo - tol || omega > bd.hi + tol) return {};

    // scan [0, pi/x0] at resolution pi/(512 x0), bracket sign changes, bisect
    const int n_scan = 512;
    const double kmax = bath.zone_edge();
    std::vector<double> roots;
    double k_prev = 0.0;
    double f_prev = dispersion(bath, k_prev) - omega;
    if (std::fabs(f_prev) < 1e-14) roots.push_back(0.0);
    for (int i = 1; i <= n_scan; ++i) {
        const double k = kmax * static_cast<double>(i) / n_scan;
        const double f = dispersion(bath, k) - omega;
        if (std::fabs(f) < 1e-14) {
            roots.push_back(k);
        } else if ((f_prev < 0.0) != (f < 0.0) && std::fabs(f_prev) >= 1e-14) {
            roots.push_back(bisect_root(bath, omega, k_prev, k));
        }
        k_prev = k;
        f_prev = f;
    }

    // de-duplicate and keep only round-tripping solutions
    std::sort(roots.begin(), roots.end());
    std::vector<double> positive;
    for (double k : roots) {
        if (!positive.empty() && std::fabs(k - positive.back()) < 1e-10) continue;
        if (std::fabs(dispersion(bath, k) - omega) <= tol) positive.push_back(k);
    }

    std::vector<double> out;
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
        if (*it > 0.0 && *it < kmax) out.push_back(-*it);
    }
    for (double k : positive) out.push_back(k);
    return out;
}

double spectral_density(const BathModel& bath, double g, double omega) {
    if (!(g >= 0.0)) throw std::invalid_argument("spectral_density: g must be >= 0");
    if (bath.kind == BathKind::NearestNeighbor) {
        const double s2 = 4.0 * bath.xi * bath.xi - (omega - bath.omega_c) * (omega - bath.omega_c);
        if (s2 <= 0.0)
            throw band_edge_error("spectral_density: omega at or beyond a band edge");
        return g * g / (M_PI * std::sqrt(s2));
    }
    const auto ks = degenerate_wavevectors(bath, omega);
    if (ks.empty()) throw band_edge_error("spectral_density: omega outside the band");
    double j = 0.0;
    for (double k : ks) {
        const double v = std::fabs(dispersion_d1(bath, k));
        if (v < 1e-9) throw band_edge_error("spectral_density: van Hove point");
        j += g * g * bath.x0 / (2.0 * M_PI * v);
    }
    return j;
}

double group_velocity_inverse(const BathModel& bath, double omega) {
    const auto ks = degenerate_wavevectors(bath, omega);
    for (double k : ks) {
        if (k <= 0.0) continue;
        const double v = std::fabs(dispersion_d1(bath, k));
        if (v < 1e-9) throw band_edge_error("group_velocity_inverse: van Hove point");
        return 1.0 / v;
    }
    throw band_edge_error("group_velocity_inverse: omega outside the band");
}

} // namespace bicsim
