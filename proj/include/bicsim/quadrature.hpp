// quadrature.hpp — band integrals over the Brillouin zone, including Cauchy
// principal values across the resonant wavevectors.
//
// Every band integral here is evaluated in k rather than omega: the change of
// variables removes the van Hove 1/sqrt singularities of J(omega) exactly, so
// the only special points left are the simple poles at dispersion(k) = E.

#pragma once

#include <functional>
#include <vector>

#include "bicsim/bath.hpp"

namespace bicsim {

struct QuadratureOptions {
    double tol = 1e-10;       // refinement stability target
    int max_doublings = 22;   // give up (quadrature_error) beyond this
};

// Composite-Simpson integral of a smooth f on [a, b], with interval doubling
// until two successive estimates agree to opts.tol.
double integrate_refine(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& opts = {});

// PV integral_0^{pi/x0} f(k) / (E - omega(k)) dk.
// f must be smooth on the half zone and df its derivative (used to regularize
// the integrand at the poles).  E outside the band makes this an ordinary
// integral.  Throws band_edge_error when E sits within ~1e-9 of a van Hove
// point, quadrature_error if refinement does not stabilize.
double pv_half_zone(const BathModel& bath, double E,
                    const std::function<double(double)>& f,
                    const std::function<double(double)>& df,
                    const QuadratureOptions& opts = {});

// integral_0^{pi/x0} (1 +/- cos(k R)) / (E0 - omega(k))^2 dk for an energy E0
// that satisfies the interference condition on the given branch (the double
// poles are then removable).  Throws non_integrable_error otherwise.
double interference_weight_half_zone(const BathModel& bath, double e0, double R,
                                     BranchSign branch,
                                     const QuadratureOptions& opts = {});

} // namespace bicsim
