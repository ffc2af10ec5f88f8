// errors.hpp — failure conditions surfaced by the numerical routines

#pragma once

#include <stdexcept>
#include <string>

namespace bicsim {

// Evaluation requested at (or beyond) a van Hove point where the density of
// states diverges.  Reported instead of returning a large number so callers
// can apply their own cutoff policy.
class band_edge_error : public std::domain_error {
public:
    explicit band_edge_error(const std::string& what) : std::domain_error(what) {}
};

// An adaptive quadrature failed to stabilize under refinement.
class quadrature_error : public std::runtime_error {
public:
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

// The integro-differential stepper rejected the requested step size.
class step_size_error : public std::runtime_error {
public:
    explicit step_size_error(const std::string& what) : std::runtime_error(what) {}
};

// A Laplace-domain evaluation was requested too close to a pole.
class pole_proximity_error : public std::runtime_error {
public:
    explicit pole_proximity_error(const std::string& what) : std::runtime_error(what) {}
};

// The normalization integrand is non-integrable because the interference
// condition does not hold at the requested energy.
class non_integrable_error : public std::domain_error {
public:
    explicit non_integrable_error(const std::string& what) : std::domain_error(what) {}
};

} // namespace bicsim
