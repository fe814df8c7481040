#ifndef LANDAU_QUADRATURE_HPP
#define LANDAU_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "landau/specfun.hpp"

// Numerical integration and series-summation oracles. These are the
// independent engines used to verify every closed form in the library,
// so nothing here may call into phase_space/statistics/entropy.

namespace landau::quadrature {

using specfun::numerical_failure;

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
  std::vector<double> split_points;  // known integrand zeros/kinks, ascending
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// N-point Gauss-Laguerre rule for the weight e^{-x} on [0, inf);
/// exact for polynomials of degree <= 2N-1. 1 <= N <= 200.
GaussLaguerreRule gauss_laguerre_rule(int n);

/// Adaptive Gauss-Kronrod 7/15 integration over the finite interval [a, b],
/// honoring spec.split_points inside the interval.
IntegralResult integrate_interval(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureSpec& spec = {});

/// Adaptive integration of f over [0, inf) for integrands with
/// at-most-polynomial * e^{-decay_rate * t} decay. The truncation point is
/// chosen from the decay hint so the analytic tail bound stays below
/// abs_tol / 2.
IntegralResult integrate_halfline(const std::function<double(double)>& f,
                                  const QuadratureSpec& spec,
                                  double decay_rate);

/// -integral q ln q over [0, inf) with the convention 0 ln 0 = 0, panels
/// split at the supplied zeros of q.
IntegralResult entropy_integral(const std::function<double(double)>& q,
                                std::span<const double> zeros,
                                const QuadratureSpec& spec,
                                double decay_rate);

/// Partial sum of term(0) + term(1) + ... stopped once the caller-proven
/// tail bound drops to tol.
double series_sum(const std::function<double(int)>& term,
                  const std::function<double(int)>& tail_bound, double tol,
                  int max_terms = 200000);

/// Golden-section maximizer of a smooth unimodal f on [lo, hi].
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double x_tol = 1e-12);

/// Golden-section minimizer.
double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi, double x_tol = 1e-12);

}  // namespace landau::quadrature

#endif  // LANDAU_QUADRATURE_HPP
