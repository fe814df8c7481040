#ifndef LANDAU_ENTROPY_HPP
#define LANDAU_ENTROPY_HPP

#include <optional>
#include <string>

#include "landau/phase_space.hpp"

// Wehrl, Renyi and von Neumann entropies: the closed forms, their
// quadrature oracles, and the minimum-temperature solver.

namespace landau::entropy {

using phase_space::RadialDensity;
using phase_space::ThermalParams;
using quadrature::QuadratureSpec;

struct EntropyReport {
  std::string subject;
  double numeric_value = 0.0;
  std::optional<double> paper_value;
  std::string formula_id;
  std::optional<double> abs_diff;
};

/// -integral q ln q over the density's support, panels split at its zeros.
double wehrl_numeric(const RadialDensity& d, const QuadratureSpec& spec = {});

/// Closed-form Wehrl entropy of pure(0, j):
/// 1 + j + log j! - j psi(j+1). By the m <-> j symmetry of the pure Husimi
/// density this is also the entropy of pure(j, 0).
double wehrl_pure_m0(int j);

struct AsymptoticEstimate {
  double value = 0.0;  // leading term, o(1) unquantified
  double bound = 0.0;  // printed upper bound log((2 pi / e) min(m,j))
};

/// Leading large-index term log((2pi/e) min^{ |m-j|+1 } / (max+1)^{ |m-j| })
/// of the pure Wehrl entropy. Requires min(m, j) >= 1.
AsymptoticEstimate wehrl_pure_asymptotic(int m, int j);

/// The printed thermal closed form
/// 1 - log(1 - e^{-beta}) + m (beta + e^{-beta} - e^{-2 beta}).
double wehrl_thermal_paper(int m, const ThermalParams& th);

/// Numeric thermal Wehrl entropy side by side with the printed closed form.
/// The two agree at m = 0 only; the report records the difference.
EntropyReport wehrl_thermal_verify(int m, const ThermalParams& th,
                                   const QuadratureSpec& spec = {});

struct MinimumSolution {
  int m = 1;
  double tau = 0.0;       // e^{-beta_min}, root of the stationarity cubic
  double beta_min = 0.0;  // -log tau
  double t_min = 0.0;     // 1 / beta_min
  double s_min = 0.0;     // minimum of the printed thermal entropy
  double cubic_residual = 0.0;
  double tau_closed_form = 0.0;  // the paper's Cardano expression
};

/// Minimizer of the printed thermal entropy over beta for m >= 1. tau is
/// computed both from the paper's closed form and by a safeguarded Newton
/// root of 2m tau^3 - 3m tau^2 + (2m+1) tau - m on (0,1); they must agree
/// within 1e-8.
MinimumSolution min_entropy(int m);

/// Renyi entropy (1/(1-q)) log integral d^q via quadrature; q > 0, q != 1.
double renyi_numeric(const RadialDensity& d, double q,
                     const QuadratureSpec& spec = {});

/// The printed Bell-polynomial Renyi formula for 2q a positive integer,
/// q != 1. Its provenance requires oracle arbitration against
/// renyi_numeric; agreement is not asserted here.
double renyi_bell(int m, int j, double q);

/// von Neumann entropy of the thermal oscillator state:
/// -log(2 sinh(beta/2)) + (beta/2) coth(beta/2), evaluated in a form
/// stable for large beta.
double von_neumann_thermal(const ThermalParams& th);

}  // namespace landau::entropy

#endif  // LANDAU_ENTROPY_HPP
