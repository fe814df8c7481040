#ifndef LANDAU_PHASE_SPACE_HPP
#define LANDAU_PHASE_SPACE_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "landau/quadrature.hpp"

// Husimi Q-densities (pure and thermal) for the coherent-state family
// |(x,y),B,m>, their zero sets, and the wavefunction-overlap oracle.
// Every density reduces to a radial profile in lambda = B(x^2+y^2)/2.

namespace landau::phase_space {

/// Magnetic field strength B > 0 and Landau index m >= 0.
struct LevelParams {
  double B = 1.0;
  int m = 0;
};

/// Inverse temperature beta > 0 (k = 1) with the derived quantities used
/// throughout: T = 1/beta, eta = 1 - e^{-beta}, N_T = (e^{1/T} - 1)^{-1}.
class ThermalParams {
 public:
  explicit ThermalParams(double beta) : beta_(beta) {
    if (!(beta > 0.0))
      throw std::domain_error("ThermalParams: beta must be positive");
  }
  static ThermalParams from_temperature(double t) {
    return ThermalParams(1.0 / t);
  }
  double beta() const { return beta_; }
  double temperature() const { return 1.0 / beta_; }
  double eta() const { return -std::expm1(-beta_); }  // 1 - e^{-beta}
  double mean_photons() const { return 1.0 / std::expm1(beta_); }  // N_T

 private:
  double beta_;
};

/// Radial phase-space coordinate lambda = B (x^2 + y^2) / 2.
double lambda_of(double B, double x, double y);

/// Landau level energy eps_m = (m + 1/2) B.
double landau_energy(const LevelParams& p);

/// Pure-state Husimi density in lambda:
/// (min!/max!) e^{-lambda} lambda^{|m-j|} (L_{min}^{(|m-j|)}(lambda))^2,
/// prefactor formed in the log domain.
double husimi_pure(int m, int j, double lambda);

/// Thermal Husimi density eta e^{-eta lambda} e^{-m beta}
/// L_m^{(0)}(-lambda eta^2 e^beta), evaluated term by term so e^beta is
/// never formed alone.
double husimi_thermal(int m, const ThermalParams& th, double lambda);

/// Radii of the concentric circles where the pure Husimi density vanishes:
/// R_i = sqrt(2 x_i / B) for the zeros x_i of L_{min}^{(|m-j|)}.
/// Empty when min(m, j) = 0.
std::vector<double> husimi_zero_radii(int m, int j, double B);

/// Coherent-state wavefunction <xi | (x,y),B,m>.
std::complex<double> coherent_wavefunction(int m, double B, double x, double y,
                                           double xi);

/// Hermite function Phi_j(xi) = (sqrt(pi) 2^j j!)^{-1/2} e^{-xi^2/2} H_j(xi).
double hermite_function(int j, double xi);

/// Numerical |<(x,y),B,m | phi_j>|^2 by real-line quadrature of the
/// Hermite-Gaussian product. Independent oracle for husimi_pure.
double overlap_oracle(int m, int j, double B, double x, double y,
                      double tol = 1e-10);

/// A probability density on lambda in [0, inf) with its known zero set and
/// decay rate. Immutable value object.
struct RadialDensity {
  std::function<double(double)> pdf;
  std::vector<double> zero_set;
  double decay_rate = 1.0;
  std::string label;
};

/// Density of husimi_pure(m, j, .); zero set from husimi_zero_radii.
/// The constructor self-checks normalization within 1e-8.
RadialDensity make_pure_density(int m, int j);

/// Density of husimi_thermal(m, th, .); strictly positive, decay rate eta.
RadialDensity make_thermal_density(int m, const ThermalParams& th);

}  // namespace landau::phase_space

#endif  // LANDAU_PHASE_SPACE_HPP
