#include "landau/phase_space.hpp"

#include <cmath>

#include "landau/specfun.hpp"

namespace landau::phase_space {

namespace sf = landau::specfun;
namespace quad = landau::quadrature;

double lambda_of(double B, double x, double y) {
  if (!(B > 0.0)) throw std::domain_error("lambda_of: B must be positive");
  return 0.5 * B * (x * x + y * y);
}

double landau_energy(const LevelParams& p) {
  if (!(p.B > 0.0))
    throw std::domain_error("landau_energy: B must be positive");
  return (p.m + 0.5) * p.B;
}

double husimi_pure(int m, int j, double lambda) {
  if (m < 0 || j < 0)
    throw std::domain_error("husimi_pure: indices must be nonnegative");
  if (!(lambda >= 0.0))
    throw std::domain_error("husimi_pure: lambda must be nonnegative");
  const int mn = std::min(m, j);
  const int d = std::abs(m - j);
  if (lambda == 0.0) return d == 0 ? 1.0 : 0.0;
  const double lag = sf::laguerre(mn, d, lambda);
  const double log_pref =
      sf::log_factorial(mn) - sf::log_factorial(mn + d) - lambda +
      d * std::log(lambda);
  return std::exp(log_pref) * lag * lag;
}

double husimi_thermal(int m, const ThermalParams& th, double lambda) {
  if (m < 0) throw std::domain_error("husimi_thermal: m must be nonnegative");
  if (!(lambda >= 0.0))
    throw std::domain_error("husimi_thermal: lambda must be nonnegative");
  const double beta = th.beta();
  const double eta = th.eta();
  // e^{-m beta} L_m^{(0)}(-lambda eta^2 e^beta)
  //   = sum_k C(m,k) (lambda eta^2)^k e^{-(m-k) beta} / k!,
  // each term bounded, so large beta never overflows.
  double series = 0.0;
  double binom = 1.0;       // C(m, k)
  double power = 1.0;       // (lambda eta^2)^k / k!
  for (int k = 0; k <= m; ++k) {
    series += binom * power * std::exp(-(m - k) * beta);
    binom *= static_cast<double>(m - k) / (k + 1.0);
    power *= lambda * eta * eta / (k + 1.0);
  }
  return eta * std::exp(-eta * lambda) * series;
}

std::vector<double> husimi_zero_radii(int m, int j, double B) {
  if (!(B > 0.0))
    throw std::domain_error("husimi_zero_radii: B must be positive");
  const int mn = std::min(m, j);
  if (mn == 0) return {};
  const int d = std::abs(m - j);
  std::vector<double> radii = sf::laguerre_zeros(mn, d);
  for (double& r : radii) r = std::sqrt(2.0 * r / B);
  return radii;
}

double hermite_function(int j, double xi) {
  const double log_norm =
      -0.5 * (0.5 * std::log(M_PI) + j * std::log(2.0) + sf::log_factorial(j));
  return std::exp(log_norm - 0.5 * xi * xi) * sf::hermite(j, xi);
}

std::complex<double> coherent_wavefunction(int m, double B, double x, double y,
                                           double xi) {
  if (!(B > 0.0))
    throw std::domain_error("coherent_wavefunction: B must be positive");
  const double sb = std::sqrt(B);
  const double shifted = xi - sb * x;
  const double phase = -sb * xi * y + 0.5 * B * x * y;
  return hermite_function(m, shifted) *
         std::exp(std::complex<double>(0.0, phase));
}

double overlap_oracle(int m, int j, double B, double x, double y, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("overlap_oracle: tol must be > 0");
  // Both factors are Hermite-Gaussians; essentially all mass lies within
  // this radius.
  const double radius =
      std::sqrt(B) * std::max(std::abs(x), 1.0) + std::sqrt(2.0 * (m + j) + 40.0);
  quad::QuadratureSpec spec;
  spec.abs_tol = std::min(tol, 1e-10) * 0.1;
  spec.rel_tol = 1e-12;
  auto re = [&](double xi) {
    return (std::conj(coherent_wavefunction(m, B, x, y, xi)) *
            hermite_function(j, xi))
        .real();
  };
  auto im = [&](double xi) {
    return (std::conj(coherent_wavefunction(m, B, x, y, xi)) *
            hermite_function(j, xi))
        .imag();
  };
  const double vre = quad::integrate_interval(re, -radius, radius, spec).value;
  const double vim = quad::integrate_interval(im, -radius, radius, spec).value;
  return vre * vre + vim * vim;
}

namespace {
void self_check_normalization(const RadialDensity& d) {
  quad::QuadratureSpec spec;
  spec.abs_tol = 1e-11;
  spec.rel_tol = 1e-11;
  spec.split_points = d.zero_set;
  const double mass =
      quad::integrate_halfline(d.pdf, spec, d.decay_rate).value;
  if (std::abs(mass - 1.0) > 1e-8)
    throw quad::numerical_failure("RadialDensity " + d.label +
                                  ": normalization self-check failed, mass = " +
                                  std::to_string(mass));
}
}  // namespace

RadialDensity make_pure_density(int m, int j) {
  RadialDensity d;
  d.pdf = [m, j](double lambda) { return husimi_pure(m, j, lambda); };
  const int mn = std::min(m, j);
  if (mn >= 1) d.zero_set = sf::laguerre_zeros(mn, std::abs(m - j));
  d.decay_rate = 1.0;
  d.label = "pure(m=" + std::to_string(m) + ",j=" + std::to_string(j) + ")";
  self_check_normalization(d);
  return d;
}

RadialDensity make_thermal_density(int m, const ThermalParams& th) {
  RadialDensity d;
  ThermalParams copy = th;
  d.pdf = [m, copy](double lambda) { return husimi_thermal(m, copy, lambda); };
  d.decay_rate = th.eta();
  d.label =
      "thermal(m=" + std::to_string(m) + ",beta=" + std::to_string(th.beta()) +
      ")";
  self_check_normalization(d);
  return d;
}

}  // namespace landau::phase_space
