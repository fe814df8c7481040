#include "landau/entropy.hpp"

#include <cmath>

#include "landau/specfun.hpp"

namespace landau::entropy {

namespace sf = landau::specfun;
namespace quad = landau::quadrature;

double wehrl_numeric(const RadialDensity& d, const QuadratureSpec& spec) {
  return quad::entropy_integral(d.pdf, d.zero_set, spec, d.decay_rate).value;
}

double wehrl_pure_m0(int j) {
  if (j < 0) throw std::domain_error("wehrl_pure_m0: j must be nonnegative");
  return 1.0 + j + sf::log_factorial(j) - j * sf::digamma(j + 1.0);
}

AsymptoticEstimate wehrl_pure_asymptotic(int m, int j) {
  const int mn = std::min(m, j);
  const int mx = std::max(m, j);
  const int d = std::abs(m - j);
  if (mn < 1)
    throw std::domain_error(
        "wehrl_pure_asymptotic: expression degenerates at min(m,j) = 0");
  AsymptoticEstimate est;
  est.value = std::log(2.0 * M_PI) - 1.0 + (d + 1.0) * std::log(mn) -
              d * std::log(mx + 1.0);
  est.bound = std::log(2.0 * M_PI) - 1.0 + std::log(static_cast<double>(mn));
  return est;
}

double wehrl_thermal_paper(int m, const ThermalParams& th) {
  if (m < 0)
    throw std::domain_error("wehrl_thermal_paper: m must be nonnegative");
  const double beta = th.beta();
  const double q = std::exp(-beta);
  return 1.0 - std::log1p(-q) + m * (beta + q - q * q);
}

EntropyReport wehrl_thermal_verify(int m, const ThermalParams& th,
                                   const QuadratureSpec& spec) {
  EntropyReport rep;
  rep.subject = "thermal(m=" + std::to_string(m) +
                ",beta=" + std::to_string(th.beta()) + ")";
  rep.numeric_value =
      wehrl_numeric(phase_space::make_thermal_density(m, th), spec);
  rep.paper_value = wehrl_thermal_paper(m, th);
  rep.formula_id = "thermal-wehrl-closed-form";
  rep.abs_diff = std::abs(rep.numeric_value - *rep.paper_value);
  return rep;
}

namespace {

double stationarity_cubic(int m, double tau) {
  return ((2.0 * m * tau - 3.0 * m) * tau + (2.0 * m + 1.0)) * tau - m;
}

// The paper's Cardano-style closed form for the cubic root in (0,1).
double tau_closed_form_paper(int m) {
  const double md = m;
  const double radical = std::sqrt(28.0 + 8.0 / (md * md * md) +
                                   39.0 / (md * md) - 48.0 / md);
  const double core =
      std::cbrt(radical / (24.0 * std::sqrt(3.0)) + (md - 1.0) / (8.0 * md));
  return 0.5 + core - (2.0 + md) / (12.0 * md * core);
}

// Safeguarded Newton on (0,1); the cubic is negative at 0 and positive at 1.
double tau_newton(int m) {
  double lo = 0.0;
  double hi = 1.0;
  double tau = 0.5;
  for (int it = 0; it < 200; ++it) {
    const double f = stationarity_cubic(m, tau);
    if (f > 0.0)
      hi = tau;
    else
      lo = tau;
    const double fp = (6.0 * m * tau - 6.0 * m) * tau + (2.0 * m + 1.0);
    double next = fp != 0.0 ? tau - f / fp : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - tau) <= 1e-16) return next;
    tau = next;
  }
  return tau;
}

}  // namespace

MinimumSolution min_entropy(int m) {
  if (m < 1) throw std::domain_error("min_entropy: m must be positive");
  MinimumSolution sol;
  sol.m = m;
  sol.tau_closed_form = tau_closed_form_paper(m);
  sol.tau = tau_newton(m);
  if (std::abs(sol.tau - sol.tau_closed_form) > 1e-8)
    throw quad::numerical_failure(
        "min_entropy: closed-form and Newton roots disagree at m = " +
        std::to_string(m));
  sol.beta_min = -std::log(sol.tau);
  sol.t_min = 1.0 / sol.beta_min;
  sol.s_min = wehrl_thermal_paper(m, ThermalParams(sol.beta_min));
  sol.cubic_residual = std::abs(stationarity_cubic(m, sol.tau));
  return sol;
}

double renyi_numeric(const RadialDensity& d, double q,
                     const QuadratureSpec& spec) {
  if (!(q > 0.0) || q == 1.0)
    throw std::domain_error("renyi_numeric: requires q > 0, q != 1");
  QuadratureSpec s = spec;
  s.split_points = d.zero_set;
  auto integrand = [&d, q](double t) { return std::pow(d.pdf(t), q); };
  const double integral =
      quad::integrate_halfline(integrand, s, q * d.decay_rate).value;
  return std::log(integral) / (1.0 - q);
}

double renyi_bell(int m, int j, double q) {
  const double twoq_real = 2.0 * q;
  const int twoq = static_cast<int>(std::lround(twoq_real));
  if (twoq < 1 || std::abs(twoq_real - twoq) > 1e-12 || q == 1.0)
    throw std::domain_error("renyi_bell: requires 2q a positive integer, q != 1");
  const int n = std::min(m, j);
  const int alpha = std::abs(m - j);

  // c_k^{(n,alpha)} = sqrt((n+k)!/n!) (-1)^k / (alpha+k)! C(n,k), zero past n.
  auto coeff = [n, alpha](int k) {
    if (k > n) return 0.0;
    const double log_mag = 0.5 * (sf::log_factorial(n + k) - sf::log_factorial(n)) -
                           sf::log_factorial(alpha + k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(log_mag) * sf::binomial(static_cast<double>(n), k);
  };

  const int kmax = n * twoq;  // 2 (m ^ j) q
  double sum = 0.0;
  std::vector<double> args;
  for (int k = 0; k <= kmax; ++k) {
    args.resize(k + 1);
    for (int i = 0; i <= k; ++i)
      args[i] = sf::factorial(i + 1) * coeff(i);  // (i+1)! c_i
    const double bell = sf::partial_bell(k + twoq, twoq, args);
    // Gamma/power/factorial prefactor accumulated in the log domain.
    const double log_pref = sf::log_gamma(alpha * q + k + 1.0) -
                            (alpha * q + k + 1.0) * std::log(q) +
                            sf::log_factorial(twoq) -
                            sf::log_factorial(k + twoq);
    sum += std::exp(log_pref) * bell;
  }
  return std::log(sum) / (1.0 - q);
}

double von_neumann_thermal(const ThermalParams& th) {
  const double beta = th.beta();
  const double q = std::exp(-beta);
  // -log(2 sinh(beta/2)) = -beta/2 - log(1 - e^{-beta});
  // coth(beta/2) = (1 + e^{-beta}) / (1 - e^{-beta}).
  return -0.5 * beta - std::log1p(-q) +
         0.5 * beta * (1.0 + q) / (1.0 - q);
}

}  // namespace landau::entropy
