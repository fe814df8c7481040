#include "landau/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "landau/specfun.hpp"

namespace landau::statistics {

namespace sf = landau::specfun;
namespace quad = landau::quadrature;
using phase_space::husimi_pure;
using phase_space::husimi_thermal;

std::complex<double> cf_pure(int m, int j, double u) {
  if (m < 0 || j < 0)
    throw std::domain_error("cf_pure: indices must be nonnegative");
  const double log_pref = sf::log_factorial(m + j) - sf::log_factorial(m) -
                          sf::log_factorial(j);
  const std::complex<double> one_minus_iu(1.0, -u);
  const std::complex<double> power =
      std::pow(one_minus_iu, -static_cast<double>(m + j + 1));
  const double f =
      sf::hyp2f1_terminating(m, j, -static_cast<double>(m + j), 1.0 + u * u);
  return std::exp(log_pref) * power * f;
}

MomentSummary moments_pure(int m, int j) {
  MomentSummary s;
  s.mean = m + j + 1.0;
  s.variance = 2.0 * m * j + m + j + 1.0;
  s.source = MomentSource::closed_form_paper;
  return s;
}

std::complex<double> cf_thermal(int m, const ThermalParams& th, double u) {
  if (m < 0) throw std::domain_error("cf_thermal: m must be nonnegative");
  const double eta = th.eta();
  const double q = std::exp(-th.beta());
  const std::complex<double> num(eta, -u * q);
  const std::complex<double> den(eta, -u);
  return eta * std::pow(num, m) / std::pow(den, m + 1);
}

MomentSummary moments_thermal(int m, const ThermalParams& th) {
  const double eta = th.eta();
  const double q2 = std::exp(-2.0 * th.beta());
  MomentSummary s;
  s.mean = m + 1.0 / eta;
  s.variance = (m + 1.0 - m * q2) / (eta * eta);
  s.source = MomentSource::cf_cumulant;
  return s;
}

double paper_stated_variance(int m, const ThermalParams& th) {
  const double eta = th.eta();
  return (m + 1.0 - std::exp(-2.0 * th.beta())) / (eta * eta);
}

std::complex<double> cf_quadrature(const RadialDensity& d, double u,
                                   double abs_tol) {
  quad::QuadratureSpec spec;
  spec.abs_tol = abs_tol;
  spec.rel_tol = 1e-12;
  spec.split_points = d.zero_set;
  auto re = [&](double t) { return std::cos(u * t) * d.pdf(t); };
  auto im = [&](double t) { return std::sin(u * t) * d.pdf(t); };
  return {quad::integrate_halfline(re, spec, d.decay_rate).value,
          quad::integrate_halfline(im, spec, d.decay_rate).value};
}

MomentSummary moments_quadrature(const RadialDensity& d, double abs_tol) {
  quad::QuadratureSpec spec;
  spec.abs_tol = abs_tol;
  spec.rel_tol = 1e-12;
  spec.split_points = d.zero_set;
  auto m1 = [&](double t) { return t * d.pdf(t); };
  auto m2 = [&](double t) { return t * t * d.pdf(t); };
  // Polynomial factors erode the exponential decay slightly.
  const double c = 0.75 * d.decay_rate;
  const double mean = quad::integrate_halfline(m1, spec, c).value;
  const double second = quad::integrate_halfline(m2, spec, c).value;
  MomentSummary s;
  s.mean = mean;
  s.variance = second - mean * mean;
  s.source = MomentSource::quadrature;
  return s;
}

double log_mgf_limit(const ThermalParams& th, double u) {
  const double eta = th.eta();
  if (!(u < eta))
    throw std::domain_error("log_mgf_limit: requires u < eta = 1 - e^{-beta}");
  const double q = std::exp(-th.beta());
  return std::log((eta - u * q) / (eta - u));
}

double log_mgf_finite_m(int m, const ThermalParams& th, double u) {
  if (m < 1) throw std::domain_error("log_mgf_finite_m: m must be positive");
  const double eta = th.eta();
  if (!(u < eta)) throw std::domain_error("log_mgf_finite_m: requires u < eta");
  const double q = std::exp(-th.beta());
  return (std::log(eta) + m * std::log(eta - u * q) -
          (m + 1.0) * std::log(eta - u)) /
         m;
}

RateEvaluation rate_thermal(const ThermalParams& th, double xi) {
  if (!(xi > 0.0)) throw std::domain_error("rate_thermal: xi must be positive");
  const double eta = th.eta();
  const double q = std::exp(-th.beta());
  // Stationarity of xi u - Lambda_beta(u):
  //   xi q u^2 - xi eta (1 + q) u + (xi - 1) eta^2 = 0,
  // and the admissible root is the one below eta.
  const double a = xi * q;
  const double b = -xi * eta * (1.0 + q);
  const double c = (xi - 1.0) * eta * eta;
  const double disc = b * b - 4.0 * a * c;
  const double root_term = 0.5 * (std::sqrt(std::max(disc, 0.0)) - b);
  const double u_star = c / root_term;  // smaller root, stable for q -> 0
  RateEvaluation r;
  r.xi = xi;
  r.u_star = u_star;
  r.value = std::max(xi * u_star - log_mgf_limit(th, u_star), 0.0);
  return r;
}

double paper_u_xi(const ThermalParams& th, double xi) {
  const double q = std::exp(-th.beta());
  const double inner = xi * xi * (1.0 - 4.0 * q + 6.0 * q * q -
                                  4.0 * q * q * q + q * q * q * q) +
                       xi * (4.0 * q - 8.0 * q * q + 4.0 * q * q * q);
  return (xi * (1.0 - q) - std::sqrt(inner)) / (2.0 * xi * q);
}

double rate_pure_limit(double xi) {
  if (!(xi > 0.0))
    throw std::domain_error("rate_pure_limit: xi must be positive");
  return xi - 1.0 - std::log(xi);
}

double pmf_X(int m, double lambda, int j) { return husimi_pure(m, j, lambda); }

double pmf_Y(int m, double lambda, const ThermalParams& th) {
  if (m < 0) throw std::domain_error("pmf_Y: m must be nonnegative");
  if (!(lambda >= 0.0))
    throw std::domain_error("pmf_Y: lambda must be nonnegative");
  // N_T = (1-eta)/eta, 1+N_T = 1/eta, N_T(1+N_T) = (1-eta)/eta^2; the
  // printed form is exactly the thermal Husimi density read as a PMF in m.
  return husimi_thermal(m, th, lambda);
}

std::vector<double> pmf_truncate(const std::function<double(int)>& pmf,
                                 int max_index) {
  std::vector<double> masses;
  double cdf = 0.0;
  int mode = 0;
  double mode_mass = -1.0;
  for (int j = 0; j < max_index; ++j) {
    const double p = pmf(j);
    if (!(p >= 0.0))
      throw std::domain_error("pmf_truncate: negative mass at index " +
                              std::to_string(j));
    masses.push_back(p);
    cdf += p;
    if (p > mode_mass) {
      mode_mass = p;
      mode = j;
    }
    const bool tail_decreasing = j == mode || p <= masses[j - 1];
    if (cdf >= 1.0 - 1e-12 && j >= mode && tail_decreasing) return masses;
  }
  throw quad::numerical_failure("pmf_truncate: quantile not reached");
}

std::vector<int> sample_pmf(const std::function<double(int)>& pmf,
                            std::size_t n, std::uint64_t seed) {
  const std::vector<double> masses = pmf_truncate(pmf);
  const double total = [&masses] {
    double s = 0.0;
    for (double p : masses) s += p;
    return s;
  }();
  if (std::abs(total - 1.0) > 1e-10)
    throw std::domain_error("sample_pmf: masses do not sum to 1");
  std::vector<double> cdf(masses.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    acc += masses[i];
    cdf[i] = acc;
  }
  cdf.back() = std::max(cdf.back(), 1.0);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<int> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = unif(rng);
    samples[i] = static_cast<int>(
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
  }
  return samples;
}

}  // namespace landau::statistics
