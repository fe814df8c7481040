#ifndef LANDAU_STATISTICS_HPP
#define LANDAU_STATISTICS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "landau/phase_space.hpp"

// Characteristic functions, moments, large-deviation objects and the dual
// photon-count distributions of the Husimi densities.

namespace landau::statistics {

using phase_space::RadialDensity;
using phase_space::ThermalParams;

enum class MomentSource { closed_form_paper, cf_cumulant, quadrature };

struct MomentSummary {
  double mean = 0.0;
  double variance = 0.0;
  MomentSource source = MomentSource::closed_form_paper;
};

/// Characteristic function of the pure Husimi density:
/// ((m+j)!/(m! j!)) (1-iu)^{-(m+j+1)} 2F1(-m,-j;-m-j; 1+u^2).
std::complex<double> cf_pure(int m, int j, double u);

/// Closed-form mean m+j+1 and variance 2mj+m+j+1.
MomentSummary moments_pure(int m, int j);

/// Characteristic function of the thermal Husimi density:
/// eta (eta - iu e^{-beta})^m / (eta - iu)^{m+1}.
std::complex<double> cf_thermal(int m, const ThermalParams& th, double u);

/// Mean m + 1/eta (as printed) and the cumulant-derived variance
/// (m + 1 - m e^{-2 beta}) / eta^2.
MomentSummary moments_thermal(int m, const ThermalParams& th);

/// The paper's printed thermal variance (m + 1 - e^{-2 beta}) / eta^2,
/// kept verbatim for the discrepancy ledger; it matches the cumulant value
/// only at m = 1.
double paper_stated_variance(int m, const ThermalParams& th);

/// Quadrature CF oracle: integral of e^{iu lambda} d(lambda) d lambda.
std::complex<double> cf_quadrature(const RadialDensity& d, double u,
                                   double abs_tol = 1e-11);

/// Quadrature moment oracle (mean and variance of a radial density).
MomentSummary moments_quadrature(const RadialDensity& d,
                                 double abs_tol = 1e-11);

/// Limiting logarithmic MGF Lambda_beta(u) = log((eta - u e^{-beta}) /
/// (eta - u)) for u < eta.
double log_mgf_limit(const ThermalParams& th, double u);

/// Finite-m quotient (1/m) log E(e^{u Q_beta^{(m)}}), u < eta.
double log_mgf_finite_m(int m, const ThermalParams& th, double u);

struct RateEvaluation {
  double xi = 0.0;
  double u_star = 0.0;
  double value = 0.0;
};

/// Legendre-Fenchel rate of the thermal family: u_star solves the
/// stationarity quadratic of xi u - Lambda_beta(u) (root < eta) and
/// value = xi u_star - Lambda_beta(u_star).
RateEvaluation rate_thermal(const ThermalParams& th, double xi);

/// The paper's printed u_xi expression, kept verbatim for the ledger
/// (it gives -eta/2 at xi = 1 instead of 0).
double paper_u_xi(const ThermalParams& th, double xi);

/// Rate function of the pure family: xi - 1 - log xi.
double rate_pure_limit(double xi);

/// Pr(X_lambda^{(m)} = j) = Q_j^{(m)}(lambda); Poisson(lambda) at m = 0.
double pmf_X(int m, double lambda, int j);

/// Photon-count law of the mixed light, Laguerre distribution in m:
/// (N_T^m / (1+N_T)^{m+1}) e^{-lambda/(1+N_T)}
/// L_m^{(0)}(-lambda / (N_T (1+N_T))).
double pmf_Y(int m, double lambda, const ThermalParams& th);

/// Masses pmf(0..J) truncated at the first J past the mode with
/// CDF >= 1 - 1e-12.
std::vector<double> pmf_truncate(const std::function<double(int)>& pmf,
                                 int max_index = 100000);

/// Deterministic inverse-CDF sampler from a truncated PMF.
std::vector<int> sample_pmf(const std::function<double(int)>& pmf,
                            std::size_t n, std::uint64_t seed);

}  // namespace landau::statistics

#endif  // LANDAU_STATISTICS_HPP
