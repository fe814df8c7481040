#include "landau/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace landau::quadrature {

namespace {

// Gauss-Kronrod 7/15 pair on [-1, 1]. Abscissae are the positive half;
// even indices are Kronrod-only points, odd indices the embedded Gauss
// points, index 7 is the center.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double fc = f(center);
  double resg = kWg[3] * fc;
  double resk = kWgk[7] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  double fv1[7], fv2[7];
  for (int i = 0; i < 7; ++i) {
    const double dx = hlgth * kXgk[i];
    fv1[i] = f(center - dx);
    fv2[i] = f(center + dx);
    const double fsum = fv1[i] + fv2[i];
    resk += kWgk[i] * fsum;
    resabs += kWgk[i] * (std::abs(fv1[i]) + std::abs(fv2[i]));
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int i = 0; i < 7; ++i)
    resasc += kWgk[i] * (std::abs(fv1[i] - reskh) + std::abs(fv2[i] - reskh));
  resasc *= std::abs(hlgth);
  double err = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double uflow = std::numeric_limits<double>::min();
  if (resabs * std::abs(hlgth) > uflow / (50.0 * std::numeric_limits<double>::epsilon()))
    err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() *
                            resabs * std::abs(hlgth));
  return Panel{a, b, resk * hlgth, err};
}

}  // namespace

GaussLaguerreRule gauss_laguerre_rule(int n) {
  if (n < 1 || n > 200)
    throw std::domain_error("gauss_laguerre_rule: need 1 <= N <= 200");
  GaussLaguerreRule rule;
  rule.nodes = specfun::laguerre_zeros(n, 0.0);
  rule.weights.resize(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rule.nodes[i];
    const double lnp1 = specfun::laguerre(n + 1, 0.0, x);
    rule.weights[i] = x / ((n + 1.0) * (n + 1.0) * lnp1 * lnp1);
    total += rule.weights[i];
  }
  // The weights sum to 1 analytically; rescaling removes the residual
  // rounding from the eigenvalue stage.
  for (double& w : rule.weights) w /= total;
  return rule;
}

IntegralResult integrate_interval(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureSpec& spec) {
  if (!(b > a)) return {0.0, 0.0, 0};
  // Seed one panel per sub-interval between consecutive split points.
  std::vector<double> edges{a};
  for (double s : spec.split_points)
    if (s > a && s < b) edges.push_back(s);
  edges.push_back(b);

  std::vector<Panel> panels;
  long evals = 0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    panels.push_back(gk15(f, edges[i], edges[i + 1]));
    evals += 15;
  }

  int subdivisions = 0;
  for (;;) {
    double total = 0.0;
    double err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      err += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (err <= tol) return {total, err, evals};
    if (++subdivisions > spec.max_subdivisions)
      throw numerical_failure(
          "integrate_interval: subdivision budget exhausted, best estimate " +
          std::to_string(total) + " +/- " + std::to_string(err));
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (mid <= p.a || mid >= p.b)
      throw numerical_failure("integrate_interval: panel width underflow");
    panels[worst] = gk15(f, p.a, mid);
    panels.push_back(gk15(f, mid, p.b));
    evals += 30;
  }
}

IntegralResult integrate_halfline(const std::function<double(double)>& f,
                                  const QuadratureSpec& spec,
                                  double decay_rate) {
  if (!(decay_rate > 0.0))
    throw std::domain_error("integrate_halfline: decay_rate must be positive");
  // Heuristic envelope constant M with |f(t)| <= M e^{-ct}: the largest
  // sampled |f(t)| e^{ct} (catches polynomial factors riding on the decay)
  // times a safety factor for growth beyond the last sample.
  double fmax = 0.0;
  for (double tc = 0.0; tc <= 80.0; tc += tc < 2.0 ? 0.25 : 2.0)
    fmax = std::max(fmax,
                    std::abs(f(tc / decay_rate)) * std::exp(tc));
  for (double s : spec.split_points)
    fmax = std::max(fmax, std::abs(f(s)) * std::exp(decay_rate * s));
  const double big_m =
      std::max(fmax, std::numeric_limits<double>::min()) * 1e6;

  // Tail bound M e^{-cU} / c < abs_tol / 2 fixes the truncation point.
  double upper =
      std::log(std::max(2.0 * big_m / (decay_rate * spec.abs_tol), 10.0)) /
      decay_rate;
  upper = std::max(upper, 30.0 / decay_rate);
  if (!spec.split_points.empty())
    upper = std::max(upper, spec.split_points.back() * 1.5 + 10.0);

  IntegralResult r = integrate_interval(f, 0.0, upper, spec);
  r.error_estimate += big_m * std::exp(-decay_rate * upper) / decay_rate;
  return r;
}

IntegralResult entropy_integral(const std::function<double(double)>& q,
                                std::span<const double> zeros,
                                const QuadratureSpec& spec,
                                double decay_rate) {
  const double tiny = 1e-300;
  auto integrand = [&q, tiny](double t) {
    const double v = q(t);
    if (v <= tiny) return 0.0;  // limit of -x ln x at 0
    return -v * std::log(v);
  };
  QuadratureSpec s = spec;
  s.split_points.assign(zeros.begin(), zeros.end());
  std::sort(s.split_points.begin(), s.split_points.end());
  // -q ln q picks up a factor ~ t against q, so halve the decay hint.
  return integrate_halfline(integrand, s, 0.5 * decay_rate);
}

double series_sum(const std::function<double(int)>& term,
                  const std::function<double(int)>& tail_bound, double tol,
                  int max_terms) {
  double sum = 0.0;
  for (int j = 0; j < max_terms; ++j) {
    sum += term(j);
    if (tail_bound(j) <= tol) return sum;
  }
  throw numerical_failure("series_sum: budget exhausted before tail bound");
}

namespace {
double golden_search(const std::function<double(double)>& f, double lo,
                     double hi, double x_tol, bool maximize) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  const double sgn = maximize ? 1.0 : -1.0;
  for (int it = 0; it < 400 && (b - a) > x_tol; ++it) {
    if (sgn * f1 > sgn * f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  // Golden section stalls at the sqrt(eps) noise floor; a parabolic fit
  // over a wider stencil recovers the extremum well below that.
  double x0 = 0.5 * (a + b);
  double h = 1e-5 * (1.0 + std::abs(x0));
  h = std::min({h, 0.5 * (hi - x0), 0.5 * (x0 - lo)});
  if (h > 0.0) {
    for (int it = 0; it < 3; ++it) {
      const double fm = f(x0 - h), f0 = f(x0), fp = f(x0 + h);
      const double curvature = fm - 2.0 * f0 + fp;
      const double noise = 16.0 * std::numeric_limits<double>::epsilon() *
                           (std::abs(f0) + std::numeric_limits<double>::min());
      if (sgn * curvature >= 0.0 || std::abs(curvature) <= noise) break;
      const double step = 0.5 * h * (fm - fp) / curvature;
      if (!std::isfinite(step) || std::abs(step) > h) break;
      x0 = std::clamp(x0 + step, lo, hi);
    }
  }
  return x0;
}
}  // namespace

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double x_tol) {
  return golden_search(f, lo, hi, x_tol, true);
}

double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi, double x_tol) {
  return golden_search(f, lo, hi, x_tol, false);
}

}  // namespace landau::quadrature
