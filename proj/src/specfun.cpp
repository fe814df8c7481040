#include "landau/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace landau::specfun {

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw std::domain_error("laguerre: n must be nonnegative");
  if (n == 0) return 1.0;
  double lm1 = 1.0;            // L_0
  double l = 1.0 + alpha - x;  // L_1
  for (int k = 1; k < n; ++k) {
    const double lp1 =
        ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

double laguerre_derivative(int n, double alpha, double x) {
  if (n == 0) return 0.0;
  // d/dx L_n^{(a)}(x) = -L_{n-1}^{(a+1)}(x)
  return -laguerre(n - 1, alpha + 1.0, x);
}

namespace detail {

std::vector<double> symtri_eigenvalues(std::vector<double> d,
                                       std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return {};
  if (static_cast<int>(e.size()) != n - 1)
    throw std::invalid_argument("symtri_eigenvalues: bad subdiagonal length");
  e.push_back(0.0);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw numerical_failure(
              "symtri_eigenvalues: QL sweep failed to converge at index " +
              std::to_string(l));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace detail

std::vector<double> laguerre_zeros(int n, double alpha) {
  if (n < 1) throw std::domain_error("laguerre_zeros: n must be positive");
  if (alpha <= -1.0)
    throw std::domain_error("laguerre_zeros: alpha must exceed -1");
  // Jacobi matrix of the Laguerre weight x^alpha e^{-x}.
  std::vector<double> diag(n);
  std::vector<double> sub(n - 1);
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) sub[i - 1] = std::sqrt(i * (i + alpha));
  std::vector<double> zeros = detail::symtri_eigenvalues(diag, sub);

  // Newton polish with the recurrence values.
  for (int i = 0; i < n; ++i) {
    double x = zeros[i];
    bool converged = false;
    for (int it = 0; it < 50; ++it) {
      const double f = laguerre(n, alpha, x);
      const double fp = laguerre_derivative(n, alpha, x);
      if (fp == 0.0) break;
      const double dx = f / fp;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged && std::abs(laguerre(n, alpha, x)) > 1e-10)
      throw numerical_failure("laguerre_zeros: Newton stage stalled at zero " +
                              std::to_string(i));
    zeros[i] = x;
  }
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

double hermite(int m, double x) {
  if (m < 0) throw std::domain_error("hermite: m must be nonnegative");
  if (m == 0) return 1.0;
  double hm1 = 1.0;
  double h = 2.0 * x;
  for (int k = 1; k < m; ++k) {
    const double hp1 = 2.0 * x * h - 2.0 * k * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  return std::lgamma(x);
}

double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");
  double result = 0.0;
  while (x < 8.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic series: psi(x) ~ ln x - 1/(2x) - sum B_{2k}/(2k x^{2k}).
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = inv2 * (1.0 / 12.0 -
                  inv2 * (1.0 / 120.0 -
                  inv2 * (1.0 / 252.0 -
                  inv2 * (1.0 / 240.0 -
                  inv2 * (1.0 / 132.0 -
                  inv2 * (691.0 / 32760.0))))));
  return result + std::log(x) - 0.5 * inv - series;
}

double hyp2f1_terminating(int m, int j, double c, double z) {
  if (m < 0 || j < 0)
    throw std::domain_error("hyp2f1_terminating: m, j must be nonnegative");
  const int kmax = std::min(m, j);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    const double denom = c + (k - 1);
    if (denom == 0.0)
      throw std::domain_error(
          "hyp2f1_terminating: Pochhammer (c)_k vanishes at k = " +
          std::to_string(k));
    term *= (-m + (k - 1)) * (-j + (k - 1)) / denom * z / k;
    sum += term;
  }
  return sum;
}

double partial_bell(int s, int l, std::span<const double> a) {
  if (s < 0 || l < 0 || l > s)
    throw std::domain_error("partial_bell: requires 0 <= l <= s");
  if (static_cast<int>(a.size()) != s - l + 1)
    throw std::invalid_argument("partial_bell: need exactly s-l+1 arguments");
  if (s == 0) return 1.0;  // B_{0,0}
  if (l == 0) return 0.0;
  // table[t][u] = B_{t,u}; only t >= u contribute.
  std::vector<std::vector<double>> table(s + 1, std::vector<double>(l + 1, 0.0));
  table[0][0] = 1.0;
  for (int t = 1; t <= s; ++t) {
    for (int u = 1; u <= std::min(t, l); ++u) {
      double acc = 0.0;
      const int imax = std::min(t - u + 1, static_cast<int>(a.size()));
      for (int i = 1; i <= imax; ++i)
        acc += binomial(t - 1.0, i - 1) * a[i - 1] * table[t - i][u - 1];
      table[t][u] = acc;
    }
  }
  return table[s][l];
}

double partial_bell(const BellArgs& args) {
  return partial_bell(args.s, args.l, std::span<const double>(args.a));
}

double factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  if (n > 170)
    throw std::overflow_error("factorial: overflow, use log_factorial");
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

double log_factorial(int n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  return std::lgamma(n + 1.0);
}

double binomial(double x, int k) {
  if (k < 0) throw std::domain_error("binomial: negative lower argument");
  double r = 1.0;
  // In-order accumulation keeps every partial product an exact integer
  // when x is an integer.
  for (int i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
  return r;
}

double pochhammer(double a, int k) {
  if (k < 0) throw std::domain_error("pochhammer: negative order");
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= a + i;
  return r;
}

}  // namespace landau::specfun
