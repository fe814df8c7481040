#ifndef LANDAU_SPECFUN_HPP
#define LANDAU_SPECFUN_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Self-contained special-function kernel: orthogonal polynomials,
// gamma-family functions, terminating hypergeometric sums and partial
// Bell polynomials. Everything here is a pure function of its arguments.

namespace landau::specfun {

/// Thrown when an iterative stage (eigenvalue sweep, Newton polish, series
/// truncation) fails to converge within its budget.
class numerical_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generalized Laguerre polynomial L_n^{(alpha)}(x) by the three-term
/// recurrence. Total function: x may be negative (the thermal closed forms
/// evaluate L_m^{(0)} at negative arguments) and alpha may be any real.
double laguerre(int n, double alpha, double x);

/// Derivative d/dx L_n^{(alpha)}(x).
double laguerre_derivative(int n, double alpha, double x);

/// The n simple positive zeros of L_n^{(alpha)}, strictly increasing.
/// Golub-Welsch eigenvalues of the Jacobi matrix, Newton-polished.
/// Requires n >= 1 and alpha > -1.
std::vector<double> laguerre_zeros(int n, double alpha);

/// Physicists' Hermite polynomial H_m(x),
/// H_{k+1} = 2 x H_k - 2 k H_{k-1}.
double hermite(int m, double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Digamma function psi(x) for x > 0: recurrence shift to x >= 8 followed
/// by the asymptotic series with Bernoulli coefficients through x^{-12}.
double digamma(double x);

/// Terminating Gauss hypergeometric sum 2F1(-m, -j; c; z), truncated at
/// k = min(m, j) where the numerator Pochhammers vanish. Throws
/// std::domain_error if (c)_k vanishes inside the summation range.
double hyp2f1_terminating(int m, int j, double c, double z);

/// Arguments of a partial (incomplete) Bell polynomial B_{s,l}.
struct BellArgs {
  int s = 0;
  int l = 0;
  std::vector<double> a;  // a_1 .. a_{s-l+1}
};

/// Partial Bell polynomial B_{s,l}(a_1, ..., a_{s-l+1}) via the recurrence
/// B_{s,l} = sum_i C(s-1, i-1) a_i B_{s-i,l-1} with B_{0,0} = 1.
double partial_bell(const BellArgs& args);
double partial_bell(int s, int l, std::span<const double> a);

/// n! exact for n <= 170; throws std::overflow_error above that
/// (use log_factorial instead).
double factorial(int n);

/// log(n!)
double log_factorial(int n);

/// Binomial coefficient with a real upper argument:
/// C(x, k) = x (x-1) ... (x-k+1) / k!.
double binomial(double x, int k);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1).
double pochhammer(double a, int k);

namespace detail {
/// Eigenvalues of a symmetric tridiagonal matrix (diagonal d, subdiagonal e
/// with e.size() == d.size()-1), returned in ascending order. QL algorithm
/// with implicit shifts.
std::vector<double> symtri_eigenvalues(std::vector<double> d,
                                       std::vector<double> e);
}  // namespace detail

}  // namespace landau::specfun

#endif  // LANDAU_SPECFUN_HPP
