#pragma once

#include <functional>
#include <vector>

namespace plap {

/// Gauss-Legendre rule on the reference interval [-1, 1].
///
/// Rules are computed once per order (Newton on the Legendre polynomial) and
/// cached for the lifetime of the process.
struct GaussRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // sum to 2

  static const GaussRule& get(int order);

  /// Integrate f over [a, b] with this rule.
  template <typename F>
  double integrate(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      s += weights[i] * f(mid + half * nodes[i]);
    return half * s;
  }

  /// Weights of the partial integrals int_{-1}^{t} L_i of the Lagrange basis.
  /// Used to evaluate the running integral of an interpolated integrand at an
  /// arbitrary point of the panel without re-sampling it.
  std::vector<double> partial_weights(double t) const;

 private:
  // monomial coefficients of each Lagrange basis polynomial, built lazily
  mutable std::vector<std::vector<double>> lagrange_coeffs_;
  void build_lagrange() const;
};

/// Adaptive bisection quadrature with a Gauss core. Throws QuadratureError if
/// the requested tolerance cannot be met within the depth limit.
double adaptive_gauss(const std::function<double(double)>& f, double a, double b,
                      double abs_tol = 1e-13, double rel_tol = 1e-13,
                      int max_depth = 60);

}  // namespace plap
