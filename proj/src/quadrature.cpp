#include "plap/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "plap/errors.hpp"

namespace plap {

namespace {

// Legendre P_n and its derivative at x.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

GaussRule make_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    // Chebyshev initial guess, Newton refinement
    double x = -std::cos(M_PI * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(order, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [p, dp] = legendre(order, x);
    (void)p;
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& GaussRule::get(int order) {
  static std::mutex mtx;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
  return it->second;
}

void GaussRule::build_lagrange() const {
  const int n = static_cast<int>(nodes.size());
  lagrange_coeffs_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    std::vector<double> c{1.0};  // polynomial 1
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      // multiply by (x - x_j)/(x_i - x_j)
      const double denom = nodes[i] - nodes[j];
      std::vector<double> nc(c.size() + 1, 0.0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        nc[k + 1] += c[k] / denom;
        nc[k] -= c[k] * nodes[j] / denom;
      }
      c = std::move(nc);
    }
    lagrange_coeffs_[i] = std::move(c);
  }
}

std::vector<double> GaussRule::partial_weights(double t) const {
  if (lagrange_coeffs_.empty()) build_lagrange();
  const int n = static_cast<int>(nodes.size());
  std::vector<double> w(n, 0.0);
  for (int i = 0; i < n; ++i) {
    // integral of the basis polynomial from -1 to t
    double acc = 0.0;
    const auto& c = lagrange_coeffs_[i];
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double kk = static_cast<double>(k) + 1.0;
      acc += c[k] / kk * (std::pow(t, kk) - std::pow(-1.0, kk));
    }
    w[i] = acc;
  }
  return w;
}

namespace {

double adaptive_impl(const std::function<double(double)>& f, double a, double b,
                     double whole, double tol, int depth, const GaussRule& rule) {
  const double m = 0.5 * (a + b);
  const double left = rule.integrate(f, a, m);
  const double right = rule.integrate(f, m, b);
  const double refined = left + right;
  const double err = std::abs(refined - whole);
  if (err <= tol || (b - a) < 1e-15 * (1.0 + std::abs(a) + std::abs(b)))
    return refined;
  if (depth <= 0)
    throw QuadratureError("adaptive_gauss: depth limit reached, err=" +
                          std::to_string(err));
  return adaptive_impl(f, a, m, left, 0.5 * tol, depth - 1, rule) +
         adaptive_impl(f, m, b, right, 0.5 * tol, depth - 1, rule);
}

}  // namespace

double adaptive_gauss(const std::function<double(double)>& f, double a, double b,
                      double abs_tol, double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  const GaussRule& rule = GaussRule::get(7);
  const double whole = rule.integrate(f, a, b);
  const double tol = std::max(abs_tol, rel_tol * std::abs(whole));
  return adaptive_impl(f, a, b, whole, tol, max_depth, rule);
}

}  // namespace plap
