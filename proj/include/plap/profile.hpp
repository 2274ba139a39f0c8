#pragma once

#include <vector>

namespace plap {

/// A C^1 profile sampled on an ascending grid: values and first derivatives.
/// Evaluation between nodes is cubic Hermite; cells with a non-finite
/// derivative sample (boundary flux blow-up) degrade to linear interpolation.
struct Profile {
  std::vector<double> x;
  std::vector<double> v;
  std::vector<double> dv;

  std::size_t size() const { return x.size(); }
  double eval(double xq) const;
  double eval_deriv(double xq) const;

  /// max_i |v_i - other.v_i| (grids must match).
  double sup_diff(const Profile& other) const;
  double sup_norm() const;
};

/// Index of the cell [x_i, x_{i+1}] containing xq (clamped to valid range).
std::size_t locate_cell(const std::vector<double>& x, double xq);

}  // namespace plap
