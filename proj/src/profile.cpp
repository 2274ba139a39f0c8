#include "plap/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plap {

std::size_t locate_cell(const std::vector<double>& x, double xq) {
  if (x.size() < 2) throw std::invalid_argument("locate_cell: need >= 2 nodes");
  auto it = std::upper_bound(x.begin(), x.end(), xq);
  std::size_t i = (it == x.begin()) ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
  if (i >= x.size() - 1) i = x.size() - 2;
  return i;
}

double Profile::eval(double xq) const {
  const std::size_t i = locate_cell(x, xq);
  const double h = x[i + 1] - x[i];
  const double t = (xq - x[i]) / h;
  if (!std::isfinite(dv[i]) || !std::isfinite(dv[i + 1]))
    return v[i] + t * (v[i + 1] - v[i]);
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * v[i] + (t3 - 2 * t2 + t) * h * dv[i] +
         (-2 * t3 + 3 * t2) * v[i + 1] + (t3 - t2) * h * dv[i + 1];
}

double Profile::eval_deriv(double xq) const {
  const std::size_t i = locate_cell(x, xq);
  const double h = x[i + 1] - x[i];
  const double t = (xq - x[i]) / h;
  if (!std::isfinite(dv[i]) || !std::isfinite(dv[i + 1]))
    return (v[i + 1] - v[i]) / h;
  const double t2 = t * t;
  return ((6 * t2 - 6 * t) * v[i] + (3 * t2 - 4 * t + 1) * h * dv[i] +
          (-6 * t2 + 6 * t) * v[i + 1] + (3 * t2 - 2 * t) * h * dv[i + 1]) / h;
}

double Profile::sup_diff(const Profile& other) const {
  if (x.size() != other.x.size())
    throw std::invalid_argument("Profile::sup_diff: grid size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    m = std::max(m, std::abs(v[i] - other.v[i]));
  return m;
}

double Profile::sup_norm() const {
  double m = 0.0;
  for (double val : v) m = std::max(m, std::abs(val));
  return m;
}

}  // namespace plap
