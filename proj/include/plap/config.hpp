#pragma once

#include "plap/errors.hpp"

namespace plap {

/// Numerical knobs shared by the solvers and checkers.
struct SolverConfig {
  int grid_n = 2048;           // master panel count (>= 64)
  int quad_order = 5;          // Gauss points per panel
  double boundary_tol = 1e-10; // |v(b)| acceptance for the representation solve
  double fp_tol = 1e-10;       // sup-norm stop for fixed-point iterations
  double residual_tol = 1e-6;  // acceptance threshold for the residual audit
  int max_root_iters = 200;
  int max_picard = 500;
  double audit_margin = 1e-3;  // boundary layer excluded from the audit, fraction of (b-a)
  double damping_init = 0.5;
  double cone_tol = 1e-6;      // strict-slope slack for cone membership
  double inf_tol = 1e-9;       // slack when certifying strict integral inequalities
  double grid_tol = 1e-8;      // node-wise comparison slack
  int window_lattice = 32;     // candidate window endpoints per side

  void validate() const {
    if (grid_n < 64) throw InputError("SolverConfig: grid_n must be >= 64");
    if (quad_order < 2 || quad_order > 16)
      throw InputError("SolverConfig: quad_order out of range [2,16]");
    auto pos = [](double v) { return v > 0.0; };
    if (!pos(boundary_tol) || !pos(fp_tol) || !pos(residual_tol) ||
        !pos(audit_margin) || !pos(damping_init) || !pos(cone_tol) ||
        !pos(inf_tol) || !pos(grid_tol))
      throw InputError("SolverConfig: tolerances must be positive");
    if (max_root_iters < 1 || max_picard < 1 || window_lattice < 2)
      throw InputError("SolverConfig: iteration/lattice counts must be positive");
  }
};

}  // namespace plap
