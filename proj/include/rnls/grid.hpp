#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

#include "rnls/errors.hpp"

namespace rnls {

// Uniform symmetric tensor grid on [-L, L]^d with trapezoidal quadrature.
// One axis rule is shared by all dimensions; grid functions are stored flat
// in row-major order (last axis fastest).
struct Grid {
  int d = 1;
  Eigen::VectorXd axis_x;  // strictly increasing, symmetric about 0
  Eigen::VectorXd axis_w;  // positive, sums to 2L
  double half_width = 0.0;

  int points_per_axis() const { return static_cast<int>(axis_x.size()); }

  std::int64_t size() const {
    std::int64_t s = 1;
    for (int k = 0; k < d; ++k) s *= points_per_axis();
    return s;
  }

  double spacing() const { return axis_x[1] - axis_x[0]; }

  // product quadrature weight of the flat index i
  double weight(std::int64_t i) const {
    const int P = points_per_axis();
    double w = 1.0;
    for (int k = 0; k < d; ++k) {
      w *= axis_w[static_cast<int>(i % P)];
      i /= P;
    }
    return w;
  }
};

inline Grid make_uniform_grid(int d, int points_per_axis, double L) {
  if (d < 1) throw domain_error("grid: dimension must be positive");
  if (points_per_axis < 2) throw domain_error("grid: need at least two points per axis");
  if (!(L > 0)) throw domain_error("grid: half-width must be positive");
  Grid g;
  g.d = d;
  g.half_width = L;
  const int P = points_per_axis;
  g.axis_x.resize(P);
  const double h = 2.0 * L / (P - 1);
  // mirror construction keeps x reversed-and-negated bitwise equal to x
  for (int i = 0; i < P / 2; ++i) {
    g.axis_x[i] = -L + i * h;
    g.axis_x[P - 1 - i] = -g.axis_x[i];
  }
  if (P % 2 == 1) g.axis_x[P / 2] = 0.0;
  g.axis_w = Eigen::VectorXd::Constant(P, h);
  g.axis_w[0] *= 0.5;
  g.axis_w[P - 1] *= 0.5;
  return g;
}

// Grid sized to resolve harmonic modes up to N_max per the turning-point rule
// L = margin * sqrt(2 N_max + d).  N_max = 0 gives the ground-state width.
inline Grid build_grid(int d, int points_per_axis, int N_max, double margin) {
  if (points_per_axis < 8) throw domain_error("build_grid: points_per_axis must be >= 8");
  if (N_max < 0) throw domain_error("build_grid: N_max must be nonnegative");
  if (margin < 1.0)
    throw domain_error("build_grid: margin < 1 leaves eigenfunctions unresolved (domain too small)");
  const double L = margin * std::sqrt(2.0 * N_max + d);
  return make_uniform_grid(d, points_per_axis, L);
}

}  // namespace rnls
