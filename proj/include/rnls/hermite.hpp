#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace rnls {

// Orthonormal Hermite functions h_0..h_mmax sampled on x, one row per mode.
// Three-term recurrence in function form, stable for large m because the
// Gaussian envelope is carried along:
//   h_0(x)     = pi^{-1/4} exp(-x^2/2)
//   h_1(x)     = sqrt(2) x h_0(x)
//   h_{m+1}(x) = sqrt(2/(m+1)) x h_m(x) - sqrt(m/(m+1)) h_{m-1}(x)
inline Eigen::MatrixXd hermite_function_table(int m_max, const Eigen::VectorXd& x) {
  const auto P = x.size();
  Eigen::MatrixXd H(m_max + 1, P);
  const double c0 = std::pow(M_PI, -0.25);
  for (Eigen::Index i = 0; i < P; ++i) H(0, i) = c0 * std::exp(-0.5 * x[i] * x[i]);
  if (m_max >= 1) H.row(1) = std::sqrt(2.0) * x.transpose().cwiseProduct(H.row(0));
  for (int m = 1; m < m_max; ++m) {
    const double a = std::sqrt(2.0 / (m + 1));
    const double b = std::sqrt(static_cast<double>(m) / (m + 1));
    H.row(m + 1) = a * x.transpose().cwiseProduct(H.row(m)) - b * H.row(m - 1);
  }
  return H;
}

}  // namespace rnls
