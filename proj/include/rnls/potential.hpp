#pragma once

#include <cmath>
#include <string>

#include "rnls/errors.hpp"

namespace rnls {

// Confining potential of growth <x>^k.
//   harmonic:        V(x) = |x|^2                     (k = 2)
//   smoothed-power:  V(x) = (1 + |x|^2)^{k/2}, k >= 2 (smooth for every real k)
struct PotentialSpec {
  enum class Kind { harmonic, smoothed_power };
  Kind kind = Kind::harmonic;
  double k = 2.0;

  static PotentialSpec harmonic() { return {Kind::harmonic, 2.0}; }

  static PotentialSpec smoothed_power(double k) {
    if (!(k >= 2.0)) throw domain_error("potential: growth exponent k must be >= 2");
    return {Kind::smoothed_power, k};
  }

  // value from |x|^2
  double value_r2(double r2) const {
    return kind == Kind::harmonic ? r2 : std::pow(1.0 + r2, k / 2.0);
  }

  std::string name() const {
    return kind == Kind::harmonic ? "harmonic" : "smoothed-power";
  }
};

}  // namespace rnls
