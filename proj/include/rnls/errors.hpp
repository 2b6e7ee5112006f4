#pragma once

#include <stdexcept>
#include <string>

namespace rnls {

// Error taxonomy shared by the whole library.  Everything derives from
// rnls::error so callers can catch the library's failures in one clause.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a precondition on the mathematical domain was violated (bad exponent, ...)
struct domain_error : error {
  using error::error;
};

// grid cannot resolve the requested modes / certification failed
struct resolution_error : error {
  using error::error;
};

// objects built against different bases or grids were mixed
struct identity_error : error {
  using error::error;
};

// the requested (k, d) combination has no supported exponent theory
struct capability_error : error {
  using error::error;
};

// an eigensolve or other numeric kernel failed to converge
struct numeric_error : error {
  using error::error;
};

// empty band range, empty config set, malformed config keys, ...
struct usage_error : error {
  using error::error;
};

}  // namespace rnls
