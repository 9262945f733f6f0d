#pragma once

#include <stdexcept>

namespace relspeed {

// Base class for physics-domain failures: inputs that are well-formed at the
// flag level but ask for something the model or the arithmetic cannot give.
// The CLI maps these to exit code 2; usage errors never reach the library.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request needs a speed closer to lightspeed than a double can resolve.
class saturation_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Input lies outside the validity window of an approximate formula.
class validity_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// A root solve could not bracket a sign change.
class infeasibility_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Bad numerical configuration: nonpositive step, blown step budget.
class config_error : public domain_error {
 public:
  using domain_error::domain_error;
};

}  // namespace relspeed
