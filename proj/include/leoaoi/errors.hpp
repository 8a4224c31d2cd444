#pragma once

#include <stdexcept>
#include <string>

namespace leoaoi {

/// The service process never turns on (zero off-rate or zero dome), so the
/// time-average age diverges. Callers must handle this explicitly.
class permanent_disconnection_error : public std::domain_error {
 public:
  explicit permanent_disconnection_error(const std::string& what)
      : std::domain_error(what) {}
};

/// A simulation consumed its whole arrival budget without a single delivery.
class starvation_error : public std::runtime_error {
 public:
  explicit starvation_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace leoaoi
