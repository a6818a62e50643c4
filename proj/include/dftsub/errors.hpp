#pragma once

#include <stdexcept>
#include <string>

namespace dftsub {

/// Thrown when an enumeration or search would exceed its configured bound.
/// CLI maps this to exit code 3.
class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a sampling submatrix that must be inverted is singular.
class SingularSubmatrix : public std::runtime_error {
 public:
  explicit SingularSubmatrix(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dftsub
