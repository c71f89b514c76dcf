#pragma once

#include <stdexcept>
#include <string>

namespace ktreg {

// Bad user input: malformed files, out-of-range labels, invalid vertex sets.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A search would exceed the configured multiplicity cap (2^t candidate tuples).
class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(const std::string& what, int multiplicity)
      : std::runtime_error(what), multiplicity_(multiplicity) {}
  int multiplicity() const { return multiplicity_; }

private:
  int multiplicity_;
};

// The requested certificate route gives no conclusion for this input
// (e.g. cardinality bounds with delta(G)+tau <= kappa).
class InapplicableError : public std::runtime_error {
public:
  explicit InapplicableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ktreg
