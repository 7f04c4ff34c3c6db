#ifndef GFIT_ERRORS_HPP
#define GFIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfit {

// Malformed cycle notation, group files, or family specs.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured cap (element count, lattice size, iteration count) was hit.
class ResourceError : public std::runtime_error {
public:
  ResourceError(const std::string &what, std::size_t partial)
      : std::runtime_error(what), partial_(partial) {}

  std::size_t partial() const noexcept { return partial_; }

private:
  std::size_t partial_;
};

// Inputs that parse but violate a structural requirement (membership,
// degree mismatch, non-homomorphic automorphism, ...).
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operation called outside its domain (non-normal kernel, insoluble input to
// the Fitting series, [G,alpha] != G, ...).
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagree. Always an engine bug.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace gfit

#endif
