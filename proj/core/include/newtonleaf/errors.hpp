#pragma once

#include <stdexcept>
#include <string>

namespace newtonleaf {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unsupported sizes, malformed specs, non-invertible generators.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// Caller broke a documented precondition (e.g. non-dominant input).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Operands built over different root data or coefficient rings.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

class SingularInput : public Error {
 public:
  using Error::Error;
};

// Slopes outside [-1,0] handed to the display constructor.
class NotPDivisibleGroup : public Error {
 public:
  using Error::Error;
};

// An internal cross-check disagreed.  Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Budget exhausted.  `partial` carries whatever was certified so far.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::string partial = {})
      : Error(what), partial_(std::move(partial)) {}
  const std::string& partial() const noexcept { return partial_; }

 private:
  std::string partial_;
};

// p-adic precision ran out before an answer could be certified.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace newtonleaf
