#pragma once

#include <stdexcept>
#include <string>

namespace hcp {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (CLI exit code 2).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The prime ell divides q.
class DefiningCharacteristic : public InvalidInput {
 public:
  explicit DefiningCharacteristic(const std::string& what)
      : InvalidInput("defining characteristic: " + what) {}
};

/// A computation exceeded its configured desk-scale bound.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

/// The endomorphism ring of an irreducible module is a proper field
/// extension; the caller has to extend scalars and retry.
class NonSplit : public Error {
 public:
  explicit NonSplit(unsigned endo_degree)
      : Error("extend scalars: endomorphism field has degree " +
              std::to_string(endo_degree)),
        endo_degree_(endo_degree) {}
  unsigned endo_degree() const noexcept { return endo_degree_; }

 private:
  unsigned endo_degree_;
};

}  // namespace hcp
