#pragma once

#include <stdexcept>
#include <string>

namespace supergroup {

/// Base class of every domain error raised by the library.
class SupergroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An adaptive series did not converge within Precision::truncation_cap terms.
class TruncationCapExceeded : public SupergroupError {
 public:
  using SupergroupError::SupergroupError;
};

/// Two arguments coincide where a formula needs them distinct.
class DegenerateArguments : public SupergroupError {
 public:
  using SupergroupError::SupergroupError;
};

/// Young diagram violates the (m|n)-hook condition t_{m+1} <= n.
class NotCovariant : public SupergroupError {
 public:
  using SupergroupError::SupergroupError;
};

class TooManyRows : public SupergroupError {
 public:
  using SupergroupError::SupergroupError;
};

/// Grassmann elements built over different generator sets were combined.
class GeneratorMismatch : public SupergroupError {
 public:
  using SupergroupError::SupergroupError;
};

/// Even element with vanishing body, i.e. not invertible in the algebra.
class NonInvertibleBody : public SupergroupError {
 public:
  using SupergroupError::SupergroupError;
};

class BosonFermionCoincidence : public SupergroupError {
 public:
  using SupergroupError::SupergroupError;
};

}  // namespace supergroup
