#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hocoh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input; `where` locates it in the source document.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::string where = {})
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Conjugation witness: gamma * sigma * gamma^{-1} is not in the subgroup.
class NotNormal : public InputError {
 public:
  NotNormal(std::size_t gamma, std::size_t sigma)
      : InputError("subgroup is not normal: conjugating element " + std::to_string(sigma) +
                   " by element " + std::to_string(gamma) + " leaves the subgroup"),
        gamma_(gamma),
        sigma_(sigma) {}
  std::size_t gamma() const { return gamma_; }
  std::size_t sigma() const { return sigma_; }

 private:
  std::size_t gamma_, sigma_;
};

/// rho(element) * rho(generator) != rho(element * generator).
class NotARepresentation : public InputError {
 public:
  NotARepresentation(std::size_t element, std::size_t generator)
      : InputError("action is not a representation: relation fails for element " +
                   std::to_string(element) + " times generator " + std::to_string(generator)),
        element_(element),
        generator_(generator) {}
  std::size_t element() const { return element_; }
  std::size_t generator() const { return generator_; }

 private:
  std::size_t element_, generator_;
};

/// A subspace that should be stable under the group is moved out of itself.
class NotStable : public Error {
 public:
  NotStable(std::size_t element, std::size_t vector)
      : Error("subspace not stable: element " + std::to_string(element) + " moves basis vector " +
              std::to_string(vector) + " outside"),
        element_(element),
        vector_(vector) {}
  std::size_t element() const { return element_; }
  std::size_t vector() const { return vector_; }

 private:
  std::size_t element_, vector_;
};

/// An internal certificate failed. Reaching this indicates a bug, not bad input.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

class NontrivialAction : public CertificationFailure {
 public:
  using CertificationFailure::CertificationFailure;
};

class AlphaNotAHom : public CertificationFailure {
 public:
  using CertificationFailure::CertificationFailure;
};

}  // namespace hocoh
