#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace hocoh {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Expression templates are disabled so the type composes with
/// Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Element of a prime field F_p with the modulus carried at runtime.
///
/// A value constructed from a bare `int` is an integer literal without a
/// modulus (this is how Eigen spells `Scalar(0)` and `Scalar(1)`). Literals
/// are reduced as soon as they meet a value that knows its modulus, so
/// `Matrix::Zero()` and `Matrix::Identity()` behave as expected.
class Fp {
 public:
  Fp() = default;
  Fp(int literal) : value_(literal) {}  // NOLINT(google-explicit-constructor)
  Fp(std::int64_t value, std::uint32_t modulus);

  std::uint32_t modulus() const { return modulus_; }
  bool is_literal() const { return modulus_ == 0; }
  /// Residue in [0, p) once reduced against `p`.
  std::uint32_t residue(std::uint32_t p) const;
  std::int64_t raw() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  Fp inverse() const;

  Fp& operator+=(const Fp& rhs);
  Fp& operator-=(const Fp& rhs);
  Fp& operator*=(const Fp& rhs);
  Fp& operator/=(const Fp& rhs) { return *this *= rhs.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const;

  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x);

 private:
  static std::uint32_t common_modulus(const Fp& a, const Fp& b);
  void reduce_to(std::uint32_t p);

  std::int64_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

/// Coefficient field: the rationals or a prime field.
struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);
  /// Parses "Q" or "F<p>" (e.g. "F2", "F5").
  static FieldSpec parse(std::string_view name);

  std::string name() const;
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

template <class S>
S from_int(const FieldSpec& field, long long n);
template <>
Rational from_int<Rational>(const FieldSpec& field, long long n);
template <>
Fp from_int<Fp>(const FieldSpec& field, long long n);

/// Parses an exact scalar: integers or fractions "a/b". Over F_p the
/// denominator must be invertible.
template <class S>
S parse_scalar(const FieldSpec& field, std::string_view text);
template <>
Rational parse_scalar<Rational>(const FieldSpec& field, std::string_view text);
template <>
Fp parse_scalar<Fp>(const FieldSpec& field, std::string_view text);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

inline Rational inverse(const Rational& x) { return Rational(1) / x; }
inline Fp inverse(const Fp& x) { return x.inverse(); }

std::string to_string(const Rational& x);
/// Literals are printed unreduced; use `to_string(field, x)` for output.
std::string to_string(const Fp& x);

template <class S>
std::string to_string(const FieldSpec& field, const S& x) {
  if constexpr (std::is_same_v<S, Fp>) {
    return std::to_string(x.residue(field.characteristic));
  } else {
    return to_string(x);
  }
}

/// Calls `f(Rational{})` or `f(Fp{})` according to the field kind; the
/// argument is a tag that fixes the scalar type of the instantiation.
template <class F>
decltype(auto) dispatch_scalar(const FieldSpec& field, F&& f) {
  if (field.kind == FieldSpec::Kind::rationals) return f(Rational{});
  return f(Fp{});
}

}  // namespace hocoh

namespace Eigen {

template <>
struct NumTraits<hocoh::Fp> : GenericNumTraits<hocoh::Fp> {
  using Real = hocoh::Fp;
  using NonInteger = hocoh::Fp;
  using Nested = hocoh::Fp;
  using Literal = hocoh::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
