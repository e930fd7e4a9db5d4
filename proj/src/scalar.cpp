#include "hocoh/scalar.hpp"

#include <charconv>
#include <stdexcept>

#include "hocoh/errors.hpp"

namespace hocoh {

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

std::int64_t parse_integer(std::string_view text) {
  std::int64_t out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InputError("not an integer: '" + std::string(text) + "'");
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Fp::Fp(std::int64_t value, std::uint32_t modulus) : value_(value), modulus_(modulus) {
  if (modulus_ != 0) value_ = reduce(value_, modulus_);
}

std::uint32_t Fp::residue(std::uint32_t p) const {
  if (modulus_ != 0) return static_cast<std::uint32_t>(value_);
  return static_cast<std::uint32_t>(reduce(value_, p));
}

std::uint32_t Fp::common_modulus(const Fp& a, const Fp& b) {
  if (a.modulus_ != 0 && b.modulus_ != 0 && a.modulus_ != b.modulus_) {
    throw std::domain_error("Fp: mixing residues of different characteristic");
  }
  return a.modulus_ != 0 ? a.modulus_ : b.modulus_;
}

void Fp::reduce_to(std::uint32_t p) {
  if (modulus_ == 0 && p != 0) {
    value_ = reduce(value_, p);
    modulus_ = p;
  }
}

Fp& Fp::operator+=(const Fp& rhs) {
  const std::uint32_t p = common_modulus(*this, rhs);
  if (p == 0) {
    value_ += rhs.value_;
    return *this;
  }
  reduce_to(p);
  value_ += rhs.residue(p);
  if (value_ >= p) value_ -= p;
  return *this;
}

Fp& Fp::operator-=(const Fp& rhs) {
  const std::uint32_t p = common_modulus(*this, rhs);
  if (p == 0) {
    value_ -= rhs.value_;
    return *this;
  }
  reduce_to(p);
  value_ -= rhs.residue(p);
  if (value_ < 0) value_ += p;
  return *this;
}

Fp& Fp::operator*=(const Fp& rhs) {
  const std::uint32_t p = common_modulus(*this, rhs);
  if (p == 0) {
    value_ *= rhs.value_;
    return *this;
  }
  reduce_to(p);
  value_ = (value_ * static_cast<std::int64_t>(rhs.residue(p))) % p;
  return *this;
}

Fp Fp::operator-() const {
  if (modulus_ == 0) return Fp(static_cast<int>(-value_));
  return Fp(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Fp Fp::inverse() const {
  if (modulus_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw std::domain_error("Fp: cannot invert a literal without a modulus");
  }
  if (value_ == 0) throw std::domain_error("Fp: division by zero");
  // extended Euclid
  std::int64_t a = value_, b = modulus_, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t t = a / b;
    a -= t * b;
    std::swap(a, b);
    x0 -= t * x1;
    std::swap(x0, x1);
  }
  return Fp(x0, modulus_);
}

bool operator==(const Fp& a, const Fp& b) {
  const std::uint32_t p = Fp::common_modulus(a, b);
  if (p == 0) return a.value_ == b.value_;
  return a.residue(p) == b.residue(p);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << to_string(x); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw InputError("field characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return {Kind::prime_field, p};
}

FieldSpec FieldSpec::parse(std::string_view name) {
  name = trim(name);
  if (name == "Q") return rationals();
  if (name.size() >= 2 && name.front() == 'F') {
    const std::int64_t p = parse_integer(name.substr(1));
    if (p <= 0) throw InputError("bad field '" + std::string(name) + "'");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw InputError("unknown field '" + std::string(name) + "' (expected \"Q\" or \"F<p>\")");
}

std::string FieldSpec::name() const {
  return kind == Kind::rationals ? "Q" : "F" + std::to_string(characteristic);
}

template <>
Rational from_int<Rational>(const FieldSpec&, long long n) {
  return Rational(n);
}

template <>
Fp from_int<Fp>(const FieldSpec& field, long long n) {
  return Fp(static_cast<std::int64_t>(n), field.characteristic);
}

template <>
Rational parse_scalar<Rational>(const FieldSpec&, std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    // arbitrary precision: go through the GMP parser after validating digits
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    return Rational(std::string(text.front() == '+' ? text.substr(1) : text));
  }
  const Rational num = parse_scalar<Rational>(FieldSpec{}, text.substr(0, slash));
  const Rational den = parse_scalar<Rational>(FieldSpec{}, text.substr(slash + 1));
  if (den.is_zero()) throw InputError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

template <>
Fp parse_scalar<Fp>(const FieldSpec& field, std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Fp(parse_integer(text), field.characteristic);
  }
  const Fp num(parse_integer(text.substr(0, slash)), field.characteristic);
  const Fp den(parse_integer(text.substr(slash + 1)), field.characteristic);
  if (den.is_zero()) {
    throw InputError("denominator of '" + std::string(text) + "' vanishes in " + field.name());
  }
  return num / den;
}

std::string to_string(const Rational& x) { return x.str(); }

std::string to_string(const Fp& x) { return std::to_string(x.raw()); }

}  // namespace hocoh
