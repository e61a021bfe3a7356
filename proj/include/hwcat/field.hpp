#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hwcat {

/// Raised for malformed user input (bad documents, unknown labels, shape
/// mismatches). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's mathematical precondition does not hold
/// (e.g. a duality certificate is required but missing or invalid).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant is violated. Seeing one is a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exact field element. Over Q the value is the rational itself; over
/// F_p it is the canonical residue in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  /// Parses "3", "-2/5". Throws InputError on garbage.
  static Scalar parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  mpq_class value_{0};
};

/// The ground field: Q or a prime field F_p.
class FieldCtx {
 public:
  static FieldCtx rationals() { return FieldCtx(0); }
  static FieldCtx prime(std::uint32_t p);
  /// "Q" or "Fp:<p>".
  static FieldCtx parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  Scalar normalize(const Scalar& s) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;

  /// Residue of an integer-valued rational modulo p (F_p only).
  std::uint32_t residue(const mpq_class& q) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) { return a.p_ == b.p_; }
  friend bool operator!=(const FieldCtx& a, const FieldCtx& b) { return a.p_ != b.p_; }

 private:
  explicit FieldCtx(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace hwcat
