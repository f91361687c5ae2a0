#pragma once

#include <limits>
#include <string>
#include <variant>

#include "rgtc/rational.hpp"

namespace rgtc {

enum class Mode { Exact, Log };

Mode parse_mode(std::string_view s);

/// Non-negative real carried either as an exact rational or by its natural
/// logarithm. Zero has a distinguished log-domain representation.
class Scalar {
 public:
  struct LogValue {
    long double log = 0.0L;
    bool zero = true;
  };

  Scalar() : value_(Rational(0)) {}
  Scalar(Rational x);  // NOLINT(google-explicit-constructor)
  static Scalar from_log(long double log_value);
  static Scalar zero(Mode mode);
  static Scalar one(Mode mode);

  Mode mode() const { return std::holds_alternative<Rational>(value_) ? Mode::Exact : Mode::Log; }
  bool is_exact() const { return mode() == Mode::Exact; }
  bool is_zero() const;

  // Requires exact mode.
  const Rational& exact() const;
  // Natural log; -inf for zero.
  long double log() const;
  long double to_long_double() const;

  // Converts to the requested mode (exact -> log is always possible;
  // log -> exact throws DomainError).
  Scalar as(Mode mode) const;

  // Mixed-mode arithmetic yields log mode. Log-domain sums use log-sum-exp.
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Exact comparison when both are exact, otherwise by log value.
  friend int compare(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }

  // Exact: "a/b". Log: decimal rendering of the value.
  std::string str() const;

 private:
  explicit Scalar(LogValue v) : value_(v) {}
  std::variant<Rational, LogValue> value_;
};

/// Natural logarithm of a positive big integer, accurate to long double precision.
long double log_of(const BigInt& x);
long double log_of(const Rational& x);

/// Accumulates log-domain terms with a stable log-sum-exp (max-shifted).
class LogSumExp {
 public:
  void add(long double log_term);
  long double result() const;  // -inf when nothing non-zero was added
 private:
  long double max_ = -std::numeric_limits<long double>::infinity();
  long double sum_ = 0.0L;  // sum of exp(term - max_)
};

}  // namespace rgtc
