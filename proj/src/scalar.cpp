#include "rgtc/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "rgtc/errors.hpp"

namespace rgtc {

namespace {
constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

Scalar::LogValue to_log(const Scalar& s) {
  Scalar::LogValue v;
  if (s.is_zero()) return v;
  v.zero = false;
  v.log = s.log();
  return v;
}
}  // namespace

Mode parse_mode(std::string_view s) {
  if (s == "exact") return Mode::Exact;
  if (s == "log") return Mode::Log;
  throw DomainError("unknown mode '" + std::string(s) + "' (expected exact|log)");
}

Scalar::Scalar(Rational x) : value_(std::move(x)) {
  if (std::get<Rational>(value_) < 0) throw DomainError("Scalar must be non-negative");
}

Scalar Scalar::from_log(long double log_value) {
  if (log_value == kNegInf) return Scalar(LogValue{});
  if (std::isnan(log_value)) throw DomainError("NaN log value");
  return Scalar(LogValue{log_value, false});
}

Scalar Scalar::zero(Mode mode) { return mode == Mode::Exact ? Scalar(Rational(0)) : Scalar(LogValue{}); }
Scalar Scalar::one(Mode mode) { return mode == Mode::Exact ? Scalar(Rational(1)) : from_log(0.0L); }

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r == 0;
  return std::get<LogValue>(value_).zero;
}

const Rational& Scalar::exact() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r;
  throw DomainError("log-domain scalar has no exact value");
}

long double Scalar::log() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r == 0 ? kNegInf : log_of(*r);
  const auto& v = std::get<LogValue>(value_);
  return v.zero ? kNegInf : v.log;
}

long double Scalar::to_long_double() const {
  if (auto* r = std::get_if<Rational>(&value_)) return rgtc::to_long_double(*r);
  const auto& v = std::get<LogValue>(value_);
  return v.zero ? 0.0L : std::exp(v.log);
}

Scalar Scalar::as(Mode mode) const {
  if (mode == this->mode()) return *this;
  if (mode == Mode::Log) return Scalar(to_log(*this));
  throw DomainError("cannot convert a log-domain scalar to exact mode");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(a.exact() + b.exact());
  if (a.is_zero()) return b.as(Mode::Log);
  if (b.is_zero()) return a.as(Mode::Log);
  LogSumExp acc;
  acc.add(a.log());
  acc.add(b.log());
  return Scalar::from_log(acc.result());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(a.exact() * b.exact());
  if (a.is_zero() || b.is_zero()) return Scalar::zero(Mode::Log);
  return Scalar::from_log(a.log() + b.log());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DomainError("division by zero scalar");
  if (a.is_exact() && b.is_exact()) return Scalar(a.exact() / b.exact());
  if (a.is_zero()) return Scalar::zero(Mode::Log);
  return Scalar::from_log(a.log() - b.log());
}

int compare(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact() ? -1 : (b.exact() < a.exact() ? 1 : 0);
  long double la = a.log(), lb = b.log();
  return la < lb ? -1 : (lb < la ? 1 : 0);
}

std::string Scalar::str() const {
  if (is_exact()) return to_string(exact());
  if (is_zero()) return "0";
  const long double l = log();
  char buf[64];
  if (std::fabs(l) < 11000.0L) {
    std::snprintf(buf, sizeof buf, "%.15Lg", std::exp(l));
  } else {
    // Outside long double range: render as mantissa*10^exponent.
    long double l10 = l / std::log(10.0L);
    long double e = std::floor(l10);
    std::snprintf(buf, sizeof buf, "%.15Lge%+.0Lf", std::pow(10.0L, l10 - e), e);
  }
  return buf;
}

long double log_of(const BigInt& x) {
  if (x <= 0) throw DomainError("log of non-positive integer");
  const auto bits = static_cast<long>(boost::multiprecision::msb(x));
  const long shift = bits > 110 ? bits - 110 : 0;
  BigInt top = x >> shift;
  return std::log(top.convert_to<long double>()) + static_cast<long double>(shift) * std::log(2.0L);
}

long double log_of(const Rational& x) {
  return log_of(BigInt(boost::multiprecision::numerator(x))) - log_of(BigInt(boost::multiprecision::denominator(x)));
}

void LogSumExp::add(long double log_term) {
  if (log_term == kNegInf) return;
  if (log_term <= max_) {
    sum_ += std::exp(log_term - max_);
  } else {
    sum_ = sum_ * std::exp(max_ - log_term) + 1.0L;
    max_ = log_term;
  }
}

long double LogSumExp::result() const { return max_ == kNegInf ? kNegInf : max_ + std::log(sum_); }

}  // namespace rgtc
