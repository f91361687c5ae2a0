#include "rgtc/rational.hpp"

#include <cctype>
#include <cmath>
#include <vector>

#include "rgtc/errors.hpp"

namespace rgtc {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw DomainError("malformed rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw DomainError("malformed rational '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("malformed rational '" + std::string(whole) + "' (write it as a/b)");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational parse_decimal(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return parse_rational(text);
  std::string digits(text.substr(0, dot));
  std::string frac(text.substr(dot + 1));
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("malformed number '" + std::string(text) + "'");
  if (digits.empty() || digits == "-" || digits == "+") digits += "0";
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  BigInt whole = parse_integer(digits + frac, text);
  return Rational(whole, scale);
}

std::string to_string(const Rational& x) {
  const auto& num = boost::multiprecision::numerator(x);
  const auto& den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

long double to_long_double(const Rational& x) {
  // Scale so that both parts fit comfortably in long double range.
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  if (num == 0) return 0.0L;
  auto nb = static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(num)));
  auto db = static_cast<long>(boost::multiprecision::msb(den));
  long shift_n = nb > 100 ? nb - 100 : 0;
  long shift_d = db > 100 ? db - 100 : 0;
  num >>= shift_n;
  den >>= shift_d;
  long double v = num.convert_to<long double>() / den.convert_to<long double>();
  return std::ldexp(v, static_cast<int>(shift_n - shift_d));
}

BigInt factorial(unsigned k) {
  BigInt f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

Rational pow(const Rational& base, unsigned exp) {
  Rational result = 1;
  Rational b = base;
  while (exp) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

}  // namespace rgtc
