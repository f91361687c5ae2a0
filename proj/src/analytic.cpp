#include "rgtc/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "rgtc/errors.hpp"

namespace rgtc {

namespace {

constexpr long double kE = std::numbers::e_v<long double>;

long double log_q(long double x, long double q) { return std::log(x) / std::log(q); }

long double lq(const Rational& p) { return std::log(to_long_double(1 / p)); }

// Shared pieces of F_A and T_A for fixed (n, p, r, s).
class WeightContext {
 public:
  WeightContext(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, Mode mode)
      : n_(n), p_(p), r_(r), s_(s), mode_(mode) {
    if (s < 1) throw DomainError("s must be >= 1");
    if (static_cast<std::uint64_t>(s) * r > n) throw DomainError("precondition s*r <= n violated");
    std::vector<std::uint64_t> parts(s, r);
    if (mode == Mode::Exact)
      denom_exact_ = multinomial(n, parts);
    else
      denom_log_ = log_multinomial(n, parts);
  }

  Scalar F(const IntersectionMatrix& a) const {
    if (a.dim() != s_) throw DomainError("matrix dimension does not match s");
    if (!a.in_D(r_)) throw DomainError("matrix " + a.str() + " is not in D for r=" + std::to_string(r_));
    const std::uint64_t outside = n_ - s_ * r_;
    std::vector<std::uint64_t> middle(s_);
    std::uint64_t need = 0;
    for (std::size_t i = 0; i < s_; ++i) {
      middle[i] = r_ - a.row_sum(i);
      need += middle[i];
    }
    if (need > outside) return Scalar::zero(mode_);

    if (mode_ == Mode::Exact) {
      BigInt num = multinomial(outside, middle);
      for (std::size_t j = 0; j < s_; ++j) {
        auto col = a.column(j);
        std::vector<std::uint64_t> c(col.begin(), col.end());
        num *= multinomial(r_, c);
      }
      return Scalar(Rational(num, denom_exact_));
    }
    long double l = log_multinomial(outside, middle) - denom_log_;
    for (std::size_t j = 0; j < s_; ++j) {
      auto col = a.column(j);
      std::vector<std::uint64_t> c(col.begin(), col.end());
      l += log_multinomial(r_, c);
    }
    return Scalar::from_log(l);
  }

  Scalar q_power(unsigned e) const {
    if (mode_ == Mode::Exact) return Scalar(pow(1 / p_, e));
    return Scalar::from_log(static_cast<long double>(e) * lq(p_));
  }

  Scalar T(const IntersectionMatrix& a) const {
    Scalar f = F(a);
    if (f.is_zero()) return f;
    return f * q_power(weight_L(a));
  }

 private:
  std::uint64_t n_;
  Rational p_;
  std::size_t r_, s_;
  Mode mode_;
  BigInt denom_exact_;
  long double denom_log_ = 0;
};

void enumerate_rec(IntersectionMatrix& m, std::size_t pos, std::size_t r, std::vector<unsigned>& rows,
                   std::vector<unsigned>& cols, const std::function<bool(const IntersectionMatrix&)>& visit,
                   bool& stop) {
  const std::size_t s = m.dim();
  if (pos == s * s) {
    if (!visit(m)) stop = true;
    return;
  }
  const std::size_t i = pos / s, j = pos % s;
  const unsigned hi = static_cast<unsigned>(r) - std::max(rows[i], cols[j]);
  for (unsigned v = 0; v <= hi && !stop; ++v) {
    m(i, j) = v;
    rows[i] += v;
    cols[j] += v;
    enumerate_rec(m, pos + 1, r, rows, cols, visit, stop);
    rows[i] -= v;
    cols[j] -= v;
  }
  m(i, j) = 0;
}

void check_increment(const IntersectionMatrix& a, std::size_t r, std::size_t s, std::size_t i, std::size_t j,
                     unsigned by) {
  if (a.dim() != s) throw DomainError("matrix dimension does not match s");
  if (i >= s || j >= s) throw DomainError("entry index out of range");
  if (!a.in_D(r)) throw DomainError("matrix " + a.str() + " is not in D");
  if (a.row_sum(i) + by > r || a.col_sum(j) + by > r)
    throw DomainError("increment of entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") leaves D");
}

// n - 2sr + sum of all entries: the argument of the last factorial in the
// middle multinomial. Negative means F_A = 0.
long long slack(std::uint64_t n, std::size_t r, std::size_t s, const IntersectionMatrix& a) {
  return static_cast<long long>(n) - 2LL * static_cast<long long>(s * r) + static_cast<long long>(a.total());
}

}  // namespace

void require_open_probability(const Rational& p) {
  if (p <= 0 || p >= 1) throw DomainError("edge probability must satisfy 0 < p < 1, got " + to_string(p));
}

void ModelParams::validate() const {
  if (n < 2) throw DomainError("n must be >= 2");
  require_open_probability(p);
  if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
  if (s < 1) throw DomainError("s must be >= 1");
}

long double z_value(std::uint64_t n, const Rational& p) {
  if (n < 2) throw DomainError("z(n,p) requires n >= 2");
  require_open_probability(p);
  const long double q = to_long_double(1 / p);
  const long double ln = log_q(static_cast<long double>(n), q);
  return 2 * ln - 2 * log_q(ln, q) + 2 * log_q(kE / 2, q) + 1;
}

std::size_t clique_target_r(std::uint64_t n, const Rational& p, long double epsilon) {
  if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
  const long double r = std::floor(z_value(n, p) - epsilon + kGuardBand);
  if (r < 1) throw DomainError("asymptotic-regime-not-reached: floor(z - eps) = " + std::to_string(static_cast<long long>(r)));
  return static_cast<std::size_t>(r);
}

BigInt multinomial(std::uint64_t a, std::span<const std::uint64_t> parts) {
  std::uint64_t rest = a;
  BigInt result = 1;
  for (auto b : parts) {
    if (b > rest) throw DomainError("multinomial parts exceed total " + std::to_string(a));
    result *= binomial(static_cast<unsigned>(rest), static_cast<unsigned>(b));
    rest -= b;
  }
  return result;
}

long double log_multinomial(std::uint64_t a, std::span<const std::uint64_t> parts) {
  std::uint64_t sum = 0;
  long double l = std::lgamma(static_cast<long double>(a) + 1);
  for (auto b : parts) {
    sum += b;
    l -= std::lgamma(static_cast<long double>(b) + 1);
  }
  if (sum > a) throw DomainError("multinomial parts exceed total " + std::to_string(a));
  return l - std::lgamma(static_cast<long double>(a - sum) + 1);
}

Scalar expected_multicliques(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, Mode mode) {
  if (p < 0 || p > 1) throw DomainError("edge probability must lie in [0,1]");
  if (s < 1) throw DomainError("s must be >= 1");
  if (static_cast<std::uint64_t>(s) * r > n) throw DomainError("precondition s*r <= n violated");
  std::vector<std::uint64_t> parts(s, r);
  const auto edges = static_cast<unsigned>(s * (r * (r - 1) / 2));
  if (mode == Mode::Exact) return Scalar(Rational(multinomial(n, parts)) * pow(p, edges));
  if (p == 0) return edges == 0 ? Scalar::from_log(log_multinomial(n, parts)) : Scalar::zero(Mode::Log);
  return Scalar::from_log(log_multinomial(n, parts) + static_cast<long double>(edges) * log_of(p));
}

IntersectionMatrix::IntersectionMatrix(std::size_t s, std::vector<unsigned> entries) : s_(s), a_(std::move(entries)) {
  if (a_.size() != s * s) throw DomainError("matrix needs s*s entries");
}

IntersectionMatrix IntersectionMatrix::diagonal(std::span<const unsigned> d) {
  IntersectionMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

unsigned IntersectionMatrix::row_sum(std::size_t i) const {
  unsigned t = 0;
  for (std::size_t j = 0; j < s_; ++j) t += (*this)(i, j);
  return t;
}

unsigned IntersectionMatrix::col_sum(std::size_t j) const {
  unsigned t = 0;
  for (std::size_t i = 0; i < s_; ++i) t += (*this)(i, j);
  return t;
}

unsigned IntersectionMatrix::total() const {
  unsigned t = 0;
  for (auto v : a_) t += v;
  return t;
}

bool IntersectionMatrix::in_D(std::size_t r) const {
  for (std::size_t i = 0; i < s_; ++i)
    if (row_sum(i) > r || col_sum(i) > r) return false;
  return true;
}

std::vector<unsigned> IntersectionMatrix::column(std::size_t j) const {
  std::vector<unsigned> c(s_);
  for (std::size_t i = 0; i < s_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntersectionMatrix IntersectionMatrix::incremented(std::size_t i, std::size_t j, unsigned by) const {
  IntersectionMatrix m = *this;
  m(i, j) += by;
  return m;
}

IntersectionMatrix IntersectionMatrix::permute_columns(std::span<const std::size_t> sigma) const {
  IntersectionMatrix m(s_);
  for (std::size_t i = 0; i < s_; ++i)
    for (std::size_t j = 0; j < s_; ++j) m(i, sigma[j]) = (*this)(i, j);
  return m;
}

std::string IntersectionMatrix::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < s_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < s_; ++j) out << (j ? "," : "") << (*this)(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

BigInt d_size(std::size_t s, std::size_t r) {
  if (s < 1) throw DomainError("s must be >= 1");
  // State: column sums so far. Each step appends one row with sum <= r.
  std::map<std::vector<unsigned>, BigInt> states{{std::vector<unsigned>(s, 0), 1}};
  for (std::size_t row = 0; row < s; ++row) {
    std::map<std::vector<unsigned>, BigInt> next;
    for (const auto& [cols, ways] : states) {
      std::vector<unsigned> c = cols;
      std::function<void(std::size_t, unsigned)> fill = [&](std::size_t j, unsigned row_sum) {
        if (j == s) {
          next[c] += ways;
          return;
        }
        const unsigned base = c[j];
        for (unsigned v = 0; row_sum + v <= r && base + v <= r; ++v) {
          c[j] = base + v;
          fill(j + 1, row_sum + v);
        }
        c[j] = base;
      };
      fill(0, 0);
    }
    states = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [cols, ways] : states) total += ways;
  return total;
}

void enumerate_D(std::size_t s, std::size_t r, const std::function<bool(const IntersectionMatrix&)>& visit,
                 std::uint64_t cap) {
  const BigInt size = d_size(s, r);
  if (cap && size > cap)
    throw BudgetExceeded("d-too-large: |D(" + std::to_string(s) + "," + std::to_string(r) + ")| = " + size.str() +
                         " exceeds cap " + std::to_string(cap));
  IntersectionMatrix m(s);
  std::vector<unsigned> rows(s, 0), cols(s, 0);
  bool stop = false;
  enumerate_rec(m, 0, r, rows, cols, visit, stop);
}

unsigned weight_L(const IntersectionMatrix& a) {
  unsigned l = 0;
  for (auto v : a.entries()) l += v * (v - (v > 0 ? 1 : 0)) / 2;
  return l;
}

Scalar weight_F(std::uint64_t n, std::size_t r, std::size_t s, const IntersectionMatrix& a, Mode mode) {
  return WeightContext(n, Rational(1, 2), r, s, mode).F(a);
}

Scalar weight_T(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, const IntersectionMatrix& a,
                Mode mode) {
  require_open_probability(p);
  return WeightContext(n, p, r, s, mode).T(a);
}

Scalar second_moment_ratio(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, Mode mode,
                           std::uint64_t cap) {
  require_open_probability(p);
  WeightContext ctx(n, p, r, s, mode);
  Scalar total = Scalar::zero(mode);
  LogSumExp acc;
  enumerate_D(
      s, r,
      [&](const IntersectionMatrix& a) {
        Scalar t = ctx.T(a);
        if (mode == Mode::Exact)
          total += t;
        else
          acc.add(t.log());
        return true;
      },
      cap);
  return mode == Mode::Exact ? total : Scalar::from_log(acc.result());
}

Scalar sum_F_over_D(std::uint64_t n, std::size_t r, std::size_t s, Mode mode, std::uint64_t cap) {
  WeightContext ctx(n, Rational(1, 2), r, s, mode);
  Scalar total = Scalar::zero(mode);
  LogSumExp acc;
  enumerate_D(
      s, r,
      [&](const IntersectionMatrix& a) {
        Scalar f = ctx.F(a);
        if (mode == Mode::Exact)
          total += f;
        else
          acc.add(f.log());
        return true;
      },
      cap);
  return mode == Mode::Exact ? total : Scalar::from_log(acc.result());
}

TZeroCheck t_zero_check(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, Mode mode) {
  require_open_probability(p);
  TZeroCheck out;
  out.t0 = weight_T(n, p, r, s, IntersectionMatrix(s), mode);
  const long long denom = static_cast<long long>(n) - static_cast<long long>(s * r) + 1;
  const Rational base = 1 - Rational(static_cast<long long>(2 * s * r * r), denom);
  if (base < 0) {
    // A negative base makes the bound vacuous; report the base itself.
    out.bound = to_long_double(base);
    out.holds = true;
    return out;
  }
  out.bound = std::pow(to_long_double(base), static_cast<long double>(s) / 2);
  if (out.t0.is_exact()) {
    // t0 >= base^{s/2}  <=>  t0^2 >= base^s for non-negative quantities.
    out.holds = pow(out.t0.exact(), 2) >= pow(base, static_cast<unsigned>(s));
  } else {
    out.holds = base == 0 || 2 * out.t0.log() >= static_cast<long double>(s) * log_of(base);
  }
  return out;
}

Scalar increment_ratio(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, const IntersectionMatrix& a,
                       std::size_t i, std::size_t j, Mode mode) {
  require_open_probability(p);
  check_increment(a, r, s, i, j, 1);
  const long long m = slack(n, r, s, a);
  if (m < 0) throw DomainError("T_A = 0 for " + a.str() + "; ratio undefined");
  const unsigned av = a(i, j);
  const long long num = static_cast<long long>(r - a.col_sum(j)) * static_cast<long long>(r - a.row_sum(i));
  const long long den = static_cast<long long>(av + 1) * (m + 1);
  if (mode == Mode::Exact) return Scalar(Rational(num, den) * pow(1 / p, av));
  return Scalar::from_log(std::log(static_cast<long double>(num)) - std::log(static_cast<long double>(den)) +
                          static_cast<long double>(av) * lq(p));
}

Scalar convexity_ratio(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, const IntersectionMatrix& a,
                       std::size_t i, std::size_t j, Mode mode) {
  require_open_probability(p);
  check_increment(a, r, s, i, j, 2);
  const long long m = slack(n, r, s, a);
  if (m < 0) throw DomainError("T_A = 0 for " + a.str() + "; ratio undefined");
  const long long av = a(i, j);
  const long long cr = static_cast<long long>(r - a.col_sum(j));
  const long long rr = static_cast<long long>(r - a.row_sum(i));
  // [(r-cj-1)(r-ri-1) / ((r-cj)(r-ri))] * (a+1)/(a+2) * (m+1)/(m+2) * q
  const Rational bracket = Rational((cr - 1) * (rr - 1), cr * rr) * Rational(av + 1, av + 2) * Rational(m + 1, m + 2);
  if (mode == Mode::Exact) return Scalar(bracket / p);
  if (bracket == 0) return Scalar::zero(Mode::Log);
  return Scalar::from_log(log_of(bracket) + lq(p));
}

std::string_view to_string(EntryClass c) {
  switch (c) {
    case EntryClass::Short:
      return "short";
    case EntryClass::Intermediate:
      return "intermediate";
    case EntryClass::Large:
      return "large";
  }
  return "?";
}

long double lambda_max(std::size_t s, const Rational& p) {
  require_open_probability(p);
  if (s < 1) throw DomainError("s must be >= 1");
  return 1.0L / (1.0L + 2.0L * static_cast<long double>(s) * kE * to_long_double(1 / p));
}

EntryClass classify_entry(std::size_t a, std::uint64_t n, const Rational& p, long double lambda, std::size_t r,
                          std::size_t s) {
  if (!(lambda > 0) || !(lambda < lambda_max(s, p)))
    throw DomainError("lambda must lie in (0, " + std::to_string(static_cast<double>(lambda_max(s, p))) + ")");
  if (a > r) throw DomainError("entry exceeds r");
  if (n < 2) throw DomainError("n must be >= 2");
  const long double ln = log_q(static_cast<long double>(n), to_long_double(1 / p));
  const auto x = static_cast<long double>(a);
  if (x <= (1 - lambda) * ln + kGuardBand) return EntryClass::Short;
  if (x >= (1 + lambda) * ln - kGuardBand) return EntryClass::Large;
  return EntryClass::Intermediate;
}

DominanceReport dominance_check(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, long double lambda,
                                Mode mode, std::uint64_t cap) {
  require_open_probability(p);
  if (!(lambda > 0) || !(lambda < lambda_max(s, p))) throw DomainError("lambda out of range");
  WeightContext ctx(n, p, r, s, mode);
  DominanceReport rep;
  rep.bound = Scalar::zero(mode);
  rep.worst = Scalar::zero(mode);

  // Diagonal matrices with entries in {0, 1, r}, not all zero.
  const std::vector<unsigned> choices = r == 1 ? std::vector<unsigned>{0, 1} : std::vector<unsigned>{0, 1, static_cast<unsigned>(r)};
  std::vector<unsigned> diag(s, 0);
  std::function<void(std::size_t)> over_diagonals = [&](std::size_t k) {
    if (k == s) {
      auto d = IntersectionMatrix::diagonal(diag);
      if (d.is_zero()) return;
      Scalar t = ctx.T(d);
      if (!rep.bound_at || rep.bound < t) {
        rep.bound = t;
        rep.bound_at = d;
      }
      return;
    }
    for (auto c : choices) {
      diag[k] = c;
      over_diagonals(k + 1);
    }
  };
  over_diagonals(0);

  enumerate_D(
      s, r,
      [&](const IntersectionMatrix& a) {
        if (a.is_zero()) return true;
        Scalar t = ctx.T(a);
        if (!rep.worst_at || rep.worst < t) {
          rep.worst = t;
          rep.worst_at = a;
        }
        return true;
      },
      cap);

  if (mode == Mode::Exact) {
    rep.holds = rep.worst <= rep.bound;
  } else {
    // Column permutations of a diagonal matrix have the same T mathematically
    // but may round differently in log space.
    rep.holds = rep.worst.is_zero() || rep.worst.log() <= rep.bound.log() + 1e-12L;
  }
  return rep;
}

long double stirling_c(std::uint64_t n, std::size_t m, std::size_t r) {
  const std::uint64_t k = static_cast<std::uint64_t>(m) * r;
  if (m < 1 || r < 1 || k >= n) throw DomainError("stirling_c requires m,r >= 1 and m*r < n");
  const auto nn = static_cast<long double>(n), kk = static_cast<long double>(k);
  const std::uint64_t parts[] = {k};
  const long double log_binom = log_multinomial(n, parts);
  return std::exp(log_binom - kk * std::log(nn / kk) - kk + 0.5L * std::log(kk));
}

Scalar mainine_term(std::uint64_t n, const Rational& p, std::size_t r, std::size_t k, std::size_t m, Mode mode) {
  require_open_probability(p);
  if (m < 1) throw DomainError("m must be >= 1");
  if (r < 1) throw DomainError("r must be >= 1");
  if (static_cast<std::uint64_t>(m) * r > n) throw DomainError("precondition m*r <= n violated");
  std::vector<std::uint64_t> parts(m, r);
  const auto edges = static_cast<unsigned>(m * (r * (r - 1) / 2));
  if (mode == Mode::Exact)
    return Scalar(Rational(multinomial(n, parts)) * pow(p, edges) / pow(Rational(r), static_cast<unsigned>(k)));
  return Scalar::from_log(log_multinomial(n, parts) + static_cast<long double>(edges) * log_of(p) -
                          static_cast<long double>(k) * std::log(static_cast<long double>(r)));
}

}  // namespace rgtc
