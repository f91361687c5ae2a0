#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rgtc/rational.hpp"
#include "rgtc/scalar.hpp"

namespace rgtc {

// Floors and class thresholds are evaluated with this guard band so that
// values within rounding noise of an integer are not misclassified.
inline constexpr long double kGuardBand = 1e-9L;

inline constexpr std::uint64_t kDefaultDCap = 10'000'000;

/// Validated model parameters: n >= 2, 0 < p < 1, epsilon > 0, s >= 1.
struct ModelParams {
  std::uint64_t n = 0;
  Rational p{1, 2};
  long double epsilon = 0.5L;
  std::size_t s = 1;

  void validate() const;
  Rational q() const { return 1 / p; }
};

void require_open_probability(const Rational& p);

/// z(n,p) = 2 log_q n - 2 log_q log_q n + 2 log_q(e/2) + 1 with q = 1/p,
/// evaluated in long double (64-bit mantissa).
long double z_value(std::uint64_t n, const Rational& p);

/// floor(z - epsilon); throws DomainError("asymptotic-regime-not-reached")
/// when the result is below 1.
std::size_t clique_target_r(std::uint64_t n, const Rational& p, long double epsilon);

/// a! / ((prod b_i!) (a - sum b_i)!)
BigInt multinomial(std::uint64_t a, std::span<const std::uint64_t> parts);
/// Natural log of the multinomial via lgamma.
long double log_multinomial(std::uint64_t a, std::span<const std::uint64_t> parts);

/// E(X_{r,s}) = multinomial(n; r,...,r) p^{s C(r,2)}.
Scalar expected_multicliques(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, Mode mode = Mode::Exact);

/// s x s matrix of non-negative integers, row-major.
class IntersectionMatrix {
 public:
  IntersectionMatrix() = default;
  explicit IntersectionMatrix(std::size_t s) : s_(s), a_(s * s, 0) {}
  IntersectionMatrix(std::size_t s, std::vector<unsigned> entries);

  static IntersectionMatrix diagonal(std::span<const unsigned> d);

  std::size_t dim() const { return s_; }
  unsigned operator()(std::size_t i, std::size_t j) const { return a_[i * s_ + j]; }
  unsigned& operator()(std::size_t i, std::size_t j) { return a_[i * s_ + j]; }
  unsigned row_sum(std::size_t i) const;
  unsigned col_sum(std::size_t j) const;
  unsigned total() const;
  bool is_zero() const { return total() == 0; }
  bool in_D(std::size_t r) const;
  std::vector<unsigned> column(std::size_t j) const;
  const std::vector<unsigned>& entries() const { return a_; }

  IntersectionMatrix incremented(std::size_t i, std::size_t j, unsigned by = 1) const;
  IntersectionMatrix permute_columns(std::span<const std::size_t> sigma) const;

  std::string str() const;
  friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;

 private:
  std::size_t s_ = 0;
  std::vector<unsigned> a_;
};

/// |D(s,r)| counted by dynamic programming over column-sum states.
BigInt d_size(std::size_t s, std::size_t r);

/// Streams every member of D(s,r) once, in row-major lexicographic order.
/// Throws BudgetExceeded when |D| exceeds `cap`. The visitor may return false
/// to stop.
void enumerate_D(std::size_t s, std::size_t r, const std::function<bool(const IntersectionMatrix&)>& visit,
                 std::uint64_t cap = kDefaultDCap);

unsigned weight_L(const IntersectionMatrix& a);

/// F_A. Zero when the middle multinomial is infeasible.
Scalar weight_F(std::uint64_t n, std::size_t r, std::size_t s, const IntersectionMatrix& a, Mode mode = Mode::Exact);
/// T_A = F_A q^{L(A)}.
Scalar weight_T(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, const IntersectionMatrix& a,
                Mode mode = Mode::Exact);

/// E(X^2)/E(X)^2 = sum over D of T_A.
Scalar second_moment_ratio(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, Mode mode = Mode::Exact,
                           std::uint64_t cap = kDefaultDCap);
/// Sum over D of F_A; identically 1.
Scalar sum_F_over_D(std::uint64_t n, std::size_t r, std::size_t s, Mode mode = Mode::Exact,
                    std::uint64_t cap = kDefaultDCap);

struct TZeroCheck {
  Scalar t0;
  long double bound = 0;  // (1 - 2sr^2/(n-sr+1))^{s/2}, or the negative base itself
  bool holds = false;
};
TZeroCheck t_zero_check(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, Mode mode = Mode::Exact);

/// T_{A+e_ij}/T_A in closed form.
Scalar increment_ratio(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, const IntersectionMatrix& a,
                       std::size_t i, std::size_t j, Mode mode = Mode::Exact);
/// T_{A+2e_ij} T_A / T_{A+e_ij}^2 in closed form.
Scalar convexity_ratio(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, const IntersectionMatrix& a,
                       std::size_t i, std::size_t j, Mode mode = Mode::Exact);

enum class EntryClass { Short, Intermediate, Large };
std::string_view to_string(EntryClass c);

/// 1 / (1 + 2 s e q).
long double lambda_max(std::size_t s, const Rational& p);
EntryClass classify_entry(std::size_t a, std::uint64_t n, const Rational& p, long double lambda, std::size_t r,
                          std::size_t s);

struct DominanceReport {
  bool holds = false;
  Scalar bound;                                // max T over diagonal {0,1,r} matrices
  std::optional<IntersectionMatrix> bound_at;  // the maximizing diagonal matrix
  Scalar worst;                                // max T over D \ {0}
  std::optional<IntersectionMatrix> worst_at;
};
/// Finite-n check that every nonzero A in D satisfies T_A <= max of T over
/// the non-zero diagonal matrices with entries in {0,1,r}.
DominanceReport dominance_check(std::uint64_t n, const Rational& p, std::size_t r, std::size_t s, long double lambda,
                                Mode mode = Mode::Log, std::uint64_t cap = kDefaultDCap);

/// c_n solving binom(n, mr) = c_n (n/mr)^{mr} e^{mr} (mr)^{-1/2}.
long double stirling_c(std::uint64_t n, std::size_t m, std::size_t r);

/// r^{-k} multinomial(n; r x m) p^{m C(r,2)}.
Scalar mainine_term(std::uint64_t n, const Rational& p, std::size_t r, std::size_t k, std::size_t m,
                    Mode mode = Mode::Exact);

}  // namespace rgtc
