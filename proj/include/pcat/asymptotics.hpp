#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pcat {

// ln C_n for the leaf-indexed Catalan numbers, n >= 1.
double log_catalan(std::int64_t n);

// ln of 3^(n-1) s^n C_n.
double log_word_count_bound(std::int64_t s, std::int64_t n);

// Scaled cancelation ratios rho(a, b) = m(a, b) / (P_a P_b) for a >= b >= 1,
// stored by (a + b, b).
class RhoMemo {
 public:
  RhoMemo() = default;
  explicit RhoMemo(std::int64_t max_sum);

  // Symmetric; zero when either argument is nonpositive.
  double get(std::int64_t a, std::int64_t b) const;
  void set(std::int64_t a, std::int64_t b, double value);

  std::int64_t max_sum() const { return static_cast<std::int64_t>(rows_.size()) - 1; }

 private:
  std::vector<std::vector<double>> rows_;
};

// ln P^s_n for n = 1..max_n, plus ln C_n.
class LogTable {
 public:
  LogTable(std::int64_t s, std::vector<double> log_p, std::vector<double> log_c);

  std::int64_t generators() const { return s_; }
  std::int64_t max_n() const { return static_cast<std::int64_t>(log_p_.size()) - 1; }

  double log_p(std::int64_t n) const;
  double log_catalan(std::int64_t n) const;
  double log_bound(std::int64_t n) const;

 private:
  std::int64_t s_;
  std::vector<double> log_p_;  // index 0 unused
  std::vector<double> log_c_;
};

struct LogSpaceRun {
  LogTable table;
  RhoMemo rho;
};

// Evaluates
//   l_n = ln 3 + logsumexp_{k=1}^{n-1} [ln rho(n-k, k) + l_{n-k} + l_k]
//   rho(a, b) = 1 - rho(a-b, b) exp(l_{a-b} - l_a)      (a >= b)
// in ascending k with a running-maximum logsumexp. Throws StabilityError if
// any rho comes out nonpositive, DomainError on s < 1 or max_n < 2.
LogSpaceRun log_space_run(std::int64_t s, std::int64_t max_n);
LogTable log_peri_table(std::int64_t s, std::int64_t max_n);

// l_n / (ln C_n + n ln 3s - ln 3); n >= 2.
double quotient(std::int64_t n, const LogTable& table);
// 1 - quotient
double cancelation_defect(std::int64_t n, const LogTable& table);

struct Point {
  double x;
  double y;
};

struct RegressionResult {
  double slope;
  double intercept;
  double residual_std_error;  // sqrt(SSR / (N - 2)); 0 for two points
};

// Ordinary least squares. Throws DomainError with fewer than two points or
// when all x coincide.
RegressionResult linear_regression(std::span<const Point> points);

struct RationalFitResult {
  double a;
  double b;
  double residual;  // residual standard error in f
  double linearized_a;
  double linearized_b;
  int iterations;
};

// Fits f ~ a / (s - b) to points (s, f), f > 0, minimizing squared error in f.
// The linear least-squares solution of 1/f = s/a - b/a (each point weighted
// by f^4, its first-order equivalent) seeds a Levenberg-Marquardt refinement.
// The unweighted linearized solution is reported alongside.
RationalFitResult rational_fit(std::span<const Point> points);

// First index at which a series stops being monotone, if any.
struct MonotonicityReport {
  bool holds;
  std::optional<std::size_t> first_violation;
};
MonotonicityReport check_nondecreasing(std::span<const double> values);
MonotonicityReport check_strictly_decreasing(std::span<const double> values);

}  // namespace pcat
