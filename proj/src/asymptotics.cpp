#include "pcat/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pcat/errors.hpp"

namespace pcat {

namespace {

const double kLog3 = std::log(3.0);

}  // namespace

double log_catalan(std::int64_t n) {
  if (n < 1) throw DomainError("log_catalan needs n >= 1");
  const auto x = static_cast<double>(n);
  // C_n = (2n-2)! / ((n-1)! n!)
  return std::lgamma(2 * x - 1) - std::lgamma(x) - std::lgamma(x + 1);
}

double log_word_count_bound(std::int64_t s, std::int64_t n) {
  if (s < 1 || n < 1) throw DomainError("log_word_count_bound needs s, n >= 1");
  return log_catalan(n) + static_cast<double>(n) * std::log(3.0 * static_cast<double>(s)) - kLog3;
}

// ---------------------------------------------------------------------------

RhoMemo::RhoMemo(std::int64_t max_sum) : rows_(static_cast<std::size_t>(max_sum) + 1) {
  for (std::int64_t t = 2; t <= max_sum; ++t) {
    rows_[static_cast<std::size_t>(t)].assign(static_cast<std::size_t>(t / 2) + 1, 0.0);
  }
}

double RhoMemo::get(std::int64_t a, std::int64_t b) const {
  if (a <= 0 || b <= 0) return 0.0;
  const std::int64_t lo = std::min(a, b);
  const std::int64_t sum = a + b;
  if (sum > max_sum()) throw DomainError("rho(" + std::to_string(a) + "," + std::to_string(b) + ") not computed");
  return rows_[static_cast<std::size_t>(sum)][static_cast<std::size_t>(lo)];
}

void RhoMemo::set(std::int64_t a, std::int64_t b, double value) {
  rows_.at(static_cast<std::size_t>(a + b)).at(static_cast<std::size_t>(std::min(a, b))) = value;
}

// ---------------------------------------------------------------------------

LogTable::LogTable(std::int64_t s, std::vector<double> log_p, std::vector<double> log_c)
    : s_(s), log_p_(std::move(log_p)), log_c_(std::move(log_c)) {}

double LogTable::log_p(std::int64_t n) const {
  if (n < 1 || n > max_n()) throw DomainError("ln P_" + std::to_string(n) + " not in table");
  return log_p_[static_cast<std::size_t>(n)];
}

double LogTable::log_catalan(std::int64_t n) const {
  if (n < 1 || n > max_n()) throw DomainError("ln C_" + std::to_string(n) + " not in table");
  return log_c_[static_cast<std::size_t>(n)];
}

double LogTable::log_bound(std::int64_t n) const {
  return log_catalan(n) + static_cast<double>(n) * std::log(3.0 * static_cast<double>(s_)) - kLog3;
}

LogSpaceRun log_space_run(std::int64_t s, std::int64_t max_n) {
  if (s < 1) throw DomainError("s must be positive");
  if (max_n < 2) throw DomainError("log-space table needs max_n >= 2");

  const auto size = static_cast<std::size_t>(max_n) + 1;
  std::vector<double> lp(size, 0.0);
  std::vector<double> lc(size, 0.0);
  for (std::int64_t n = 1; n <= max_n; ++n) lc[static_cast<std::size_t>(n)] = log_catalan(n);

  RhoMemo rho(max_n);
  const auto l = [&lp](std::int64_t i) { return lp[static_cast<std::size_t>(i)]; };

  lp[1] = std::log(static_cast<double>(s));
  for (std::int64_t n = 2; n <= max_n; ++n) {
    // Pairs summing to n depend only on l_a for a < n and on pairs with smaller sums.
    for (std::int64_t b = 1; b <= n / 2; ++b) {
      const std::int64_t a = n - b;
      double r = 1.0;
      if (a > b) r = 1.0 - rho.get(a - b, b) * std::exp(l(a - b) - l(a));
      if (!(r > 0.0)) {
        throw StabilityError("nonpositive cancelation ratio at s=" + std::to_string(s) +
                             ", n=" + std::to_string(n) + ", k=" + std::to_string(b));
      }
      rho.set(a, b, r);
    }

    double max_term = -INFINITY;
    double acc = 0.0;
    for (std::int64_t k = 1; k < n; ++k) {
      const double term = std::log(rho.get(n - k, k)) + l(n - k) + l(k);
      if (term > max_term) {
        acc = acc * std::exp(max_term - term) + 1.0;
        max_term = term;
      } else {
        acc += std::exp(term - max_term);
      }
    }
    lp[static_cast<std::size_t>(n)] = kLog3 + max_term + std::log(acc);
  }
  return {LogTable(s, std::move(lp), std::move(lc)), std::move(rho)};
}

LogTable log_peri_table(std::int64_t s, std::int64_t max_n) {
  return std::move(log_space_run(s, max_n).table);
}

double quotient(std::int64_t n, const LogTable& table) {
  if (n < 2) throw DomainError("quotient needs n >= 2");
  return table.log_p(n) / table.log_bound(n);
}

double cancelation_defect(std::int64_t n, const LogTable& table) { return 1.0 - quotient(n, table); }

// ---------------------------------------------------------------------------

RegressionResult linear_regression(std::span<const Point> points) {
  const std::size_t count = points.size();
  if (count < 2) throw DomainError("linear regression needs at least two points");
  double mx = 0.0;
  double my = 0.0;
  for (const auto& p : points) {
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(count);
  my /= static_cast<double>(count);
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& p : points) {
    sxx += (p.x - mx) * (p.x - mx);
    sxy += (p.x - mx) * (p.y - my);
  }
  if (!(sxx > 0.0)) throw DomainError("linear regression needs at least two distinct x values");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ssr = 0.0;
  for (const auto& p : points) {
    const double e = p.y - (slope * p.x + intercept);
    ssr += e * e;
  }
  const double rse = count > 2 ? std::sqrt(ssr / static_cast<double>(count - 2)) : 0.0;
  return {slope, intercept, rse};
}

namespace {

struct Line {
  double slope;
  double intercept;
};

// Weighted least squares for y = slope x + intercept.
Line weighted_line(std::span<const Point> points, std::span<const double> weights) {
  double sw = 0.0;
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    sw += weights[i];
    mx += weights[i] * points[i].x;
    my += weights[i] * points[i].y;
  }
  mx /= sw;
  my /= sw;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    sxx += weights[i] * (points[i].x - mx) * (points[i].x - mx);
    sxy += weights[i] * (points[i].x - mx) * (points[i].y - my);
  }
  if (!(sxx > 0.0)) throw DomainError("rational fit is singular (all s coincide)");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

double rational_sse(std::span<const Point> points, double a, double b) {
  double sse = 0.0;
  for (const auto& p : points) {
    const double e = p.y - a / (p.x - b);
    sse += e * e;
  }
  return sse;
}

}  // namespace

RationalFitResult rational_fit(std::span<const Point> points) {
  if (points.size() < 2) throw DomainError("rational fit needs at least two points");
  std::vector<Point> inverted;
  inverted.reserve(points.size());
  double min_s = INFINITY;
  for (const auto& p : points) {
    if (!(p.y > 0.0)) throw DomainError("rational fit needs f > 0 (got " + std::to_string(p.y) + ")");
    inverted.push_back({p.x, 1.0 / p.y});
    min_s = std::min(min_s, p.x);
  }

  const RegressionResult lin = linear_regression(inverted);
  if (lin.slope == 0.0 || !std::isfinite(lin.slope)) {
    throw DomainError("rational fit is singular (zero slope in 1/f)");
  }
  const double lin_a = 1.0 / lin.slope;
  const double lin_b = -lin.intercept * lin_a;

  std::vector<double> w;
  w.reserve(points.size());
  for (const auto& p : points) w.push_back(p.y * p.y * p.y * p.y);
  const Line seed = weighted_line(inverted, w);
  if (seed.slope == 0.0 || !std::isfinite(seed.slope)) {
    throw DomainError("rational fit is singular (zero slope in 1/f)");
  }
  double a = 1.0 / seed.slope;
  double b = -seed.intercept * a;
  if (!(b < min_s)) b = min_s - 0.5;

  // Levenberg-Marquardt on r_i = f_i - a / (s_i - b).
  double sse = rational_sse(points, a, b);
  double lambda = 1e-3;
  int iterations = 0;
  for (; iterations < 200; ++iterations) {
    double jaa = 0.0;
    double jab = 0.0;
    double jbb = 0.0;
    double ga = 0.0;
    double gb = 0.0;
    for (const auto& p : points) {
      const double d = p.x - b;
      const double r = p.y - a / d;
      const double da = 1.0 / d;       // -dr/da
      const double db = a / (d * d);   // -dr/db
      jaa += da * da;
      jab += da * db;
      jbb += db * db;
      ga += da * r;
      gb += db * r;
    }
    bool improved = false;
    while (lambda < 1e12) {
      const double m00 = jaa * (1.0 + lambda);
      const double m11 = jbb * (1.0 + lambda);
      const double det = m00 * m11 - jab * jab;
      if (det == 0.0 || !std::isfinite(det)) break;
      const double step_a = (ga * m11 - gb * jab) / det;
      const double step_b = (m00 * gb - jab * ga) / det;
      const double na = a + step_a;
      const double nb = b + step_b;
      const double nsse = nb < min_s ? rational_sse(points, na, nb) : INFINITY;
      if (nsse < sse) {
        const double rel = (sse - nsse) / std::max(sse, 1e-300);
        a = na;
        b = nb;
        sse = nsse;
        lambda = std::max(lambda * 0.1, 1e-12);
        improved = rel > 1e-15;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) break;
  }

  const double dof = points.size() > 2 ? static_cast<double>(points.size() - 2) : 1.0;
  return {a, b, std::sqrt(sse / dof), lin_a, lin_b, iterations};
}

MonotonicityReport check_nondecreasing(std::span<const double> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) return {false, i};
  }
  return {true, std::nullopt};
}

MonotonicityReport check_strictly_decreasing(std::span<const double> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] < values[i - 1])) return {false, i};
  }
  return {true, std::nullopt};
}

}  // namespace pcat
