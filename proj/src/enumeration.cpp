#include "pcat/enumeration.hpp"

#include <string>

#include "pcat/cache.hpp"
#include "pcat/errors.hpp"
#include "pcat/euclid.hpp"

namespace pcat {

namespace {

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) {
    throw DomainError(std::string(name) + " must be positive (got " + std::to_string(v) + ")");
  }
}

}  // namespace

BigCount catalan(std::int64_t n) {
  require_positive(n, "n");
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * n - 2),
               static_cast<unsigned long>(n - 1));
  c /= static_cast<unsigned long>(n);
  return BigCount::from_signed(c);
}

BigCount word_count_bound(std::int64_t s, std::int64_t n) {
  require_positive(s, "s");
  require_positive(n, "n");
  return pow(BigCount(3), static_cast<unsigned long>(n - 1)) *
         pow(BigCount(static_cast<std::uint64_t>(s)), static_cast<unsigned long>(n)) * catalan(n);
}

// ---------------------------------------------------------------------------
// PeriTable

PeriTable::PeriTable(std::int64_t s) : s_(s), values_{BigCount(0)} { require_positive(s, "s"); }

PeriTable::PeriTable(std::int64_t s, std::vector<BigCount> values_from_one) : PeriTable(s) {
  values_.reserve(values_from_one.size() + 1);
  for (auto& v : values_from_one) values_.push_back(std::move(v));
}

const BigCount& PeriTable::at(std::int64_t n) const {
  if (n < 0 || n > max_n()) {
    throw DomainError("P_" + std::to_string(n) + " is not in the table (max " +
                      std::to_string(max_n()) + ")");
  }
  return values_[static_cast<std::size_t>(n)];
}

void PeriTable::extend_to(std::int64_t n_max) {
  while (max_n() < n_max) values_.push_back(next_value());
}

BigCount PeriTable::next_value() const {
  const std::int64_t n = max_n() + 1;
  if (n == 1) return BigCount(static_cast<std::uint64_t>(s_));

  const auto p = [this](std::int64_t i) -> const mpz_class& {
    return values_[static_cast<std::size_t>(i)].value();
  };

  mpz_class total = 0;
  mpz_class block;
  mpz_class term;
  for (std::int64_t k = 1; k < n; ++k) {
    const EuclidTrace tr(n, k);
    block = 0;
    // i = 0 starts at j = 1; every later division step starts at j = 0.
    for (int i = 0; i <= tr.steps(); ++i) {
      const std::int64_t r_prev = tr.remainder(i - 1);
      const std::int64_t r_cur = tr.remainder(i);
      const std::int64_t eps = tr.epsilon(i);
      const std::int64_t q = tr.quotient(i + 1);
      for (std::int64_t j = (i == 0 ? 1 : 0); j < q; ++j) {
        term = p(r_prev - j * r_cur) * p(r_cur);
        if ((eps + j) % 2 == 0) {
          block += term;
        } else {
          block -= term;
        }
      }
    }
    // block is m(n-k, k)
    if (sgn(block) < 0) {
      throw std::logic_error("negative cancelation block at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k));
    }
    total += block;
  }
  total *= 3;
  return BigCount::from_signed(total);
}

std::optional<std::int64_t> PeriTable::first_invalid_entry() const {
  const auto s = static_cast<std::uint64_t>(s_);
  if (!values_[0].is_zero()) return 0;
  if (max_n() >= 1 && values_[1] != BigCount(s)) return 1;
  if (max_n() >= 2 && values_[2] != BigCount(3 * s * s)) return 2;
  for (std::int64_t n = 3; n <= max_n(); ++n) {
    if (values_[static_cast<std::size_t>(n)] > word_count_bound(s_, n)) return n;
  }
  return std::nullopt;
}

BigCount peri_catalan(std::int64_t s, std::int64_t n) {
  require_positive(s, "s");
  require_positive(n, "n");
  PeriTable t(s);
  t.extend_to(n);
  return t[n];
}

// ---------------------------------------------------------------------------
// CancelationRecursion

CancelationRecursion::CancelationRecursion(std::int64_t s) : s_(s), values_{BigCount(0)} {
  require_positive(s, "s");
}

void CancelationRecursion::extend_to(std::int64_t n) {
  while (static_cast<std::int64_t>(values_.size()) <= n) {
    const auto next = static_cast<std::int64_t>(values_.size());
    if (next == 1) {
      values_.emplace_back(static_cast<std::uint64_t>(s_));
      continue;
    }
    BigCount sum(0);
    for (std::int64_t k = 1; k < next; ++k) sum += aux(next - k, k);
    values_.push_back(sum * BigCount(3));
  }
}

const BigCount& CancelationRecursion::peri(std::int64_t n) {
  require_positive(n, "n");
  extend_to(n);
  return values_[static_cast<std::size_t>(n)];
}

BigCount CancelationRecursion::aux(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) return BigCount(0);
  return aux_canonical(std::max(a, b), std::min(a, b));
}

const BigCount& CancelationRecursion::aux_canonical(std::int64_t hi, std::int64_t lo) {
  const auto key = std::make_pair(hi, lo);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // P values up to hi are needed; extend_to only asks for m with smaller sums.
  if (static_cast<std::int64_t>(values_.size()) <= hi) extend_to(hi);

  mpz_class v = values_[static_cast<std::size_t>(hi)].value() *
                values_[static_cast<std::size_t>(lo)].value();
  v -= aux(hi - lo, lo).value();
  return memo_.emplace(key, BigCount::from_signed(v)).first->second;
}

BigCount aux_bivariate(std::int64_t s, std::int64_t a, std::int64_t b) {
  require_positive(s, "s");
  if (a <= 0 || b <= 0) return BigCount(0);
  CancelationRecursion rec(s);
  return rec.aux(a, b);
}

BigCount peri_catalan_recursive(std::int64_t s, std::int64_t n) {
  require_positive(s, "s");
  require_positive(n, "n");
  CancelationRecursion rec(s);
  return rec.peri(n);
}

// ---------------------------------------------------------------------------

PeriTable build_table(std::int64_t s, std::int64_t n_max,
                      const std::optional<std::filesystem::path>& cache_dir) {
  require_positive(s, "s");
  require_positive(n_max, "n_max");
  if (!cache_dir) {
    PeriTable t(s);
    t.extend_to(n_max);
    return t;
  }

  PeriTable t = load_cache(*cache_dir, s).value_or(PeriTable(s));
  const std::int64_t cached = t.max_n();
  t.extend_to(n_max);
  if (t.max_n() > cached) save_cache(*cache_dir, t);
  if (t.max_n() == n_max) return t;
  // Cache held more entries than requested.
  std::vector<BigCount> head(t.values().begin() + 1, t.values().begin() + 1 + n_max);
  return PeriTable(s, std::move(head));
}

}  // namespace pcat
