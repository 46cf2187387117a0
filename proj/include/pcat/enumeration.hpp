#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pcat/bigcount.hpp"

namespace pcat {

// Leaf-indexed Catalan number: the number of binary trees with n leaves.
BigCount catalan(std::int64_t n);

// 3^(n-1) s^n C_n, the number of basic parsing trees with n leaves.
BigCount word_count_bound(std::int64_t s, std::int64_t n);

// Peri-Catalan numbers P_0 ... P_max for a fixed generator count, computed
// in ascending order with the Euclid-structured alternating sum. Entry 0 is
// always zero.
class PeriTable {
 public:
  explicit PeriTable(std::int64_t s);

  // Adopts previously computed values P_1..P_m (e.g. from the cache).
  // No validation here; see validate().
  PeriTable(std::int64_t s, std::vector<BigCount> values_from_one);

  std::int64_t generators() const { return s_; }
  std::int64_t max_n() const { return static_cast<std::int64_t>(values_.size()) - 1; }

  const BigCount& at(std::int64_t n) const;
  const BigCount& operator[](std::int64_t n) const { return values_[static_cast<std::size_t>(n)]; }

  // P_0 .. P_max_n
  std::span<const BigCount> values() const { return values_; }

  void extend_to(std::int64_t n_max);

  // Checks P_1 = s, P_2 = 3s^2 and the word-count bound on every entry.
  // Returns the first offending index, or nullopt if the table is sound.
  std::optional<std::int64_t> first_invalid_entry() const;

 private:
  BigCount next_value() const;

  std::int64_t s_;
  std::vector<BigCount> values_;
};

// P^s_n via the Euclid-structured formula. Throws DomainError on s < 1 or n < 1.
BigCount peri_catalan(std::int64_t s, std::int64_t n);

// Plain cancelation recursion: P_n = 3 sum_k m(n-k, k) with
// m(a, b) = P_a P_b - m(a-b, b) for a >= b, m symmetric, and m = 0 whenever
// an argument is nonpositive. Keeps its own P values and a memo of m keyed by
// (max, min), so it shares nothing with PeriTable.
class CancelationRecursion {
 public:
  explicit CancelationRecursion(std::int64_t s);

  std::int64_t generators() const { return s_; }

  const BigCount& peri(std::int64_t n);
  BigCount aux(std::int64_t a, std::int64_t b);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  void extend_to(std::int64_t n);
  const BigCount& aux_canonical(std::int64_t hi, std::int64_t lo);

  std::int64_t s_;
  std::vector<BigCount> values_;
  std::map<std::pair<std::int64_t, std::int64_t>, BigCount> memo_;
};

// m^s(a, b); zero when a <= 0 or b <= 0. Throws DomainError on s < 1.
BigCount aux_bivariate(std::int64_t s, std::int64_t a, std::int64_t b);

// P^s_n = 3 sum_{k=1}^{n-1} m^s(n-k, k).
BigCount peri_catalan_recursive(std::int64_t s, std::int64_t n);

// Builds P_1..P_n_max, reading and extending the cache in cache_dir if given.
PeriTable build_table(std::int64_t s, std::int64_t n_max,
                      const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

}  // namespace pcat
