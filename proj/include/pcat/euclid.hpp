#pragma once

#include <cstdint>
#include <vector>

namespace pcat {

// Division-algorithm trace of gcd(n, k).
//
// Remainders are indexed from -1: r(-1) = n, r(0) = k, ..., r(L+1) = 0, and
// r(l-2) = q(l) * r(l-1) + r(l) for 1 <= l <= L+1. The epsilon sequence is
// eps(0) = 1, eps(l+1) = eps(l) + q(l+1) for 0 <= l < L.
class EuclidTrace {
 public:
  EuclidTrace(std::int64_t n, std::int64_t k);

  std::int64_t n() const { return remainders_.front(); }
  std::int64_t k() const { return remainders_[1]; }

  // L, the index of the last nonzero remainder.
  int steps() const { return static_cast<int>(quotients_.size()) - 1; }

  // l in [-1, L+1]
  std::int64_t remainder(int l) const { return remainders_.at(l + 1); }
  // l in [1, L+1]
  std::int64_t quotient(int l) const { return quotients_.at(l - 1); }
  // l in [0, L]
  std::int64_t epsilon(int l) const { return epsilons_.at(l); }

  std::int64_t gcd() const { return remainder(steps()); }

  const std::vector<std::int64_t>& remainders() const { return remainders_; }
  const std::vector<std::int64_t>& quotients() const { return quotients_; }
  const std::vector<std::int64_t>& epsilons() const { return epsilons_; }

 private:
  std::vector<std::int64_t> remainders_;
  std::vector<std::int64_t> quotients_;
  std::vector<std::int64_t> epsilons_;
};

// Throws DomainError unless n >= 2 and 1 <= k <= n-1.
EuclidTrace euclid_trace(std::int64_t n, std::int64_t k);

}  // namespace pcat
