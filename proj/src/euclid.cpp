#include "pcat/euclid.hpp"

#include <string>

#include "pcat/errors.hpp"

namespace pcat {

EuclidTrace::EuclidTrace(std::int64_t n, std::int64_t k) {
  if (n < 2 || k < 1 || k >= n) {
    throw DomainError("euclid_trace requires n >= 2 and 1 <= k <= n-1 (got n=" +
                      std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  remainders_ = {n, k};
  std::int64_t a = n;
  std::int64_t b = k;
  while (b != 0) {
    quotients_.push_back(a / b);
    std::int64_t r = a % b;
    remainders_.push_back(r);
    a = b;
    b = r;
  }
  // quotients_ has L+1 entries; eps is needed only for 0..L.
  epsilons_.reserve(quotients_.size());
  epsilons_.push_back(1);
  for (std::size_t l = 0; l + 1 < quotients_.size(); ++l) {
    epsilons_.push_back(epsilons_.back() + quotients_[l]);
  }
}

EuclidTrace euclid_trace(std::int64_t n, std::int64_t k) { return EuclidTrace(n, k); }

}  // namespace pcat
