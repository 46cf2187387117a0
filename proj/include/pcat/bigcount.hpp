#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace pcat {

// Arbitrary-precision nonnegative integer. Signed intermediates live in
// mpz_class and are converted back through from_signed(), which enforces
// the sign invariant.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  static BigCount from_signed(const mpz_class& v);
  static BigCount from_decimal(std::string_view digits);

  const mpz_class& value() const { return value_; }

  std::string to_string() const;
  bool is_zero() const { return sgn(value_) == 0; }

  // Natural logarithm; exact to double rounding even for huge values.
  double log() const;

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    value_ *= o.value_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

  friend bool operator==(const BigCount& a, const BigCount& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigCount& b) {
    return os << b.to_string();
  }

 private:
  explicit BigCount(mpz_class v) : value_(std::move(v)) {}
  mpz_class value_;
};

BigCount pow(const BigCount& base, unsigned long exponent);

}  // namespace pcat
