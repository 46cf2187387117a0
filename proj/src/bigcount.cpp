#include "pcat/bigcount.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "pcat/errors.hpp"

namespace pcat {

BigCount::BigCount(std::uint64_t v) {
  // mpz_class has no portable uint64_t constructor on every platform.
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

BigCount BigCount::from_signed(const mpz_class& v) {
  if (sgn(v) < 0) throw DomainError("negative value where a count was expected");
  return BigCount(v);
}

BigCount BigCount::from_decimal(std::string_view digits) {
  if (digits.empty()) throw DomainError("empty decimal string");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("invalid decimal digit in '" + std::string(digits) + "'");
    }
  }
  return BigCount(mpz_class(std::string(digits), 10));
}

std::string BigCount::to_string() const { return value_.get_str(10); }

double BigCount::log() const {
  if (is_zero()) return -INFINITY;
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, value_.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

BigCount pow(const BigCount& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.value().get_mpz_t(), exponent);
  return BigCount::from_signed(r);
}

}  // namespace pcat
