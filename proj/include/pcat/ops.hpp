#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace pcat {

// The six quasigroup operations, indexed by elements of S3 acting on the
// right of the multiplication mu:
//
//   e -> x*y   tau -> x\y   tau.sigma -> x//y = y/x
//   sigma -> x o y = y*x   sigma.tau -> x\\y = y\x   sigma.tau.sigma -> x/y
//
// Products are written left to right (first g, then h) and sigma, tau are the
// transpositions (0 1), (1 2).
class OpSymbol {
 public:
  enum class Element : std::uint8_t { e, sigma, tau, sigma_tau, tau_sigma, sigma_tau_sigma };

  constexpr OpSymbol() = default;
  constexpr OpSymbol(Element g) : g_(g) {}  // NOLINT(google-explicit-constructor)

  static constexpr OpSymbol multiply() { return Element::e; }
  static constexpr OpSymbol left_divide() { return Element::tau; }
  static constexpr OpSymbol right_divide() { return Element::sigma_tau_sigma; }
  static constexpr OpSymbol opposite_multiply() { return Element::sigma; }
  static constexpr OpSymbol opposite_left_divide() { return Element::sigma_tau; }
  static constexpr OpSymbol opposite_right_divide() { return Element::tau_sigma; }

  static constexpr std::array<OpSymbol, 6> all() {
    return {Element::e,         Element::sigma,     Element::tau,
            Element::sigma_tau, Element::tau_sigma, Element::sigma_tau_sigma};
  }
  static constexpr std::array<OpSymbol, 3> basic() {
    return {Element::e, Element::tau, Element::sigma_tau_sigma};
  }

  constexpr Element element() const { return g_; }
  constexpr int index() const { return static_cast<int>(g_); }
  static constexpr OpSymbol from_index(int i) { return static_cast<Element>(i); }

  constexpr bool is_basic() const {
    return g_ == Element::e || g_ == Element::tau || g_ == Element::sigma_tau_sigma;
  }

  // Group product g*h: apply g, then h.
  friend constexpr OpSymbol operator*(OpSymbol g, OpSymbol h) {
    const auto pg = perm(g.g_);
    const auto ph = perm(h.g_);
    return from_perm({ph[pg[0]], ph[pg[1]], ph[pg[2]]});
  }

  constexpr OpSymbol inverse() const {
    const auto p = perm(g_);
    std::array<std::uint8_t, 3> inv{};
    for (std::uint8_t i = 0; i < 3; ++i) inv[p[i]] = i;
    return from_perm(inv);
  }

  // sigma * g
  constexpr OpSymbol opposite() const { return OpSymbol(Element::sigma) * *this; }
  // tau * g: the operation that undoes this one in x (x y mu^{tau g}) mu^g = y.
  constexpr OpSymbol cancel_partner() const { return OpSymbol(Element::tau) * *this; }

  // "*", "/", "\", "o", "//", "\\"
  std::string_view ascii() const;
  // "e", "σ", "τ", "στ", "τσ", "στσ"
  std::string_view group_name() const;
  std::string_view unicode() const;

  friend constexpr bool operator==(OpSymbol, OpSymbol) = default;

 private:
  static constexpr std::array<std::uint8_t, 3> perm(Element g) {
    switch (g) {
      case Element::e: return {0, 1, 2};
      case Element::sigma: return {1, 0, 2};
      case Element::tau: return {0, 2, 1};
      case Element::sigma_tau: return {2, 0, 1};
      case Element::tau_sigma: return {1, 2, 0};
      case Element::sigma_tau_sigma: return {2, 1, 0};
    }
    return {0, 1, 2};
  }

  static constexpr OpSymbol from_perm(std::array<std::uint8_t, 3> p) {
    for (int i = 0; i < 6; ++i) {
      if (perm(static_cast<Element>(i)) == p) return static_cast<Element>(i);
    }
    return Element::e;
  }

  Element g_ = Element::e;
};

struct OpRelations {
  OpSymbol opposite;
  OpSymbol cancel_partner;
};

constexpr OpRelations op_algebra(OpSymbol op) { return {op.opposite(), op.cancel_partner()}; }

}  // namespace pcat
