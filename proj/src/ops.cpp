#include "pcat/ops.hpp"

namespace pcat {

std::string_view OpSymbol::ascii() const {
  switch (g_) {
    case Element::e: return "*";
    case Element::sigma: return "o";
    case Element::tau: return "\\";
    case Element::sigma_tau: return "\\\\";
    case Element::tau_sigma: return "//";
    case Element::sigma_tau_sigma: return "/";
  }
  return "?";
}

std::string_view OpSymbol::group_name() const {
  switch (g_) {
    case Element::e: return "e";
    case Element::sigma: return "σ";
    case Element::tau: return "τ";
    case Element::sigma_tau: return "στ";
    case Element::tau_sigma: return "τσ";
    case Element::sigma_tau_sigma: return "στσ";
  }
  return "?";
}

std::string_view OpSymbol::unicode() const {
  switch (g_) {
    case Element::e: return "·";
    case Element::sigma: return "∘";
    case Element::tau: return "\\";
    case Element::sigma_tau: return "\\\\";
    case Element::tau_sigma: return "//";
    case Element::sigma_tau_sigma: return "/";
  }
  return "?";
}

}  // namespace pcat
