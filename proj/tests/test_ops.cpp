#include <doctest.h>

#include <set>

#include "pcat/ops.hpp"

using pcat::OpSymbol;
using E = OpSymbol::Element;

TEST_CASE("S3 group axioms") {
  const OpSymbol e = E::e;
  const OpSymbol sigma = E::sigma;
  const OpSymbol tau = E::tau;
  CHECK(sigma * sigma == e);
  CHECK(tau * tau == e);
  CHECK((sigma * tau) * (sigma * tau) * (sigma * tau) == e);
  CHECK(sigma * tau == OpSymbol(E::sigma_tau));
  CHECK(tau * sigma == OpSymbol(E::tau_sigma));
  CHECK(sigma * tau * sigma == OpSymbol(E::sigma_tau_sigma));
  CHECK(tau * sigma * tau == OpSymbol(E::sigma_tau_sigma));

  std::set<int> products;
  for (OpSymbol g : OpSymbol::all()) {
    CHECK(g * e == g);
    CHECK(e * g == g);
    CHECK(g * g.inverse() == e);
    for (OpSymbol h : OpSymbol::all()) {
      products.insert((g * h).index());
      for (OpSymbol k : OpSymbol::all()) CHECK((g * h) * k == g * (h * k));
    }
  }
  CHECK(products.size() == 6);
}

TEST_CASE("basic subset") {
  std::set<int> basic;
  for (OpSymbol g : OpSymbol::basic()) basic.insert(g.index());
  CHECK(basic == std::set<int>{OpSymbol(E::e).index(), OpSymbol(E::tau).index(),
                               OpSymbol(E::sigma_tau_sigma).index()});
  CHECK(OpSymbol::multiply().ascii() == "*");
  CHECK(OpSymbol::left_divide().ascii() == "\\");
  CHECK(OpSymbol::right_divide().ascii() == "/");
}

TEST_CASE("opposites and cancel partners") {
  CHECK(pcat::op_algebra(OpSymbol::multiply()).opposite == OpSymbol::opposite_multiply());
  CHECK(pcat::op_algebra(OpSymbol::opposite_multiply()).opposite == OpSymbol::multiply());
  CHECK(pcat::op_algebra(OpSymbol::multiply()).cancel_partner == OpSymbol::left_divide());
  CHECK(OpSymbol::left_divide().opposite() == OpSymbol::opposite_left_divide());
  CHECK(OpSymbol::right_divide().opposite() == OpSymbol::opposite_right_divide());

  for (OpSymbol g : OpSymbol::all()) {
    CHECK(g.opposite().opposite() == g);
    CHECK(g.cancel_partner().cancel_partner() == g);
    // exactly one of g and its opposite is basic
    CHECK(g.is_basic() != g.opposite().is_basic());
  }

  // The inverse pairs of the monoid of derived operations.
  CHECK(OpSymbol::left_divide().cancel_partner() == OpSymbol::multiply());
  CHECK(OpSymbol::opposite_multiply().cancel_partner() == OpSymbol::opposite_right_divide());
  CHECK(OpSymbol::right_divide().cancel_partner() == OpSymbol::opposite_left_divide());
}
