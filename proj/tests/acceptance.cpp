// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "pcat/asymptotics.hpp"
#include "pcat/enumeration.hpp"
#include "pcat/freewords.hpp"

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string num(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

bool within_rel(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

// Reference values for s = 1, 2, 3 and n = 1..10.
const char* const kTableOne[3][10] = {
    {"1", "3", "12", "87", "666", "5478", "47322", "422145", "3859026", "35967054"},
    {"2", "12", "120", "1752", "28224", "487464", "8814312", "164734560", "3156739080",
     "61689134928"},
    {"3", "27", "432", "9531", "233766", "6143094", "169029666", "4808015253", "140243036202",
     "4172008467726"},
};

std::map<std::int64_t, pcat::PeriTable> exact_tables;

const pcat::PeriTable& exact(std::int64_t s, std::int64_t n_max) {
  auto it = exact_tables.find(s);
  if (it == exact_tables.end()) it = exact_tables.emplace(s, pcat::PeriTable(s)).first;
  it->second.extend_to(n_max);
  return it->second;
}

}  // namespace

int main() {
  criterion("golden table (s in {1,2,3}, n <= 10)", [] {
    int mismatches = 0;
    for (std::int64_t s = 1; s <= 3; ++s) {
      const auto& t = exact(s, 10);
      for (std::int64_t n = 1; n <= 10; ++n) {
        if (t[n] != pcat::BigCount::from_decimal(kTableOne[s - 1][n - 1])) ++mismatches;
      }
    }
    return Outcome{mismatches == 0, "30 values, " + std::to_string(mismatches) + " mismatches; P^1_10=" +
                                        exact(1, 10)[10].to_string() + " P^2_10=" +
                                        exact(2, 10)[10].to_string() + " P^3_10=" +
                                        exact(3, 10)[10].to_string()};
  });

  criterion("worked example P^2_4 = 1752 via three paths", [] {
    const auto euclid = pcat::peri_catalan(2, 4);
    const auto recursive = pcat::peri_catalan_recursive(2, 4);
    const auto oracle = pcat::count_reduced(2, 4);
    const auto candidates = pcat::word_count_bound(2, 4);
    const pcat::BigCount target(1752);
    const bool ok = euclid == target && recursive == target && pcat::BigCount(oracle) == target &&
                    candidates == pcat::BigCount(2160);
    return Outcome{ok, "euclid=" + euclid.to_string() + " recursive=" + recursive.to_string() +
                           " oracle=" + std::to_string(oracle) + " candidates=" + candidates.to_string()};
  });

  criterion("path equivalence (n <= 300, s in {1,2,12})", [] {
    int mismatches = 0;
    for (std::int64_t s : {1, 2, 12}) {
      const auto& t = exact(s, 300);
      pcat::CancelationRecursion rec(s);
      for (std::int64_t n = 1; n <= 300; ++n) {
        if (rec.peri(n) != t[n]) ++mismatches;
      }
    }
    return Outcome{mismatches == 0, "900 comparisons, " + std::to_string(mismatches) + " mismatches"};
  });

  criterion("oracle equivalence (s <= 3, n <= 6; s = 1, n <= 8)", [] {
    int mismatches = 0;
    int cases = 0;
    std::uint64_t largest = 0;
    const auto check = [&](std::int64_t s, std::int64_t n) {
      const std::uint64_t count = pcat::count_reduced(s, n);
      largest = std::max<std::uint64_t>(largest, pcat::word_count_bound(s, n).value().get_ui());
      ++cases;
      if (pcat::BigCount(count) != exact(s, n)[n]) ++mismatches;
    };
    for (std::int64_t s = 1; s <= 3; ++s) {
      for (std::int64_t n = 1; n <= 6; ++n) check(s, n);
    }
    for (std::int64_t n = 7; n <= 8; ++n) check(1, n);
    return Outcome{mismatches == 0, std::to_string(cases) + " cases, " + std::to_string(mismatches) +
                                        " mismatches, largest case " + std::to_string(largest) +
                                        " trees"};
  });

  criterion("root-operation invariance (a+b <= 6, s <= 2)", [] {
    int bad = 0;
    int cases = 0;
    for (std::int64_t s = 1; s <= 2; ++s) {
      for (std::int64_t a = 1; a <= 5; ++a) {
        for (std::int64_t b = 1; a + b <= 6; ++b) {
          const pcat::BigCount expected = pcat::aux_bivariate(s, a, b);
          for (pcat::OpSymbol g : pcat::OpSymbol::all()) {
            ++cases;
            if (pcat::BigCount(pcat::count_reduced_rooted(s, a, b, g)) != expected) ++bad;
          }
        }
      }
    }
    return Outcome{bad == 0, std::to_string(cases) + " rooted counts, " + std::to_string(bad) +
                                 " differ from m(a,b)"};
  });

  criterion("triality predicate agreement (s <= 2, n <= 5)", [] {
    std::uint64_t trees = 0;
    std::uint64_t bad = 0;
    for (std::int64_t s = 1; s <= 2; ++s) {
      for (std::int64_t n = 1; n <= 5; ++n) {
        pcat::enumerate_basic_trees(s, n, [&](pcat::TokenSpan t) {
          ++trees;
          if (pcat::is_reduced(t) != pcat::is_reduced_triality(t)) ++bad;
        });
      }
    }
    return Outcome{bad == 0, std::to_string(trees) + " trees, " + std::to_string(bad) + " disagreements"};
  });

  criterion("nodal properties (s <= 2, n <= 5)", [] {
    std::uint64_t words = 0;
    std::uint64_t bad = 0;
    for (std::int64_t s = 1; s <= 2; ++s) {
      for (std::int64_t n = 1; n <= 5; ++n) {
        for (const pcat::Word& w : pcat::basic_trees(s, n)) {
          ++words;
          const auto cls = pcat::nodal_class(w);
          bool ok = cls.size() == (std::size_t{1} << (n - 1));
          const bool reduced = pcat::is_reduced(w);
          for (const auto& f : cls) {
            ok = ok && pcat::normalize_full(f) == w && pcat::is_reduced_triality(f) == reduced;
          }
          if (!ok) ++bad;
        }
      }
    }
    return Outcome{bad == 0, std::to_string(words) + " words, " + std::to_string(bad) + " violations"};
  });

  criterion("log-space fidelity (n <= 300, s in {1,2,12}, rel < 1e-8)", [] {
    double worst = 0.0;
    for (std::int64_t s : {1, 2, 12}) {
      const auto& t = exact(s, 300);
      const pcat::LogTable logs = pcat::log_peri_table(s, 300);
      for (std::int64_t n = 1; n <= 300; ++n) {
        const double truth = t[n].log();
        if (truth == 0.0) {
          if (logs.log_p(n) != 0.0) worst = INFINITY;
          continue;
        }
        worst = std::max(worst, std::abs(logs.log_p(n) - truth) / std::abs(truth));
      }
    }
    return Outcome{worst < 1e-8, "max relative error " + num(worst, 3)};
  });

  const pcat::LogTable s12 = pcat::log_peri_table(12, 2800);

  criterion("regression (s = 12, n in [100, 2800])", [&] {
    std::vector<pcat::Point> pts;
    for (std::int64_t n = 100; n <= 2800; ++n) {
      pts.push_back({double(n), s12.log_p(n) - s12.log_catalan(n)});
    }
    const auto fit = pcat::linear_regression(pts);
    const double ln36 = std::log(36.0);
    const double ln3 = std::log(3.0);
    const bool ok = std::abs(fit.slope - 3.576) <= 0.01 && std::abs(fit.slope - ln36) <= 0.01 &&
                    std::abs(fit.intercept + 1.102) <= 0.05 && std::abs(fit.intercept + ln3) <= 0.05;
    return Outcome{ok, "slope " + num(fit.slope) + " (3.576, ln 36 = " + num(ln36) + "), intercept " +
                           num(fit.intercept) + " (-1.102, -ln 3 = " + num(-ln3) + ")"};
  });

  std::vector<pcat::LogTable> by_s;
  std::vector<double> defects;
  const auto t_tables = std::chrono::steady_clock::now();
  for (std::int64_t s = 1; s <= 100; ++s) {
    by_s.push_back(pcat::log_peri_table(s, 2000));
    defects.push_back(pcat::cancelation_defect(2000, by_s.back()));
  }
  std::printf("(log-space tables for s = 1..100 at n = 2000 built in %.2fs)\n",
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t_tables).count());

  criterion("defect spot checks at n = 2000 (within 2%)", [&] {
    const std::vector<std::pair<std::int64_t, double>> reference = {
        {1, 0.0370}, {2, 0.0137}, {3, 0.0080}, {10, 0.00176}, {25, 5.87e-4}, {50, 2.61e-4}, {100, 1.18e-4}};
    bool ok = true;
    std::string detail;
    for (const auto& [s, ref] : reference) {
      const double d = defects[s - 1];
      const bool hit = within_rel(d, ref, 0.02);
      ok = ok && hit;
      detail += "s=" + std::to_string(s) + ":" + num(d, 4) + (hit ? "" : "(off)") + " ";
    }
    detail.pop_back();
    return Outcome{ok, detail};
  });

  criterion("rational fit of defect over s = 1..100", [&] {
    std::vector<pcat::Point> pts;
    for (std::int64_t s = 1; s <= 100; ++s) pts.push_back({double(s), defects[s - 1]});
    const auto fit = pcat::rational_fit(pts);
    const double golden = std::log(std::numbers::phi);
    const bool ok = within_rel(fit.a, 0.01929, 0.05) && within_rel(fit.b, 0.4811, 0.02);
    return Outcome{ok, "a=" + num(fit.a) + " (0.01929), b=" + num(fit.b) + " (0.4811, ln phi = " +
                           num(golden) + ")"};
  });

  criterion("property suite", [&] {
    std::vector<std::string> broken;
    double max_quotient = 0.0;
    const auto scan_quotients = [&](const pcat::LogTable& t) {
      for (std::int64_t n = 2; n <= t.max_n(); ++n) {
        max_quotient = std::max(max_quotient, pcat::quotient(n, t));
      }
    };
    for (const auto& t : by_s) scan_quotients(t);
    scan_quotients(s12);

    for (std::int64_t s : {1, 3, 6, 12}) {
      const pcat::LogTable t = s == 12 ? s12 : pcat::log_peri_table(s, 2800);
      scan_quotients(t);
      std::vector<double> q;
      for (std::int64_t n = 3; n <= 2800; ++n) q.push_back(pcat::quotient(n, t));
      const auto rep = pcat::check_nondecreasing(q);
      if (!rep.holds) broken.push_back("quotient drops for s=" + std::to_string(s) + " at n=" +
                                       std::to_string(3 + *rep.first_violation));
    }
    if (max_quotient > 1.0 + 1e-12) broken.push_back("quotient exceeds 1: " + num(max_quotient, 17));

    const auto dec = pcat::check_strictly_decreasing(defects);
    if (!dec.holds) broken.push_back("defect not decreasing at s=" + std::to_string(1 + *dec.first_violation));

    for (std::int64_t s : {1, 2, 12}) {
      const auto& t = exact(s, 300);
      for (std::int64_t n = 1; n <= 300; ++n) {
        const auto bound = pcat::word_count_bound(s, n);
        if (!(t[n] <= bound) || ((t[n] == bound) != (n < 3))) {
          broken.push_back("bound relation fails at s=" + std::to_string(s) + " n=" + std::to_string(n));
        }
      }
    }

    std::string detail = "max quotient " + num(max_quotient, 17) +
                         "; quotient nondecreasing from n=3 for s in {1,3,6,12} up to 2800; defect "
                         "decreasing over s=1..100; bound equality exactly for n<3";
    if (!broken.empty()) {
      detail.clear();
      for (const auto& b : broken) detail += b + "; ";
    }
    return Outcome{broken.empty(), detail};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
