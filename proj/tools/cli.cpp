#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "pcat/asymptotics.hpp"
#include "pcat/cache.hpp"
#include "pcat/enumeration.hpp"
#include "pcat/errors.hpp"
#include "pcat/freewords.hpp"

namespace pcat::cli {

namespace {

using json = nlohmann::json;

// Reference constants that the regress and fit commands compare against.
constexpr double kReferenceSlope = 3.576;
constexpr double kReferenceIntercept = -1.102;
constexpr double kReferenceFitA = 0.01929;
constexpr double kReferenceFitB = 0.4811;

std::string fmt(double v, int significant) {
  std::ostringstream os;
  os << std::setprecision(significant) << v;
  return os.str();
}

std::string csv_double(double v) { return fmt(v, 17); }
std::string text_double(double v) { return fmt(v, 6); }

Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

EnumerationLimits limits_from(const RunConfig& cfg) {
  EnumerationLimits limits;
  if (cfg.budget) limits.budget = *cfg.budget;
  if (cfg.max_leaves) limits.max_leaves = *cfg.max_leaves;
  return limits;
}

void require_exact_ceiling(const RunConfig& cfg, std::int64_t n) {
  if (n > cfg.exact_ceiling && !cfg.allow_large) {
    throw DomainError("exact mode above n=" + std::to_string(cfg.exact_ceiling) +
                      " needs --allow-large (or use --mode logspace)");
  }
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("expected a,b but got '" + text + "'");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string sa = text.substr(0, comma);
    const std::string sb = text.substr(comma + 1);
    const std::int64_t a = std::stoll(sa, &used_a);
    const std::int64_t b = std::stoll(sb, &used_b);
    if (used_a != sa.size() || used_b != sb.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw DomainError("expected a,b but got '" + text + "'");
  }
}

// ---------------------------------------------------------------------------

std::string cmd_compute(const RunConfig& cfg, std::ostream& err) {
  const std::int64_t n = cfg.n.value_or(1);
  const std::int64_t s = cfg.s;
  if (s < 0 || n < 0) throw DomainError("s and n must be nonnegative");
  const Format format = format_or(cfg, Format::text);
  std::ostringstream os;

  if (cfg.mode == Mode::logspace) {
    if (s == 0 || n == 0) throw DomainError("ln P is undefined for degenerate input (P = 0)");
    const LogTable table = log_peri_table(s, std::max<std::int64_t>(n, 2));
    const double value = table.log_p(n);
    switch (format) {
      case Format::text: os << text_double(value) << '\n'; break;
      case Format::csv: os << "s,n,logP\n" << s << ',' << n << ',' << csv_double(value) << '\n'; break;
      case Format::json: os << json{{"s", s}, {"n", n}, {"logP", value}}.dump() << '\n'; break;
    }
    return os.str();
  }

  BigCount value(0);
  if (s == 0 || n == 0) {
    err << "note: P is 0 when s = 0 or n = 0 (no constants in the language of quasigroups)\n";
  } else {
    require_exact_ceiling(cfg, n);
    value = build_table(s, n, resolve_cache_dir(cfg.cache_dir))[n];
  }
  switch (format) {
    case Format::text: os << value << '\n'; break;
    case Format::csv: os << "n,s,P\n" << n << ',' << s << ',' << value << '\n'; break;
    case Format::json: os << json{{"s", s}, {"n", n}, {"P", value.to_string()}}.dump() << '\n'; break;
  }
  return os.str();
}

std::string cmd_table(const RunConfig& cfg, std::ostream& err) {
  const std::vector<std::int64_t> s_list = cfg.s_list.empty() ? std::vector{cfg.s} : cfg.s_list;
  const std::int64_t n_max = cfg.n_max.value_or(cfg.n.value_or(10));
  if (n_max < 0) throw DomainError("n-max must be nonnegative");
  for (auto s : s_list) {
    if (s < 0) throw DomainError("s must be nonnegative");
  }
  const Format format = format_or(cfg, Format::csv);

  struct Row {
    std::int64_t n;
    std::int64_t s;
    std::string value;
  };
  std::vector<Row> rows;
  const auto cache = resolve_cache_dir(cfg.cache_dir);
  for (auto s : s_list) {
    if (s == 0) {
      err << "note: s = 0 gives P = 0 for every n (no constants in the language of quasigroups)\n";
      for (std::int64_t n = 1; n <= n_max; ++n) rows.push_back({n, s, "0"});
      continue;
    }
    if (n_max == 0) continue;
    require_exact_ceiling(cfg, n_max);
    const PeriTable table = build_table(s, n_max, cache);
    for (std::int64_t n = 1; n <= n_max; ++n) rows.push_back({n, s, table[n].to_string()});
  }

  std::ostringstream os;
  switch (format) {
    case Format::csv:
      os << "n,s,P\n";
      for (const auto& r : rows) os << r.n << ',' << r.s << ',' << r.value << '\n';
      break;
    case Format::text:
      for (const auto& r : rows) os << r.n << ' ' << r.s << ' ' << r.value << '\n';
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back({{"n", r.n}, {"s", r.s}, {"P", r.value}});
      os << arr.dump() << '\n';
      break;
    }
  }
  return os.str();
}

struct OracleOutcome {
  std::string text;
  bool all_match;
};

OracleOutcome cmd_oracle(const RunConfig& cfg) {
  const std::int64_t s = cfg.s;
  if (s < 1) throw DomainError("oracle needs s >= 1");
  const EnumerationLimits limits = limits_from(cfg);
  const Format format = format_or(cfg, Format::text);
  bool all_match = true;
  std::ostringstream os;

  if (cfg.rooted) {
    const auto [a, b] = parse_pair(*cfg.rooted);
    if (a < 1 || b < 1) throw DomainError("--rooted needs a, b >= 1");
    if (cfg.n && *cfg.n != a + b) {
      throw DomainError("--n must equal a+b for --rooted (got n=" + std::to_string(*cfg.n) + ")");
    }
    const BigCount expected = aux_bivariate(s, a, b);
    json arr = json::array();
    if (format == Format::csv) os << "s,a,b,root,oracle,formula,match\n";
    for (OpSymbol g : OpSymbol::all()) {
      const std::uint64_t count = count_reduced_rooted(s, a, b, g, limits);
      const bool match = BigCount(count) == expected;
      all_match = all_match && match;
      switch (format) {
        case Format::text:
          os << "s=" << s << " a=" << a << " b=" << b << " root=" << g.ascii() << " oracle=" << count
             << " formula=" << expected << (match ? " match" : " MISMATCH") << '\n';
          break;
        case Format::csv:
          os << s << ',' << a << ',' << b << ',' << g.group_name() << ',' << count << ',' << expected
             << ',' << (match ? "true" : "false") << '\n';
          break;
        case Format::json:
          arr.push_back({{"s", s}, {"a", a}, {"b", b}, {"root", g.ascii()}, {"oracle", count},
                         {"formula", expected.to_string()}, {"match", match}});
          break;
      }
    }
    if (format == Format::json) os << arr.dump() << '\n';
    return {os.str(), all_match};
  }

  std::int64_t n_lo = 1;
  std::int64_t n_hi = 1;
  if (cfg.n) {
    n_lo = n_hi = *cfg.n;
  } else if (cfg.n_max) {
    n_hi = *cfg.n_max;
  } else {
    throw DomainError("oracle needs --n or --n-max");
  }
  if (n_lo < 1) throw DomainError("oracle needs n >= 1");
  // Refuse up front rather than after the cheap rows.
  for (std::int64_t n = n_lo; n <= n_hi; ++n) check_enumeration_budget(n, word_count_bound(s, n), limits);

  PeriTable table(s);
  table.extend_to(n_hi);
  json arr = json::array();
  if (format == Format::csv) os << "s,n,oracle,formula,match\n";
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const std::uint64_t count = count_reduced(s, n, limits, cfg.threads);
    const bool match = BigCount(count) == table[n];
    all_match = all_match && match;
    switch (format) {
      case Format::text:
        os << "s=" << s << " n=" << n << " oracle=" << count << " formula=" << table[n]
           << (match ? " match" : " MISMATCH") << '\n';
        break;
      case Format::csv:
        os << s << ',' << n << ',' << count << ',' << table[n] << ',' << (match ? "true" : "false")
           << '\n';
        break;
      case Format::json:
        arr.push_back({{"s", s}, {"n", n}, {"oracle", count}, {"formula", table[n].to_string()},
                       {"match", match}});
        break;
    }
  }
  if (format == Format::json) os << arr.dump() << '\n';
  return {os.str(), all_match};
}

std::string cmd_quotient(const RunConfig& cfg) {
  const std::int64_t s = cfg.s;
  const std::int64_t n_max = cfg.n_max.value_or(cfg.n.value_or(2));
  const std::int64_t n_min = std::max<std::int64_t>(cfg.n_min.value_or(2), 2);
  if (n_max < 2) throw DomainError("quotient needs n-max >= 2");
  const LogTable table = log_peri_table(s, n_max);
  const Format format = format_or(cfg, Format::csv);

  std::ostringstream os;
  json arr = json::array();
  if (format == Format::csv) os << "n,logP,logBound,quotient\n";
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    const double lp = table.log_p(n);
    const double lb = table.log_bound(n);
    const double q = quotient(n, table);
    switch (format) {
      case Format::csv:
        os << n << ',' << csv_double(lp) << ',' << csv_double(lb) << ',' << csv_double(q) << '\n';
        break;
      case Format::text:
        os << n << ' ' << text_double(lp) << ' ' << text_double(lb) << ' ' << text_double(q) << '\n';
        break;
      case Format::json:
        arr.push_back({{"n", n}, {"logP", lp}, {"logBound", lb}, {"quotient", q}});
        break;
    }
  }
  if (format == Format::json) os << arr.dump() << '\n';
  return os.str();
}

std::string cmd_regress(const RunConfig& cfg) {
  const std::int64_t s = cfg.s;
  const std::int64_t n_min = cfg.n_min.value_or(100);
  const std::int64_t n_max = cfg.n_max.value_or(2800);
  if (n_min < 1 || n_max <= n_min) throw DomainError("regress needs 1 <= n-min < n-max");
  const LogTable table = log_peri_table(s, n_max);
  std::vector<Point> points;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    points.push_back({static_cast<double>(n), table.log_p(n) - table.log_catalan(n)});
  }
  const RegressionResult fit = linear_regression(points);
  const double ln_3s = std::log(3.0 * static_cast<double>(s));
  const double ln3 = std::log(3.0);

  std::ostringstream os;
  switch (format_or(cfg, Format::text)) {
    case Format::text:
      os << "fit of ln P - ln C over n in [" << n_min << ", " << n_max << "], s=" << s << '\n'
         << "slope     " << text_double(fit.slope) << "  (reference " << kReferenceSlope
         << ", ln 3s = " << text_double(ln_3s) << ")\n"
         << "intercept " << text_double(fit.intercept) << "  (reference " << kReferenceIntercept
         << ", -ln 3 = " << text_double(-ln3) << ")\n"
         << "residual  " << text_double(fit.residual_std_error) << '\n';
      break;
    case Format::csv:
      os << "s,n_min,n_max,slope,intercept,residual\n"
         << s << ',' << n_min << ',' << n_max << ',' << csv_double(fit.slope) << ','
         << csv_double(fit.intercept) << ',' << csv_double(fit.residual_std_error) << '\n';
      break;
    case Format::json:
      os << json{{"s", s},
                 {"n_min", n_min},
                 {"n_max", n_max},
                 {"slope", fit.slope},
                 {"intercept", fit.intercept},
                 {"residual", fit.residual_std_error},
                 {"reference",
                  {{"reference_slope", kReferenceSlope},
                   {"reference_intercept", kReferenceIntercept},
                   {"log_3s", ln_3s},
                   {"minus_log_3", -ln3}}}}
                .dump()
         << '\n';
      break;
  }
  return os.str();
}

std::string cmd_fit(const RunConfig& cfg) {
  if (cfg.s_min < 1 || cfg.s_max <= cfg.s_min) throw DomainError("fit needs 1 <= s-min < s-max");
  if (cfg.proxy_n < 2) throw DomainError("proxy n must be >= 2");
  std::vector<Point> points;
  for (std::int64_t s = cfg.s_min; s <= cfg.s_max; ++s) {
    const LogTable table = log_peri_table(s, cfg.proxy_n);
    points.push_back({static_cast<double>(s), cancelation_defect(cfg.proxy_n, table)});
  }
  const RationalFitResult fit = rational_fit(points);
  const double log_golden = std::log(std::numbers::phi);

  std::ostringstream os;
  switch (format_or(cfg, Format::text)) {
    case Format::text:
      os << "defect(s) at n=" << cfg.proxy_n << " fitted to a/(s - b) over s in [" << cfg.s_min
         << ", " << cfg.s_max << "]\n"
         << "a         " << text_double(fit.a) << "  (reference " << kReferenceFitA << ")\n"
         << "b         " << text_double(fit.b) << "  (reference " << kReferenceFitB
         << ", ln golden ratio = " << text_double(log_golden) << ")\n"
         << "residual  " << text_double(fit.residual) << '\n'
         << "linearized 1/f fit: a=" << text_double(fit.linearized_a)
         << " b=" << text_double(fit.linearized_b) << '\n';
      break;
    case Format::csv:
      os << "s,defect\n";
      for (const auto& p : points) os << static_cast<std::int64_t>(p.x) << ',' << csv_double(p.y) << '\n';
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& p : points) arr.push_back({{"s", static_cast<std::int64_t>(p.x)}, {"defect", p.y}});
      os << json{{"proxy_n", cfg.proxy_n},
                 {"points", arr},
                 {"a", fit.a},
                 {"b", fit.b},
                 {"residual", fit.residual},
                 {"linearized_a", fit.linearized_a},
                 {"linearized_b", fit.linearized_b},
                 {"reference",
                  {{"reference_a", kReferenceFitA},
                   {"reference_b", kReferenceFitB},
                   {"log_golden_ratio", log_golden}}}}
                .dump()
         << '\n';
      break;
    }
  }
  return os.str();
}

std::string cmd_word(const RunConfig& cfg) {
  if (!cfg.word) throw DomainError("word needs --word <text>");
  std::optional<std::uint32_t> max_gen;
  if (cfg.word_generators) {
    if (*cfg.word_generators < 1) throw DomainError("s must be positive");
    max_gen = static_cast<std::uint32_t>(*cfg.word_generators);
  }
  const FullWord full = parse_full_word(*cfg.word, max_gen);
  const Word basic = normalize_full(full);
  const bool reduced = is_reduced(basic);
  const bool reduced_tri = is_reduced_triality(full);
  const Format format = format_or(cfg, Format::text);

  std::ostringstream os;
  if (cfg.dump_class) {
    const auto cls = nodal_class(basic);
    if (format == Format::json) {
      json arr = json::array();
      for (const auto& f : cls) arr.push_back(format_word(f));
      os << json{{"word", format_word(basic)}, {"class", arr}}.dump() << '\n';
    } else {
      for (const auto& f : cls) os << format_word(f) << '\n';
    }
    return os.str();
  }
  switch (format) {
    case Format::text:
      os << "word     " << format_word(full) << '\n'
         << "basic    " << format_word(basic) << '\n'
         << "postfix  " << format_postfix(full.tokens()) << '\n'
         << "length   " << full.leaf_count() << '\n'
         << "reduced  " << (reduced ? "true" : "false") << '\n'
         << "triality " << (reduced_tri ? "true" : "false") << '\n';
      break;
    case Format::csv:
      os << "word,basic,length,reduced,triality\n"
         << '"' << format_word(full) << "\",\"" << format_word(basic) << "\"," << full.leaf_count()
         << ',' << (reduced ? "true" : "false") << ',' << (reduced_tri ? "true" : "false") << '\n';
      break;
    case Format::json:
      os << json{{"word", format_word(full)},
                 {"basic", format_word(basic)},
                 {"length", full.leaf_count()},
                 {"reduced", reduced},
                 {"triality", reduced_tri}}
                .dump()
         << '\n';
      break;
  }
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (!cfg.out) {
    out << payload;
    out.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(*cfg.out);
  fs::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << payload;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw std::runtime_error("cannot rename " + tmp.string() + ": " + ec.message());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact counts and asymptotics of reduced free quasigroup words", "pcat"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
  const std::map<std::string, Mode> modes{{"exact", Mode::exact}, {"logspace", Mode::logspace}};

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
    sub->add_option("--cache-dir", cfg.cache_dir, "cache directory (default: $PCAT_CACHE_DIR)");
  };

  auto* compute = app.add_subcommand("compute", "print P^s_n (or ln P^s_n in logspace mode)");
  compute->add_option("--s", cfg.s, "generator count")->required();
  compute->add_option("--n", cfg.n, "word length")->required();
  compute->add_option("--mode", cfg.mode, "exact or logspace")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  compute->add_option("--exact-ceiling", cfg.exact_ceiling, "largest n allowed in exact mode");
  compute->add_flag("--allow-large", cfg.allow_large, "lift the exact-mode ceiling");
  add_common(compute);

  auto* table = app.add_subcommand("table", "P^s_n for every s in the list and n = 1..n-max");
  table->add_option("--s-list", cfg.s_list, "comma separated generator counts")
      ->delimiter(',')
      ->required();
  table->add_option("--n-max", cfg.n_max, "largest word length")->required();
  table->add_option("--exact-ceiling", cfg.exact_ceiling, "largest n allowed in exact mode");
  table->add_flag("--allow-large", cfg.allow_large, "lift the exact-mode ceiling");
  add_common(table);

  auto* oracle = app.add_subcommand("oracle", "check the formula against brute-force enumeration");
  oracle->add_option("--s", cfg.s, "generator count")->required();
  auto* oracle_n = oracle->add_option("--n", cfg.n, "single word length");
  oracle->add_option("--n-max", cfg.n_max, "check n = 1..n-max")->excludes(oracle_n);
  oracle->add_option("--rooted", cfg.rooted, "a,b: count rooted trees for every root operation");
  oracle->add_option("--budget", cfg.budget, "largest number of candidate trees");
  oracle->add_option("--max-leaves", cfg.max_leaves, "largest n for enumeration");
  oracle->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  add_common(oracle);

  auto* quot = app.add_subcommand("quotient", "series ln P / ln(3^(n-1) s^n C_n)");
  quot->add_option("--s", cfg.s, "generator count")->required();
  quot->add_option("--n-min", cfg.n_min, "first n (>= 2)");
  quot->add_option("--n-max", cfg.n_max, "last n")->required();
  add_common(quot);

  auto* regress = app.add_subcommand("regress", "linear fit of ln P - ln C against n");
  regress->add_option("--s", cfg.s, "generator count")->required();
  regress->add_option("--n-min", cfg.n_min, "first n");
  regress->add_option("--n-max", cfg.n_max, "last n");
  add_common(regress);

  auto* fit = app.add_subcommand("fit", "fit the cancelation defect to a/(s - b)");
  fit->add_option("--s-min", cfg.s_min, "smallest generator count");
  fit->add_option("--s-max", cfg.s_max, "largest generator count");
  fit->add_option("--proxy-n", cfg.proxy_n, "word length standing in for the limit");
  add_common(fit);

  auto* word = app.add_subcommand("word", "reducedness and nodal class of a single word");
  word->add_option("--word", cfg.word, "fully parenthesized word, e.g. ((a*b)/c)")->required();
  word->add_option("--s", cfg.word_generators, "generator count (rejects generators beyond a<s>)");
  word->add_flag("--dump-class", cfg.dump_class, "print the nodal class, one word per line");
  add_common(word);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  try {
    std::string payload;
    int code = kOk;
    if (compute->parsed()) {
      payload = cmd_compute(cfg, err);
    } else if (table->parsed()) {
      payload = cmd_table(cfg, err);
    } else if (oracle->parsed()) {
      auto outcome = cmd_oracle(cfg);
      payload = std::move(outcome.text);
      if (!outcome.all_match) code = kMismatch;
    } else if (quot->parsed()) {
      payload = cmd_quotient(cfg);
    } else if (regress->parsed()) {
      payload = cmd_regress(cfg);
    } else if (fit->parsed()) {
      payload = cmd_fit(cfg);
    } else if (word->parsed()) {
      payload = cmd_word(cfg);
    }
    emit(cfg, payload, out);
    if (code == kMismatch) err << "error: oracle and formula disagree\n";
    return code;
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const CacheIOError& e) {
    err << "cache error: " << e.what() << '\n';
    return kCacheError;
  } catch (const CacheIntegrityError& e) {
    err << "cache error: " << e.what() << '\n';
    return kCacheError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const StabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace pcat::cli
