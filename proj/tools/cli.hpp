#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pcat::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kDomainError = 2,
  kCacheError = 3,
  kResourceGuard = 4,
};

enum class Mode { exact, logspace };
enum class Format { text, csv, json };

struct RunConfig {
  std::string command;
  std::int64_t s = 1;
  std::vector<std::int64_t> s_list;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> n_min;
  std::optional<std::int64_t> n_max;
  std::int64_t s_min = 1;
  std::int64_t s_max = 100;
  Mode mode = Mode::exact;
  std::optional<Format> format;
  std::optional<std::string> out;
  std::optional<std::string> cache_dir;
  std::optional<std::uint64_t> budget;
  std::optional<std::int64_t> max_leaves;
  std::int64_t proxy_n = 2000;
  std::int64_t exact_ceiling = 3000;
  bool allow_large = false;
  std::optional<std::string> rooted;
  std::optional<std::string> word;
  std::optional<std::int64_t> word_generators;
  bool dump_class = false;
  unsigned threads = 0;
};

// Runs one command. args excludes the program name. Everything destined for
// standard output goes to `out` (or to --out), diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcat::cli
