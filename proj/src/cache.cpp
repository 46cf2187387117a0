#include "pcat/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "pcat/errors.hpp"

namespace pcat {

namespace fs = std::filesystem;

namespace {

std::string header_for(std::int64_t s) { return "pcat-cache v1 s=" + std::to_string(s); }

}  // namespace

fs::path cache_file(const fs::path& dir, std::int64_t s) {
  return dir / ("pcat-s" + std::to_string(s) + ".cache");
}

std::optional<PeriTable> load_cache(const fs::path& dir, std::int64_t s) {
  const fs::path path = cache_file(dir, s);
  std::error_code ec;
  if (!fs::exists(path, ec)) {
    if (ec) throw CacheIOError("cannot stat " + path.string() + ": " + ec.message());
    return std::nullopt;
  }
  std::ifstream in(path);
  if (!in) throw CacheIOError("cannot open " + path.string());

  const auto corrupt = [&](const std::string& why) {
    return CacheIntegrityError("corrupt cache " + path.string() + ": " + why);
  };

  std::string line;
  if (!std::getline(in, line)) {
    if (in.bad()) throw CacheIOError("cannot read " + path.string());
    throw corrupt("missing header");
  }
  if (line != header_for(s)) throw corrupt("unexpected header '" + line + "'");

  std::vector<BigCount> values;
  std::int64_t expected = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::int64_t n = 0;
    std::string digits;
    std::string extra;
    if (!(fields >> n >> digits) || (fields >> extra)) throw corrupt("bad line '" + line + "'");
    if (n != expected) {
      throw corrupt("expected n=" + std::to_string(expected) + ", found " + std::to_string(n));
    }
    try {
      values.push_back(BigCount::from_decimal(digits));
    } catch (const DomainError& e) {
      throw corrupt(e.what());
    }
    ++expected;
  }
  if (in.bad()) throw CacheIOError("cannot read " + path.string());

  PeriTable table(s, std::move(values));
  if (auto bad = table.first_invalid_entry()) {
    throw corrupt("entry n=" + std::to_string(*bad) + " fails validation");
  }
  return table;
}

void save_cache(const fs::path& dir, const PeriTable& table) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CacheIOError("cannot create " + dir.string() + ": " + ec.message());

  const fs::path path = cache_file(dir, table.generators());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheIOError("cannot write " + tmp.string());
    out << header_for(table.generators()) << '\n';
    for (std::int64_t n = 1; n <= table.max_n(); ++n) out << n << ' ' << table[n] << '\n';
    out.flush();
    if (!out) throw CacheIOError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw CacheIOError("cannot rename " + tmp.string() + ": " + ec.message());
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("PCAT_CACHE_DIR"); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  return std::nullopt;
}

}  // namespace pcat
