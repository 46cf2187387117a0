#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "pcat/cache.hpp"
#include "pcat/enumeration.hpp"
#include "pcat/errors.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("pcat-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  fs::path path;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::trunc);
  out << text;
}

}  // namespace

TEST_CASE("cache file format") {
  TempDir dir;
  pcat::build_table(2, 4, dir.path);
  CHECK(slurp(pcat::cache_file(dir.path, 2)) ==
        "pcat-cache v1 s=2\n1 2\n2 12\n3 120\n4 1752\n");
}

TEST_CASE("cache is reused and extended") {
  TempDir dir;
  auto first = pcat::build_table(3, 6, dir.path);
  auto loaded = pcat::load_cache(dir.path, 3);
  REQUIRE(loaded.has_value());
  CHECK(loaded->max_n() == 6);

  auto longer = pcat::build_table(3, 10, dir.path);
  CHECK(longer[10] == pcat::BigCount::from_decimal("4172008467726"));
  CHECK(pcat::load_cache(dir.path, 3)->max_n() == 10);

  // Asking for fewer entries than cached returns exactly what was asked for.
  auto shorter = pcat::build_table(3, 4, dir.path);
  CHECK(shorter.max_n() == 4);
  CHECK(shorter[4] == pcat::BigCount(9531));

  // Same values with and without the cache.
  auto fresh = pcat::build_table(3, 10);
  for (std::int64_t n = 1; n <= 10; ++n) CHECK(fresh[n] == longer[n]);
}

TEST_CASE("missing cache file is not an error") {
  TempDir dir;
  CHECK_FALSE(pcat::load_cache(dir.path, 5).has_value());
}

TEST_CASE("corrupt cache entries are rejected") {
  TempDir dir;
  const auto file = pcat::cache_file(dir.path, 1);
  SUBCASE("bad header") {
    write(file, "pcat-cache v1 s=2\n1 1\n");
    CHECK_THROWS_AS(pcat::load_cache(dir.path, 1), pcat::CacheIntegrityError);
  }
  SUBCASE("gap") {
    write(file, "pcat-cache v1 s=1\n1 1\n3 12\n");
    CHECK_THROWS_AS(pcat::load_cache(dir.path, 1), pcat::CacheIntegrityError);
  }
  SUBCASE("wrong P_2") {
    write(file, "pcat-cache v1 s=1\n1 1\n2 4\n");
    CHECK_THROWS_AS(pcat::load_cache(dir.path, 1), pcat::CacheIntegrityError);
  }
  SUBCASE("value above the word-count bound") {
    write(file, "pcat-cache v1 s=1\n1 1\n2 3\n3 19\n");
    CHECK_THROWS_AS(pcat::build_table(1, 5, dir.path), pcat::CacheIntegrityError);
  }
  SUBCASE("non-numeric value") {
    write(file, "pcat-cache v1 s=1\n1 1\n2 3x\n");
    CHECK_THROWS_AS(pcat::load_cache(dir.path, 1), pcat::CacheIntegrityError);
  }
  SUBCASE("empty file") {
    write(file, "");
    CHECK_THROWS_AS(pcat::load_cache(dir.path, 1), pcat::CacheIntegrityError);
  }
}

TEST_CASE("cache I/O failures are reported as I/O errors") {
  TempDir dir;
  // A regular file where the cache directory should be.
  const fs::path blocker = dir.path / "not-a-dir";
  write(blocker, "x");
  CHECK_THROWS_AS(pcat::build_table(2, 3, blocker), pcat::CacheIOError);
}

TEST_CASE("resolve_cache_dir prefers the flag over the environment") {
  ::setenv("PCAT_CACHE_DIR", "/tmp/from-env", 1);
  CHECK(pcat::resolve_cache_dir(std::string("/tmp/from-flag")) == fs::path("/tmp/from-flag"));
  CHECK(pcat::resolve_cache_dir(std::nullopt) == fs::path("/tmp/from-env"));
  ::unsetenv("PCAT_CACHE_DIR");
  CHECK_FALSE(pcat::resolve_cache_dir(std::nullopt).has_value());
}
