#include "hser/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace hser {

namespace fs = std::filesystem;

fs::path cache_dir() {
  if (const char* env = std::getenv("HSER_CACHE_DIR")) return fs::path(env);
  return fs::path(".hser-cache");
}

namespace {

bool cache_disabled() {
  const char* env = std::getenv("HSER_CACHE_DIR");
  return env && *env == '\0';
}

}  // namespace

namespace {

fs::path key_path(const std::string& key) {
  std::string name = key;
  for (char& c : name)
    if (c == ':') c = '_';
  return cache_dir() / (name + ".hser");
}

bool read_poly(std::istream& in, Poly& out) {
  long n;
  if (!(in >> n) || n < 0 || n > 1'000'000) return false;
  std::vector<Rat> c;
  c.reserve(n);
  for (long i = 0; i < n; ++i) {
    std::string tok;
    if (!(in >> tok)) return false;
    try {
      c.emplace_back(rat_parse(tok));
    } catch (const std::exception&) {
      return false;
    }
  }
  out = Poly(std::move(c));
  return true;
}

}  // namespace

std::optional<RatFunc> cache_load(const std::string& key) {
  if (cache_disabled()) return std::nullopt;
  std::ifstream in(key_path(key));
  if (!in) return std::nullopt;
  std::string version;
  if (!(in >> version) || version != "HSER1") return std::nullopt;
  Poly num, den;
  if (!read_poly(in, num) || !read_poly(in, den) || den.is_zero()) return std::nullopt;
  try {
    return RatFunc(std::move(num), std::move(den));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store(const std::string& key, const RatFunc& f) {
  if (cache_disabled()) return;
  fs::path target = key_path(key);
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  std::random_device rd;
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) return;  // caching is best-effort
    auto dump = [&](const Poly& p) {
      out << p.coeffs().size() << "\n";
      for (const Rat& c : p.coeffs()) out << rat_str(c) << "\n";
    };
    out << "HSER1\n";
    dump(f.num());
    dump(f.den());
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace hser
