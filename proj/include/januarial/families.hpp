#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "perm.hpp"
#include "topology.hpp"

namespace januarial {

enum class Parity { even, odd };

struct FamilyLayout {
  int k = 0;
  Parity parity = Parity::even;
  int point_count = 0;
  int ell = 0;

  static FamilyLayout for_k(int k) {
    if (k < 3)
      throw DomainError("family: k must be at least 3, got " + std::to_string(k));
    if (k % 2 == 0)
      return {k, Parity::even, 2 * k, k};
    return {k, Parity::odd, 4 * k, 2 * k};
  }
};

/// y = (1,...,k)(k+1,...,2k)... with `polygons` consecutive k-cycles on the
/// points 1..polygons*k.
inline Perm polygon_rotation(const PointSetPtr& domain, int k, int polygons) {
  std::vector<Cycle> cycles;
  for (int j = 0; j < polygons; ++j) {
    Cycle c;
    for (int i = 1; i <= k; ++i)
      c.emplace_back(j * k + i);
    cycles.push_back(std::move(c));
  }
  return Perm::from_cycles(domain, cycles);
}

/// Even k: x = (1, 3k/2+1)(k/2+1, k+1), y = (1..k)(k+1..2k) on 2k points,
/// a simple januarial with h = 1 of genus 0.
inline TriangleAction even_family(int k) {
  if (k < 4 || k % 2 != 0)
    throw DomainError("even_family: k must be even and at least 4, got " + std::to_string(k));
  auto domain = PointSet::range(1, 2 * k);
  std::vector<Cycle> xc = {{Point(1), Point(3 * k / 2 + 1)}, {Point(k / 2 + 1), Point(k + 1)}};
  auto action = TriangleAction::certify(Perm::from_cycles(domain, xc), polygon_rotation(domain, k, 2),
                                        static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(k));
  auto report = classify(action);
  if (report.type != JanuarialType::simple || report.h() != 1)
    throw IdentityViolation("even_family: k = " + std::to_string(k) + " is not simple with h = 1");
  return action;
}

/// Checks the odd-family contract: 4k points, y four k-cycles, x an
/// involution, xy of exact order 2k with two orbits of size 2k, and a simple
/// classification with h = 1. Returns the report.
inline JanuarialReport verify_odd_witness(int k, const TriangleAction& action) {
  auto fail = [&](const std::string& why) {
    throw IdentityViolation("odd family witness for k = " + std::to_string(k) + ": " + why);
  };
  if (action.size() != 4 * k)
    fail("wrong number of points");
  if (!(*action.domain() == *PointSet::range(1, 4 * k)))
    fail("points are not 1..4k");
  auto cycles = action.y().orbits();
  if (cycles.size() != 4 || std::any_of(cycles.begin(), cycles.end(), [&](const Cycle& c) { return static_cast<int>(c.size()) != k; }))
    fail("y is not a product of four k-cycles");
  if (action.k() != static_cast<std::uint64_t>(k) || action.l() != static_cast<std::uint64_t>(2 * k))
    fail("orders are not (2, k, 2k)");
  auto jan = check_januarial(action);
  if (!jan.is_januarial || jan.xy_orbit_sizes != std::vector<int>{2 * k, 2 * k})
    fail("xy does not have two orbits of size 2k");
  JanuarialReport report;
  try {
    report = classify(action);
  } catch (const DomainError& err) {
    fail(err.what());
  }
  if (report.type != JanuarialType::simple || report.h() != 1)
    fail("classification is " + report.signature() + ", not simple with h = 1");
  return report;
}

struct OddSearchResult {
  std::optional<TriangleAction> action;
  std::uint64_t candidates = 0;
};

/// Lexicographic search for the odd-k witness. y is fixed as four k-cycles;
/// x ranges over involutions built from transpositions that join points on
/// different polygons, with at most `max_transpositions` of them, ordered by
/// transposition count and then lexicographically by their sorted pairs. The
/// first candidate meeting the contract wins.
inline OddSearchResult odd_family_search(int k, int max_transpositions = 4) {
  if (k < 3 || k % 2 == 0)
    throw DomainError("odd_family: k must be odd and at least 3, got " + std::to_string(k));
  const int n = 4 * k;
  auto domain = PointSet::range(1, n);
  const Perm y = polygon_rotation(domain, k, 4);
  auto polygon = [k](int idx) { return idx / k; };

  OddSearchResult result;
  std::vector<int> x(static_cast<std::size_t>(n));
  std::iota(x.begin(), x.end(), 0);
  std::vector<std::pair<int, int>> pairs;

  // Cycle count of xy = "x then y" and the polygon components joined so far.
  auto xy_cycles = [&] {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int count = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<std::size_t>(i)])
        continue;
      ++count;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = y[x[static_cast<std::size_t>(j)]])
        seen[static_cast<std::size_t>(j)] = 1;
    }
    return count;
  };
  auto polygon_components = [&] {
    std::array<int, 4> parent{0, 1, 2, 3};
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v)
        v = parent[static_cast<std::size_t>(v)];
      return v;
    };
    for (auto [a, b] : pairs)
      parent[static_cast<std::size_t>(find(polygon(a)))] = find(polygon(b));
    int c = 0;
    for (int v = 0; v < 4; ++v)
      c += find(v) == v;
    return c;
  };

  auto accept = [&]() -> std::optional<TriangleAction> {
    ++result.candidates;
    std::vector<Cycle> xc;
    for (auto [a, b] : pairs)
      xc.push_back({Point(a + 1), Point(b + 1)});
    auto xp = Perm::from_cycles(domain, xc);
    if (compose(xp, y).order() != static_cast<std::uint64_t>(2 * k))
      return std::nullopt;
    auto action = TriangleAction::certify(std::move(xp), y);
    try {
      verify_odd_witness(k, action);
    } catch (const IdentityViolation&) {
      return std::nullopt;
    }
    return action;
  };

  // Depth-first in lexicographic order; prunes on the number of xy-cycles
  // (each transposition changes it by one, and two are needed at the end)
  // and on polygon connectivity.
  auto search = [&](auto&& self, int total, int min_a) -> std::optional<TriangleAction> {
    int remaining = total - static_cast<int>(pairs.size());
    int cycles = xy_cycles();
    if (cycles - remaining > 2 || cycles + remaining < 2 || (cycles + remaining) % 2 != 0)
      return std::nullopt;
    if (polygon_components() - remaining > 1)
      return std::nullopt;
    if (remaining == 0)
      return accept();
    for (int a = min_a; a < n; ++a) {
      if (x[static_cast<std::size_t>(a)] != a)
        continue;
      for (int b = a + 1; b < n; ++b) {
        if (x[static_cast<std::size_t>(b)] != b || polygon(a) == polygon(b))
          continue;
        x[static_cast<std::size_t>(a)] = b;
        x[static_cast<std::size_t>(b)] = a;
        pairs.emplace_back(a, b);
        auto found = self(self, total, a + 1);
        pairs.pop_back();
        x[static_cast<std::size_t>(a)] = a;
        x[static_cast<std::size_t>(b)] = b;
        if (found)
          return found;
      }
    }
    return std::nullopt;
  };

  for (int total = 0; total <= max_transpositions; ++total) {
    if (total == 0) {
      // The identity is the only candidate; it leaves one xy-orbit per polygon.
      ++result.candidates;
      continue;
    }
    if (auto found = search(search, total, 0)) {
      result.action = std::move(found);
      return result;
    }
  }
  return result;
}

/// Plain-text witness store: one line per k, "k=<k> x=<cycles> y=<cycles>".
class WitnessCache {
public:
  static constexpr const char* file_name = "odd_witnesses.txt";

  WitnessCache() = default;
  explicit WitnessCache(std::filesystem::path dir) : dir_(std::move(dir)) { load(); }

  /// Directory named by JANUARIAL_CACHE, if set.
  static std::optional<std::filesystem::path> from_env() {
    if (const char* env = std::getenv("JANUARIAL_CACHE"); env && *env)
      return std::filesystem::path(env);
    return std::nullopt;
  }

  static std::pair<int, std::pair<std::string, std::string>> parse_line(const std::string& line) {
    std::istringstream is(line);
    std::string kf, xf, yf;
    if (!(is >> kf >> xf >> yf) || kf.rfind("k=", 0) != 0 || xf.rfind("x=", 0) != 0 || yf.rfind("y=", 0) != 0)
      throw ParseError("witness cache: malformed line \"" + line + "\"");
    int k = 0;
    try {
      k = std::stoi(kf.substr(2));
    } catch (const std::exception&) {
      throw ParseError("witness cache: bad k in \"" + line + "\"");
    }
    return {k, {xf.substr(2), yf.substr(2)}};
  }

  static std::string format_line(int k, const TriangleAction& action) {
    return "k=" + std::to_string(k) + " x=" + action.x().to_string() + " y=" + action.y().to_string();
  }

  std::optional<TriangleAction> lookup(int k) const {
    auto it = entries_.find(k);
    if (it == entries_.end())
      return std::nullopt;
    auto domain = PointSet::range(1, 4 * k);
    return TriangleAction::certify(Perm::parse(domain, it->second.first), Perm::parse(domain, it->second.second));
  }

  /// Appends a witness to the cache file (creating the directory if needed).
  void store(int k, const TriangleAction& action) {
    if (entries_.count(k))
      return;
    entries_[k] = {action.x().to_string(), action.y().to_string()};
    if (dir_.empty())
      return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(dir_ / file_name, std::ios::app);
    if (out)
      out << format_line(k, action) << "\n";
  }

  const std::map<int, std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
  void load() {
    std::ifstream in(dir_ / file_name);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#')
        continue;
      auto [k, xy] = parse_line(line);
      entries_.emplace(k, std::move(xy));
    }
  }

  std::filesystem::path dir_;
  std::map<int, std::pair<std::string, std::string>> entries_;
};

struct OddFamilyOptions {
  int max_transpositions = 4;
  /// Witness directory; defaults to $JANUARIAL_CACHE when unset.
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;
};

/// A contract-certified simple januarial with h = 1 on 4k points for odd k.
/// Cached witnesses are re-verified before use; a fresh search result is
/// written back to the cache.
inline TriangleAction odd_family(int k, OddFamilyOptions options = {}) {
  if (k < 3 || k % 2 == 0)
    throw DomainError("odd_family: k must be odd and at least 3, got " + std::to_string(k));
  std::optional<WitnessCache> cache;
  if (options.use_cache) {
    auto dir = options.cache_dir ? options.cache_dir : WitnessCache::from_env();
    if (dir)
      cache.emplace(*dir);
  }
  if (cache)
    if (auto cached = cache->lookup(k)) {
      verify_odd_witness(k, *cached);
      return *cached;
    }
  auto found = odd_family_search(k, options.max_transpositions);
  if (!found.action)
    throw SearchExhausted("odd_family: search exhausted for k = " + std::to_string(k) + " with at most " +
                          std::to_string(options.max_transpositions) + " transpositions");
  if (cache)
    cache->store(k, *found.action);
  return *found.action;
}

inline TriangleAction family(int k, OddFamilyOptions options = {}) {
  if (k < 3)
    throw DomainError("family: k must be at least 3, got " + std::to_string(k));
  return k % 2 == 0 ? even_family(k) : odd_family(k, std::move(options));
}

struct ThreePropertyResult {
  bool all_simple = true;
  int januarials = 0;
  std::uint64_t attempts = 0;
  std::optional<std::string> counterexample;
};

/// Draws random actions with y a product of 3-cycles (plus up to two fixed
/// points) on at most 30 points and x a random involution, keeps the
/// connected januarials, and checks each classifies as simple. Stops after
/// `trials` januarials have been checked.
inline ThreePropertyResult three_property(int trials, std::uint64_t seed) {
  ThreePropertyResult out;
  std::mt19937_64 rng(seed);
  const std::uint64_t max_attempts = static_cast<std::uint64_t>(std::max(trials, 1)) * 2000;
  while (out.januarials < trials && out.attempts < max_attempts) {
    ++out.attempts;
    int triangles = std::uniform_int_distribution<int>(1, 9)(rng);
    int fixed = std::uniform_int_distribution<int>(0, 2)(rng);
    int n = 3 * triangles + fixed;
    auto domain = PointSet::range(1, n);
    Perm y = polygon_rotation(domain, 3, triangles);

    std::vector<int> points(static_cast<std::size_t>(n));
    std::iota(points.begin(), points.end(), 1);
    std::shuffle(points.begin(), points.end(), rng);
    int transpositions = std::uniform_int_distribution<int>(0, n / 2)(rng);
    std::vector<Cycle> xc;
    for (int t = 0; t < transpositions; ++t)
      xc.push_back({Point(points[static_cast<std::size_t>(2 * t)]), Point(points[static_cast<std::size_t>(2 * t + 1)])});
    auto action = TriangleAction::certify(Perm::from_cycles(domain, xc), y);
    if (!check_januarial(action).is_januarial || !build_diagram(action).connected())
      continue;
    ++out.januarials;
    JanuarialReport report;
    try {
      report = classify(action);
    } catch (const IdentityViolation& err) {
      out.all_simple = false;
      out.counterexample = "x=" + action.x().to_string() + " y=" + action.y().to_string() + ": " + err.what();
      return out;
    }
    if (report.type != JanuarialType::simple) {
      out.all_simple = false;
      out.counterexample = "x=" + action.x().to_string() + " y=" + action.y().to_string() + " classifies " +
                           report.signature();
      return out;
    }
  }
  return out;
}

} // namespace januarial
