#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace januarial {

/// A point label: a non-negative integer or the distinguished point at
/// infinity. Infinity sorts after every finite label.
class Point {
public:
  constexpr Point() = default;
  constexpr Point(std::int64_t value) : value_(value) {}

  static constexpr Point infinity() {
    Point p;
    p.infinite_ = true;
    return p;
  }

  constexpr bool is_infinity() const { return infinite_; }
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.infinite_ != b.infinite_)
      return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.infinite_)
      return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.to_string(); }

private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    return p.is_infinity() ? std::size_t(-1) : std::hash<std::int64_t>{}(p.value());
  }
};

/// Finite ordered set of distinct labels. Iteration order is ascending with
/// infinity last.
class PointSet {
public:
  explicit PointSet(std::vector<Point> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (labels_.empty())
      throw DomainError("point set must be nonempty");
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
      throw DomainError("point set labels must be distinct");
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
      index_.emplace(labels_[i], static_cast<int>(i));
  }

  /// {first, ..., first + n - 1}
  static std::shared_ptr<const PointSet> range(std::int64_t first, std::int64_t n) {
    std::vector<Point> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
      labels.emplace_back(first + i);
    return std::make_shared<const PointSet>(std::move(labels));
  }

  /// {0, ..., p - 1, inf}: the points of the projective line over F_p.
  static std::shared_ptr<const PointSet> projective_line(std::int64_t p) {
    std::vector<Point> labels;
    labels.reserve(static_cast<std::size_t>(p + 1));
    for (std::int64_t i = 0; i < p; ++i)
      labels.emplace_back(i);
    labels.push_back(Point::infinity());
    return std::make_shared<const PointSet>(std::move(labels));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const Point& operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
  std::span<const Point> labels() const { return labels_; }

  bool contains(const Point& p) const { return index_.count(p) != 0; }

  int index_of(const Point& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
      throw DomainError("label " + p.to_string() + " is outside the point set");
    return it->second;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.labels_ == b.labels_; }

private:
  std::vector<Point> labels_;
  std::unordered_map<Point, int, PointHash> index_;
};

using PointSetPtr = std::shared_ptr<const PointSet>;
using Cycle = std::vector<Point>;

/// Parses cycle notation such as "(0,7)(1,5)(12,inf)". Whitespace is
/// ignored; "inf" (or the UTF-8 infinity sign) names the point at infinity.
/// An empty string or "()" denotes no cycles.
inline std::vector<Cycle> parse_cycles(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c))
      continue;
    if (text.substr(i, 3) == "\xE2\x88\x9E") { // U+221E
      s += "inf";
      i += 2;
      continue;
    }
    s += static_cast<char>(c);
  }

  std::vector<Cycle> cycles;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("cycle notation: " + what + " at offset " + std::to_string(pos) + " in \"" +
                     std::string(text) + "\"");
  };
  while (pos < s.size()) {
    if (s[pos] != '(')
      fail("expected '('");
    ++pos;
    Cycle cycle;
    if (pos < s.size() && s[pos] == ')') {
      ++pos;
      continue;
    }
    while (true) {
      if (s.compare(pos, 3, "inf") == 0) {
        cycle.push_back(Point::infinity());
        pos += 3;
      } else {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
          ++pos;
        if (start == pos)
          fail("expected a label");
        if (pos - start > 15)
          fail("label too large");
        cycle.emplace_back(std::stoll(s.substr(start, pos - start)));
      }
      if (pos >= s.size())
        fail("unterminated cycle");
      if (s[pos] == ',') {
        ++pos;
        continue;
      }
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

/// Every label mentioned by a list of cycles, deduplicated and sorted.
inline std::vector<Point> labels_of(std::span<const Cycle> cycles) {
  std::vector<Point> out;
  for (const auto& c : cycles)
    out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Smallest sensible domain for hand-entered cycles: every integer from the
/// least to the greatest finite label, plus inf when it is mentioned. Points
/// left out of the cycle strings become fixed points.
inline std::shared_ptr<const PointSet> infer_domain(std::span<const Cycle> a, std::span<const Cycle> b) {
  auto labels = labels_of(a);
  auto more = labels_of(b);
  labels.insert(labels.end(), more.begin(), more.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty())
    throw DomainError("no points mentioned");
  bool has_inf = labels.back().is_infinity();
  if (has_inf)
    labels.pop_back();
  if (!labels.empty() && labels.back().value() - labels.front().value() > 1'000'000)
    throw DomainError("label range too wide to infer a domain");
  std::vector<Point> out;
  if (!labels.empty())
    for (std::int64_t v = labels.front().value(); v <= labels.back().value(); ++v)
      out.emplace_back(v);
  if (has_inf)
    out.push_back(Point::infinity());
  return std::make_shared<const PointSet>(std::move(out));
}

/// A bijection of a PointSet. Stored as an image table over point indices.
///
/// Permutations act on the right: compose(p, q) first applies p, then q, so
/// z^(pq) = (z^p)^q.
class Perm {
public:
  static Perm identity(PointSetPtr domain) {
    std::vector<int> images(static_cast<std::size_t>(domain->size()));
    std::iota(images.begin(), images.end(), 0);
    return Perm(std::move(domain), std::move(images));
  }

  static Perm from_images(PointSetPtr domain, std::vector<int> images) {
    if (static_cast<int>(images.size()) != domain->size())
      throw DomainError("image table size does not match the domain");
    std::vector<char> hit(images.size(), 0);
    for (int v : images) {
      if (v < 0 || v >= domain->size() || hit[static_cast<std::size_t>(v)])
        throw DomainError("image table is not a bijection");
      hit[static_cast<std::size_t>(v)] = 1;
    }
    return Perm(std::move(domain), std::move(images));
  }

  static Perm from_cycles(PointSetPtr domain, std::span<const Cycle> cycles) {
    std::vector<int> images(static_cast<std::size_t>(domain->size()));
    std::iota(images.begin(), images.end(), 0);
    std::vector<char> seen(images.size(), 0);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int from = domain->index_of(cycle[i]);
        if (seen[static_cast<std::size_t>(from)])
          throw DomainError("label " + cycle[i].to_string() + " appears in more than one cycle position");
        seen[static_cast<std::size_t>(from)] = 1;
        images[static_cast<std::size_t>(from)] = domain->index_of(cycle[(i + 1) % cycle.size()]);
      }
    }
    return Perm(std::move(domain), std::move(images));
  }

  static Perm parse(PointSetPtr domain, std::string_view text) {
    auto cycles = parse_cycles(text);
    return from_cycles(std::move(domain), cycles);
  }

  const PointSetPtr& domain() const { return domain_; }
  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of the point with index i.
  int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
  Point operator()(const Point& p) const { return (*domain_)[(*this)[domain_->index_of(p)]]; }
  std::span<const int> images() const { return images_; }

  Perm inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Perm(domain_, std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i))
        return false;
    return true;
  }

  /// All orbits including singletons, as index lists. Each orbit starts at
  /// its least label; orbits are sorted by least label.
  std::vector<std::vector<int>> orbit_indices() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<std::size_t>(i)])
        continue;
      std::vector<int> orbit;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)[j]) {
        seen[static_cast<std::size_t>(j)] = 1;
        orbit.push_back(j);
      }
      out.push_back(std::move(orbit));
    }
    return out;
  }

  std::vector<Cycle> orbits() const {
    std::vector<Cycle> out;
    for (const auto& orbit : orbit_indices()) {
      Cycle c;
      c.reserve(orbit.size());
      for (int i : orbit)
        c.push_back((*domain_)[i]);
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Canonical cycle form without fixed points.
  std::vector<Cycle> to_cycles() const {
    auto all = orbits();
    std::erase_if(all, [](const Cycle& c) { return c.size() == 1; });
    return all;
  }

  std::vector<Point> fixed_points() const {
    std::vector<Point> out;
    for (int i = 0; i < degree(); ++i)
      if ((*this)[i] == i)
        out.push_back((*domain_)[i]);
    return out;
  }

  /// lcm of the cycle lengths.
  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (const auto& orbit : orbit_indices())
      result = std::lcm(result, static_cast<std::uint64_t>(orbit.size()));
    return result;
  }

  Perm pow(std::int64_t m) const {
    Perm base = m < 0 ? inverse() : *this;
    std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-m) : static_cast<std::uint64_t>(m);
    Perm result = identity(domain_);
    while (e) {
      if (e & 1)
        result = compose(result, base);
      base = compose(base, base);
      e >>= 1;
    }
    return result;
  }

  /// Canonical text, e.g. "(0,7)(1,5)". The identity prints as "()".
  std::string to_string(bool with_fixed_points = false) const {
    std::ostringstream os;
    auto cycles = with_fixed_points ? orbits() : to_cycles();
    if (cycles.empty())
      return "()";
    for (const auto& c : cycles) {
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
      os << ')';
    }
    return os.str();
  }

  /// Applies p first, then q.
  friend Perm compose(const Perm& p, const Perm& q) {
    if (p.domain_ != q.domain_ && !(*p.domain_ == *q.domain_))
      throw DomainError("compose: permutations act on different point sets");
    std::vector<int> images(p.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      images[i] = q.images_[static_cast<std::size_t>(p.images_[i])];
    return Perm(p.domain_, std::move(images));
  }

  friend Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.images_ == b.images_ && (a.domain_ == b.domain_ || *a.domain_ == *b.domain_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.to_string(); }

private:
  Perm(PointSetPtr domain, std::vector<int> images) : domain_(std::move(domain)), images_(std::move(images)) {}

  PointSetPtr domain_;
  std::vector<int> images_;
};

} // namespace januarial
