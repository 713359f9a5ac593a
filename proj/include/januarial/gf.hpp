#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"
#include "perm.hpp"

namespace januarial {

inline bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Reduces v into [0, p).
constexpr std::int64_t mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

constexpr std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

constexpr std::int64_t pow_mod(std::int64_t base, std::uint64_t e, std::int64_t p) {
  std::int64_t result = 1 % p;
  base = mod(base, p);
  while (e) {
    if (e & 1)
      result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

/// Inverse via Fermat; p must be prime and a nonzero mod p.
inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0)
    throw DomainError("inverse of zero in F_" + std::to_string(p));
  return pow_mod(a, static_cast<std::uint64_t>(p - 2), p);
}

/// Square roots of v mod an odd prime p, ascending and without repeats.
inline std::vector<std::int64_t> sqrt_mod(std::int64_t v, std::int64_t p) {
  v = mod(v, p);
  if (v == 0)
    return {0};
  if (pow_mod(v, static_cast<std::uint64_t>((p - 1) / 2), p) != 1)
    return {};
  // Tonelli-Shanks.
  std::int64_t q = p - 1;
  std::int64_t s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (pow_mod(z, static_cast<std::uint64_t>((p - 1) / 2), p) != p - 1)
    ++z;
  std::int64_t m = s;
  std::int64_t c = pow_mod(z, static_cast<std::uint64_t>(q), p);
  std::int64_t t = pow_mod(v, static_cast<std::uint64_t>(q), p);
  std::int64_t r = pow_mod(v, static_cast<std::uint64_t>((q + 1) / 2), p);
  while (t != 1) {
    std::int64_t i = 0;
    for (std::int64_t tt = t; tt != 1; tt = mul_mod(tt, tt, p))
      ++i;
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j)
      b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return {std::min(r, p - r), std::max(r, p - r)};
}

/// An element of the prime field F_p, p an odd prime.
class FieldElem {
public:
  FieldElem(std::int64_t value, std::int64_t modulus) : value_(0), p_(modulus) {
    if (modulus < 3 || !is_prime(modulus))
      throw DomainError("modulus " + std::to_string(modulus) + " is not an odd prime");
    value_ = mod(value, modulus);
  }

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FieldElem inv() const { return {inv_mod(value_, p_), p_, trusted{}}; }

  /// All square roots in ascending order: zero, one or two of them.
  std::vector<FieldElem> sqrt_list() const {
    std::vector<FieldElem> out;
    for (std::int64_t r : sqrt_mod(value_, p_))
      out.push_back({r, p_, trusted{}});
    return out;
  }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return {mod(a.value_ + b.value_, a.p_), a.p_, trusted{}};
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return {mod(a.value_ - b.value_, a.p_), a.p_, trusted{}};
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return {mul_mod(a.value_, b.value_, a.p_), a.p_, trusted{}};
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }
  FieldElem operator-() const { return {mod(-value_, p_), p_, trusted{}}; }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

  friend std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.value_; }

private:
  struct trusted {};
  FieldElem(std::int64_t value, std::int64_t modulus, trusted) : value_(value), p_(modulus) {}

  static void check(const FieldElem& a, const FieldElem& b) {
    if (a.p_ != b.p_)
      throw DomainError("field modulus mismatch: " + std::to_string(a.p_) + " vs " + std::to_string(b.p_));
  }

  std::int64_t value_;
  std::int64_t p_;
};

/// Points of PL(F_p) reuse Point: finite values 0..p-1 or infinity.
using PLPoint = Point;

/// A linear fractional map z -> (m11 z + m12) / (m21 z + m22) over F_p.
/// Equality is projective: two maps are equal when their matrices differ by a
/// nonzero scalar.
class MobiusMap {
public:
  MobiusMap(std::int64_t m11, std::int64_t m12, std::int64_t m21, std::int64_t m22, std::int64_t p)
      : MobiusMap({mod(m11, p), mod(m12, p), mod(m21, p), mod(m22, p)}, p, validated(p)) {
    if (det_raw() == 0)
      throw DomainError("singular matrix does not define a Mobius map");
  }

  static MobiusMap identity(std::int64_t p) { return {1, 0, 0, 1, p}; }

  std::int64_t modulus() const { return p_; }
  const std::array<std::int64_t, 4>& entries() const { return m_; }

  FieldElem trace() const { return {m_[0] + m_[3], p_}; }
  FieldElem det() const { return {det_raw(), p_}; }

  /// tr^2 / det; unchanged by rescaling the matrix.
  FieldElem theta() const {
    std::int64_t tr = mod(m_[0] + m_[3], p_);
    return {mul_mod(mul_mod(tr, tr, p_), inv_mod(det_raw(), p_), p_), p_};
  }

  bool is_scalar() const { return m_[1] == 0 && m_[2] == 0 && m_[0] == m_[3]; }

  PLPoint apply(const PLPoint& z) const {
    if (z.is_infinity())
      return m_[2] == 0 ? PLPoint::infinity() : PLPoint(mul_mod(m_[0], inv_mod(m_[2], p_), p_));
    std::int64_t v = mod(z.value(), p_);
    std::int64_t num = mod(mul_mod(m_[0], v, p_) + m_[1], p_);
    std::int64_t den = mod(mul_mod(m_[2], v, p_) + m_[3], p_);
    if (den == 0)
      return PLPoint::infinity();
    return PLPoint(mul_mod(num, inv_mod(den, p_), p_));
  }

  /// The permutation of PL(F_p) induced by apply.
  Perm to_perm(const PointSetPtr& line) const {
    std::vector<int> images(static_cast<std::size_t>(line->size()));
    for (int i = 0; i < line->size(); ++i)
      images[static_cast<std::size_t>(i)] = line->index_of(apply((*line)[i]));
    return Perm::from_images(line, std::move(images));
  }

  Perm to_perm() const { return to_perm(PointSet::projective_line(p_)); }

  MobiusMap pow(std::uint64_t e) const {
    MobiusMap result = identity(p_);
    MobiusMap base = *this;
    while (e) {
      if (e & 1)
        result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// Order in PGL(2, p): least m >= 1 with a scalar m-th power. Element
  /// orders divide p - 1, p or p + 1, so only those divisors are tried.
  std::uint64_t pgl_order() const {
    std::vector<std::uint64_t> candidates;
    for (std::int64_t n : {p_ - 1, p_, p_ + 1})
      for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0)
          candidates.push_back(static_cast<std::uint64_t>(d));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (std::uint64_t d : candidates)
      if (pow(d).is_scalar())
        return d;
    throw IdentityViolation("pgl_order: no candidate order annihilates the matrix");
  }

  /// Matrix product. As maps on the right, z^(AB) = (z^A)^B corresponds to
  /// the matrix product B*A acting on column vectors; this operator returns
  /// the matrix of "apply A, then B".
  friend MobiusMap operator*(const MobiusMap& a, const MobiusMap& b) {
    if (a.p_ != b.p_)
      throw DomainError("Mobius maps over different fields");
    return matmul(b, a);
  }

  /// Plain 2x2 matrix product a*b (apply b first, then a, on column vectors).
  static MobiusMap matmul(const MobiusMap& a, const MobiusMap& b) {
    const auto& x = a.m_;
    const auto& y = b.m_;
    std::int64_t p = a.p_;
    return MobiusMap({mod(mul_mod(x[0], y[0], p) + mul_mod(x[1], y[2], p), p),
                      mod(mul_mod(x[0], y[1], p) + mul_mod(x[1], y[3], p), p),
                      mod(mul_mod(x[2], y[0], p) + mul_mod(x[3], y[2], p), p),
                      mod(mul_mod(x[2], y[1], p) + mul_mod(x[3], y[3], p), p)},
                     p, trusted{});
  }

  friend bool operator==(const MobiusMap& a, const MobiusMap& b) {
    if (a.p_ != b.p_)
      return false;
    // a = s*b for some nonzero s iff all 2x2 minors of the pair vanish.
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (mod(mul_mod(a.m_[i], b.m_[j], a.p_) - mul_mod(a.m_[j], b.m_[i], a.p_), a.p_) != 0)
          return false;
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const MobiusMap& m) {
    return os << "[[" << m.m_[0] << "," << m.m_[1] << "],[" << m.m_[2] << "," << m.m_[3] << "]] mod " << m.p_;
  }

private:
  struct trusted {};
  struct validated {
    explicit validated(std::int64_t p) {
      if (p < 3 || !is_prime(p))
        throw DomainError("modulus " + std::to_string(p) + " is not an odd prime");
    }
  };

  MobiusMap(std::array<std::int64_t, 4> m, std::int64_t p, trusted) : m_(m), p_(p) {}
  MobiusMap(std::array<std::int64_t, 4> m, std::int64_t p, validated) : m_(m), p_(p) {}

  std::int64_t det_raw() const { return mod(mul_mod(m_[0], m_[3], p_) - mul_mod(m_[1], m_[2], p_), p_); }

  std::array<std::int64_t, 4> m_;
  std::int64_t p_;
};

} // namespace januarial
