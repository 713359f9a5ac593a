#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "error.hpp"
#include "perm.hpp"

namespace januarial {

/// A permutation representation of the triangle group
/// <x, y | x^2 = y^k = (xy)^l = 1>, with k and l the exact orders of y and xy.
class TriangleAction {
public:
  /// Certifies x^2 = 1 and reads off the exact orders of y and xy. When k or l
  /// are given they must match exactly.
  static TriangleAction certify(Perm x, Perm y, std::optional<std::uint64_t> k = std::nullopt,
                                std::optional<std::uint64_t> l = std::nullopt) {
    if (!(*x.domain() == *y.domain()))
      throw DomainError("x and y act on different point sets");
    if (!compose(x, x).is_identity())
      throw DomainError("x is not an involution");
    Perm xy = compose(x, y);
    std::uint64_t ky = y.order();
    std::uint64_t lxy = xy.order();
    if (k && *k != ky)
      throw DomainError("y has order " + std::to_string(ky) + ", expected " + std::to_string(*k));
    if (l && *l != lxy)
      throw DomainError("xy has order " + std::to_string(lxy) + ", expected " + std::to_string(*l));
    return TriangleAction(std::move(x), std::move(y), std::move(xy), ky, lxy);
  }

  const Perm& x() const { return x_; }
  const Perm& y() const { return y_; }
  const Perm& xy() const { return xy_; }
  std::uint64_t k() const { return k_; }
  std::uint64_t l() const { return l_; }
  const PointSetPtr& domain() const { return x_.domain(); }
  int size() const { return x_.degree(); }

  int eta_x() const { return static_cast<int>(x_.fixed_points().size()); }
  int eta_y() const { return static_cast<int>(y_.fixed_points().size()); }

private:
  TriangleAction(Perm x, Perm y, Perm xy, std::uint64_t k, std::uint64_t l)
      : x_(std::move(x)), y_(std::move(y)), xy_(std::move(xy)), k_(k), l_(l) {}

  Perm x_;
  Perm y_;
  Perm xy_;
  std::uint64_t k_;
  std::uint64_t l_;
};

} // namespace januarial
