#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "action.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "perm.hpp"

namespace januarial {

// ---------------------------------------------------------------------------
// The order polynomials f_l.
//
// An element of PGL(2, p) with theta = tr^2/det has order dividing l exactly
// when theta is a root of f_l. Coefficient j is (-1)^j * C(l - 1 - j, j) on
// consecutive descending powers of theta.
// ---------------------------------------------------------------------------

/// Integer polynomial in theta, leading coefficient first.
struct FracPoly {
  std::int64_t ell = 0;
  std::vector<std::int64_t> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }

  std::int64_t eval_mod(std::int64_t theta, std::int64_t p) const {
    std::int64_t acc = 0;
    for (std::int64_t c : coefficients)
      acc = mod(mul_mod(acc, theta, p) + mod(c, p), p);
    return acc;
  }

  std::string to_string() const {
    std::string out;
    int deg = degree();
    for (int j = 0; j <= deg; ++j) {
      std::int64_t c = coefficients[static_cast<std::size_t>(j)];
      if (c == 0)
        continue;
      int e = deg - j;
      std::int64_t a = c < 0 ? -c : c;
      if (!out.empty())
        out += c < 0 ? " - " : " + ";
      else if (c < 0)
        out += "-";
      if (a != 1 || e == 0)
        out += std::to_string(a);
      if (e >= 1)
        out += "t";
      if (e >= 2)
        out += "^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
  }
};

namespace detail {

inline int frac_poly_degree(std::int64_t ell) { return ell % 2 ? static_cast<int>((ell - 1) / 2) : static_cast<int>(ell / 2 - 1); }

/// Exact C(n, r), or nullopt when it does not fit in 63 bits.
inline std::optional<std::int64_t> binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n)
    return 0;
  r = std::min(r, n - r);
  __int128 acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > static_cast<__int128>(INT64_MAX))
      return std::nullopt;
  }
  return static_cast<std::int64_t>(acc);
}

/// C(n, r) mod p by Lucas' theorem.
inline std::int64_t binomial_mod(std::int64_t n, std::int64_t r, std::int64_t p) {
  std::int64_t result = 1;
  while (n || r) {
    std::int64_t ni = n % p, ri = r % p;
    if (ri > ni)
      return 0;
    std::int64_t num = 1, den = 1;
    for (std::int64_t i = 0; i < ri; ++i) {
      num = mul_mod(num, ni - i, p);
      den = mul_mod(den, i + 1, p);
    }
    result = mul_mod(result, mul_mod(num, inv_mod(den, p), p), p);
    n /= p;
    r /= p;
  }
  return result;
}

/// Coefficients of f_l reduced mod p, valid for any l.
inline std::vector<std::int64_t> frac_poly_mod(std::int64_t ell, std::int64_t p) {
  if (ell == 2)
    return {1, 0};
  int deg = frac_poly_degree(ell);
  std::vector<std::int64_t> out;
  for (int j = 0; j <= deg; ++j) {
    std::int64_t c = binomial_mod(ell - 1 - j, j, p);
    out.push_back(j % 2 ? mod(-c, p) : c);
  }
  return out;
}

inline std::set<std::int64_t> roots_mod(std::int64_t ell, std::int64_t p) {
  FracPoly f{ell, frac_poly_mod(ell, p)};
  std::set<std::int64_t> out;
  for (std::int64_t t = 0; t < p; ++t)
    if (f.eval_mod(t, p) == 0)
      out.insert(t);
  return out;
}

} // namespace detail

/// f_l with exact integer coefficients. l = 2 uses f_2 = theta (involutions
/// have trace zero). Throws when a coefficient overflows 64 bits.
inline FracPoly f_poly(std::int64_t ell) {
  if (ell < 2)
    throw DomainError("f_poly: l must be at least 2, got " + std::to_string(ell));
  if (ell == 2)
    return {2, {1, 0}};
  FracPoly f{ell, {}};
  int deg = detail::frac_poly_degree(ell);
  for (int j = 0; j <= deg; ++j) {
    auto c = detail::binomial(ell - 1 - j, j);
    if (!c)
      throw DomainError("f_poly: coefficients of f_" + std::to_string(ell) + " overflow 64 bits");
    f.coefficients.push_back(j % 2 ? -*c : *c);
  }
  return f;
}

/// Roots of f_l mod p that are not roots of f_d for any proper divisor
/// d >= 2 of l, found by evaluating at every element of F_p.
inline std::set<std::int64_t> primitive_roots(std::int64_t ell, std::int64_t p) {
  if (ell < 2)
    throw DomainError("primitive_roots: l must be at least 2");
  if (p < 3 || !is_prime(p))
    throw DomainError("primitive_roots: " + std::to_string(p) + " is not an odd prime");
  auto roots = detail::roots_mod(ell, p);
  for (std::int64_t d = 2; d < ell; ++d)
    if (ell % d == 0)
      for (std::int64_t t : detail::roots_mod(d, p))
        roots.erase(t);
  return roots;
}

/// Brute force over PGL(2, p): theta = tr^2/det of every element, grouped by
/// exact order. Orders are found by stepping powers until a scalar appears.
inline std::map<std::int64_t, std::set<std::int64_t>> theta_census(std::int64_t p) {
  if (p < 3 || !is_prime(p))
    throw DomainError("theta_census: " + std::to_string(p) + " is not an odd prime");
  if (p > 200)
    throw DomainError("theta_census: brute force limited to p <= 200");
  std::map<std::int64_t, std::set<std::int64_t>> out;
  auto visit = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::int64_t det = mod(a * d - b * c, p);
    if (det == 0)
      return;
    std::int64_t pa = a, pb = b, pc = c, pd = d;
    std::int64_t order = 1;
    while (!(pb == 0 && pc == 0 && pa == pd)) {
      std::int64_t na = (pa * a + pb * c) % p, nb = (pa * b + pb * d) % p;
      std::int64_t nc = (pc * a + pd * c) % p, nd = (pc * b + pd * d) % p;
      pa = na, pb = nb, pc = nc, pd = nd;
      ++order;
    }
    std::int64_t tr = (a + d) % p;
    out[order].insert(mul_mod(tr * tr % p, inv_mod(det, p), p));
  };
  // One representative per projective class: first nonzero entry is 1.
  for (std::int64_t b = 0; b < p; ++b)
    for (std::int64_t c = 0; c < p; ++c)
      for (std::int64_t d = 0; d < p; ++d)
        visit(1, b, c, d);
  for (std::int64_t c = 0; c < p; ++c)
    for (std::int64_t d = 0; d < p; ++d)
      visit(0, 1, c, d);
  for (std::int64_t d = 0; d < p; ++d)
    visit(0, 0, 1, d);
  return out;
}

inline std::set<std::int64_t> theta_oracle(std::int64_t p, std::int64_t ell) {
  auto census = theta_census(p);
  auto it = census.find(ell);
  return it == census.end() ? std::set<std::int64_t>{} : it->second;
}

// ---------------------------------------------------------------------------
// Parameters of the generator pair
//   X: z -> (a z + c d) / (c z - a),  Y: z -> (e z + f d) / (f z + b - e)
// subject to
//   nabla = -(a^2 + d c^2) != 0,  r = a(2e - b) + 2 d c f,
//   1 + d f^2 + e^2 - e b = 0,    theta * nabla = r^2.
// ---------------------------------------------------------------------------

struct HeckeParams {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t ell = 0;
  std::int64_t theta = 0;
  std::int64_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
  std::int64_t nabla = 0;
  std::int64_t r = 0;

  MobiusMap X() const { return {a, mul_mod(c, d, p), c, mod(-a, p), p}; }
  MobiusMap Y() const { return {e, mul_mod(f, d, p), f, mod(b - e, p), p}; }

  /// Checks every algebraic constraint; throws DomainError naming the first
  /// violated one.
  void validate() const {
    if (p < 3 || !is_prime(p))
      throw DomainError("params: p is not an odd prime");
    if (2 * ell != p + 1)
      throw DomainError("params: 2l != p + 1");
    if (k < 2)
      throw DomainError("params: k must be at least 2");
    std::int64_t want_nabla = mod(-(mul_mod(a, a, p) + mul_mod(d, mul_mod(c, c, p), p)), p);
    if (nabla != want_nabla || nabla == 0)
      throw DomainError("params: nabla = -(a^2 + d c^2) must be nonzero");
    std::int64_t want_r = mod(mul_mod(a, mod(2 * e - b, p), p) + mul_mod(2 * d % p, mul_mod(c, f, p), p), p);
    if (r != want_r)
      throw DomainError("params: r != a(2e - b) + 2dcf");
    if (mod(1 + mul_mod(d, mul_mod(f, f, p), p) + mul_mod(e, e, p) - mul_mod(e, b, p), p) != 0)
      throw DomainError("params: 1 + d f^2 + e^2 - e b != 0");
    if (mul_mod(theta, nabla, p) != mul_mod(r, r, p))
      throw DomainError("params: theta * nabla != r^2");
  }
};

struct SolveOptions {
  /// Stop after this many solutions; 0 means no limit.
  std::size_t max_solutions = 0;
};

/// Admissible traces b of Y: b^2 must be a primitive root of f_k, since
/// det(Y) = 1 forces theta(Y) = b^2.
inline std::vector<std::int64_t> admissible_y_traces(std::int64_t p, std::int64_t k) {
  auto roots = primitive_roots(k, p);
  std::vector<std::int64_t> out;
  for (std::int64_t b = 0; b < p; ++b)
    if (roots.count(mul_mod(b, b, p)))
      out.push_back(b);
  return out;
}

/// Enumerates parameter tuples for (p, k, theta) in lexicographic order of
/// (b, a, c, d, e, f). Tuples are kept only when Y has exact order k and XY
/// has exact order l = (p+1)/2 with two orbits on PL(F_p).
inline std::vector<HeckeParams> solve_params(std::int64_t p, std::int64_t k, std::int64_t theta,
                                             SolveOptions options = {}) {
  if (p < 3 || !is_prime(p))
    throw DomainError("solve_params: " + std::to_string(p) + " is not an odd prime");
  if (k < 2)
    throw DomainError("solve_params: k must be at least 2");
  const std::int64_t ell = (p + 1) / 2;
  if (ell < 2)
    throw DomainError("solve_params: l = (p+1)/2 must be at least 2");
  theta = mod(theta, p);
  if (!primitive_roots(ell, p).count(theta))
    throw DomainError("solve_params: theta = " + std::to_string(theta) + " is not a primitive root of f_" +
                      std::to_string(ell) + " mod " + std::to_string(p));

  auto line = PointSet::projective_line(p);
  std::vector<HeckeParams> out;
  auto full = [&] { return options.max_solutions && out.size() >= options.max_solutions; };

  for (std::int64_t b : admissible_y_traces(p, k)) {
    for (std::int64_t a = 0; a < p; ++a) {
      for (std::int64_t c = 0; c < p; ++c) {
        for (std::int64_t d = 0; d < p; ++d) {
          std::int64_t nabla = mod(-(a * a + d * (c * c % p)), p);
          if (nabla == 0)
            continue;
          std::int64_t theta_nabla = mul_mod(theta, nabla, p);
          for (std::int64_t e = 0; e < p; ++e) {
            // d f^2 = e b - e^2 - 1
            std::int64_t rhs = mod(e * b - e * e - 1, p);
            std::vector<std::int64_t> fs;
            if (d == 0) {
              if (rhs != 0)
                continue;
              for (std::int64_t f = 0; f < p; ++f)
                fs.push_back(f);
            } else {
              fs = sqrt_mod(mul_mod(rhs, inv_mod(d, p), p), p);
            }
            for (std::int64_t f : fs) {
              std::int64_t r = mod(a * mod(2 * e - b, p) + 2 * d % p * (c * f % p), p);
              if (mul_mod(r, r, p) != theta_nabla)
                continue;
              HeckeParams hp{p, k, ell, theta, a, b, c, d, e, f, nabla, r};
              MobiusMap Y = hp.Y();
              if (Y.pgl_order() != static_cast<std::uint64_t>(k))
                continue;
              MobiusMap XY = hp.X() * Y;
              if (XY.pgl_order() != static_cast<std::uint64_t>(ell))
                continue;
              if (XY.to_perm(line).orbit_indices().size() != 2)
                continue;
              out.push_back(hp);
              if (full())
                return out;
            }
          }
        }
      }
    }
  }
  if (out.empty())
    throw SearchExhausted("solve_params: no parameter solution for p = " + std::to_string(p) +
                          ", k = " + std::to_string(k) + ", theta = " + std::to_string(theta));
  return out;
}

/// A certified action of the Hecke group on PL(F_p).
struct HeckeAction {
  HeckeParams params;
  MobiusMap X;
  MobiusMap Y;
  TriangleAction action;
};

/// Builds x = X and y = Y as permutations of PL(F_p) and certifies the orders
/// (2, k, l). A failure here means the solver produced a bad tuple.
inline HeckeAction build_action(const HeckeParams& params) {
  params.validate();
  MobiusMap X = params.X();
  MobiusMap Y = params.Y();
  auto line = PointSet::projective_line(params.p);
  try {
    auto action = TriangleAction::certify(X.to_perm(line), Y.to_perm(line), static_cast<std::uint64_t>(params.k),
                                          static_cast<std::uint64_t>(params.ell));
    if (action.x().order() != 2)
      throw DomainError("x has order " + std::to_string(action.x().order()));
    return {params, X, Y, std::move(action)};
  } catch (const DomainError& err) {
    throw IdentityViolation(std::string("build_action: certification failed: ") + err.what());
  }
}

} // namespace januarial
