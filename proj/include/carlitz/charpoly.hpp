#ifndef CARLITZ_CHARPOLY_HPP
#define CARLITZ_CHARPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "carlitz/matrix.hpp"

namespace carlitz {

/// Polynomial in T with MultiPoly coefficients, indexed by T-degree.
/// Trailing zero coefficients are kept, so coeffs.size() is order + 1
/// for anything produced by char_poly_rev.
template <class Ring>
struct CharPoly {
  std::vector<MultiPoly<Ring>> coeffs;

  /// Highest T-degree with a nonzero coefficient; -1 for the zero polynomial.
  long degree() const {
    for (std::size_t i = coeffs.size(); i > 0; --i)
      if (!coeffs[i - 1].is_zero()) return static_cast<long>(i - 1);
    return -1;
  }

  friend bool operator==(const CharPoly& x, const CharPoly& y) {
    auto n = std::max(x.coeffs.size(), y.coeffs.size());
    for (std::size_t i = 0; i < n; ++i) {
      bool xz = i >= x.coeffs.size() || x.coeffs[i].is_zero();
      bool yz = i >= y.coeffs.size() || y.coeffs[i].is_zero();
      if (xz != yz) return false;
      if (!xz && !(x.coeffs[i] == y.coeffs[i])) return false;
    }
    return true;
  }
};

/// Product of two T-polynomials.
template <class Ring>
CharPoly<Ring> multiply(const CharPoly<Ring>& x, const CharPoly<Ring>& y, const Ring& ring) {
  CharPoly<Ring> out;
  if (x.coeffs.empty() || y.coeffs.empty()) return out;
  out.coeffs.assign(x.coeffs.size() + y.coeffs.size() - 1, MultiPoly<Ring>(ring));
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) out.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
  return out;
}

/// Optional quotient-ring truncations for the characteristic polynomial
/// pass: keep only T-degrees <= max_T_degree, and/or compute modulo
/// t^{max_t_degree+1}. Both are ring homomorphisms of the result, so the
/// retained coefficients are exact.
struct Truncation {
  std::optional<std::size_t> max_T_degree;
  std::optional<std::uint32_t> max_t_degree;
};

/// Coefficients c_0..c_s of det(λI - M) = Σ c_i λ^{s-i}, by Berkowitz's
/// division-free recurrence over the leading principal submatrices.
/// Valid over any commutative ring; O(s^4) ring operations.
template <class Ring>
std::vector<MultiPoly<Ring>> berkowitz(const PolyMatrix<Ring>& input, const Truncation& trunc = {}) {
  using P = MultiPoly<Ring>;
  const Ring& ring = input.ring();
  const std::size_t s = input.order();
  const std::size_t top = std::min(s, trunc.max_T_degree.value_or(s));

  auto reduce = [&](P p) {
    if (trunc.max_t_degree) return p.truncated(Var::t(), *trunc.max_t_degree);
    return p;
  };
  auto mul = [&](const P& x, const P& y) { return reduce(x * y); };

  PolyMatrix<Ring> m = input;
  if (trunc.max_t_degree)
    for (std::size_t i = 1; i <= s; ++i)
      for (std::size_t j = 1; j <= s; ++j) m.at(i, j) = reduce(m.at(i, j));

  std::vector<P> c{P::constant(ring, ring.one())};
  if (s == 0) return c;
  if (top >= 1) c.push_back(-m.at(1, 1));

  for (std::size_t r = 2; r <= s; ++r) {
    // Leading (r-1)x(r-1) block S, last row R, last column C, corner a.
    // Toeplitz column: 1, -a, -R C, -R S C, ..., -R S^{r-2} C; entries
    // beyond index `top` never reach a retained coefficient.
    const std::size_t width = std::min(r, top);
    std::vector<P> toeplitz;
    toeplitz.reserve(width + 1);
    toeplitz.push_back(P::constant(ring, ring.one()));
    if (width >= 1) toeplitz.push_back(-m.at(r, r));

    std::vector<P> v(r - 1, P(ring));
    for (std::size_t i = 1; i < r; ++i) v[i - 1] = m.at(i, r);
    for (std::size_t k = 0; k + 2 <= width; ++k) {
      if (k > 0) {
        std::vector<P> next(r - 1, P(ring));
        for (std::size_t i = 1; i < r; ++i) {
          P acc(ring);
          for (std::size_t j = 1; j < r; ++j)
            if (!m.at(i, j).is_zero() && !v[j - 1].is_zero()) acc += mul(m.at(i, j), v[j - 1]);
          next[i - 1] = std::move(acc);
        }
        v = std::move(next);
      }
      P dot(ring);
      for (std::size_t j = 1; j < r; ++j)
        if (!m.at(r, j).is_zero() && !v[j - 1].is_zero()) dot += mul(m.at(r, j), v[j - 1]);
      toeplitz.push_back(-dot);
    }

    std::vector<P> next(std::min(r, top) + 1, P(ring));
    for (std::size_t i = 0; i < next.size(); ++i) {
      P acc(ring);
      for (std::size_t j = 0; j <= std::min(i, c.size() - 1); ++j)
        if (i - j < toeplitz.size() && !toeplitz[i - j].is_zero() && !c[j].is_zero()) acc += mul(toeplitz[i - j], c[j]);
      next[i] = std::move(acc);
    }
    c = std::move(next);
  }
  return c;
}

/// Sums of principal minors e_0 = 1, e_1 = trace, ..., e_s = det.
template <class Ring>
std::vector<MultiPoly<Ring>> principal_minor_sums(const PolyMatrix<Ring>& m, const Truncation& trunc = {}) {
  auto c = berkowitz(m, trunc);
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return c;
}

/// det(M) by the division-free engine; the empty matrix has determinant 1.
template <class Ring>
MultiPoly<Ring> det(const PolyMatrix<Ring>& m) {
  auto c = berkowitz(m);
  return m.order() % 2 == 0 ? c.back() : -c.back();
}

/// det(I - M T): the coefficient of T^i is (-1)^i times the sum of the
/// principal i x i minors of M.
/// With a truncation, coeffs stops at the retained T-degree and every
/// coefficient is reduced modulo the retained power of t.
template <class Ring>
CharPoly<Ring> char_poly_rev(const PolyMatrix<Ring>& m, const Truncation& trunc = {}) {
  return CharPoly<Ring>{berkowitz(m, trunc)};
}

inline constexpr std::size_t kCofactorOracleMaxOrder = 7;

/// Laplace expansion along the first row. Independent of berkowitz();
/// limited to small orders because its cost grows factorially.
template <class Ring>
MultiPoly<Ring> det_oracle_cofactor(const PolyMatrix<Ring>& m) {
  using P = MultiPoly<Ring>;
  const Ring& ring = m.ring();
  const std::size_t s = m.order();
  if (s > kCofactorOracleMaxOrder)
    throw std::length_error("det_oracle_cofactor: order " + std::to_string(s) + " exceeds the oracle limit " +
                            std::to_string(kCofactorOracleMaxOrder));
  if (s == 0) return P::constant(ring, ring.one());
  if (s == 1) return m.at(1, 1);
  P total(ring);
  for (std::size_t j = 1; j <= s; ++j) {
    if (m.at(1, j).is_zero()) continue;
    P term = m.at(1, j) * det_oracle_cofactor(minor_matrix(m, 1, j));
    if (j % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace carlitz

#endif  // CARLITZ_CHARPOLY_HPP
