// Shared generators and independent oracles for the test binaries.
#ifndef CARLITZ_TESTS_SUPPORT_HPP
#define CARLITZ_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "carlitz/carlitz_matrices.hpp"
#include "carlitz/charpoly.hpp"
#include "carlitz/poly.hpp"

namespace carlitz::testing {

// Random polynomial in a_0..a_{vars-1} and t with small coefficients.
template <class Ring>
MultiPoly<Ring> random_poly(const Ring& ring, std::mt19937_64& rng, std::uint32_t vars, int max_terms = 4,
                            int max_exp = 2, int coeff_bound = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms), exp(0, max_exp), coeff(-coeff_bound, coeff_bound),
      var(0, static_cast<int>(vars));
  MultiPoly<Ring> p(ring);
  for (int n = nterms(rng); n > 0; --n) {
    Monomial mono;
    for (int f = exp(rng); f > 0; --f) {
      int v = var(rng);
      mono = mono * Monomial::of(v == static_cast<int>(vars) ? Var::t() : Var::a(static_cast<std::uint32_t>(v)));
    }
    p += MultiPoly<Ring>::monomial(ring, mono, ring.from_int(coeff(rng)));
  }
  return p;
}

inline ZMatrix random_matrix(std::mt19937_64& rng, std::size_t order, std::uint32_t vars, int max_terms = 3) {
  ZMatrix m(order, IntegerRing{});
  for (std::size_t i = 1; i <= order; ++i)
    for (std::size_t j = 1; j <= order; ++j) m.at(i, j) = random_poly(IntegerRing{}, rng, vars, max_terms, 1, 4);
  return m;
}

// Term-map model of a polynomial: exponent vector (a_0..a_21, t, u) -> coefficient.
using TermMap = std::map<std::vector<std::uint32_t>, BigInt>;

inline std::vector<std::uint32_t> exponents(const Monomial& m) {
  std::vector<std::uint32_t> e(24, 0);
  for (const auto& f : m.factors()) e[f.var.is_a() ? f.var.index() : (f.var == Var::t() ? 22 : 23)] = f.exp;
  return e;
}

inline TermMap term_map(const ZPoly& p) {
  TermMap out;
  for (const auto& t : p.terms()) out[exponents(t.mono)] = t.coeff;
  return out;
}

inline TermMap oracle_add(const TermMap& x, const TermMap& y) {
  TermMap out = x;
  for (const auto& [e, c] : y) out[e] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline TermMap oracle_mul(const TermMap& x, const TermMap& y) {
  TermMap out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) {
      auto e = ex;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += ey[i];
      out[e] += cx * cy;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Matrix from rows of polynomial text.
inline ZMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<ZPoly>> polys;
  for (const auto& row : rows) {
    polys.emplace_back();
    for (const auto& s : row) polys.back().push_back(parse_zpoly(s));
  }
  return ZMatrix::from_rows(polys, IntegerRing{});
}

// Leibniz expansion over all permutations; an oracle independent of both
// Berkowitz and the cofactor recursion.
template <class Ring>
MultiPoly<Ring> det_leibniz(const PolyMatrix<Ring>& m) {
  const std::size_t n = m.order();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i + 1;
  MultiPoly<Ring> sum(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    auto term = MultiPoly<Ring>::constant(m.ring(), m.ring().one());
    for (std::size_t i = 0; i < n; ++i) term *= m.at(i + 1, perm[i]);
    sum += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

// Σ of principal s x s minors for each s, by subset enumeration.
template <class Ring>
std::vector<MultiPoly<Ring>> principal_minor_sums_oracle(const PolyMatrix<Ring>& m) {
  const std::size_t n = m.order();
  std::vector<MultiPoly<Ring>> out(n + 1, MultiPoly<Ring>(m.ring()));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < n; ++i)
      if (!(mask >> i & 1)) drop.push_back(i + 1);
    const auto sub = submatrix_minor(m, drop, drop);
    out[sub.order()] += sub.order() == 0 ? MultiPoly<Ring>::constant(m.ring(), m.ring().one()) : det_leibniz(sub);
  }
  return out;
}

// det(M - U I) with U carried by the variable u, by cofactor expansion.
inline ZPoly det_minus_u(const ZMatrix& m) {
  ZMatrix shifted = m;
  const ZPoly u = ZPoly::variable(IntegerRing{}, Var::u());
  for (std::size_t i = 1; i <= m.order(); ++i) shifted.at(i, i) -= u;
  return det_oracle_cofactor(shifted);
}

// Coefficient of (-U)^i in det(M - U I).
inline ZPoly coefficient_minus_u(const ZPoly& d, std::uint32_t i) {
  ZPoly c = d.coefficient_in(Var::u(), i);
  return i % 2 == 0 ? c : -c;
}

}  // namespace carlitz::testing

#endif  // CARLITZ_TESTS_SUPPORT_HPP
