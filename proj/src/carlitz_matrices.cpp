#include "carlitz/carlitz_matrices.hpp"

#include <algorithm>
#include <numeric>

namespace carlitz {

namespace {

BigInt binomial(std::uint32_t n, std::uint32_t k) {
  BigInt b = 1;
  for (std::uint32_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Entry formula shared by the symbolic and field builders; coeff(s) yields
// a_s as a polynomial (zero outside 0..m).
template <class Ring, class CoeffFn>
PolyMatrix<Ring> carlitz_matrix(const Ring& ring, std::uint32_t q, std::uint32_t n, std::size_t order,
                                CoeffFn coeff) {
  using P = MultiPoly<Ring>;
  std::vector<P> weights;
  for (std::uint32_t l = 0; l <= n; ++l) {
    BigInt w = binomial(n, l);
    if (l % 2 == 1) w = -w;
    P tpow = P::variable(ring, Var::t(), n - l);
    if constexpr (std::is_same_v<Ring, PrimeField>)
      weights.push_back(tpow.scaled(ring.from_bigint(w)));
    else
      weights.push_back(tpow.scaled(typename Ring::value_type(w)));
  }
  PolyMatrix<Ring> m(order, ring);
  for (std::size_t i = 1; i <= order; ++i)
    for (std::size_t j = 1; j <= order; ++j) {
      P entry(ring);
      for (std::uint32_t l = 0; l <= n; ++l) {
        long s = static_cast<long>(j * q) - static_cast<long>(i) - static_cast<long>(l);
        P a = coeff(s);
        if (!a.is_zero()) entry += a * weights[l];
      }
      m.at(i, j) = std::move(entry);
    }
  return m;
}

ZMatrix leading_block(const ZMatrix& m, std::size_t k) {
  ZMatrix out(k, m.ring());
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

FpMatrix leading_block(const FpMatrix& m, std::size_t k) {
  FpMatrix out(k, m.ring());
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

ZPoly halve_negated(const ZPoly& p) {
  std::vector<ZPoly::Term> terms;
  for (const auto& t : p.terms()) {
    if (t.coeff % 2 != 0) throw std::logic_error("build_B: t^1 coefficient not divisible by -2");
    terms.push_back({t.mono, t.coeff / -2});
  }
  return ZPoly::from_terms(IntegerRing{}, std::move(terms));
}

}  // namespace

TwistSpec TwistSpec::symbolic(std::uint32_t q, std::uint32_t n, std::uint32_t m) {
  if (q < 2) throw std::invalid_argument("TwistSpec: q must be at least 2");
  return TwistSpec(q, n, m);
}

TwistSpec TwistSpec::over_field(std::uint32_t q, std::uint32_t n, std::vector<std::uint32_t> coeffs) {
  if (!is_prime(q)) throw std::invalid_argument("TwistSpec: field mode needs prime q");
  if (coeffs.empty()) throw std::invalid_argument("TwistSpec: empty coefficient list");
  for (auto& c : coeffs) c %= q;
  if (coeffs.back() == 0) throw std::invalid_argument("TwistSpec: leading coefficient a_m must be nonzero");
  TwistSpec spec(q, n, static_cast<std::uint32_t>(coeffs.size() - 1));
  spec.coeffs_ = std::move(coeffs);
  return spec;
}

const std::vector<std::uint32_t>& TwistSpec::field_coeffs() const {
  if (!coeffs_) throw std::logic_error("TwistSpec: symbolic spec has no field coefficients");
  return *coeffs_;
}

std::size_t TwistSpec::k() const {
  if (!has_nontrivial_part())
    throw NonTrivialPartUndefined("non-trivial part undefined: (m+n)/(q-1) = " + std::to_string(m_ + n_) + "/" +
                                  std::to_string(q_ - 1) + " does not give a positive integer");
  return k_bar() - 1;
}

ZMatrix build_M(const TwistSpec& spec) {
  if (!spec.is_symbolic()) throw std::invalid_argument("build_M: field-mode spec; use build_M_over_field");
  const std::uint32_t m = spec.m();
  return carlitz_matrix(IntegerRing{}, spec.q(), spec.n(), spec.k_bar(), [m](long s) {
    return s >= 0 && s <= static_cast<long>(m) ? avar(static_cast<std::uint32_t>(s)) : ZPoly();
  });
}

FpMatrix build_M_over_field(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& coeffs) {
  PrimeField field(q);
  if (coeffs.empty()) throw std::invalid_argument("build_M_over_field: empty coefficient list");
  const long m = static_cast<long>(coeffs.size()) - 1;
  std::size_t order = (static_cast<std::size_t>(m) + n) / (q - 1);
  return carlitz_matrix(field, q, n, order, [&](long s) {
    if (s < 0 || s > m) return FpPoly(field);
    return FpPoly::constant(field, field.from_int(coeffs[static_cast<std::size_t>(s)]));
  });
}

FpMatrix build_M_over_field(const TwistSpec& spec) {
  return build_M_over_field(spec.q(), spec.n(), spec.field_coeffs());
}

ZMatrix build_M_nt(const TwistSpec& spec) { return leading_block(build_M(spec), spec.k()); }

FpMatrix build_M_nt_over_field(const TwistSpec& spec) { return leading_block(build_M_over_field(spec), spec.k()); }

ZMatrix nt_matrix(std::uint32_t m) { return build_M_nt(TwistSpec::symbolic(2, 0, m)); }

ZMatrix build_B(const TwistSpec& spec, std::size_t l, std::size_t u) {
  if (spec.q() != 2 || spec.n() != 2 || !spec.is_symbolic())
    throw std::invalid_argument("build_B: needs a symbolic spec with q = 2 and n = 2");
  const std::size_t m = spec.m();
  if (l < 1 || l > m + 1) throw std::out_of_range("build_B: l must lie in 1..m+1");
  if (u < 1 || u > m) throw std::out_of_range("build_B: u must lie in 1..m");

  auto parts = t_decompose(principal_minor_matrix(build_M_nt(spec), l), 2);
  ZMatrix b(m, IntegerRing{});
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t c = 1; c <= m; ++c) b.at(i, c) = c == u ? halve_negated(parts[1].at(i, c)) : parts[0].at(i, c);
  return b;
}

ZMatrix build_B(std::uint32_t m, std::size_t l, std::size_t u) { return build_B(TwistSpec::symbolic(2, 2, m), l, u); }

AlphaMap AlphaMap::random_integers(std::size_t n, std::mt19937_64& rng, int lo, int hi) {
  AlphaMap alpha(n);
  std::uniform_int_distribution<int> dist(lo, hi);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k) alpha.at(i, j, k) = zconst(dist(rng));
  return alpha;
}

AlphaMap carlitz_alpha(std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("carlitz_alpha: needs m >= 2");
  const std::size_t n = m - 1;
  AlphaMap alpha(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k) {
        long s = 2 * static_cast<long>(j) - static_cast<long>(i) + (k == 1 ? 1 : 0);
        alpha.at(i, j, k) = s >= 0 && s <= static_cast<long>(m) ? avar(static_cast<std::uint32_t>(s)) : ZPoly();
      }
  return alpha;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto v : images_) {
    if (v < 1 || v > images_.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection on 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  return Permutation(std::move(images));
}

std::size_t Permutation::inverse(std::size_t v) const {
  auto it = std::find(images_.begin(), images_.end(), v);
  if (it == images_.end()) throw std::out_of_range("Permutation::inverse: value out of range");
  return static_cast<std::size_t>(it - images_.begin()) + 1;
}

bool Permutation::next() { return std::next_permutation(images_.begin(), images_.end()); }

ZMatrix build_perm_matrix(const PermMatrixSpec& spec) {
  const std::size_t n = spec.sigma.size();
  if (spec.alpha.order() != n) throw std::invalid_argument("build_perm_matrix: alpha and sigma sizes differ");
  ZMatrix m(n, IntegerRing{});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      m.at(i, j) = spec.alpha.at(i, j, spec.kind == PermKind::rows ? spec.sigma(i) : spec.sigma(j));
  return m;
}

}  // namespace carlitz
