#ifndef CARLITZ_CARLITZ_MATRICES_HPP
#define CARLITZ_CARLITZ_MATRICES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "carlitz/matrix.hpp"

namespace carlitz {

class NonTrivialPartUndefined : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Twist parameters: base field size q, tensor power n, and the twisting
/// polynomial P = a_0 + a_1 θ + ... + a_m θ^m, either with indeterminate
/// coefficients or with concrete values in 𝔽_q (q prime).
class TwistSpec {
 public:
  static TwistSpec symbolic(std::uint32_t q, std::uint32_t n, std::uint32_t m);
  /// Field mode; requires q prime, coeffs.size() == m + 1 and a_m != 0 mod q.
  static TwistSpec over_field(std::uint32_t q, std::uint32_t n, std::vector<std::uint32_t> coeffs);

  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  bool is_symbolic() const { return !coeffs_.has_value(); }
  const std::vector<std::uint32_t>& field_coeffs() const;

  /// Order of the full matrix: floor((m+n)/(q-1)).
  std::size_t k_bar() const { return (m_ + n_) / (q_ - 1); }
  /// True when (m+n)/(q-1) is integral and the non-trivial part exists.
  bool has_nontrivial_part() const { return (m_ + n_) % (q_ - 1) == 0 && m_ + n_ > 0; }
  /// k = k_bar - 1; throws NonTrivialPartUndefined otherwise.
  std::size_t k() const;

 private:
  TwistSpec(std::uint32_t q, std::uint32_t n, std::uint32_t m) : q_(q), n_(n), m_(m) {}
  std::uint32_t q_;
  std::uint32_t n_;
  std::uint32_t m_;
  std::optional<std::vector<std::uint32_t>> coeffs_;
};

/// The k̄ x k̄ matrix with (i,j) entry Σ_l (-1)^l C(n,l) a_{jq-i-l} t^{n-l},
/// a_s = 0 outside 0..m. Symbolic specs give entries in ℤ[a_0..a_m][t].
ZMatrix build_M(const TwistSpec& spec);
/// Same matrix with the coefficients of a field-mode spec, over 𝔽_q[t].
FpMatrix build_M_over_field(const TwistSpec& spec);
/// Field-mode entries for an arbitrary coefficient vector (no a_m != 0 requirement).
FpMatrix build_M_over_field(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& coeffs);

/// Leading k x k block of build_M (last row and column dropped).
ZMatrix build_M_nt(const TwistSpec& spec);
FpMatrix build_M_nt_over_field(const TwistSpec& spec);

/// The (m-1) x (m-1) t-free matrix with entries a_{2j-i} (q = 2, n = 0).
ZMatrix nt_matrix(std::uint32_t m);

/// Splits M = Σ_{l=0}^{n} C_l t^l; returns C_0..C_n over ℤ[a_*].
template <class Ring>
std::vector<PolyMatrix<Ring>> t_decompose(const PolyMatrix<Ring>& m, std::uint32_t n) {
  std::vector<PolyMatrix<Ring>> parts(n + 1, PolyMatrix<Ring>(m.order(), m.ring()));
  for (std::size_t i = 1; i <= m.order(); ++i)
    for (std::size_t j = 1; j <= m.order(); ++j) {
      const auto& e = m.at(i, j);
      if (e.degree_in(Var::t()) > static_cast<long>(n))
        throw std::invalid_argument("t_decompose: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") has t-degree above " + std::to_string(n));
      for (std::uint32_t l = 0; l <= n; ++l) parts[l].at(i, j) = e.coefficient_in(Var::t(), l);
    }
  return parts;
}

/// B(l,u) for q = 2, n = 2: from M_nt(P,2,m+1) delete row and column l;
/// column u takes -1/2 of the t^1 coefficients, every other column the
/// t^0 coefficients. l in 1..m+1, u in 1..m.
ZMatrix build_B(const TwistSpec& spec, std::size_t l, std::size_t u);
ZMatrix build_B(std::uint32_t m, std::size_t l, std::size_t u);

/// Values α_{i,j,k} for i,j,k in 1..n.
class AlphaMap {
 public:
  explicit AlphaMap(std::size_t n) : n_(n), values_(n * n * n) {}

  std::size_t order() const { return n_; }
  ZPoly& at(std::size_t i, std::size_t j, std::size_t k) { return values_[index(i, j, k)]; }
  const ZPoly& at(std::size_t i, std::size_t j, std::size_t k) const { return values_[index(i, j, k)]; }

  /// Independent uniform integers in [lo, hi].
  static AlphaMap random_integers(std::size_t n, std::mt19937_64& rng, int lo = -9, int hi = 9);

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_) throw std::out_of_range("AlphaMap: index out of range");
    return ((i - 1) * n_ + (j - 1)) * n_ + (k - 1);
  }
  std::size_t n_;
  std::vector<ZPoly> values_;
};

/// α_{i,j,k} = a_{2j-i} for k != 1 and a_{2j-i+1} for k = 1 (zero outside
/// 0..m), with i,j,k in 1..m-1. Requires m >= 2.
AlphaMap carlitz_alpha(std::uint32_t m);

enum class PermKind { rows, columns };

/// A permutation of {1..n} given by its images sigma[i-1] = σ(i).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i - 1); }
  std::size_t inverse(std::size_t v) const;
  const std::vector<std::size_t>& images() const { return images_; }
  /// Advances to the next permutation in lexicographic order; false after the last.
  bool next();

 private:
  std::vector<std::size_t> images_;
};

struct PermMatrixSpec {
  PermKind kind;
  Permutation sigma;
  const AlphaMap& alpha;
};

/// M(r,σ) = (α_{i,j,σ(i)}) or M(c,σ) = (α_{i,j,σ(j)}).
ZMatrix build_perm_matrix(const PermMatrixSpec& spec);

}  // namespace carlitz

#endif  // CARLITZ_CARLITZ_MATRICES_HPP
