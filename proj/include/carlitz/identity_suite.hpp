#ifndef CARLITZ_IDENTITY_SUITE_HPP
#define CARLITZ_IDENTITY_SUITE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "carlitz/carlitz_matrices.hpp"
#include "carlitz/poly.hpp"

namespace carlitz {

/// Outcome of one exact identity check.
struct IdentityReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  bool holds = false;
  nlohmann::json resolved_signs = nlohmann::json::object();
  std::string lhs;
  std::string rhs;

  /// lhs and rhs appear only when the identity fails or verbose is set.
  nlohmann::json to_json(bool verbose = false) const;
};

/// Compares two polynomials and fills identity, holds, lhs, rhs.
IdentityReport compare_polys(std::string identity, nlohmann::json params, const ZPoly& lhs, const ZPoly& rhs);

/// H_{m-2,1,1}(m) = D(m,m-3) - D(m,m-2)^2, both sides in the det(M - U I)
/// convention. Requires m >= 3.
IdentityReport verify_sarraf(std::uint32_t m);

/// H_{1,1,2}(m) = -2 a_0^2 D(m,1) - 2 (a_0 + a_1) D(m,0). Requires m >= 2.
IdentityReport verify_ehbauer(std::uint32_t m);

/// H_{1,1,2}(m) in the det(M - U I) convention by extraction from the
/// characteristic polynomial pass. Requires m >= 2.
ZPoly h112_extracted(std::uint32_t m);

/// All determinants det B(l,u), l = 1..m+1, u = 1..m, indexed [l-1][u-1].
std::vector<std::vector<ZPoly>> b_determinants(std::uint32_t m);

/// -2 Σ_{l,u} det B(l,u). Requires m >= 2.
ZPoly h112_via_B(std::uint32_t m);

/// The six B-matrix identities (vanishing for l,u != 1; det B(2,1);
/// Σ_{l>=3} det B(l,1); det B(1,1); det B(1,u); the principal equality)
/// followed by the cross-path equality h112_via_B = h112_extracted.
std::vector<IdentityReport> verify_b_lemmas(std::uint32_t m);

inline constexpr std::size_t kPermIdentityMaxOrder = 6;

/// Σ_σ det M(r,σ) and Σ_σ det M(c,σ) over S_n.
struct PermSums {
  ZPoly rows;
  ZPoly columns;
};
PermSums perm_sums(const AlphaMap& alpha);

/// Row/column permutation-sum identity with independent random α_{i,j,k}
/// in [-9, 9], one check per trial. Throws length_error for n above the guard.
IdentityReport verify_perm_identity_random(std::size_t n, std::uint64_t seed, std::size_t trials);

/// The same identity for α from carlitz_alpha(m), plus the two counting
/// identities Σ_σ det M(r,σ) = (m-2)! det B(1,1)_{2,1} and
/// Σ_σ det M(c,σ) = (m-2)! Σ_u det B(1,u)_1.
std::vector<IdentityReport> verify_perm_identity_carlitz(std::uint32_t m);

/// The three clauses relating M(r,σ), M(c,σ) and the B minors, checked for
/// every σ in S_{m-1}. Requires 2 <= m <= 7.
std::vector<IdentityReport> verify_perm_clauses(std::uint32_t m);

/// H_{0,j,1} = ±a_j D(m,0) (n = 1 only), H_{i,0,n} = ±D(m,i-n) ± a_0 D(m,i-n+1)
/// and H_{i,n(k-i),n} = ±D(m,i-n) ± a_m D(m,i-n+1), H in the det(I - M T)
/// convention. Every sign combination is tried; the ones that hold are
/// reported. Requires m >= 1, n >= 1.
std::vector<IdentityReport> verify_known_coeffs(std::uint32_t m, std::uint32_t n);

/// det(I - M T) = det(I - M_nt T) (1 - (-1)^n a_m T) over ℤ[a_*][t][T].
/// Throws NonTrivialPartUndefined unless (m+n) is divisible by q - 1.
IdentityReport verify_trivial_factor_symbolic(std::uint32_t q, std::uint32_t n, std::uint32_t m);

/// The same identity over 𝔽_q[t][T] at a concrete coefficient vector
/// (a_m = 0 allowed; the factor is then 1).
IdentityReport verify_trivial_factor_point(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& coeffs);

/// Seeded random points: n in 0..2, m in 1..6 with q-1 | m+n, coefficients
/// uniform in 𝔽_q.
std::vector<IdentityReport> verify_trivial_factor_random(std::uint32_t q, std::size_t count, std::uint64_t seed);

}  // namespace carlitz

#endif  // CARLITZ_IDENTITY_SUITE_HPP
