#ifndef CARLITZ_LFUN_CENSUS_HPP
#define CARLITZ_LFUN_CENSUS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "carlitz/charpoly.hpp"
#include "carlitz/poly.hpp"

namespace carlitz {

/// Raised when an enumeration would exceed kEnumerationLimit points.
class EnumerationGuard : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 22;

/// p^(m+1), throwing EnumerationGuard above the limit.
std::uint64_t point_count(std::uint32_t p, std::uint32_t m);

/// The coefficient vector a_0..a_m with index Σ a_i p^(m-i), so that
/// increasing indices list the digit strings "a_0 a_1 ... a_m" in
/// lexicographic order.
std::vector<std::uint32_t> point_from_index(std::uint64_t index, std::uint32_t p, std::uint32_t m);
std::string point_digits(const std::vector<std::uint32_t>& point);

/// Worker count from CARLITZ_LAB_THREADS (default 1, at least 1).
unsigned lab_threads();

/// Runs body(i) for i in [0, count) on lab_threads() workers. Each index is
/// handled exactly once, so results written to per-index slots do not
/// depend on the worker count.
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& body);

/// det(I - M(P,n,k̄) T) over 𝔽_q[t] for the concrete coefficients.
CharPoly<PrimeField> l_function(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& coeffs);

/// k̄ - deg_T L, with k̄ taken from the declared degree m = coeffs.size() - 1.
long analytic_rank(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& coeffs);

/// Same rank with the determinant expanded by cofactors (independent check).
long analytic_rank_oracle(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& coeffs);

struct RankCensus {
  std::uint32_t q = 2;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  bool exact_degree = false;
  std::map<long, std::uint64_t> histogram;
  /// rank per enumerated point index; -1 where the point was skipped.
  std::vector<long> ranks;

  std::uint64_t total() const;
  /// Number of enumerated points with rank >= l.
  std::uint64_t at_least(long l) const;
  /// Header `q,n,m,rank,count`, one row per rank in increasing order.
  std::string csv() const;
  nlohmann::json to_json() const;
};

/// Every coefficient vector of 𝔽_q^{m+1} (or only a_m != 0 with exact_degree).
RankCensus rank_census(std::uint32_t q, std::uint32_t n, std::uint32_t m, bool exact_degree = false);

enum class SupportKind { xq, xm };

struct SupportSet {
  std::uint32_t m = 0;
  std::uint32_t p = 2;
  /// Point indices (see point_from_index), increasing and distinct.
  std::vector<std::uint64_t> points;

  std::size_t size() const { return points.size(); }
  bool contains(std::uint64_t index) const;
  /// { "m", "p", "points": [digit strings a_0..a_m] }.
  nlohmann::json to_json() const;
  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

/// Defining polynomials: H_{i,j,n}(m) for i < l and all j (xq), or
/// D(m,0..l-1) (xm), reduced mod p.
std::vector<FpPoly> support_equations(SupportKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t n,
                                      std::uint32_t l);

/// Common zeros in 𝔽_p^{m+1} of a list of polynomials in a_0..a_m.
SupportSet common_zeros(const std::vector<FpPoly>& equations, std::uint32_t p, std::uint32_t m);

/// X(2,n,m,l)(𝔽_p) (xq; p must be 2) or X(m,l)(𝔽_p) (xm).
SupportSet support_points(SupportKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t n, std::uint32_t l);

struct SupportComparison {
  std::uint32_t m, n, l;
  std::size_t xq_size, xm_size;
  /// Affine equality of the two point sets.
  bool equal;
  /// Equality after discarding the zero vector (the varieties are cones).
  bool projective_equal;
  /// X(m,l)(𝔽_2) ⊆ X(2,n,m,l)(𝔽_2).
  bool xm_in_xq;
  /// Points in exactly one of the two sets (digit strings).
  std::vector<std::string> only_xq, only_xm;
  nlohmann::json to_json() const;
};

/// Compares X(2,n,m,l)(𝔽_2) with X(m,l)(𝔽_2). An inequality is a result to
/// surface, not an error; callers decide how to report it.
SupportComparison support_equality_check(std::uint32_t m, std::uint32_t n, std::uint32_t l);

/// Cofactors c_b with target = Σ c_b b, found by exact linear algebra.
struct MembershipCertificate {
  std::vector<QPoly> cofactors;
  nlohmann::json to_json() const;
};

/// Searches homogeneous cofactors of degree deg(target) - deg(b) <= max_deg
/// for each basis element b. Target and basis must be homogeneous in the
/// a_i (invalid_argument otherwise). Returns nullopt when no such cofactors
/// exist; a returned certificate has been expanded and checked.
std::optional<MembershipCertificate> ideal_membership_linear(const ZPoly& target, const std::vector<ZPoly>& basis,
                                                             std::uint32_t max_deg);

}  // namespace carlitz

#endif  // CARLITZ_LFUN_CENSUS_HPP
