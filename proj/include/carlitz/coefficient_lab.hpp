#ifndef CARLITZ_COEFFICIENT_LAB_HPP
#define CARLITZ_COEFFICIENT_LAB_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "carlitz/charpoly.hpp"
#include "carlitz/poly.hpp"

namespace carlitz {

/// Restricts an HTable to the entries a caller needs: rows i >= min_i and
/// t-degrees j <= max_j. Entries outside the window are absent, never zero,
/// so the restriction cannot be mistaken for a vanishing coefficient.
struct HWindow {
  std::size_t min_i = 0;
  std::optional<std::uint32_t> max_j;
};

/// Coefficients H_{i,j,n}(m) of det(I - M_nt T) = Σ H_{i,j,n} t^j T^{k-i}
/// for q = 2, k = m + n - 1.
class HTable {
 public:
  HTable(std::uint32_t m, std::uint32_t n);

  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return n_; }
  std::size_t k() const { return k_; }

  /// Largest j with a possibly nonzero entry in row i: n(k - i).
  std::uint32_t max_j(std::size_t i) const;
  bool computed(std::size_t i, std::uint32_t j) const { return entries_.count({i, j}) != 0; }
  /// Throws out_of_range outside 0 <= i <= k, 0 <= j <= n(k-i), and
  /// logic_error for an in-range entry the window excluded.
  const ZPoly& at(std::size_t i, std::uint32_t j) const;
  /// The same coefficient read off det(M_nt - U I) at (-U)^{k-i}: (-1)^{k-i} at(i,j).
  ZPoly proof_convention(std::size_t i, std::uint32_t j) const;

  void set(std::size_t i, std::uint32_t j, ZPoly p);
  const std::map<std::pair<std::size_t, std::uint32_t>, ZPoly>& entries() const { return entries_; }

  /// { "m", "n", "k", "entries": [{"i","j","poly"}] } in (i,j) order.
  nlohmann::json to_json() const;

 private:
  void check_range(std::size_t i, std::uint32_t j) const;

  std::uint32_t m_;
  std::uint32_t n_;
  std::size_t k_;
  std::map<std::pair<std::size_t, std::uint32_t>, ZPoly> entries_;
};

/// Builds M_nt(q=2, n, m), runs the characteristic polynomial pass (truncated
/// to the window) and splits each T-coefficient by t-degree. Requires m >= 1.
HTable h_table(std::uint32_t m, std::uint32_t n, const HWindow& window = {});

/// H_{i,j,n} from the t-specializations alone: row j = 0 from M_nt at t = 0,
/// row j = n(k-i) from the leading t-coefficient matrix. Both are exact and
/// much cheaper than a full table when only these two edges are needed.
std::vector<ZPoly> h_row_t0(std::uint32_t m, std::uint32_t n);
std::vector<ZPoly> h_row_top(std::uint32_t m, std::uint32_t n);

/// D(m,i) = coefficient of (-U)^i in det(M_nt(P,0,m) - U I), i = 0..m-1,
/// together with the sign ε_i measured against H_{i,0,0}: D(m,i) = ε_i H_{i,0,0}.
class DFamily {
 public:
  DFamily(std::uint32_t m, std::size_t min_i, std::vector<ZPoly> polys, std::vector<int> epsilon);

  std::uint32_t m() const { return m_; }
  std::size_t min_i() const { return min_i_; }
  /// D(m,i); zero for i outside 0..m-1 (including negative i). Throws
  /// logic_error for an in-range i below min_i that was not computed.
  const ZPoly& at(long i) const;
  /// ε_i in {+1, -1}; 0 where D(m,i) and H_{i,0,0} both vanish.
  int epsilon(std::size_t i) const;

  nlohmann::json to_json() const;

 private:
  std::uint32_t m_;
  std::size_t min_i_;
  std::vector<ZPoly> polys_;
  std::vector<int> epsilon_;
  ZPoly zero_;
};

/// D(m,i) for min_i <= i <= m-1. Requires m >= 1.
DFamily d_family(std::uint32_t m, std::size_t min_i = 0);

/// Independent route to D(m,i): expand det(M_nt(P,0,m) - u I) with u as an
/// extra variable and read off (-1)^i times the u^i coefficient.
std::vector<ZPoly> d_family_literal(std::uint32_t m);

/// Σ_{1<=j<k<=m-1} (a_j a_k - a_{2j-k} a_{2k-j}), out-of-range a's zero.
ZPoly d_m3_formula(std::uint32_t m);
/// True iff d_family's D(m,m-3) equals d_m3_formula(m). Requires m >= 3.
bool d_m3_formula_check(std::uint32_t m);

}  // namespace carlitz

#endif  // CARLITZ_COEFFICIENT_LAB_HPP
