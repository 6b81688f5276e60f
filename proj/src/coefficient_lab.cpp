#include "carlitz/coefficient_lab.hpp"

#include <stdexcept>
#include <string>

#include "carlitz/carlitz_matrices.hpp"

namespace carlitz {

namespace {

ZPoly a_or_zero(long s, std::uint32_t m) {
  return s >= 0 && s <= static_cast<long>(m) ? avar(static_cast<std::uint32_t>(s)) : ZPoly();
}

// H_{i,.} row from a t-free matrix: coefficient of T^{k-i} of det(I - C T).
std::vector<ZPoly> rows_from_charpoly(const ZMatrix& c) {
  auto coeffs = char_poly_rev(c).coeffs;
  const std::size_t k = c.order();
  std::vector<ZPoly> out(k + 1);
  for (std::size_t i = 0; i <= k; ++i) out[i] = coeffs[k - i];
  return out;
}

}  // namespace

HTable::HTable(std::uint32_t m, std::uint32_t n) : m_(m), n_(n) {
  if (m + n < 1) throw std::invalid_argument("HTable: k = m + n - 1 is negative");
  k_ = m + n - 1;
}

std::uint32_t HTable::max_j(std::size_t i) const {
  if (i > k_) throw std::out_of_range("HTable: i = " + std::to_string(i) + " above k = " + std::to_string(k_));
  return n_ * static_cast<std::uint32_t>(k_ - i);
}

void HTable::check_range(std::size_t i, std::uint32_t j) const {
  if (j > max_j(i))
    throw std::out_of_range("HTable: j = " + std::to_string(j) + " above n(k-i) = " + std::to_string(max_j(i)));
}

const ZPoly& HTable::at(std::size_t i, std::uint32_t j) const {
  check_range(i, j);
  auto it = entries_.find({i, j});
  if (it == entries_.end())
    throw std::logic_error("HTable: H_{" + std::to_string(i) + "," + std::to_string(j) + "} was not computed");
  return it->second;
}

ZPoly HTable::proof_convention(std::size_t i, std::uint32_t j) const {
  return (k_ - i) % 2 == 0 ? at(i, j) : -at(i, j);
}

void HTable::set(std::size_t i, std::uint32_t j, ZPoly p) {
  check_range(i, j);
  entries_[{i, j}] = std::move(p);
}

nlohmann::json HTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, poly] : entries_)
    entries.push_back({{"i", key.first}, {"j", key.second}, {"poly", poly.render()}});
  return {{"m", m_}, {"n", n_}, {"k", k_}, {"entries", entries}};
}

HTable h_table(std::uint32_t m, std::uint32_t n, const HWindow& window) {
  if (m < 1) throw std::invalid_argument("h_table: needs m >= 1");
  HTable table(m, n);
  const std::size_t k = table.k();
  if (window.min_i > k) return table;

  Truncation trunc;
  trunc.max_T_degree = k - window.min_i;
  trunc.max_t_degree = window.max_j;
  auto coeffs = char_poly_rev(build_M_nt(TwistSpec::symbolic(2, n, m)), trunc).coeffs;

  for (std::size_t i = window.min_i; i <= k; ++i) {
    const ZPoly& c = coeffs[k - i];
    std::uint32_t top = table.max_j(i);
    if (window.max_j) top = std::min(top, *window.max_j);
    for (std::uint32_t j = 0; j <= top; ++j) table.set(i, j, c.coefficient_in(Var::t(), j));
  }
  return table;
}

std::vector<ZPoly> h_row_t0(std::uint32_t m, std::uint32_t n) {
  if (m < 1) throw std::invalid_argument("h_row_t0: needs m >= 1");
  auto parts = t_decompose(build_M_nt(TwistSpec::symbolic(2, n, m)), n);
  return rows_from_charpoly(parts.front());
}

std::vector<ZPoly> h_row_top(std::uint32_t m, std::uint32_t n) {
  if (m < 1) throw std::invalid_argument("h_row_top: needs m >= 1");
  auto parts = t_decompose(build_M_nt(TwistSpec::symbolic(2, n, m)), n);
  return rows_from_charpoly(parts.back());
}

DFamily::DFamily(std::uint32_t m, std::size_t min_i, std::vector<ZPoly> polys, std::vector<int> epsilon)
    : m_(m), min_i_(min_i), polys_(std::move(polys)), epsilon_(std::move(epsilon)) {}

const ZPoly& DFamily::at(long i) const {
  if (i < 0 || i >= static_cast<long>(m_)) return zero_;
  if (static_cast<std::size_t>(i) < min_i_)
    throw std::logic_error("DFamily: D(" + std::to_string(m_) + "," + std::to_string(i) + ") was not computed");
  return polys_[static_cast<std::size_t>(i) - min_i_];
}

int DFamily::epsilon(std::size_t i) const {
  if (i < min_i_ || i >= m_) throw std::out_of_range("DFamily: no sign for i = " + std::to_string(i));
  return epsilon_[i - min_i_];
}

nlohmann::json DFamily::to_json() const {
  nlohmann::json polys = nlohmann::json::array();
  for (std::size_t i = min_i_; i < m_; ++i)
    polys.push_back({{"i", i}, {"poly", at(static_cast<long>(i)).render()}, {"epsilon", epsilon(i)}});
  return {{"m", m_}, {"polys", polys}};
}

DFamily d_family(std::uint32_t m, std::size_t min_i) {
  if (m < 1) throw std::invalid_argument("d_family: needs m >= 1");
  if (min_i >= m) return DFamily(m, m, {}, {});
  const std::size_t s = m - 1;  // order of M_nt(P,0,m)
  Truncation trunc;
  trunc.max_T_degree = s - min_i;
  // c_d is the T^d coefficient of det(I - M T) = H_{s-d,0,0}; the d x d
  // principal minor sum e_d = (-1)^d c_d is the (-U)^{s-d} coefficient
  // of det(M - U I).
  auto c = berkowitz(nt_matrix(m), trunc);
  std::vector<ZPoly> polys;
  std::vector<int> eps;
  for (std::size_t i = min_i; i < m; ++i) {
    const std::size_t d = s - i;
    const ZPoly& h = c[d];
    ZPoly e = d % 2 == 0 ? h : -h;
    if (e.is_zero() && h.is_zero())
      eps.push_back(0);
    else if (e == h)
      eps.push_back(1);
    else if (e == -h)
      eps.push_back(-1);
    else
      throw std::logic_error("d_family: D and H differ by more than a sign");
    polys.push_back(std::move(e));
  }
  return DFamily(m, min_i, std::move(polys), std::move(eps));
}

std::vector<ZPoly> d_family_literal(std::uint32_t m) {
  if (m < 1) throw std::invalid_argument("d_family_literal: needs m >= 1");
  ZMatrix shifted = nt_matrix(m);
  const ZPoly u = ZPoly::variable(IntegerRing{}, Var::u());
  for (std::size_t i = 1; i <= shifted.order(); ++i) shifted.at(i, i) -= u;
  ZPoly d = det(shifted);
  std::vector<ZPoly> out;
  for (std::uint32_t i = 0; i < m; ++i) {
    ZPoly c = d.coefficient_in(Var::u(), i);
    out.push_back(i % 2 == 0 ? c : -c);
  }
  return out;
}

ZPoly d_m3_formula(std::uint32_t m) {
  ZPoly sum;
  for (long j = 1; j <= static_cast<long>(m) - 1; ++j)
    for (long k = j + 1; k <= static_cast<long>(m) - 1; ++k)
      sum += a_or_zero(j, m) * a_or_zero(k, m) - a_or_zero(2 * j - k, m) * a_or_zero(2 * k - j, m);
  return sum;
}

bool d_m3_formula_check(std::uint32_t m) {
  if (m < 3) throw std::invalid_argument("d_m3_formula_check: needs m >= 3");
  return d_family(m, m - 3).at(static_cast<long>(m) - 3) == d_m3_formula(m);
}

}  // namespace carlitz
