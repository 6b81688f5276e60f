#ifndef CARLITZ_MATRIX_HPP
#define CARLITZ_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "carlitz/poly.hpp"

namespace carlitz {

/// Dense square matrix of polynomials sharing one coefficient ring.
/// Indices are 1-based, as in every statement about these matrices.
template <class Ring>
class PolyMatrix {
 public:
  using poly_type = MultiPoly<Ring>;

  PolyMatrix() requires std::default_initializable<Ring> = default;
  PolyMatrix(std::size_t order, const Ring& ring)
      : ring_(ring), order_(order), entries_(order * order, poly_type(ring)) {}

  /// Rows must form a square grid over one ring.
  static PolyMatrix from_rows(const std::vector<std::vector<poly_type>>& rows, const Ring& ring) {
    PolyMatrix m(rows.size(), ring);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw std::invalid_argument("PolyMatrix: rows do not form a square grid");
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (!(rows[i][j].ring() == ring)) throw RingMismatch("PolyMatrix: entry ring differs from matrix ring");
        m.at(i + 1, j + 1) = rows[i][j];
      }
    }
    return m;
  }

  static PolyMatrix identity(std::size_t order, const Ring& ring) {
    PolyMatrix m(order, ring);
    for (std::size_t i = 1; i <= order; ++i) m.at(i, i) = poly_type::constant(ring, ring.one());
    return m;
  }

  std::size_t order() const { return order_; }
  const Ring& ring() const { return ring_; }

  poly_type& at(std::size_t i, std::size_t j) { return entries_[index(i, j)]; }
  const poly_type& at(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }

  PolyMatrix transpose() const {
    PolyMatrix m(order_, ring_);
    for (std::size_t i = 1; i <= order_; ++i)
      for (std::size_t j = 1; j <= order_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.order_ != y.order_) throw std::invalid_argument("PolyMatrix: order mismatch in product");
    PolyMatrix m(x.order_, x.ring_);
    for (std::size_t i = 1; i <= x.order_; ++i)
      for (std::size_t j = 1; j <= x.order_; ++j) {
        poly_type acc(x.ring_);
        for (std::size_t k = 1; k <= x.order_; ++k) acc += x.at(i, k) * y.at(k, j);
        m.at(i, j) = std::move(acc);
      }
    return m;
  }

  friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
    return x.order_ == y.order_ && x.ring_ == y.ring_ && x.entries_ == y.entries_;
  }

  std::vector<std::vector<std::string>> render() const {
    std::vector<std::vector<std::string>> out(order_);
    for (std::size_t i = 1; i <= order_; ++i)
      for (std::size_t j = 1; j <= order_; ++j) out[i - 1].push_back(at(i, j).render());
    return out;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > order_ || j > order_)
      throw std::out_of_range("PolyMatrix: index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside order " + std::to_string(order_));
    return (i - 1) * order_ + (j - 1);
  }

  Ring ring_;
  std::size_t order_ = 0;
  std::vector<poly_type> entries_;
};

using ZMatrix = PolyMatrix<IntegerRing>;
using FpMatrix = PolyMatrix<PrimeField>;

/// Deletes the listed rows and columns (1-based), keeping the remaining
/// entries in their original order. Both lists must remove the same count.
template <class Ring>
PolyMatrix<Ring> submatrix_minor(const PolyMatrix<Ring>& m, const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) {
  std::set<std::size_t> drop_rows(rows.begin(), rows.end());
  std::set<std::size_t> drop_cols(cols.begin(), cols.end());
  if (drop_rows.size() != drop_cols.size())
    throw std::invalid_argument("submatrix_minor: unequal numbers of rows and columns removed");
  for (auto r : drop_rows)
    if (r < 1 || r > m.order()) throw std::out_of_range("submatrix_minor: row index out of range");
  for (auto c : drop_cols)
    if (c < 1 || c > m.order()) throw std::out_of_range("submatrix_minor: column index out of range");

  std::vector<std::size_t> keep_rows, keep_cols;
  for (std::size_t i = 1; i <= m.order(); ++i) {
    if (!drop_rows.count(i)) keep_rows.push_back(i);
    if (!drop_cols.count(i)) keep_cols.push_back(i);
  }
  PolyMatrix<Ring> out(keep_rows.size(), m.ring());
  for (std::size_t i = 0; i < keep_rows.size(); ++i)
    for (std::size_t j = 0; j < keep_cols.size(); ++j) out.at(i + 1, j + 1) = m.at(keep_rows[i], keep_cols[j]);
  return out;
}

/// M_l: row l and column l deleted.
template <class Ring>
PolyMatrix<Ring> principal_minor_matrix(const PolyMatrix<Ring>& m, std::size_t l) {
  return submatrix_minor(m, {l}, {l});
}

/// M_{i,j}: row i and column j deleted.
template <class Ring>
PolyMatrix<Ring> minor_matrix(const PolyMatrix<Ring>& m, std::size_t i, std::size_t j) {
  return submatrix_minor(m, {i}, {j});
}

}  // namespace carlitz

#endif  // CARLITZ_MATRIX_HPP
