#ifndef CARLITZ_POLY_HPP
#define CARLITZ_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/monomial.hpp"
#include "carlitz/ring.hpp"

namespace carlitz {

/// Sparse multivariate polynomial over a single coefficient ring, in the
/// variables a_0, a_1, ..., t (and the auxiliary u).
///
/// Terms are kept in canonical order (see canonical_before) with unique
/// monomials and nonzero coefficients, so structural equality is
/// mathematical equality and render() is canonical.
template <class Ring>
class MultiPoly {
 public:
  using ring_type = Ring;
  using value_type = typename Ring::value_type;

  struct Term {
    Monomial mono;
    value_type coeff;
  };

  MultiPoly() requires std::default_initializable<Ring> = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(const Ring& ring, value_type c) {
    MultiPoly p(ring);
    if (!ring.is_zero(c)) p.terms_.push_back({Monomial(), std::move(c)});
    return p;
  }
  static MultiPoly constant(const Ring& ring, long long c) { return constant(ring, ring.from_int(c)); }
  static MultiPoly variable(const Ring& ring, Var v, std::uint32_t exp = 1) {
    return monomial(ring, Monomial::of(v, exp), ring.one());
  }
  static MultiPoly monomial(const Ring& ring, Monomial m, value_type c) {
    MultiPoly p(ring);
    if (!ring.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  /// Builds from arbitrary (monomial, coefficient) pairs; merges duplicates.
  static MultiPoly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  value_type constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return ring_.zero();
  }

  /// -1 for the zero polynomial.
  long total_degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.front().mono.degree()); }
  long degree_in(Var v) const;
  bool is_homogeneous() const;

  value_type coefficient(const Monomial& m) const;
  /// Coefficient of v^exp viewed as a polynomial in v over the other variables.
  MultiPoly coefficient_in(Var v, std::uint32_t exp) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const value_type& c) const;
  MultiPoly times_monomial(const Monomial& m) const;
  MultiPoly pow(unsigned e) const;
  /// Drops every term whose exponent in v exceeds max_exp (reduction mod v^{max_exp+1}).
  MultiPoly truncated(Var v, std::uint32_t max_exp) const;

  friend MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) { return merge(x, y, false); }
  friend MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) { return merge(x, y, true); }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) { return multiply(x, y); }

  friend bool operator==(const MultiPoly& x, const MultiPoly& y) {
    if (!(x.ring_ == y.ring_) || x.terms_.size() != y.terms_.size()) return false;
    for (std::size_t i = 0; i < x.terms_.size(); ++i)
      if (!(x.terms_[i].mono == y.terms_[i].mono) || x.terms_[i].coeff != y.terms_[i].coeff) return false;
    return true;
  }

  /// Full evaluation; every variable occurring in the polynomial must be assigned.
  value_type evaluate(const std::map<Var, value_type>& assignment) const;
  /// Substitutes the assigned variables and keeps the others symbolic.
  MultiPoly specialize(const std::map<Var, value_type>& assignment) const;

  /// Canonical text form, e.g. "a1*a2 - a0*a3".
  std::string render() const;

 private:
  static void check_same_ring(const MultiPoly& x, const MultiPoly& y) {
    if (!(x.ring_ == y.ring_))
      throw RingMismatch("MultiPoly: ring mismatch (" + x.ring_.name() + " vs " + y.ring_.name() + ")");
  }
  static MultiPoly merge(const MultiPoly& x, const MultiPoly& y, bool subtract);
  static MultiPoly multiply(const MultiPoly& x, const MultiPoly& y);

  Ring ring_;
  std::vector<Term> terms_;
};

using ZPoly = MultiPoly<IntegerRing>;
using FpPoly = MultiPoly<PrimeField>;
using QPoly = MultiPoly<RationalField>;

/// Coefficient-wise reduction ℤ → 𝔽_p; vanishing terms are dropped.
FpPoly reduce_mod(const ZPoly& p, std::uint32_t prime);
QPoly to_rational(const ZPoly& p);

/// Parses the canonical text form (and any reasonable permutation of it:
/// terms and factors in any order, explicit '*', '^' for powers).
template <class Ring>
MultiPoly<Ring> parse_poly(const std::string& text, const Ring& ring);
inline ZPoly parse_zpoly(const std::string& text) { return parse_poly(text, IntegerRing{}); }

/// Shorthand for the coefficient variable a_i over ℤ.
inline ZPoly avar(std::uint32_t i) { return ZPoly::variable(IntegerRing{}, Var::a(i)); }
inline ZPoly tvar() { return ZPoly::variable(IntegerRing{}, Var::t()); }
inline ZPoly zconst(long long c) { return ZPoly::constant(IntegerRing{}, c); }

// ---------------------------------------------------------------------------

template <class Ring>
MultiPoly<Ring> MultiPoly<Ring>::from_terms(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return canonical_before(a.mono, b.mono); });
  MultiPoly p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = ring.add(p.terms_.back().coeff, t.coeff);
      if (ring.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!ring.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

template <class Ring>
long MultiPoly<Ring>::degree_in(Var v) const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.mono.exponent(v));
  return d;
}

template <class Ring>
bool MultiPoly<Ring>::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

template <class Ring>
typename MultiPoly<Ring>::value_type MultiPoly<Ring>::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return canonical_before(t.mono, key); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return ring_.zero();
}

template <class Ring>
MultiPoly<Ring> MultiPoly<Ring>::coefficient_in(Var v, std::uint32_t exp) const {
  std::vector<Term> picked;
  for (const auto& t : terms_)
    if (t.mono.exponent(v) == exp) picked.push_back({t.mono.without(v), t.coeff});
  return from_terms(ring_, std::move(picked));
}

template <class Ring>
MultiPoly<Ring> MultiPoly<Ring>::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = ring_.neg(t.coeff);
  return p;
}

template <class Ring>
MultiPoly<Ring> MultiPoly<Ring>::scaled(const value_type& c) const {
  MultiPoly p(ring_);
  if (ring_.is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto v = ring_.mul(t.coeff, c);
    if (!ring_.is_zero(v)) p.terms_.push_back({t.mono, std::move(v)});
  }
  return p;
}

template <class Ring>
MultiPoly<Ring> MultiPoly<Ring>::times_monomial(const Monomial& m) const {
  MultiPoly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff});
  return p;
}

template <class Ring>
MultiPoly<Ring> MultiPoly<Ring>::pow(unsigned e) const {
  MultiPoly result = constant(ring_, ring_.one());
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

template <class Ring>
MultiPoly<Ring> MultiPoly<Ring>::truncated(Var v, std::uint32_t max_exp) const {
  MultiPoly p(ring_);
  for (const auto& t : terms_)
    if (t.mono.exponent(v) <= max_exp) p.terms_.push_back(t);
  return p;
}

template <class Ring>
MultiPoly<Ring> MultiPoly<Ring>::merge(const MultiPoly& x, const MultiPoly& y, bool subtract) {
  check_same_ring(x, y);
  const Ring& r = x.ring_;
  MultiPoly p(r);
  p.terms_.reserve(x.terms_.size() + y.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < x.terms_.size() && j < y.terms_.size()) {
    const Term& a = x.terms_[i];
    const Term& b = y.terms_[j];
    if (a.mono == b.mono) {
      auto c = subtract ? r.sub(a.coeff, b.coeff) : r.add(a.coeff, b.coeff);
      if (!r.is_zero(c)) p.terms_.push_back({a.mono, std::move(c)});
      ++i;
      ++j;
    } else if (canonical_before(a.mono, b.mono)) {
      p.terms_.push_back(a);
      ++i;
    } else {
      p.terms_.push_back({b.mono, subtract ? r.neg(b.coeff) : b.coeff});
      ++j;
    }
  }
  for (; i < x.terms_.size(); ++i) p.terms_.push_back(x.terms_[i]);
  for (; j < y.terms_.size(); ++j) p.terms_.push_back({y.terms_[j].mono, subtract ? r.neg(y.terms_[j].coeff) : y.terms_[j].coeff});
  return p;
}

// Heap merge of the |x| sorted streams x_i * y (Johnson's method); each
// stream is sorted because canonical_before is a monomial order.
template <class Ring>
MultiPoly<Ring> MultiPoly<Ring>::multiply(const MultiPoly& x, const MultiPoly& y) {
  check_same_ring(x, y);
  const Ring& r = x.ring_;
  if (x.is_zero() || y.is_zero()) return MultiPoly(r);
  const MultiPoly& small = x.size() <= y.size() ? x : y;
  const MultiPoly& large = x.size() <= y.size() ? y : x;
  if (small.size() == 1) {
    const Term& s = small.terms_[0];
    MultiPoly p(r);
    p.terms_.reserve(large.size());
    for (const auto& t : large.terms_) {
      auto c = r.mul(s.coeff, t.coeff);
      if (!r.is_zero(c)) p.terms_.push_back({s.mono * t.mono, std::move(c)});
    }
    return p;
  }

  struct Cursor {
    Monomial mono;
    std::uint32_t i;
    std::uint32_t j;
  };
  auto later = [](const Cursor& a, const Cursor& b) { return canonical_before(b.mono, a.mono); };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
  for (std::uint32_t i = 0; i < small.size(); ++i) heap.push({small.terms_[i].mono * large.terms_[0].mono, i, 0});

  MultiPoly p(r);
  p.terms_.reserve(small.size() + large.size());
  while (!heap.empty()) {
    Cursor c = heap.top();
    heap.pop();
    auto coeff = r.mul(small.terms_[c.i].coeff, large.terms_[c.j].coeff);
    if (!p.terms_.empty() && p.terms_.back().mono == c.mono) {
      p.terms_.back().coeff = r.add(p.terms_.back().coeff, coeff);
    } else {
      if (!p.terms_.empty() && r.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back({c.mono, std::move(coeff)});
    }
    if (c.j + 1 < large.size()) {
      c.j += 1;
      c.mono = small.terms_[c.i].mono * large.terms_[c.j].mono;
      heap.push(std::move(c));
    }
  }
  if (!p.terms_.empty() && r.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

template <class Ring>
typename MultiPoly<Ring>::value_type MultiPoly<Ring>::evaluate(const std::map<Var, value_type>& assignment) const {
  value_type total = ring_.zero();
  for (const auto& t : terms_) {
    value_type v = t.coeff;
    for (const auto& f : t.mono.factors()) {
      auto it = assignment.find(f.var);
      if (it == assignment.end())
        throw std::invalid_argument("MultiPoly::evaluate: no value assigned to " + f.var.name());
      for (std::uint32_t e = 0; e < f.exp; ++e) v = ring_.mul(v, it->second);
    }
    total = ring_.add(total, v);
  }
  return total;
}

template <class Ring>
MultiPoly<Ring> MultiPoly<Ring>::specialize(const std::map<Var, value_type>& assignment) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    value_type v = t.coeff;
    Monomial rest;
    for (const auto& f : t.mono.factors()) {
      auto it = assignment.find(f.var);
      if (it == assignment.end()) {
        rest = rest * Monomial::of(f.var, f.exp);
      } else {
        for (std::uint32_t e = 0; e < f.exp; ++e) v = ring_.mul(v, it->second);
      }
    }
    out.push_back({std::move(rest), std::move(v)});
  }
  return from_terms(ring_, std::move(out));
}

template <class Ring>
std::string MultiPoly<Ring>::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = ring_.is_negative(t.coeff);
    value_type mag = negative ? ring_.neg(t.coeff) : t.coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      out += ring_.to_string(mag);
    } else {
      if (!ring_.is_one(mag)) out += ring_.to_string(mag) + "*";
      out += t.mono.render();
    }
  }
  return out;
}

namespace detail {
Rational parse_number(const std::string& text, std::size_t& pos);
std::vector<std::pair<Monomial, Rational>> parse_terms(const std::string& text);
}  // namespace detail

template <class Ring>
MultiPoly<Ring> parse_poly(const std::string& text, const Ring& ring) {
  std::vector<typename MultiPoly<Ring>::Term> terms;
  for (auto& [mono, q] : detail::parse_terms(text)) {
    typename Ring::value_type c;
    if constexpr (std::is_same_v<Ring, RationalField>) {
      c = q;
    } else if constexpr (std::is_same_v<Ring, PrimeField>) {
      c = ring.mul(ring.from_bigint(numerator(q)), ring.inv(ring.from_bigint(denominator(q))));
    } else {
      if (denominator(q) != 1) throw std::invalid_argument("parse_poly: non-integral coefficient over ZZ");
      c = numerator(q);
    }
    terms.push_back({std::move(mono), std::move(c)});
  }
  return MultiPoly<Ring>::from_terms(ring, std::move(terms));
}

}  // namespace carlitz

#endif  // CARLITZ_POLY_HPP
