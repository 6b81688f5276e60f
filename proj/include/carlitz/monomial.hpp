#ifndef CARLITZ_MONOMIAL_HPP
#define CARLITZ_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include <boost/container/small_vector.hpp>

namespace carlitz {

/// A variable of the universe a_0, a_1, ..., t, u.
/// Ids order the universe: a_i has id i, then t, then the auxiliary u
/// used for eigenvalue expansions det(M - u*I).
class Var {
 public:
  static constexpr std::uint32_t kT = 0xFFFFFF00u;
  static constexpr std::uint32_t kU = kT + 1;

  static Var a(std::uint32_t index);
  static constexpr Var t() { return Var(kT); }
  static constexpr Var u() { return Var(kU); }
  static Var from_id(std::uint32_t id);

  constexpr std::uint32_t id() const { return id_; }
  constexpr bool is_a() const { return id_ < kT; }
  /// Subscript of a coefficient variable a_i.
  std::uint32_t index() const;
  std::string name() const;

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  constexpr explicit Var(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

struct VarPower {
  Var var;
  std::uint32_t exp;
  friend bool operator==(const VarPower&, const VarPower&) = default;
};

using FactorList = boost::container::small_vector<VarPower, 8>;

/// Power product over the fixed universe a_0..a_{kMaxA}, t, u, packed one
/// byte per variable into three machine words. The byte order makes the
/// word-wise comparison the tie-break of the canonical order directly:
/// u is most significant, then t, then a_{kMaxA} down to a_0.
class Monomial {
 public:
  static constexpr std::uint32_t kMaxA = 21;
  static constexpr std::uint32_t kMaxExponent = 255;

  Monomial() = default;
  static Monomial of(Var v, std::uint32_t exp = 1);

  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(Var v) const;
  bool is_one() const { return degree_ == 0; }
  /// Total degree restricted to the a_i variables.
  std::uint32_t a_degree() const { return degree_ - exponent(Var::t()) - exponent(Var::u()); }

  /// (variable, exponent) pairs with positive exponent, increasing variable id.
  FactorList factors() const;

  /// The monomial with every occurrence of v removed.
  Monomial without(Var v) const;
  /// True iff this divides other.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.degree_ == y.degree_ && x.words_ == y.words_;
  }
  friend bool canonical_before(const Monomial& x, const Monomial& y) noexcept {
    if (x.degree_ != y.degree_) return x.degree_ > y.degree_;
    return x.words_ < y.words_;
  }

  /// e.g. "a0^2*a3*t"; the empty product renders as "1".
  std::string render() const;
  std::size_t hash() const noexcept;

 private:
  static constexpr std::size_t kWords = 3;
  static void locate(Var v, std::size_t& word, unsigned& shift);

  std::array<std::uint64_t, kWords> words_{};
  std::uint32_t degree_ = 0;
};

/// Canonical term order: higher total degree first; among equal degrees the
/// monomial with the smaller exponent at the highest variable where the two
/// differ comes first (u, then t, then a_m, ..., a_0 are examined in turn).
/// This is a monomial order, so multiplying by a monomial keeps a sorted
/// sequence sorted.
bool canonical_before(const Monomial& x, const Monomial& y) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace carlitz

#endif  // CARLITZ_MONOMIAL_HPP
