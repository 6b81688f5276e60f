#ifndef CARLITZ_RING_HPP
#define CARLITZ_RING_HPP

// Coefficient rings for MultiPoly: the integers, prime fields and the
// rationals. A ring object is a value; elements are plain values of
// ring::value_type and every operation goes through the ring.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace carlitz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Trial division; intended for the small moduli used here.
bool is_prime(std::uint64_t n) noexcept;

/// The integers ℤ with arbitrary precision.
class IntegerRing {
 public:
  using value_type = BigInt;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool is_negative(const value_type& a) const { return a.sign() < 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  std::string to_string(const value_type& a) const { return a.str(); }
  value_type parse(const std::string& digits) const { return value_type(digits); }

  std::string name() const { return "ZZ"; }
  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

/// 𝔽_p for a prime p. Elements are representatives in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_int(long long v) const;
  value_type from_bigint(const BigInt& v) const;

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;
  value_type pow(value_type a, std::uint64_t e) const;
  bool is_zero(value_type a) const { return a == 0; }
  bool is_negative(value_type) const { return false; }
  bool is_one(value_type a) const { return a == one(); }

  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(const std::string& digits) const { return from_bigint(BigInt(digits)); }

  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

 private:
  std::uint32_t p_;
};

/// ℚ as exact fractions, always in lowest terms with positive denominator.
class RationalField {
 public:
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type div(const value_type& a, const value_type& b) const;
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool is_negative(const value_type& a) const { return a.sign() < 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  std::string to_string(const value_type& a) const { return a.str(); }
  value_type parse(const std::string& text) const { return value_type(text); }

  std::string name() const { return "QQ"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace carlitz

#endif  // CARLITZ_RING_HPP
