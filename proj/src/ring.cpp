#include "carlitz/ring.hpp"

namespace carlitz {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (!is_prime(modulus))
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(modulus) + " is not prime");
}

PrimeField::value_type PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_bigint(const BigInt& v) const {
  BigInt r = v % p_;
  if (r.sign() < 0) r += p_;
  return r.convert_to<value_type>();
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const {
  value_type result = one();
  while (e != 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

RationalField::value_type RationalField::div(const value_type& a, const value_type& b) const {
  if (b.is_zero()) throw std::domain_error("RationalField: division by zero");
  return a / b;
}

}  // namespace carlitz
