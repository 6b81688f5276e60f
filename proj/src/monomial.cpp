#include "carlitz/monomial.hpp"

#include <stdexcept>

namespace carlitz {

namespace {

constexpr std::uint32_t kSlots = 24;  // a_0..a_21, t, u
constexpr std::uint64_t kLowBits = 0x0101010101010101ull;

std::uint32_t slot_of(Var v) {
  if (v == Var::t()) return Monomial::kMaxA + 1;
  if (v == Var::u()) return Monomial::kMaxA + 2;
  return v.index();
}

Var var_of_slot(std::uint32_t slot) {
  if (slot == Monomial::kMaxA + 1) return Var::t();
  if (slot == Monomial::kMaxA + 2) return Var::u();
  return Var::a(slot);
}

}  // namespace

Var Var::a(std::uint32_t index) {
  if (index > Monomial::kMaxA)
    throw std::out_of_range("Var::a: subscript " + std::to_string(index) + " beyond a" +
                            std::to_string(Monomial::kMaxA));
  return Var(index);
}

Var Var::from_id(std::uint32_t id) {
  if (id == kT || id == kU) return Var(id);
  return a(id);
}

std::uint32_t Var::index() const {
  if (!is_a()) throw std::logic_error("Var::index: not a coefficient variable");
  return id_;
}

std::string Var::name() const {
  if (id_ == kT) return "t";
  if (id_ == kU) return "u";
  return "a" + std::to_string(id_);
}

void Monomial::locate(Var v, std::size_t& word, unsigned& shift) {
  std::uint32_t pos = kSlots - 1 - slot_of(v);  // 0 = most significant byte
  word = pos / 8;
  shift = 8 * (7 - pos % 8);
}

Monomial Monomial::of(Var v, std::uint32_t exp) {
  if (exp > kMaxExponent) throw std::overflow_error("Monomial: exponent above " + std::to_string(kMaxExponent));
  Monomial m;
  std::size_t w;
  unsigned s;
  locate(v, w, s);
  m.words_[w] = std::uint64_t{exp} << s;
  m.degree_ = exp;
  return m;
}

std::uint32_t Monomial::exponent(Var v) const {
  std::size_t w;
  unsigned s;
  locate(v, w, s);
  return static_cast<std::uint32_t>((words_[w] >> s) & 0xFF);
}

FactorList Monomial::factors() const {
  FactorList out;
  for (std::uint32_t slot = 0; slot < kSlots; ++slot) {
    Var v = var_of_slot(slot);
    if (auto e = exponent(v)) out.push_back({v, e});
  }
  return out;
}

Monomial Monomial::without(Var v) const {
  std::size_t w;
  unsigned s;
  locate(v, w, s);
  Monomial m = *this;
  m.degree_ -= exponent(v);
  m.words_[w] &= ~(std::uint64_t{0xFF} << s);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t w = 0; w < kWords; ++w)
    for (unsigned s = 0; s < 64; s += 8)
      if (((words_[w] >> s) & 0xFF) > ((other.words_[w] >> s) & 0xFF)) return false;
  return true;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial m;
  for (std::size_t w = 0; w < Monomial::kWords; ++w) {
    std::uint64_t a = x.words_[w];
    std::uint64_t b = y.words_[w];
    std::uint64_t sum = a + b;
    // A byte overflowed iff a carry entered the next byte or left the word.
    std::uint64_t carries = (sum ^ a ^ b) & (kLowBits << 8);
    if (carries != 0 || sum < a) throw std::overflow_error("Monomial: exponent overflow");
    m.words_[w] = sum;
  }
  m.degree_ = x.degree_ + y.degree_;
  return m;
}

std::string Monomial::render() const {
  if (is_one()) return "1";
  std::string out;
  for (const auto& f : factors()) {
    if (!out.empty()) out += '*';
    out += f.var.name();
    if (f.exp != 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = words_[0] * 0x9E3779B97F4A7C15ull;
  h ^= words_[1] + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
  h ^= words_[2] + 0x94D049BB133111EBull + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

}  // namespace carlitz
