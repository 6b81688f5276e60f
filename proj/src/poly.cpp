#include "carlitz/poly.hpp"

#include <cctype>

namespace carlitz {

FpPoly reduce_mod(const ZPoly& p, std::uint32_t prime) {
  PrimeField field(prime);
  std::vector<FpPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    auto c = field.from_bigint(t.coeff);
    if (c != 0) terms.push_back({t.mono, c});
  }
  return FpPoly::from_terms(field, std::move(terms));
}

QPoly to_rational(const ZPoly& p) {
  std::vector<QPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, Rational(t.coeff)});
  return QPoly::from_terms(RationalField{}, std::move(terms));
}

namespace detail {
namespace {

void skip_space(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::string read_digits(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) throw std::invalid_argument("parse_poly: expected digits at position " + std::to_string(start));
  return s.substr(start, pos - start);
}

[[noreturn]] void fail(const std::string& s, std::size_t pos) {
  throw std::invalid_argument("parse_poly: unexpected input at position " + std::to_string(pos) + " in \"" + s + "\"");
}

}  // namespace

Rational parse_number(const std::string& text, std::size_t& pos) {
  BigInt num(read_digits(text, pos));
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    BigInt den(read_digits(text, pos));
    if (den.is_zero()) throw std::invalid_argument("parse_poly: zero denominator");
    return Rational(num, den);
  }
  return Rational(num);
}

std::vector<std::pair<Monomial, Rational>> parse_terms(const std::string& text) {
  std::vector<std::pair<Monomial, Rational>> out;
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) throw std::invalid_argument("parse_poly: empty input");
  bool first = true;
  while (true) {
    skip_space(text, pos);
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_space(text, pos);
    } else if (!first) {
      fail(text, pos);
    }
    first = false;

    Rational coeff = sign;
    Monomial mono;
    while (true) {
      skip_space(text, pos);
      if (pos == text.size()) fail(text, pos);
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number(text, pos);
      } else if (c == 'a' || c == 't' || c == 'u') {
        ++pos;
        Var v = c == 't' ? Var::t() : c == 'u' ? Var::u() : Var::a(0);
        if (c == 'a') v = Var::a(std::stoul(read_digits(text, pos)));
        std::uint32_t exp = 1;
        skip_space(text, pos);
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_space(text, pos);
          exp = static_cast<std::uint32_t>(std::stoul(read_digits(text, pos)));
        }
        mono = mono * Monomial::of(v, exp);
      } else {
        fail(text, pos);
      }
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    out.emplace_back(std::move(mono), std::move(coeff));
  }
  return out;
}

}  // namespace detail
}  // namespace carlitz
