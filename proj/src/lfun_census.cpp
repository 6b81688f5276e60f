#include "carlitz/lfun_census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "carlitz/carlitz_matrices.hpp"
#include "carlitz/coefficient_lab.hpp"

namespace carlitz {

namespace {

using nlohmann::json;

struct Evaluator {
  struct Term {
    std::uint32_t coeff;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> powers;  // (a-index, exponent)
  };
  std::vector<Term> terms;
  // 𝔽_2 shortcut: x^e = x on points, so a term is the bitmask of its
  // variables; masks that occur an even number of times cancel.
  std::vector<std::uint64_t> masks;
};

Evaluator make_evaluator(const FpPoly& p, std::uint32_t prime, std::uint32_t m) {
  Evaluator ev;
  std::map<std::uint64_t, unsigned> parity;
  for (const auto& t : p.terms()) {
    Evaluator::Term term{t.coeff, {}};
    std::uint64_t mask = 0;
    for (const auto& f : t.mono.factors()) {
      if (!f.var.is_a() || f.var.index() > m)
        throw std::invalid_argument("support: equation uses a variable outside a_0..a_m");
      term.powers.push_back({f.var.index(), f.exp});
      mask |= std::uint64_t{1} << (m - f.var.index());
    }
    ev.terms.push_back(std::move(term));
    if (prime == 2) parity[mask] ^= 1u;
  }
  for (const auto& [mask, odd] : parity)
    if (odd) ev.masks.push_back(mask);
  return ev;
}

bool vanishes(const Evaluator& ev, const PrimeField& field, std::uint64_t index, const std::vector<std::uint32_t>& point) {
  if (field.modulus() == 2) {
    unsigned v = 0;
    for (auto mask : ev.masks) v ^= (index & mask) == mask ? 1u : 0u;
    return v == 0;
  }
  std::uint32_t sum = 0;
  for (const auto& t : ev.terms) {
    std::uint32_t v = t.coeff;
    for (const auto& [i, e] : t.powers) v = field.mul(v, field.pow(point[i], e));
    sum = field.add(sum, v);
  }
  return sum == 0;
}

// Every monomial of total degree d in a_0..a_top.
void monomials_of_degree(std::uint32_t top, std::uint32_t d, std::vector<Monomial>& out, std::uint32_t from = 0,
                         Monomial acc = {}) {
  if (d == 0) {
    out.push_back(acc);
    return;
  }
  for (std::uint32_t i = from; i <= top; ++i) monomials_of_degree(top, d - 1, out, i, acc * Monomial::of(Var::a(i)));
}

long max_a_index(const ZPoly& p) {
  long top = -1;
  for (const auto& t : p.terms())
    for (const auto& f : t.mono.factors()) {
      if (!f.var.is_a()) throw std::invalid_argument("ideal_membership_linear: polynomials must lie in ℤ[a_*]");
      top = std::max<long>(top, f.var.index());
    }
  return top;
}

struct MonomialLess {
  bool operator()(const Monomial& x, const Monomial& y) const { return canonical_before(x, y); }
};

}  // namespace

std::uint64_t point_count(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i <= m; ++i) {
    count *= p;
    if (count > kEnumerationLimit)
      throw EnumerationGuard(std::to_string(p) + "^" + std::to_string(m + 1) + " points exceed the enumeration limit 2^22");
  }
  return count;
}

std::vector<std::uint32_t> point_from_index(std::uint64_t index, std::uint32_t p, std::uint32_t m) {
  std::vector<std::uint32_t> point(m + 1);
  for (std::uint32_t i = m + 1; i-- > 0;) {
    point[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return point;
}

std::string point_digits(const std::vector<std::uint32_t>& point) {
  std::string s;
  for (auto d : point) s += std::to_string(d);
  return s;
}

unsigned lab_threads() {
  const char* env = std::getenv("CARLITZ_LAB_THREADS");
  if (!env) return 1;
  long v = std::strtol(env, nullptr, 10);
  return static_cast<unsigned>(std::clamp<long>(v, 1, 256));
}

void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(lab_threads(), count));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::uint64_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

CharPoly<PrimeField> l_function(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& coeffs) {
  if (!is_prime(q)) throw std::invalid_argument("l_function: q must be prime");
  return char_poly_rev(build_M_over_field(q, n, coeffs));
}

long analytic_rank(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& coeffs) {
  auto l = l_function(q, n, coeffs);
  const long k_bar = static_cast<long>(l.coeffs.size()) - 1;
  return k_bar - l.degree();
}

long analytic_rank_oracle(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& coeffs) {
  if (!is_prime(q)) throw std::invalid_argument("analytic_rank_oracle: q must be prime");
  const FpMatrix m = build_M_over_field(q, n, coeffs);
  const PrimeField& field = m.ring();
  // I - M T with T carried by the auxiliary variable u.
  FpMatrix shifted(m.order(), field);
  const FpPoly T = FpPoly::variable(field, Var::u());
  for (std::size_t i = 1; i <= m.order(); ++i)
    for (std::size_t j = 1; j <= m.order(); ++j)
      shifted.at(i, j) = (i == j ? FpPoly::constant(field, field.one()) : FpPoly(field)) - m.at(i, j) * T;
  return static_cast<long>(m.order()) - det_oracle_cofactor(shifted).degree_in(Var::u());
}

std::uint64_t RankCensus::total() const {
  std::uint64_t s = 0;
  for (const auto& [r, c] : histogram) s += c;
  return s;
}

std::uint64_t RankCensus::at_least(long l) const {
  std::uint64_t s = 0;
  for (const auto& [r, c] : histogram)
    if (r >= l) s += c;
  return s;
}

std::string RankCensus::csv() const {
  std::ostringstream out;
  out << "q,n,m,rank,count\n";
  for (const auto& [r, c] : histogram) out << q << ',' << n << ',' << m << ',' << r << ',' << c << '\n';
  return out.str();
}

json RankCensus::to_json() const {
  json hist = json::array();
  for (const auto& [r, c] : histogram) hist.push_back({{"rank", r}, {"count", c}});
  return {{"q", q}, {"n", n}, {"m", m}, {"exact_degree", exact_degree}, {"total", total()}, {"histogram", hist}};
}

RankCensus rank_census(std::uint32_t q, std::uint32_t n, std::uint32_t m, bool exact_degree) {
  if (!is_prime(q)) throw std::invalid_argument("rank_census: q must be prime");
  const std::uint64_t count = point_count(q, m);
  RankCensus census;
  census.q = q;
  census.n = n;
  census.m = m;
  census.exact_degree = exact_degree;
  census.ranks.assign(count, -1);
  parallel_for(count, [&](std::uint64_t index) {
    if (exact_degree && index % q == 0) return;  // a_m is the last digit
    census.ranks[index] = analytic_rank(q, n, point_from_index(index, q, m));
  });
  for (long r : census.ranks)
    if (r >= 0) ++census.histogram[r];
  return census;
}

bool SupportSet::contains(std::uint64_t index) const { return std::binary_search(points.begin(), points.end(), index); }

json SupportSet::to_json() const {
  json pts = json::array();
  for (auto index : points) pts.push_back(point_digits(point_from_index(index, p, m)));
  return {{"m", m}, {"p", p}, {"points", pts}};
}

std::vector<FpPoly> support_equations(SupportKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t n,
                                      std::uint32_t l) {
  const PrimeField field(p);
  std::vector<FpPoly> eqs;
  if (kind == SupportKind::xm) {
    if (m < 1 || l > m) throw std::invalid_argument("support: X(m,l) needs m >= 1 and l <= m");
    if (l == 0) return eqs;
    // D(m,i) = (-1)^{m-1-i} times the T^{m-1-i} coefficient of det(I - M T);
    // the sign does not change the zero set.
    ZMatrix nt = nt_matrix(m);
    FpMatrix reduced(nt.order(), field);
    for (std::size_t i = 1; i <= nt.order(); ++i)
      for (std::size_t j = 1; j <= nt.order(); ++j) reduced.at(i, j) = reduce_mod(nt.at(i, j), p);
    auto c = berkowitz(reduced);
    for (std::uint32_t i = 0; i < l; ++i) eqs.push_back(c[m - 1 - i]);
    return eqs;
  }
  if (p != 2) throw std::invalid_argument("support: X(2,n,m,l) is enumerated over 𝔽_2 only");
  if (m < 1) throw std::invalid_argument("support: X(2,n,m,l) needs m >= 1");
  const std::size_t k = m + n - 1;
  if (l > k + 1) throw std::invalid_argument("support: l exceeds k + 1");
  if (l == 0) return eqs;
  // Reduction mod p commutes with the characteristic polynomial, so the
  // pass runs over 𝔽_p[a_*][t] directly.
  ZMatrix nt = build_M_nt(TwistSpec::symbolic(2, n, m));
  FpMatrix reduced(nt.order(), field);
  for (std::size_t i = 1; i <= nt.order(); ++i)
    for (std::size_t j = 1; j <= nt.order(); ++j) reduced.at(i, j) = reduce_mod(nt.at(i, j), p);
  auto c = berkowitz(reduced);
  for (std::size_t i = 0; i < l; ++i)
    for (std::uint32_t j = 0; j <= n * (k - i); ++j) {
      FpPoly h = c[k - i].coefficient_in(Var::t(), j);
      if (!h.is_zero()) eqs.push_back(std::move(h));
    }
  return eqs;
}

SupportSet common_zeros(const std::vector<FpPoly>& equations, std::uint32_t p, std::uint32_t m) {
  const PrimeField field(p);
  const std::uint64_t count = point_count(p, m);
  std::vector<Evaluator> evs;
  for (const auto& e : equations) evs.push_back(make_evaluator(e, p, m));
  std::vector<char> zero(count, 0);
  parallel_for(count, [&](std::uint64_t index) {
    std::vector<std::uint32_t> point;
    if (p != 2) point = point_from_index(index, p, m);
    for (const auto& ev : evs)
      if (!vanishes(ev, field, index, point)) return;
    zero[index] = 1;
  });
  SupportSet set;
  set.m = m;
  set.p = p;
  for (std::uint64_t i = 0; i < count; ++i)
    if (zero[i]) set.points.push_back(i);
  return set;
}

SupportSet support_points(SupportKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t n, std::uint32_t l) {
  point_count(p, m);  // guard before any symbolic work
  return common_zeros(support_equations(kind, p, m, n, l), p, m);
}

json SupportComparison::to_json() const {
  return {{"m", m},
          {"n", n},
          {"l", l},
          {"xq_size", xq_size},
          {"xm_size", xm_size},
          {"equal", equal},
          {"projective_equal", projective_equal},
          {"xm_in_xq", xm_in_xq},
          {"only_xq", only_xq},
          {"only_xm", only_xm}};
}

SupportComparison support_equality_check(std::uint32_t m, std::uint32_t n, std::uint32_t l) {
  const SupportSet xq = support_points(SupportKind::xq, 2, m, n, l);
  const SupportSet xm = support_points(SupportKind::xm, 2, m, n, l);
  SupportComparison cmp{m, n, l, xq.size(), xm.size(), xq == xm, true, true, {}, {}};
  for (auto i : xq.points)
    if (!xm.contains(i)) {
      cmp.only_xq.push_back(point_digits(point_from_index(i, 2, m)));
      if (i != 0) cmp.projective_equal = false;
    }
  for (auto i : xm.points)
    if (!xq.contains(i)) {
      cmp.only_xm.push_back(point_digits(point_from_index(i, 2, m)));
      cmp.xm_in_xq = false;
      if (i != 0) cmp.projective_equal = false;
    }
  return cmp;
}

json MembershipCertificate::to_json() const {
  json c = json::array();
  for (const auto& p : cofactors) c.push_back(p.render());
  return {{"cofactors", c}};
}

std::optional<MembershipCertificate> ideal_membership_linear(const ZPoly& target, const std::vector<ZPoly>& basis,
                                                             std::uint32_t max_deg) {
  if (!target.is_homogeneous()) throw std::invalid_argument("ideal_membership_linear: target is not homogeneous");
  long top = max_a_index(target);
  for (const auto& b : basis) {
    if (!b.is_homogeneous()) throw std::invalid_argument("ideal_membership_linear: basis element is not homogeneous");
    top = std::max(top, max_a_index(b));
  }
  const RationalField Q;
  MembershipCertificate cert;
  cert.cofactors.assign(basis.size(), QPoly(Q));
  if (target.is_zero()) return cert;

  // Unknowns: one coefficient per (basis element, cofactor monomial).
  struct Unknown {
    std::size_t basis;
    Monomial mono;
  };
  std::vector<Unknown> unknowns;
  const long target_deg = target.total_degree();
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (basis[b].is_zero()) continue;
    long e = target_deg - basis[b].total_degree();
    if (e < 0 || e > static_cast<long>(max_deg)) continue;
    std::vector<Monomial> monos;
    monomials_of_degree(static_cast<std::uint32_t>(std::max<long>(top, 0)), static_cast<std::uint32_t>(e), monos);
    for (const auto& mono : monos) unknowns.push_back({b, mono});
  }

  // One equation per monomial of the target degree that can occur.
  std::map<Monomial, std::size_t, MonomialLess> rows;
  for (const auto& t : target.terms()) rows.emplace(t.mono, 0);
  for (const auto& u : unknowns)
    for (const auto& t : basis[u.basis].terms()) rows.emplace(u.mono * t.mono, 0);
  std::size_t r = 0;
  for (auto& [mono, index] : rows) index = r++;

  const std::size_t R = rows.size(), C = unknowns.size();
  std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C + 1, 0));
  for (std::size_t c = 0; c < C; ++c)
    for (const auto& t : basis[unknowns[c].basis].terms()) a[rows.at(unknowns[c].mono * t.mono)][c] += t.coeff;
  for (const auto& t : target.terms()) a[rows.at(t.mono)][C] = t.coeff;

  // Fraction-free forward elimination; every division below is exact.
  BigInt prev = 1;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    std::size_t p = row;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j <= C; ++j) {
        BigInt num = a[row][c] * a[i][j] - a[i][c] * a[row][j];
        if (num % prev != 0) throw std::logic_error("ideal_membership_linear: inexact fraction-free step");
        a[i][j] = num / prev;
      }
      a[i][c] = 0;
    }
    prev = a[row][c];
    pivot_cols.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < R; ++i)
    if (a[i][C] != 0) return std::nullopt;

  // Back substitution over ℚ with free unknowns set to zero.
  std::vector<Rational> x(C, Rational(0));
  for (std::size_t i = pivot_cols.size(); i-- > 0;) {
    const std::size_t c = pivot_cols[i];
    Rational acc(a[i][C]);
    for (std::size_t j = c + 1; j < C; ++j)
      if (a[i][j] != 0) acc -= Rational(a[i][j]) * x[j];
    x[c] = acc / Rational(a[i][c]);
  }

  for (std::size_t c = 0; c < C; ++c)
    if (x[c] != 0) cert.cofactors[unknowns[c].basis] += QPoly::monomial(Q, unknowns[c].mono, x[c]);

  QPoly check(Q);
  for (std::size_t b = 0; b < basis.size(); ++b) check += cert.cofactors[b] * to_rational(basis[b]);
  if (!(check == to_rational(target))) throw std::logic_error("ideal_membership_linear: certificate does not expand to the target");
  return cert;
}

}  // namespace carlitz
