#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "carlitz/carlitz_matrices.hpp"
#include "carlitz/coefficient_lab.hpp"
#include "carlitz/identity_suite.hpp"
#include "carlitz/lfun_census.hpp"
#include "support.hpp"

using namespace carlitz;
using namespace carlitz::testing;

namespace {

std::map<Var, BigInt> int_point(const std::vector<std::uint32_t>& point) {
  std::map<Var, BigInt> out;
  for (std::uint32_t i = 0; i < point.size(); ++i) out[Var::a(i)] = point[i];
  return out;
}

bool even(const BigInt& v) { return v % 2 == 0; }

// Support sets recomputed by evaluating the integer polynomials and reducing
// the value, instead of reducing the polynomials first.
std::set<std::uint64_t> xq_oracle(std::uint32_t m, std::uint32_t n, std::uint32_t l) {
  HTable h = h_table(m, n);
  std::set<std::uint64_t> out;
  for (std::uint64_t index = 0; index < point_count(2, m); ++index) {
    auto values = int_point(point_from_index(index, 2, m));
    bool zero = true;
    for (const auto& [key, poly] : h.entries())
      if (key.first < l && !even(poly.evaluate(values))) zero = false;
    if (zero) out.insert(index);
  }
  return out;
}

std::set<std::uint64_t> xm_oracle(std::uint32_t m, std::uint32_t l) {
  const ZPoly full = det_minus_u(nt_matrix(m));
  std::set<std::uint64_t> out;
  for (std::uint64_t index = 0; index < point_count(2, m); ++index) {
    auto values = int_point(point_from_index(index, 2, m));
    bool zero = true;
    for (std::uint32_t i = 0; i < l; ++i)
      if (!even(coefficient_minus_u(full, i).evaluate(values))) zero = false;
    if (zero) out.insert(index);
  }
  return out;
}

std::set<std::uint64_t> as_set(const SupportSet& s) { return {s.points.begin(), s.points.end()}; }

// Restores the previous worker count on scope exit.
struct ThreadsEnv {
  std::string saved;
  bool had = false;
  explicit ThreadsEnv(const char* value) {
    if (const char* v = std::getenv("CARLITZ_LAB_THREADS")) {
      saved = v;
      had = true;
    }
    setenv("CARLITZ_LAB_THREADS", value, 1);
  }
  ~ThreadsEnv() {
    if (had)
      setenv("CARLITZ_LAB_THREADS", saved.c_str(), 1);
    else
      unsetenv("CARLITZ_LAB_THREADS");
  }
};

}  // namespace

TEST_CASE("l_function examples") {
  const PrimeField f2(2);
  auto trivial = l_function(2, 1, {1});
  REQUIRE(trivial.coeffs.size() == 2);
  CHECK(trivial.coeffs[0] == FpPoly::constant(f2, 1LL));
  CHECK(trivial.coeffs[1] == FpPoly::constant(f2, 1LL));
  CHECK(analytic_rank(2, 1, {1}) == 0);

  // P = θ^2 + θ + 1, n = 1: expand det(I - M T) by cofactors at order 3.
  const std::vector<std::uint32_t> coeffs = {1, 1, 1};
  FpMatrix m = build_M_over_field(2, 1, coeffs);
  REQUIRE(m.order() == 3);
  const FpPoly T = FpPoly::variable(f2, Var::u());
  FpMatrix shifted(3, f2);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      shifted.at(i, j) = (i == j ? FpPoly::constant(f2, 1LL) : FpPoly(f2)) - m.at(i, j) * T;
  const FpPoly expanded = det_oracle_cofactor(shifted);
  auto l = l_function(2, 1, coeffs);
  REQUIRE(l.coeffs.size() == 4);
  CHECK(l.degree() <= 3);
  for (unsigned s = 0; s <= 3; ++s) CHECK(l.coeffs[s] == expanded.coefficient_in(Var::u(), s));

  auto padded = l_function(2, 1, {1, 1, 1, 0});
  CHECK(padded == l);

  CHECK_THROWS_AS(l_function(4, 1, {1}), std::invalid_argument);
}

TEST_CASE("analytic rank is non-negative and matches the cofactor route") {
  for (std::uint32_t n = 0; n <= 2; ++n)
    for (std::uint64_t index = 0; index < point_count(2, 4); ++index) {
      auto p = point_from_index(index, 2, 4);
      const long r = analytic_rank(2, n, p);
      CHECK(r >= 0);
      CHECK(r == analytic_rank_oracle(2, n, p));
    }
  for (std::uint64_t index = 0; index < point_count(3, 2); ++index) {
    auto p = point_from_index(index, 3, 2);
    CHECK(analytic_rank(3, 0, p) == analytic_rank_oracle(3, 0, p));
  }
}

TEST_CASE("point indexing") {
  CHECK(point_count(2, 1) == 4);
  CHECK(point_count(3, 2) == 27);
  CHECK(point_digits(point_from_index(1, 2, 3)) == "0001");
  CHECK(point_digits(point_from_index(8, 2, 3)) == "1000");
  CHECK(point_digits(point_from_index(5, 3, 1)) == "12");
  CHECK_THROWS_AS(point_count(2, 22), EnumerationGuard);
  CHECK_NOTHROW(point_count(2, 21));
}

TEST_CASE("rank census") {
  auto c = rank_census(2, 1, 4);
  CHECK(c.total() == 32);
  REQUIRE(c.ranks.size() == 32);
  std::map<long, std::uint64_t> recount;
  for (std::uint64_t index = 0; index < 32; ++index) {
    const long r = analytic_rank_oracle(2, 1, point_from_index(index, 2, 4));
    CHECK(c.ranks[index] == r);
    ++recount[r];
  }
  CHECK(c.histogram == recount);

  CHECK(rank_census(2, 1, 1).total() == 4);
  CHECK(rank_census(3, 1, 2).total() == 27);
  auto exact = rank_census(2, 1, 4, true);
  CHECK(exact.total() == 16);
  CHECK(rank_census(3, 1, 2, true).total() == 18);
  CHECK(exact.ranks[0] == -1);

  CHECK(c.at_least(0) == 32);
  CHECK_THROWS_AS(rank_census(2, 1, 30), EnumerationGuard);

  CHECK(c.csv().rfind("q,n,m,rank,count\n", 0) == 0);
  auto js = c.to_json();
  CHECK(js["total"] == 32);
  CHECK(js["exact_degree"] == false);
}

TEST_CASE("census does not depend on the worker count") {
  RankCensus one, four;
  {
    ThreadsEnv env("1");
    CHECK(lab_threads() == 1);
    one = rank_census(2, 2, 6);
  }
  {
    ThreadsEnv env("4");
    CHECK(lab_threads() == 4);
    four = rank_census(2, 2, 6);
  }
  CHECK(one.ranks == four.ranks);
  CHECK(one.csv() == four.csv());
  {
    ThreadsEnv env("0");
    CHECK(lab_threads() == 1);
  }
  ThreadsEnv env("3");
  CHECK(as_set(support_points(SupportKind::xq, 2, 6, 1, 2)) == xq_oracle(6, 1, 2));
}

TEST_CASE("support examples") {
  auto x = support_points(SupportKind::xm, 2, 2, 1, 1);
  CHECK(x.size() == 4);
  CHECK(x.to_json()["points"] == nlohmann::json({"000", "001", "100", "101"}));
  CHECK(x.to_json()["m"] == 2);
  CHECK(x.to_json()["p"] == 2);

  for (std::uint32_t m = 1; m <= 8; ++m) {
    CHECK(support_points(SupportKind::xm, 2, m, 1, m).size() == 0);
    // The H side keeps the zero vector at l = m, since every equation with
    // i < m is homogeneous of positive degree.
    auto q1 = support_points(SupportKind::xq, 2, m, 1, m);
    CHECK(q1.points == std::vector<std::uint64_t>{0});
    // For n = 2 three non-zero points survive as well (measured).
    auto q2 = support_points(SupportKind::xq, 2, m, 2, m);
    CHECK(q2.size() == 4);
    CHECK(q2.contains(0));
    CHECK(q2.contains(1));                     // a_m = 1, the rest zero
    CHECK(q2.contains(point_count(2, m) / 2));  // a_0 = 1, the rest zero
    for (std::uint32_t l = 1; l + 1 <= m; ++l) CHECK(support_points(SupportKind::xm, 2, m, 1, l).contains(0));
  }
  CHECK_THROWS_AS(support_points(SupportKind::xq, 3, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("support sets agree with integer evaluation") {
  for (std::uint32_t m = 1; m <= 6; ++m)
    for (std::uint32_t l = 0; l <= m; ++l) {
      CAPTURE(m);
      CAPTURE(l);
      CHECK(as_set(support_points(SupportKind::xm, 2, m, 1, l)) == xm_oracle(m, l));
      for (std::uint32_t n = 1; n <= 2; ++n) CHECK(as_set(support_points(SupportKind::xq, 2, m, n, l)) == xq_oracle(m, n, l));
    }
}

TEST_CASE("support comparison") {
  // m = 1 is the l = m case below.
  for (std::uint32_t m = 2; m <= 7; ++m) {
    auto c = support_equality_check(m, 1, 1);
    CHECK(c.equal);
    CHECK(c.projective_equal);
  }

  // n = 2 over 𝔽_2: the -2t terms drop out and the set grows.
  auto c = support_equality_check(3, 2, 2);
  CHECK(c.xq_size == xq_oracle(3, 2, 2).size());
  CHECK(c.xm_size == xm_oracle(3, 2).size());
  CHECK(c.xq_size == 10);
  CHECK(c.xm_size == 4);
  CHECK_FALSE(c.equal);
  CHECK(c.xm_in_xq);
  CHECK(c.only_xm.empty());
  CHECK(c.only_xq.size() == 6);

  // At l = m the sets differ only by the zero vector.
  for (std::uint32_t m = 1; m <= 6; ++m) {
    auto top = support_equality_check(m, 1, m);
    CHECK(top.projective_equal);
    for (const auto& s : top.only_xq) CHECK(s == std::string(m + 1, '0'));
    for (const auto& s : top.only_xm) CHECK(s == std::string(m + 1, '0'));
  }

  for (std::uint32_t m = 1; m <= 6; ++m)
    for (std::uint32_t n = 1; n <= 2; ++n)
      for (std::uint32_t l = 1; l <= m; ++l) CHECK(support_equality_check(m, n, l).xm_in_xq);

  auto js = c.to_json();
  CHECK(js["equal"] == false);
  CHECK(js["xm_in_xq"] == true);
  CHECK(js["only_xq"].size() == 6);
}

TEST_CASE("census and support with the exact degree") {
  for (std::uint32_t m = 1; m <= 6; ++m)
    for (std::uint32_t n = 1; n <= 2; ++n) {
      auto census = rank_census(2, n, m, true);
      for (std::uint32_t l = 1; l <= m; ++l) {
        auto x = support_points(SupportKind::xq, 2, m, n, l);
        std::uint64_t top_nonzero = 0;
        for (auto index : x.points) top_nonzero += index % 2;
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(l);
        CHECK(census.at_least(l) == top_nonzero);
      }
    }
}

TEST_CASE("a vanishing top coefficient shifts the rank by one") {
  for (std::uint32_t n = 0; n <= 2; ++n)
    for (std::uint32_t m = 1; m <= 6; ++m)
      for (std::uint64_t index = 0; index < point_count(2, m); index += 2) {
        auto p = point_from_index(index, 2, m);
        REQUIRE(p.back() == 0);
        auto shorter = p;
        shorter.pop_back();
        CHECK(analytic_rank(2, n, p) == analytic_rank(2, n, shorter) + 1);
      }
}

TEST_CASE("membership certificates") {
  for (std::uint32_t m = 1; m <= 6; ++m) {
    const ZPoly d0 = d_family(m).at(0);
    HTable h = h_table(m, 1, {0, std::nullopt});
    for (std::uint32_t j = 0; j <= m; ++j) {
      auto cert = ideal_membership_linear(h.at(0, j), {d0}, 1);
      REQUIRE(cert.has_value());
      REQUIRE(cert->cofactors.size() == 1);
      const ZPoly expected = j % 2 == 0 ? avar(j) : -avar(j);
      CHECK(cert->cofactors[0] == to_rational(expected));
    }
  }

  for (std::uint32_t m = 2; m <= 6; ++m) {
    auto d = d_family(m);
    auto cert = ideal_membership_linear(h112_extracted(m), {d.at(0), d.at(1)}, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->cofactors[0] == to_rational(zconst(-2) * (avar(0) + avar(1))));
    CHECK(cert->cofactors[1] == to_rational(zconst(-2) * avar(0).pow(2)));
    CHECK(cert->cofactors[0].render() == "-2*a0 - 2*a1");
    CHECK(cert->cofactors[1].render() == "-2*a0^2");
    CHECK(cert->to_json()["cofactors"].size() == 2);
  }

  const ZPoly d40 = d_family(4).at(0);
  auto self = ideal_membership_linear(d40, {d40}, 0);
  REQUIRE(self.has_value());
  CHECK(self->cofactors[0] == to_rational(zconst(1)));

  CHECK_FALSE(ideal_membership_linear(avar(0), {avar(1)}, 0).has_value());
  CHECK_FALSE(ideal_membership_linear(avar(0).pow(2), {avar(1)}, 1).has_value());
  CHECK_THROWS_AS(ideal_membership_linear(avar(0) + avar(1).pow(2), {avar(1)}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ideal_membership_linear(avar(0), {avar(0) + zconst(1)}, 1), std::invalid_argument);
}

TEST_CASE("membership certificates expand to the target") {
  // Targets built from random cofactors over a random homogeneous basis.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ZPoly> basis = {avar(0) * avar(1) - avar(2).pow(2), avar(0).pow(2) + avar(1) * avar(2)};
    ZPoly target;
    for (const auto& b : basis) {
      ZPoly c;
      std::uniform_int_distribution<int> coef(-3, 3);
      for (std::uint32_t v = 0; v < 3; ++v) c += zconst(coef(rng)) * avar(v);
      target += c * b;
    }
    if (target.is_zero()) continue;
    auto cert = ideal_membership_linear(target, basis, 1);
    REQUIRE(cert.has_value());
    QPoly sum(RationalField{});
    for (std::size_t b = 0; b < basis.size(); ++b) sum += cert->cofactors[b] * to_rational(basis[b]);
    CHECK(sum == to_rational(target));
  }
}
