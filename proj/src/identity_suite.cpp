#include "carlitz/identity_suite.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "carlitz/charpoly.hpp"
#include "carlitz/coefficient_lab.hpp"

namespace carlitz {

namespace {

using nlohmann::json;

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

template <class Ring>
std::string render_T(const CharPoly<Ring>& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) out += (i ? "; " : "") + c.coeffs[i].render();
  return out + "]";
}

// One ± position per entry of `terms`; returns, for the combinations that
// make target == Σ ±terms, a pattern such as "+-" with '*' where the sign is
// not pinned down (its term vanishes). Empty when no combination holds.
std::string resolve_signs(const ZPoly& target, const std::vector<ZPoly>& terms) {
  const std::size_t width = terms.size();
  std::vector<unsigned> holding;
  for (unsigned mask = 0; mask < (1u << width); ++mask) {
    ZPoly sum;
    for (std::size_t p = 0; p < width; ++p) sum += (mask >> p) & 1 ? -terms[p] : terms[p];
    if (sum == target) holding.push_back(mask);
  }
  if (holding.empty()) return "";
  std::string pattern;
  for (std::size_t p = 0; p < width; ++p) {
    bool minus = (holding.front() >> p) & 1;
    bool fixed = true;
    for (auto h : holding) fixed = fixed && (((h >> p) & 1) == minus);
    pattern += fixed ? (minus ? '-' : '+') : '*';
  }
  return pattern;
}

ZPoly scaled_by(const ZPoly& p, const BigInt& c) { return p.scaled(c); }

struct BData {
  std::vector<std::vector<ZMatrix>> b;  // [l-1][u-1]
  std::vector<std::vector<ZPoly>> dets;
};

BData b_data(std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("B matrices: needs m >= 2");
  BData d;
  const auto spec = TwistSpec::symbolic(2, 2, m);
  d.b.resize(m + 1);
  d.dets.resize(m + 1);
  for (std::size_t l = 1; l <= m + 1; ++l)
    for (std::size_t u = 1; u <= m; ++u) {
      d.b[l - 1].push_back(build_B(spec, l, u));
      d.dets[l - 1].push_back(det(d.b[l - 1].back()));
    }
  return d;
}

}  // namespace

json IdentityReport::to_json(bool verbose) const {
  json j = {{"identity", identity}, {"params", params}, {"holds", holds}, {"resolved_signs", resolved_signs}};
  if (!holds || verbose) {
    j["lhs"] = lhs;
    j["rhs"] = rhs;
  }
  return j;
}

IdentityReport compare_polys(std::string identity, json params, const ZPoly& lhs, const ZPoly& rhs) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.holds = lhs == rhs;
  r.lhs = lhs.render();
  r.rhs = rhs.render();
  return r;
}

IdentityReport verify_sarraf(std::uint32_t m) {
  if (m < 3) throw std::invalid_argument("verify_sarraf: needs m >= 3");
  // Only T-degree 2 and t-degree 1 of the n = 1 polynomial are involved.
  auto h = h_table(m, 1, HWindow{m - 2, 1});
  auto d = d_family(m, m - 3);
  ZPoly lhs = h.proof_convention(m - 2, 1);
  ZPoly rhs = d.at(m - 3) - d.at(m - 2).pow(2);
  return compare_polys("sarraf", {{"m", m}}, lhs, rhs);
}

ZPoly h112_extracted(std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("h112_extracted: needs m >= 2");
  return h_table(m, 2, HWindow{1, 1}).proof_convention(1, 1);
}

IdentityReport verify_ehbauer(std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("verify_ehbauer: needs m >= 2");
  auto d = d_family(m);
  ZPoly a0 = avar(0), a1 = avar(1);
  ZPoly rhs = zconst(-2) * a0.pow(2) * d.at(1) - zconst(2) * (a0 + a1) * d.at(0);
  return compare_polys("ehbauer", {{"m", m}}, h112_extracted(m), rhs);
}

std::vector<std::vector<ZPoly>> b_determinants(std::uint32_t m) { return b_data(m).dets; }

ZPoly h112_via_B(std::uint32_t m) {
  ZPoly sum;
  for (const auto& row : b_determinants(m))
    for (const auto& d : row) sum += d;
  return zconst(-2) * sum;
}

std::vector<IdentityReport> verify_b_lemmas(std::uint32_t m) {
  const BData bd = b_data(m);
  const auto& dets = bd.dets;
  const auto d = d_family(m);
  const ZPoly a0 = avar(0), a1 = avar(1);
  const json params = {{"m", m}};
  std::vector<IdentityReport> out;

  {
    IdentityReport r;
    r.identity = "b_vanishing";
    r.params = params;
    r.holds = true;
    r.rhs = "0";
    r.lhs = "0";
    for (std::size_t l = 2; l <= m + 1 && r.holds; ++l)
      for (std::size_t u = 2; u <= m && r.holds; ++u)
        if (!dets[l - 1][u - 1].is_zero()) {
          r.holds = false;
          r.lhs = dets[l - 1][u - 1].render();
          r.params["l"] = l;
          r.params["u"] = u;
        }
    out.push_back(std::move(r));
  }

  out.push_back(compare_polys("b21", params, dets[1][0], a0 * d.at(0)));

  ZPoly tail;
  for (std::size_t l = 3; l <= m + 1; ++l) tail += dets[l - 1][0];
  out.push_back(compare_polys("bl1_sum", params, tail, a0.pow(2) * d.at(1)));

  const ZMatrix& b11 = bd.b[0][0];
  const ZPoly b11_21 = det(minor_matrix(b11, 2, 1));
  out.push_back(compare_polys("b11", params, dets[0][0], a1 * d.at(0) - a0 * b11_21));

  {
    IdentityReport r;
    r.identity = "b1u";
    r.params = params;
    r.holds = true;
    for (std::size_t u = 2; u <= m; ++u) {
      ZPoly rhs = a0 * det(principal_minor_matrix(bd.b[0][u - 1], 1));
      r.lhs = dets[0][u - 1].render();
      r.rhs = rhs.render();
      if (!(dets[0][u - 1] == rhs)) {
        r.holds = false;
        r.params["u"] = u;
        break;
      }
    }
    if (r.holds) r.lhs = r.rhs = "";
    out.push_back(std::move(r));
  }

  ZPoly col_sum;
  for (std::size_t u = 2; u <= m; ++u) col_sum += det(principal_minor_matrix(bd.b[0][u - 1], 1));
  out.push_back(compare_polys("principal_equality", params, b11_21, col_sum));

  ZPoly via_b;
  for (const auto& row : dets)
    for (const auto& x : row) via_b += x;
  out.push_back(compare_polys("h112_cross_path", params, zconst(-2) * via_b, h112_extracted(m)));
  return out;
}

PermSums perm_sums(const AlphaMap& alpha) {
  const std::size_t n = alpha.order();
  if (n > kPermIdentityMaxOrder)
    throw std::length_error("perm_sums: order " + std::to_string(n) + " above the guard " +
                            std::to_string(kPermIdentityMaxOrder));
  PermSums s;
  Permutation sigma = Permutation::identity(n);
  do {
    s.rows += det(build_perm_matrix({PermKind::rows, sigma, alpha}));
    s.columns += det(build_perm_matrix({PermKind::columns, sigma, alpha}));
  } while (sigma.next());
  return s;
}

IdentityReport verify_perm_identity_random(std::size_t n, std::uint64_t seed, std::size_t trials) {
  if (n < 1 || n > kPermIdentityMaxOrder)
    throw std::length_error("verify_perm_identity: n must lie in 1.." + std::to_string(kPermIdentityMaxOrder));
  std::mt19937_64 rng(seed);
  IdentityReport r;
  r.identity = "perm_identity";
  r.params = {{"n", n}, {"alpha", "random"}, {"seed", seed}, {"trials", trials}};
  r.holds = true;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto sums = perm_sums(AlphaMap::random_integers(n, rng));
    if (!(sums.rows == sums.columns)) {
      r.holds = false;
      r.params["failed_trial"] = trial;
      r.lhs = sums.rows.render();
      r.rhs = sums.columns.render();
      break;
    }
  }
  return r;
}

std::vector<IdentityReport> verify_perm_identity_carlitz(std::uint32_t m) {
  if (m < 2 || m - 1 > kPermIdentityMaxOrder)
    throw std::length_error("verify_perm_identity: carlitz alpha needs 2 <= m <= " +
                            std::to_string(kPermIdentityMaxOrder + 1));
  const json params = {{"m", m}, {"n", m - 1}, {"alpha", "carlitz"}};
  auto sums = perm_sums(carlitz_alpha(m));

  const ZMatrix b11 = build_B(m, 1, 1);
  ZPoly col_sum;
  for (std::size_t u = 2; u <= m; ++u) col_sum += det(principal_minor_matrix(build_B(m, 1, u), 1));
  const BigInt f = factorial(m - 2);

  std::vector<IdentityReport> out;
  out.push_back(compare_polys("perm_identity", params, sums.rows, sums.columns));
  out.push_back(compare_polys("perm_count_rows", params, sums.rows, scaled_by(det(minor_matrix(b11, 2, 1)), f)));
  out.push_back(compare_polys("perm_count_columns", params, sums.columns, scaled_by(col_sum, f)));
  return out;
}

std::vector<IdentityReport> verify_perm_clauses(std::uint32_t m) {
  if (m < 2 || m > 7) throw std::length_error("verify_perm_clauses: needs 2 <= m <= 7");
  const AlphaMap alpha = carlitz_alpha(m);
  const ZMatrix b11_21 = minor_matrix(build_B(m, 1, 1), 2, 1);
  std::vector<ZMatrix> b1u_1;  // index u-1
  for (std::size_t u = 1; u <= m; ++u) b1u_1.push_back(principal_minor_matrix(build_B(m, 1, u), 1));

  const json params = {{"m", m}};
  auto make = [&](const char* name) {
    IdentityReport r;
    r.identity = name;
    r.params = params;
    r.holds = true;
    return r;
  };
  IdentityReport fixed = make("perm_rows_fixed");
  IdentityReport vanish = make("perm_rows_vanish");
  IdentityReport cols = make("perm_columns");
  auto fail = [](IdentityReport& r, const Permutation& s, std::string lhs, std::string rhs) {
    if (!r.holds) return;
    r.holds = false;
    r.params["sigma"] = s.images();
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
  };
  auto flat = [](const ZMatrix& x) { return json(x.render()).dump(); };

  Permutation sigma = Permutation::identity(m - 1);
  do {
    ZMatrix rows = build_perm_matrix({PermKind::rows, sigma, alpha});
    if (sigma(1) == 1) {
      if (!(rows == b11_21)) fail(fixed, sigma, flat(rows), flat(b11_21));
    } else {
      ZPoly d = det(rows);
      if (!d.is_zero()) fail(vanish, sigma, d.render(), "0");
    }
    ZMatrix columns = build_perm_matrix({PermKind::columns, sigma, alpha});
    const ZMatrix& target = b1u_1[sigma.inverse(1)];  // u = σ^{-1}(1) + 1
    if (!(columns == target)) fail(cols, sigma, flat(columns), flat(target));
  } while (sigma.next());
  return {fixed, vanish, cols};
}

std::vector<IdentityReport> verify_known_coeffs(std::uint32_t m, std::uint32_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("verify_known_coeffs: needs m >= 1 and n >= 1");
  const auto d = d_family(m);
  const std::size_t k = m + n - 1;
  const json params = {{"m", m}, {"n", n}};
  std::vector<IdentityReport> out;

  auto sign_report = [&](std::string name) {
    IdentityReport r;
    r.identity = std::move(name);
    r.params = params;
    r.holds = true;
    return r;
  };
  auto record = [&](IdentityReport& r, const std::string& key, const ZPoly& target, const std::vector<ZPoly>& terms) {
    std::string pattern = resolve_signs(target, terms);
    if (pattern.empty()) {
      r.resolved_signs[key] = nullptr;
      if (r.holds) {
        r.holds = false;
        r.lhs = target.render();
        ZPoly sum;
        for (const auto& t : terms) sum += t;
        r.rhs = "±-combination of " + sum.render();
      }
    } else {
      r.resolved_signs[key] = pattern;
    }
  };

  if (n == 1) {
    auto h = h_table(m, 1, HWindow{0, std::nullopt});
    IdentityReport r = sign_report("known_h0j1");
    // Summarize the per-j signs as a rule when one fits all j.
    bool plus = true, minus = true, alt = true, alt_neg = true;
    for (std::uint32_t j = 0; j <= m; ++j) {
      const std::string key = "j=" + std::to_string(j);
      record(r, key, h.at(0, j), {avar(j) * d.at(0)});
      const auto& s = r.resolved_signs[key];
      const std::string sign = s.is_string() ? s.get<std::string>() : "?";
      const std::string even = j % 2 == 0 ? "+" : "-";
      const std::string odd = j % 2 == 0 ? "-" : "+";
      plus = plus && sign == "+";
      minus = minus && sign == "-";
      alt = alt && sign == even;
      alt_neg = alt_neg && sign == odd;
    }
    json rule = nullptr;
    if (plus) rule = "+";
    else if (minus) rule = "-";
    else if (alt) rule = "(-1)^j";
    else if (alt_neg) rule = "-(-1)^j";
    r.resolved_signs["rule"] = rule;
    out.push_back(std::move(r));
  }

  const auto low = h_row_t0(m, n);
  const auto top = h_row_top(m, n);
  IdentityReport r0 = sign_report("known_hi0n");
  IdentityReport r1 = sign_report("known_hitopn");
  for (std::size_t i = 0; i <= k; ++i) {
    const long base = static_cast<long>(i) - static_cast<long>(n);
    const std::string key = "i=" + std::to_string(i);
    record(r0, key, low[i], {d.at(base), avar(0) * d.at(base + 1)});
    record(r1, key, top[i], {d.at(base), avar(m) * d.at(base + 1)});
  }
  out.push_back(std::move(r0));
  out.push_back(std::move(r1));
  return out;
}

IdentityReport verify_trivial_factor_symbolic(std::uint32_t q, std::uint32_t n, std::uint32_t m) {
  const auto spec = TwistSpec::symbolic(q, n, m);
  const auto full = char_poly_rev(build_M(spec));
  const auto nt = char_poly_rev(build_M_nt(spec));
  CharPoly<IntegerRing> factor{{zconst(1), n % 2 == 0 ? -avar(m) : avar(m)}};
  const auto rhs = multiply(nt, factor, IntegerRing{});
  IdentityReport r;
  r.identity = "trivial_factor";
  r.params = {{"q", q}, {"n", n}, {"m", m}, {"mode", "symbolic"}};
  r.holds = full == rhs;
  r.lhs = render_T(full);
  r.rhs = render_T(rhs);
  return r;
}

IdentityReport verify_trivial_factor_point(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("verify_trivial_factor: empty coefficient list");
  const PrimeField field(q);
  const std::uint32_t m = static_cast<std::uint32_t>(coeffs.size() - 1);
  if ((m + n) % (q - 1) != 0 || m + n == 0)
    throw NonTrivialPartUndefined("non-trivial part undefined: q - 1 does not divide m + n");
  const FpMatrix full_m = build_M_over_field(q, n, coeffs);
  const auto full = char_poly_rev(full_m);
  const auto nt = char_poly_rev(principal_minor_matrix(full_m, full_m.order()));
  auto am = field.from_int(coeffs.back());
  CharPoly<PrimeField> factor{{FpPoly::constant(field, field.one()),
                               FpPoly::constant(field, n % 2 == 0 ? field.neg(am) : am)}};
  const auto rhs = multiply(nt, factor, field);

  std::string point;
  for (auto c : coeffs) point += std::to_string(c % q);
  IdentityReport r;
  r.identity = "trivial_factor";
  r.params = {{"q", q}, {"n", n}, {"m", m}, {"mode", "point"}, {"point", point}};
  r.holds = full == rhs;
  r.lhs = render_T(full);
  r.rhs = render_T(rhs);
  return r;
}

std::vector<IdentityReport> verify_trivial_factor_random(std::uint32_t q, std::size_t count, std::uint64_t seed) {
  if (!is_prime(q)) throw std::invalid_argument("verify_trivial_factor: q must be prime");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick_n(0, 2), pick_m(1, 6), pick_c(0, q - 1);
  std::vector<IdentityReport> out;
  while (out.size() < count) {
    std::uint32_t n = pick_n(rng), m = pick_m(rng);
    if ((m + n) % (q - 1) != 0) continue;
    std::vector<std::uint32_t> coeffs(m + 1);
    for (auto& c : coeffs) c = pick_c(rng);
    out.push_back(verify_trivial_factor_point(q, n, coeffs));
  }
  return out;
}

}  // namespace carlitz
