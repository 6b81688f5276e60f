// carlitz-lab: batch front end for the coefficient lab, the identity suite
// and the finite-field census.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 usage or guard error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "carlitz/carlitz_matrices.hpp"
#include "carlitz/coefficient_lab.hpp"
#include "carlitz/identity_suite.hpp"
#include "carlitz/lfun_census.hpp"

namespace {

using namespace carlitz;
using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20240601;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  bool verbose = false;
  bool json() const { return format == "json"; }
};

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string report_line(const IdentityReport& r) {
  std::ostringstream out;
  out << (r.holds ? "PASS " : "FAIL ") << r.identity;
  for (const auto& [k, v] : r.params.items()) out << ' ' << k << '=' << scalar_text(v);
  if (!r.resolved_signs.empty()) {
    out << " signs[";
    bool first = true;
    for (const auto& [k, v] : r.resolved_signs.items()) {
      out << (first ? "" : " ") << k << ':' << scalar_text(v);
      first = false;
    }
    out << ']';
  }
  return out.str();
}

int print_reports(const std::vector<IdentityReport>& reports, const Globals& g) {
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.holds;
    if (g.json()) {
      std::cout << r.to_json(g.verbose).dump() << '\n';
      continue;
    }
    std::cout << report_line(r) << '\n';
    if ((!r.holds || g.verbose) && !(r.lhs.empty() && r.rhs.empty())) {
      std::cout << "  lhs: " << r.lhs << '\n';
      std::cout << "  rhs: " << r.rhs << '\n';
    }
  }
  if (!g.json())
    std::cout << (all ? "all " : "some checks failed; ") << reports.size() << " checks" << (all ? " passed" : "")
              << '\n';
  return all ? 0 : kExitFail;
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
  static const std::regex pattern(R"((\d+)\.\.(\d+))");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw UsageError("--m-range must look like A..B, got '" + text + "'");
  auto lo = static_cast<std::uint32_t>(std::stoul(match[1]));
  auto hi = static_cast<std::uint32_t>(std::stoul(match[2]));
  if (lo > hi) throw UsageError("--m-range: empty range " + text);
  return {lo, hi};
}

std::vector<std::uint32_t> parse_coeffs(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--coeffs: expected comma separated non-negative integers, got '" + text + "'");
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (out.empty()) throw UsageError("--coeffs: no coefficients given");
  return out;
}

void append(std::vector<IdentityReport>& out, std::vector<IdentityReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

struct VerifyOptions {
  std::string suite = "all";
  std::string range = "2..6";
  std::size_t trials = 100;
  std::size_t points = 50;
};

// Each suite runs on the m of the range that meet its own lower bounds.
std::vector<IdentityReport> run_suite(const std::string& suite, std::uint32_t lo, std::uint32_t hi,
                                      const VerifyOptions& opt, const Globals& g) {
  std::vector<IdentityReport> out;
  const bool all = suite == "all";
  if (all || suite == "sarraf")
    for (auto m = std::max(lo, 3u); m <= hi; ++m) out.push_back(verify_sarraf(m));
  if (all || suite == "ehbauer")
    for (auto m = std::max(lo, 2u); m <= hi; ++m) out.push_back(verify_ehbauer(m));
  if (all || suite == "blemmas")
    for (auto m = std::max(lo, 2u); m <= hi; ++m) append(out, verify_b_lemmas(m));
  if (all || suite == "permident") {
    const auto top = std::min<std::uint32_t>(hi, kPermIdentityMaxOrder + 1);
    for (auto m = std::max(lo, 2u); m <= top; ++m) {
      append(out, verify_perm_identity_carlitz(m));
      append(out, verify_perm_clauses(m));
      out.push_back(verify_perm_identity_random(m - 1, g.seed, opt.trials));
    }
  }
  if (all || suite == "known")
    for (auto m = std::max(lo, 1u); m <= hi; ++m)
      for (std::uint32_t n = 1; n <= 3; ++n) append(out, verify_known_coeffs(m, n));
  if (all || suite == "trivial-factor") {
    for (auto m = std::max(lo, 1u); m <= hi; ++m)
      for (std::uint32_t n = 0; n <= 2; ++n) out.push_back(verify_trivial_factor_symbolic(2, n, m));
    if (hi >= 1) {
      append(out, verify_trivial_factor_random(2, opt.points, g.seed));
      append(out, verify_trivial_factor_random(3, opt.points, g.seed));
    }
  }
  return out;
}

int cmd_verify(const VerifyOptions& opt, const Globals& g) {
  auto [lo, hi] = parse_range(opt.range);
  auto reports = run_suite(opt.suite, lo, hi, opt, g);
  if (reports.empty()) throw UsageError("verify: no m in " + opt.range + " meets the preconditions of suite " + opt.suite);
  return print_reports(reports, g);
}

struct HOptions {
  std::uint32_t m = 0, n = 0;
  std::optional<std::size_t> i;
  std::optional<std::uint32_t> j;
};

int cmd_hpoly(const HOptions& opt, const Globals& g) {
  if (opt.m < 1) throw UsageError("hpoly: --m must be at least 1 (k = m + n - 1)");
  if (opt.j && !opt.i) throw UsageError("hpoly: --j needs --i");
  HWindow window;
  if (opt.i) {
    HTable shape(opt.m, opt.n);
    window.min_i = *opt.i;
    const auto top = shape.max_j(*opt.i);  // range checks
    if (opt.j && *opt.j > top)
      throw UsageError("hpoly: j = " + std::to_string(*opt.j) + " above n(k-i) = " + std::to_string(top));
    window.max_j = opt.j ? *opt.j : top;
  }
  const HTable table = h_table(opt.m, opt.n, window);

  if (opt.i && opt.j) {
    const auto& p = table.at(*opt.i, *opt.j);
    if (g.json())
      std::cout << json{{"m", opt.m}, {"n", opt.n}, {"i", *opt.i}, {"j", *opt.j}, {"poly", p.render()}}.dump() << '\n';
    else
      std::cout << p.render() << '\n';
    return 0;
  }
  if (opt.i) {
    json entries = json::array();
    for (std::uint32_t j = 0; j <= table.max_j(*opt.i); ++j) {
      const auto& p = table.at(*opt.i, j);
      if (g.json())
        entries.push_back({{"i", *opt.i}, {"j", j}, {"poly", p.render()}});
      else
        std::cout << "H[" << *opt.i << ',' << j << "] = " << p.render() << '\n';
    }
    if (g.json()) std::cout << json{{"m", opt.m}, {"n", opt.n}, {"k", table.k()}, {"entries", entries}}.dump(2) << '\n';
    return 0;
  }
  if (g.json()) {
    std::cout << table.to_json().dump(2) << '\n';
    return 0;
  }
  for (const auto& [key, p] : table.entries())
    std::cout << "H[" << key.first << ',' << key.second << "] = " << p.render() << '\n';
  return 0;
}

int cmd_dpoly(std::uint32_t m, std::optional<std::size_t> i, const Globals& g) {
  if (m < 1) throw UsageError("dpoly: --m must be at least 1");
  if (i && *i >= m) throw UsageError("dpoly: --i must be below m");
  const DFamily family = d_family(m, i.value_or(0));
  if (g.json()) {
    std::cout << family.to_json().dump(2) << '\n';
    return 0;
  }
  const std::size_t first = i.value_or(0), last = i ? *i : m - 1;
  for (std::size_t s = first; s <= last; ++s)
    std::cout << "D[" << m << ',' << s << "] = " << family.at(static_cast<long>(s)).render()
              << "  eps=" << family.epsilon(s) << '\n';
  return 0;
}

int cmd_lfun(std::uint32_t q, std::uint32_t n, const std::string& coeff_text, const Globals& g) {
  const auto coeffs = parse_coeffs(coeff_text);
  for (auto c : coeffs)
    if (c >= q) throw UsageError("lfun: coefficient " + std::to_string(c) + " is not reduced mod q");
  const auto l = l_function(q, n, coeffs);
  const long k_bar = static_cast<long>(l.coeffs.size()) - 1;
  const long rank = k_bar - l.degree();
  if (g.json()) {
    json cs = json::array();
    for (const auto& c : l.coeffs) cs.push_back(c.render());
    std::cout << json{{"q", q}, {"n", n}, {"m", coeffs.size() - 1}, {"k_bar", k_bar}, {"coeffs", cs}, {"rank", rank}}
                     .dump(2)
              << '\n';
    return 0;
  }
  std::cout << "q=" << q << " n=" << n << " m=" << coeffs.size() - 1 << " k_bar=" << k_bar << '\n';
  for (std::size_t d = 0; d < l.coeffs.size(); ++d) std::cout << "T^" << d << ": " << l.coeffs[d].render() << '\n';
  std::cout << "rank=" << rank << '\n';
  return 0;
}

struct CensusOptions {
  std::uint32_t q = 2, n = 1, m = 1;
  bool exact_degree = false;
  std::string out;
};

int cmd_census(const CensusOptions& opt, const Globals& g) {
  const RankCensus census = rank_census(opt.q, opt.n, opt.m, opt.exact_degree);
  if (!opt.out.empty()) {
    std::ofstream file(opt.out);
    if (!file) throw UsageError("census: cannot write " + opt.out);
    file << census.csv();
  }
  if (g.json()) {
    std::cout << census.to_json().dump(2) << '\n';
    return 0;
  }
  std::cout << "q=" << opt.q << " n=" << opt.n << " m=" << opt.m << " points=" << census.total()
            << (opt.exact_degree ? " (exact degree)" : "") << '\n';
  for (const auto& [r, c] : census.histogram) std::cout << "rank " << r << ": " << c << '\n';
  return 0;
}

struct SupportOptions {
  std::uint32_t m = 1, n = 1, l = 1, p = 2;
  std::string kind = "xm";
  std::string out;
  bool compare = false;
};

int cmd_support_compare(const SupportOptions& opt, const Globals& g) {
  const auto cmp = support_equality_check(opt.m, opt.n, opt.l);
  if (g.json())
    std::cout << cmp.to_json().dump(2) << '\n';
  else {
    std::cout << (cmp.equal ? "EQUAL" : "INEQUALITY") << " X(2," << opt.n << ',' << opt.m << ',' << opt.l
              << ")(F2) vs X(" << opt.m << ',' << opt.l << ")(F2): " << cmp.xq_size << " vs " << cmp.xm_size
              << " points; projective " << (cmp.projective_equal ? "equal" : "unequal") << "; X(m,l) inside X(2,n,m,l) "
              << (cmp.xm_in_xq ? "yes" : "no") << '\n';
    for (const auto& s : cmp.only_xq) std::cout << "  only in X(2,n,m,l): " << s << '\n';
    for (const auto& s : cmp.only_xm) std::cout << "  only in X(m,l): " << s << '\n';
  }
  if (!cmp.equal)
    std::cerr << "carlitz-lab: support inequality at m=" << opt.m << " n=" << opt.n << " l=" << opt.l << '\n';
  return cmp.equal ? 0 : kExitFail;
}

int cmd_support(const SupportOptions& opt, const Globals& g) {
  if (opt.compare) return cmd_support_compare(opt, g);
  const auto kind = opt.kind == "xq" ? SupportKind::xq : SupportKind::xm;
  const SupportSet set = support_points(kind, opt.p, opt.m, opt.n, opt.l);
  if (!opt.out.empty()) {
    std::ofstream file(opt.out);
    if (!file) throw UsageError("support: cannot write " + opt.out);
    file << set.to_json().dump(2) << '\n';
  }
  if (g.json()) {
    std::cout << set.to_json().dump(2) << '\n';
    return 0;
  }
  if (kind == SupportKind::xq)
    std::cout << "X(2," << opt.n << ',' << opt.m << ',' << opt.l << ")";
  else
    std::cout << "X(" << opt.m << ',' << opt.l << ")";
  std::cout << " over F" << opt.p << ": " << set.size() << " points\n";
  const json listed = set.to_json();
  for (const auto& digits : listed["points"]) std::cout << "  " << digits.get<std::string>() << '\n';
  return 0;
}

struct MemberOptions {
  std::string preset;
  std::uint32_t m = 0, j = 0;
  std::string target;
  std::vector<std::string> basis;
  std::optional<std::uint32_t> max_deg;
};

int cmd_member(const MemberOptions& opt, const Globals& g) {
  ZPoly target;
  std::vector<ZPoly> basis;
  std::uint32_t max_deg = opt.max_deg.value_or(2);
  if (!opt.preset.empty()) {
    if (!opt.target.empty() || !opt.basis.empty()) throw UsageError("member: --preset excludes --target/--basis");
    if (opt.preset == "h0j1") {
      if (opt.m < 1 || opt.j > opt.m) throw UsageError("member: h0j1 needs m >= 1 and j <= m");
      target = h_table(opt.m, 1, {0, opt.j}).at(0, opt.j);
      basis = {d_family(opt.m).at(0)};
      max_deg = opt.max_deg.value_or(1);
    } else if (opt.preset == "ehbauer") {
      if (opt.m < 2) throw UsageError("member: ehbauer needs m >= 2");
      auto d = d_family(opt.m);
      target = h112_extracted(opt.m);
      basis = {d.at(0), d.at(1)};
    } else {
      if (opt.m < 1) throw UsageError("member: reflexive needs m >= 1");
      target = d_family(opt.m).at(0);
      basis = {target};
      max_deg = opt.max_deg.value_or(0);
    }
  } else {
    if (opt.target.empty() || opt.basis.empty()) throw UsageError("member: give --preset or --target with --basis");
    target = parse_zpoly(opt.target);
    for (const auto& b : opt.basis) basis.push_back(parse_zpoly(b));
  }

  const auto cert = ideal_membership_linear(target, basis, max_deg);
  if (g.json()) {
    json out = {{"target", target.render()}, {"max_deg", max_deg}, {"found", cert.has_value()}};
    json bs = json::array();
    for (const auto& b : basis) bs.push_back(b.render());
    out["basis"] = bs;
    if (cert) out["certificate"] = cert->to_json();
    std::cout << out.dump(2) << '\n';
  } else if (cert) {
    for (std::size_t b = 0; b < basis.size(); ++b)
      std::cout << "c" << b << " = " << cert->cofactors[b].render() << "   for " << basis[b].render() << '\n';
  } else {
    std::cout << "none (no cofactors of degree <= " << max_deg << ")\n";
  }
  return cert ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coefficient families, identities and censuses for twisted Carlitz L-functions", "carlitz-lab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
  app.add_flag("--verbose", g.verbose, "Show both sides of every identity");

  int code = 0;

  HOptions h;
  auto* hpoly = app.add_subcommand("hpoly", "H_{i,j,n}(m), coefficient of t^j T^(k-i) in det(I - M_nt T)");
  hpoly->add_option("--m", h.m)->required();
  hpoly->add_option("--n", h.n)->required();
  hpoly->add_option("--i", h.i);
  hpoly->add_option("--j", h.j);
  hpoly->callback([&] { code = cmd_hpoly(h, g); });

  std::uint32_t dm = 0;
  std::optional<std::size_t> di;
  auto* dpoly = app.add_subcommand("dpoly", "D(m,i) = H_{i,0,0}(m)");
  dpoly->add_option("--m", dm)->required();
  dpoly->add_option("--i", di);
  dpoly->callback([&] { code = cmd_dpoly(dm, di, g); });

  VerifyOptions v;
  auto* verify = app.add_subcommand("verify", "Symbolic identity checks, one line per (identity, parameters)");
  verify->add_option("--suite", v.suite)
      ->check(CLI::IsMember({"sarraf", "ehbauer", "blemmas", "permident", "known", "trivial-factor", "all"}))
      ->capture_default_str();
  verify->add_option("--m-range", v.range, "Degrees A..B")->capture_default_str();
  verify->add_option("--trials", v.trials, "Random alpha draws per order")->capture_default_str();
  verify->add_option("--points", v.points, "Random field points per prime")->capture_default_str();
  verify->callback([&] { code = cmd_verify(v, g); });

  CensusOptions c;
  auto* census = app.add_subcommand("census", "Analytic rank histogram over all coefficient vectors");
  census->add_option("--q", c.q)->required();
  census->add_option("--n", c.n)->required();
  census->add_option("--m", c.m)->required();
  census->add_flag("--exact-degree", c.exact_degree, "Only a_m != 0");
  census->add_option("--out", c.out, "CSV file");
  census->callback([&] { code = cmd_census(c, g); });

  SupportOptions s;
  auto* support = app.add_subcommand("support", "Points of X(2,n,m,l) (xq) or X(m,l) (xm)");
  support->add_option("--m", s.m)->required();
  support->add_option("--n", s.n)->capture_default_str();
  support->add_option("--l", s.l)->required();
  support->add_option("--p", s.p)->capture_default_str();
  support->add_option("--kind", s.kind)->check(CLI::IsMember({"xq", "xm"}))->capture_default_str();
  support->add_option("--out", s.out, "JSON file");
  support->add_flag("--compare", s.compare, "Compare X(2,n,m,l)(F2) with X(m,l)(F2)");
  support->callback([&] { code = cmd_support(s, g); });

  std::uint32_t lq = 2, ln = 1;
  std::string lcoeffs;
  auto* lfun = app.add_subcommand("lfun", "L-function and analytic rank of one twist");
  lfun->add_option("--q", lq)->capture_default_str();
  lfun->add_option("--n", ln)->capture_default_str();
  lfun->add_option("--coeffs", lcoeffs, "a_0,...,a_m")->required();
  lfun->callback([&] { code = cmd_lfun(lq, ln, lcoeffs, g); });

  MemberOptions mo;
  auto* member = app.add_subcommand("member", "Linear ideal membership certificate");
  member->add_option("--preset", mo.preset, "h0j1: H_{0,j,1} in (D0); ehbauer: H_{1,1,2} in (D0,D1); reflexive")
      ->check(CLI::IsMember({"h0j1", "ehbauer", "reflexive"}));
  member->add_option("--m", mo.m);
  member->add_option("--j", mo.j);
  member->add_option("--target", mo.target);
  member->add_option("--basis", mo.basis, "Repeat for each generator");
  member->add_option("--max-deg", mo.max_deg);
  member->callback([&] { code = cmd_member(mo, g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const std::invalid_argument& e) {  // includes guards on non-trivial parts and usage errors
    std::cerr << "carlitz-lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "carlitz-lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {  // enumeration and order guards
    std::cerr << "carlitz-lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "carlitz-lab: internal failure: " << e.what() << '\n';
    return kExitFail;
  }
  return code;
}
