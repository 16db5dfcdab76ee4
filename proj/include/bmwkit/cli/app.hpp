#pragma once

// The bmwkit command line: coeffs, verify, specialize, basis, oracle.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error (including
// n out of range), 3 pole or degenerate specialization.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bmwkit/engine/element_io.hpp"
#include "bmwkit/oracle/oracle.hpp"
#include "bmwkit/ring/rational.hpp"
#include "bmwkit/symmetrizer/symmetrizer.hpp"
#include "bmwkit/verify/suites.hpp"

namespace bmwkit::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kPole = 3 };

/// Largest n for symbolic work, and for the oracle behind --max-n.
inline constexpr int kDefaultMaxN = 6;
inline constexpr int kOracleMaxN = 7;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int f = -1;
  int l = 0;
  int max_n = kDefaultMaxN;
  std::string suite = "all";
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 20240601;
  int points = 3;
  std::string character = "both";
  std::string q, r;
  bool element = false;
};

/// BMWKIT_THREADS caps the worker count. Computation is single-threaded,
/// so any positive value is accepted; anything else is a usage error.
inline int thread_cap() {
  const char* v = std::getenv("BMWKIT_THREADS");
  if (v == nullptr || *v == '\0') return 1;
  char* end = nullptr;
  const long k = std::strtol(v, &end, 10);
  if (*end != '\0' || k < 1) throw UsageError("BMWKIT_THREADS must be a positive integer, got '" + std::string(v) + "'");
  return 1;
}

namespace detail {

inline void check_n(int n, int max_n) {
  if (n < 2 || n > max_n)
    throw UsageError("--n must be between 2 and " + std::to_string(max_n) + " (got " + std::to_string(n) + ")");
}

inline void check_symbolic_cap(int max_n) {
  if (max_n > kDefaultMaxN)
    throw UsageError("--max-n above " + std::to_string(kDefaultMaxN) + " is only available for the oracle command");
}

inline std::string coeffs_text(const CoeffTable& t, const std::optional<int>& only_f) {
  std::ostringstream os;
  os << "B_" << t.n << "(r,q) symmetrizer x = sum_f c_f x_f, normalization c_0 = 1\n";
  const int top = t.n / 2;
  auto show = [&](int f) { return !only_f || *only_f == f; };
  os << "\nc_f:\n";
  for (int f = 0; f <= top; ++f)
    if (show(f)) os << "  c_" << f << " = " << to_string(t.c[static_cast<std::size_t>(f)]) << '\n';
  os << "\nc_f / c_{f-1}:\n";
  for (int f = 1; f <= top; ++f)
    if (show(f)) os << "  c_" << f << "/c_" << f - 1 << " = " << to_string(c_ratio(t.n, f)) << '\n';
  os << "\na_f:\n";
  for (int f = 0; f <= top; ++f)
    if (show(f)) os << "  a_" << f << " = " << to_string(t.a[static_cast<std::size_t>(f)]) << '\n';
  os << "\nb_f:\n";
  for (int f = 0; f <= top; ++f)
    if (show(f)) os << "  b_" << f << " = " << to_string(t.b[static_cast<std::size_t>(f)]) << '\n';
  os << "\nd_f:\n";
  for (int f = 0; f <= top; ++f)
    if (show(f)) os << "  d_" << f << " = " << to_string(t.d[static_cast<std::size_t>(f)]) << '\n';
  return os.str();
}

/// The symmetrizer as an element, built directly from the closed form.
inline Element<RatFunc> symmetrizer_element(const Basis& basis) {
  const CoeffTable t = coeff_table(basis.n());
  Element<RatFunc> x(basis.n());
  for (std::size_t k = 0; k < basis.size(); ++k)
    x.add_term(static_cast<int>(k), t.c[static_cast<std::size_t>(basis[k].f)] * RatFunc::q(basis[k].total_length()));
  return x;
}

inline std::string render(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

inline int cmd_coeffs(const Options& o, std::ostream& out) {
  detail::check_symbolic_cap(o.max_n);
  detail::check_n(o.n, o.max_n);
  std::optional<int> only_f;
  if (o.f >= 0) {
    if (2 * o.f > o.n) throw UsageError("--f must satisfy 0 <= 2f <= n");
    only_f = o.f;
  }
  const CoeffTable t = coeff_table(o.n);
  if (o.format == "json") {
    nlohmann::json j = t.to_json();
    nlohmann::json ratios = nlohmann::json::array();
    for (int f = 1; 2 * f <= o.n; ++f) ratios.push_back(to_string(c_ratio(o.n, f)));
    j["ratio"] = ratios;
    nlohmann::json exact = nlohmann::json::array();
    for (const auto& c : t.c) exact.push_back(to_json(c));
    j["c_json"] = exact;
    if (o.element) {
      const Basis basis(o.n);
      j["symmetrizer"] = to_json(detail::symmetrizer_element(basis), basis);
    }
    out << detail::render(j);
  } else {
    out << detail::coeffs_text(t, only_f);
    if (o.element) {
      const Basis basis(o.n);
      const auto x = detail::symmetrizer_element(basis);
      out << "\nsymmetrizer terms (" << x.size() << "):\n";
      for (const auto& [k, c] : x.terms) out << "  " << basis[static_cast<std::size_t>(k)].to_string() << "  " << to_string(c) << '\n';
    }
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  static const std::vector<std::string> suites{"relations", "lemmas", "symmetrizer", "specialization", "oracle", "all"};
  if (std::find(suites.begin(), suites.end(), o.suite) == suites.end()) throw UsageError("unknown suite: " + o.suite);
  detail::check_symbolic_cap(o.max_n);
  detail::check_n(o.n, o.max_n);
  Report rep;
  auto want = [&](const std::string& s) { return o.suite == "all" || o.suite == s; };
  if (o.suite != "oracle") {
    SymbolicEngine eng(o.n);
    if (want("relations")) verify::relations_suite(eng, rep, o.seed);
    if (want("lemmas")) verify::lemmas_suite(eng, rep);
    if (want("symmetrizer")) verify::symmetrizer_suite(eng, rep);
    if (want("specialization")) verify::specialization_suite(eng, rep);
  }
  if (want("oracle")) verify::oracle_suite(o.n, rep, o.seed, o.points);
  if (o.format == "json") {
    nlohmann::json j = rep.to_json();
    j["n"] = o.n;
    j["suite"] = o.suite;
    out << detail::render(j);
  } else {
    out << "verify n=" << o.n << " suite=" << o.suite << "\n" << rep.to_text();
  }
  return rep.all_passed() ? kOk : kVerifyFailed;
}

inline int cmd_specialize(const Options& o, std::ostream& out) {
  detail::check_symbolic_cap(o.max_n);
  if (o.l < 1) throw UsageError("--l must be at least 1");
  const int n = o.l + 1;
  if (n > o.max_n) throw UsageError("--l must satisfy l + 1 <= " + std::to_string(o.max_n));
  const verify::SpecializationData d = verify::specialization_data(o.l);
  SymbolicEngine eng(n);
  Report rep;
  verify::specialization_suite(eng, rep);
  if (o.format == "json") {
    nlohmann::json ratios = nlohmann::json::array(), coeff = nlohmann::json::array();
    for (int f = 1; 2 * f <= n; ++f) {
      ratios.push_back({{"f", f}, {"ratio", to_string(d.ratios[static_cast<std::size_t>(f)])}});
    }
    for (int f = 0; 2 * f <= n; ++f)
      coeff.push_back({{"f", f}, {"pattern", "q^" + std::to_string(d.exponent[static_cast<std::size_t>(f)]) +
                                                 " * (-q)^(-l(u)-l(s)-l(d))"}});
    nlohmann::json j{{"l", o.l}, {"n", n}, {"substitution", "q -> -q^-1, r -> -q^" + std::to_string(2 * o.l + 1)},
                     {"ratios", ratios}, {"antisymmetrizer_coefficients", coeff}, {"checks", rep.to_json(false)}};
    out << detail::render(j);
  } else {
    out << "l = " << o.l << ", n = " << n << ": q -> -q^-1, then r -> -q^" << 2 * o.l + 1 << "\n\n";
    for (int f = 1; 2 * f <= n; ++f)
      out << "  c_" << f << "/c_" << f - 1 << " = " << to_string(d.ratios[static_cast<std::size_t>(f)]) << '\n';
    out << "\nantisymmetrizer coefficient of T_u T_sigma E^_f T_d:\n";
    for (int f = 0; 2 * f <= n; ++f)
      out << "  f = " << f << ":  q^" << d.exponent[static_cast<std::size_t>(f)] << " * (-q)^(-l(u)-l(sigma)-l(d))\n";
    out << '\n' << rep.to_text(false);
  }
  return rep.all_passed() ? kOk : kVerifyFailed;
}

inline int cmd_basis(const Options& o, std::ostream& out) {
  detail::check_symbolic_cap(o.max_n);
  if (o.n < 1 || o.n > o.max_n) throw UsageError("--n must be between 1 and " + std::to_string(o.max_n));
  const Basis basis(o.n);
  auto word_tokens = [&](std::size_t k) {
    std::vector<std::string> w;
    for (const Gen& g : basis.word(k)) w.push_back(g.to_string());
    return w;
  };
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (o.f >= 0 && basis[k].f != o.f) continue;
      arr.push_back({{"index", k},
                     {"monomial", basis[k].to_string()},
                     {"word", word_tokens(k)},
                     {"shadow", nlohmann::json::parse(basis.diagram(k).to_json())}});
    }
    out << detail::render({{"n", o.n}, {"size", basis.size()}, {"monomials", arr}});
  } else {
    out << "B_" << o.n << " normal-form basis T_u T_sigma E^_f T_d: " << basis.size() << " monomials\n";
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (o.f >= 0 && basis[k].f != o.f) continue;
      std::string w;
      for (const auto& t : word_tokens(k)) w += (w.empty() ? "" : " ") + t;
      out << k << "  " << basis[k].to_string() << "  [" << w << "]  " << basis.diagram(k).to_json() << '\n';
    }
  }
  return kOk;
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.max_n > kOracleMaxN) throw UsageError("--max-n is at most " + std::to_string(kOracleMaxN));
  detail::check_n(o.n, o.max_n);
  std::vector<Character> chars;
  if (o.character == "rho1" || o.character == "both") chars.push_back(Character::rho1);
  if (o.character == "rho2" || o.character == "both") chars.push_back(Character::rho2);
  if (chars.empty()) throw UsageError("--character must be rho1, rho2 or both");
  if (o.q.empty() != o.r.empty()) throw UsageError("--q and --r must be given together");
  if (o.points < 1) throw UsageError("--points must be positive");

  const auto basis = Basis::make(o.n);
  std::vector<OracleReport> reports;
  if (!o.q.empty()) {
    mpq_class q0, r0;
    try {
      q0 = parse_rational(o.q);
      r0 = parse_rational(o.r);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    for (Character c : chars) reports.push_back(run_oracle(basis, q0, r0, c));
  } else {
    PointSampler sampler(o.seed);
    for (int p = 0; p < o.points; ++p) {
      // one pole-free, generic point per iteration, shared by both characters
      for (int t = 0;; ++t) {
        if (t == 100) throw std::runtime_error("no generic point found");
        auto [q0, r0] = sampler.next();
        std::vector<OracleReport> here;
        try {
          for (Character c : chars) here.push_back(run_oracle(basis, q0, r0, c));
        } catch (const PoleError&) {
          continue;
        }
        bool generic = true;
        for (const auto& r : here) generic = generic && r.dim == 1;
        if (!generic) continue;
        reports.insert(reports.end(), here.begin(), here.end());
        break;
      }
    }
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.dim == 1 && r.match;
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    out << detail::render(arr);
  } else {
    out << "oracle n=" << o.n << " (dimension " << basis->size() << ")\n";
    for (const auto& r : reports)
      out << "  " << (r.which == Character::rho1 ? "rho1" : "rho2") << "  q=" << r.q0.get_str() << "  r=" << r.r0.get_str()
          << "  dim=" << r.dim << "  match=" << (r.match ? "true" : "false") << "  scale=" << r.scale.get_str() << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

/// Parses arguments and runs one subcommand. Output goes to `out` unless
/// --out names a file.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"bmwkit: exact computations in the BMW algebra B_n(r,q)"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sc) {
    sc->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sc->add_option("--out", o.out, "write output to this file instead of stdout");
    sc->add_option("--max-n", o.max_n, "largest accepted n (default 6; the oracle accepts up to 7)");
  };
  auto* coeffs = app.add_subcommand("coeffs", "coefficients c_f (normalization c_0 = 1), a_f, b_f, d_f");
  coeffs->add_option("--n", o.n, "degree n")->required();
  coeffs->add_option("--f", o.f, "show only this f in text output");
  coeffs->add_flag("--element", o.element, "also print the symmetrizer element");
  add_common(coeffs);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--n", o.n, "degree n")->required();
  ver->add_option("--suite", o.suite, "relations, lemmas, symmetrizer, specialization, oracle or all");
  ver->add_option("--seed", o.seed, "seed for sampled monomials and oracle points");
  ver->add_option("--points", o.points, "number of oracle points");
  add_common(ver);

  auto* spec = app.add_subcommand("specialize", "ratios and antisymmetrizer pattern at r = -q^{2l+1}");
  spec->add_option("--l", o.l, "l >= 1 (n = l + 1)")->required();
  add_common(spec);

  auto* bas = app.add_subcommand("basis", "list the normal-form basis");
  bas->add_option("--n", o.n, "degree n")->required();
  bas->add_option("--f", o.f, "only monomials with this f");
  add_common(bas);

  auto* orc = app.add_subcommand("oracle", "numeric nullspace check at rational points");
  orc->add_option("--n", o.n, "degree n")->required();
  orc->add_option("--seed", o.seed, "seed for random points");
  orc->add_option("--points", o.points, "number of random points");
  orc->add_option("--q", o.q, "fixed q0 (rational, e.g. 2/7)");
  orc->add_option("--r", o.r, "fixed r0 (rational)");
  orc->add_option("--character", o.character, "rho1, rho2 or both");
  add_common(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  std::ostringstream buf;
  int code = kOk;
  try {
    thread_cap();
    if (coeffs->parsed()) code = cmd_coeffs(o, buf);
    else if (ver->parsed()) code = cmd_verify(o, buf);
    else if (spec->parsed()) code = cmd_specialize(o, buf);
    else if (bas->parsed()) code = cmd_basis(o, buf);
    else code = cmd_oracle(o, buf);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << '\n';
    return kPole;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  if (o.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << o.out << '\n';
      return kUsage;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace bmwkit::cli
