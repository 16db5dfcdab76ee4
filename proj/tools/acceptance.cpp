// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Sub-check failures are listed under the criterion they belong to.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "bmwkit/symmetrizer/symmetrizer.hpp"
#include "bmwkit/verify/suites.hpp"

using namespace bmwkit;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Folds a report into an outcome, keeping the names of failed checks.
Outcome from_report(const Report& rep) {
  Outcome o;
  for (const auto& r : rep.results())
    if (!r.pass) {
      o.pass = false;
      o.detail += "\n      FAIL [" + r.suite + "] " + r.name + (r.detail.empty() ? "" : " -- " + r.detail);
    }
  if (o.pass) o.detail = std::to_string(rep.results().size()) + " checks";
  return o;
}

/// Symbolic engines are shared between criteria so tables are built once.
SymbolicEngine& engine(int n) {
  static std::map<int, std::unique_ptr<SymbolicEngine>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SymbolicEngine>(n);
  return *slot;
}

Outcome basis_counts() {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t expect = 1;
  for (int n = 1; n <= 6; ++n) {
    expect *= static_cast<std::uint64_t>(2 * n - 1);
    const Basis b(n);
    if (b.size() != expect) return {false, "n=" + std::to_string(n) + ": " + std::to_string(b.size())};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s >= 1.0) return {false, "took " + std::to_string(s) + " s"};
  return {true, "1, 3, 15, 105, 945, 10395"};
}

Outcome relations() {
  Report rep;
  for (int n = 2; n <= 6; ++n) verify::relations_suite(engine(n), rep, kSeed, 200);
  return from_report(rep);
}

Outcome lemmas() {
  Report rep;
  for (int n = 3; n <= 5; ++n) verify::lemmas_suite(engine(n), rep);
  return from_report(rep);
}

Outcome solved_ratios() {
  Report rep;
  for (int n = 2; n <= 5; ++n)
    rep.check("ratios n=" + std::to_string(n), "engine-solved c_f/c_{f-1} equal the closed form", [&]() -> Verdict {
      const SolvedRatios s = solve_c_ratios(engine(n));
      if (!s.expansion_ok) return {false, "x_f E_1 does not expand in the script-E elements"};
      if (!s.independent) return {false, "script-E elements overlap"};
      for (int f = 1; 2 * f <= n; ++f)
        if (!(s.ratio[static_cast<std::size_t>(f)] == c_ratio(n, f)))
          return {false, "f=" + std::to_string(f) + ": " + to_string(s.ratio[static_cast<std::size_t>(f)])};
      return true;
    });
  return from_report(rep);
}

Outcome eigen_and_kappa() {
  Report rep;
  for (int n = 2; n <= 5; ++n) {
    SymbolicEngine& eng = engine(n);
    const std::string suite = "eigen n=" + std::to_string(n);
    const SymElement x = symmetrizer(eng), y = antisymmetrizer(eng);
    auto eigen = [&](const SymElement& v, const RatFunc& lambda) -> Verdict {
      for (int i = 1; i < n; ++i) {
        if (!eng.right_mul_gen(v, {Gen::E, i}).is_zero()) return {false, "E_" + std::to_string(i)};
        if (!(eng.right_mul_gen(v, {Gen::T, i}) == lambda * v)) return {false, "T_" + std::to_string(i)};
      }
      return true;
    };
    rep.check(suite, "x E_i = 0, x T_i = q x", [&] { return eigen(x, RatFunc::q(1)); });
    rep.check(suite, "y E_i = 0, y T_i = -q^-1 y", [&] { return eigen(y, -RatFunc::q(-1)); });
    rep.check(suite, "x^2 = kappa x, kappa = sum_w q^{2 l(w)}", [&]() -> Verdict {
      const RatFunc k = quasi_idempotent_scalar(eng, x, true);
      return {k == verify::detail::poincare_square_sum(n), to_string(k)};
    });
  }
  return from_report(rep);
}

Outcome oracle() {
  Report rep;
  for (int n = 2; n <= 6; ++n) verify::oracle_suite(n, rep, kSeed, 3);
  return from_report(rep);
}

Outcome specialization() {
  Report rep;
  for (int l = 1; l <= 4; ++l) verify::specialization_suite(engine(l + 1), rep);
  return from_report(rep);
}

Outcome deterministic_cli() {
  auto capture = [](std::string& out) {
    const std::string cmd = std::string(BMWKIT_CLI_PATH) + " coeffs --n 5 --format json";
    FILE* p = ::popen(cmd.c_str(), "r");
    if (p == nullptr) return -1;
    char buf[4096];
    std::size_t k;
    while ((k = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
    return ::pclose(p);
  };
  std::string a, b;
  if (capture(a) != 0 || capture(b) != 0) return {false, "command failed"};
  if (a.empty()) return {false, "no output"};
  if (a != b) return {false, "outputs differ"};
  return {true, std::to_string(a.size()) + " identical bytes"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"basis sizes (2n-1)!! for n = 1..6 in under 1 s", basis_counts},
      {"defining relations: exhaustive n = 2..4, 200 sampled monomials n = 5, 6", relations},
      {"coset and factorization identities for n = 3..5", lemmas},
      {"engine-solved ratios c_f/c_{f-1} equal the closed form for n = 2..5", solved_ratios},
      {"symmetrizer/antisymmetrizer eigen relations and x^2 = kappa x for n = 2..5", eigen_and_kappa},
      {"numeric oracle, n = 2..6, 3 seeded points, both characters", oracle},
      {"specialization r = -q^{2l+1} for l = 1..4", specialization},
      {"bmwkit coeffs --n 5 output is byte-identical across runs", deterministic_cli},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << k + 1 << ": " << criteria[k].first << "  ("
              << std::fixed << std::setprecision(1) << s << " s)";
    if (!o.detail.empty()) std::cout << (o.pass ? "  -- " : "") << o.detail;
    std::cout << std::endl;
  }
  std::cout << (failed == 0 ? "all 8 criteria passed" : std::to_string(failed) + " of 8 criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
