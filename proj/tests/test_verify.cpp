#include <catch_amalgamated.hpp>

#include <set>

#include "bmwkit/verify/suites.hpp"

using namespace bmwkit;

namespace {

void require_all_pass(const Report& rep) {
  for (const auto& r : rep.results()) {
    INFO("[" << r.suite << "] " << r.name << " -- " << r.detail);
    CHECK(r.pass);
  }
  CHECK(!rep.results().empty());
}

}  // namespace

TEST_CASE("defining relations are enumerated per index", "[verify]") {
  const auto rels = verify::defining_relations(4);
  std::set<std::string> families;
  for (const auto& r : rels) families.insert(r.family);
  CHECK(families.size() >= 8);
  CHECK(verify::defining_relations(2).size() < rels.size());
}

TEST_CASE("report records exceptions as failures", "[verify]") {
  Report rep;
  rep.check("s", "passes", [] { return true; });
  rep.check("s", "throws", []() -> Verdict { throw std::runtime_error("boom"); });
  rep.check("s", "fails", [] { return Verdict(false, "why"); });
  CHECK(rep.results().size() == 3);
  CHECK(rep.failures() == 2);
  CHECK(!rep.all_passed());
  CHECK(rep.results()[1].detail.find("boom") != std::string::npos);
  const auto j = rep.to_json(false);
  CHECK(j.at("passed") == 1);
  CHECK(j.at("total") == 3);
  CHECK(j.at("ok") == false);
  CHECK(rep.to_text(false).find("FAIL") != std::string::npos);
}

TEST_CASE("all suites pass for n = 2..4", "[verify]") {
  for (int n = 2; n <= 4; ++n) {
    SymbolicEngine eng(n);
    Report rep;
    verify::relations_suite(eng, rep, 1);
    verify::lemmas_suite(eng, rep);
    verify::symmetrizer_suite(eng, rep);
    verify::specialization_suite(eng, rep);
    verify::oracle_suite(n, rep, 1, 2);
    require_all_pass(rep);
  }
}

TEST_CASE("sampled relations at n = 5", "[verify]") {
  SymbolicEngine eng(5);
  Report rep;
  verify::relations_suite(eng, rep, 20240601, 40);
  require_all_pass(rep);
}

TEST_CASE("specialization data", "[verify]") {
  const auto d = verify::specialization_data(4);
  REQUIRE(d.ratios.size() == 3);
  CHECK(d.ratios[1] == RatFunc::q(-2));
  CHECK(d.ratios[2] == RatFunc::q(-6));
  // exponents are partial sums of 2 - 4f: -2, -8 = -2 f^2
  CHECK(d.exponent[1] == -2);
  CHECK(d.exponent[2] == -8);
}
