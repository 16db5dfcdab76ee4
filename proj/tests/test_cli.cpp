#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bmwkit/cli/app.hpp"

using namespace bmwkit;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bmwkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

/// Exit status of the installed binary.
int run_binary(const std::string& args) {
  const std::string cmd = std::string(BMWKIT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("coeffs prints the closed form", "[cli]") {
  const auto r = run({"coeffs", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c_0 = 1") != std::string::npos);
  // -(q - q^-1)/(r - q^-1) with numerator and denominator multiplied by q
  CHECK(r.out.find("c_1 = (-q^2 + 1)/(q*r - 1)") != std::string::npos);
  CHECK(r.out.find("normalization c_0 = 1") != std::string::npos);
  const auto only = run({"coeffs", "--n", "4", "--f", "2"});
  CHECK(only.code == 0);
  CHECK(only.out.find("  c_1 = ") == std::string::npos);
  CHECK(only.out.find("  c_2 = ") != std::string::npos);
}

TEST_CASE("coeffs JSON round-trips", "[cli]") {
  const auto r = run({"coeffs", "--n", "4", "--format", "json", "--element"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const CoeffTable t = coeff_table(4);
  REQUIRE(j.at("c").size() == 3);
  for (std::size_t f = 0; f < 3; ++f) {
    CHECK(parse_ratfunc(j.at("c")[f].get<std::string>()) == t.c[f]);
    CHECK(ratfunc_from_json(j.at("c_json")[f]) == t.c[f]);
  }
  const Basis basis(4);
  const auto x = element_from_json(j.at("symmetrizer"), basis);
  CHECK(x.size() == basis.size());
  CHECK(x == symmetrizer(SymbolicEngine(4)));
}

TEST_CASE("output is byte-identical across runs", "[cli]") {
  const auto a = run({"coeffs", "--n", "5", "--format", "json"});
  const auto b = run({"coeffs", "--n", "5", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(run({"coeffs", "--n", "7"}).code == 2);
  CHECK(run({"coeffs", "--n", "1"}).code == 2);
  CHECK(run({"coeffs", "--n", "7", "--max-n", "7"}).code == 2);
  CHECK(run({"coeffs", "--n", "4", "--f", "3"}).code == 2);
  CHECK(run({"coeffs"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--n", "3", "--suite", "nope"}).code == 2);
  CHECK(run({"specialize", "--l", "0"}).code == 2);
  CHECK(run({"specialize", "--l", "6"}).code == 2);
  CHECK(run({"oracle", "--n", "2", "--q", "2"}).code == 2);
  CHECK(run({"oracle", "--n", "2", "--character", "rho3"}).code == 2);
  CHECK(run({"coeffs", "--n", "2", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("poles exit with 3", "[cli]") {
  const auto r = run({"oracle", "--n", "2", "--q", "1", "--r", "3"});
  CHECK(r.code == 3);
  CHECK(!r.err.empty());
  // r = q^-1 is a pole of c_1 at n = 2
  CHECK(run({"oracle", "--n", "2", "--q", "2", "--r", "1/2"}).code == 3);
}

TEST_CASE("oracle command", "[cli]") {
  const auto r = run({"oracle", "--n", "3", "--q", "2", "--r", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  for (const auto& rep : j) {
    CHECK(rep.at("dim") == 1);
    CHECK(rep.at("match") == true);
    CHECK(rep.at("n") == 3);
  }
  const auto seeded = run({"oracle", "--n", "3", "--points", "2", "--character", "rho1", "--format", "json"});
  REQUIRE(seeded.code == 0);
  CHECK(nlohmann::json::parse(seeded.out).size() == 2);
}

TEST_CASE("specialize command", "[cli]") {
  const auto r1 = run({"specialize", "--l", "1"});
  CHECK(r1.code == 0);
  CHECK(r1.out.find("c_1/c_0 = q^-2") != std::string::npos);
  const auto r3 = run({"specialize", "--l", "3", "--format", "json"});
  REQUIRE(r3.code == 0);
  const auto j = nlohmann::json::parse(r3.out);
  CHECK(j.at("n") == 4);
  CHECK(j.at("ratios")[0].at("ratio") == "q^-2");
  CHECK(j.at("ratios")[1].at("ratio") == "q^-6");
  CHECK(j.at("checks").at("ok") == true);
}

TEST_CASE("basis and verify commands", "[cli]") {
  const auto b = run({"basis", "--n", "3", "--format", "json"});
  REQUIRE(b.code == 0);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j.at("size") == 15);
  CHECK(j.at("monomials").size() == 15);
  const auto b1 = run({"basis", "--n", "2", "--f", "1", "--format", "json"});
  const auto j1 = nlohmann::json::parse(b1.out);
  REQUIRE(j1.at("monomials").size() == 1);
  CHECK(j1.at("monomials")[0].at("word") == nlohmann::json::array({"E(1)"}));
  CHECK(j1.at("monomials")[0].at("shadow") == nlohmann::json::parse("[[1,2],[-1,-2]]"));

  const auto v = run({"verify", "--n", "3", "--suite", "all"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  const auto vj = run({"verify", "--n", "2", "--suite", "oracle", "--format", "json"});
  CHECK(vj.code == 0);
  CHECK(nlohmann::json::parse(vj.out).at("ok") == true);
}

TEST_CASE("--out writes to a file", "[cli]") {
  const auto path = std::filesystem::temp_directory_path() / "bmwkit_cli_test_out.json";
  const auto r = run({"coeffs", "--n", "3", "--format", "json", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  CHECK(j.at("n") == 3);
  std::filesystem::remove(path);
}

TEST_CASE("BMWKIT_THREADS is validated", "[cli]") {
  ::setenv("BMWKIT_THREADS", "abc", 1);
  CHECK(run({"coeffs", "--n", "2"}).code == 2);
  ::setenv("BMWKIT_THREADS", "0", 1);
  CHECK(run({"coeffs", "--n", "2"}).code == 2);
  ::setenv("BMWKIT_THREADS", "4", 1);
  CHECK(run({"coeffs", "--n", "2"}).code == 0);
  ::unsetenv("BMWKIT_THREADS");
  CHECK(run({"coeffs", "--n", "2"}).code == 0);
}

TEST_CASE("the installed binary reports exit codes", "[cli]") {
  CHECK(run_binary("coeffs --n 3") == 0);
  CHECK(run_binary("coeffs --n 7") == 2);
  CHECK(run_binary("oracle --n 2 --q 1 --r 3") == 3);
}
