#include <catch_amalgamated.hpp>

#include "bmwkit/oracle/oracle.hpp"

using namespace bmwkit;
namespace mod = bmwkit::modular;

namespace {

using Vec = std::vector<mpq_class>;

/// Applies a word of matrices (right action) to every unit vector.
std::vector<Vec> act(const std::vector<const SpecMatrix*>& word, int dim) {
  std::vector<Vec> out;
  for (int k = 0; k < dim; ++k) {
    Vec v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(k)] = 1;
    for (const SpecMatrix* m : word) v = row_times(v, *m);
    out.push_back(std::move(v));
  }
  return out;
}

const SpecMatrix& find(const std::vector<SpecMatrix>& mats, Gen::Kind k, int i) {
  for (const auto& m : mats)
    if (m.label.kind == k && m.label.i == i) return m;
  throw std::logic_error("missing matrix");
}

}  // namespace

TEST_CASE("modular arithmetic helpers", "[oracle]") {
  const mod::u64 p = (1ULL << 61) - 1;  // a Mersenne prime
  CHECK(mod::is_prime(p));
  CHECK(!mod::is_prime(p - 2));
  CHECK(mod::is_prime(2));
  CHECK(!mod::is_prime(1));
  CHECK(mod::mulmod(mod::invmod(12345, p), 12345, p) == 1);
  CHECK(mod::powmod(3, p - 1, p) == 1);
  const mod::u64 p0 = mod::nth_prime(0), p1 = mod::nth_prime(1);
  CHECK(p0 > p1);
  CHECK(p0 < (1ULL << 62));
  CHECK(mod::is_prime(p0));
  CHECK(mod::is_prime(p1));
  // 3/7 mod p reduces and reconstructs
  const auto r = mod::reduce(mpq_class(3, 7), p);
  REQUIRE(r);
  CHECK(mod::mulmod(*r, 7, p) == 3);
  const auto back = mod::rational_reconstruction(mpz_class(std::to_string(*r)), mpz_class(std::to_string(p)));
  REQUIRE(back);
  CHECK(*back == mpq_class(3, 7));
  // 1/p is not defined mod p
  CHECK(!mod::reduce(mpq_class(mpz_class(1), mpz_class(std::to_string(p))), p));
}

TEST_CASE("incremental echelon form", "[oracle]") {
  const mod::u64 p = 101;
  mod::Echelon ech(3, p);
  // x + y + z = 0, x - y = 0: nullspace spanned by (1, 1, -2)
  CHECK(ech.insert({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(ech.insert({{0, 1}, {1, p - 1}}));
  CHECK(!ech.insert({{0, 2}, {1, 2}, {2, 2}}));
  CHECK(ech.rank() == 2);
  CHECK(ech.nullity() == 1);
  const auto free = ech.free_columns();
  REQUIRE(free.size() == 1);
  auto v = ech.null_vector(free[0]);
  // normalize so that the first entry is 1
  const mod::u64 s = mod::invmod(v[0], p);
  for (auto& x : v) x = mod::mulmod(x, s, p);
  CHECK(v == std::vector<mod::u64>{1, 1, p - 2});
}

TEST_CASE("action matrices satisfy the defining relations numerically", "[oracle]") {
  const PointField field(mpq_class(2), mpq_class(3));
  PointEngine eng(Basis::make(3), field);
  const auto mats = build_action(eng);
  const int dim = 15;
  const SpecMatrix &T1 = find(mats, Gen::T, 1), &T2 = find(mats, Gen::T, 2);
  const SpecMatrix &E1 = find(mats, Gen::E, 1), &E2 = find(mats, Gen::E, 2);
  CHECK(act({&T1, &T2, &T1}, dim) == act({&T2, &T1, &T2}, dim));
  CHECK(act({&E1, &E2, &E1}, dim) == act({&E1}, dim));
  auto e1e1 = act({&E1, &E1}, dim), e1 = act({&E1}, dim);
  for (auto& row : e1) for (auto& x : row) x *= mpq_class(25, 9);  // delta(2,3)
  CHECK(e1e1 == e1);
  // E_1 T_1 = r^{-1} E_1
  auto e1t1 = act({&E1, &T1}, dim), e1r = act({&E1}, dim);
  for (auto& row : e1r) for (auto& x : row) x /= 3;
  CHECK(e1t1 == e1r);
}

TEST_CASE("E_1 acts with rank 1 on B_2", "[oracle]") {
  PointEngine eng(Basis::make(2), PointField(mpq_class(2), mpq_class(3)));
  const auto mats = build_action(eng);
  const auto rows = act({&find(mats, Gen::E, 1)}, 3);
  // every row is a multiple of the unit vector at E_1
  for (const auto& row : rows) {
    CHECK(sgn(row[0]) == 0);
    CHECK(sgn(row[1]) == 0);
  }
  CHECK(sgn(rows[2][2]) != 0);
}

TEST_CASE("nullspace at (q, r) = (2, 3) in B_2", "[oracle]") {
  PointEngine eng(Basis::make(2), PointField(mpq_class(2), mpq_class(3)));
  const auto mats = build_action(eng);
  // x = 1 + 2 T_1 + c_1 E_1 with c_1 = -(2 - 1/2)/(3 - 1/2) = -3/5
  const IdealSolution sol = solve_ideal(mats, mpq_class(2));
  REQUIRE(sol.dim == 1);
  const mpq_class s = sol.vector[0];
  REQUIRE(sgn(s) != 0);
  CHECK(sol.vector[1] / s == 2);
  CHECK(sol.vector[2] / s == mpq_class(-3, 5));
  // no vector has eigenvalue 5 for every T_i
  CHECK(solve_ideal(mats, mpq_class(5)).dim == 0);
}

TEST_CASE("oracle matches the closed form", "[oracle]") {
  for (int n = 2; n <= 4; ++n) {
    const auto basis = Basis::make(n);
    for (Character c : {Character::rho1, Character::rho2}) {
      const OracleReport r = run_oracle(basis, mpq_class(2), mpq_class(3), c);
      CHECK(r.dim == 1);
      CHECK(r.match);
      CHECK(sgn(r.scale) != 0);
    }
    PointSampler sampler(42);
    const OracleReport r = run_oracle_random(basis, sampler, Character::rho2);
    CHECK(r.dim == 1);
    CHECK(r.match);
  }
  const OracleReport r = run_oracle(Basis::make(2), mpq_class(2), mpq_class(3), Character::rho2);
  const auto j = r.to_json();
  CHECK(j.at("character") == "rho2");
  CHECK(j.at("point").at("q") == "2");
  CHECK(j.at("dim") == 1);
  CHECK(j.at("match") == true);
}

TEST_CASE("oracle rejects singular points", "[oracle]") {
  const auto basis = Basis::make(2);
  CHECK_THROWS_AS(run_oracle(basis, mpq_class(1), mpq_class(3), Character::rho1), PoleError);
  // r = q^{-1} is a pole of c_1 in B_2
  CHECK_THROWS_AS(run_oracle(basis, mpq_class(2), mpq_class(1, 2), Character::rho1), PoleError);
}

TEST_CASE("point sampler is deterministic", "[oracle]") {
  PointSampler a(7), b(7), c(8);
  bool differs = false;
  for (int k = 0; k < 10; ++k) {
    const auto pa = a.next(), pb = b.next(), pc = c.next();
    CHECK(pa == pb);
    differs = differs || pa != pc;
    CHECK(pa.first > 0);
    CHECK(pa.second > 0);
  }
  CHECK(differs);
}
