#include <catch_amalgamated.hpp>

#include <random>

#include "bmwkit/engine/element_io.hpp"
#include "bmwkit/engine/engine.hpp"

using namespace bmwkit;

namespace {

const RatFunc Q = RatFunc::q(1);
const RatFunc R = RatFunc::r(1);

Gen T(int i) { return {Gen::T, i}; }
Gen Ti(int i) { return {Gen::Tinv, i}; }
Gen E(int i) { return {Gen::E, i}; }

Element<RatFunc> random_element(const SymbolicEngine& eng, std::mt19937_64& rng) {
  Element<RatFunc> e(eng.n());
  for (int t = 0; t < 3; ++t) {
    const int k = static_cast<int>(rng() % eng.basis().size());
    e.add_term(k, RatFunc(static_cast<long>(rng() % 5) + 1) * RatFunc::q(static_cast<int>(rng() % 3) - 1));
  }
  return e;
}

/// prod_{k=1..n} (1 + q^2 + ... + q^{2(k-1)})
RatFunc poincare(int n) {
  RatFunc p(1);
  for (int k = 1; k <= n; ++k) {
    RatFunc s;
    for (int j = 0; j < k; ++j) s += RatFunc::q(2 * j);
    p *= s;
  }
  return p;
}

}  // namespace

TEST_CASE("generator products in B_2 and B_3", "[engine]") {
  SymbolicEngine e2(2);
  const auto e1 = e2.word({E(1)});
  CHECK(e2.word({E(1), T(1)}) == R.pow(-1) * e1);
  CHECK(e2.word({T(1), E(1)}) == R.pow(-1) * e1);
  CHECK(e2.word({E(1), E(1)}) == RatFunc::delta() * e1);
  CHECK(e2.word({T(1), Ti(1)}) == e2.identity());
  CHECK(e2.word({Ti(1), T(1)}) == e2.identity());
  // T_1^{-1} = T_1 - (q - q^-1)(1 - E_1)
  const RatFunc z = RatFunc::qdiff();
  CHECK(e2.word({Ti(1)}) == e2.word({T(1)}) - z * e2.identity() + z * e1);
  // T_1^2 = 1 + z T_1 - z r^{-1} E_1
  CHECK(e2.word({T(1), T(1)}) == e2.identity() + z * e2.word({T(1)}) - z * R.pow(-1) * e1);

  SymbolicEngine e3(3);
  CHECK(e3.word({E(1), E(2), E(1)}) == e3.word({E(1)}));
  CHECK(e3.word({E(2), E(1), E(2)}) == e3.word({E(2)}));
  CHECK(e3.word({E(1), T(2), E(1)}) == R * e3.word({E(1)}));
  CHECK(e3.word({E(1), Ti(2), E(1)}) == R.pow(-1) * e3.word({E(1)}));
  CHECK(e3.word({T(1), T(2), T(1)}) == e3.word({T(2), T(1), T(2)}));
  CHECK(e3.word({T(1), T(2), E(1)}) == e3.word({E(2), T(1), T(2)}));
}

TEST_CASE("multiplication is associative", "[engine]") {
  std::mt19937_64 rng(5);
  for (int n : {3, 4}) {
    SymbolicEngine eng(n);
    for (int it = 0; it < 15; ++it) {
      const auto a = random_element(eng, rng), b = random_element(eng, rng), c = random_element(eng, rng);
      CHECK(eng.mul(eng.mul(a, b), c) == eng.mul(a, eng.mul(b, c)));
    }
  }
}

TEST_CASE("hat sums over symmetric groups", "[engine]") {
  SymbolicEngine e2(2);
  CHECK(e2.hat_sum(symmetric_group(2)) == e2.identity() + Q * e2.word({T(1)}));
  SymbolicEngine e3(3);
  const auto s3 = e3.hat_sum(symmetric_group(3));
  REQUIRE(s3.size() == 6);
  std::multiset<std::string> coeffs;
  for (const auto& [k, c] : s3.terms) coeffs.insert(to_string(c));
  CHECK(coeffs == std::multiset<std::string>{"1", "q", "q", "q^2", "q^2", "q^3"});
  for (int n = 2; n <= 4; ++n) {
    SymbolicEngine eng(n);
    const auto s = eng.hat_sum(symmetric_group(n));
    CHECK(eng.linear_character(s, Character::rho1) == poincare(n));
    CHECK(eng.linear_character(s, Character::rho2).is_zero());
  }
}

TEST_CASE("linear characters", "[engine]") {
  SymbolicEngine eng(3);
  CHECK(eng.linear_character(eng.word({T(1)}), Character::rho1) == Q);
  CHECK(eng.linear_character(eng.word({T(1)}), Character::rho2) == -Q.pow(-1));
  CHECK(eng.linear_character(eng.word({E(2)}), Character::rho1).is_zero());
  CHECK(eng.linear_character(eng.word({Ti(1)}), Character::rho1) == Q.pow(-1));
  std::mt19937_64 rng(9);
  for (int it = 0; it < 10; ++it) {
    const auto a = random_element(eng, rng), b = random_element(eng, rng);
    for (Character c : {Character::rho1, Character::rho2})
      CHECK(eng.linear_character(eng.mul(a, b), c) == eng.linear_character(a, c) * eng.linear_character(b, c));
  }
}

TEST_CASE("bar reverses words and flip acts on coefficients", "[engine]") {
  SymbolicEngine eng(3);
  CHECK(eng.bar(eng.word({T(1), E(2)})) == eng.word({E(2), T(1)}));
  const auto s = eng.hat_sum(symmetric_group(3));
  CHECK(eng.bar(s) == s);
  std::mt19937_64 rng(13);
  for (int it = 0; it < 10; ++it) {
    const auto a = random_element(eng, rng), b = random_element(eng, rng);
    CHECK(eng.bar(eng.bar(a)) == a);
    CHECK(eng.bar(eng.mul(a, b)) == eng.mul(eng.bar(b), eng.bar(a)));
    CHECK(flip(eng.mul(a, b)) == eng.mul(flip(a), flip(b)));
  }
  CHECK(flip(Q * eng.word({T(1)})) == -Q.pow(-1) * eng.word({T(1)}));
}

TEST_CASE("point engine agrees with the symbolic engine", "[engine]") {
  const auto basis = Basis::make(3);
  SymbolicEngine sym(basis, SymbolicField{});
  const PointField field(mpq_class(3, 2), mpq_class(-5, 7));
  PointEngine pt(basis, field);
  for (std::size_t k = 0; k < basis->size(); ++k)
    for (Gen g : {T(1), T(2), Ti(1), E(1), E(2)}) {
      const auto lhs = specialize(sym.right_mul_gen(sym.monomial(static_cast<int>(k)), g), field);
      CHECK(lhs == pt.right_mul_gen(pt.monomial(static_cast<int>(k)), g));
    }
  CHECK_THROWS_AS(PointField(1, 2), PoleError);
  CHECK_THROWS_AS(PointField(2, 0), PoleError);
}

TEST_CASE("element JSON round trip", "[engine]") {
  SymbolicEngine eng(3);
  std::mt19937_64 rng(17);
  for (int it = 0; it < 5; ++it) {
    const auto a = eng.mul(random_element(eng, rng), random_element(eng, rng));
    const auto j = nlohmann::json::parse(to_json(a, eng.basis()).dump());
    CHECK(element_from_json(j, eng.basis()) == a);
  }
  CHECK_THROWS(element_from_json(to_json(eng.identity(), eng.basis()), Basis(2)));
}

TEST_CASE("mixed degrees are rejected", "[engine]") {
  SymbolicEngine e2(2), e3(3);
  CHECK_THROWS(e3.mul(e3.identity(), e2.identity()));
  CHECK_THROWS(e2.word({T(2)}));
}
