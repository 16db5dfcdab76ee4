#include <catch_amalgamated.hpp>

#include "bmwkit/symmetrizer/symmetrizer.hpp"

using namespace bmwkit;

namespace {

const RatFunc Q = RatFunc::q(1);
const RatFunc R = RatFunc::r(1);

Gen T(int i) { return {Gen::T, i}; }
Gen E(int i) { return {Gen::E, i}; }

/// x T_i = lambda x and x E_i = 0 for every i.
bool eigen(SymbolicEngine& eng, const SymElement& x, const RatFunc& lambda) {
  for (int i = 1; i < eng.n(); ++i) {
    if (!eng.right_mul_gen(x, E(i)).is_zero()) return false;
    if (!(eng.right_mul_gen(x, T(i)) == lambda * x)) return false;
  }
  return true;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

}  // namespace

TEST_CASE("symmetrizer of B_2", "[symmetrizer]") {
  SymbolicEngine eng(2);
  // x = 1 + q T_1 + c_1 E_1 with x E_1 = (1 + q r^-1 + c_1 delta) E_1 = 0
  const RatFunc c1 = -(Q - Q.pow(-1)) / (R - Q.pow(-1));
  CHECK(c_ratio(2, 1) == c1);
  CHECK(c1 == -(RatFunc(1) + Q / R) / RatFunc::delta());
  const SymElement x = eng.identity() + Q * eng.word({T(1)}) + c1 * eng.word({E(1)});
  CHECK(symmetrizer(eng) == x);
  CHECK(eigen(eng, x, Q));
  // antisymmetrizer: q -> -q^-1 sends c_1 to -(q - q^-1)/(r + q)
  const SymElement y = eng.identity() - Q.pow(-1) * eng.word({T(1)}) - ((Q - Q.pow(-1)) / (R + Q)) * eng.word({E(1)});
  CHECK(antisymmetrizer(eng) == y);
  CHECK(eigen(eng, y, -Q.pow(-1)));
}

TEST_CASE("ratio forms agree", "[symmetrizer]") {
  for (int n = 2; n <= 8; ++n)
    for (int f = 1; 2 * f <= n; ++f) {
      CHECK(c_ratio(n, f) == c_ratio_sum_form(n, f));
      CHECK(c_ratio(n, f).flip_q() == flipped_ratio_closed_form(n, f));
    }
  CHECK_THROWS(c_ratio(3, 2));
  CHECK_THROWS(c_ratio(4, 0));
}

TEST_CASE("coefficient table", "[symmetrizer]") {
  const CoeffTable t = coeff_table(4);
  REQUIRE(t.c.size() == 3);
  CHECK(t.c[0].is_one());
  CHECK(t.c[2] == c_ratio(4, 1) * c_ratio(4, 2));
  CHECK(t.a[0].is_one());
  CHECK(t.a[1].is_one());
  CHECK(t.a[2] == RatFunc(1) + Q.pow(2));
  CHECK(t.b[0].is_zero());
  CHECK(t.d[2] == Q.pow(4));
  const auto j = t.to_json();
  CHECK(j.at("normalization") == "c0=1");
  CHECK(j.at("c").size() == 3);
}

TEST_CASE("x_f has |H_f|^2 (n-2f)! terms", "[symmetrizer]") {
  for (int n = 2; n <= 5; ++n) {
    SymbolicEngine eng(n);
    std::size_t total = 0;
    for (int f = 0; 2 * f <= n; ++f) {
      const std::size_t h = h_f(n, f).size();
      const std::size_t terms = x_f(eng, f).size();
      CHECK(terms == h * h * factorial(n - 2 * f));
      total += terms;
    }
    CHECK(total == eng.basis().size());
  }
}

TEST_CASE("symmetrizer and antisymmetrizer eigen relations", "[symmetrizer]") {
  for (int n = 2; n <= 4; ++n) {
    SymbolicEngine eng(n);
    const SymElement x = symmetrizer(eng), y = antisymmetrizer(eng);
    CHECK(eigen(eng, x, Q));
    CHECK(eigen(eng, y, -Q.pow(-1)));
    CHECK(eng.bar(x) == x);
    // left multiplication: E_i x = 0, T_i x = q x
    for (int i = 1; i < n; ++i) {
      CHECK(eng.mul(eng.word({E(i)}), x).is_zero());
      CHECK(eng.mul(eng.word({T(i)}), x) == Q * x);
    }
  }
}

TEST_CASE("quasi-idempotent scalars", "[symmetrizer]") {
  SymbolicEngine e2(2);
  CHECK(quasi_idempotent_scalar(e2, symmetrizer(e2), true) == RatFunc(1) + Q.pow(2));
  CHECK(quasi_idempotent_scalar(e2, antisymmetrizer(e2), true) == RatFunc(1) + Q.pow(-2));
  SymbolicEngine e3(3);
  const RatFunc k3 = RatFunc(1) + RatFunc(2) * Q.pow(2) + RatFunc(2) * Q.pow(4) + Q.pow(6);
  CHECK(quasi_idempotent_scalar(e3, symmetrizer(e3), true) == k3);
  CHECK(quasi_idempotent_scalar(e3, symmetrizer(e3), false) == k3);
  CHECK(quasi_idempotent_scalar(e3, antisymmetrizer(e3), true) == k3.flip_q());
}

TEST_CASE("y_f and the expansion of x_f E_1", "[symmetrizer]") {
  SymbolicEngine e2(2);
  // y_1 = S^_2 E_1 H^_1 = (1 + q T_1) E_1 = (1 + q r^-1) E_1
  CHECK(y_f(e2, 1) == (RatFunc(1) + Q / R) * e2.word({E(1)}));
  for (int n = 2; n <= 4; ++n) {
    SymbolicEngine eng(n);
    CHECK(y_f(eng, 0) == x_f(eng, 0));
    for (int f = 0; 2 * f <= n; ++f) {
      const RatFunc scale = detail::one_plus_q_rinv().pow(f) * a_coeff(f);
      CHECK(y_f(eng, f) == scale * x_f(eng, f));
      CHECK(verify_yfE1_recursion(eng, f));
    }
    const SolvedRatios s = solve_c_ratios(eng);
    CHECK(s.expansion_ok);
    CHECK(s.independent);
    for (int f = 1; 2 * f <= n; ++f) CHECK(s.ratio[static_cast<std::size_t>(f)] == c_ratio(n, f));
  }
}

TEST_CASE("specialized ratios", "[symmetrizer]") {
  // q -> -q^-1 then r -> -q^{2l+1} with n = l + 1 gives q^{2-4f}
  CHECK(specialized_ratio(1, 1) == Q.pow(-2));
  CHECK(specialized_ratio(2, 1) == Q.pow(-2));
  CHECK(specialized_ratio(3, 1) == Q.pow(-2));
  CHECK(specialized_ratio(3, 2) == Q.pow(-6));
  CHECK(specialized_ratio(5, 3) == Q.pow(-10));
}
