#include <catch_amalgamated.hpp>

#include <random>

#include "bmwkit/ring/ratfunc_io.hpp"
#include "bmwkit/ring/rational.hpp"

using namespace bmwkit;

namespace {

const RatFunc Q = RatFunc::q(1);
const RatFunc R = RatFunc::r(1);

RatFunc random_ratfunc(std::mt19937_64& rng) {
  auto poly = [&]() {
    std::vector<Term> ts;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < k; ++t) {
      const int qe = static_cast<int>(rng() % 5) - 2, re = static_cast<int>(rng() % 3) - 1;
      const long c = static_cast<long>(rng() % 7) - 3;
      ts.push_back({{qe, re}, mpz_class(c == 0 ? 1 : c)});
    }
    return LaurentPoly::from_terms(std::move(ts));
  };
  LaurentPoly den = poly();
  while (den.is_zero()) den = poly();
  return RatFunc(poly(), den);
}

}  // namespace

TEST_CASE("Laurent polynomials: arithmetic and canonical form", "[ring]") {
  const LaurentPoly q = LaurentPoly::q(1), qi = LaurentPoly::q(-1);
  CHECK((q * qi).is_one());
  CHECK((q - q).is_zero());
  CHECK(to_string(q - qi) == to_string(parse_laurent("q - q^-1")));
  CHECK(parse_laurent(to_string(parse_laurent("3*q^2*r - r^-1 + 7"))) == parse_laurent("7 - r^-1 + 3*q^2*r"));
  CHECK((q + LaurentPoly(1)).pow(2) == parse_laurent("q^2 + 2*q + 1"));
  CHECK(parse_laurent("2*q*r^-1").evaluate(3, 4) == mpq_class(3, 2));
  CHECK_THROWS_AS(LaurentPoly::q(1 << 30).pow(4), ExponentOverflow);
}

TEST_CASE("delta identities", "[ring]") {
  const RatFunc z = Q - Q.pow(-1);
  const RatFunc& d = RatFunc::delta();
  // (q - q^-1)(delta - 1) = r - r^-1
  CHECK(z * (d - RatFunc(1)) == R - R.pow(-1));
  // (1 + q r^-1)/delta = (q - q^-1)/(r - q^-1), checked by cross-multiplication
  CHECK((RatFunc(1) + Q / R) / d == z / (R - Q.pow(-1)));
  CHECK((RatFunc(1) + Q / R) * (R - Q.pow(-1)) == d * z);
  CHECK(RatFunc::qdiff() == z);
}

TEST_CASE("specialization at a point", "[ring]") {
  // delta(2,3) = 1 + (3 - 1/3)/(2 - 1/2) = 1 + (8/3)/(3/2) = 25/9
  CHECK(RatFunc::delta().specialize(2, 3) == mpq_class(25, 9));
  CHECK(Q.specialize(mpq_class(2, 7), 5) == mpq_class(2, 7));
  // delta has a pole at q = 1
  CHECK_THROWS_AS(RatFunc::delta().specialize(1, 3), PoleError);
  CHECK_THROWS_AS(Q.specialize(0, 1), PoleError);
  try {
    RatFunc::delta().specialize(-1, 2);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(!e.denominator().empty());
  }
}

TEST_CASE("field axioms on random elements", "[ring]") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 60; ++it) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK((a / a).is_one());
      CHECK((b * a) / a == b);
    }
    // evaluation is a ring homomorphism away from poles
    const mpq_class q0(5, 3), r0(-7, 2);
    try {
      CHECK((a * b + c).specialize(q0, r0) == a.specialize(q0, r0) * b.specialize(q0, r0) + c.specialize(q0, r0));
    } catch (const PoleError&) {
    }
  }
  CHECK_THROWS_AS(Q / RatFunc(), DivisionByZero);
}

TEST_CASE("canonical form makes equality structural", "[ring]") {
  const RatFunc a(parse_laurent("q^2 - 1"), parse_laurent("q - 1"));
  CHECK(a == Q + RatFunc(1));
  CHECK(a.is_laurent());
  // sign is moved into the numerator, monomial factors out of the denominator
  const RatFunc b(parse_laurent("1"), parse_laurent("-q*r + q^2"));
  CHECK(b.den().min_exponents() == Exponent{0, 0});
  CHECK(b * (Q * Q - Q * R) == RatFunc(1));
}

TEST_CASE("the flip q -> -q^-1", "[ring]") {
  CHECK(Q.flip_q() == -Q.pow(-1));
  CHECK(R.flip_q() == R);
  CHECK(RatFunc::qdiff().flip_q() == RatFunc::qdiff());
  CHECK(RatFunc::delta().flip_q() == RatFunc::delta());
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    CHECK(a.flip_q().flip_q() == a);
    CHECK((a * b).flip_q() == a.flip_q() * b.flip_q());
    CHECK((a + b).flip_q() == a.flip_q() + b.flip_q());
  }
}

TEST_CASE("substitution r -> -q^{2l+1}", "[ring]") {
  CHECK(R.specialize_r(1) == -Q.pow(3));
  CHECK(R.pow(-1).specialize_r(2) == -Q.pow(-5));
  CHECK(Q.specialize_r(3) == Q);
  CHECK(!(R / Q).specialize_r(1).depends_on_r());
  // 1/(r + q^3) has an identically vanishing denominator at l = 1
  const RatFunc pole = RatFunc(1) / (R + Q.pow(3));
  CHECK_THROWS_AS(pole.specialize_r(1), PoleError);
  CHECK_NOTHROW(pole.specialize_r(2));
  CHECK_THROWS_AS(R.specialize_r(0), std::invalid_argument);
}

TEST_CASE("string and JSON round trips", "[ring]") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    const RatFunc a = random_ratfunc(rng);
    CHECK(parse_ratfunc(to_string(a)) == a);
    CHECK(ratfunc_from_json(nlohmann::json::parse(to_json(a).dump())) == a);
  }
  // -(q - q^-1)/(r - q^-1), multiplied through by q
  const RatFunc c = -(Q - Q.pow(-1)) / (R - Q.pow(-1));
  CHECK(to_string(c) == "(-q^2 + 1)/(q*r - 1)");
  CHECK(to_string(RatFunc(1)) == "1");
  CHECK(to_string(RatFunc()) == "0");
  // coefficients beyond 64 bits go through decimal strings
  const RatFunc big(LaurentPoly(mpz_class("123456789012345678901234567890")));
  CHECK(ratfunc_from_json(to_json(big)) == big);
  CHECK_THROWS(parse_ratfunc("(q + 1"));
  CHECK_THROWS_AS(parse_ratfunc("(1)/(0)"), DivisionByZero);
}

TEST_CASE("rational parsing", "[ring]") {
  CHECK(parse_rational("6/4") == mpq_class(3, 2));
  CHECK(parse_rational("-5") == mpq_class(-5));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(to_string(parse_rational("4/6")) == "2/3");
}
