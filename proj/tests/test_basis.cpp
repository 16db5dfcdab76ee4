#include <catch_amalgamated.hpp>

#include <set>

#include "bmwkit/basis/monomial.hpp"

using namespace bmwkit;

namespace {

GenWord words(std::initializer_list<std::pair<Gen::Kind, int>> w) {
  GenWord out;
  for (auto [k, i] : w) out.push_back({k, i});
  return out;
}

}  // namespace

TEST_CASE("basis size is (2n-1)!!", "[basis]") {
  const std::vector<std::size_t> expect{1, 3, 15, 105, 945, 10395};
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_basis(n).size() == expect[static_cast<std::size_t>(n - 1)]);
    CHECK(double_factorial_odd(n) == expect[static_cast<std::size_t>(n - 1)]);
  }
  CHECK(Basis(6).size() == 10395);
  CHECK_THROWS(enumerate_basis(0));
}

TEST_CASE("B_2 basis: 1, T_1, E_1", "[basis]") {
  const Basis b(2);
  REQUIRE(b.size() == 3);
  CHECK(b.word(0).empty());
  CHECK(b.word(1) == words({{Gen::T, 1}}));
  CHECK(b.word(2) == words({{Gen::E, 1}}));
  CHECK(b.identity_index() == 0);
  CHECK(b.diagram(2).to_json() == "[[1,2],[-1,-2]]");
  CHECK(b.diagram(0).to_json() == "[[1,-1],[2,-2]]");
}

TEST_CASE("canonical words", "[basis]") {
  const Basis b(4);
  Monomial m;
  m.f = 2;
  m.u = m.sigma = m.d = Perm(4);
  CHECK(canonical_word(m) == words({{Gen::E, 1}, {Gen::E, 3}}));
  CHECK(b[static_cast<std::size_t>(b.index_of(m))].to_string() == m.to_string());
  Monomial t;
  t.u = t.d = Perm(4);
  t.sigma = Perm::from_word(4, {1, 2});
  CHECK(canonical_word(t) == words({{Gen::T, 1}, {Gen::T, 2}}));
  CHECK(b.index_of(t) == b.index_of_perm(t.sigma));
}

TEST_CASE("shadows are injective Brauer diagrams", "[basis]") {
  for (int n = 1; n <= 5; ++n) {
    const Basis b(n);
    std::set<std::uint64_t> keys;
    for (std::size_t k = 0; k < b.size(); ++k) {
      const Monomial& m = b[k];
      CHECK(m.valid());
      CHECK(b.diagram(k).horizontal_edges() == m.f);
      keys.insert(b.diagram(k).key());
      CHECK(b.index_of(m) == static_cast<int>(k));
      // shadow of T_w is the permutation diagram of w
      if (m.f == 0) CHECK(b.diagram(k) == BrauerDiagram::from_perm(m.sigma));
    }
    CHECK(keys.size() == b.size());
  }
}

TEST_CASE("monomials are sorted by f and round-trip through strings", "[basis]") {
  const Basis b(4);
  for (std::size_t k = 1; k < b.size(); ++k) CHECK(b[k - 1].f <= b[k].f);
  for (std::size_t k = 0; k < b.size(); ++k) CHECK(Monomial::parse(b[k].to_string()) == b[k]);
  CHECK_THROWS(Monomial::parse("not a monomial"));
}

TEST_CASE("diagram composition counts closed loops", "[basis]") {
  // E_1 E_1 = delta E_1: one closed loop
  auto [d, loops] = BrauerDiagram::of_word(2, words({{Gen::E, 1}, {Gen::E, 1}}));
  CHECK(loops == 1);
  CHECK(d == BrauerDiagram::generator(2, {Gen::E, 1}));
  // E_1 E_2 E_1 = E_1 with no loop
  auto [d3, loops3] = BrauerDiagram::of_word(3, words({{Gen::E, 1}, {Gen::E, 2}, {Gen::E, 1}}));
  CHECK(loops3 == 0);
  CHECK(d3 == BrauerDiagram::generator(3, {Gen::E, 1}));
}
