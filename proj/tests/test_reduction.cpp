#include "doctest.h"

#include <random>

#include "gsb/coxeter.hpp"
#include "gsb/error.hpp"
#include "support/support.hpp"

using namespace gsb;

namespace {

const Alphabet kA2({"x1", "x2"});

Basis basis_of(std::initializer_list<const char*> polys, const Alphabet& a = kA2) {
  std::vector<Poly> out;
  for (const char* p : polys) out.push_back(parse_poly(p, a));
  return Basis(a, out);
}

Poly P(const char* text, const Alphabet& a = kA2) { return parse_poly(text, a); }

}  // namespace

TEST_CASE("single reduction steps") {
  CHECK(normal_form(P("x1 x1"), basis_of({"x1 x1 - 1"})) == P("1"));
  const Basis init = basis_of({"x1 x1 - 1", "x2 x2 - 1", "x2 x1 x2 - x1 x2 x1"});
  CHECK(normal_form(P("x2 x1 x2"), init) == P("x1 x2 x1"));
  const Basis two = basis_of({"x2 x2 - 1", "x2 x1 x2 - x1 x2 x1"});
  CHECK(reduce_at(P("x2 x1 x2 x2"), 0, 2, 0, two) == P("x2 x1"));
  // Leftmost reduction takes the braid first and ends elsewhere.
  CHECK(normal_form(P("x2 x1 x2 x2"), two) == P("x1 x1 x2 x1"));
  const auto once = reduce_once(P("x2 x1 x2 x2"), basis_of({"x2 x2 - 1", "x2 x1 x2 - x1 x2 x1"}));
  REQUIRE(once);
  CHECK_FALSE(reduce_once(P("x1 x2 x1"), init));
}

TEST_CASE("basis elements reduce to zero") {
  const Basis init = basis_of({"x1 x1 - 1", "x2 x2 - 1", "x2 x1 x2 - x1 x2 x1"});
  for (const Poly& g : init.elements()) CHECK(normal_form(g, init).is_zero());
}

TEST_CASE("the A2 composition reduces to zero") {
  // x2 x1 x2 x2 from both sides: x1 x2 x1 x2 - x2 x1, and x1 x2 x1 x2 has the
  // factor x2 x1 x2.
  const Basis init = basis_of({"x1 x1 - 1", "x2 x2 - 1", "x2 x1 x2 - x1 x2 x1"});
  CHECK(normal_form(P("x1 x2 x1 x2 - x2 x1"), init).is_zero());
}

TEST_CASE("G2 normal forms") {
  const auto& g2 = testing::completed("G2");
  const Alphabet& a = g2.system.alphabet();
  CHECK(g2.system.reduce(parse_word("x1 x1", a)).empty());
  CHECK(format_word(g2.system.reduce(parse_word("x2 x1 x2 x1 x2 x1", a)), a) == "x1 x2 x1 x2 x1 x2");
  CHECK(format_poly(normal_form(parse_poly("x2 x1 x2 x1 x2 x1", a), g2.report.basis), a) == "x1 x2 x1 x2 x1 x2");
}

TEST_CASE("reduction log replays to the normal form") {
  const auto& f4 = testing::completed("F4");
  const Basis& b = f4.report.basis;
  const Alphabet& a = b.alphabet();
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const Word w = testing::random_word(rng, a.size(), 40);
    const Poly p = parse_poly(format_word(w, a) + " - 2 " + format_word(testing::random_word(rng, a.size(), 10), a), a);
    std::vector<ReductionStep> log;
    const Poly nf = normal_form(p, b, &log);
    Poly replay = p;
    for (const ReductionStep& s : log) {
      replay = subtract(replay, scale(multiply(s.left, b[s.element], s.right), s.coeff), a.ranks());
    }
    REQUIRE(replay == nf);
  }
}

TEST_CASE("non-binomial bases are refused by the word route") {
  CHECK_THROWS_AS(RewriteSystem::from_basis(basis_of({"x1 x1 - 2"})), NotBinomial);
  CHECK(basis_of({"x1 x1 - 1", "x2 x2 - 1"}).all_binomial());
  CHECK_FALSE(basis_of({"x1 x2 + x2"}).all_binomial());
}

TEST_CASE("non-monic elements are rejected") {
  CHECK_THROWS_AS(basis_of({"2 x1 x1 - 1"}), Error);
}

TEST_CASE("word route and poly route agree on verified bases") {
  for (const char* t : {"G2", "F4", "E6"}) {
    const auto r = testing::strategy_independence(t, 3, 1000);
    INFO(r.name << " " << r.first_failure);
    CHECK(r.ok());
  }
}
