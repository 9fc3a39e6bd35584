#include "doctest.h"

#include "gsb/coxeter.hpp"
#include "support/support.hpp"

using namespace gsb;

namespace {

void check(const testing::PropertyResult& r) {
  INFO(r.name << ": " << r.failures << " of " << r.cases << " failed; first: " << r.first_failure);
  CHECK(r.cases >= 1000);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("monomial order axioms") { check(testing::monomial_order_axioms(1, 2000)); }

TEST_CASE("strategy independence") {
  for (const char* t : {"A3", "B3", "D4", "F4", "E7"}) check(testing::strategy_independence(t, 2, 1000));
}

TEST_CASE("w reverse(w) reduces to the identity") {
  for (const char* t : {"G2", "F4", "E6", "E7", "E8"}) check(testing::word_times_reverse(t, 3, 1000));
}

TEST_CASE("normal forms are a congruence") {
  for (const char* t : {"F4", "E6", "E8"}) check(testing::congruence(t, 4, 1000));
}

TEST_CASE("palindromic growth") { check(testing::palindromic_growth(builtin_type_names(), 6, 1000)); }

TEST_CASE("basis files are identical across thread counts") {
  check(testing::thread_determinism({"F4", "E6", "E7"}, {1, 2, 4}, 5, 1000));
}
