#pragma once

// Shared by the unit tests and the acceptance binary: cached completions of
// the presets and the seeded property suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gsb/completion.hpp"
#include "gsb/coxeter.hpp"
#include "gsb/enumeration.hpp"
#include "gsb/oracle.hpp"

namespace gsb::testing {

struct Completed {
  DiagramPreset preset;
  CompletionReport report;
  RewriteSystem system;
  double seconds = 0;
};

// Completion of a built-in preset with default options, computed once.
const Completed& completed(const std::string& type);

Word random_word(std::mt19937_64& rng, std::size_t sigma, std::size_t max_length);

// Normal form by rewriting a uniformly chosen occurrence at every step; a
// third strategy next to the leftmost ones of the library.
Word nf_random_strategy(const Word& w, const RewriteSystem& system, std::mt19937_64& rng);

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

PropertyResult monomial_order_axioms(std::uint64_t seed, std::size_t cases);
PropertyResult strategy_independence(const std::string& type, std::uint64_t seed, std::size_t cases);
PropertyResult word_times_reverse(const std::string& type, std::uint64_t seed, std::size_t cases);
PropertyResult congruence(const std::string& type, std::uint64_t seed, std::size_t cases);
PropertyResult oracle_equivalence(const std::string& type, std::uint64_t seed, std::size_t cases);
// Small random Coxeter matrices (rank 2 to 4, m in {2, 3, 4, 6}, some
// infinite entries when allow_infinite) under a random precedence.
struct RandomCoxeter {
  CoxeterMatrix matrix;
  Alphabet alphabet;
};
RandomCoxeter random_coxeter(std::mt19937_64& rng, bool allow_infinite);

// Every listed preset, then random finite Coxeter groups until `cases` have
// been checked.
PropertyResult palindromic_growth(const std::vector<std::string>& types, std::uint64_t seed, std::size_t cases);
// Random presentations with tight limits, then the listed presets; each is
// completed with every thread count and the basis files compared.
PropertyResult thread_determinism(const std::vector<std::string>& types, const std::vector<int>& threads,
                                  std::uint64_t seed, std::size_t cases);

}  // namespace gsb::testing
