#pragma once

// Normal-form words: the words that avoid every leading word as a factor.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gsb/lead_index.hpp"
#include "gsb/poly.hpp"
#include "gsb/reduction.hpp"

namespace gsb {

/// Deterministic automaton accepting exactly the words with no forbidden
/// factor. Only live states are kept; a transition into a match state goes
/// to kDead.
class AvoidanceAutomaton {
 public:
  using State = std::uint32_t;
  static constexpr State kDead = LeadIndex::kNoState;

  // Throws Error if a forbidden word is empty.
  AvoidanceAutomaton(std::span<const Word> forbidden, const Alphabet& alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return live_; }
  State start() const noexcept { return 0; }
  State next(State s, Symbol c) const { return delta_[std::size_t{s} * sigma_ + c]; }
  bool accepts(std::span<const Symbol> w) const;

  // True when the live-state graph has a cycle (infinitely many words).
  bool has_cycle() const;
  // Length of the longest accepted word; only meaningful without cycles.
  std::size_t longest_word() const;

 private:
  Alphabet alphabet_;
  std::size_t sigma_ = 0;
  std::size_t live_ = 0;
  std::vector<State> delta_;
};

AvoidanceAutomaton build_avoidance(const Basis& basis);

struct GrowthSeries {
  std::vector<BigInt> counts;  // counts[l] = accepted words of length l
  bool finite = false;
  BigInt total;                // sum of counts; the language size when finite

  std::size_t max_length() const { return counts.empty() ? 0 : counts.size() - 1; }
  bool palindromic() const;
};

inline constexpr std::size_t kDefaultHorizon = 64;

// With `max_length` the series covers lengths 0..max_length. Without it,
// a finite language is counted to its longest word and an infinite one up
// to `horizon`.
GrowthSeries count_by_length(const AvoidanceAutomaton& automaton,
                             std::optional<std::size_t> max_length = std::nullopt,
                             std::size_t horizon = kDefaultHorizon);

// Number of normal forms, nullopt when infinite. Refuses (Unverified) a basis
// that fails is_gs_basis unless `force`.
std::optional<BigInt> group_order(const Basis& basis, bool force = false);

// Accepted words of length <= up_to_length in deg-lex order. The visitor
// returns false to stop early.
void enumerate_normal_forms(const AvoidanceAutomaton& automaton, std::size_t up_to_length,
                            const std::function<bool(const Word&)>& visit);

}  // namespace gsb
