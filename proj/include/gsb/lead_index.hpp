#pragma once

// Failure-link automaton over a set of leading words.
//
// The automaton serves three clients: factor search during reduction, the
// suffix/prefix overlap queries of completion (through the underlying trie),
// and the factor-avoidance automaton of enumeration.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "gsb/word.hpp"

namespace gsb {

class LeadIndex {
 public:
  using State = std::uint32_t;
  using PatternId = std::uint32_t;
  static constexpr State kRoot = 0;
  static constexpr State kNoState = std::numeric_limits<State>::max();
  static constexpr PatternId kNoPattern = std::numeric_limits<PatternId>::max();

  LeadIndex() = default;
  // Pattern ids are positions in `patterns`. Empty patterns are rejected.
  LeadIndex(std::span<const Word> patterns, std::size_t alphabet_size);

  std::size_t alphabet_size() const noexcept { return sigma_; }
  std::size_t state_count() const noexcept { return depth_.size(); }
  std::size_t pattern_count() const noexcept { return pattern_length_.size(); }
  std::size_t pattern_length(PatternId p) const { return pattern_length_[p]; }

  // Complete transition function (failure links folded in).
  State next(State s, Symbol c) const { return delta_[std::size_t{s} * sigma_ + c]; }
  // Smallest pattern id among patterns that are suffixes of the state's
  // string, or kNoPattern.
  PatternId match(State s) const { return match_[s]; }
  std::uint32_t depth(State s) const { return depth_[s]; }
  State failure(State s) const { return fail_[s]; }

  // Trie edges only; kNoState when absent.
  State child(State s, Symbol c) const { return child_[std::size_t{s} * sigma_ + c]; }
  // Patterns whose word equals the state's string, ascending id.
  std::span<const PatternId> patterns_at(State s) const {
    return {dfs_patterns_.data() + lo_[s], dfs_patterns_.data() + own_hi_[s]};
  }
  // Patterns having the state's string as a prefix (the trie subtree).
  std::span<const PatternId> patterns_below(State s) const {
    return {dfs_patterns_.data() + lo_[s], dfs_patterns_.data() + hi_[s]};
  }

  bool contains_factor(std::span<const Symbol> w) const {
    State s = kRoot;
    for (Symbol c : w) {
      s = next(s, c);
      if (match_[s] != kNoPattern) return true;
    }
    return false;
  }

  // Calls f(end, pattern) for every occurrence; `end` is one past the last
  // symbol of the occurrence. Occurrences ending at the same position are
  // reported longest first.
  template <class F>
  void for_each_match(std::span<const Symbol> w, F&& f) const {
    State s = kRoot;
    for (std::size_t i = 0; i < w.size(); ++i) {
      s = next(s, w[i]);
      for (State t = own_hi_[s] > lo_[s] ? s : dict_[s]; t != kNoState; t = dict_[t]) {
        for (PatternId p : patterns_at(t)) f(i + 1, p);
      }
    }
  }

 private:
  std::size_t sigma_ = 0;
  std::vector<State> child_;
  std::vector<State> delta_;
  std::vector<State> fail_;
  std::vector<State> dict_;  // next state on the failure chain owning a pattern
  std::vector<std::uint32_t> depth_;
  std::vector<PatternId> match_;
  std::vector<std::uint32_t> lo_, own_hi_, hi_;
  std::vector<PatternId> dfs_patterns_;
  std::vector<std::uint32_t> pattern_length_;
};

}  // namespace gsb
