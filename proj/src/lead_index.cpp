#include "gsb/lead_index.hpp"

#include <algorithm>

#include "gsb/error.hpp"

namespace gsb {

LeadIndex::LeadIndex(std::span<const Word> patterns, std::size_t alphabet_size)
    : sigma_(alphabet_size) {
  if (sigma_ == 0) throw Error("lead index over an empty alphabet");
  std::vector<std::vector<PatternId>> owned(1);
  child_.assign(sigma_, kNoState);
  depth_.push_back(0);
  pattern_length_.reserve(patterns.size());

  for (PatternId p = 0; p < patterns.size(); ++p) {
    const Word& w = patterns[p];
    if (w.empty()) throw Error("lead index: empty pattern");
    State s = kRoot;
    for (Symbol c : w) {
      if (c >= sigma_) throw AlphabetMismatch("lead index: symbol outside alphabet");
      std::size_t slot = std::size_t{s} * sigma_ + c;
      if (child_[slot] == kNoState) {
        const State fresh = static_cast<State>(depth_.size());
        child_[slot] = fresh;
        depth_.push_back(depth_[s] + 1);
        owned.emplace_back();
        child_.resize(child_.size() + sigma_, kNoState);
      }
      s = child_[std::size_t{s} * sigma_ + c];
    }
    owned[s].push_back(p);
    pattern_length_.push_back(static_cast<std::uint32_t>(w.size()));
  }

  const std::size_t n = depth_.size();
  fail_.assign(n, kRoot);
  dict_.assign(n, kNoState);
  match_.assign(n, kNoPattern);
  delta_.assign(n * sigma_, kRoot);

  // Breadth-first: failure targets are always shallower, hence finished.
  std::vector<State> queue;
  queue.reserve(n);
  queue.push_back(kRoot);
  if (!owned[kRoot].empty()) match_[kRoot] = owned[kRoot].front();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const State s = queue[head];
    for (std::size_t c = 0; c < sigma_; ++c) {
      const State t = child_[std::size_t{s} * sigma_ + c];
      if (t == kNoState) {
        delta_[std::size_t{s} * sigma_ + c] = s == kRoot ? kRoot : delta_[std::size_t{fail_[s]} * sigma_ + c];
        continue;
      }
      delta_[std::size_t{s} * sigma_ + c] = t;
      const State f = s == kRoot ? kRoot : delta_[std::size_t{fail_[s]} * sigma_ + c];
      fail_[t] = f;
      dict_[t] = owned[f].empty() ? dict_[f] : f;
      PatternId m = match_[f];
      if (!owned[t].empty()) m = std::min(m, owned[t].front());
      match_[t] = m;
      queue.push_back(t);
    }
  }

  // Depth-first in symbol order so every subtree is a contiguous range.
  lo_.assign(n, 0);
  own_hi_.assign(n, 0);
  hi_.assign(n, 0);
  dfs_patterns_.reserve(patterns.size());
  std::vector<std::pair<State, std::size_t>> stack;
  stack.emplace_back(kRoot, 0);
  lo_[kRoot] = 0;
  own_hi_[kRoot] = 0;
  while (!stack.empty()) {
    auto& [s, c] = stack.back();
    if (c == 0) {
      lo_[s] = static_cast<std::uint32_t>(dfs_patterns_.size());
      dfs_patterns_.insert(dfs_patterns_.end(), owned[s].begin(), owned[s].end());
      own_hi_[s] = static_cast<std::uint32_t>(dfs_patterns_.size());
    }
    if (c == sigma_) {
      hi_[s] = static_cast<std::uint32_t>(dfs_patterns_.size());
      stack.pop_back();
      continue;
    }
    const State t = child_[std::size_t{s} * sigma_ + c];
    ++c;
    if (t != kNoState) stack.emplace_back(t, 0);
  }
}

}  // namespace gsb
