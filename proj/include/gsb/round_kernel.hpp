#pragma once

// One saturation round of word-route completion.
//
// Every composition (f, g) with f or g among the newest rules is reduced
// against the frozen round-start system. The serial kernel is the
// reference; the OpenMP kernel partitions the outer loop over f and must
// return a bit-identical result.

#include <cstddef>
#include <vector>

#include "gsb/reduction.hpp"

namespace gsb {

struct ExecOptions {
  bool parallel = true;
  int threads = 0;  // 0: OpenMP default (OMP_NUM_THREADS)
};

// Location of one composition of rule f with rule g:
//   Intersection: a = f.lhs[0, cut), b = g.lhs[f.lhs.size() - cut, end)
//   Inclusion:    a = f.lhs[0, cut), b = f.lhs[cut + g.lhs.size(), end)
struct Overlap {
  bool inclusion;
  std::size_t f;
  std::size_t g;
  std::size_t cut;
};

// The two words whose normal forms decide the composition: the value is
// first - second (a·r_g - r_f·b or a·r_g·b - r_f).
void overlap_sides(const std::vector<Rule>& rules, const Overlap& o, Word& first, Word& second);
Word overlap_word(const std::vector<Rule>& rules, const Overlap& o);

/// Visits the compositions of rule f with every rule of `partners`, an index
/// over rules[partner_offset, ...) (pattern id p is rule partner_offset + p).
template <class Visit>
void for_each_overlap(const std::vector<Rule>& rules, std::size_t f, const LeadIndex& partners,
                      std::size_t partner_offset, Visit&& visit) {
  const Word& l = rules[f].lhs;
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i) {
    LeadIndex::State s = LeadIndex::kRoot;
    std::size_t pos = i;
    for (; pos < n; ++pos) {
      s = partners.child(s, l[pos]);
      if (s == LeadIndex::kNoState) break;
      for (LeadIndex::PatternId p : partners.patterns_at(s)) {
        const std::size_t g = partner_offset + p;
        if (g == f && i == 0 && pos + 1 == n) continue;
        visit(Overlap{true, f, g, i});
      }
    }
    if (pos == n && i > 0) {
      const std::size_t k = n - i;
      for (LeadIndex::PatternId p : partners.patterns_below(s)) {
        if (partners.pattern_length(p) > k) visit(Overlap{false, f, partner_offset + p, i});
      }
    }
  }
}

struct RoundResult {
  std::vector<Rule> rules;  // sorted by (lhs, rhs) in deg-lex, unique
  std::size_t pairs = 0;
  std::size_t candidates = 0;
  std::size_t over_degree = 0;  // nonzero results dropped by the degree cap
  std::size_t max_lhs_degree = 0;
};

RoundResult evaluate_round_serial(const RewriteSystem& system, std::size_t first_new,
                                  std::size_t max_degree);
RoundResult evaluate_round_parallel(const RewriteSystem& system, std::size_t first_new,
                                    std::size_t max_degree, int threads = 0);
RoundResult evaluate_round(const RewriteSystem& system, std::size_t first_new, std::size_t max_degree,
                           const ExecOptions& exec);

// (lhs, rhs) ordering used for canonical rule lists.
bool rule_less(const Rule& x, const Rule& y, const std::vector<std::size_t>& rank);

}  // namespace gsb
