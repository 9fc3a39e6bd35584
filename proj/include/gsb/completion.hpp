#pragma once

// Composition sets, the Shirshov completion loop and reduced bases.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gsb/reduction.hpp"
#include "gsb/round_kernel.hpp"

namespace gsb {

enum class CompositionKind { Intersection, Inclusion };

/// One element of the composition set (f, g).
///
/// Intersection: f̄·b = a·ḡ with a proper suffix of f̄ equal to a proper
/// prefix of ḡ; value f·b - a·g. Inclusion: f̄ = a·ḡ·b; value f - a·g·b.
struct CompositionCandidate {
  CompositionKind kind;
  std::size_t left;
  std::size_t right;
  Word overlap_word;
  Word a;
  Word b;
  Poly value;
};

// Every candidate of (f, g); call again with the arguments swapped for
// (g, f). `left`/`right` are copied into the candidates as element refs.
// The trivial inclusion f - f is omitted when f == g.
std::vector<CompositionCandidate> compositions(const Poly& f, const Poly& g, const Alphabet& alphabet,
                                               std::size_t left = 0, std::size_t right = 0);

struct GsWitness {
  CompositionCandidate candidate;
  Poly normal_form;
};

struct GsCheckReport {
  bool is_gs = true;
  std::vector<GsWitness> witnesses;
  std::size_t pairs = 0;
  std::size_t candidates = 0;
};

// Polynomial route: every composition over all ordered pairs (f = g
// included) is reduced with normal_form().
GsCheckReport is_gs_basis(const Basis& basis);
// Word route for binomial bases.
GsCheckReport is_gs_basis(const RewriteSystem& system, const ExecOptions& exec = {});

struct CompletionLimits {
  std::size_t max_degree = 64;       // leading-word degree cap of admitted elements
  std::size_t max_rounds = 0;        // 0 = unbounded
  std::size_t max_elements = 500000;
};

enum class CompletionStatus { Complete, Truncated };

struct CompletionReport {
  CompletionStatus status = CompletionStatus::Truncated;
  Basis basis;  // reduced
  std::size_t rounds = 0;
  std::vector<Poly> added;
  std::size_t max_degree_reached = 0;
  std::size_t pairs = 0;
  std::size_t candidates = 0;
  std::string truncation_reason;
};

// Snapshot of a word-route run between rounds: rules[first_new..] are the
// elements added by the last finished round.
struct CompletionState {
  std::vector<Rule> rules;
  std::size_t first_new = 0;
  std::size_t round = 0;
  std::vector<Rule> pending;  // deferred results, not yet admitted
};

inline constexpr std::size_t kNoWindow = static_cast<std::size_t>(-1);

struct CompletionOptions {
  ExecOptions exec;
  std::function<void(const CompletionState&)> on_round;  // progress and checkpoints
  bool keep_added = true;
  // Retire collapsed elements and reduce tails between rounds. Off gives
  // plain saturation with a single interreduction at the end.
  bool settle_rounds = true;
  // Each round admits only results whose lhs degree is within this many
  // letters of the smallest one; the rest are deferred and re-reduced.
  std::size_t degree_window = 0;
};

/// Shirshov completion. Binomial inputs run on the word route; anything
/// else on the polynomial route. Status Complete only after the reduced
/// result has passed a closing check over all pairs.
CompletionReport shirshov_complete(const std::vector<Poly>& initial, const Alphabet& alphabet,
                                   const CompletionLimits& limits = {},
                                   const CompletionOptions& options = {});
// Word route, continuing from a snapshot.
CompletionReport complete_rules(const Alphabet& alphabet, CompletionState state,
                                const CompletionLimits& limits = {},
                                const CompletionOptions& options = {});
// Polynomial route regardless of input shape; the cross-check engine.
CompletionReport shirshov_complete_poly(const std::vector<Poly>& initial, const Alphabet& alphabet,
                                        const CompletionLimits& limits = {}, bool settle_rounds = true);

// Inter-round simplification. An element whose leading word contains
// another leading word is retired; its normal form modulo the survivors is
// appended as a new element when nonzero. Survivor tails are then reduced.
// On entry and exit elements [first_new, end) are the ones whose pairs are
// still pending.
void settle(const Alphabet& alphabet, std::vector<Rule>& rules, std::size_t& first_new);
void settle(const Alphabet& alphabet, std::vector<Poly>& elems, std::size_t& first_new);

// Drops elements whose leading word contains another leading word, reduces
// the tails of the rest, and sorts ascending by leading word.
Basis interreduce(const Basis& basis);
RewriteSystem interreduce(const RewriteSystem& system);

}  // namespace gsb
