#pragma once

// Normal forms modulo a basis: the general polynomial route and the
// word-level rewriting route for binomial bases.

#include <optional>
#include <vector>

#include "gsb/lead_index.hpp"
#include "gsb/poly.hpp"

namespace gsb {

/// A list of monic nonzero polynomials with a lead index over their leading
/// words. Immutable once built, so it can be shared by concurrent reducers.
class Basis {
 public:
  Basis() = default;
  Basis(Alphabet alphabet, std::vector<Poly> elements);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Poly>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Poly& operator[](std::size_t i) const { return elements_[i]; }
  const LeadIndex& index() const noexcept { return index_; }
  bool all_binomial() const;

 private:
  Alphabet alphabet_;
  std::vector<Poly> elements_;
  LeadIndex index_;
};

LeadIndex build_index(const Basis& basis);

// One step p -> p - c·a·g·b of a reduction.
struct ReductionStep {
  Rational coeff;
  Word left;
  std::size_t element;
  Word right;
};

/// Reduces the deg-lex greatest reducible word of p at its leftmost
/// occurrence of a leading word (lowest element index on ties).
/// Returns nullopt when p is already in normal form.
std::optional<Poly> reduce_once(const Poly& p, const Basis& basis, ReductionStep* step = nullptr);

// Applies the single reduction that rewrites occurrence `pos` of element
// `element`'s leading word inside term `term` of p.
Poly reduce_at(const Poly& p, std::size_t term, std::size_t pos, std::size_t element,
               const Basis& basis, ReductionStep* step = nullptr);

Poly normal_form(const Poly& p, const Basis& basis, std::vector<ReductionStep>* log = nullptr);

/// String rewriting with rules lhs -> rhs. Rewrites the leftmost-ending
/// occurrence first (lowest rule index on ties), which for a confluent
/// system yields the same normal form as any other strategy.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(Alphabet alphabet, std::vector<Rule> rules);
  // Throws NotBinomial if any element is not u - v.
  static RewriteSystem from_basis(const Basis& basis);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }
  const LeadIndex& index() const noexcept { return index_; }

  Word reduce(std::span<const Symbol> w) const;
  bool is_reducible(std::span<const Symbol> w) const { return index_.contains_factor(w); }
  Basis to_basis() const;

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  LeadIndex index_;
};

Word nf_word(std::span<const Symbol> w, const RewriteSystem& system);
// Convenience form; builds the rewrite system on every call.
Word nf_word(std::span<const Symbol> w, const Basis& basis);

}  // namespace gsb
