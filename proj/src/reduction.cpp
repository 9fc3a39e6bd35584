#include "gsb/reduction.hpp"

#include <algorithm>

#include "gsb/error.hpp"

namespace gsb {

namespace {

std::vector<Word> leading_words(const std::vector<Poly>& elements) {
  std::vector<Word> out;
  out.reserve(elements.size());
  for (const Poly& p : elements) out.push_back(p.leading_word());
  return out;
}

}  // namespace

Basis::Basis(Alphabet alphabet, std::vector<Poly> elements)
    : alphabet_(std::move(alphabet)), elements_(std::move(elements)) {
  for (const Poly& p : elements_) {
    if (p.is_zero()) throw Error("basis element is zero");
    if (!p.is_monic()) throw Error("basis element is not monic");
    for (const Term& t : p.terms()) alphabet_.check(t.word);
    if (p.leading_word().empty()) throw Error("basis element has the empty leading word");
  }
  if (alphabet_.size() > 0) {
    auto words = leading_words(elements_);
    index_ = LeadIndex(words, alphabet_.size());
  }
}

bool Basis::all_binomial() const {
  return std::all_of(elements_.begin(), elements_.end(), is_binomial);
}

LeadIndex build_index(const Basis& basis) {
  auto words = leading_words(basis.elements());
  return LeadIndex(words, basis.alphabet().size());
}

Poly reduce_at(const Poly& p, std::size_t term, std::size_t pos, std::size_t element,
               const Basis& basis, ReductionStep* step) {
  const Term& t = p.terms().at(term);
  const Poly& g = basis[element];
  const std::size_t len = g.leading_word().size();
  if (pos + len > t.word.size() ||
      !std::equal(g.leading_word().begin(), g.leading_word().end(),
                  t.word.begin() + static_cast<std::ptrdiff_t>(pos))) {
    throw Error("reduce_at: leading word does not occur at the given position");
  }
  std::span<const Symbol> w(t.word);
  auto a = w.subspan(0, pos);
  auto b = w.subspan(pos + len);
  if (step) *step = ReductionStep{t.coeff, Word(a.begin(), a.end()), element, Word(b.begin(), b.end())};
  return subtract(p, scale(multiply(a, g, b), t.coeff), basis.alphabet().ranks());
}

std::optional<Poly> reduce_once(const Poly& p, const Basis& basis, ReductionStep* step) {
  const LeadIndex& index = basis.index();
  if (basis.size() == 0) return std::nullopt;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Word& w = p.terms()[k].word;
    std::size_t best_pos = w.size();
    std::size_t best_elem = 0;
    index.for_each_match(w, [&](std::size_t end, LeadIndex::PatternId e) {
      const std::size_t start = end - index.pattern_length(e);
      if (start < best_pos || (start == best_pos && e < best_elem)) {
        best_pos = start;
        best_elem = e;
      }
    });
    if (best_pos < w.size()) return reduce_at(p, k, best_pos, best_elem, basis, step);
  }
  return std::nullopt;
}

Poly normal_form(const Poly& p, const Basis& basis, std::vector<ReductionStep>* log) {
  Poly current = p;
  ReductionStep step;
  while (auto next = reduce_once(current, basis, log ? &step : nullptr)) {
    current = std::move(*next);
    if (log) log->push_back(std::move(step));
  }
  return current;
}

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  std::vector<Word> lhs;
  lhs.reserve(rules_.size());
  for (const Rule& r : rules_) {
    alphabet_.check(r.lhs);
    alphabet_.check(r.rhs);
    if (deglex(r.rhs, r.lhs, alphabet_.ranks()) >= 0) {
      throw Error("rule " + format_word(r.lhs, alphabet_) + " -> " + format_word(r.rhs, alphabet_) +
                  " is not decreasing");
    }
    lhs.push_back(r.lhs);
  }
  if (alphabet_.size() > 0) index_ = LeadIndex(lhs, alphabet_.size());
}

RewriteSystem RewriteSystem::from_basis(const Basis& basis) {
  std::vector<Rule> rules;
  rules.reserve(basis.size());
  for (const Poly& p : basis.elements()) rules.push_back(as_rule(p));
  return RewriteSystem(basis.alphabet(), std::move(rules));
}

Word RewriteSystem::reduce(std::span<const Symbol> w) const {
  if (rules_.empty()) return Word(w.begin(), w.end());
  Word out;
  std::vector<LeadIndex::State> states;
  Word pending(w.rbegin(), w.rend());
  out.reserve(w.size());
  states.reserve(w.size());
  while (!pending.empty()) {
    const Symbol c = pending.back();
    pending.pop_back();
    const LeadIndex::State s = index_.next(states.empty() ? LeadIndex::kRoot : states.back(), c);
    const LeadIndex::PatternId m = index_.match(s);
    if (m == LeadIndex::kNoPattern) {
      out.push_back(c);
      states.push_back(s);
      continue;
    }
    // The match ends at c; drop the rest of the occurrence from the output.
    const Rule& r = rules_[m];
    const std::size_t keep = out.size() + 1 - r.lhs.size();
    out.resize(keep);
    states.resize(keep);
    pending.insert(pending.end(), r.rhs.rbegin(), r.rhs.rend());
  }
  return out;
}

Basis RewriteSystem::to_basis() const {
  std::vector<Poly> elements;
  elements.reserve(rules_.size());
  for (const Rule& r : rules_) elements.push_back(to_poly(r));
  return Basis(alphabet_, std::move(elements));
}

Word nf_word(std::span<const Symbol> w, const RewriteSystem& system) { return system.reduce(w); }

Word nf_word(std::span<const Symbol> w, const Basis& basis) {
  return RewriteSystem::from_basis(basis).reduce(w);
}

}  // namespace gsb
