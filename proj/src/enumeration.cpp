#include "gsb/enumeration.hpp"

#include <algorithm>

#include "gsb/completion.hpp"
#include "gsb/error.hpp"

namespace gsb {

AvoidanceAutomaton::AvoidanceAutomaton(std::span<const Word> forbidden, const Alphabet& alphabet)
    : alphabet_(alphabet), sigma_(alphabet.size()) {
  for (const Word& w : forbidden) {
    if (w.empty()) throw Error("forbidden factor list contains the empty word");
    alphabet.check(w);
  }
  const LeadIndex index(forbidden, sigma_);

  // Renumber live states reachable from the root, breadth first.
  std::vector<State> id(index.state_count(), kDead);
  std::vector<LeadIndex::State> order{LeadIndex::kRoot};
  id[LeadIndex::kRoot] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t c = 0; c < sigma_; ++c) {
      const auto t = index.next(order[k], static_cast<Symbol>(c));
      if (index.match(t) != LeadIndex::kNoPattern || id[t] != kDead) continue;
      id[t] = static_cast<State>(order.size());
      order.push_back(t);
    }
  }
  live_ = order.size();
  delta_.assign(live_ * sigma_, kDead);
  for (std::size_t k = 0; k < live_; ++k) {
    for (std::size_t c = 0; c < sigma_; ++c) {
      delta_[k * sigma_ + c] = id[index.next(order[k], static_cast<Symbol>(c))];
    }
  }
}

bool AvoidanceAutomaton::accepts(std::span<const Symbol> w) const {
  State s = start();
  for (Symbol c : w) {
    s = next(s, c);
    if (s == kDead) return false;
  }
  return true;
}

namespace {

// Topological order of the live states (Kahn); empty when a cycle exists.
std::vector<AvoidanceAutomaton::State> topological(const AvoidanceAutomaton& a) {
  using State = AvoidanceAutomaton::State;
  const std::size_t n = a.state_count();
  const std::size_t sigma = a.alphabet().size();
  std::vector<std::size_t> indegree(n, 0);
  for (State s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < sigma; ++c) {
      const State t = a.next(s, static_cast<Symbol>(c));
      if (t != AvoidanceAutomaton::kDead) ++indegree[t];
    }
  }
  std::vector<State> out;
  for (State s = 0; s < n; ++s) {
    if (indegree[s] == 0) out.push_back(s);
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t c = 0; c < sigma; ++c) {
      const State t = a.next(out[k], static_cast<Symbol>(c));
      if (t != AvoidanceAutomaton::kDead && --indegree[t] == 0) out.push_back(t);
    }
  }
  if (out.size() != n) out.clear();
  return out;
}

}  // namespace

bool AvoidanceAutomaton::has_cycle() const { return topological(*this).empty(); }

std::size_t AvoidanceAutomaton::longest_word() const {
  const auto order = topological(*this);
  if (order.empty()) throw Error("longest_word: language is infinite");
  std::vector<std::size_t> dist(live_, 0);
  std::size_t best = 0;
  // Every live state is reachable from the start, which comes first.
  for (State s : order) {
    best = std::max(best, dist[s]);
    for (std::size_t c = 0; c < sigma_; ++c) {
      const State t = next(s, static_cast<Symbol>(c));
      if (t != kDead) dist[t] = std::max(dist[t], dist[s] + 1);
    }
  }
  return best;
}

AvoidanceAutomaton build_avoidance(const Basis& basis) {
  std::vector<Word> leads;
  leads.reserve(basis.size());
  for (const Poly& p : basis.elements()) leads.push_back(p.leading_word());
  return AvoidanceAutomaton(leads, basis.alphabet());
}

bool GrowthSeries::palindromic() const {
  return std::equal(counts.begin(), counts.end(), counts.rbegin());
}

GrowthSeries count_by_length(const AvoidanceAutomaton& automaton, std::optional<std::size_t> max_length,
                             std::size_t horizon) {
  GrowthSeries series;
  series.finite = !automaton.has_cycle();
  std::size_t last = horizon;
  if (max_length) {
    last = *max_length;
  } else if (series.finite) {
    last = automaton.longest_word();
  }

  const std::size_t n = automaton.state_count();
  const std::size_t sigma = automaton.alphabet().size();
  std::vector<BigInt> cur(n, 0), nxt(n, 0);
  cur[automaton.start()] = 1;
  for (std::size_t len = 0; len <= last; ++len) {
    BigInt sum = 0;
    for (const BigInt& v : cur) sum += v;
    series.counts.push_back(sum);
    series.total += sum;
    if (len == last) break;
    std::fill(nxt.begin(), nxt.end(), BigInt(0));
    for (std::size_t s = 0; s < n; ++s) {
      if (cur[s] == 0) continue;
      for (std::size_t c = 0; c < sigma; ++c) {
        const auto t = automaton.next(static_cast<AvoidanceAutomaton::State>(s), static_cast<Symbol>(c));
        if (t != AvoidanceAutomaton::kDead) nxt[t] += cur[s];
      }
    }
    std::swap(cur, nxt);
  }
  return series;
}

std::optional<BigInt> group_order(const Basis& basis, bool force) {
  if (!force) {
    const bool closed = basis.all_binomial() ? is_gs_basis(RewriteSystem::from_basis(basis)).is_gs
                                             : is_gs_basis(basis).is_gs;
    if (!closed) throw Unverified("basis is not closed under compositions");
  }
  const AvoidanceAutomaton automaton = build_avoidance(basis);
  if (automaton.has_cycle()) return std::nullopt;
  return count_by_length(automaton).total;
}

void enumerate_normal_forms(const AvoidanceAutomaton& automaton, std::size_t up_to_length,
                            const std::function<bool(const Word&)>& visit) {
  std::vector<Symbol> letters;
  for (const Generator& g : automaton.alphabet().generators()) letters.push_back(g.id);
  Word w;
  bool stop = false;
  // Exact-length passes in increasing length give deg-lex order.
  for (std::size_t len = 0; len <= up_to_length && !stop; ++len) {
    std::function<void(AvoidanceAutomaton::State)> rec = [&](AvoidanceAutomaton::State s) {
      if (stop) return;
      if (w.size() == len) {
        if (!visit(w)) stop = true;
        return;
      }
      for (Symbol c : letters) {
        const auto t = automaton.next(s, c);
        if (t == AvoidanceAutomaton::kDead) continue;
        w.push_back(c);
        rec(t);
        w.pop_back();
        if (stop) return;
      }
    };
    rec(automaton.start());
  }
}

}  // namespace gsb
