#include "gsb/completion.hpp"

#include <algorithm>
#include <optional>
#include <map>

#include "gsb/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsb {

std::vector<CompositionCandidate> compositions(const Poly& f, const Poly& g, const Alphabet& alphabet,
                                               std::size_t left, std::size_t right) {
  if (!f.is_monic() || !g.is_monic()) throw Error("compositions: arguments must be monic");
  const auto& rank = alphabet.ranks();
  std::vector<CompositionCandidate> out;
  const Word& lf = f.leading_word();
  const Word& lg = g.leading_word();
  const std::span<const Symbol> sf(lf), sg(lg);

  // f̄ = u·o and ḡ = o·v with u, v nonempty.
  const std::size_t max_k = std::min(lf.size(), lg.size());
  for (std::size_t k = 1; k < max_k; ++k) {
    if (!std::equal(lf.end() - static_cast<std::ptrdiff_t>(k), lf.end(), lg.begin())) continue;
    Word a(lf.begin(), lf.end() - static_cast<std::ptrdiff_t>(k));
    Word b(lg.begin() + static_cast<std::ptrdiff_t>(k), lg.end());
    Poly value = subtract(multiply({}, f, b), multiply(a, g, {}), rank);
    out.push_back(CompositionCandidate{CompositionKind::Intersection, left, right, concat(lf, b),
                                       std::move(a), std::move(b), std::move(value)});
  }
  for (std::size_t pos : occurrences(lf, lg)) {
    if (pos == 0 && lg.size() == lf.size() && f == g) continue;
    Word a(sf.begin(), sf.begin() + static_cast<std::ptrdiff_t>(pos));
    Word b(sf.begin() + static_cast<std::ptrdiff_t>(pos + lg.size()), sf.end());
    Poly value = subtract(f, multiply(a, g, b), rank);
    out.push_back(CompositionCandidate{CompositionKind::Inclusion, left, right, lf, std::move(a),
                                       std::move(b), std::move(value)});
  }
  return out;
}

GsCheckReport is_gs_basis(const Basis& basis) {
  GsCheckReport report;
  const auto& e = basis.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      ++report.pairs;
      for (auto& c : compositions(e[i], e[j], basis.alphabet(), i, j)) {
        ++report.candidates;
        Poly nf = normal_form(c.value, basis);
        if (!nf.is_zero()) report.witnesses.push_back(GsWitness{std::move(c), std::move(nf)});
      }
    }
  }
  report.is_gs = report.witnesses.empty();
  return report;
}

GsCheckReport is_gs_basis(const RewriteSystem& system, const ExecOptions& exec) {
  const auto& rules = system.rules();
  const auto& alphabet = system.alphabet();
  const auto n = static_cast<std::ptrdiff_t>(rules.size());
  std::vector<std::vector<GsWitness>> found(rules.size());
  std::vector<std::size_t> counts(rules.size(), 0);

  auto check = [&](std::size_t f) {
    Word x, y;
    for_each_overlap(rules, f, system.index(), 0, [&](const Overlap& o) {
      ++counts[f];
      overlap_sides(rules, o, x, y);
      Word nx = system.reduce(x);
      Word ny = system.reduce(y);
      if (nx == ny) return;
      CompositionCandidate c;
      c.kind = o.inclusion ? CompositionKind::Inclusion : CompositionKind::Intersection;
      c.left = o.f;
      c.right = o.g;
      c.overlap_word = overlap_word(rules, o);
      const auto& lf = rules[o.f].lhs;
      c.a.assign(lf.begin(), lf.begin() + static_cast<std::ptrdiff_t>(o.cut));
      if (o.inclusion) {
        c.b.assign(lf.begin() + static_cast<std::ptrdiff_t>(o.cut + rules[o.g].lhs.size()), lf.end());
      } else {
        const auto& lg = rules[o.g].lhs;
        c.b.assign(lg.begin() + static_cast<std::ptrdiff_t>(lf.size() - o.cut), lg.end());
      }
      c.value = poly_normalize({Term{1, x}, Term{-1, y}}, alphabet);
      Poly nf = poly_normalize({Term{1, nx}, Term{-1, ny}}, alphabet);
      found[f].push_back(GsWitness{std::move(c), std::move(nf)});
    });
  };

  if (exec.parallel) {
#ifdef _OPENMP
    const int team = exec.threads > 0 ? exec.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
#endif
    for (std::ptrdiff_t f = 0; f < n; ++f) check(static_cast<std::size_t>(f));
  } else {
    for (std::ptrdiff_t f = 0; f < n; ++f) check(static_cast<std::size_t>(f));
  }

  GsCheckReport report;
  report.pairs = rules.size() * rules.size();
  for (std::size_t f = 0; f < rules.size(); ++f) {
    report.candidates += counts[f];
    std::move(found[f].begin(), found[f].end(), std::back_inserter(report.witnesses));
  }
  report.is_gs = report.witnesses.empty();
  return report;
}

RewriteSystem interreduce(const RewriteSystem& system) {
  const auto& rank = system.alphabet().ranks();
  std::vector<Rule> rules = system.rules();
  std::sort(rules.begin(), rules.end(), [&](const Rule& x, const Rule& y) { return rule_less(x, y, rank); });
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());

  std::vector<Word> lhs;
  lhs.reserve(rules.size());
  for (const Rule& r : rules) lhs.push_back(r.lhs);
  const LeadIndex index(lhs, system.alphabet().size());

  std::vector<Rule> kept;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    bool redundant = false;
    index.for_each_match(rules[i].lhs, [&](std::size_t, LeadIndex::PatternId p) {
      if (p == i) return;
      // Same leading word: the first (smallest tail) copy survives.
      if (lhs[p] != lhs[i] || p < i) redundant = true;
    });
    if (!redundant) kept.push_back(rules[i]);
  }

  const RewriteSystem lead_only(system.alphabet(), kept);
  for (Rule& r : kept) r.rhs = lead_only.reduce(r.rhs);
  return RewriteSystem(system.alphabet(), std::move(kept));
}

namespace {

bool poly_less(const Poly& p, const Poly& q, const std::vector<std::size_t>& rank) {
  const auto& a = p.terms();
  const auto& b = q.terms();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const auto c = deglex(a[i].word, b[i].word, rank);
    if (c != 0) return c < 0;
    if (a[i].coeff != b[i].coeff) return a[i].coeff < b[i].coeff;
  }
  return a.size() < b.size();
}

}  // namespace

Basis interreduce(const Basis& basis) {
  const auto& rank = basis.alphabet().ranks();
  std::vector<Poly> elems = basis.elements();
  std::sort(elems.begin(), elems.end(), [&](const Poly& p, const Poly& q) { return poly_less(p, q, rank); });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  std::vector<Poly> kept;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < elems.size() && !redundant; ++j) {
      if (j == i) continue;
      const Word& li = elems[i].leading_word();
      const Word& lj = elems[j].leading_word();
      if (lj == li) {
        redundant = j < i;
      } else if (has_factor(li, lj)) {
        redundant = true;
      }
    }
    if (!redundant) kept.push_back(elems[i]);
  }

  const Basis lead_only(basis.alphabet(), kept);
  for (Poly& p : kept) {
    std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
    Poly tail = normal_form(Poly::from_sorted(std::move(rest)), lead_only);
    std::vector<Term> terms{p.leading_term()};
    terms.insert(terms.end(), tail.terms().begin(), tail.terms().end());
    p = Poly::from_sorted(std::move(terms));
  }
  return Basis(basis.alphabet(), std::move(kept));
}

namespace {

template <class T>
struct Pending {
  T item;
  bool fresh;
};

const Word& lead_of(const Rule& r) { return r.lhs; }
const Word& lead_of(const Poly& p) { return p.leading_word(); }

// Marks entries whose leading word contains another leading word; among
// equal leading words the first entry survives.
template <class T>
std::vector<bool> collapsed(const std::vector<Pending<T>>& pool, std::size_t alphabet_size) {
  std::vector<Word> leads;
  leads.reserve(pool.size());
  for (const auto& e : pool) leads.push_back(lead_of(e.item));
  const LeadIndex index(leads, alphabet_size);
  std::vector<bool> out(pool.size(), false);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    index.for_each_match(leads[i], [&](std::size_t, LeadIndex::PatternId p) {
      if (p == i) return;
      if (leads[p] != leads[i] || p < i) out[i] = true;
    });
  }
  return out;
}

template <class T, class Less, class Fold, class Tidy>
void settle_pool(std::vector<T>& items, std::size_t& first_new, std::size_t alphabet_size, Less less,
                 Fold fold, Tidy tidy) {
  std::vector<Pending<T>> pool;
  pool.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) pool.push_back({std::move(items[i]), i >= first_new});
  for (;;) {
    // Old copies sort first so a duplicate keeps its processed status.
    std::stable_sort(pool.begin(), pool.end(), [&](const Pending<T>& x, const Pending<T>& y) {
      if (less(x.item, y.item)) return true;
      if (less(y.item, x.item)) return false;
      return !x.fresh && y.fresh;
    });
    pool.erase(std::unique(pool.begin(), pool.end(),
                           [](const Pending<T>& x, const Pending<T>& y) { return x.item == y.item; }),
               pool.end());
    const std::vector<bool> gone = collapsed(pool, alphabet_size);
    if (std::none_of(gone.begin(), gone.end(), [](bool b) { return b; })) break;
    std::vector<Pending<T>> kept;
    std::vector<T> retired;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (gone[i]) {
        retired.push_back(std::move(pool[i].item));
      } else {
        kept.push_back(std::move(pool[i]));
      }
    }
    std::vector<T> survivors;
    survivors.reserve(kept.size());
    for (const auto& e : kept) survivors.push_back(e.item);
    for (T& t : fold(survivors, retired)) kept.push_back({std::move(t), true});
    pool = std::move(kept);
  }

  std::vector<T> all;
  all.reserve(pool.size());
  for (const auto& e : pool) all.push_back(e.item);
  tidy(all);
  items.clear();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!pool[i].fresh) items.push_back(std::move(all[i]));
  }
  first_new = items.size();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i].fresh) items.push_back(std::move(all[i]));
  }
}

}  // namespace

void settle(const Alphabet& alphabet, std::vector<Rule>& rules, std::size_t& first_new) {
  const auto& rank = alphabet.ranks();
  auto less = [&](const Rule& x, const Rule& y) { return rule_less(x, y, rank); };
  auto fold = [&](const std::vector<Rule>& survivors, const std::vector<Rule>& retired) {
    const RewriteSystem system(alphabet, survivors);
    std::vector<Rule> out;
    for (const Rule& r : retired) {
      Word x = system.reduce(r.lhs);
      Word y = system.reduce(r.rhs);
      if (x == y) continue;
      out.push_back(deglex(x, y, rank) > 0 ? Rule{std::move(x), std::move(y)} : Rule{std::move(y), std::move(x)});
    }
    return out;
  };
  auto tidy = [&](std::vector<Rule>& all) {
    const RewriteSystem system(alphabet, all);
    for (Rule& r : all) r.rhs = system.reduce(r.rhs);
  };
  settle_pool(rules, first_new, alphabet.size(), less, fold, tidy);
}

void settle(const Alphabet& alphabet, std::vector<Poly>& elems, std::size_t& first_new) {
  const auto& rank = alphabet.ranks();
  auto less = [&](const Poly& p, const Poly& q) { return poly_less(p, q, rank); };
  auto fold = [&](const std::vector<Poly>& survivors, const std::vector<Poly>& retired) {
    const Basis basis(alphabet, survivors);
    std::vector<Poly> out;
    for (const Poly& p : retired) {
      Poly nf = normal_form(p, basis);
      if (!nf.is_zero()) out.push_back(make_monic(nf));
    }
    return out;
  };
  auto tidy = [&](std::vector<Poly>& all) {
    const Basis basis(alphabet, all);
    for (Poly& p : all) {
      std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
      Poly tail = normal_form(Poly::from_sorted(std::move(rest)), basis);
      std::vector<Term> terms{p.leading_term()};
      terms.insert(terms.end(), tail.terms().begin(), tail.terms().end());
      p = Poly::from_sorted(std::move(terms));
    }
  };
  settle_pool(elems, first_new, alphabet.size(), less, fold, tidy);
}

namespace {

// Merges this round's results with the deferred ones, re-reduced modulo the
// current system, and returns those within `window` of the smallest lhs
// degree. The rest stay deferred.
std::vector<Rule> admit(const RewriteSystem& system, std::vector<Rule> fresh, std::vector<Rule>& pending,
                        std::size_t window) {
  const auto& rank = system.alphabet().ranks();
  for (Rule& r : pending) {
    Word x = system.reduce(r.lhs);
    Word y = system.reduce(r.rhs);
    if (x == y) continue;
    fresh.push_back(deglex(x, y, rank) > 0 ? Rule{std::move(x), std::move(y)} : Rule{std::move(y), std::move(x)});
  }
  pending.clear();
  std::sort(fresh.begin(), fresh.end(), [&](const Rule& x, const Rule& y) { return rule_less(x, y, rank); });
  fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
  if (fresh.empty() || window == kNoWindow) return fresh;
  // Sorted by deg-lex, so the first rule has the smallest lhs degree.
  const std::size_t limit = fresh.front().lhs.size() + window;
  auto cut = std::find_if(fresh.begin(), fresh.end(), [&](const Rule& r) { return r.lhs.size() > limit; });
  pending.assign(std::make_move_iterator(cut), std::make_move_iterator(fresh.end()));
  fresh.erase(cut, fresh.end());
  return fresh;
}

}  // namespace

CompletionReport complete_rules(const Alphabet& alphabet, CompletionState state,
                                const CompletionLimits& limits, const CompletionOptions& options) {
  CompletionReport report;
  std::vector<Rule> rules = std::move(state.rules);
  std::size_t first_new = state.first_new;
  std::size_t round = state.round;
  bool truncated = false;
  for (const Rule& r : rules) report.max_degree_reached = std::max(report.max_degree_reached, r.lhs.size());

  std::vector<Rule> pending = std::move(state.pending);
  // Rules of the last round that covered all pairs and found nothing.
  std::optional<std::vector<Rule>> clean;
  auto sorted = [&](std::vector<Rule> v) {
    std::sort(v.begin(), v.end(), [&](const Rule& x, const Rule& y) { return rule_less(x, y, alphabet.ranks()); });
    return v;
  };

  for (;;) {
    // Saturate: pairs touching the newest rules only.
    while (first_new < rules.size() || !pending.empty()) {
      if (limits.max_rounds && round >= limits.max_rounds) {
        truncated = true;
        report.truncation_reason = "max_rounds";
        break;
      }
      RewriteSystem system(alphabet, rules);
      RoundResult res = evaluate_round(system, first_new, limits.max_degree, options.exec);
      ++round;
      report.pairs += res.pairs;
      report.candidates += res.candidates;
      if (res.over_degree) {
        truncated = true;
        report.truncation_reason = "max_degree";
      }
      std::vector<Rule> admitted = admit(system, std::move(res.rules), pending, options.degree_window);
      if (first_new == 0 && admitted.empty() && pending.empty() && !res.over_degree) {
        clean = sorted(rules);
      } else {
        clean.reset();
      }
      for (const Rule& r : admitted) report.max_degree_reached = std::max(report.max_degree_reached, r.lhs.size());
      first_new = rules.size();
      if (options.keep_added) {
        for (const Rule& r : admitted) report.added.push_back(to_poly(r));
      }
      rules.insert(rules.end(), std::make_move_iterator(admitted.begin()),
                   std::make_move_iterator(admitted.end()));
      if (options.settle_rounds) settle(alphabet, rules, first_new);
      if (options.on_round) options.on_round(CompletionState{rules, first_new, round, pending});
      if (rules.size() > limits.max_elements) {
        truncated = true;
        report.truncation_reason = "max_elements";
        break;
      }
    }
    RewriteSystem reduced = interreduce(RewriteSystem(alphabet, rules));
    if (truncated) {
      report.basis = reduced.to_basis();
      report.status = CompletionStatus::Truncated;
      break;
    }
    if (clean && sorted(reduced.rules()) == *clean) {
      report.basis = reduced.to_basis();
      report.status = CompletionStatus::Complete;
      break;
    }
    // Closing check on the reduced system over all pairs.
    ++round;
    RoundResult res = evaluate_round(reduced, 0, limits.max_degree, options.exec);
    report.pairs += res.pairs;
    report.candidates += res.candidates;
    if (res.rules.empty() && res.over_degree == 0) {
      report.basis = reduced.to_basis();
      report.status = CompletionStatus::Complete;
      break;
    }
    if (res.over_degree) {
      report.basis = reduced.to_basis();
      report.status = CompletionStatus::Truncated;
      report.truncation_reason = "max_degree";
      break;
    }
    rules = reduced.rules();
    first_new = rules.size();
    for (const Rule& r : res.rules) {
      if (options.keep_added) report.added.push_back(to_poly(r));
      rules.push_back(r);
    }
  }
  report.rounds = round;
  return report;
}

CompletionReport shirshov_complete_poly(const std::vector<Poly>& initial, const Alphabet& alphabet,
                                        const CompletionLimits& limits, bool settle_rounds) {
  const auto& rank = alphabet.ranks();
  CompletionReport report;
  std::vector<Poly> elems;
  for (const Poly& p : initial) {
    if (p.is_zero()) throw Error("shirshov_complete: zero initial element");
    elems.push_back(make_monic(p));
    report.max_degree_reached = std::max(report.max_degree_reached, p.degree());
  }
  std::size_t first_new = 0;
  std::size_t round = 0;
  bool truncated = false;

  auto collect = [&](const std::vector<Poly>& current, std::size_t from, std::vector<Poly>& out) {
    const Basis basis(alphabet, current);
    bool over = false;
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = 0; j < current.size(); ++j) {
        if (i < from && j < from) continue;
        ++report.pairs;
        for (auto& c : compositions(current[i], current[j], alphabet, i, j)) {
          ++report.candidates;
          Poly nf = normal_form(c.value, basis);
          if (nf.is_zero()) continue;
          nf = make_monic(nf);
          if (nf.degree() > limits.max_degree) {
            over = true;
            continue;
          }
          out.push_back(std::move(nf));
        }
      }
    }
    std::sort(out.begin(), out.end(), [&](const Poly& p, const Poly& q) { return poly_less(p, q, rank); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return over;
  };

  for (;;) {
    while (first_new < elems.size()) {
      if (limits.max_rounds && round >= limits.max_rounds) {
        truncated = true;
        report.truncation_reason = "max_rounds";
        break;
      }
      std::vector<Poly> fresh;
      if (collect(elems, first_new, fresh)) {
        truncated = true;
        report.truncation_reason = "max_degree";
      }
      ++round;
      first_new = elems.size();
      for (Poly& p : fresh) {
        report.max_degree_reached = std::max(report.max_degree_reached, p.degree());
        report.added.push_back(p);
        elems.push_back(std::move(p));
      }
      if (settle_rounds) settle(alphabet, elems, first_new);
      if (elems.size() > limits.max_elements) {
        truncated = true;
        report.truncation_reason = "max_elements";
        break;
      }
    }
    Basis reduced = interreduce(Basis(alphabet, elems));
    if (truncated) {
      report.basis = std::move(reduced);
      report.status = CompletionStatus::Truncated;
      break;
    }
    ++round;
    std::vector<Poly> fresh;
    const bool over = collect(reduced.elements(), 0, fresh);
    if (fresh.empty() && !over) {
      report.basis = std::move(reduced);
      report.status = CompletionStatus::Complete;
      break;
    }
    if (over) {
      report.basis = std::move(reduced);
      report.status = CompletionStatus::Truncated;
      report.truncation_reason = "max_degree";
      break;
    }
    elems = reduced.elements();
    first_new = elems.size();
    for (Poly& p : fresh) {
      report.added.push_back(p);
      elems.push_back(std::move(p));
    }
  }
  report.rounds = round;
  return report;
}

CompletionReport shirshov_complete(const std::vector<Poly>& initial, const Alphabet& alphabet,
                                   const CompletionLimits& limits, const CompletionOptions& options) {
  const bool binomial = std::all_of(initial.begin(), initial.end(), [](const Poly& p) {
    return !p.is_zero() && is_binomial(make_monic(p));
  });
  if (!binomial) return shirshov_complete_poly(initial, alphabet, limits, options.settle_rounds);
  CompletionState state;
  for (const Poly& p : initial) state.rules.push_back(as_rule(make_monic(p)));
  return complete_rules(alphabet, std::move(state), limits, options);
}

}  // namespace gsb
