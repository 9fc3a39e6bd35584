#include "gsb/round_kernel.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsb {

void overlap_sides(const std::vector<Rule>& rules, const Overlap& o, Word& first, Word& second) {
  const Rule& f = rules[o.f];
  const Rule& g = rules[o.g];
  const auto a = std::span<const Symbol>(f.lhs).subspan(0, o.cut);
  first.assign(a.begin(), a.end());
  first.insert(first.end(), g.rhs.begin(), g.rhs.end());
  second.assign(f.rhs.begin(), f.rhs.end());
  if (o.inclusion) {
    const auto b = std::span<const Symbol>(f.lhs).subspan(o.cut + g.lhs.size());
    first.insert(first.end(), b.begin(), b.end());
  } else {
    const auto b = std::span<const Symbol>(g.lhs).subspan(f.lhs.size() - o.cut);
    second.insert(second.end(), b.begin(), b.end());
  }
}

Word overlap_word(const std::vector<Rule>& rules, const Overlap& o) {
  const Rule& f = rules[o.f];
  if (o.inclusion) return f.lhs;
  const Rule& g = rules[o.g];
  return concat(std::span<const Symbol>(f.lhs).subspan(0, o.cut), g.lhs);
}

bool rule_less(const Rule& x, const Rule& y, const std::vector<std::size_t>& rank) {
  const auto c = deglex(x.lhs, y.lhs, rank);
  if (c != 0) return c < 0;
  return deglex(x.rhs, y.rhs, rank) < 0;
}

namespace {

struct Partial {
  std::vector<Rule> rules;
  std::size_t pairs = 0;
  std::size_t candidates = 0;
  std::size_t over_degree = 0;
};

void sort_unique(std::vector<Rule>& rules, const std::vector<std::size_t>& rank) {
  std::sort(rules.begin(), rules.end(),
            [&](const Rule& x, const Rule& y) { return rule_less(x, y, rank); });
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
}

LeadIndex fresh_index(const RewriteSystem& system, std::size_t first_new) {
  const auto& rules = system.rules();
  if (first_new == 0) return system.index();
  std::vector<Word> lhs;
  lhs.reserve(rules.size() - first_new);
  for (std::size_t i = first_new; i < rules.size(); ++i) lhs.push_back(rules[i].lhs);
  return LeadIndex(lhs, system.alphabet().size());
}

void process_rule(const RewriteSystem& system, std::size_t f, std::size_t first_new,
                  const LeadIndex& fresh, std::size_t max_degree, Partial& out) {
  const auto& rules = system.rules();
  const auto& rank = system.alphabet().ranks();
  const bool f_is_new = f >= first_new;
  const LeadIndex& partners = f_is_new ? system.index() : fresh;
  const std::size_t offset = f_is_new ? 0 : first_new;
  out.pairs += rules.size() - offset;
  Word x, y;
  for_each_overlap(rules, f, partners, offset, [&](const Overlap& o) {
    ++out.candidates;
    overlap_sides(rules, o, x, y);
    Word nx = system.reduce(x);
    Word ny = system.reduce(y);
    if (nx == ny) return;
    Rule r = deglex(nx, ny, rank) > 0 ? Rule{std::move(nx), std::move(ny)}
                                         : Rule{std::move(ny), std::move(nx)};
    if (r.lhs.size() > max_degree) {
      ++out.over_degree;
      return;
    }
    out.rules.push_back(std::move(r));
  });
  sort_unique(out.rules, rank);
}

RoundResult merge(std::vector<Partial>& parts, const std::vector<std::size_t>& rank) {
  RoundResult result;
  std::size_t total = 0;
  for (const Partial& p : parts) total += p.rules.size();
  result.rules.reserve(total);
  for (Partial& p : parts) {
    result.pairs += p.pairs;
    result.candidates += p.candidates;
    result.over_degree += p.over_degree;
    std::move(p.rules.begin(), p.rules.end(), std::back_inserter(result.rules));
    p.rules = {};
  }
  sort_unique(result.rules, rank);
  for (const Rule& r : result.rules) result.max_lhs_degree = std::max(result.max_lhs_degree, r.lhs.size());
  return result;
}

}  // namespace

RoundResult evaluate_round_serial(const RewriteSystem& system, std::size_t first_new,
                                  std::size_t max_degree) {
  const LeadIndex fresh = fresh_index(system, first_new);
  std::vector<Partial> parts(system.size());
  for (std::size_t f = 0; f < system.size(); ++f) {
    process_rule(system, f, first_new, fresh, max_degree, parts[f]);
  }
  return merge(parts, system.alphabet().ranks());
}

RoundResult evaluate_round_parallel(const RewriteSystem& system, std::size_t first_new,
                                    std::size_t max_degree, int threads) {
  const LeadIndex fresh = fresh_index(system, first_new);
  const auto n = static_cast<std::ptrdiff_t>(system.size());
  std::vector<Partial> parts(system.size());
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
#endif
  for (std::ptrdiff_t f = 0; f < n; ++f) {
    process_rule(system, static_cast<std::size_t>(f), first_new, fresh, max_degree,
                 parts[static_cast<std::size_t>(f)]);
  }
  return merge(parts, system.alphabet().ranks());
}

RoundResult evaluate_round(const RewriteSystem& system, std::size_t first_new, std::size_t max_degree,
                           const ExecOptions& exec) {
  if (exec.parallel) return evaluate_round_parallel(system, first_new, max_degree, exec.threads);
  return evaluate_round_serial(system, first_new, max_degree);
}

}  // namespace gsb
