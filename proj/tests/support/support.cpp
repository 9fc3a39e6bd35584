#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <map>
#include <memory>
#include <mutex>

#include "gsb/error.hpp"
#include "gsb/io.hpp"

namespace gsb::testing {

const Completed& completed(const std::string& type) {
  static std::map<std::string, std::unique_ptr<Completed>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[type];
  if (!slot) {
    auto c = std::make_unique<Completed>();
    c->preset = builtin_preset(type);
    const Alphabet a = c->preset.alphabet();
    CompletionLimits limits;
    if (type == "E8") limits.max_degree = 128;
    const auto t0 = std::chrono::steady_clock::now();
    c->report = shirshov_complete(presentation_from_matrix(c->preset.matrix, a), a, limits);
    c->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c->system = RewriteSystem::from_basis(c->report.basis);
    slot = std::move(c);
  }
  return *slot;
}

Word random_word(std::mt19937_64& rng, std::size_t sigma, std::size_t max_length) {
  Word w(rng() % (max_length + 1));
  for (Symbol& c : w) c = static_cast<Symbol>(rng() % sigma);
  return w;
}

Word nf_random_strategy(const Word& input, const RewriteSystem& system, std::mt19937_64& rng) {
  Word w = input;
  struct Hit {
    std::size_t end;
    LeadIndex::PatternId rule;
  };
  for (;;) {
    std::vector<Hit> hits;
    system.index().for_each_match(w, [&](std::size_t end, LeadIndex::PatternId p) { hits.push_back({end, p}); });
    if (hits.empty()) return w;
    const Hit& h = hits[rng() % hits.size()];
    const Rule& r = system.rules()[h.rule];
    const auto start = static_cast<std::ptrdiff_t>(h.end - r.lhs.size());
    w.erase(w.begin() + start, w.begin() + start + static_cast<std::ptrdiff_t>(r.lhs.size()));
    w.insert(w.begin() + start, r.rhs.begin(), r.rhs.end());
  }
}

namespace {

void record(PropertyResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = what;
}

// Reference comparison written independently of deglex(): map letters to
// ranks, compare (length, rank sequence) as tuples.
int reference_compare(const Word& u, const Word& v, const std::vector<std::size_t>& rank) {
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  std::vector<std::size_t> ru, rv;
  for (Symbol c : u) ru.push_back(rank[c]);
  for (Symbol c : v) rv.push_back(rank[c]);
  if (ru == rv) return 0;
  return ru < rv ? -1 : 1;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; }

}  // namespace

PropertyResult monomial_order_axioms(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"monomial order axioms"};
  std::mt19937_64 rng(seed);
  const std::vector<std::string> names{"a", "b", "c", "d"};
  for (std::size_t k = 0; k < cases; ++k) {
    std::vector<Symbol> order{0, 1, 2, 3};
    std::shuffle(order.begin(), order.end(), rng);
    const Alphabet alpha(names, order);
    const auto& rank = alpha.ranks();
    const Word u = random_word(rng, 4, 6), v = random_word(rng, 4, 6), w = random_word(rng, 4, 6);
    const Word a = random_word(rng, 4, 3), b = random_word(rng, 4, 3);
    const int uv = sign(compare_deglex(u, v, alpha));
    const int vw = sign(compare_deglex(v, w, alpha));
    const int uw = sign(compare_deglex(u, w, alpha));
    bool ok = uv == reference_compare(u, v, rank);
    ok = ok && sign(compare_deglex(v, u, alpha)) == -uv;
    ok = ok && (uv == 0) == (u == v);
    if (uv < 0 && vw < 0) ok = ok && uw < 0;
    // Compatible with two-sided multiplication.
    ok = ok && sign(compare_deglex(concat(a, u, b), concat(a, v, b), alpha)) == uv;
    // The empty word is the least element.
    ok = ok && (u.empty() || sign(compare_deglex(Word{}, u, alpha)) < 0);
    record(r, ok, "u=" + format_word(u, alpha) + " v=" + format_word(v, alpha) + " w=" + format_word(w, alpha));
  }
  return r;
}

PropertyResult strategy_independence(const std::string& type, std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"normal-form strategy independence " + type};
  const Completed& c = completed(type);
  const Alphabet& a = c.system.alphabet();
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    const Word w = random_word(rng, a.size(), 30);
    const Word by_end = c.system.reduce(w);
    const Word by_random = nf_random_strategy(w, c.system, rng);
    const Poly by_poly = normal_form(Poly::from_sorted({Term{1, w}}), c.report.basis);
    const bool ok = by_end == by_random && by_poly.size() == 1 && by_poly.leading_coeff() == 1 &&
                    by_poly.leading_word() == by_end;
    record(r, ok, "w=" + format_word(w, a));
  }
  return r;
}

PropertyResult word_times_reverse(const std::string& type, std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"nf(w reverse(w)) = 1 " + type};
  const Completed& c = completed(type);
  const Alphabet& a = c.system.alphabet();
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    const Word w = random_word(rng, a.size(), 40);
    record(r, c.system.reduce(concat(w, reversed(w))).empty(), "w=" + format_word(w, a));
  }
  return r;
}

PropertyResult congruence(const std::string& type, std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"nf(uv) = nf(nf(u) nf(v)) " + type};
  const Completed& c = completed(type);
  const Alphabet& a = c.system.alphabet();
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    const Word u = random_word(rng, a.size(), 30), v = random_word(rng, a.size(), 30);
    const bool ok = c.system.reduce(concat(u, v)) == c.system.reduce(concat(c.system.reduce(u), c.system.reduce(v)));
    record(r, ok, "u=" + format_word(u, a) + " v=" + format_word(v, a));
  }
  return r;
}

PropertyResult oracle_equivalence(const std::string& type, std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"oracle equality <=> normal-form equality " + type};
  const Completed& c = completed(type);
  const RootSystem roots = root_system(c.preset);
  CrossCheckOptions opt;
  opt.samples = cases;
  opt.seed = seed;
  const CrossCheckReport report = cross_check(c.preset.matrix, roots, c.system, opt);
  r.cases = report.samples;
  r.failures = report.mismatches.size();
  if (!report.ok()) {
    r.first_failure = "u=" + format_word(report.mismatches[0].u, c.system.alphabet()) +
                      " v=" + format_word(report.mismatches[0].v, c.system.alphabet());
  }
  // Both outcomes must be exercised for the check to mean anything.
  if (report.same_element == 0 || report.same_element == report.samples) {
    ++r.failures;
    r.first_failure = "degenerate sample: every pair agreed or every pair differed";
  }
  return r;
}

RandomCoxeter random_coxeter(std::mt19937_64& rng, bool allow_infinite) {
  const std::size_t n = 2 + rng() % 3;
  CoxeterMatrix m(n);
  static constexpr int kValues[] = {2, 2, 3, 3, 4, 6};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (allow_infinite && rng() % 8 == 0) {
        m.set(i, j, kInfinity);
      } else {
        m.set(i, j, kValues[rng() % std::size(kValues)]);
      }
    }
  }
  std::vector<std::string> names;
  std::vector<Symbol> order;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back("s" + std::to_string(k + 1));
    order.push_back(static_cast<Symbol>(k));
  }
  std::shuffle(order.begin(), order.end(), rng);
  return {std::move(m), Alphabet(names, order)};
}

namespace {

std::string describe_matrix(const CoxeterMatrix& m) {
  std::string s;
  for (const auto& row : m.rows()) {
    for (int v : row) s += std::to_string(v) + " ";
    s += "/ ";
  }
  return s;
}

}  // namespace

PropertyResult palindromic_growth(const std::vector<std::string>& types, std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"palindromic growth series"};
  for (const std::string& t : types) {
    const GrowthSeries s = count_by_length(build_avoidance(completed(t).report.basis));
    record(r, s.finite && s.palindromic(), t);
  }
  std::mt19937_64 rng(seed);
  while (r.cases < cases) {
    const RandomCoxeter g = random_coxeter(rng, false);
    RootSystem roots;
    try {
      roots = root_system(g.matrix, 2000);
    } catch (const Unsupported&) {
      continue;  // infinite group
    }
    const CompletionReport c = shirshov_complete(presentation_from_matrix(g.matrix, g.alphabet), g.alphabet);
    bool ok = c.status == CompletionStatus::Complete;
    if (ok) {
      const GrowthSeries s = count_by_length(build_avoidance(c.basis));
      ok = s.finite && s.palindromic() && s.max_length() * 2 == roots.size() &&
           s.total == schreier_sims_order(roots.reflections);
    }
    record(r, ok, describe_matrix(g.matrix));
  }
  return r;
}

PropertyResult thread_determinism(const std::vector<std::string>& types, const std::vector<int>& threads,
                                  std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"byte-identical basis files across thread counts"};
  auto compare = [&](const std::vector<Poly>& initial, const Alphabet& a, const CompletionLimits& limits,
                     const std::string& what) {
    std::string reference;
    bool ok = true;
    for (std::size_t k = 0; k < threads.size(); ++k) {
      CompletionOptions opt;
      opt.exec = ExecOptions{threads[k] != 1, threads[k]};
      const CompletionReport c = shirshov_complete(initial, a, limits, opt);
      const std::string text = write_basis(c.basis) + (c.status == CompletionStatus::Complete ? "complete" : "truncated");
      if (k == 0) {
        reference = text;
      } else {
        ok = ok && text == reference;
      }
    }
    record(r, ok, what);
  };
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    const RandomCoxeter g = random_coxeter(rng, true);
    CompletionLimits limits;
    limits.max_degree = 12;
    limits.max_elements = 2000;
    compare(presentation_from_matrix(g.matrix, g.alphabet), g.alphabet, limits, describe_matrix(g.matrix));
  }
  for (const std::string& t : types) {
    const DiagramPreset p = builtin_preset(t);
    const Alphabet a = p.alphabet();
    CompletionLimits limits;
    if (t == "E8") limits.max_degree = 128;
    compare(presentation_from_matrix(p.matrix, a), a, limits, t);
  }
  return r;
}

}  // namespace gsb::testing
