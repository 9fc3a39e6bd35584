#include "gsb/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <unordered_map>

#include "gsb/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsb {

Perm perm_identity(std::size_t degree) {
  Perm p(degree);
  for (std::size_t x = 0; x < degree; ++x) p[x] = static_cast<std::uint32_t>(x);
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<std::uint32_t>(x);
  return r;
}

std::vector<std::vector<int>> cartan_matrix(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    c[i][i] = 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      switch (m(i, j)) {
        case 2: break;
        case 3: c[i][j] = -1; c[j][i] = -1; break;
        case 4: c[i][j] = -1; c[j][i] = -2; break;
        case 6: c[i][j] = -1; c[j][i] = -3; break;
        default:
          throw Unsupported("no integer Cartan matrix for m = " +
                            (m(i, j) == kInfinity ? std::string("inf") : std::to_string(m(i, j))));
      }
    }
  }
  return c;
}

RootSystem root_system(const CoxeterMatrix& matrix, std::size_t max_roots) {
  const auto c = cartan_matrix(matrix);
  const std::size_t n = matrix.size();
  RootSystem rs;
  rs.rank = n;
  std::map<std::vector<int>, std::uint32_t> index;
  auto add = [&](std::vector<int> v) {
    auto [it, fresh] = index.emplace(v, static_cast<std::uint32_t>(rs.roots.size()));
    if (fresh) {
      if (rs.roots.size() >= max_roots) throw Unsupported("root closure exceeds the cap; group is infinite");
      rs.roots.push_back(std::move(v));
    }
    return it->second;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    add(std::move(e));
  }
  std::vector<std::vector<std::uint32_t>> image(n);
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      // s_i(v) = v - <v, a_i^vee> a_i with <a_j, a_i^vee> = c[i][j].
      std::vector<int> v = rs.roots[k];
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += c[i][j] * v[j];
      v[i] -= pairing;
      const std::uint32_t t = add(std::move(v));
      image[i].push_back(t);
    }
  }
  rs.reflections.assign(image.begin(), image.end());
  return rs;
}

RootSystem root_system(const DiagramPreset& preset) { return root_system(preset.matrix); }

Perm word_to_perm(std::span<const Symbol> w, const std::vector<Perm>& generators) {
  const std::size_t degree = generators.empty() ? 0 : generators.front().size();
  Perm r = perm_identity(degree);
  for (Symbol c : w) {
    if (c >= generators.size()) throw AlphabetMismatch("word_to_perm: symbol outside the generator set");
    r = perm_compose(r, generators[c]);
  }
  return r;
}

namespace {

struct Level {
  std::uint32_t base = 0;
  std::vector<Perm> gens;                          // strong generators fixing earlier base points
  std::vector<std::uint32_t> orbit;
  std::unordered_map<std::uint32_t, Perm> transversal;  // u_b(base) = b

  void rebuild(std::size_t degree) {
    orbit.assign(1, base);
    transversal.clear();
    transversal.emplace(base, perm_identity(degree));
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const Perm u = transversal.at(orbit[k]);
      for (const Perm& s : gens) {
        const std::uint32_t y = s[orbit[k]];
        if (transversal.count(y)) continue;
        transversal.emplace(y, perm_compose(s, u));
        orbit.push_back(y);
      }
    }
  }
};

bool is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] != x) return false;
  }
  return true;
}

std::uint32_t first_moved(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] != x) return static_cast<std::uint32_t>(x);
  }
  return static_cast<std::uint32_t>(p.size());
}

// Sifts g through levels [from, end); returns the residue and the level at
// which it stopped (levels.size() when it passed them all).
std::pair<Perm, std::size_t> strip(Perm g, const std::vector<Level>& levels, std::size_t from) {
  for (std::size_t l = from; l < levels.size(); ++l) {
    const std::uint32_t b = g[levels[l].base];
    auto it = levels[l].transversal.find(b);
    if (it == levels[l].transversal.end()) return {std::move(g), l};
    g = perm_compose(perm_inverse(it->second), g);
  }
  return {std::move(g), levels.size()};
}

}  // namespace

BigInt schreier_sims_order(const std::vector<Perm>& generators) {
  if (generators.empty()) return 1;
  const std::size_t degree = generators.front().size();
  std::vector<Perm> gens;
  for (const Perm& g : generators) {
    if (!is_identity(g)) gens.push_back(g);
  }
  if (gens.empty()) return 1;

  std::vector<Level> levels;
  auto fixes_prefix = [&](const Perm& g, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l) {
      if (g[levels[l].base] != levels[l].base) return false;
    }
    return true;
  };
  // Initial base: a moved point for every generator fixing the current base.
  for (const Perm& g : gens) {
    if (fixes_prefix(g, levels.size())) levels.push_back(Level{first_moved(g), {}, {}, {}});
  }
  auto add_generator = [&](const Perm& h, std::size_t from) {
    if (fixes_prefix(h, levels.size())) levels.push_back(Level{first_moved(h), {}, {}, {}});
    for (std::size_t l = from; l < levels.size(); ++l) {
      if (fixes_prefix(h, l)) levels[l].gens.push_back(h);
    }
  };
  for (const Perm& g : gens) {
    for (std::size_t l = 0; l < levels.size(); ++l) {
      if (fixes_prefix(g, l)) levels[l].gens.push_back(g);
    }
  }
  for (Level& lv : levels) lv.rebuild(degree);

  // Deterministic Schreier-Sims: test every Schreier generator from the
  // bottom level up; on failure add the residue and restart at its level.
  std::size_t i = levels.size();
  while (i > 0) {
    const std::size_t l = i - 1;
    bool restarted = false;
    for (std::size_t k = 0; k < levels[l].orbit.size() && !restarted; ++k) {
      const std::uint32_t b = levels[l].orbit[k];
      const Perm ub = levels[l].transversal.at(b);
      for (std::size_t s = 0; s < levels[l].gens.size(); ++s) {
        const Perm& g = levels[l].gens[s];
        const Perm& usb = levels[l].transversal.at(g[b]);
        Perm h = perm_compose(perm_inverse(usb), perm_compose(g, ub));
        auto [residue, stop] = strip(std::move(h), levels, l + 1);
        if (stop == levels.size() && is_identity(residue)) continue;
        add_generator(residue, l + 1);
        const std::size_t top = std::min(stop + 1, levels.size());
        for (std::size_t r = l + 1; r < levels.size(); ++r) levels[r].rebuild(degree);
        i = top;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  BigInt order = 1;
  for (const Level& lv : levels) order *= lv.orbit.size();
  return order;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::size_t kShards = 16;

struct Relation {
  Word lhs;
  Word rhs;
};

// Applies a few random rewrites, each valid in the group, to w.
Word perturb(Word w, const std::vector<Relation>& relations, std::size_t sigma, std::mt19937_64& rng) {
  const int steps = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < steps; ++k) {
    if (rng() % 2 == 0 || w.empty()) {
      const auto pos = static_cast<std::ptrdiff_t>(rng() % (w.size() + 1));
      const auto c = static_cast<Symbol>(rng() % sigma);
      w.insert(w.begin() + pos, {c, c});
      continue;
    }
    // Replace one occurrence of a relation side by the other side.
    const Relation& r = relations[rng() % relations.size()];
    const bool forward = rng() % 2 == 0;
    const Word& from = forward ? r.lhs : r.rhs;
    const Word& to = forward ? r.rhs : r.lhs;
    auto hits = occurrences(w, from);
    if (hits.empty()) continue;
    const auto pos = static_cast<std::ptrdiff_t>(hits[rng() % hits.size()]);
    w.erase(w.begin() + pos, w.begin() + pos + static_cast<std::ptrdiff_t>(from.size()));
    w.insert(w.begin() + pos, to.begin(), to.end());
  }
  return w;
}

}  // namespace

CrossCheckReport cross_check(const CoxeterMatrix& matrix, const RootSystem& roots, const RewriteSystem& system,
                             const CrossCheckOptions& options) {
  const std::size_t sigma = system.alphabet().size();
  if (sigma != roots.rank || matrix.size() != sigma) throw AlphabetMismatch("cross_check: rank mismatch");
  std::vector<Relation> relations;
  for (std::size_t a = 0; a < sigma; ++a) {
    for (std::size_t b = a + 1; b < sigma; ++b) {
      const int m = matrix(a, b);
      if (m == kInfinity) continue;
      relations.push_back({alternating(static_cast<Symbol>(a), static_cast<Symbol>(b), m),
                           alternating(static_cast<Symbol>(b), static_cast<Symbol>(a), m)});
    }
  }

  struct Shard {
    std::size_t same = 0;
    std::vector<CrossCheckWitness> bad;
  };
  std::vector<Shard> shards(kShards);
  const auto n = static_cast<std::ptrdiff_t>(kShards);
#ifdef _OPENMP
  const int team = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
#endif
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto shard = static_cast<std::size_t>(s);
    std::mt19937_64 rng(splitmix64(options.seed ^ splitmix64(shard)));
    const std::size_t count = options.samples / kShards + (shard < options.samples % kShards ? 1 : 0);
    for (std::size_t k = 0; k < count; ++k) {
      auto random_word = [&] {
        Word w(rng() % (options.max_length + 1));
        for (Symbol& c : w) c = static_cast<Symbol>(rng() % sigma);
        return w;
      };
      Word u = random_word();
      Word v = k % 2 == 0 ? perturb(u, relations, sigma, rng) : random_word();
      const bool same_element = word_to_perm(u, roots.reflections) == word_to_perm(v, roots.reflections);
      const bool same_nf = system.reduce(u) == system.reduce(v);
      if (same_element) ++shards[shard].same;
      if (same_element != same_nf) {
        shards[shard].bad.push_back(CrossCheckWitness{std::move(u), std::move(v), same_element, same_nf});
      }
    }
  }

  CrossCheckReport report;
  report.samples = options.samples;
  for (Shard& s : shards) {
    report.same_element += s.same;
    std::move(s.bad.begin(), s.bad.end(), std::back_inserter(report.mismatches));
  }
  return report;
}

ExhaustiveReport exhaustive_check(const RootSystem& roots, const RewriteSystem& system,
                                  std::size_t max_elements) {
  ExhaustiveReport report;
  const std::size_t sigma = roots.rank;
  std::map<Perm, std::size_t> distance;
  std::deque<std::pair<Perm, Word>> queue;
  const Perm id = perm_identity(roots.size());
  distance.emplace(id, 0);
  queue.emplace_back(id, Word{});
  while (!queue.empty()) {
    auto [p, w] = std::move(queue.front());
    queue.pop_front();
    if (system.reduce(w).size() != w.size()) ++report.length_violations;
    for (std::size_t c = 0; c < sigma; ++c) {
      Perm q = perm_compose(p, roots.reflections[c]);
      if (distance.count(q)) continue;
      if (distance.size() >= max_elements) throw Unsupported("exhaustive_check: group too large");
      distance.emplace(q, w.size() + 1);
      Word x = w;
      x.push_back(static_cast<Symbol>(c));
      queue.emplace_back(std::move(q), std::move(x));
    }
  }
  report.elements = distance.size();

  std::vector<Word> leads;
  for (const Rule& r : system.rules()) leads.push_back(r.lhs);
  const AvoidanceAutomaton automaton(leads, system.alphabet());
  std::map<Perm, std::size_t> images;
  const std::size_t horizon = automaton.has_cycle() ? report.elements : automaton.longest_word();
  enumerate_normal_forms(automaton, horizon, [&](const Word& w) {
    ++report.normal_forms;
    const Perm p = word_to_perm(w, roots.reflections);
    ++images[p];
    // A normal form longer than its element's Cayley distance is not minimal.
    auto it = distance.find(p);
    if (it == distance.end() || it->second != w.size()) ++report.length_violations;
    return report.normal_forms <= report.elements;
  });
  report.distinct_images = images.size();
  return report;
}

}  // namespace gsb
