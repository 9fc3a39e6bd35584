#pragma once

// An independent model of a finite Weyl group: the action of the simple
// reflections on the root system, its order by Schreier-Sims, and checks of
// a rewriting system against it.

#include <cstdint>
#include <vector>

#include "gsb/coxeter.hpp"
#include "gsb/enumeration.hpp"

namespace gsb {

using Perm = std::vector<std::uint32_t>;  // p[x] is the image of x

Perm perm_identity(std::size_t degree);
// (p * q)(x) = p(q(x)).
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);

/// Integer Cartan matrix for a crystallographic Coxeter matrix. For ids
/// i < j with m = 3, 4, 6: c[i][j] = -1 and c[j][i] = -1, -2, -3.
std::vector<std::vector<int>> cartan_matrix(const CoxeterMatrix& m);

struct RootSystem {
  std::size_t rank = 0;
  std::vector<std::vector<int>> roots;     // simple-root coordinates; simple roots first
  std::vector<Perm> reflections;           // reflections[i][r] = index of s_i(root r)

  std::size_t size() const { return roots.size(); }
};

// s_i(a_j) = a_j - c[i][j] a_i, closed breadth first from the simple roots.
// Throws Unsupported for non-crystallographic labels or when the closure
// exceeds `max_roots` (an infinite group).
RootSystem root_system(const CoxeterMatrix& matrix, std::size_t max_roots = 100000);
RootSystem root_system(const DiagramPreset& preset);

// Word w = w0 w1 ... acts as s_{w0} s_{w1} ...; the empty word is the identity.
Perm word_to_perm(std::span<const Symbol> w, const std::vector<Perm>& generators);

// Exact order via a stabilizer chain. Base points are taken in ascending
// point order.
BigInt schreier_sims_order(const std::vector<Perm>& generators);

struct CrossCheckOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::size_t max_length = 40;
  int threads = 0;  // 0 = OpenMP default
};

struct CrossCheckWitness {
  Word u;
  Word v;
  bool same_element;
  bool same_normal_form;
};

struct CrossCheckReport {
  std::size_t samples = 0;
  std::size_t same_element = 0;  // pairs the oracle identifies
  std::vector<CrossCheckWitness> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Seeded random pairs (u, v): half are rewritten copies of u (inserted
/// squares, applied braid relations), half independent. Checks
/// perm(u) == perm(v) iff nf(u) == nf(v). Samples are split into fixed
/// shards with their own derived seeds, so the report does not depend on
/// the thread count.
CrossCheckReport cross_check(const CoxeterMatrix& matrix, const RootSystem& roots, const RewriteSystem& system,
                             const CrossCheckOptions& options = {});

struct ExhaustiveReport {
  std::size_t elements = 0;           // group order from breadth-first search
  std::size_t normal_forms = 0;       // accepted words
  std::size_t distinct_images = 0;    // distinct permutations among them
  std::size_t length_violations = 0;  // |nf(g)| != Cayley distance of g

  bool ok() const {
    return normal_forms == elements && distinct_images == elements && length_violations == 0;
  }
};

/// Breadth-first search of the Cayley graph on the permutation images,
/// compared element by element with the normal forms. Only for small groups.
ExhaustiveReport exhaustive_check(const RootSystem& roots, const RewriteSystem& system,
                                  std::size_t max_elements = 200000);

}  // namespace gsb
